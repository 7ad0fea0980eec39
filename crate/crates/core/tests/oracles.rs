//! Independent evaluations compared against the engine, with the resulting
//! values frozen as regression constants.

mod support;

use qhsa_core::drinfeld::DrinfeldData;
use qhsa_core::fixtures;
use qhsa_core::twist::{check_cocycle, prime_structure, twist_structure, Twistor};
use qhsa_core::{FieldSpec, QhsaStructure, Scalar, TensorElement};

fn q(n: i64) -> Scalar {
    Scalar::from_i64(FieldSpec::Rational, n)
}

fn diag(h: &QhsaStructure, coeffs: [i64; 4]) -> TensorElement {
    let terms = [(0, 0), (0, 1), (1, 0), (1, 1)]
        .into_iter()
        .zip(coeffs)
        .map(|((i, j), c)| (vec![i, j], Scalar::from_i64(h.algebra().field(), c)));
    TensorElement::from_terms(h.algebra(), 2, terms).unwrap()
}

// Functions on Z2: e_g are the delta functions, Phi = sum omega(a,b,c) e_a e_b e_c.
fn omega(a: usize, b: usize, c: usize) -> i64 {
    if a & b & c == 1 {
        -1
    } else {
        1
    }
}

fn alpha(g: usize) -> i64 {
    [1, -1][g]
}

fn delta(a: usize, b: usize) -> i64 {
    (a == b) as i64
}

/// `gamma(i, j)` by the quadruple sum over the words `A B C D` of
/// `(Phi^{-1} (x) 1)(Delta (x) 1 (x) 1)Phi`, mapped to `S(B) alpha C (x) S(A) alpha D`.
#[allow(clippy::needless_range_loop)]
fn gamma_oracle() -> [[i64; 2]; 2] {
    let mut g = [[0; 2]; 2];
    for a in 0..2 {
        for b in 0..2 {
            for c in 0..2 {
                for d in 0..2 {
                    // omega is +-1, so it is its own inverse
                    let coeff = omega(a, b, c) * omega(a ^ b, c, d);
                    for i in 0..2 {
                        for j in 0..2 {
                            g[i][j] += coeff * delta(i, b) * delta(b, c) * alpha(c) * delta(j, a) * delta(a, d) * alpha(d);
                        }
                    }
                }
            }
        }
    }
    g
}

/// `F_D(i, j) = sum omega(a,b,c) [(S (x) S)Delta^T(e_a)]_{ij} gamma_{ij} [Delta(e_b S(e_c))]_{ij}`.
fn f_d_oracle(gamma: [[i64; 2]; 2]) -> [[i64; 2]; 2] {
    let mut f = [[0; 2]; 2];
    for a in 0..2 {
        for b in 0..2 {
            for c in 0..2 {
                for i in 0..2 {
                    for j in 0..2 {
                        f[i][j] += omega(a, b, c) * delta(i ^ j, a) * gamma[i][j] * delta(b, c) * delta(i ^ j, b);
                    }
                }
            }
        }
    }
    f
}

fn flat(m: [[i64; 2]; 2]) -> [i64; 4] {
    [m[0][0], m[0][1], m[1][0], m[1][1]]
}

#[test]
fn gamma_and_drinfeld_twist_of_h2() {
    let h2 = fixtures::structure("h2").unwrap();
    let data = DrinfeldData::compute(&h2).unwrap();
    let gamma = gamma_oracle();
    assert_eq!(flat(gamma), [1, -1, -1, -1]);
    assert_eq!(data.gamma, diag(&h2, flat(gamma)));
    let f = f_d_oracle(gamma);
    assert_eq!(flat(f), [1, 1, 1, -1]);
    assert_eq!(data.f_d, diag(&h2, flat(f)));
    assert_eq!(&data.f_d * &data.f_d, h2.unit(2));
    assert_eq!(data.f_d_inverse, data.f_d);
}

#[test]
fn h2r_r_matrix_solves_the_diagonal_recurrences() {
    let field = FieldSpec::Cyclotomic(4);
    let zeta = Scalar::zeta_power(field, 1).unwrap();
    let one = Scalar::one(field);
    let candidates = [one.clone(), -&one, zeta.clone(), -&zeta];
    let sign = |a: usize, b: usize, c: usize| if a & b & c == 1 { -&one } else { one.clone() };
    let solutions: Vec<Scalar> = candidates
        .into_iter()
        .filter(|r11| {
            let r = |a: usize, b: usize| if a & b == 1 { r11.clone() } else { one.clone() };
            (0..8).all(|n| {
                let (a, b, c) = (n & 1, (n >> 1) & 1, n >> 2);
                r(a ^ b, c) == &sign(a, b, c) * &(&r(a, c) * &r(b, c))
                    && r(a, b ^ c) == &sign(a, b, c) * &(&r(a, b) * &r(a, c))
            })
        })
        .collect();
    assert_eq!(solutions, vec![zeta.clone(), -&zeta]);
    let h2r = fixtures::structure("h2r").unwrap();
    let r = h2r.r().unwrap();
    assert_eq!(r.coeff(&[1, 1]), zeta);
    for w in [[0, 0], [0, 1], [1, 0]] {
        assert_eq!(r.coeff(&w), one);
    }
}

#[test]
fn exterior_cocycle_by_hand() {
    let ext = fixtures::structure("ext").unwrap();
    let (f, inv) = fixtures::twistor("f-theta").unwrap().elements(&ext).unwrap();
    let f = Twistor::new(f, inv).unwrap();
    let e = f.element();
    let lhs = &e.embed(&[0, 1], 3).unwrap() * &e.apply_map(0, ext.delta()).unwrap();
    let rhs = &e.embed(&[1, 2], 3).unwrap() * &e.apply_map(1, ext.delta()).unwrap();
    let expected = TensorElement::from_terms(
        ext.algebra(),
        3,
        [[0, 0, 0], [1, 0, 1], [0, 1, 1], [1, 1, 0]].map(|w| (w.to_vec(), q(1))),
    )
    .unwrap();
    assert_eq!(lhs, expected);
    assert_eq!(rhs, expected);
    assert!(check_cocycle(&ext, &f).passed());
}

#[test]
fn h2_twistor_is_a_cocycle_by_hand() {
    // F(g, h) = 1 + [g = h = 1]; both sides of the cocycle identity are
    // F(g, h) F(g + h, k) and F(h, k) F(g, h + k) on e_g (x) e_h (x) e_k.
    let h2 = fixtures::structure("h2").unwrap();
    let big_f = |g: usize, h: usize| 1 + (g & h) as i64;
    let mut terms = Vec::new();
    for n in 0..8usize {
        let (g, h, k) = (n >> 2, (n >> 1) & 1, n & 1);
        assert_eq!(big_f(g, h) * big_f(g ^ h, k), big_f(h, k) * big_f(g, h ^ k));
        terms.push((vec![g, h, k], q(big_f(g, h) * big_f(g ^ h, k))));
    }
    let expected = TensorElement::from_terms(h2.algebra(), 3, terms).unwrap();
    let (f, inv) = fixtures::twistor("f-e11").unwrap().elements(&h2).unwrap();
    let f = Twistor::new(f, inv).unwrap();
    let e = f.element();
    assert_eq!(&e.embed(&[0, 1], 3).unwrap() * &e.apply_map(0, h2.delta()).unwrap(), expected);
    assert!(check_cocycle(&h2, &f).passed());
}

#[test]
fn exterior_algebra_drinfeld_twist_is_trivial() {
    let ext = fixtures::structure("ext").unwrap();
    let data = DrinfeldData::compute(&ext).unwrap();
    assert_eq!(data.f_d, ext.unit(2));
    let prime = prime_structure(&ext).unwrap();
    assert_eq!(prime.delta(), ext.delta());
}


#[test]
fn first_pentagon_consequence_matches_printed_signs() {
    let h2ext = fixtures::structure("h2ext").unwrap();
    let (f, inv) = fixtures::twistor("f-odd").unwrap().elements(&h2ext).unwrap();
    let h = twist_structure(&h2ext, &Twistor::new(f, inv).unwrap());
    let (by_hand, odd_terms) = support::pentagon_by_hand(&h);
    assert!(odd_terms > 0, "the twisted coassociator must exercise Koszul signs");
    let phi_1 = h.phi().embed(&[0, 1, 2], 4).unwrap();
    assert_eq!(by_hand, phi_1);
    // one odd word of Phi (x) 1, spelled out: e3 (x) e3 (x) e2 (x) 1 has coefficient -1
    let word = [3, 3, 2, 0];
    assert_eq!(by_hand.coeff(&word), phi_1.coeff(&word));
    assert_eq!(by_hand.coeff(&word), q(-1));
}
