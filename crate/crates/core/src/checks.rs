//! Exact checkers for the defining axioms and the derived identities.
//!
//! Identities quantified over all of `H` are checked on basis elements;
//! every failure reports the first offending basis element and `lhs - rhs`.

use crate::report::{CheckReport, Witness};
use crate::structure::QhsaStructure;
use crate::tensor::{compare, TensorElement};

/// First basis index where `f` produces a witness.
fn per_basis(h: &QhsaStructure, f: impl Fn(usize, &TensorElement) -> Option<Witness>) -> Option<Witness> {
    (0..h.dim()).find_map(|i| f(i, &h.basis(i)))
}

fn at(i: usize) -> String {
    format!("a = e{i}")
}

fn first(ws: impl IntoIterator<Item = Option<Witness>>) -> Option<Witness> {
    ws.into_iter().flatten().next()
}

fn err_witness(e: impl std::fmt::Display) -> Witness {
    Witness {
        location: e.to_string(),
        difference: Vec::new(),
    }
}

/// `(1 (x) Delta) Delta` and `(Delta (x) 1) Delta` of an arity-1 element.
pub fn right_sweedler(h: &QhsaStructure, a: &TensorElement) -> TensorElement {
    h.coproduct(a).apply_map(1, h.delta()).expect("arity 2")
}

pub fn left_sweedler(h: &QhsaStructure, a: &TensorElement) -> TensorElement {
    h.coproduct(a).apply_map(0, h.delta()).expect("arity 2")
}

/// Quasi-coassociativity, the pentagon, the counit axioms and the counit
/// identities of `Phi` on its outer legs.
pub fn check_quasi_bialgebra(h: &QhsaStructure) -> CheckReport {
    let mut report = CheckReport::new();
    let phi = h.phi();
    let phi_inv = match h.phi_inverse() {
        Ok(p) => p.clone(),
        Err(e) => {
            for id in ["qb.quasi_coassociative", "qb.pentagon", "qb.counit", "qb.phi_counit", "qb.phi_outer_counit"] {
                report.fail(id, err_witness(&e));
            }
            return report;
        }
    };
    let d = h.delta();
    let eps = h.epsilon();

    report.record(
        "qb.quasi_coassociative",
        per_basis(h, |i, a| {
            let lhs = right_sweedler(h, a);
            let rhs = &(&phi_inv * &left_sweedler(h, a)) * phi;
            compare(&lhs, &rhs, at(i))
        }),
    );

    let lhs = &phi.apply_map(0, d).unwrap() * &phi.apply_map(2, d).unwrap();
    let rhs = &(&phi.embed(&[0, 1, 2], 4).unwrap() * &phi.apply_map(1, d).unwrap())
        * &phi.embed(&[1, 2, 3], 4).unwrap();
    report.record("qb.pentagon", compare(&lhs, &rhs, "pentagon"));

    report.record(
        "qb.counit",
        per_basis(h, |i, a| {
            let da = h.coproduct(a);
            first([
                compare(&da.apply_map(0, eps).unwrap(), a, format!("(eps (x) 1) at e{i}")),
                compare(&da.apply_map(1, eps).unwrap(), a, format!("(1 (x) eps) at e{i}")),
            ])
        }),
    );

    report.record(
        "qb.phi_counit",
        compare(&phi.apply_map(1, eps).unwrap(), &h.unit(2), "(1 (x) eps (x) 1) phi"),
    );

    report.record(
        "qb.phi_outer_counit",
        first([
            compare(&phi.apply_map(0, eps).unwrap(), &h.unit(2), "(eps (x) 1 (x) 1) phi"),
            compare(&phi.apply_map(2, eps).unwrap(), &h.unit(2), "(1 (x) 1 (x) eps) phi"),
        ]),
    );
    report
}

/// `sum S(X) alpha Y beta S(Z)` over an arity-3 element.
pub fn s_alpha_beta_s(h: &QhsaStructure, x: &TensorElement) -> TensorElement {
    x.apply_map(2, &h.beta_s())
        .and_then(|t| t.apply_map(1, &h.alpha_left()))
        .and_then(|t| t.apply_map(0, h.antipode()))
        .and_then(|t| t.contract(0))
        .and_then(|t| t.contract(0))
        .expect("arity 3")
}

/// `sum X beta S(Y) alpha Z` over an arity-3 element.
pub fn beta_s_alpha(h: &QhsaStructure, x: &TensorElement) -> TensorElement {
    x.apply_map(2, &h.alpha_left())
        .and_then(|t| t.apply_map(1, &h.beta_s()))
        .and_then(|t| t.contract(0))
        .and_then(|t| t.contract(0))
        .expect("arity 3")
}

/// The antipode axioms for `alpha` and `beta`, the two normalizations against
/// `Phi` and `Phi^{-1}`, and the counit identities of `alpha`, `beta`, `S`.
pub fn check_antipode_axioms(h: &QhsaStructure) -> CheckReport {
    let mut report = CheckReport::new();
    report.record(
        "antipode.alpha",
        per_basis(h, |i, a| {
            let lhs = h.m_alpha_s(&h.coproduct(a));
            compare(&lhs, &h.alpha().scale(&h.eps(a)), at(i))
        }),
    );
    report.record(
        "antipode.beta",
        per_basis(h, |i, a| {
            let lhs = h.m_beta_s(&h.coproduct(a));
            compare(&lhs, &h.beta().scale(&h.eps(a)), at(i))
        }),
    );
    report.record("antipode.phi", compare(&s_alpha_beta_s(h, h.phi()), &h.unit(1), "sum S(X) alpha Y beta S(Z)"));
    match h.phi_inverse() {
        Ok(inv) => report.record("antipode.phi_inverse", compare(&beta_s_alpha(h, inv), &h.unit(1), "sum X beta S(Y) alpha Z")),
        Err(e) => report.fail("antipode.phi_inverse", err_witness(e)),
    }
    let alg = h.algebra();
    let scalar = |s| TensorElement::scalar(alg, s);
    let ea = h.eps(h.alpha());
    let eb = h.eps(h.beta());
    report.record(
        "antipode.eps_alpha_beta",
        first([
            compare(&scalar(&ea * &eb), &scalar(h.one()), "eps(alpha) eps(beta)"),
            compare(&scalar(h.eps(&(h.alpha() * h.beta()))), &scalar(h.one()), "eps(alpha beta)"),
        ]),
    );
    report.record(
        "antipode.eps_s",
        per_basis(h, |i, a| compare(&scalar(h.eps(&h.s(a))), &scalar(h.eps(a)), at(i))),
    );
    report
}

const QT_IDS: [&str; 4] = ["qt.intertwining", "qt.coproduct_left", "qt.coproduct_right", "qt.r_counit"];

/// `Phi_sigma` and `Phi^{-1}_sigma` for 1-based subscripts such as `[2, 3, 1]`.
pub fn phi_sub(x: &TensorElement, subscript: [usize; 3]) -> TensorElement {
    let sigma: Vec<usize> = subscript.iter().map(|s| s - 1).collect();
    x.permute(&sigma).expect("valid permutation")
}

/// `R_{ij}` in arity 3 for 1-based legs.
pub fn r_sub(r: &TensorElement, i: usize, j: usize) -> TensorElement {
    if i < j {
        r.embed(&[i - 1, j - 1], 3).expect("valid legs")
    } else {
        r.transpose().embed(&[j - 1, i - 1], 3).expect("valid legs")
    }
}

/// `Delta^T R = R Delta`, the two coproduct identities of `R`, and its counit identities.
pub fn check_quasi_triangular(h: &QhsaStructure) -> CheckReport {
    let mut report = CheckReport::new();
    let Some(r) = h.r() else {
        for id in QT_IDS {
            report.skip(id, "no R-matrix");
        }
        return report;
    };
    let phi_inv = match h.phi_inverse() {
        Ok(p) => p,
        Err(e) => {
            for id in QT_IDS {
                report.fail(id, err_witness(&e));
            }
            return report;
        }
    };
    let phi = h.phi();
    report.record(
        "qt.intertwining",
        per_basis(h, |i, a| {
            let da = h.coproduct(a);
            compare(&(&da.transpose() * r), &(r * &da), at(i))
        }),
    );
    let rhs_ii = product(&[
        phi_sub(phi_inv, [2, 3, 1]),
        r_sub(r, 1, 3),
        phi_sub(phi, [1, 3, 2]),
        r_sub(r, 2, 3),
        phi_inv.clone(),
    ]);
    report.record("qt.coproduct_left", compare(&r.apply_map(0, h.delta()).unwrap(), &rhs_ii, "(Delta (x) 1) R"));
    let rhs_iii = product(&[
        phi_sub(phi, [3, 1, 2]),
        r_sub(r, 1, 3),
        phi_sub(phi_inv, [2, 1, 3]),
        r_sub(r, 1, 2),
        phi.clone(),
    ]);
    report.record("qt.coproduct_right", compare(&r.apply_map(1, h.delta()).unwrap(), &rhs_iii, "(1 (x) Delta) R"));
    report.record(
        "qt.r_counit",
        first([
            compare(&r.apply_map(0, h.epsilon()).unwrap(), &h.unit(1), "(eps (x) 1) R"),
            compare(&r.apply_map(1, h.epsilon()).unwrap(), &h.unit(1), "(1 (x) eps) R"),
        ]),
    );
    report
}

/// Left-to-right product of a nonempty list.
pub fn product(factors: &[TensorElement]) -> TensorElement {
    let mut it = factors.iter();
    let mut acc = it.next().expect("nonempty product").clone();
    for f in it {
        acc = &acc * f;
    }
    acc
}

/// `R^{-1} = R^T`.
pub fn check_triangular(h: &QhsaStructure) -> CheckReport {
    let mut report = CheckReport::new();
    match h.r() {
        None => report.skip("triangular", "no R-matrix"),
        Some(r) => match r.invert() {
            Ok(inv) => report.record("triangular", compare(&inv, &r.transpose(), "R^-1 vs R^T")),
            Err(e) => report.fail("triangular", err_witness(e)),
        },
    }
    report
}

/// The graded quasi-quantum Yang-Baxter equation.
pub fn check_qqybe(h: &QhsaStructure) -> CheckReport {
    let mut report = CheckReport::new();
    let Some(r) = h.r() else {
        report.skip("qybe", "no R-matrix");
        return report;
    };
    let phi_inv = match h.phi_inverse() {
        Ok(p) => p,
        Err(e) => {
            report.fail("qybe", err_witness(e));
            return report;
        }
    };
    let phi = h.phi();
    let lhs = product(&[
        r_sub(r, 1, 2),
        phi_sub(phi_inv, [2, 3, 1]),
        r_sub(r, 1, 3),
        phi_sub(phi, [1, 3, 2]),
        r_sub(r, 2, 3),
        phi_inv.clone(),
    ]);
    let rhs = product(&[
        phi_sub(phi_inv, [3, 2, 1]),
        r_sub(r, 2, 3),
        phi_sub(phi, [3, 1, 2]),
        r_sub(r, 1, 3),
        phi_sub(phi_inv, [2, 1, 3]),
        r_sub(r, 1, 2),
    ]);
    report.record("qybe", compare(&lhs, &rhs, "QQYBE"));
    report
}

/// The four arity-4 consequences of the pentagon axiom.
pub fn check_pentagon_consequences(h: &QhsaStructure) -> CheckReport {
    let mut report = CheckReport::new();
    let ids = ["pentagon.phi_left", "pentagon.phi_right", "pentagon.phi_inverse_left", "pentagon.phi_inverse_right"];
    let phi_inv = match h.phi_inverse() {
        Ok(p) => p,
        Err(e) => {
            for id in ids {
                report.fail(id, err_witness(&e));
            }
            return report;
        }
    };
    let phi = h.phi();
    let d = h.delta();
    let left = |x: &TensorElement| x.embed(&[0, 1, 2], 4).unwrap();
    let right = |x: &TensorElement| x.embed(&[1, 2, 3], 4).unwrap();
    let at = |x: &TensorElement, leg: usize| x.apply_map(leg, d).unwrap();

    let cases = [
        (
            left(phi),
            product(&[at(phi, 0), at(phi, 2), right(phi_inv), at(phi_inv, 1)]),
        ),
        (
            right(phi),
            product(&[at(phi_inv, 1), left(phi_inv), at(phi, 0), at(phi, 2)]),
        ),
        (
            left(phi_inv),
            product(&[at(phi, 1), right(phi), at(phi_inv, 2), at(phi_inv, 0)]),
        ),
        (
            right(phi_inv),
            product(&[at(phi_inv, 2), at(phi_inv, 0), left(phi), at(phi, 1)]),
        ),
    ];
    for (id, (lhs, rhs)) in ids.into_iter().zip(cases) {
        report.record(id, compare(&lhs, &rhs, "arity 4"));
    }
    report
}

fn sign(p: u8, x: TensorElement) -> TensorElement {
    if p % 2 == 1 {
        -&x
    } else {
        x
    }
}

/// The four Sweedler-form identities for `Phi` and `Phi^{-1}`, each side summed word by word with the sign factors
/// written out explicitly rather than through the tensor product rule.
pub fn check_sweedler_identities(h: &QhsaStructure) -> CheckReport {
    let mut report = CheckReport::new();
    let ids = ["sweedler.phi_left", "sweedler.phi_right", "sweedler.phi_inverse_left", "sweedler.phi_inverse_right"];
    let phi_inv = match h.phi_inverse() {
        Ok(p) => p.clone(),
        Err(e) => {
            for id in ids {
                report.fail(id, err_witness(&e));
            }
            return report;
        }
    };
    let alg = h.algebra();
    let p = |i: usize| alg.parity(i);
    let e = |i: usize| h.basis(i);
    let zero = TensorElement::zero(alg, 2);
    let alpha = h.alpha();
    let beta = h.beta();
    let s = |x: &TensorElement| h.s(x);

    let lhs_rhs = |a_idx: usize, which: usize| -> (TensorElement, TensorElement) {
        let a = e(a_idx);
        let pa = p(a_idx);
        let mut lhs = zero.clone();
        let mut rhs = zero.clone();
        let (outer, sweedler) = match which {
            0 => (h.phi(), left_sweedler(h, &a)),
            1 => (h.phi(), right_sweedler(h, &a)),
            2 => (&phi_inv, left_sweedler(h, &a)),
            _ => (&phi_inv, right_sweedler(h, &a)),
        };
        for (w, c) in outer.terms() {
            let (x, y, z) = (e(w[0]), e(w[1]), e(w[2]));
            let (px, pz) = (p(w[0]), p(w[2]));
            let l = match which {
                0 => sign(pa * px, (&x * &a).tensor(&(&(&y * beta) * &s(&z)))),
                1 => sign(pa * pz, (&(&s(&x) * alpha) * &y).tensor(&(&a * &z))),
                2 => (&a * &x).tensor(&(&(&s(&y) * alpha) * &z)),
                _ => (&(&x * beta) * &s(&y)).tensor(&(&z * &a)),
            };
            lhs = &lhs + &l.scale(c);
            for (sw, sc) in sweedler.terms() {
                let (a1, a2, a3) = (e(sw[0]), e(sw[1]), e(sw[2]));
                let (p1, p2, p3) = (p(sw[0]), p(sw[1]), p(sw[2]));
                let r = match which {
                    0 => sign(
                        px * p2,
                        (&a1 * &x).tensor(&product(&[a2, y.clone(), beta.clone(), s(&z), s(&a3)])),
                    ),
                    1 => sign(
                        pz * p2,
                        product(&[s(&a1), s(&x), alpha.clone(), y.clone(), a2]).tensor(&(&z * &a3)),
                    ),
                    2 => sign(
                        px * (p1 + p2),
                        (&x * &a1).tensor(&product(&[s(&a2), s(&y), alpha.clone(), z.clone(), a3])),
                    ),
                    _ => sign(
                        pz * (p2 + p3),
                        product(&[a1, x.clone(), beta.clone(), s(&y), s(&a2)]).tensor(&(&a3 * &z)),
                    ),
                };
                rhs = &rhs + &r.scale(&(c * sc));
            }
        }
        (lhs, rhs)
    };

    for (which, id) in ids.into_iter().enumerate() {
        report.record(
            id,
            (0..h.dim()).find_map(|i| {
                let (l, r) = lhs_rhs(i, which);
                compare(&l, &r, at(i))
            }),
        );
    }
    report
}

/// `m_alpha_S(Delta(a) eta) = eps(a) m_alpha_S(eta)` and its `beta` analogue,
/// for every basis word `eta` of `H (x) H` and basis element `a`.
pub fn check_eta_identities(h: &QhsaStructure) -> CheckReport {
    let mut report = CheckReport::new();
    let d = h.dim();
    let words: Vec<TensorElement> = (0..d)
        .flat_map(|i| (0..d).map(move |j| (i, j)))
        .map(|(i, j)| TensorElement::word(h.algebra(), vec![i, j], h.one()))
        .collect();
    let find = |f: &dyn Fn(&TensorElement, &TensorElement, &TensorElement) -> (TensorElement, TensorElement)| {
        words.iter().find_map(|eta| {
            per_basis(h, |i, a| {
                let (l, r) = f(eta, a, &h.coproduct(a));
                let loc = format!("eta = {eta}, a = e{i}");
                compare(&l, &r, loc)
            })
        })
    };
    report.record(
        "eta.alpha",
        find(&|eta, a, da| (h.m_alpha_s(&(da * eta)), h.m_alpha_s(eta).scale(&h.eps(a)))),
    );
    report.record(
        "eta.beta",
        find(&|eta, a, da| (h.m_beta_s(&(eta * da)), h.m_beta_s(eta).scale(&h.eps(a)))),
    );
    report
}
