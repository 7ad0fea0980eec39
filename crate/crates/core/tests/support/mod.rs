//! Leg-by-leg expansion of the first pentagon consequence, independent of the
//! engine's permutation signs.

use qhsa_core::{QhsaStructure, Scalar, TensorElement};

type Word = Vec<usize>;

fn words(x: &TensorElement) -> Vec<(Word, Scalar)> {
    x.terms().iter().map(|(w, c)| (w.clone(), c.clone())).collect()
}

/// Product of basis elements as a sparse combination.
fn mul_basis(h: &QhsaStructure, lhs: &[(usize, Scalar)], j: usize) -> Vec<(usize, Scalar)> {
    let mut out: Vec<(usize, Scalar)> = Vec::new();
    for (i, c) in lhs {
        for (k, x) in h.algebra().product(*i, j) {
            let v = c * x;
            match out.iter_mut().find(|(kk, _)| kk == k) {
                Some(slot) => slot.1 = &slot.1 + &v,
                None => out.push((*k, v)),
            }
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

/// The four factors of the first pentagon consequence multiplied leg by leg
/// with the sign exponent written out for each word:
/// legs `X1 Xm Xr`, `X2 Ym Xs Yr1`, `Y Zm1 Ys Yr2`, `Z Zm2 Zs Zr`.
pub fn pentagon_by_hand(h: &QhsaStructure) -> (TensorElement, usize) {
    let p = |i: usize| h.algebra().parity(i) as u32;
    let phi = h.phi();
    let inv = h.phi_inverse().unwrap();
    let nu = words(&phi.apply_map(0, h.delta()).unwrap());
    let mu = words(&phi.apply_map(2, h.delta()).unwrap());
    let sigma = words(inv);
    let rho = words(&inv.apply_map(1, h.delta()).unwrap());
    let one = h.one();
    let mut acc = TensorElement::zero(h.algebra(), 4);
    let mut odd_terms = 0;
    for (n, cn) in &nu {
        for (m, cm) in &mu {
            let legs_nm: Vec<Vec<(usize, Scalar)>> = (0..4)
                .map(|k| mul_basis(h, &[(n[k], one.clone())], m[k]))
                .collect();
            if legs_nm.iter().any(Vec::is_empty) {
                continue;
            }
            for (s, cs) in &sigma {
                let legs_s: Vec<Vec<(usize, Scalar)>> = vec![
                    legs_nm[0].clone(),
                    mul_basis(h, &legs_nm[1], s[0]),
                    mul_basis(h, &legs_nm[2], s[1]),
                    mul_basis(h, &legs_nm[3], s[2]),
                ];
                if legs_s.iter().any(Vec::is_empty) {
                    continue;
                }
                for (r, cr) in &rho {
                    let legs: Vec<Vec<(usize, Scalar)>> = (0..4).map(|k| mul_basis(h, &legs_s[k], r[k])).collect();
                    if legs.iter().any(Vec::is_empty) {
                        continue;
                    }
                    let (xn1, xn2, zn) = (p(n[0]), p(n[1]), p(n[3]));
                    let xn = xn1 + xn2;
                    let (xm, zm1, zm2) = (p(m[0]), p(m[2]), p(m[3]));
                    let zm = zm1 + zm2;
                    let (xs, ys, zs) = (p(s[0]), p(s[1]), p(s[2]));
                    let (xr, yr1, yr2) = (p(r[0]), p(r[1]), p(r[2]));
                    let exponent = xr * (xn2 + xm + xn)
                        + (xs + yr1) * (xn + zm)
                        + zm * xn
                        + xm * xn2
                        + zn * zm1
                        + yr1 * xs
                        + yr2 * zs
                        + (ys + yr2) * (zn + zm2);
                    let mut coeff = &(&(cn * cm) * cs) * cr;
                    if exponent % 2 == 1 {
                        coeff = -coeff;
                        odd_terms += 1;
                    }
                    for (a, ca) in &legs[0] {
                        for (b, cb) in &legs[1] {
                            for (c, cc) in &legs[2] {
                                for (d, cd) in &legs[3] {
                                    let v = &(&(&(&coeff * ca) * cb) * cc) * cd;
                                    acc = &acc + &TensorElement::word(h.algebra(), vec![*a, *b, *c, *d], v);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    (acc, odd_terms)
}
