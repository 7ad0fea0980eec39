//! The elements `gamma`, `gamma_bar`, the Drinfeld twist `F_D` and its
//! inverse, and the identities relating `H` to its primed structure.

use thiserror::Error;

use crate::checks::{check_quasi_triangular, product};
use crate::report::{CheckReport, Status, Witness};
use crate::scalar::Scalar;
use crate::structure::QhsaStructure;
use crate::tensor::{compare, TensorElement, TensorError};
use crate::twist::{prime_structure, twist_structure, twisted_alpha, twisted_beta, twisted_phi, TwistError, Twistor};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DrinfeldError {
    #[error("singular {what}: {source}")]
    Singular {
        what: &'static str,
        source: TensorError,
    },
    #[error(transparent)]
    Twist(#[from] TwistError),
}

fn singular(what: &'static str) -> impl FnOnce(TensorError) -> DrinfeldError {
    move |source| DrinfeldError::Singular { what, source }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DrinfeldData {
    pub gamma: TensorElement,
    pub gamma_bar: TensorElement,
    pub f_d: TensorElement,
    pub f_d_inverse: TensorElement,
    /// `(eps(alpha), eps(beta))`.
    pub normalization: (Scalar, Scalar),
}

/// `(m (x) m)(1 (x) alpha (x) 1 (x) alpha)(S (x) 1 (x) S (x) 1)(1 (x) T (x) 1)(T (x) 1 (x) 1)`.
fn gamma_map(h: &QhsaStructure, x: &TensorElement) -> TensorElement {
    let s = h.antipode();
    let a = h.alpha_left();
    x.swap_adjacent(0)
        .and_then(|t| t.swap_adjacent(1))
        .and_then(|t| t.apply_map(0, s))
        .and_then(|t| t.apply_map(2, s))
        .and_then(|t| t.apply_map(1, &a))
        .and_then(|t| t.apply_map(3, &a))
        .and_then(|t| t.contract(2))
        .and_then(|t| t.contract(0))
        .expect("arity 4")
}

/// `(m (x) m)(1 (x) beta S (x) 1 (x) beta S)(1 (x) T (x) 1)(1 (x) 1 (x) T)`.
fn gamma_bar_map(h: &QhsaStructure, x: &TensorElement) -> TensorElement {
    let bs = h.beta_s();
    x.swap_adjacent(2)
        .and_then(|t| t.swap_adjacent(1))
        .and_then(|t| t.apply_map(1, &bs))
        .and_then(|t| t.apply_map(3, &bs))
        .and_then(|t| t.contract(2))
        .and_then(|t| t.contract(0))
        .expect("arity 4")
}

/// Both printed expressions for `gamma`: from `(Phi^{-1} (x) 1)(Delta (x) 1 (x) 1)Phi`
/// and from `(1 (x) Phi)(1 (x) 1 (x) Delta)Phi^{-1}`.
pub fn gamma_expressions(h: &QhsaStructure) -> Result<(TensorElement, TensorElement), DrinfeldError> {
    let phi = h.phi();
    let inv = h.phi_inverse().map_err(singular("coassociator"))?;
    let d = h.delta();
    let first = &inv.embed(&[0, 1, 2], 4).unwrap() * &phi.apply_map(0, d).unwrap();
    let second = &phi.embed(&[1, 2, 3], 4).unwrap() * &inv.apply_map(2, d).unwrap();
    Ok((gamma_map(h, &first), gamma_map(h, &second)))
}

/// Both printed expressions for `gamma_bar`: from `(Delta (x) 1 (x) 1)Phi^{-1} (Phi (x) 1)`
/// and from `(1 (x) 1 (x) Delta)Phi (1 (x) Phi^{-1})`.
pub fn gamma_bar_expressions(h: &QhsaStructure) -> Result<(TensorElement, TensorElement), DrinfeldError> {
    let phi = h.phi();
    let inv = h.phi_inverse().map_err(singular("coassociator"))?;
    let d = h.delta();
    let first = &inv.apply_map(0, d).unwrap() * &phi.embed(&[0, 1, 2], 4).unwrap();
    let second = &phi.apply_map(2, d).unwrap() * &inv.embed(&[1, 2, 3], 4).unwrap();
    Ok((gamma_bar_map(h, &first), gamma_bar_map(h, &second)))
}

/// `sum_{x, y, z} c f(e_x, e_y, e_z)` over the words of an arity-3 element.
fn sum_over(h: &QhsaStructure, x: &TensorElement, f: impl Fn(&TensorElement, &TensorElement, &TensorElement) -> TensorElement) -> TensorElement {
    let mut acc = TensorElement::zero(h.algebra(), 2);
    for (w, c) in x.terms() {
        let t = f(&h.basis(w[0]), &h.basis(w[1]), &h.basis(w[2]));
        acc = &acc + &t.scale(c);
    }
    acc
}

impl DrinfeldData {
    /// `gamma`, `gamma_bar` from the first printed expressions, `F_D` and its inverse
    /// summed term by term over the words of `Phi` and `Phi^{-1}`.
    pub fn compute(h: &QhsaStructure) -> Result<Self, DrinfeldError> {
        let (gamma, _) = gamma_expressions(h)?;
        let (gamma_bar, _) = gamma_bar_expressions(h)?;
        let inv = h.phi_inverse().map_err(singular("coassociator"))?;
        let delta_prime = h.delta_prime().map_err(singular("antipode"))?;
        let ss = h.ss_delta_t();
        let (alpha, beta) = (h.alpha(), h.beta());
        let f_d = sum_over(h, h.phi(), |x, y, z| {
            product(&[ss.apply(x), gamma.clone(), h.coproduct(&product(&[y.clone(), beta.clone(), h.s(z)]))])
        });
        let f_d_inverse = sum_over(h, inv, |x, y, z| {
            product(&[h.coproduct(x), gamma_bar.clone(), delta_prime.apply(&product(&[h.s(y), alpha.clone(), z.clone()]))])
        });
        Ok(DrinfeldData {
            gamma,
            gamma_bar,
            f_d,
            f_d_inverse,
            normalization: (h.eps(alpha), h.eps(beta)),
        })
    }

    /// `F_D` with its computed inverse, without requiring normalized counit legs.
    pub fn twistor(&self) -> Result<Twistor, TwistError> {
        Twistor::new(self.f_d.clone(), Some(self.f_d_inverse.clone()))
    }

    /// `eps(beta) F_D`, the normalized twistor.
    pub fn strict_twistor(&self) -> Result<Twistor, TwistError> {
        self.twistor()?.scaled(&self.normalization.1)
    }

    /// The alternative expressions `sum Delta'(Xb beta S(Yb)) gamma Delta(Zb)` and
    /// `sum Delta(S(X) alpha Y) gamma_bar (S (x) S)Delta^T(Z)`.
    pub fn alternative_expressions(&self, h: &QhsaStructure) -> Result<(TensorElement, TensorElement), DrinfeldError> {
        let inv = h.phi_inverse().map_err(singular("coassociator"))?;
        let delta_prime = h.delta_prime().map_err(singular("antipode"))?;
        let ss = h.ss_delta_t();
        let (alpha, beta) = (h.alpha(), h.beta());
        let f = sum_over(h, inv, |x, y, z| {
            product(&[delta_prime.apply(&product(&[x.clone(), beta.clone(), h.s(y)])), self.gamma.clone(), h.coproduct(z)])
        });
        let f_inv = sum_over(h, h.phi(), |x, y, z| {
            product(&[h.coproduct(&product(&[h.s(x), alpha.clone(), y.clone()])), self.gamma_bar.clone(), ss.apply(z)])
        });
        Ok((f, f_inv))
    }
}

const IDS: &[&str] = &[
    "drinfeld.gamma_alt",
    "drinfeld.gamma_invariant",
    "drinfeld.gamma_bar_alt",
    "drinfeld.gamma_bar_invariant",
    "drinfeld.even",
    "drinfeld.inverse",
    "drinfeld.eps_legs",
    "drinfeld.alt_f",
    "drinfeld.alt_f_inverse",
    "drinfeld.gamma_from_f",
    "drinfeld.gamma_bar_from_f",
    "drinfeld.conjugation",
    "drinfeld.intertwines",
    "drinfeld.intertwines_inverse",
    "drinfeld.twisted_phi",
    "drinfeld.twisted_alpha",
    "drinfeld.twisted_beta",
    "drinfeld.phi_relation",
    "drinfeld.gamma_relation",
    "strict.delta",
    "strict.phi",
    "strict.alpha",
    "strict.beta",
];

const R_IDS: &[&str] = &["drinfeld.twisted_r", "drinfeld.r_gamma", "strict.r"];

fn per_basis(h: &QhsaStructure, f: impl Fn(usize, &TensorElement) -> Option<Witness>) -> Option<Witness> {
    (0..h.dim()).find_map(|i| f(i, &h.basis(i)))
}

/// The full verification battery for `H` and its Drinfeld data.
pub fn verify_drinfeld(h: &QhsaStructure) -> CheckReport {
    let mut report = CheckReport::new();
    let fail_all = |report: &mut CheckReport, e: &dyn std::fmt::Display| {
        for id in IDS.iter().chain(R_IDS) {
            report.fail_with(*id, e.to_string());
        }
    };
    let (data, prime) = match DrinfeldData::compute(h).and_then(|d| Ok((d, prime_structure(h)?))) {
        Ok(x) => x,
        Err(e) => {
            fail_all(&mut report, &e);
            return report;
        }
    };
    let DrinfeldData {
        gamma,
        gamma_bar,
        f_d,
        f_d_inverse,
        normalization: (ea, eb),
    } = &data;
    let ss = h.ss_delta_t();

    let (g1, g2) = gamma_expressions(h).expect("computed above");
    report.record("drinfeld.gamma_alt", compare(&g1, &g2, "gamma"));
    report.record(
        "drinfeld.gamma_invariant",
        per_basis(h, |i, a| {
            let da = h.coproduct(a);
            let mut lhs = TensorElement::zero(h.algebra(), 2);
            for (w, c) in da.terms() {
                let t = product(&[ss.apply(&h.basis(w[0])), gamma.clone(), h.coproduct(&h.basis(w[1]))]);
                lhs = &lhs + &t.scale(c);
            }
            compare(&lhs, &gamma.scale(&h.eps(a)), format!("a = e{i}"))
        }),
    );
    let (b1, b2) = gamma_bar_expressions(h).expect("computed above");
    report.record("drinfeld.gamma_bar_alt", compare(&b1, &b2, "gamma_bar"));
    report.record(
        "drinfeld.gamma_bar_invariant",
        per_basis(h, |i, a| {
            let da = h.coproduct(a);
            let mut lhs = TensorElement::zero(h.algebra(), 2);
            for (w, c) in da.terms() {
                let t = product(&[h.coproduct(&h.basis(w[0])), gamma_bar.clone(), ss.apply(&h.basis(w[1]))]);
                lhs = &lhs + &t.scale(c);
            }
            compare(&lhs, &gamma_bar.scale(&h.eps(a)), format!("a = e{i}"))
        }),
    );

    let odd = [("gamma", gamma), ("gamma_bar", gamma_bar), ("F_D", f_d), ("F_D^-1", f_d_inverse)]
        .into_iter()
        .find(|(_, x)| !x.is_even())
        .map(|(what, x)| Witness {
            location: format!("{what} is not even"),
            difference: x.witness_terms(),
        });
    report.record("drinfeld.even", odd);

    let one = h.unit(2);
    report.record(
        "drinfeld.inverse",
        compare(&(f_d_inverse * f_d), &one, "F_D^-1 F_D").or_else(|| compare(&(f_d * f_d_inverse), &one, "F_D F_D^-1")),
    );
    let ea_one = h.unit(1).scale(ea);
    report.record(
        "drinfeld.eps_legs",
        compare(&f_d.apply_map(0, h.epsilon()).unwrap(), &ea_one, "(eps (x) 1) F_D")
            .or_else(|| compare(&f_d.apply_map(1, h.epsilon()).unwrap(), &ea_one, "(1 (x) eps) F_D")),
    );
    let (alt_f, alt_f_inv) = data.alternative_expressions(h).expect("computed above");
    report.record("drinfeld.alt_f", compare(&alt_f, f_d, "F_D"));
    report.record("drinfeld.alt_f_inverse", compare(&alt_f_inv, f_d_inverse, "F_D^-1"));

    report.record("drinfeld.gamma_from_f", compare(&(f_d * &h.coproduct(h.alpha())), gamma, "F_D Delta(alpha)"));
    report.record(
        "drinfeld.gamma_bar_from_f",
        compare(&(&h.coproduct(h.beta()) * f_d_inverse), gamma_bar, "Delta(beta) F_D^-1"),
    );

    let dp = prime.delta();
    report.record(
        "drinfeld.conjugation",
        per_basis(h, |i, a| compare(dp.image(i), &product(&[f_d.clone(), h.coproduct(a), f_d_inverse.clone()]), format!("a = e{i}"))),
    );
    report.record(
        "drinfeld.intertwines",
        per_basis(h, |i, a| compare(&(dp.image(i) * f_d), &(f_d * &h.coproduct(a)), format!("a = e{i}"))),
    );
    report.record(
        "drinfeld.intertwines_inverse",
        per_basis(h, |i, a| compare(&(f_d_inverse * dp.image(i)), &(&h.coproduct(a) * f_d_inverse), format!("a = e{i}"))),
    );

    match data.twistor() {
        Ok(f) => {
            report.record("drinfeld.twisted_phi", compare(prime.phi(), &twisted_phi(h, &f), "Phi' vs Phi_{F_D}"));
            report.record(
                "drinfeld.twisted_alpha",
                compare(&twisted_alpha(h, &f), &prime.alpha().scale(ea), "alpha_{F_D} vs eps(alpha) alpha'"),
            );
            report.record(
                "drinfeld.twisted_beta",
                compare(&twisted_beta(h, &f), &prime.beta().scale(eb), "beta_{F_D} vs eps(beta) beta'"),
            );
        }
        Err(e) => {
            for id in ["drinfeld.twisted_phi", "drinfeld.twisted_alpha", "drinfeld.twisted_beta"] {
                report.fail_with(id, e.to_string());
            }
        }
    }

    let d = h.delta();
    let left = |x: &TensorElement| x.embed(&[0, 1], 3).unwrap();
    let right = |x: &TensorElement| x.embed(&[1, 2], 3).unwrap();
    let star_lhs = product(&[prime.phi().clone(), right(f_d), f_d.apply_map(1, d).unwrap()]);
    let star_rhs = product(&[left(f_d), f_d.apply_map(0, d).unwrap(), h.phi().clone()]);
    report.record("drinfeld.phi_relation", compare(&star_lhs, &star_rhs, "Phi' relation"));
    match (prime.phi_inverse(), h.phi_inverse()) {
        (Ok(prime_inv), Ok(inv)) => {
            let lhs = product(&[prime_inv.clone(), left(f_d), gamma.apply_map(0, d).unwrap()]);
            let rhs = product(&[right(f_d), gamma.apply_map(1, d).unwrap(), inv.clone()]);
            report.record("drinfeld.gamma_relation", compare(&lhs, &rhs, "gamma relation"));
        }
        (Err(e), _) | (_, Err(e)) => report.fail_with("drinfeld.gamma_relation", e.to_string()),
    }

    match data.strict_twistor() {
        Ok(strict) => {
            let twisted = twist_structure(h, &strict);
            let delta = per_basis(h, |i, _| compare(twisted.delta().image(i), dp.image(i), format!("a = e{i}")));
            report.record("strict.delta", delta);
            report.record("strict.phi", compare(twisted.phi(), prime.phi(), "phi"));
            report.record(
                "strict.alpha",
                compare(twisted.alpha(), &prime.alpha().scale(&(ea * ea)), "alpha vs eps(alpha)^2 alpha'"),
            );
            report.record(
                "strict.beta",
                compare(twisted.beta(), &prime.beta().scale(&(eb * eb)), "beta vs eps(beta)^2 beta'"),
            );
            match (twisted.r(), prime.r()) {
                (Some(a), Some(b)) => report.record("strict.r", compare(a, b, "R")),
                _ => report.skip("strict.r", "no R-matrix"),
            }
        }
        Err(e) => {
            for id in ["strict.delta", "strict.phi", "strict.alpha", "strict.beta", "strict.r"] {
                report.fail_with(id, e.to_string());
            }
        }
    }

    match h.r() {
        None => {
            for id in ["drinfeld.twisted_r", "drinfeld.r_gamma"] {
                report.skip(id, "no R-matrix");
            }
        }
        Some(r) => {
            let r_prime = prime.r().expect("prime keeps R");
            let conj = product(&[f_d.transpose(), r.clone(), f_d_inverse.clone()]);
            report.record("drinfeld.twisted_r", compare(r_prime, &conj, "R' vs F_D^T R F_D^-1"));
            report.record("drinfeld.r_gamma", compare(&(r_prime * gamma), &(&gamma.transpose() * r), "R' gamma vs gamma^T R"));
        }
    }

    for entry in check_quasi_triangular(&prime).entries {
        let id = format!("prime.{}", entry.id);
        match entry.status {
            Status::Skipped => report.skip(id, entry.detail.unwrap_or_default()),
            Status::Pass => report.pass(id),
            _ => match entry.witness {
                Some(w) => report.fail(id, w),
                None => report.fail_with(id, entry.detail.unwrap_or_default()),
            },
        }
    }
    report
}
