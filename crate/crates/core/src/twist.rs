//! Structure-to-structure transforms: twisting, opposite and primed
//! structures, twisting by `R`, and graded tensor products.

use std::sync::Arc;

use thiserror::Error;

use crate::algebra::{AlgebraError, GradedAlgebra};
use crate::checks::phi_sub;
use crate::map::StructureMap;
use crate::report::{CheckReport, Witness};
use crate::scalar::{FieldSpec, Scalar};
use crate::structure::QhsaStructure;
use crate::tensor::{compare, same_algebra, TensorElement, TensorError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TwistError {
    #[error("twistor must have arity 2, found {0}")]
    Arity(usize),
    #[error("twistor is defined over a different algebra")]
    Algebra,
    #[error("twistor is not even")]
    NotEven,
    #[error("twistor is not invertible: {0}")]
    NotInvertible(TensorError),
    #[error("declared inverse is not a two-sided inverse")]
    BadInverse,
    #[error("singular {what}: {source}")]
    Singular {
        what: &'static str,
        source: TensorError,
    },
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("both factors have a nontrivial coassociator")]
    BothNontrivial,
    #[error(transparent)]
    Product(#[from] AlgebraError),
}

/// An even invertible element of `H (x) H` together with its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Twistor {
    element: TensorElement,
    inverse: TensorElement,
}

impl Twistor {
    /// A declared inverse is checked on both sides; otherwise it is solved for.
    pub fn new(element: TensorElement, declared_inverse: Option<TensorElement>) -> Result<Self, TwistError> {
        if element.arity() != 2 {
            return Err(TwistError::Arity(element.arity()));
        }
        if !element.is_even() {
            return Err(TwistError::NotEven);
        }
        let inverse = match declared_inverse {
            Some(inv) => {
                if inv.arity() != 2 || !same_algebra(inv.algebra(), element.algebra()) {
                    return Err(TwistError::BadInverse);
                }
                let one = TensorElement::unit(element.algebra(), 2);
                if &element * &inv != one || &inv * &element != one {
                    return Err(TwistError::BadInverse);
                }
                inv
            }
            None => element.invert().map_err(TwistError::NotInvertible)?,
        };
        Ok(Twistor { element, inverse })
    }

    pub fn for_structure(
        h: &QhsaStructure,
        element: TensorElement,
        declared_inverse: Option<TensorElement>,
    ) -> Result<Self, TwistError> {
        if !same_algebra(element.algebra(), h.algebra()) {
            return Err(TwistError::Algebra);
        }
        Self::new(element, declared_inverse)
    }

    pub fn trivial(h: &QhsaStructure) -> Self {
        Twistor {
            element: h.unit(2),
            inverse: h.unit(2),
        }
    }

    pub fn element(&self) -> &TensorElement {
        &self.element
    }

    pub fn inverse(&self) -> &TensorElement {
        &self.inverse
    }

    /// `F^T` with inverse `(F^{-1})^T`.
    pub fn transpose(&self) -> Self {
        Twistor {
            element: self.element.transpose(),
            inverse: self.inverse.transpose(),
        }
    }

    /// `G F`.
    pub fn then(&self, g: &Twistor) -> Self {
        Twistor {
            element: &g.element * &self.element,
            inverse: &self.inverse * &g.inverse,
        }
    }

    /// `c F` for a nonzero scalar `c`.
    pub fn scaled(&self, c: &Scalar) -> Result<Self, TwistError> {
        let inv = c.inverse().map_err(|_| TwistError::NotInvertible(TensorError::Singular))?;
        Ok(Twistor {
            element: self.element.scale(c),
            inverse: self.inverse.scale(&inv),
        })
    }
}

/// Evenness, two-sided invertibility and `(1 (x) eps)F = (eps (x) 1)F = 1`.
pub fn check_twistor(h: &QhsaStructure, f: &TensorElement) -> CheckReport {
    let mut report = CheckReport::new();
    if f.arity() != 2 || !same_algebra(f.algebra(), h.algebra()) {
        for id in ["twistor.even", "twistor.invertible", "twistor.normalized"] {
            report.fail_with(id, "twistor is not an element of H (x) H");
        }
        return report;
    }
    if f.is_even() {
        report.pass("twistor.even");
    } else {
        report.fail(
            "twistor.even",
            Witness {
                location: "odd component".into(),
                difference: f.witness_terms(),
            },
        );
    }
    match f.invert() {
        Ok(_) => report.pass("twistor.invertible"),
        Err(e) => report.fail_with("twistor.invertible", e.to_string()),
    }
    let one = h.unit(1);
    let w = compare(&f.apply_map(0, h.epsilon()).unwrap(), &one, "(eps (x) 1) F")
        .or_else(|| compare(&f.apply_map(1, h.epsilon()).unwrap(), &one, "(1 (x) eps) F"));
    report.record("twistor.normalized", w);
    report
}

/// `(F (x) 1)(Delta (x) 1)F = (1 (x) F)(1 (x) Delta)F`.
pub fn check_cocycle(h: &QhsaStructure, f: &Twistor) -> CheckReport {
    let mut report = CheckReport::new();
    let e = f.element();
    let lhs = &e.embed(&[0, 1], 3).unwrap() * &e.apply_map(0, h.delta()).unwrap();
    let rhs = &e.embed(&[1, 2], 3).unwrap() * &e.apply_map(1, h.delta()).unwrap();
    report.record("twistor.cocycle", compare(&lhs, &rhs, "cocycle"));
    report
}

/// `Delta_F(a) = F Delta(a) F^{-1}`.
pub fn twisted_delta(h: &QhsaStructure, f: &Twistor) -> StructureMap {
    StructureMap::from_fn(h.algebra(), 2, |i| &(f.element() * h.delta().image(i)) * f.inverse())
}

/// `Phi_F = (F (x) 1)(Delta (x) 1)F Phi (1 (x) Delta)F^{-1} (1 (x) F^{-1})`.
pub fn twisted_phi(h: &QhsaStructure, f: &Twistor) -> TensorElement {
    let (e, inv) = (f.element(), f.inverse());
    let d = h.delta();
    crate::checks::product(&[
        e.embed(&[0, 1], 3).unwrap(),
        e.apply_map(0, d).unwrap(),
        h.phi().clone(),
        inv.apply_map(1, d).unwrap(),
        inv.embed(&[1, 2], 3).unwrap(),
    ])
}

/// `alpha_F = m (1 (x) alpha)(S (x) 1) F^{-1}`.
pub fn twisted_alpha(h: &QhsaStructure, f: &Twistor) -> TensorElement {
    h.m_alpha_s(f.inverse())
}

/// `beta_F = m (1 (x) beta)(1 (x) S) F`.
pub fn twisted_beta(h: &QhsaStructure, f: &Twistor) -> TensorElement {
    h.m_beta_s(f.element())
}

/// `R_F = F^T R F^{-1}`.
pub fn twisted_r(r: &TensorElement, f: &Twistor) -> TensorElement {
    &(&f.element().transpose() * r) * f.inverse()
}

/// The twisted structure `(H, Delta_F, eps, S, Phi_F, alpha_F, beta_F [, R_F])`.
pub fn twist_structure(h: &QhsaStructure, f: &Twistor) -> QhsaStructure {
    h.rebuild(
        format!("{}-twisted", h.name()),
        twisted_delta(h, f),
        h.antipode().clone(),
        twisted_phi(h, f),
        twisted_alpha(h, f),
        twisted_beta(h, f),
        h.r().map(|r| twisted_r(r, f)),
    )
}

/// Componentwise comparison of coproduct (per basis element), coassociator,
/// `alpha`, `beta` and `R`, with ids `{prefix}.delta` and so on.
pub fn compare_structures(lhs: &QhsaStructure, rhs: &QhsaStructure, prefix: &str) -> CheckReport {
    let mut report = CheckReport::new();
    let delta = (0..lhs.dim()).find_map(|i| {
        compare(lhs.delta().image(i), rhs.delta().image(i), format!("Delta(e{i})"))
    });
    report.record(format!("{prefix}.delta"), delta);
    report.record(format!("{prefix}.phi"), compare(lhs.phi(), rhs.phi(), "phi"));
    report.record(format!("{prefix}.alpha"), compare(lhs.alpha(), rhs.alpha(), "alpha"));
    report.record(format!("{prefix}.beta"), compare(lhs.beta(), rhs.beta(), "beta"));
    match (lhs.r(), rhs.r()) {
        (None, None) => report.skip(format!("{prefix}.r"), "no R-matrix"),
        (Some(a), Some(b)) => report.record(format!("{prefix}.r"), compare(a, b, "R")),
        _ => report.fail_with(format!("{prefix}.r"), "R-matrix present on one side only"),
    }
    report
}

/// `(H_F)_G = H_{GF}` componentwise.
pub fn twist_composition_check(h: &QhsaStructure, f: &Twistor, g: &Twistor) -> CheckReport {
    let lhs = twist_structure(&twist_structure(h, f), g);
    let rhs = twist_structure(h, &f.then(g));
    compare_structures(&lhs, &rhs, "compose")
}

/// `(H, Delta^T, eps, S^{-1}, Phi^{-1}_{321}, S^{-1}(alpha), S^{-1}(beta) [, R^T])`.
pub fn opposite_structure(h: &QhsaStructure) -> Result<QhsaStructure, TwistError> {
    let s_inv = h
        .antipode_inverse()
        .map_err(|source| TwistError::Singular { what: "antipode", source })?
        .clone();
    let phi_inv = h
        .phi_inverse()
        .map_err(|source| TwistError::Singular { what: "coassociator", source })?;
    Ok(h.rebuild(
        format!("{}-opposite", h.name()),
        h.delta_t(),
        s_inv.clone(),
        phi_sub(phi_inv, [3, 2, 1]),
        s_inv.apply(h.alpha()),
        s_inv.apply(h.beta()),
        h.r().map(TensorElement::transpose),
    ))
}

/// `(H, Delta', eps, S, (S (x) S (x) S)Phi_{321}, S(beta), S(alpha) [, (S (x) S)R])`.
pub fn prime_structure(h: &QhsaStructure) -> Result<QhsaStructure, TwistError> {
    let delta = h
        .delta_prime()
        .map_err(|source| TwistError::Singular { what: "antipode", source })?;
    let s = h.antipode();
    let phi = phi_sub(h.phi(), [3, 2, 1]).apply_map_all(s).unwrap();
    Ok(h.rebuild(
        format!("{}-prime", h.name()),
        delta,
        s.clone(),
        phi,
        h.s(h.beta()),
        h.s(h.alpha()),
        h.r().map(|r| r.apply_map_all(s).unwrap()),
    ))
}

/// Twisting by `R` itself: `Delta_R = Delta^T`, `Phi_R = Phi^T`, `R_R = R^T`.
/// `alpha_R` and `beta_R` are reported without comparison.
pub fn verify_twist_by_r(h: &QhsaStructure) -> CheckReport {
    let mut report = CheckReport::new();
    let ids = ["twistr.delta", "twistr.phi", "twistr.r"];
    let Some(r) = h.r() else {
        for id in ids.iter().chain(&["twistr.alpha", "twistr.beta"]) {
            report.skip(*id, "no R-matrix");
        }
        return report;
    };
    let f = match Twistor::new(r.clone(), None) {
        Ok(f) => f,
        Err(e) => {
            for id in ids {
                report.fail_with(id, e.to_string());
            }
            return report;
        }
    };
    let opposite = match opposite_structure(h) {
        Ok(o) => o,
        Err(e) => {
            for id in ids {
                report.fail_with(id, e.to_string());
            }
            return report;
        }
    };
    let twisted = twist_structure(h, &f);
    let delta = (0..h.dim()).find_map(|i| {
        compare(twisted.delta().image(i), opposite.delta().image(i), format!("Delta_R(e{i})"))
    });
    report.record("twistr.delta", delta);
    report.record("twistr.phi", compare(twisted.phi(), opposite.phi(), "Phi_R"));
    report.record(
        "twistr.r",
        compare(twisted.r().expect("R present"), &r.transpose(), "R_R"),
    );
    report.info("twistr.alpha", format!("alpha_R = {}", twisted.alpha()));
    report.info("twistr.beta", format!("beta_R = {}", twisted.beta()));
    report
}

/// `opposite(H_F) = (opposite H)_{F^T}` componentwise.
pub fn check_opposite_twist(h: &QhsaStructure, f: &Twistor) -> CheckReport {
    let lhs = opposite_structure(&twist_structure(h, f));
    let rhs = opposite_structure(h).map(|o| twist_structure(&o, &f.transpose()));
    match (lhs, rhs) {
        (Ok(l), Ok(r)) => compare_structures(&l, &r, "opposite_twist"),
        (Err(e), _) | (_, Err(e)) => {
            let mut report = CheckReport::new();
            for part in ["delta", "phi", "alpha", "beta", "r"] {
                report.fail_with(format!("opposite_twist.{part}"), e.to_string());
            }
            report
        }
    }
}

fn is_trivial_phi(h: &QhsaStructure) -> bool {
    h.phi() == &h.unit(3)
}

/// Places `x` over `A` and `y` over `B` legwise into `(A (x) B)^{(x) n}`,
/// with the Koszul sign of moving every `B` leg past the later `A` legs.
fn interleave(ab: &Arc<GradedAlgebra>, db: usize, x: &TensorElement, y: &TensorElement) -> TensorElement {
    let n = x.arity();
    let pa = x.algebra().parities();
    let pb = y.algebra().parities();
    let mut terms = Vec::new();
    for (wa, ca) in x.terms() {
        for (wb, cb) in y.terms() {
            let mut sign = 0u8;
            for i in 0..n {
                for j in 0..i {
                    sign ^= pa[wa[i]] & pb[wb[j]];
                }
            }
            let word: Vec<usize> = (0..n).map(|k| wa[k] * db + wb[k]).collect();
            let c = ca * cb;
            terms.push((word, if sign == 1 { -c } else { c }));
        }
    }
    TensorElement::from_terms(ab, n, terms).expect("indices in range")
}

/// Graded tensor product of two structures, one of which must have a trivial
/// coassociator. The `R`-matrix is kept only when both factors carry one.
pub fn tensor_product_structure(a: &QhsaStructure, b: &QhsaStructure) -> Result<QhsaStructure, TwistError> {
    let (fa, fb) = (a.algebra().field(), b.algebra().field());
    if fa != fb {
        return Err(TwistError::FieldMismatch(fa, fb));
    }
    if !is_trivial_phi(a) && !is_trivial_phi(b) {
        return Err(TwistError::BothNontrivial);
    }
    let ab = Arc::new(a.algebra().tensor_product(b.algebra())?);
    let db = b.dim();
    let pa = a.algebra().parities();
    let pb = b.algebra().parities();
    let map = |arity: usize, f: &dyn Fn(usize, usize) -> TensorElement| {
        StructureMap::from_fn(&ab, arity, |n| f(n / db, n % db))
    };
    // (1 (x) T (x) 1)(Delta_A (x) Delta_B)
    let delta = map(2, &|i, j| interleave(&ab, db, a.delta().image(i), b.delta().image(j)));
    let epsilon = map(0, &|i, j| {
        TensorElement::scalar(&ab, &a.epsilon().image(i).to_scalar() * &b.epsilon().image(j).to_scalar())
    });
    let antipode = map(1, &|i, j| {
        let s = interleave(&ab, db, a.antipode().image(i), b.antipode().image(j));
        if pa[i] & pb[j] == 1 {
            -&s
        } else {
            s
        }
    });
    let phi = interleave(&ab, db, a.phi(), b.phi());
    let alpha = interleave(&ab, db, a.alpha(), b.alpha());
    let beta = interleave(&ab, db, a.beta(), b.beta());
    let r = match (a.r(), b.r()) {
        (Some(ra), Some(rb)) => Some(interleave(&ab, db, ra, rb)),
        _ => None,
    };
    Ok(QhsaStructure::new(
        format!("{}-{}", a.name(), b.name()),
        ab,
        delta,
        epsilon,
        antipode,
        phi,
        alpha,
        beta,
        r,
    )
    .expect("components built over the product algebra"))
}
