//! The full tuple `(H, Delta, epsilon, S, Phi, alpha, beta [, R])`.

use std::sync::{Arc, OnceLock};

use thiserror::Error;

use crate::algebra::GradedAlgebra;
use crate::map::StructureMap;
use crate::report::{CheckReport, Witness};
use crate::scalar::Scalar;
use crate::tensor::{compare, same_algebra, TensorElement, TensorError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("{what} must have arity {expected}, found {found}")]
    Arity {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("{0} is defined over a different algebra")]
    Algebra(&'static str),
    #[error(transparent)]
    Tensor(#[from] TensorError),
}

#[derive(Clone, Debug)]
pub struct QhsaStructure {
    name: String,
    algebra: Arc<GradedAlgebra>,
    delta: StructureMap,
    epsilon: StructureMap,
    antipode: StructureMap,
    phi: TensorElement,
    alpha: TensorElement,
    beta: TensorElement,
    r: Option<TensorElement>,
    phi_inv: OnceLock<Result<TensorElement, TensorError>>,
    antipode_inv: OnceLock<Result<StructureMap, TensorError>>,
}

#[allow(clippy::too_many_arguments)]
impl QhsaStructure {
    /// Checks shapes only; the axioms are verified by the check suites.
    pub fn new(
        name: impl Into<String>,
        algebra: Arc<GradedAlgebra>,
        delta: StructureMap,
        epsilon: StructureMap,
        antipode: StructureMap,
        phi: TensorElement,
        alpha: TensorElement,
        beta: TensorElement,
        r: Option<TensorElement>,
    ) -> Result<Self, StructureError> {
        let maps = [("delta", &delta, 2), ("epsilon", &epsilon, 0), ("antipode", &antipode, 1)];
        for (what, m, expected) in maps {
            if m.out_arity() != expected {
                return Err(StructureError::Arity {
                    what,
                    expected,
                    found: m.out_arity(),
                });
            }
            if !same_algebra(m.image(0).algebra(), &algebra) {
                return Err(StructureError::Algebra(what));
            }
        }
        let elems = [("phi", Some(&phi), 3), ("alpha", Some(&alpha), 1), ("beta", Some(&beta), 1), ("r", r.as_ref(), 2)];
        for (what, e, expected) in elems {
            let Some(e) = e else { continue };
            if e.arity() != expected {
                return Err(StructureError::Arity {
                    what,
                    expected,
                    found: e.arity(),
                });
            }
            if !same_algebra(e.algebra(), &algebra) {
                return Err(StructureError::Algebra(what));
            }
        }
        Ok(QhsaStructure {
            name: name.into(),
            algebra,
            delta,
            epsilon,
            antipode,
            phi,
            alpha,
            beta,
            r,
            phi_inv: OnceLock::new(),
            antipode_inv: OnceLock::new(),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn algebra(&self) -> &Arc<GradedAlgebra> {
        &self.algebra
    }

    pub fn delta(&self) -> &StructureMap {
        &self.delta
    }

    pub fn epsilon(&self) -> &StructureMap {
        &self.epsilon
    }

    pub fn antipode(&self) -> &StructureMap {
        &self.antipode
    }

    pub fn phi(&self) -> &TensorElement {
        &self.phi
    }

    pub fn alpha(&self) -> &TensorElement {
        &self.alpha
    }

    pub fn beta(&self) -> &TensorElement {
        &self.beta
    }

    pub fn r(&self) -> Option<&TensorElement> {
        self.r.as_ref()
    }

    pub fn without_r(mut self) -> Self {
        self.r = None;
        self
    }

    pub fn phi_inverse(&self) -> Result<&TensorElement, TensorError> {
        self.phi_inv
            .get_or_init(|| self.phi.invert())
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn antipode_inverse(&self) -> Result<&StructureMap, TensorError> {
        self.antipode_inv
            .get_or_init(|| self.antipode.inverse())
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn unit(&self, arity: usize) -> TensorElement {
        TensorElement::unit(&self.algebra, arity)
    }

    pub fn one(&self) -> Scalar {
        Scalar::one(self.algebra.field())
    }

    pub fn basis(&self, i: usize) -> TensorElement {
        TensorElement::basis(&self.algebra, i)
    }

    /// `epsilon` of an arity-1 element.
    pub fn eps(&self, x: &TensorElement) -> Scalar {
        self.epsilon.apply(x).to_scalar()
    }

    pub fn s(&self, x: &TensorElement) -> TensorElement {
        self.antipode.apply(x)
    }

    pub fn coproduct(&self, x: &TensorElement) -> TensorElement {
        self.delta.apply(x)
    }

    /// `Delta^T = T . Delta`.
    pub fn delta_t(&self) -> StructureMap {
        StructureMap::from_fn(&self.algebra, 2, |i| self.delta.image(i).transpose())
    }

    /// `(S (x) S) Delta^T`.
    pub fn ss_delta_t(&self) -> StructureMap {
        StructureMap::from_fn(&self.algebra, 2, |i| {
            self.delta
                .image(i)
                .transpose()
                .apply_map_all(&self.antipode)
                .expect("arity-1 map")
        })
    }

    /// `Delta' = (S (x) S) Delta^T S^{-1}`.
    pub fn delta_prime(&self) -> Result<StructureMap, TensorError> {
        let s_inv = self.antipode_inverse()?;
        Ok(s_inv.then(&self.ss_delta_t()))
    }

    /// `x -> beta S(x)`.
    pub fn beta_s(&self) -> StructureMap {
        self.antipode.then(&StructureMap::left_multiplication(&self.beta))
    }

    pub fn alpha_left(&self) -> StructureMap {
        StructureMap::left_multiplication(&self.alpha)
    }

    pub fn beta_left(&self) -> StructureMap {
        StructureMap::left_multiplication(&self.beta)
    }

    /// `m (1 (x) alpha)(S (x) 1) x = sum S(x_1) alpha x_2`.
    pub fn m_alpha_s(&self, x: &TensorElement) -> TensorElement {
        x.apply_map(0, &self.antipode)
            .and_then(|t| t.apply_map(1, &self.alpha_left()))
            .and_then(|t| t.contract(0))
            .expect("arity-2 element")
    }

    /// `m (1 (x) beta)(1 (x) S) x = sum x_1 beta S(x_2)`.
    pub fn m_beta_s(&self, x: &TensorElement) -> TensorElement {
        x.apply_map(1, &self.beta_s())
            .and_then(|t| t.contract(0))
            .expect("arity-2 element")
    }

    /// Structure with the given components replaced; caches are reset.
    pub(crate) fn rebuild(
        &self,
        name: String,
        delta: StructureMap,
        antipode: StructureMap,
        phi: TensorElement,
        alpha: TensorElement,
        beta: TensorElement,
        r: Option<TensorElement>,
    ) -> QhsaStructure {
        QhsaStructure::new(
            name,
            Arc::clone(&self.algebra),
            delta,
            self.epsilon.clone(),
            antipode,
            phi,
            alpha,
            beta,
            r,
        )
        .expect("components keep their shapes")
    }
}

/// Checks that `Delta`, `epsilon` are graded algebra maps, `S` is an
/// invertible graded antihomomorphism, and that `Phi`, `alpha`, `beta`, `R`
/// have the required parity and invertibility.
pub fn validate_structure(h: &QhsaStructure) -> CheckReport {
    let alg = h.algebra();
    let d = h.dim();
    let mut report = CheckReport::new();

    let parity = [("delta", h.delta()), ("epsilon", h.epsilon()), ("antipode", h.antipode())]
        .into_iter()
        .find_map(|(what, m)| {
            m.parity_violation(alg).map(|i| Witness {
                location: format!("{what}(e{i})"),
                difference: m.image(i).witness_terms(),
            })
        });
    report.record("struct.parity", parity);

    let pairs = |check: &dyn Fn(usize, usize) -> Option<Witness>| {
        (0..d).find_map(|i| (0..d).find_map(|j| check(i, j)))
    };
    let prod = |i: usize, j: usize| &h.basis(i) * &h.basis(j);

    let delta_hom = compare(&h.coproduct(&h.unit(1)), &h.unit(2), "1").or_else(|| {
        pairs(&|i, j| {
            compare(
                &h.coproduct(&prod(i, j)),
                &(h.delta().image(i) * h.delta().image(j)),
                format!("(e{i}, e{j})"),
            )
        })
    });
    report.record("struct.delta_hom", delta_hom);

    let scalar = |s: Scalar| TensorElement::scalar(alg, s);
    let eps_hom = compare(&scalar(h.eps(&h.unit(1))), &scalar(h.one()), "1").or_else(|| {
        pairs(&|i, j| {
            compare(
                &scalar(h.eps(&prod(i, j))),
                &scalar(&h.eps(&h.basis(i)) * &h.eps(&h.basis(j))),
                format!("(e{i}, e{j})"),
            )
        })
    });
    report.record("struct.epsilon_hom", eps_hom);

    let antihom = compare(&h.s(&h.unit(1)), &h.unit(1), "1")
        .or_else(|| {
            pairs(&|i, j| {
                let mut rhs = h.antipode().image(j) * h.antipode().image(i);
                if alg.parity(i) * alg.parity(j) == 1 {
                    rhs = -&rhs;
                }
                compare(&h.s(&prod(i, j)), &rhs, format!("(e{i}, e{j})"))
            })
        })
        .or_else(|| {
            h.antipode_inverse().err().map(|e| Witness {
                location: format!("antipode: {e}"),
                difference: Vec::new(),
            })
        });
    report.record("struct.antipode_antihom", antihom);

    let phi = if !h.phi().is_even() {
        Some(Witness {
            location: "phi is not even".into(),
            difference: h.phi().witness_terms(),
        })
    } else {
        h.phi_inverse().err().map(|e| Witness {
            location: format!("phi: {e}"),
            difference: Vec::new(),
        })
    };
    report.record("struct.phi", phi);

    let ab = [("alpha", h.alpha()), ("beta", h.beta())]
        .into_iter()
        .find(|(_, x)| !x.is_even())
        .map(|(what, x)| Witness {
            location: format!("{what} is not even"),
            difference: x.witness_terms(),
        });
    report.record("struct.alpha_beta", ab);

    match h.r() {
        None => report.skip("struct.r_matrix", "no R-matrix"),
        Some(r) => {
            let w = if !r.is_even() {
                Some(Witness {
                    location: "R is not even".into(),
                    difference: r.witness_terms(),
                })
            } else {
                r.invert().err().map(|e| Witness {
                    location: format!("R: {e}"),
                    difference: Vec::new(),
                })
            };
            report.record("struct.r_matrix", w);
        }
    }
    report
}
