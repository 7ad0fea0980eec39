//! Linear maps out of `H` stored by their images on basis elements.
//!
//! Output arity 0 encodes scalar-valued maps such as the counit, arity 1
//! endomorphisms such as the antipode, and arity 2 coproducts.

use std::sync::Arc;

use crate::algebra::GradedAlgebra;
use crate::linalg;
use crate::scalar::Scalar;
use crate::tensor::{same_algebra, TensorElement, TensorError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureMap {
    out_arity: usize,
    images: Vec<TensorElement>,
}

impl StructureMap {
    pub fn new(
        algebra: &Arc<GradedAlgebra>,
        out_arity: usize,
        images: Vec<TensorElement>,
    ) -> Result<Self, TensorError> {
        if images.len() != algebra.dim() {
            return Err(TensorError::IndexOutOfRange {
                index: images.len(),
                dim: algebra.dim(),
            });
        }
        for img in &images {
            if !same_algebra(img.algebra(), algebra) {
                return Err(TensorError::AlgebraMismatch);
            }
            if img.arity() != out_arity {
                return Err(TensorError::MapArity {
                    expected: out_arity,
                    found: img.arity(),
                });
            }
        }
        Ok(StructureMap { out_arity, images })
    }

    pub fn from_fn(
        algebra: &Arc<GradedAlgebra>,
        out_arity: usize,
        mut f: impl FnMut(usize) -> TensorElement,
    ) -> Self {
        let images = (0..algebra.dim()).map(&mut f).collect();
        Self::new(algebra, out_arity, images).expect("images match the declared arity")
    }

    pub fn identity(algebra: &Arc<GradedAlgebra>) -> Self {
        Self::from_fn(algebra, 1, |i| TensorElement::basis(algebra, i))
    }

    /// `x -> c x`.
    pub fn left_multiplication(c: &TensorElement) -> Self {
        let alg = c.algebra();
        Self::from_fn(alg, 1, |i| c * &TensorElement::basis(alg, i))
    }

    pub fn out_arity(&self) -> usize {
        self.out_arity
    }

    pub fn image(&self, i: usize) -> &TensorElement {
        &self.images[i]
    }

    pub fn images(&self) -> &[TensorElement] {
        &self.images
    }

    /// Linear extension to an arity-1 element.
    pub fn apply(&self, x: &TensorElement) -> TensorElement {
        x.apply_map(0, self).expect("apply needs an arity-1 element")
    }

    /// `g . self`, for an endomorphism `self`.
    pub fn then(&self, g: &StructureMap) -> StructureMap {
        assert_eq!(self.out_arity, 1, "then needs an endomorphism");
        StructureMap {
            out_arity: g.out_arity,
            images: self.images.iter().map(|x| g.apply(x)).collect(),
        }
    }

    /// First basis index whose image is not homogeneous of the same parity.
    pub fn parity_violation(&self, algebra: &GradedAlgebra) -> Option<usize> {
        self.images.iter().enumerate().find_map(|(i, img)| {
            let ok = img.is_zero() || img.parity() == Some(algebra.parity(i));
            (!ok).then_some(i)
        })
    }

    /// Inverse of a bijective endomorphism, checked on both sides.
    pub fn inverse(&self) -> Result<StructureMap, TensorError> {
        if self.out_arity != 1 {
            return Err(TensorError::MapArity {
                expected: 1,
                found: self.out_arity,
            });
        }
        let alg = self.images[0].algebra();
        let field = alg.field();
        let d = alg.dim();
        // Column i holds the image of e_i.
        let matrix: Vec<Vec<Scalar>> = (0..d)
            .map(|r| (0..d).map(|c| self.images[c].coeff(&[r])).collect())
            .collect();
        let inv = linalg::invert_matrix(field, &matrix).ok_or(TensorError::Singular)?;
        let result = StructureMap::from_fn(alg, 1, |c| {
            let col: Vec<Scalar> = (0..d).map(|r| inv[r][c].clone()).collect();
            TensorElement::from_vector(alg, &col)
        });
        let identity = StructureMap::identity(alg);
        if self.then(&result) != identity || result.then(self) != identity {
            return Err(TensorError::Singular);
        }
        Ok(result)
    }
}
