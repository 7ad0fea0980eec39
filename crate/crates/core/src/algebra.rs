//! Finite-dimensional Z2-graded associative algebras given by structure
//! constants.

use thiserror::Error;

use crate::report::{CheckReport, Witness, WitnessTerm};
use crate::scalar::{FieldSpec, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("algebra dimension must be at least 1")]
    Empty,
    #[error("parity of basis element {index} is {value}, expected 0 or 1")]
    BadParity { index: usize, value: u8 },
    #[error("{what}: expected length {expected}, found {found}")]
    LengthMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("{what}: index {index} out of range for dimension {dim}")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        dim: usize,
    },
    #[error("{what}: duplicate entry {entry:?}")]
    Duplicate { what: &'static str, entry: Vec<usize> },
    #[error("{what}: scalar not in field {field}")]
    FieldMismatch { what: &'static str, field: FieldSpec },
}

/// Associative superalgebra with basis `e_0 .. e_{d-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedAlgebra {
    field: FieldSpec,
    parity: Vec<u8>,
    unit: Vec<Scalar>,
    // Row-major over (i, j); each list sorted by target index, zero-free.
    mult: Vec<Vec<(usize, Scalar)>>,
}

impl GradedAlgebra {
    pub fn new(
        field: FieldSpec,
        parity: Vec<u8>,
        unit: Vec<Scalar>,
        mult: Vec<(usize, usize, usize, Scalar)>,
    ) -> Result<Self, AlgebraError> {
        let d = parity.len();
        if d == 0 {
            return Err(AlgebraError::Empty);
        }
        if let Some((index, &value)) = parity.iter().enumerate().find(|(_, &p)| p > 1) {
            return Err(AlgebraError::BadParity { index, value });
        }
        if unit.len() != d {
            return Err(AlgebraError::LengthMismatch {
                what: "unit",
                expected: d,
                found: unit.len(),
            });
        }
        if unit.iter().any(|s| s.field() != field) {
            return Err(AlgebraError::FieldMismatch { what: "unit", field });
        }
        let mut table: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); d * d];
        for (i, j, k, c) in mult {
            for idx in [i, j, k] {
                if idx >= d {
                    return Err(AlgebraError::IndexOutOfRange {
                        what: "mult",
                        index: idx,
                        dim: d,
                    });
                }
            }
            if c.field() != field {
                return Err(AlgebraError::FieldMismatch { what: "mult", field });
            }
            let slot = &mut table[i * d + j];
            if slot.iter().any(|(t, _)| *t == k) {
                return Err(AlgebraError::Duplicate {
                    what: "mult",
                    entry: vec![i, j, k],
                });
            }
            if !c.is_zero() {
                slot.push((k, c));
            }
        }
        for slot in &mut table {
            slot.sort_by_key(|(k, _)| *k);
        }
        Ok(GradedAlgebra {
            field,
            parity,
            unit,
            mult: table,
        })
    }

    pub fn dim(&self) -> usize {
        self.parity.len()
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn parity(&self, i: usize) -> u8 {
        self.parity[i]
    }

    pub fn parities(&self) -> &[u8] {
        &self.parity
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    /// Structure constants of `e_i * e_j`.
    pub fn product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.mult[i * self.dim() + j]
    }

    /// All nonzero structure constants `(i, j, k, c)` in lexicographic order.
    pub fn mult_entries(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let d = self.dim();
        let mut out = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for (k, c) in self.product(i, j) {
                    out.push((i, j, *k, c.clone()));
                }
            }
        }
        out
    }

    pub fn zero_vector(&self) -> Vec<Scalar> {
        vec![Scalar::zero(self.field); self.dim()]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = self.zero_vector();
        v[i] = Scalar::one(self.field);
        v
    }

    /// Product of two dense coefficient vectors.
    pub fn mul_vectors(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.zero_vector();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (k, c) in self.product(i, j) {
                    out[*k] = &out[*k] + &(&xy * c);
                }
            }
        }
        out
    }

    fn vector_terms(v: &[Scalar]) -> Vec<WitnessTerm> {
        v.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| WitnessTerm {
                word: vec![k],
                coeff: c.to_string(),
            })
            .collect()
    }

    fn vector_diff(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    /// Grading additivity, two-sided unit and associativity on all basis
    /// pairs and triples.
    pub fn validate(&self) -> CheckReport {
        let d = self.dim();
        let mut report = CheckReport::new();

        let mut grading = None;
        'outer: for i in 0..d {
            for j in 0..d {
                for (k, c) in self.product(i, j) {
                    if self.parity[*k] != (self.parity[i] + self.parity[j]) % 2 {
                        grading = Some(Witness {
                            location: format!("(e{i}, e{j})"),
                            difference: vec![WitnessTerm {
                                word: vec![*k],
                                coeff: c.to_string(),
                            }],
                        });
                        break 'outer;
                    }
                }
            }
        }
        report.record("alg.grading", grading);

        let mut unit = None;
        for i in 0..d {
            let e = self.basis_vector(i);
            let left = self.mul_vectors(&self.unit, &e);
            let right = self.mul_vectors(&e, &self.unit);
            let bad = if left != e {
                Some(Self::vector_diff(&left, &e))
            } else if right != e {
                Some(Self::vector_diff(&right, &e))
            } else {
                None
            };
            if let Some(diff) = bad {
                unit = Some(Witness {
                    location: format!("e{i}"),
                    difference: Self::vector_terms(&diff),
                });
                break;
            }
        }
        report.record("alg.unit", unit);

        let mut assoc = None;
        'assoc: for i in 0..d {
            let ei = self.basis_vector(i);
            for j in 0..d {
                let ej = self.basis_vector(j);
                let ij = self.mul_vectors(&ei, &ej);
                for k in 0..d {
                    let ek = self.basis_vector(k);
                    let lhs = self.mul_vectors(&ij, &ek);
                    let rhs = self.mul_vectors(&ei, &self.mul_vectors(&ej, &ek));
                    if lhs != rhs {
                        assoc = Some(Witness {
                            location: format!("(e{i}, e{j}, e{k})"),
                            difference: Self::vector_terms(&Self::vector_diff(&lhs, &rhs)),
                        });
                        break 'assoc;
                    }
                }
            }
        }
        report.record("alg.assoc", assoc);
        report
    }

    /// Graded tensor product `A (x) B` with basis index `i * dim(B) + j` and
    /// `(a (x) b)(c (x) d) = (-1)^{[b][c]} ac (x) bd`.
    pub fn tensor_product(&self, other: &GradedAlgebra) -> Result<GradedAlgebra, AlgebraError> {
        if self.field != other.field {
            return Err(AlgebraError::FieldMismatch {
                what: "tensor product",
                field: other.field,
            });
        }
        let (da, db) = (self.dim(), other.dim());
        let parity: Vec<u8> = (0..da * db)
            .map(|n| (self.parity[n / db] + other.parity[n % db]) % 2)
            .collect();
        let unit: Vec<Scalar> = (0..da * db)
            .map(|n| &self.unit[n / db] * &other.unit[n % db])
            .collect();
        let mut mult = Vec::new();
        for a in 0..da {
            for b in 0..db {
                for c in 0..da {
                    for d in 0..db {
                        let sign = other.parity[b] * self.parity[c];
                        for (ac, x) in self.product(a, c) {
                            for (bd, y) in other.product(b, d) {
                                let mut coeff = x * y;
                                if sign == 1 {
                                    coeff = -coeff;
                                }
                                mult.push((a * db + b, c * db + d, ac * db + bd, coeff));
                            }
                        }
                    }
                }
            }
        }
        GradedAlgebra::new(self.field, parity, unit, mult)
    }
}
