//! Sparse elements of `H^{(x)n}` with Koszul-sign multiplication.
//!
//! Leg indices are 0-based. A permutation `sigma` given to
//! [`TensorElement::permute`] puts original leg `sigma[k]` at position `k`,
//! so `permute(&[0, 2, 1])` is `Phi_132 = (1 (x) T) Phi_123` and
//! `permute(&[2, 0, 1])` is `Phi_312 = Z (x) X (x) Y`. Note this is the
//! inverse of the more common convention.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use thiserror::Error;

use crate::algebra::GradedAlgebra;
use crate::linalg;
use crate::map::StructureMap;
use crate::report::{Witness, WitnessTerm};
use crate::scalar::{FieldSpec, Scalar};

pub type Word = Vec<usize>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TensorError {
    #[error("elements belong to different algebras")]
    AlgebraMismatch,
    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },
    #[error("invalid permutation {0:?}")]
    InvalidPermutation(Vec<usize>),
    #[error("leg {leg} out of range for arity {arity}")]
    LegOutOfRange { leg: usize, arity: usize },
    #[error("invalid leg positions {positions:?} for arity {arity}")]
    InvalidPositions { positions: Vec<usize>, arity: usize },
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("element is not invertible")]
    Singular,
    #[error("element has a left inverse that is not a right inverse")]
    OneSidedInverse,
    #[error("map has output arity {found}, expected {expected}")]
    MapArity { expected: usize, found: usize },
    #[error("scalar field mismatch")]
    FieldMismatch,
}

/// Element of `H^{(x)n}` as a sparse map from basis words to coefficients.
#[derive(Clone, Debug)]
pub struct TensorElement {
    algebra: Arc<GradedAlgebra>,
    arity: usize,
    terms: BTreeMap<Word, Scalar>,
}

impl PartialEq for TensorElement {
    fn eq(&self, other: &Self) -> bool {
        self.arity == other.arity
            && same_algebra(&self.algebra, &other.algebra)
            && self.terms == other.terms
    }
}

impl Eq for TensorElement {}

pub fn same_algebra(a: &Arc<GradedAlgebra>, b: &Arc<GradedAlgebra>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

fn add_term(terms: &mut BTreeMap<Word, Scalar>, word: Word, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match terms.entry(word) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            let sum = o.get() + &c;
            if sum.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = sum;
            }
        }
    }
}

/// Every word of length `n` over `0..d`, in lexicographic order.
pub fn all_words(d: usize, n: usize) -> Vec<Word> {
    let mut out = vec![Vec::with_capacity(n)];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..d).map(move |i| {
                    let mut v = w.clone();
                    v.push(i);
                    v
                })
            })
            .collect();
    }
    out
}

impl TensorElement {
    pub fn zero(algebra: &Arc<GradedAlgebra>, arity: usize) -> Self {
        TensorElement {
            algebra: Arc::clone(algebra),
            arity,
            terms: BTreeMap::new(),
        }
    }

    /// Arity-0 element.
    pub fn scalar(algebra: &Arc<GradedAlgebra>, s: Scalar) -> Self {
        let mut t = Self::zero(algebra, 0);
        add_term(&mut t.terms, Vec::new(), s);
        t
    }

    /// `1^{(x)n}`.
    pub fn unit(algebra: &Arc<GradedAlgebra>, arity: usize) -> Self {
        let f = algebra.field();
        let mut t = Self::scalar(algebra, Scalar::one(f));
        let u = Self::from_vector(algebra, algebra.unit());
        for _ in 0..arity {
            t = t.tensor(&u);
        }
        t
    }

    pub fn word(algebra: &Arc<GradedAlgebra>, word: Word, coeff: Scalar) -> Self {
        let mut t = Self::zero(algebra, word.len());
        add_term(&mut t.terms, word, coeff);
        t
    }

    pub fn basis(algebra: &Arc<GradedAlgebra>, i: usize) -> Self {
        Self::word(algebra, vec![i], Scalar::one(algebra.field()))
    }

    /// Arity-1 element from a dense coefficient vector.
    pub fn from_vector(algebra: &Arc<GradedAlgebra>, v: &[Scalar]) -> Self {
        let mut t = Self::zero(algebra, 1);
        for (i, c) in v.iter().enumerate() {
            add_term(&mut t.terms, vec![i], c.clone());
        }
        t
    }

    /// Sum of terms; repeated words are added together.
    pub fn from_terms(
        algebra: &Arc<GradedAlgebra>,
        arity: usize,
        terms: impl IntoIterator<Item = (Word, Scalar)>,
    ) -> Result<Self, TensorError> {
        let mut t = Self::zero(algebra, arity);
        let d = algebra.dim();
        for (w, c) in terms {
            if w.len() != arity {
                return Err(TensorError::ArityMismatch {
                    left: arity,
                    right: w.len(),
                });
            }
            if let Some(&index) = w.iter().find(|&&i| i >= d) {
                return Err(TensorError::IndexOutOfRange { index, dim: d });
            }
            if c.field() != algebra.field() {
                return Err(TensorError::FieldMismatch);
            }
            add_term(&mut t.terms, w, c);
        }
        Ok(t)
    }

    pub fn algebra(&self) -> &Arc<GradedAlgebra> {
        &self.algebra
    }

    pub fn field(&self) -> FieldSpec {
        self.algebra.field()
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> &BTreeMap<Word, Scalar> {
        &self.terms
    }

    pub fn coeff(&self, word: &[usize]) -> Scalar {
        self.terms
            .get(word)
            .cloned()
            .unwrap_or_else(|| Scalar::zero(self.field()))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Dense coefficient vector of an arity-1 element.
    pub fn to_vector(&self) -> Vec<Scalar> {
        assert_eq!(self.arity, 1, "to_vector needs arity 1");
        let mut v = self.algebra.zero_vector();
        for (w, c) in &self.terms {
            v[w[0]] = c.clone();
        }
        v
    }

    /// Coefficient of an arity-0 element.
    pub fn to_scalar(&self) -> Scalar {
        assert_eq!(self.arity, 0, "to_scalar needs arity 0");
        self.coeff(&[])
    }

    pub fn word_parity(&self, word: &[usize]) -> u8 {
        word.iter().map(|&i| self.algebra.parity(i)).sum::<u8>() % 2
    }

    /// Parity when homogeneous; zero counts as even.
    pub fn parity(&self) -> Option<u8> {
        let mut it = self.terms.keys().map(|w| self.word_parity(w));
        match it.next() {
            None => Some(0),
            Some(p) => it.all(|q| q == p).then_some(p),
        }
    }

    pub fn is_even(&self) -> bool {
        self.parity() == Some(0)
    }

    fn compatible(&self, other: &Self) -> Result<(), TensorError> {
        if !same_algebra(&self.algebra, &other.algebra) {
            return Err(TensorError::AlgebraMismatch);
        }
        if self.arity != other.arity {
            return Err(TensorError::ArityMismatch {
                left: self.arity,
                right: other.arity,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, TensorError> {
        self.compatible(other)?;
        let mut t = self.clone();
        for (w, c) in &other.terms {
            add_term(&mut t.terms, w.clone(), c.clone());
        }
        Ok(t)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, TensorError> {
        self.compatible(other)?;
        let mut t = self.clone();
        for (w, c) in &other.terms {
            add_term(&mut t.terms, w.clone(), -c);
        }
        Ok(t)
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        let mut t = Self::zero(&self.algebra, self.arity);
        for (w, c) in &self.terms {
            add_term(&mut t.terms, w.clone(), c * s);
        }
        t
    }

    /// Koszul-sign product of two basis words, accumulated into `out`.
    fn mul_words(&self, a: &[usize], b: &[usize], coeff: &Scalar, out: &mut BTreeMap<Word, Scalar>) {
        let alg = &self.algebra;
        let n = a.len();
        // E = sum_{i<j} [b_i][a_j]
        let mut suffix = 0u32;
        let mut e = 0u32;
        for i in (0..n).rev() {
            e += u32::from(alg.parity(b[i])) * suffix;
            suffix += u32::from(alg.parity(a[i]));
        }
        let mut partial: Vec<(Word, Scalar)> = vec![(
            Vec::with_capacity(n),
            if e % 2 == 1 { -coeff } else { coeff.clone() },
        )];
        for i in 0..n {
            let leg = alg.product(a[i], b[i]);
            if leg.is_empty() {
                return;
            }
            let mut next = Vec::with_capacity(partial.len() * leg.len());
            for (w, c) in &partial {
                for (k, x) in leg {
                    let mut w2 = w.clone();
                    w2.push(*k);
                    next.push((w2, c * x));
                }
            }
            partial = next;
        }
        for (w, c) in partial {
            add_term(out, w, c);
        }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, TensorError> {
        self.compatible(other)?;
        let mut terms = BTreeMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                self.mul_words(a, b, &(x * y), &mut terms);
            }
        }
        Ok(TensorElement {
            algebra: Arc::clone(&self.algebra),
            arity: self.arity,
            terms,
        })
    }

    /// Outer product `x (x) y` of arity `n + m`. No sign arises since words
    /// are only concatenated.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut t = Self::zero(&self.algebra, self.arity + other.arity);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                add_term(&mut t.terms, w, x * y);
            }
        }
        t
    }

    /// Apply `T` to legs `k` and `k + 1`.
    pub fn swap_adjacent(&self, k: usize) -> Result<Self, TensorError> {
        if k + 1 >= self.arity {
            return Err(TensorError::LegOutOfRange {
                leg: k + 1,
                arity: self.arity,
            });
        }
        let mut sigma: Vec<usize> = (0..self.arity).collect();
        sigma.swap(k, k + 1);
        self.permute(&sigma)
    }

    /// `T` on an arity-2 element.
    pub fn transpose(&self) -> Self {
        self.swap_adjacent(0).expect("transpose needs arity 2")
    }

    /// Result leg `k` carries original leg `sigma[k]`; every pair of
    /// legs whose order is reversed contributes its Koszul sign.
    pub fn permute(&self, sigma: &[usize]) -> Result<Self, TensorError> {
        let n = self.arity;
        let mut seen = vec![false; n];
        if sigma.len() != n || sigma.iter().any(|&s| s >= n || std::mem::replace(&mut seen[s], true)) {
            return Err(TensorError::InvalidPermutation(sigma.to_vec()));
        }
        let mut t = Self::zero(&self.algebra, n);
        for (w, c) in &self.terms {
            let mut e = 0u32;
            for k in 0..n {
                for l in k + 1..n {
                    if sigma[k] > sigma[l] {
                        e += u32::from(self.algebra.parity(w[sigma[k]]))
                            * u32::from(self.algebra.parity(w[sigma[l]]));
                    }
                }
            }
            let word: Word = sigma.iter().map(|&s| w[s]).collect();
            add_term(&mut t.terms, word, if e % 2 == 1 { -c } else { c.clone() });
        }
        Ok(t)
    }

    /// Place the legs of `self` at the strictly increasing `positions` of an
    /// arity-`n` element, with the unit in every other leg.
    pub fn embed(&self, positions: &[usize], n: usize) -> Result<Self, TensorError> {
        let valid = positions.len() == self.arity
            && positions.windows(2).all(|p| p[0] < p[1])
            && positions.iter().all(|&p| p < n);
        if !valid {
            return Err(TensorError::InvalidPositions {
                positions: positions.to_vec(),
                arity: n,
            });
        }
        let unit: Vec<(usize, Scalar)> = self
            .algebra
            .unit()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, c.clone()))
            .collect();
        let mut t = Self::zero(&self.algebra, n);
        for (w, c) in &self.terms {
            let mut partial: Vec<(Word, Scalar)> = vec![(Vec::with_capacity(n), c.clone())];
            let mut next_leg = 0;
            for pos in 0..n {
                if next_leg < positions.len() && positions[next_leg] == pos {
                    for (word, _) in &mut partial {
                        word.push(w[next_leg]);
                    }
                    next_leg += 1;
                } else {
                    let mut next = Vec::with_capacity(partial.len() * unit.len());
                    for (word, x) in &partial {
                        for (i, u) in &unit {
                            let mut w2 = word.clone();
                            w2.push(*i);
                            next.push((w2, x * u));
                        }
                    }
                    partial = next;
                }
            }
            for (word, x) in partial {
                add_term(&mut t.terms, word, x);
            }
        }
        Ok(t)
    }

    /// Apply an even structure map to one leg.
    pub fn apply_map(&self, leg: usize, f: &StructureMap) -> Result<Self, TensorError> {
        if leg >= self.arity {
            return Err(TensorError::LegOutOfRange {
                leg,
                arity: self.arity,
            });
        }
        let n = self.arity - 1 + f.out_arity();
        let mut t = Self::zero(&self.algebra, n);
        for (w, c) in &self.terms {
            for (iw, ic) in &f.image(w[leg]).terms {
                let mut word = Vec::with_capacity(n);
                word.extend_from_slice(&w[..leg]);
                word.extend_from_slice(iw);
                word.extend_from_slice(&w[leg + 1..]);
                add_term(&mut t.terms, word, c * ic);
            }
        }
        Ok(t)
    }

    /// Apply `f` to every leg.
    pub fn apply_map_all(&self, f: &StructureMap) -> Result<Self, TensorError> {
        if f.out_arity() != 1 {
            return Err(TensorError::MapArity {
                expected: 1,
                found: f.out_arity(),
            });
        }
        let mut t = self.clone();
        for leg in 0..self.arity {
            t = t.apply_map(leg, f)?;
        }
        Ok(t)
    }

    /// Multiply legs `leg` and `leg + 1` together.
    pub fn contract(&self, leg: usize) -> Result<Self, TensorError> {
        if leg + 1 >= self.arity {
            return Err(TensorError::LegOutOfRange {
                leg: leg + 1,
                arity: self.arity,
            });
        }
        let mut t = Self::zero(&self.algebra, self.arity - 1);
        for (w, c) in &self.terms {
            for (k, x) in self.algebra.product(w[leg], w[leg + 1]) {
                let mut word = Vec::with_capacity(self.arity - 1);
                word.extend_from_slice(&w[..leg]);
                word.push(*k);
                word.extend_from_slice(&w[leg + 2..]);
                add_term(&mut t.terms, word, c * x);
            }
        }
        Ok(t)
    }

    /// Two-sided inverse in `H^{(x)n}`, found by solving `Y x = 1` and then
    /// checking `x Y = 1`.
    pub fn invert(&self) -> Result<Self, TensorError> {
        let field = self.field();
        if self.arity == 0 {
            let s = self.to_scalar().inverse().map_err(|_| TensorError::Singular)?;
            return Ok(Self::scalar(&self.algebra, s));
        }
        let words = all_words(self.algebra.dim(), self.arity);
        let index: BTreeMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let size = words.len();
        let mut matrix = vec![vec![Scalar::zero(field); size]; size];
        let one = Scalar::one(field);
        for (col, w) in words.iter().enumerate() {
            let mut prod = BTreeMap::new();
            for (b, y) in &self.terms {
                self.mul_words(w, b, &(&one * y), &mut prod);
            }
            for (pw, c) in prod {
                matrix[index[&pw]][col] = c;
            }
        }
        let unit = Self::unit(&self.algebra, self.arity);
        let rhs: Vec<Scalar> = words.iter().map(|w| unit.coeff(w)).collect();
        let y = linalg::solve(field, &matrix, &rhs).ok_or(TensorError::Singular)?;
        let inverse = Self::from_terms(&self.algebra, self.arity, words.into_iter().zip(y))?;
        if &inverse * self != unit {
            return Err(TensorError::Singular);
        }
        if self * &inverse != unit {
            return Err(TensorError::OneSidedInverse);
        }
        Ok(inverse)
    }

    pub fn witness_terms(&self) -> Vec<WitnessTerm> {
        self.terms
            .iter()
            .map(|(w, c)| WitnessTerm {
                word: w.clone(),
                coeff: c.to_string(),
            })
            .collect()
    }
}

/// `None` when equal, otherwise a witness carrying `lhs - rhs`.
pub fn compare(lhs: &TensorElement, rhs: &TensorElement, location: impl Into<String>) -> Option<Witness> {
    if lhs == rhs {
        return None;
    }
    let difference = match lhs.try_sub(rhs) {
        Ok(d) => d.witness_terms(),
        Err(e) => vec![WitnessTerm {
            word: Vec::new(),
            coeff: e.to_string(),
        }],
    };
    Some(Witness {
        location: location.into(),
        difference,
    })
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (w, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}")?;
            if !w.is_empty() {
                let legs: Vec<String> = w.iter().map(|i| format!("e{i}")).collect();
                write!(f, " {}", legs.join("⊗"))?;
            }
        }
        Ok(())
    }
}

impl Add for &TensorElement {
    type Output = TensorElement;
    fn add(self, rhs: &TensorElement) -> TensorElement {
        self.try_add(rhs).expect("incompatible tensor elements")
    }
}

impl Sub for &TensorElement {
    type Output = TensorElement;
    fn sub(self, rhs: &TensorElement) -> TensorElement {
        self.try_sub(rhs).expect("incompatible tensor elements")
    }
}

impl Mul for &TensorElement {
    type Output = TensorElement;
    fn mul(self, rhs: &TensorElement) -> TensorElement {
        self.try_mul(rhs).expect("incompatible tensor elements")
    }
}

impl Neg for &TensorElement {
    type Output = TensorElement;
    fn neg(self) -> TensorElement {
        self.scale(&Scalar::from_i64(self.field(), -1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::tests::{exterior, functions_on_z2, q};

    fn ext() -> Arc<GradedAlgebra> {
        Arc::new(exterior())
    }

    fn w(a: &Arc<GradedAlgebra>, word: &[usize], c: i64) -> TensorElement {
        TensorElement::word(a, word.to_vec(), q(c))
    }

    #[test]
    fn koszul_product_of_odd_legs() {
        let a = ext();
        let lhs = &w(&a, &[0, 1], 1) * &w(&a, &[1, 0], 1);
        assert_eq!(lhs, w(&a, &[1, 1], -1));
        let sq = &w(&a, &[1, 1], 1) * &w(&a, &[1, 1], 1);
        assert!(sq.is_zero());
    }

    #[test]
    fn unit_is_neutral() {
        let a = ext();
        let x = &w(&a, &[1, 0, 1], 3) + &w(&a, &[0, 1, 1], -2);
        let u = TensorElement::unit(&a, 3);
        assert_eq!(&u * &x, x);
        assert_eq!(&x * &u, x);
    }

    #[test]
    fn twist_map_sign() {
        let a = ext();
        assert_eq!(w(&a, &[1, 1], 1).transpose(), w(&a, &[1, 1], -1));
        assert_eq!(w(&a, &[0, 1], 1).transpose(), w(&a, &[1, 0], 1));
        let x = &w(&a, &[1, 0, 1], 1) + &w(&a, &[0, 0, 0], 1);
        assert_eq!(x.permute(&[0, 1, 2]).unwrap(), x);
    }

    #[test]
    fn permutation_matches_worked_examples() {
        // Phi_312 = Z (x) X (x) Y with sign [Y][Z] + [X][Z]
        let a = ext();
        let x = w(&a, &[1, 0, 1], 1);
        assert_eq!(x.permute(&[2, 0, 1]).unwrap(), w(&a, &[1, 1, 0], -1));
        let y = w(&a, &[1, 1, 0], 1);
        // Phi_231 = Y (x) Z (x) X with sign [X][Y] + [X][Z]
        assert_eq!(y.permute(&[1, 2, 0]).unwrap(), w(&a, &[1, 0, 1], -1));
        // (1 (x) T)(T (x) 1) agrees with the direct permutation
        let composed = y.swap_adjacent(0).unwrap().swap_adjacent(1).unwrap();
        assert_eq!(composed, y.permute(&[1, 2, 0]).unwrap());
        assert!(x.permute(&[0, 0, 1]).is_err());
    }

    #[test]
    fn embedding_inserts_units() {
        let h = Arc::new(functions_on_z2());
        let r = w(&h, &[1, 1], 1);
        let e = r.embed(&[0, 2], 3).unwrap();
        assert_eq!(e, &w(&h, &[1, 0, 1], 1) + &w(&h, &[1, 1, 1], 1));
        let s = TensorElement::scalar(&h, q(5));
        assert_eq!(s.embed(&[], 2).unwrap(), TensorElement::unit(&h, 2).scale(&q(5)));
        assert!(r.embed(&[2, 0], 3).is_err());
    }

    #[test]
    fn phi_236_inverse_convention() {
        // Embedding at (2,3,6) equals (1^3 (x) (1 (x) T)(T (x) 1))(1 (x) x (x) 1^2)
        let a = ext();
        let x = &w(&a, &[1, 1, 0], 1) + &w(&a, &[1, 0, 1], 2);
        let direct = x.embed(&[1, 2, 5], 6).unwrap();
        let mut via = x.embed(&[1, 2, 3], 6).unwrap();
        via = via.swap_adjacent(3).unwrap().swap_adjacent(4).unwrap();
        assert_eq!(direct, via);
    }

    #[test]
    fn contraction_and_tensor() {
        let a = ext();
        let x = w(&a, &[0, 1], 2);
        assert_eq!(x.contract(0).unwrap(), w(&a, &[1], 2));
        assert_eq!(w(&a, &[1, 1], 1).contract(0).unwrap(), TensorElement::zero(&a, 1));
        assert_eq!(w(&a, &[1], 1).tensor(&w(&a, &[0], 3)), w(&a, &[1, 0], 3));
    }

    #[test]
    fn inversion_examples() {
        let a = ext();
        let f = &TensorElement::unit(&a, 2) + &w(&a, &[1, 1], 1);
        let expected = &TensorElement::unit(&a, 2) - &w(&a, &[1, 1], 1);
        assert_eq!(f.invert().unwrap(), expected);
        assert_eq!(TensorElement::unit(&a, 3).invert().unwrap(), TensorElement::unit(&a, 3));
        assert_eq!(w(&a, &[1, 1], 1).invert(), Err(TensorError::Singular));
        let s = TensorElement::scalar(&a, q(4));
        assert_eq!(s.invert().unwrap(), TensorElement::scalar(&a, Scalar::from_ratio(FieldSpec::Rational, 1, 4)));
    }

    #[test]
    fn parity_of_elements() {
        let a = ext();
        assert_eq!(w(&a, &[1, 0], 1).parity(), Some(1));
        assert_eq!(w(&a, &[1, 1], 1).parity(), Some(0));
        assert_eq!((&w(&a, &[1, 0], 1) + &w(&a, &[0, 0], 1)).parity(), None);
        assert_eq!(TensorElement::zero(&a, 2).parity(), Some(0));
    }

    #[test]
    fn display() {
        let a = ext();
        let x = &w(&a, &[0, 1], 1) + &w(&a, &[1, 1], -2);
        assert_eq!(x.to_string(), "1 e0⊗e1 + -2 e1⊗e1");
        assert_eq!(TensorElement::zero(&a, 1).to_string(), "0");
    }
}
