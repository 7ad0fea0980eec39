//! Exact scalars: arbitrary-precision rationals and elements of cyclotomic
//! fields `Q(zeta_n)`.
//!
//! Cyclotomic elements are stored as coefficient vectors of length `phi(n)`,
//! fully reduced modulo the n-th cyclotomic polynomial, so two equal values
//! always have identical representations. Every equality test in the crate
//! relies on that.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num::{BigInt, BigRational, One, Zero};
use thiserror::Error;

/// Arbitrary-precision rational in lowest terms with positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: FieldSpec, right: FieldSpec },
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero denominator in \"{0}\"")]
    ZeroDenominator(String),
    #[error("malformed scalar \"{0}\"")]
    Malformed(String),
    #[error("cyclotomic order must be at least 1")]
    InvalidOrder,
}

/// The single field every scalar of a document lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rational,
    Cyclotomic(u32),
}

impl FieldSpec {
    pub fn validate(self) -> Result<Self, ScalarError> {
        match self {
            FieldSpec::Cyclotomic(0) => Err(ScalarError::InvalidOrder),
            other => Ok(other),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "Q"),
            FieldSpec::Cyclotomic(n) => write!(f, "Q(zeta_{n})"),
        }
    }
}

/// Euler's totient.
pub fn euler_phi(n: u32) -> usize {
    let mut n = n as u64;
    let mut result = n;
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as usize
}

fn cyclotomic_cache() -> &'static Mutex<HashMap<u32, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients (constant term first) of the monic integer polynomial `Phi_n`.
pub fn cyclotomic_polynomial(n: u32) -> Arc<Vec<i64>> {
    assert!(n >= 1, "cyclotomic order must be positive");
    if let Some(p) = cyclotomic_cache().lock().expect("cache poisoned").get(&n) {
        return Arc::clone(p);
    }
    // x^n - 1 divided by Phi_d for every proper divisor d.
    let mut poly = vec![0i64; n as usize + 1];
    poly[0] = -1;
    poly[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            let divisor = cyclotomic_polynomial(d);
            poly = divide_monic_exact(&poly, &divisor);
        }
    }
    let poly = Arc::new(poly);
    cyclotomic_cache()
        .lock()
        .expect("cache poisoned")
        .insert(n, Arc::clone(&poly));
    poly
}

fn divide_monic_exact(dividend: &[i64], divisor: &[i64]) -> Vec<i64> {
    let m = divisor.len() - 1;
    let mut rem = dividend.to_vec();
    let qlen = dividend.len() - m;
    let mut quotient = vec![0i64; qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + m];
        quotient[k] = c;
        if c != 0 {
            for (i, d) in divisor.iter().enumerate() {
                rem[k + i] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quotient
}

/// Element of `Q(zeta_n)` as a polynomial in `zeta_n` of degree `< phi(n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclotomicScalar {
    order: u32,
    coeffs: Vec<Rational>,
}

/// Reduce a rational polynomial (constant term first) modulo `Phi_n`.
pub fn cyclotomic_reduce(poly: &[Rational], n: u32) -> CyclotomicScalar {
    let modulus = cyclotomic_polynomial(n);
    let m = modulus.len() - 1;
    let mut work: Vec<Rational> = poly.to_vec();
    if work.len() < m {
        work.resize(m, Rational::zero());
    }
    for k in (m..work.len()).rev() {
        if work[k].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut work[k], Rational::zero());
        for (i, mi) in modulus.iter().take(m).enumerate() {
            if *mi != 0 {
                work[k - m + i] -= &c * Rational::from_integer(BigInt::from(*mi));
            }
        }
    }
    work.truncate(m);
    CyclotomicScalar {
        order: n,
        coeffs: work,
    }
}

impl CyclotomicScalar {
    pub fn zero(order: u32) -> Self {
        CyclotomicScalar {
            order,
            coeffs: vec![Rational::zero(); euler_phi(order)],
        }
    }

    pub fn from_rational(order: u32, q: Rational) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = q;
        s
    }

    /// `zeta_n^k`.
    pub fn zeta_power(order: u32, k: u32) -> Self {
        let mut poly = vec![Rational::zero(); k as usize + 1];
        poly[k as usize] = Rational::one();
        cyclotomic_reduce(&poly, order)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn add(&self, other: &Self) -> Self {
        CyclotomicScalar {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    fn sub(&self, other: &Self) -> Self {
        CyclotomicScalar {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    fn neg(&self) -> Self {
        CyclotomicScalar {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    fn mul(&self, other: &Self) -> Self {
        let len = self.coeffs.len() + other.coeffs.len() - 1;
        let mut prod = vec![Rational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        cyclotomic_reduce(&prod, self.order)
    }

    /// Inverse by the extended Euclidean algorithm against `Phi_n`.
    pub fn inverse(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let modulus: Vec<Rational> = cyclotomic_polynomial(self.order)
            .iter()
            .map(|&c| Rational::from_integer(BigInt::from(c)))
            .collect();
        let mut r0 = modulus;
        let mut r1 = trim(self.coeffs.clone());
        let mut s0: Vec<Rational> = Vec::new();
        let mut s1: Vec<Rational> = vec![Rational::one()];
        while !r1.is_empty() {
            let (q, r) = poly_divrem(&r0, &r1);
            let next_s = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, next_s);
        }
        // Phi_n is irreducible, so the gcd is a nonzero constant.
        debug_assert_eq!(r0.len(), 1);
        let scale = r0[0].recip();
        let scaled: Vec<Rational> = s0.iter().map(|c| c * &scale).collect();
        Ok(cyclotomic_reduce(&scaled, self.order))
    }
}

fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let len = a.len().max(b.len());
    let zero = Rational::zero();
    trim(
        (0..len)
            .map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero))
            .collect(),
    )
}

fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = trim(a.to_vec());
    let db = b.len() - 1;
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let lead = b[db].recip();
    let mut q = vec![Rational::zero(); rem.len() - db];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let c = rem.last().expect("nonempty") * &lead;
        for (i, bi) in b.iter().enumerate() {
            rem[shift + i] -= &c * bi;
        }
        q[shift] = c;
        rem = trim(rem);
    }
    (trim(q), rem)
}

/// An exact field element, rational or cyclotomic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(Rational),
    Cyclotomic(CyclotomicScalar),
}

impl Scalar {
    pub fn zero(field: FieldSpec) -> Self {
        match field {
            FieldSpec::Rational => Scalar::Rational(Rational::zero()),
            FieldSpec::Cyclotomic(n) => Scalar::Cyclotomic(CyclotomicScalar::zero(n)),
        }
    }

    pub fn one(field: FieldSpec) -> Self {
        Self::from_rational(field, Rational::one())
    }

    pub fn from_i64(field: FieldSpec, value: i64) -> Self {
        Self::from_rational(field, Rational::from_integer(BigInt::from(value)))
    }

    pub fn from_ratio(field: FieldSpec, numer: i64, denom: i64) -> Self {
        Self::from_rational(
            field,
            Rational::new(BigInt::from(numer), BigInt::from(denom)),
        )
    }

    pub fn from_rational(field: FieldSpec, q: Rational) -> Self {
        match field {
            FieldSpec::Rational => Scalar::Rational(q),
            FieldSpec::Cyclotomic(n) => Scalar::Cyclotomic(CyclotomicScalar::from_rational(n, q)),
        }
    }

    /// `zeta_n^k`; only meaningful in a cyclotomic field.
    pub fn zeta_power(field: FieldSpec, k: u32) -> Result<Self, ScalarError> {
        match field {
            FieldSpec::Rational => Err(ScalarError::FieldMismatch {
                left: field,
                right: FieldSpec::Cyclotomic(0),
            }),
            FieldSpec::Cyclotomic(n) => Ok(Scalar::Cyclotomic(CyclotomicScalar::zeta_power(n, k))),
        }
    }

    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rational,
            Scalar::Cyclotomic(c) => FieldSpec::Cyclotomic(c.order),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Cyclotomic(c) => c.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == Scalar::one(self.field())
    }

    /// The value as a rational, if it lies in `Q`.
    pub fn as_rational(&self) -> Option<Rational> {
        match self {
            Scalar::Rational(q) => Some(q.clone()),
            Scalar::Cyclotomic(c) => {
                if c.coeffs.iter().skip(1).all(Zero::is_zero) {
                    Some(c.coeffs[0].clone())
                } else {
                    None
                }
            }
        }
    }

    fn same_field(&self, other: &Self) -> Result<(), ScalarError> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(ScalarError::FieldMismatch {
                left: self.field(),
                right: other.field(),
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, ScalarError> {
        self.same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Cyclotomic(a), Scalar::Cyclotomic(b)) => Scalar::Cyclotomic(a.add(b)),
            _ => unreachable!(),
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, ScalarError> {
        self.same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Cyclotomic(a), Scalar::Cyclotomic(b)) => Scalar::Cyclotomic(a.sub(b)),
            _ => unreachable!(),
        })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, ScalarError> {
        self.same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Cyclotomic(a), Scalar::Cyclotomic(b)) => Scalar::Cyclotomic(a.mul(b)),
            _ => unreachable!(),
        })
    }

    pub fn inverse(&self) -> Result<Self, ScalarError> {
        match self {
            Scalar::Rational(q) if q.is_zero() => Err(ScalarError::DivisionByZero),
            Scalar::Rational(q) => Ok(Scalar::Rational(q.recip())),
            Scalar::Cyclotomic(c) => c.inverse().map(Scalar::Cyclotomic),
        }
    }

    /// Parse the text encoding: `"p/q"` or `"p"` for rationals, and
    /// `"[c0, c1, ...]"` (coefficient of `zeta_n^k` at index k) for cyclotomic
    /// fields. A bare rational is also accepted in a cyclotomic field.
    pub fn parse(text: &str, field: FieldSpec) -> Result<Self, ScalarError> {
        let t = text.trim();
        match field {
            FieldSpec::Rational => parse_rational(t).map(Scalar::Rational),
            FieldSpec::Cyclotomic(n) => {
                if let Some(inner) = t.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
                    let parts: Vec<Rational> = if inner.trim().is_empty() {
                        Vec::new()
                    } else {
                        inner
                            .split(',')
                            .map(|p| parse_rational(p.trim()))
                            .collect::<Result<_, _>>()?
                    };
                    Ok(Scalar::Cyclotomic(cyclotomic_reduce(&parts, n)))
                } else {
                    parse_rational(t).map(|q| Scalar::from_rational(field, q))
                }
            }
        }
    }
}

/// Strict rational parser: optional `-`, decimal digits, optional `/digits`.
pub fn parse_rational(text: &str) -> Result<Rational, ScalarError> {
    let malformed = || ScalarError::Malformed(text.to_string());
    let valid_int = |s: &str, signed: bool| {
        let digits = if signed { s.strip_prefix('-').unwrap_or(s) } else { s };
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    if !valid_int(num, true) {
        return Err(malformed());
    }
    let numer = BigInt::from_str(num).map_err(|_| malformed())?;
    let denom = match den {
        None => BigInt::one(),
        Some(d) => {
            if !valid_int(d, false) {
                return Err(malformed());
            }
            BigInt::from_str(d).map_err(|_| malformed())?
        }
    };
    if denom.is_zero() {
        return Err(ScalarError::ZeroDenominator(text.to_string()));
    }
    Ok(Rational::new(numer, denom))
}

pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => f.write_str(&format_rational(q)),
            Scalar::Cyclotomic(c) => {
                let parts: Vec<String> = c.coeffs.iter().map(format_rational).collect();
                write!(f, "[{}]", parts.join(", "))
            }
        }
    }
}

// Operators panic on field mismatch.
impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.checked_add(rhs).expect("scalar field mismatch")
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.checked_sub(rhs).expect("scalar field mismatch")
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.checked_mul(rhs).expect("scalar field mismatch")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Cyclotomic(c) => Scalar::Cyclotomic(c.neg()),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}
