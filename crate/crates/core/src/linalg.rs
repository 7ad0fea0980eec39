//! Dense exact linear algebra over [`Scalar`].

use crate::scalar::{FieldSpec, Scalar};

/// Solve `m * x = rhs` by Gauss-Jordan elimination. Free variables are set
/// to zero. Returns `None` when the system is inconsistent.
pub fn solve(field: FieldSpec, m: &[Vec<Scalar>], rhs: &[Scalar]) -> Option<Vec<Scalar>> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut a: Vec<Vec<Scalar>> = m
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        let inv = a[row][col].inverse().expect("nonzero pivot");
        for x in &mut a[row][col..] {
            *x = &*x * &inv;
        }
        let pivot = a[row].clone();
        for (r, line) in a.iter_mut().enumerate() {
            if r != row && !line[col].is_zero() {
                let factor = line[col].clone();
                for (x, p) in line[col..].iter_mut().zip(&pivot[col..]) {
                    if !p.is_zero() {
                        *x = &*x - &(&factor * p);
                    }
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == rows {
            break;
        }
    }
    if a[row..].iter().any(|r| !r[cols].is_zero()) {
        return None;
    }
    let mut x = vec![Scalar::zero(field); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = a[r][cols].clone();
    }
    Some(x)
}

/// Inverse of a square matrix, or `None` when singular.
pub fn invert_matrix(field: FieldSpec, m: &[Vec<Scalar>]) -> Option<Vec<Vec<Scalar>>> {
    let n = m.len();
    let mut columns = Vec::with_capacity(n);
    for j in 0..n {
        let e: Vec<Scalar> = (0..n)
            .map(|i| if i == j { Scalar::one(field) } else { Scalar::zero(field) })
            .collect();
        columns.push(solve(field, m, &e)?);
    }
    let inv: Vec<Vec<Scalar>> = (0..n)
        .map(|i| (0..n).map(|j| columns[j][i].clone()).collect())
        .collect();
    let product = mat_mul(field, m, &inv);
    let identity = (0..n).all(|i| {
        (0..n).all(|j| {
            if i == j {
                product[i][j].is_one()
            } else {
                product[i][j].is_zero()
            }
        })
    });
    identity.then_some(inv)
}

pub fn mat_mul(field: FieldSpec, a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let inner = b.len();
    let cols = if inner == 0 { 0 } else { b[0].len() };
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let mut acc = Scalar::zero(field);
                    for k in 0..inner {
                        if !row[k].is_zero() && !b[k][j].is_zero() {
                            acc = &acc + &(&row[k] * &b[k][j]);
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Scalar {
        Scalar::from_i64(FieldSpec::Rational, n)
    }

    #[test]
    fn solves_square_system() {
        let m = vec![vec![q(2), q(1)], vec![q(1), q(3)]];
        let x = solve(FieldSpec::Rational, &m, &[q(3), q(5)]).unwrap();
        assert_eq!(x, vec![Scalar::from_ratio(FieldSpec::Rational, 4, 5), Scalar::from_ratio(FieldSpec::Rational, 7, 5)]);
    }

    #[test]
    fn inconsistent_system() {
        let m = vec![vec![q(1), q(1)], vec![q(2), q(2)]];
        assert!(solve(FieldSpec::Rational, &m, &[q(1), q(3)]).is_none());
        assert!(invert_matrix(FieldSpec::Rational, &m).is_none());
    }

    #[test]
    fn inverse_roundtrip() {
        let m = vec![vec![q(1), q(2), q(0)], vec![q(0), q(1), q(4)], vec![q(5), q(6), q(0)]];
        let inv = invert_matrix(FieldSpec::Rational, &m).unwrap();
        let id = mat_mul(FieldSpec::Rational, &inv, &m);
        for (i, row) in id.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                assert_eq!(v.is_one(), i == j);
                assert_eq!(v.is_zero(), i != j);
            }
        }
    }
}
