use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{IntMatrix, RationalVector};
use crate::error::{Error, Result};

/// Exact determinant by Bareiss fraction-free elimination.
pub fn determinant(m: &IntMatrix) -> Result<BigInt> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    Ok(bareiss(m.to_rows()))
}

/// Bareiss on raw rows. The empty matrix has determinant 1.
pub(crate) fn bareiss(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = !sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                // exact division: Sylvester's identity
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign {
        -det
    } else {
        det
    }
}

/// `C[i][j] = (-1)^(i+j) det(m without row i and column j)`.
///
/// Satisfies `mᵀ · C = det(m) · I`.
pub fn cofactor_matrix(m: &IntMatrix) -> Result<IntMatrix> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    IntMatrix::from_fn(n, n, |i, j| {
        let minor = bareiss(m.minor_rows(i, j));
        if (i + j) % 2 == 0 {
            minor
        } else {
            -minor
        }
    })
}

/// The unique rational `y` with `y · m = rhs`, by Cramer's rule.
///
/// The returned denominator is `|det(m)|`.
pub fn solve_exact(m: &IntMatrix, rhs: &[BigInt]) -> Result<RationalVector> {
    let det = determinant(m)?;
    if det.is_zero() {
        return Err(Error::Singular);
    }
    if rhs.len() != m.cols() {
        return Err(Error::DimensionMismatch(format!(
            "right-hand side of length {} for {}x{}",
            rhs.len(),
            m.rows(),
            m.cols()
        )));
    }
    let cof = cofactor_matrix(m)?;
    // y = rhs · adj(m) / det with adj(m) = Cᵀ, so y_i = Σ_j rhs_j C[i][j].
    let numerators = (0..m.rows())
        .map(|i| rhs.iter().zip(cof.row(i)).map(|(r, c)| r * c).sum())
        .collect();
    RationalVector::new(numerators, det)
}
