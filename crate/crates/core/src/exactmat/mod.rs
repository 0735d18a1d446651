//! Exact integer and modular linear algebra.
//!
//! Matrices hold arbitrary-precision integers. Determinants and cofactors use
//! fraction-free elimination; kernels and images modulo an integer are read
//! off a diagonalization built from unimodular row and column operations, so
//! they are enumerated structurally rather than by scanning `Z_m^n`.

mod det;
mod modular;
mod prime;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub use det::{cofactor_matrix, determinant, solve_exact};
pub use modular::{image_basis_mod, kernel_basis_mod, kernel_mod, ModBasis};
pub use prime::{is_prime, rank_mod_p, rref_mod_p, standard_form_prime, StandardForm};

/// Dense row-major matrix of arbitrary-precision integers, at least 1x1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyMatrix { rows, cols });
        }
        if entries.len() != rows * cols {
            return Err(Error::EntryCount {
                expected: rows * cols,
                actual: entries.len(),
            });
        }
        Ok(IntMatrix { rows, cols, entries })
    }

    /// Builds a matrix from equal-length rows.
    pub fn from_rows<T>(rows: &[Vec<T>]) -> Result<Self>
    where
        T: Clone + Into<BigInt>,
    {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let entries = rows.iter().flat_map(|r| r.iter().cloned().map(Into::into)).collect();
        IntMatrix::new(rows.len(), cols, entries)
    }

    pub(crate) fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        IntMatrix::new(rows, cols, entries)
    }

    pub fn identity(n: usize) -> Result<Self> {
        IntMatrix::from_fn(n, n, |i, j| if i == j { BigInt::one() } else { BigInt::zero() })
    }

    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        IntMatrix::from_fn(rows, cols, |_, _| BigInt::zero())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Rows as `i64`, or `None` if some entry does not fit.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(ToPrimitive::to_i64).collect())
            .collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        IntMatrix {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        IntMatrix::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).map(|k| self.get(i, k) * other.get(k, j)).sum()
        })
    }

    pub fn scaled(&self, factor: &BigInt) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * factor).collect(),
        }
    }

    /// Row vector times matrix.
    pub fn left_mul_vec(&self, x: &[BigInt]) -> Result<Vec<BigInt>> {
        if x.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} times {}x{}",
                x.len(),
                self.rows,
                self.cols
            )));
        }
        Ok((0..self.cols)
            .map(|j| x.iter().enumerate().map(|(i, xi)| xi * self.get(i, j)).sum())
            .collect())
    }

    /// The matrix with column `j` (0-based) removed.
    pub fn without_column(&self, j: usize) -> Result<IntMatrix> {
        if j >= self.cols {
            return Err(Error::DimensionMismatch(format!("column {j} out of range")));
        }
        let cols = self.cols - 1;
        IntMatrix::from_fn(self.rows, cols, |r, c| {
            self.get(r, if c < j { c } else { c + 1 }).clone()
        })
    }

    /// The matrix with the columns selected by `keep` (0-based, in order).
    pub fn select_columns(&self, keep: &[usize]) -> Result<IntMatrix> {
        if keep.iter().any(|&j| j >= self.cols) {
            return Err(Error::DimensionMismatch("column index out of range".into()));
        }
        IntMatrix::from_fn(self.rows, keep.len(), |r, c| self.get(r, keep[c]).clone())
    }

    /// `[self | 1]`: the matrix with a column of ones appended.
    pub fn with_ones_column(&self) -> IntMatrix {
        let cols = self.cols + 1;
        let mut entries = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            entries.extend(self.row(i).iter().cloned());
            entries.push(BigInt::one());
        }
        IntMatrix {
            rows: self.rows,
            cols,
            entries,
        }
    }

    /// Entries of the minor obtained by deleting row `i` and column `j`; may be 0x0.
    pub(crate) fn minor_rows(&self, i: usize, j: usize) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .filter(|&r| r != i)
            .map(|r| {
                (0..self.cols)
                    .filter(|&c| c != j)
                    .map(|c| self.get(r, c).clone())
                    .collect()
            })
            .collect()
    }

    pub fn max_abs(&self) -> BigInt {
        self.entries.iter().map(Signed::abs).max().unwrap_or_else(BigInt::zero)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// A rational vector `numerators / denominator` with a positive denominator.
///
/// The representation is not reduced; equality compares cross-multiplied.
#[derive(Clone, Debug)]
pub struct RationalVector {
    numerators: Vec<BigInt>,
    denominator: BigInt,
}

impl RationalVector {
    pub fn new(numerators: Vec<BigInt>, denominator: BigInt) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::Singular);
        }
        let (numerators, denominator) = if denominator.is_negative() {
            (numerators.into_iter().map(|x| -x).collect(), -denominator)
        } else {
            (numerators, denominator)
        };
        Ok(RationalVector {
            numerators,
            denominator,
        })
    }

    pub fn numerators(&self) -> &[BigInt] {
        &self.numerators
    }

    pub fn denominator(&self) -> &BigInt {
        &self.denominator
    }

    pub fn len(&self) -> usize {
        self.numerators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.numerators.is_empty()
    }
}

impl PartialEq for RationalVector {
    fn eq(&self, other: &Self) -> bool {
        self.len() == other.len()
            && self
                .numerators
                .iter()
                .zip(&other.numerators)
                .all(|(a, b)| a * &other.denominator == b * &self.denominator)
    }
}

impl Eq for RationalVector {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_and_ragged() {
        assert!(IntMatrix::new(0, 2, vec![]).is_err());
        assert!(IntMatrix::from_rows(&[vec![1i64, 2], vec![3]]).is_err());
        assert!(IntMatrix::new(2, 2, vec![BigInt::one()]).is_err());
    }

    #[test]
    fn ones_column_and_deletion() {
        let m = IntMatrix::from_rows(&[vec![1i64, 2, 3], vec![4, 5, 6]]).unwrap();
        let d = m.without_column(1).unwrap();
        assert_eq!(d, IntMatrix::from_rows(&[vec![1i64, 3], vec![4, 6]]).unwrap());
        let a = d.with_ones_column();
        assert_eq!(a, IntMatrix::from_rows(&[vec![1i64, 3, 1], vec![4, 6, 1]]).unwrap());
        assert_eq!(m.transpose().transpose(), m);
    }

    #[test]
    fn rational_vector_equality_is_cross_multiplied() {
        let a = RationalVector::new(vec![1.into(), 2.into()], 3.into()).unwrap();
        let b = RationalVector::new(vec![(-2).into(), (-4).into()], (-6).into()).unwrap();
        assert_eq!(a, b);
        assert_eq!(b.denominator(), &BigInt::from(6));
    }
}
