//! Linear algebra over the prime field `Z_p`.

use num_bigint::BigInt;

use super::IntMatrix;
use crate::error::{Error, Result};

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p < 4 {
        return true;
    }
    if p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    (u128::from(a) * u128::from(b) % u128::from(p)) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat; p prime and a ≠ 0
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// Reduced row echelon form over `Z_p`. Returns the nonzero rows and the
/// pivot column of each.
pub fn rref_mod_p(rows: &[Vec<u64>], p: u64) -> Result<(Vec<Vec<u64>>, Vec<usize>)> {
    check_prime(p)?;
    let mut a: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|&x| x % p).collect()).collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..a.len()).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, pr);
        let inv = inv_mod(a[r][c], p);
        for x in a[r].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let f = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x + p - mul_mod(f, y, p)) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == a.len() {
            break;
        }
    }
    a.truncate(r);
    Ok((a, pivots))
}

pub fn rank_mod_p(rows: &[Vec<u64>], p: u64) -> Result<usize> {
    Ok(rref_mod_p(rows, p)?.1.len())
}

/// A code over `Z_p` in standard form.
///
/// `generator = [I_k | A]` and `parity_check = [-Aᵀ | I_{n-k}]` act on the
/// permuted coordinates: column `j` of either matrix is original coordinate
/// `permutation[j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardForm {
    pub modulus: u64,
    pub generator: Vec<Vec<u64>>,
    pub parity_check: Vec<Vec<u64>>,
    pub permutation: Vec<usize>,
}

impl StandardForm {
    pub fn rank(&self) -> usize {
        self.generator.len()
    }

    pub fn length(&self) -> usize {
        self.permutation.len()
    }

    pub fn generator_matrix(&self) -> Result<IntMatrix> {
        to_matrix(&self.generator)
    }

    pub fn parity_check_matrix(&self) -> Result<IntMatrix> {
        to_matrix(&self.parity_check)
    }

    /// `generator · parity_checkᵀ ≡ 0 (mod p)`.
    pub fn is_consistent(&self) -> bool {
        let p = self.modulus;
        self.generator.iter().all(|g| {
            self.parity_check
                .iter()
                .all(|h| g.iter().zip(h).fold(0u64, |acc, (&a, &b)| (acc + mul_mod(a, b, p)) % p) == 0)
        })
    }

    /// Generator rows mapped back to the original coordinate order.
    pub fn generator_in_original_order(&self) -> Vec<Vec<u64>> {
        self.generator
            .iter()
            .map(|row| {
                let mut out = vec![0; row.len()];
                for (j, &v) in row.iter().enumerate() {
                    out[self.permutation[j]] = v;
                }
                out
            })
            .collect()
    }
}

fn to_matrix(rows: &[Vec<u64>]) -> Result<IntMatrix> {
    let rows: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    IntMatrix::from_rows(&rows)
}

/// Standard form of the span of `gens` over `Z_p`.
pub fn standard_form_prime(gens: &[Vec<u64>], p: u64) -> Result<StandardForm> {
    let n = gens.first().map_or(0, Vec::len);
    if gens.iter().any(|g| g.len() != n) {
        return Err(Error::DimensionMismatch("generators of unequal length".into()));
    }
    let (rref, pivots) = rref_mod_p(gens, p)?;
    let k = pivots.len();
    let mut permutation = pivots.clone();
    permutation.extend((0..n).filter(|c| !pivots.contains(c)));

    let generator: Vec<Vec<u64>> = rref
        .iter()
        .map(|row| permutation.iter().map(|&c| row[c]).collect())
        .collect();
    // generator = [I_k | A]; parity check = [-Aᵀ | I_{n-k}]
    let parity_check = (0..n - k)
        .map(|i| {
            let mut row = vec![0u64; n];
            for (j, g) in generator.iter().enumerate() {
                row[j] = (p - g[k + i]) % p;
            }
            row[k + i] = 1;
            row
        })
        .collect();
    Ok(StandardForm {
        modulus: p,
        generator,
        parity_check,
        permutation,
    })
}
