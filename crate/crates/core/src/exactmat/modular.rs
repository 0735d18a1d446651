//! Kernels and images of integer matrices acting on `Z_m^n` by `x ↦ x·A`.
//!
//! The matrix is diagonalized modulo `m` as `U·A·V ≡ D` with `U`, `V`
//! products of unimodular integer row and column operations (swaps,
//! subtractions and 2x2 Bézout steps). Only `gcd(d_i, m)` matters for the
//! kernel, so no inverse of a non-unit is ever needed.

use std::ops::ControlFlow;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::IntMatrix;
use crate::error::{Error, Result};
use crate::limits::Limits;

/// Largest modulus handled; keeps every product of two reduced entries and a
/// Bézout coefficient inside `i128`.
const MAX_MODULUS: u64 = 1 << 62;

/// A subgroup of `Z_m^n` written as an internal direct sum of cyclic pieces.
///
/// Every element is `Σ t_i·g_i (mod m)` for exactly one choice of
/// `0 <= t_i < order_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModBasis {
    length: usize,
    modulus: u64,
    generators: Vec<Vec<u64>>,
    orders: Vec<u64>,
}

impl ModBasis {
    pub(crate) fn from_parts(length: usize, modulus: u64, generators: Vec<Vec<u64>>, orders: Vec<u64>) -> Self {
        debug_assert_eq!(generators.len(), orders.len());
        ModBasis {
            length,
            modulus,
            generators,
            orders,
        }
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn generators(&self) -> &[Vec<u64>] {
        &self.generators
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn cardinality(&self) -> BigUint {
        self.orders.iter().map(|&o| BigUint::from(o)).product()
    }

    /// Cardinality if it fits in a `u64`.
    pub fn cardinality_u64(&self) -> Option<u64> {
        self.cardinality().to_u64()
    }

    fn check_size(&self, what: &'static str, limit: u64) -> Result<u64> {
        match self.cardinality_u64() {
            Some(c) if c <= limit => Ok(c),
            _ => Err(Error::guard(what, self.cardinality(), limit)),
        }
    }

    /// Visits every element once, in mixed-radix order of the coefficients.
    ///
    /// Stepping a coefficient adds its generator; wrapping it around has added
    /// the generator `order` times, which is zero, so nothing is undone.
    pub fn try_for_each<B>(&self, mut f: impl FnMut(&[u64]) -> ControlFlow<B>) -> Option<B> {
        let m = self.modulus;
        let mut x = vec![0u64; self.length];
        let mut digits = vec![0u64; self.orders.len()];
        loop {
            if let ControlFlow::Break(b) = f(&x) {
                return Some(b);
            }
            let mut i = 0;
            loop {
                if i == digits.len() {
                    return None;
                }
                for (xk, gk) in x.iter_mut().zip(&self.generators[i]) {
                    let s = *xk + *gk;
                    *xk = if s >= m { s - m } else { s };
                }
                digits[i] += 1;
                if digits[i] < self.orders[i] {
                    break;
                }
                digits[i] = 0;
                i += 1;
            }
        }
    }

    pub fn for_each(&self, mut f: impl FnMut(&[u64])) {
        self.try_for_each::<()>(|x| {
            f(x);
            ControlFlow::Continue(())
        });
    }

    /// All elements in lexicographic order, subject to `limit`.
    pub fn enumerate_sorted(&self, limit: u64) -> Result<Vec<Vec<u64>>> {
        let count = self.check_size("subgroup enumeration", limit)?;
        let mut out = Vec::with_capacity(count as usize);
        self.for_each(|x| out.push(x.to_vec()));
        out.sort_unstable();
        Ok(out)
    }
}

/// Result of diagonalizing a matrix modulo `m`: `U·A·V ≡ D`.
struct Diagonalization {
    modulus: i128,
    diag: Vec<i128>,
    left: Vec<Vec<i128>>,
    right_inv: Vec<Vec<i128>>,
}

fn reduce(v: i128, m: i128) -> i128 {
    v.rem_euclid(m)
}

fn check_modulus(modulus: u64) -> Result<i128> {
    if modulus < 2 {
        return Err(Error::InvalidModulus(modulus));
    }
    if modulus > MAX_MODULUS {
        return Err(Error::Overflow(format!("modulus {modulus}")));
    }
    Ok(modulus as i128)
}

fn reduced_entries(a: &IntMatrix, m: i128) -> Vec<Vec<i128>> {
    let bm = BigInt::from(m);
    (0..a.rows())
        .map(|i| {
            a.row(i)
                .iter()
                .map(|e| e.mod_floor(&bm).to_i128().expect("reduced below modulus"))
                .collect()
        })
        .collect()
}

fn identity(n: usize) -> Vec<Vec<i128>> {
    (0..n).map(|i| (0..n).map(|j| i128::from(i == j)).collect()).collect()
}

/// Replaces rows `(p, q)` of `rows` by `(a·p + b·q, c·p + d·q)` mod `m`.
fn combine_rows(rows: &mut [Vec<i128>], p: usize, q: usize, coef: [i128; 4], m: i128) {
    let [a, b, c, d] = coef;
    for k in 0..rows[p].len() {
        let (x, y) = (rows[p][k], rows[q][k]);
        rows[p][k] = reduce(a * x + b * y, m);
        rows[q][k] = reduce(c * x + d * y, m);
    }
}

fn combine_cols(rows: &mut [Vec<i128>], p: usize, q: usize, coef: [i128; 4], m: i128) {
    let [a, b, c, d] = coef;
    for row in rows.iter_mut() {
        let (x, y) = (row[p], row[q]);
        row[p] = reduce(a * x + b * y, m);
        row[q] = reduce(c * x + d * y, m);
    }
}

/// Determinant-one 2x2 step `[a, b, c, d]` sending `(x, y)` to `(gcd, 0)`
/// via `(a·x + b·y, c·x + d·y)`.
fn bezout_step(x: i128, y: i128) -> [i128; 4] {
    if y % x == 0 {
        return [1, 0, -(y / x), 1];
    }
    let e = x.extended_gcd(&y);
    let g = e.gcd;
    [e.x, e.y, -(y / g), x / g]
}

fn diagonalize(a: &IntMatrix, modulus: u64) -> Result<Diagonalization> {
    let m = check_modulus(modulus)?;
    let (r, c) = (a.rows(), a.cols());
    let mut w = reduced_entries(a, m);
    let mut left = identity(r);
    let mut right_inv = identity(c);
    let mut diag = vec![0i128; r.min(c)];

    for t in 0..r.min(c) {
        // smallest nonzero entry of the trailing block becomes the pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..r {
            for j in t..c {
                if w[i][j] != 0 && best.is_none_or(|(bi, bj)| w[i][j] < w[bi][bj]) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        w.swap(t, pi);
        left.swap(t, pi);
        for row in w.iter_mut() {
            row.swap(t, pj);
        }
        right_inv.swap(t, pj);

        loop {
            for i in t + 1..r {
                if w[i][t] != 0 {
                    let op = bezout_step(w[t][t], w[i][t]);
                    combine_rows(&mut w, t, i, op, m);
                    combine_rows(&mut left, t, i, op, m);
                }
            }
            for j in t + 1..c {
                if w[t][j] != 0 {
                    let op = bezout_step(w[t][t], w[t][j]);
                    combine_cols(&mut w, t, j, op, m);
                    // V ← V·E, so V⁻¹ ← E⁻¹·V⁻¹ on rows (t, j)
                    let [a, b, cc, d] = op;
                    combine_rows(&mut right_inv, t, j, [d, -cc, -b, a], m);
                }
            }
            if (t + 1..r).all(|i| w[i][t] == 0) {
                break;
            }
        }
        diag[t] = w[t][t];
    }
    Ok(Diagonalization {
        modulus: m,
        diag,
        left,
        right_inv,
    })
}

fn to_u64_vec(v: &[i128], scale: i128, m: i128) -> Vec<u64> {
    v.iter().map(|&x| reduce(x * scale, m) as u64).collect()
}

/// `{x ∈ Z_m^rows : x·A ≡ 0 (mod m)}` as a direct sum of cyclic pieces.
pub fn kernel_basis_mod(a: &IntMatrix, modulus: u64) -> Result<ModBasis> {
    let d = diagonalize(a, modulus)?;
    let m = d.modulus;
    let mut generators = Vec::new();
    let mut orders = Vec::new();
    for (i, u_row) in d.left.iter().enumerate() {
        let di = d.diag.get(i).copied().unwrap_or(0);
        let g = di.gcd(&m);
        if g == 1 {
            continue;
        }
        generators.push(to_u64_vec(u_row, m / g, m));
        orders.push(g as u64);
    }
    Ok(ModBasis::from_parts(a.rows(), modulus, generators, orders))
}

/// The row space `{y·A mod m}` as a direct sum of cyclic pieces.
pub fn image_basis_mod(a: &IntMatrix, modulus: u64) -> Result<ModBasis> {
    let d = diagonalize(a, modulus)?;
    let m = d.modulus;
    let mut generators = Vec::new();
    let mut orders = Vec::new();
    for (i, &di) in d.diag.iter().enumerate() {
        let order = m / di.gcd(&m);
        if order == 1 {
            continue;
        }
        generators.push(to_u64_vec(&d.right_inv[i], di, m));
        orders.push(order as u64);
    }
    Ok(ModBasis::from_parts(a.cols(), modulus, generators, orders))
}

/// Every `x ∈ {0..m-1}^rows` with `x·A ≡ 0 (mod m)`, in lexicographic order.
pub fn kernel_mod(a: &IntMatrix, modulus: u64) -> Result<Vec<Vec<u64>>> {
    kernel_basis_mod(a, modulus)?.enumerate_sorted(Limits::default().lambda)
}

impl ModBasis {
    /// True when `x·Aᵀ`-style orthogonality `x·g ≡ 0` holds for all generators.
    pub fn is_orthogonal_to(&self, x: &[u64]) -> bool {
        let m = u128::from(self.modulus);
        self.generators.iter().all(|g| {
            g.iter()
                .zip(x)
                .map(|(&a, &b)| u128::from(a) * u128::from(b) % m)
                .sum::<u128>()
                % m
                == 0
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mat(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_rows(rows).unwrap()
    }

    /// Scans all of `{0..m-1}^rows`.
    fn brute_kernel(a: &[Vec<i64>], m: u64) -> Vec<Vec<u64>> {
        let n = a.len();
        let cols = a[0].len();
        let total = m.pow(n as u32);
        let mut out = Vec::new();
        for code in 0..total {
            let mut x = vec![0u64; n];
            let mut c = code;
            for k in (0..n).rev() {
                x[k] = c % m;
                c /= m;
            }
            let ok = (0..cols).all(|j| {
                let s: i64 = (0..n).map(|i| x[i] as i64 * a[i][j]).sum();
                s.rem_euclid(m as i64) == 0
            });
            if ok {
                out.push(x);
            }
        }
        out
    }

    fn brute_image(a: &[Vec<i64>], m: u64) -> Vec<Vec<u64>> {
        let n = a.len();
        let cols = a[0].len();
        let mut out = std::collections::BTreeSet::new();
        let total = m.pow(n as u32);
        for code in 0..total {
            let mut y = vec![0i64; n];
            let mut c = code;
            for k in (0..n).rev() {
                y[k] = (c % m) as i64;
                c /= m;
            }
            let v: Vec<u64> = (0..cols)
                .map(|j| (0..n).map(|i| y[i] * a[i][j]).sum::<i64>().rem_euclid(m as i64) as u64)
                .collect();
            out.insert(v);
        }
        out.into_iter().collect()
    }

    #[test]
    fn invertible_map_has_trivial_kernel() {
        let k = kernel_mod(&IntMatrix::identity(2).unwrap(), 5).unwrap();
        assert_eq!(k, vec![vec![0, 0]]);
    }

    #[test]
    fn rejects_small_modulus() {
        assert_eq!(
            kernel_mod(&IntMatrix::identity(2).unwrap(), 1),
            Err(Error::InvalidModulus(1))
        );
    }

    #[test]
    fn k3_augmented_kernel_is_sum_zero() {
        let a = mat(&[vec![2, -1, 1], vec![-1, 2, 1], vec![-1, -1, 1]]);
        let k = kernel_mod(&a, 3).unwrap();
        let expected: Vec<Vec<u64>> = brute_kernel(&[vec![1], vec![1], vec![1]], 3);
        assert_eq!(k.len(), 9);
        assert_eq!(k, expected);
    }

    #[test]
    fn c4_augmented_kernel_has_sixteen_vectors() {
        // [L_{C4}(4) | 1]
        let a = mat(&[
            vec![2, -1, 0, 1],
            vec![-1, 2, -1, 1],
            vec![0, -1, 2, 1],
            vec![-1, 0, -1, 1],
        ]);
        let rows: Vec<Vec<i64>> = a.to_i64_rows().unwrap();
        let k = kernel_mod(&a, 16).unwrap();
        assert_eq!(k, brute_kernel(&rows, 16));
        assert_eq!(k.len(), 16);
    }

    #[test]
    fn image_of_rectangular_matrix() {
        let a = vec![vec![2i64, 4, 6], vec![3, 0, 3]];
        let img = image_basis_mod(&mat(&a), 12).unwrap().enumerate_sorted(1000).unwrap();
        assert_eq!(img, brute_image(&a, 12));
    }

    fn small_matrix(max_n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1..=max_n, 1..=max_n)
            .prop_flat_map(|(r, c)| proptest::collection::vec(proptest::collection::vec(-7i64..=7, c), r))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn kernel_matches_scan(a in small_matrix(4), m in 2u64..=20) {
            prop_assume!(m.pow(a.len() as u32) <= 200_000);
            prop_assert_eq!(kernel_mod(&mat(&a), m).unwrap(), brute_kernel(&a, m));
        }

        #[test]
        fn image_matches_scan(a in small_matrix(3), m in 2u64..=12) {
            let img = image_basis_mod(&mat(&a), m).unwrap().enumerate_sorted(1 << 20).unwrap();
            prop_assert_eq!(img, brute_image(&a, m));
        }

        #[test]
        fn kernel_of_transpose_has_same_size(
            a in (3usize..=4).prop_flat_map(|n| proptest::collection::vec(proptest::collection::vec(-9i64..=9, n), n)),
            m in prop_oneof![Just(6u64), Just(12u64)],
        ) {
            let a = mat(&a);
            let k = kernel_basis_mod(&a, m).unwrap().cardinality();
            let kt = kernel_basis_mod(&a.transpose(), m).unwrap().cardinality();
            prop_assert_eq!(k, kt);
        }
    }
}
