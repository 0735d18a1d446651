use std::ops::ControlFlow;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::{MdsStatus, ModularCode, Rate};
use crate::error::{Error, Result};
use crate::exactmat::{is_prime, rank_mod_p, standard_form_prime};
use crate::limits::Limits;

/// Minimum Hamming weight of a nonzero codeword, by full enumeration.
pub fn minimum_distance_exhaustive(c: &ModularCode, limits: &Limits) -> Result<u64> {
    if let Some(&d) = c.distance.get() {
        return Ok(d);
    }
    c.check_enumerable(limits)?;
    let n = c.length() as u64;
    let mut best = u64::MAX;
    c.basis().try_for_each(|x| {
        let w = x.iter().filter(|&&v| v != 0).count() as u64;
        if w > 0 && w < best {
            best = w;
        }
        if best == 1 {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    if best == u64::MAX {
        return Err(Error::TrivialCode);
    }
    debug_assert!(best <= n);
    let _ = c.distance.set(best);
    Ok(best)
}

pub fn minimum_distance(c: &ModularCode) -> Result<u64> {
    minimum_distance_exhaustive(c, &Limits::from_env())
}

fn parity_columns(c: &ModularCode) -> Result<(usize, Vec<Vec<u64>>)> {
    let p = c.modulus();
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if c.generators().is_empty() {
        return Err(Error::TrivialCode);
    }
    let sf = standard_form_prime(c.generators(), p)?;
    let rows = sf.parity_check.len();
    let columns = (0..c.length())
        .map(|j| sf.parity_check.iter().map(|r| r[j]).collect())
        .collect();
    Ok((rows, columns))
}

fn binomial(n: usize, k: usize) -> BigInt {
    let mut b = BigInt::from(1);
    for i in 0..k {
        b = b * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    b
}

/// Calls `f` on every `k`-subset of `0..n` in lexicographic order until it breaks.
fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if f(&idx) {
            return true;
        }
        let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
            return false;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Over a prime field, the minimum distance is the least number of linearly
/// dependent columns of a parity-check matrix.
pub fn minimum_distance_by_columns(c: &ModularCode, limits: &Limits) -> Result<u64> {
    let (rows, columns) = parity_columns(c)?;
    let n = c.length();
    let p = c.modulus();
    let mut visited = BigInt::from(0);
    for w in 1..=rows + 1 {
        visited += binomial(n, w);
        if visited > BigInt::from(limits.search) {
            return Err(Error::guard("column subsets", visited, limits.search));
        }
        if rows == 0 {
            return Ok(1);
        }
        let mut error = None;
        let found = for_each_subset(n, w, |subset| {
            let picked: Vec<Vec<u64>> = subset.iter().map(|&j| columns[j].clone()).collect();
            match rank_mod_p(&picked, p) {
                Ok(r) => r < w,
                Err(e) => {
                    error = Some(e);
                    true
                }
            }
        });
        if let Some(e) = error {
            return Err(e);
        }
        if found {
            return Ok(w as u64);
        }
    }
    unreachable!("any n - k + 1 columns of an (n - k)-row matrix are dependent")
}

/// MDS over a prime field: every `n − k` columns of the parity check are independent.
pub fn is_mds_by_columns(c: &ModularCode, limits: &Limits) -> Result<bool> {
    let (rows, columns) = parity_columns(c)?;
    if rows == 0 {
        return Ok(true);
    }
    let count = binomial(c.length(), rows);
    if count > BigInt::from(limits.search) {
        return Err(Error::guard("column subsets", count, limits.search));
    }
    let p = c.modulus();
    let mut error = None;
    let dependent = for_each_subset(c.length(), rows, |subset| {
        let picked: Vec<Vec<u64>> = subset.iter().map(|&j| columns[j].clone()).collect();
        match rank_mod_p(&picked, p) {
            Ok(r) => r < rows,
            Err(e) => {
                error = Some(e);
                true
            }
        }
    });
    match error {
        Some(e) => Err(e),
        None => Ok(!dependent),
    }
}

/// Equality in the Singleton bound `dist <= n − log_m|C| + 1`.
pub fn is_mds(c: &ModularCode) -> Result<MdsStatus> {
    let Some(k) = c.dimension() else {
        return Ok(MdsStatus::NotApplicable);
    };
    let d = minimum_distance(c)?;
    Ok(if d == c.length() as u64 - u64::from(k) + 1 {
        MdsStatus::Yes
    } else {
        MdsStatus::No
    })
}

/// Number of codewords of each Hamming weight `0..=n`.
pub fn weight_distribution(c: &ModularCode) -> Result<Vec<u64>> {
    if let Some(w) = c.weights.get() {
        return Ok(w.clone());
    }
    c.check_enumerable(&Limits::from_env())?;
    let mut counts = vec![0u64; c.length() + 1];
    c.basis()
        .for_each(|x| counts[x.iter().filter(|&&v| v != 0).count()] += 1);
    if let Some(d) = (1..counts.len()).find(|&w| counts[w] > 0) {
        let _ = c.distance.set(d as u64);
    }
    let _ = c.weights.set(counts.clone());
    Ok(counts)
}

pub fn rate(c: &ModularCode) -> Rate {
    match c.dimension() {
        Some(k) => Rate::Exact(BigRational::new(BigInt::from(k), BigInt::from(c.length()))),
        None => {
            let log = |v: f64| v.ln();
            let size = c.cardinality().to_f64().unwrap_or(f64::INFINITY);
            Rate::Approx(log(size) / log(c.modulus() as f64) / c.length() as f64)
        }
    }
}
