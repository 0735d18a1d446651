use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::simplex::{lambda_set, LaplacianSimplex};

/// A target written as a sum of height-one generators with multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub parts: Vec<(Vec<BigInt>, usize)>,
}

/// Searches for a way to write `target` (a lattice point of the cone over
/// the simplex, last coordinate = height) as a sum of `height` points of
/// height one: lattice points of the parallelepiped at height one and the
/// lifted vertices `(v_i, 1)`. Returns `None` when no such sum exists.
pub fn height_one_decomposition_witness(s: &LaplacianSimplex, target: &[BigInt]) -> Result<Option<Decomposition>> {
    let n = s.n();
    if target.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "target has length {}, expected {n}",
            target.len()
        )));
    }
    let height = target[n - 1]
        .to_usize()
        .ok_or_else(|| Error::ParameterOutOfRange("target height must be a non-negative integer".into()))?;
    let mut gens: Vec<Vec<BigInt>> = Vec::new();
    for e in lambda_set(s)?.iter().filter(|e| e.height() == 1) {
        gens.push(s.point_of(e)?);
    }
    gens.extend(s.augmented().to_rows());
    gens.sort();
    gens.dedup();

    let limits = Limits::from_env();
    let combos = multiset_count(gens.len(), height);
    if combos > BigInt::from(limits.search) {
        return Err(Error::guard("height-one decomposition search", combos, limits.search));
    }
    let mut chosen = Vec::with_capacity(height);
    let mut remaining = target.to_vec();
    if !search(&gens, 0, height, &mut remaining, &mut chosen) {
        return Ok(None);
    }
    let mut parts: Vec<(Vec<BigInt>, usize)> = Vec::new();
    for idx in chosen {
        match parts.last_mut() {
            Some((g, k)) if *g == gens[idx] => *k += 1,
            _ => parts.push((gens[idx].clone(), 1)),
        }
    }
    Ok(Some(Decomposition { parts }))
}

fn search(
    gens: &[Vec<BigInt>],
    from: usize,
    left: usize,
    remaining: &mut Vec<BigInt>,
    chosen: &mut Vec<usize>,
) -> bool {
    if left == 0 {
        return remaining.iter().all(Zero::is_zero);
    }
    for idx in from..gens.len() {
        for (r, g) in remaining.iter_mut().zip(&gens[idx]) {
            *r -= g;
        }
        chosen.push(idx);
        if search(gens, idx, left - 1, remaining, chosen) {
            return true;
        }
        chosen.pop();
        for (r, g) in remaining.iter_mut().zip(&gens[idx]) {
            *r += g;
        }
    }
    false
}

/// `binom(g + h − 1, h)`.
fn multiset_count(g: usize, h: usize) -> BigInt {
    let mut c = BigInt::from(1);
    for m in 0..h {
        c = c * BigInt::from(g + m) / BigInt::from(m + 1);
    }
    c
}
