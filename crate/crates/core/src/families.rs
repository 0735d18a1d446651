//! Closed-form descriptions of `Λ` and of the codes for named graph
//! families. Nothing here calls the kernel pipeline, so agreement with
//! [`crate::simplex::lambda_set`] is an independent check.

use num_bigint::{BigInt, BigUint};

use crate::codes::{code_from_simplex, minimum_distance_exhaustive, rate, Rate};
use crate::error::{Error, Result};
use crate::exactmat::{determinant, is_prime, IntMatrix};
use crate::graphs::{bridge, star_whisker_complete, Graph};
use crate::limits::Limits;
use crate::simplex::{HStarVector, LambdaSet, LaplacianSimplex};

fn guard_count(count: u128, limits: &Limits) -> Result<()> {
    if count > u128::from(limits.lambda) {
        return Err(Error::guard("family Λ enumeration", count, limits.lambda));
    }
    Ok(())
}

/// `{[α·1 + β·(0, 1, …, n−1)] mod n}` over `n`, for odd `n >= 3`.
pub fn lambda_odd_cycle(n: usize) -> Result<LambdaSet> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::ParameterOutOfRange(format!(
            "odd cycle needs odd n >= 3, got {n}"
        )));
    }
    guard_count((n * n) as u128, &Limits::from_env())?;
    let mut xs = Vec::with_capacity(n * n);
    for alpha in 0..n {
        for beta in 0..n {
            xs.push((0..n).map(|i| ((alpha + beta * i) % n) as u64).collect());
        }
    }
    LambdaSet::from_numerators(n as u64, xs)
}

/// Vectors in `{0..n−1}^n` with coordinate sum `≡ 0 (mod n)`, over `n`.
pub fn lambda_complete(n: usize) -> Result<LambdaSet> {
    if n < 3 {
        return Err(Error::ParameterOutOfRange(format!(
            "complete graph needs n >= 3, got {n}"
        )));
    }
    guard_count((n as u128).pow(n as u32 - 1), &Limits::from_env())?;
    let m = n as u64;
    let mut xs = Vec::new();
    let mut free = vec![0u64; n - 1];
    loop {
        let s: u64 = free.iter().sum();
        let mut x = free.clone();
        x.push((m - s % m) % m);
        xs.push(x);
        let Some(i) = (0..n - 1).rev().find(|&i| free[i] + 1 < m) else {
            break;
        };
        free[i] += 1;
        free[i + 1..].iter_mut().for_each(|v| *v = 0);
    }
    LambdaSet::from_numerators(m, xs)
}

/// `Λ(P_{W*(K_n)})` over `p = 2n + 1`: `x_1..x_n` free in `{0..2n}`,
/// `x_{i+n} ≡ (n+1)·x_i − Σ_{j≤n} x_j` and `x_{2n+1} ≡ −2·Σ_{j≤n} x_j`.
pub fn lambda_star_whisker(n: usize) -> Result<LambdaSet> {
    if n < 3 {
        return Err(Error::ParameterOutOfRange(format!("W*(K_n) needs n >= 3, got {n}")));
    }
    let p = 2 * n as u64 + 1;
    guard_count(u128::from(p).pow(n as u32), &Limits::from_env())?;
    let mut xs = Vec::new();
    let mut free = vec![0u64; n];
    loop {
        let s = free.iter().sum::<u64>() % p;
        let mut x = free.clone();
        for &xi in &free {
            x.push(((n as u64 + 1) * xi % p + p - s) % p);
        }
        x.push((2 * (p - s)) % p);
        xs.push(x);
        let Some(i) = (0..n).rev().find(|&i| free[i] + 1 < p) else {
            break;
        };
        free[i] += 1;
        free[i + 1..].iter_mut().for_each(|v| *v = 0);
    }
    LambdaSet::from_numerators(p, xs)
}

/// `Λ(P_{W_k(G)})` from `Λ(P_G)` of a reflexive `P_G`:
/// `(λ, …, λ) + i/((k+1)n)·1` for `i = 0..=k`.
pub fn lambda_whisker(base: &LambdaSet, k: usize) -> Result<LambdaSet> {
    let n = reflexive_length(base)?;
    if k == 0 {
        return Err(Error::ParameterOutOfRange("whisker depth must be at least 1".into()));
    }
    let d = ((k + 1) * n) as u64;
    let mut xs = Vec::with_capacity(base.len() * (k + 1));
    for e in base.iter() {
        for i in 0..=k as u64 {
            let x = e.numerators().iter().map(|&v| (k as u64 + 1) * v + i);
            xs.push(x.clone().cycle().take((k + 1) * n).collect());
        }
    }
    LambdaSet::from_numerators(d, xs)
}

/// `Λ(P_B)` for `B = B(G_1, …, G_k)` from the reflexive components:
/// `(λ_1, …, λ_k) + i/(kn)·1` with `(λ_ℓ)_n = (λ_{ℓ+1})_1`.
pub fn lambda_bridge(parts: &[LambdaSet]) -> Result<LambdaSet> {
    let Some(first) = parts.first() else {
        return Err(Error::ParameterOutOfRange("bridge of an empty list".into()));
    };
    let n = reflexive_length(first)?;
    for p in parts {
        if reflexive_length(p)? != n {
            return Err(Error::DimensionMismatch(
                "bridge components must have equal order".into(),
            ));
        }
    }
    let k = parts.len();
    let total: u128 = parts.iter().map(|p| p.len() as u128).product();
    guard_count(total * k as u128, &Limits::from_env())?;
    // chains of component elements satisfying the matching condition
    let mut chains: Vec<Vec<u64>> = first.iter().map(|e| e.numerators().to_vec()).collect();
    for part in &parts[1..] {
        let mut next = Vec::new();
        for chain in &chains {
            let last = chain[chain.len() - 1];
            for e in part.iter().filter(|e| e.numerators()[0] == last) {
                let mut c = chain.clone();
                c.extend_from_slice(e.numerators());
                next.push(c);
            }
        }
        chains = next;
    }
    let d = (k * n) as u64;
    let mut xs = Vec::with_capacity(chains.len() * k);
    for chain in &chains {
        for i in 0..k as u64 {
            xs.push(chain.iter().map(|&v| k as u64 * v + i).collect());
        }
    }
    LambdaSet::from_numerators(d, xs)
}

fn reflexive_length(set: &LambdaSet) -> Result<usize> {
    let n = set.iter().next().map_or(0, |e| e.numerators().len());
    if n == 0 || set.denominator() != n as u64 {
        return Err(Error::NotReflexive);
    }
    Ok(n)
}

/// Predicted `h*` of `W_k(G)`: `h*_G(z^{k+1})·(1 + z + … + z^k)`.
pub fn whisker_hstar(h: &HStarVector, k: usize) -> Result<HStarVector> {
    h.spread(k + 1, (k + 1) * h.coefficients().len())
}

/// `τ(W*(K_n)) = det(2·L_{K_n} + I_n)`.
pub fn wstar_tau_by_determinant(n: usize) -> Result<BigInt> {
    let l = Graph::complete(n)?.laplacian();
    let m = IntMatrix::from_fn(n, n, |i, j| {
        BigInt::from(2) * l.get(i, j) + BigInt::from(u8::from(i == j))
    })?;
    determinant(&m)
}

/// Generator `[I_n | A']` and parity check `[[nI_n + J_n; 2·1] | I_{n+1}]`
/// of `C(P_{W*(K_n)})` over `Z_p`, `p = 2n + 1` prime. `A'` has `n` on the
/// diagonal, `2n` elsewhere and a last column of `2n − 1`.
pub fn wstar_mds_matrices(n: usize) -> Result<(IntMatrix, IntMatrix)> {
    let p = 2 * n + 1;
    if n < 3 {
        return Err(Error::ParameterOutOfRange(format!("W*(K_n) needs n >= 3, got {n}")));
    }
    if !is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    let g = IntMatrix::from_fn(n, p, |i, j| {
        BigInt::from(match j {
            j if j < n => usize::from(i == j),
            j if j == 2 * n => 2 * n - 1,
            j if j - n == i => n,
            _ => 2 * n,
        })
    })?;
    let h = IntMatrix::from_fn(n + 1, p, |i, j| {
        BigInt::from(match (i, j) {
            (i, j) if j >= n => usize::from(j - n == i),
            (i, _) if i == n => 2,
            (i, j) => n * usize::from(i == j) + 1,
        })
    })?;
    Ok((g, h))
}

/// One row of the rate table for `G_n = B((b−a)·C_n, a·K_n)`.
#[derive(Clone, Debug, PartialEq)]
pub struct RateRow {
    pub n: usize,
    pub vertices: usize,
    pub reflexive: bool,
    pub cardinality: BigUint,
    /// `b·n^{a(n−3)+b+1}`.
    pub formula: BigUint,
    pub rate: Rate,
}

impl RateRow {
    pub fn formula_holds(&self) -> bool {
        self.reflexive && self.cardinality == self.formula
    }
}

pub fn rate_family_graph(a: usize, b: usize, n: usize) -> Result<Graph> {
    if a > b || b == 0 {
        return Err(Error::ParameterOutOfRange(format!(
            "need 0 <= a <= b and b >= 1, got a={a}, b={b}"
        )));
    }
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::ParameterOutOfRange(format!("n must be odd and >= 3, got {n}")));
    }
    let mut parts = vec![Graph::cycle(n)?; b - a];
    parts.extend(std::iter::repeat_n(Graph::complete(n)?, a));
    if parts.len() == 1 {
        return Ok(parts.remove(0));
    }
    bridge(&parts)
}

pub fn rate_family_scan(a: usize, b: usize, ns: &[usize]) -> Result<Vec<RateRow>> {
    ns.iter()
        .map(|&n| {
            let g = rate_family_graph(a, b, n)?;
            let s = LaplacianSimplex::new(&g)?;
            let exponent = (a * (n - 3) + b + 1) as u32;
            let formula = BigUint::from(b) * BigUint::from(n).pow(exponent);
            let reflexive = s.is_reflexive();
            let (cardinality, rate) = if reflexive {
                let c = code_from_simplex(&s)?;
                (c.cardinality(), rate(&c))
            } else {
                (s.volume().to_biguint().unwrap_or_default(), Rate::Approx(f64::NAN))
            };
            Ok(RateRow {
                n,
                vertices: g.n(),
                reflexive,
                cardinality,
                formula,
                rate,
            })
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Trees,
    OddCycles,
    Complete,
    WstarPrime,
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "trees" => Ok(Family::Trees),
            "cycles-odd" => Ok(Family::OddCycles),
            "complete" => Ok(Family::Complete),
            "wstar-prime" => Ok(Family::WstarPrime),
            _ => Err(Error::ParameterOutOfRange(format!(
                "unknown family {s:?}; expected trees, cycles-odd, complete or wstar-prime"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DistanceSource {
    Enumerated,
    /// Closed form for the family, used beyond the enumeration limit.
    Formula,
    /// Too large to enumerate and no closed form is used.
    Unknown,
}

/// One row of an asymptotic table, indexed by code length.
#[derive(Clone, Debug, PartialEq)]
pub struct AsymptoticRow {
    pub length: usize,
    pub rate: Rate,
    pub distance: Option<u64>,
    pub relative_distance: Option<f64>,
    pub source: DistanceSource,
}

/// Minimum distance of the code generated by `1̄` and `(0, 1, …, n − 1)` over
/// `Z_n`: `n − n/q` for the least prime factor `q`, so `n − 1` only for prime `n`.
pub fn odd_cycle_distance(n: u64) -> u64 {
    let q = (2..=n).find(|q| n.is_multiple_of(*q)).unwrap_or(n);
    n - n / q
}

/// Rate and relative distance over the lengths in `lengths` that belong to
/// the family. Distances are enumerated when `|C|` is within
/// `limits.codewords`. Trees, odd cycles and complete graphs fall back to
/// their closed forms (`n`, `n − n/q` with `q` the least prime factor of
/// `n`, and `2`) beyond that, and an enumerated
/// value contradicting the closed form is an error. The `W*(K_n)` family has
/// no fallback.
pub fn asymptotic_report(family: Family, lengths: &[usize], limits: &Limits) -> Result<Vec<AsymptoticRow>> {
    let mut rows = Vec::new();
    for &len in lengths {
        let (g, formula) = match family {
            Family::Trees if len >= 2 => (Graph::path(len)?, Some(len as u64)),
            Family::OddCycles if len >= 3 && len % 2 == 1 => (Graph::cycle(len)?, Some(odd_cycle_distance(len as u64))),
            Family::Complete if len >= 3 => (Graph::complete(len)?, Some(2)),
            Family::WstarPrime if len >= 7 && is_prime(len as u64) => (star_whisker_complete((len - 1) / 2, 1)?, None),
            _ => continue,
        };
        let s = LaplacianSimplex::new(&g)?;
        let c = code_from_simplex(&s)?;
        let (distance, source) = if c.cardinality() <= BigUint::from(limits.codewords) {
            let d = minimum_distance_exhaustive(&c, limits)?;
            if formula.is_some_and(|f| f != d) {
                return Err(Error::DimensionMismatch(format!(
                    "length {len}: enumerated distance {d} differs from {}",
                    formula.unwrap_or_default()
                )));
            }
            (Some(d), DistanceSource::Enumerated)
        } else if formula.is_some() {
            (formula, DistanceSource::Formula)
        } else {
            (None, DistanceSource::Unknown)
        };
        rows.push(AsymptoticRow {
            length: len,
            rate: rate(&c),
            distance,
            relative_distance: distance.map(|d| d as f64 / len as f64),
            source,
        });
    }
    Ok(rows)
}
