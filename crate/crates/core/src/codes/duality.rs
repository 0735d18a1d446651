use num_bigint::{BigInt, BigUint};

use super::{code_from_simplex, dual_code, ModularCode, SelfRelation};
use crate::error::{Error, Result};
use crate::exactmat::is_prime;
use crate::limits::Limits;
use crate::simplex::{dual_vertex_matrix, parallelepiped_lambda, LambdaSet, LaplacianSimplex};

/// Closed under the cyclic shift `(c_1, …, c_n) ↦ (c_n, c_1, …, c_{n−1})`.
/// The shift is linear, so checking the generators suffices.
pub fn is_cyclic(c: &ModularCode) -> bool {
    c.generators().iter().all(|g| {
        let mut shifted = Vec::with_capacity(g.len());
        shifted.push(g[g.len() - 1]);
        shifted.extend_from_slice(&g[..g.len() - 1]);
        c.contains(&shifted)
    })
}

pub fn self_relation(c: &ModularCode) -> Result<SelfRelation> {
    let dual = dual_code(c)?;
    let inside = c.generators().iter().all(|g| dual.contains(g));
    let contains = dual.generators().iter().all(|g| c.contains(g));
    Ok(match (inside, contains) {
        (true, true) => SelfRelation::SelfDual,
        (true, false) => SelfRelation::SelfOrthogonal,
        (false, true) => SelfRelation::ContainsDual,
        (false, false) => SelfRelation::None,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityReport {
    pub passed: bool,
    /// `|Λ(P^∨)|` found by the geometric enumeration.
    pub dual_lambda_count: u64,
    /// `n^{n−1}/τ`.
    pub expected_count: BigInt,
    /// `|C|·|C^⊥| = n^n`.
    pub cardinality_product_ok: bool,
    pub difference: Option<String>,
}

/// Enumerates `Λ(P^∨)` from the dual vertices and compares it with
/// `{x/n : x ∈ C(P_G)^⊥}`.
pub fn verify_code_duality(s: &LaplacianSimplex, limits: &Limits) -> Result<DualityReport> {
    let c = code_from_simplex(s)?;
    let n = s.n();
    let nn = BigInt::from(n);
    let expected_count = nn.pow(n as u32 - 1) / s.tau();
    if expected_count > BigInt::from(limits.dual_volume) {
        return Err(Error::guard("dual Λ enumeration", &expected_count, limits.dual_volume));
    }
    let v = dual_vertex_matrix(s)?;
    let oracle_limits = Limits {
        oracle_volume: limits.dual_volume,
        ..*limits
    };
    let geometric = parallelepiped_lambda(&v, &oracle_limits)?;
    let dual = dual_code(&c)?;
    let cardinality_product_ok = c.cardinality() * dual.cardinality() == BigUint::from(n as u64).pow(n as u32);
    let from_code = LambdaSet::from_numerators(n as u64, dual.codewords(limits)?)?;
    let difference = geometric.first_difference(&from_code);
    let dual_lambda_count = geometric.len() as u64;
    Ok(DualityReport {
        passed: difference.is_none() && cardinality_product_ok && BigInt::from(dual_lambda_count) == expected_count,
        dual_lambda_count,
        expected_count,
        cardinality_product_ok,
        difference,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeDimensionReport {
    pub p: u64,
    pub k: u32,
    pub tau: BigInt,
    /// `τ = p^{k−1}`.
    pub tau_matches: bool,
}

/// For a prime number of vertices `p`: `|C| = p^k` and `τ = p^{k−1}`.
pub fn prime_dimension_report(s: &LaplacianSimplex) -> Result<PrimeDimensionReport> {
    let p = s.n() as u64;
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let c = code_from_simplex(s)?;
    let k = c
        .dimension()
        .ok_or_else(|| Error::DimensionMismatch("|C| is not a power of p".into()))?;
    let tau = s.tau().clone();
    let tau_matches = k >= 1 && tau == BigInt::from(p).pow(k - 1);
    Ok(PrimeDimensionReport { p, k, tau, tau_matches })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::Graph;

    fn code_of(g: &Graph) -> ModularCode {
        code_from_simplex(&LaplacianSimplex::new(g).unwrap()).unwrap()
    }

    #[test]
    fn cyclicity() {
        assert!(is_cyclic(&code_of(&Graph::cycle(5).unwrap())));
        assert!(is_cyclic(&code_of(&Graph::complete(4).unwrap())));
        assert!(!is_cyclic(&ModularCode::new(3, 3, &[vec![1, 0, 0]]).unwrap()));
    }

    #[test]
    fn relations() {
        for p in [5, 7] {
            assert_eq!(
                self_relation(&code_of(&Graph::cycle(p).unwrap())).unwrap(),
                SelfRelation::SelfOrthogonal
            );
        }
        assert_eq!(
            self_relation(&code_of(&Graph::complete(4).unwrap())).unwrap(),
            SelfRelation::ContainsDual
        );
        // (1,1) over Z_2 is its own dual
        let rep = ModularCode::new(2, 2, &[vec![1, 1]]).unwrap();
        assert_eq!(self_relation(&rep).unwrap(), SelfRelation::SelfDual);
    }

    #[test]
    fn duality_small() {
        for (g, count) in [
            (Graph::complete(4).unwrap(), 4),
            (Graph::cycle(5).unwrap(), 125),
            (Graph::path(4).unwrap(), 64),
        ] {
            let s = LaplacianSimplex::new(&g).unwrap();
            let r = verify_code_duality(&s, &Limits::default()).unwrap();
            assert!(r.passed, "{g}: {r:?}");
            assert_eq!(r.dual_lambda_count, count);
        }
    }

    #[test]
    fn prime_reports() {
        let r = prime_dimension_report(&LaplacianSimplex::new(&Graph::complete(5).unwrap()).unwrap()).unwrap();
        assert_eq!((r.k, r.tau.clone(), r.tau_matches), (4, BigInt::from(125), true));
        let r = prime_dimension_report(&LaplacianSimplex::new(&Graph::cycle(7).unwrap()).unwrap()).unwrap();
        assert_eq!((r.k, r.tau_matches), (2, true));
        let s = LaplacianSimplex::new(&Graph::complete(4).unwrap()).unwrap();
        assert_eq!(prime_dimension_report(&s), Err(Error::NotPrime(4)));
    }
}
