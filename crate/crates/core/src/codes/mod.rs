//! Linear codes over `Z_m`, in particular `C(P_G) = ker[L(i)|1]` over `Z_n`
//! for a reflexive Laplacian simplex.
//!
//! A code keeps its generators and a direct-sum basis of the subgroup they
//! span. Membership is tested against the dual: over `Z_m` every code
//! satisfies `(C^⊥)^⊥ = C`, so `x ∈ C` iff `x` is orthogonal to a generating
//! set of `C^⊥`.

mod distance;
mod duality;

use std::fmt;
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::exactmat::{image_basis_mod, kernel_basis_mod, IntMatrix, ModBasis};
use crate::limits::Limits;
use crate::simplex::LaplacianSimplex;

pub use distance::{
    is_mds, is_mds_by_columns, minimum_distance, minimum_distance_by_columns, minimum_distance_exhaustive, rate,
    weight_distribution,
};
pub use duality::{
    is_cyclic, prime_dimension_report, self_relation, verify_code_duality, DualityReport, PrimeDimensionReport,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MdsStatus {
    Yes,
    No,
    /// `|C|` is not a power of the modulus.
    NotApplicable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SelfRelation {
    /// `C ⊆ C^⊥` strictly.
    SelfOrthogonal,
    /// `C^⊥ ⊆ C` strictly.
    ContainsDual,
    SelfDual,
    None,
}

impl fmt::Display for SelfRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SelfRelation::SelfOrthogonal => "self-orthogonal",
            SelfRelation::ContainsDual => "contains-dual",
            SelfRelation::SelfDual => "self-dual",
            SelfRelation::None => "none",
        })
    }
}

/// `log_m|C| / n`: exact when `|C|` is a power of `m`, otherwise a float.
#[derive(Clone, Debug, PartialEq)]
pub enum Rate {
    Exact(BigRational),
    Approx(f64),
}

impl Rate {
    pub fn to_f64(&self) -> f64 {
        match self {
            Rate::Exact(r) => r.to_f64().unwrap_or(f64::NAN),
            Rate::Approx(x) => *x,
        }
    }
}

impl fmt::Display for Rate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rate::Exact(r) => write!(f, "{r}"),
            Rate::Approx(x) => write!(f, "{x:.12}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ModularCode {
    length: usize,
    modulus: u64,
    basis: ModBasis,
    dual_basis: OnceLock<ModBasis>,
    distance: OnceLock<u64>,
    weights: OnceLock<Vec<u64>>,
}

impl ModularCode {
    /// The span of `generators` in `Z_m^length`.
    pub fn new(length: usize, modulus: u64, generators: &[Vec<u64>]) -> Result<Self> {
        if length == 0 {
            return Err(Error::DimensionMismatch("code length must be positive".into()));
        }
        if generators.iter().any(|g| g.len() != length) {
            return Err(Error::DimensionMismatch(format!(
                "generators must have length {length}"
            )));
        }
        let rows: Vec<Vec<BigInt>> = if generators.is_empty() {
            vec![vec![BigInt::from(0); length]]
        } else {
            generators
                .iter()
                .map(|g| g.iter().map(|&x| BigInt::from(x)).collect())
                .collect()
        };
        let basis = image_basis_mod(&IntMatrix::from_rows(&rows)?, modulus)?;
        Ok(Self::from_basis(basis))
    }

    pub(crate) fn from_basis(basis: ModBasis) -> Self {
        ModularCode {
            length: basis.length(),
            modulus: basis.modulus(),
            basis,
            dual_basis: OnceLock::new(),
            distance: OnceLock::new(),
            weights: OnceLock::new(),
        }
    }

    /// `{x ∈ Z_m^rows : x·A ≡ 0}`.
    pub fn kernel_of(a: &IntMatrix, modulus: u64) -> Result<Self> {
        Ok(Self::from_basis(kernel_basis_mod(a, modulus)?))
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Generators with their additive orders; the code is their direct sum.
    pub fn generators(&self) -> &[Vec<u64>] {
        self.basis.generators()
    }

    pub fn basis(&self) -> &ModBasis {
        &self.basis
    }

    pub fn cardinality(&self) -> BigUint {
        self.basis.cardinality()
    }

    /// `k` with `|C| = m^k`, if there is one.
    pub fn dimension(&self) -> Option<u32> {
        let mut c = self.cardinality();
        let m = BigUint::from(self.modulus);
        let mut k = 0;
        while c > BigUint::one() {
            if &c % &m != BigUint::from(0u8) {
                return None;
            }
            c /= &m;
            k += 1;
        }
        Some(k)
    }

    pub(crate) fn dual_basis(&self) -> &ModBasis {
        self.dual_basis.get_or_init(|| {
            let rows: Vec<Vec<BigInt>> = if self.basis.generators().is_empty() {
                vec![vec![BigInt::from(0); self.length]]
            } else {
                self.basis
                    .generators()
                    .iter()
                    .map(|g| g.iter().map(|&x| BigInt::from(x)).collect())
                    .collect()
            };
            let g = IntMatrix::from_rows(&rows).expect("non-empty generator matrix");
            kernel_basis_mod(&g.transpose(), self.modulus).expect("modulus already validated")
        })
    }

    pub fn contains(&self, x: &[u64]) -> bool {
        x.len() == self.length && x.iter().all(|&v| v < self.modulus) && self.dual_basis().is_orthogonal_to(x)
    }

    /// Same subgroup of `Z_m^n`.
    pub fn same_code(&self, other: &ModularCode) -> bool {
        self.length == other.length
            && self.modulus == other.modulus
            && self.cardinality() == other.cardinality()
            && self.generators().iter().all(|g| other.contains(g))
    }

    /// The image under coordinate relabeling: old coordinate `v` (1-based)
    /// moves to `sigma[v - 1]`.
    pub fn permuted(&self, sigma: &[usize]) -> Result<ModularCode> {
        let n = self.length;
        let mut seen = vec![false; n + 1];
        if sigma.len() != n
            || sigma
                .iter()
                .any(|&s| s == 0 || s > n || std::mem::replace(&mut seen[s], true))
        {
            return Err(Error::DimensionMismatch("not a permutation of the coordinates".into()));
        }
        let gens: Vec<Vec<u64>> = self
            .generators()
            .iter()
            .map(|g| {
                let mut out = vec![0; n];
                for (v, &x) in g.iter().enumerate() {
                    out[sigma[v] - 1] = x;
                }
                out
            })
            .collect();
        ModularCode::new(n, self.modulus, &gens)
    }

    /// All codewords in lexicographic order.
    pub fn codewords(&self, limits: &Limits) -> Result<Vec<Vec<u64>>> {
        self.basis.enumerate_sorted(limits.codewords)
    }

    fn check_enumerable(&self, limits: &Limits) -> Result<u64> {
        match self.basis.cardinality_u64() {
            Some(c) if c <= limits.codewords => Ok(c),
            _ => Err(Error::guard(
                "codeword enumeration (|C|)",
                self.cardinality(),
                limits.codewords,
            )),
        }
    }
}

/// `C(P_G) = ker[L(i)|1]` over `Z_n`.
pub fn code_from_simplex(s: &LaplacianSimplex) -> Result<ModularCode> {
    if !s.is_reflexive() {
        return Err(Error::NotReflexive);
    }
    let code = ModularCode::kernel_of(s.augmented(), s.n() as u64)?;
    debug_assert_eq!(BigInt::from(code.cardinality()), s.volume());
    Ok(code)
}

/// `C^⊥ = ker(Gᵀ)` for the generator matrix `G`, checked against
/// `|C|·|C^⊥| = m^n`.
pub fn dual_code(c: &ModularCode) -> Result<ModularCode> {
    let dual = ModularCode::from_basis(c.dual_basis().clone());
    let product = c.cardinality() * dual.cardinality();
    if product != BigUint::from(c.modulus).pow(c.length as u32) {
        return Err(Error::DimensionMismatch(format!(
            "|C|·|C^⊥| = {product} differs from m^n"
        )));
    }
    Ok(dual)
}

/// The dual of `ker A` computed as the row space of `Aᵀ`.
pub fn dual_of_kernel(a: &IntMatrix, modulus: u64) -> Result<ModularCode> {
    Ok(ModularCode::from_basis(image_basis_mod(&a.transpose(), modulus)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::Graph;

    fn code_of(g: Graph) -> ModularCode {
        code_from_simplex(&LaplacianSimplex::new(&g).unwrap()).unwrap()
    }

    #[test]
    fn tree_code_is_repetition() {
        let c = code_of(Graph::star(5).unwrap());
        let rep = ModularCode::new(5, 5, &[vec![1; 5]]).unwrap();
        assert!(c.same_code(&rep));
        assert_eq!(c.cardinality(), BigUint::from(5u8));
        assert_eq!(c.dimension(), Some(1));
    }

    #[test]
    fn complete_code_is_sum_zero() {
        let c = code_of(Graph::complete(4).unwrap());
        assert_eq!(c.cardinality(), BigUint::from(64u8));
        assert!(c.contains(&[1, 2, 3, 2]) && !c.contains(&[1, 0, 0, 0]));
        let dual = dual_code(&c).unwrap();
        assert!(dual.same_code(&ModularCode::new(4, 4, &[vec![1; 4]]).unwrap()));
    }

    #[test]
    fn odd_cycle_code() {
        let c = code_of(Graph::cycle(5).unwrap());
        let expected = ModularCode::new(5, 5, &[vec![1; 5], vec![0, 1, 2, 3, 4]]).unwrap();
        assert!(c.same_code(&expected));
        assert_eq!(c.cardinality(), BigUint::from(25u8));
    }

    #[test]
    fn non_reflexive_rejected() {
        let s = LaplacianSimplex::new(&Graph::cycle(4).unwrap()).unwrap();
        assert_eq!(code_from_simplex(&s).unwrap_err(), Error::NotReflexive);
    }

    #[test]
    fn dual_routes_agree() {
        for g in [
            Graph::complete(5).unwrap(),
            Graph::cycle(7).unwrap(),
            Graph::path(4).unwrap(),
        ] {
            let s = LaplacianSimplex::new(&g).unwrap();
            let c = code_from_simplex(&s).unwrap();
            let a = dual_code(&c).unwrap();
            let b = dual_of_kernel(s.augmented(), s.n() as u64).unwrap();
            assert!(a.same_code(&b) && b.same_code(&a));
            assert!(dual_code(&a).unwrap().same_code(&c));
        }
    }

    #[test]
    fn permutation_of_coordinates() {
        let c = ModularCode::new(3, 3, &[vec![1, 2, 0]]).unwrap();
        let p = c.permuted(&[2, 3, 1]).unwrap();
        assert!(p.contains(&[0, 1, 2]) && !p.contains(&[1, 2, 0]));
        assert!(c.permuted(&[1, 1, 2]).is_err());
    }

    #[test]
    fn rates_display() {
        assert_eq!(Rate::Exact(BigRational::new(2.into(), 5.into())).to_string(), "2/5");
        assert!((Rate::Approx(0.25).to_f64() - 0.25).abs() < 1e-15);
    }
}
