//! The Laplacian simplex `P_{G,i} = conv(L(i))`, its parallelepiped group
//! `Λ`, the `h*`-vector and reflexivity.
//!
//! Elements of `Λ` are stored as numerator vectors `x` over a common
//! denominator `D`, where `D = n` for reflexive simplices and `D = nτ`
//! otherwise. The group is the kernel of `x ↦ x·[L(i)|1]` on `Z_D^n`.

mod decompose;
mod ehrhart;
mod lambda;
mod oracle;

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactmat::{cofactor_matrix, determinant, kernel_basis_mod, IntMatrix};
use crate::graphs::Graph;
use crate::limits::Limits;

pub use decompose::{height_one_decomposition_witness, Decomposition};
pub use ehrhart::{ehrhart_polynomial, ehrhart_value};
pub use lambda::{HStarVector, LambdaElement, LambdaSet};
pub use oracle::{lambda_set_bruteforce_oracle, parallelepiped_lambda};

/// Outcome of the cofactor reflexivity test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReflexivityCertificate {
    pub reflexive: bool,
    /// First cofactor (0-based row, column, value) not divisible by τ.
    pub offending: Option<(usize, usize, BigInt)>,
}

#[derive(Clone, Debug)]
pub struct LaplacianSimplex {
    source: Graph,
    deleted_column: usize,
    vertex_matrix: IntMatrix,
    augmented: IntMatrix,
    tau: BigInt,
    det: BigInt,
    cofactors: OnceLock<IntMatrix>,
    reflexivity: OnceLock<ReflexivityCertificate>,
}

/// `P_{G,i}` for a 1-based deleted column `i`.
pub fn build_simplex(g: &Graph, i: usize) -> Result<LaplacianSimplex> {
    let n = g.n();
    if n < 2 {
        return Err(Error::InvalidGraph("the simplex needs at least two vertices".into()));
    }
    if i == 0 || i > n {
        return Err(Error::ParameterOutOfRange(format!(
            "deleted column {i} outside 1..={n}"
        )));
    }
    let vertex_matrix = g.laplacian().without_column(i - 1)?;
    let augmented = vertex_matrix.with_ones_column();
    let tau = g.spanning_tree_count();
    let det = determinant(&augmented)?;
    debug_assert_eq!(det.abs(), &tau * BigInt::from(n));
    Ok(LaplacianSimplex {
        source: g.clone(),
        deleted_column: i,
        vertex_matrix,
        augmented,
        tau,
        det,
        cofactors: OnceLock::new(),
        reflexivity: OnceLock::new(),
    })
}

impl LaplacianSimplex {
    /// `P_G = P_{G,n}`.
    pub fn new(g: &Graph) -> Result<Self> {
        build_simplex(g, g.n())
    }

    pub fn source(&self) -> &Graph {
        &self.source
    }

    pub fn deleted_column(&self) -> usize {
        self.deleted_column
    }

    pub fn n(&self) -> usize {
        self.source.n()
    }

    pub fn dimension(&self) -> usize {
        self.n() - 1
    }

    /// `L(i)`, one vertex per row.
    pub fn vertex_matrix(&self) -> &IntMatrix {
        &self.vertex_matrix
    }

    /// `[L(i)|1]`.
    pub fn augmented(&self) -> &IntMatrix {
        &self.augmented
    }

    pub fn tau(&self) -> &BigInt {
        &self.tau
    }

    /// `det[L(i)|1] = ±nτ`.
    pub fn determinant(&self) -> &BigInt {
        &self.det
    }

    /// Normalized volume `nτ`.
    pub fn volume(&self) -> BigInt {
        self.det.abs()
    }

    pub fn cofactors(&self) -> &IntMatrix {
        self.cofactors
            .get_or_init(|| cofactor_matrix(&self.augmented).expect("augmented matrix is square"))
    }

    pub fn reflexivity(&self) -> &ReflexivityCertificate {
        self.reflexivity.get_or_init(|| {
            let c = self.cofactors();
            for i in 0..c.rows() {
                for j in 0..c.cols() {
                    if !c.get(i, j).is_multiple_of(&self.tau) {
                        return ReflexivityCertificate {
                            reflexive: false,
                            offending: Some((i, j, c.get(i, j).clone())),
                        };
                    }
                }
            }
            ReflexivityCertificate {
                reflexive: true,
                offending: None,
            }
        })
    }

    pub fn is_reflexive(&self) -> bool {
        self.reflexivity().reflexive
    }

    /// Denominator used for `Λ`: `n` when reflexive, `nτ` otherwise.
    pub fn lambda_denominator(&self) -> BigInt {
        if self.is_reflexive() {
            BigInt::from(self.n())
        } else {
            self.volume()
        }
    }

    /// The lattice point `λ·[L(i)|1]` of the parallelepiped.
    pub fn point_of(&self, lambda: &LambdaElement) -> Result<Vec<BigInt>> {
        let d = BigInt::from(lambda.denominator());
        let x: Vec<BigInt> = lambda.numerators().iter().map(|&v| BigInt::from(v)).collect();
        let z = self.augmented.left_mul_vec(&x)?;
        z.into_iter()
            .map(|v| {
                let (q, r) = v.div_rem(&d);
                if r.is_zero() {
                    Ok(q)
                } else {
                    Err(Error::DimensionMismatch("element is not in Λ of this simplex".into()))
                }
            })
            .collect()
    }
}

/// Enumerates `Λ(P)` from the kernel of `[L(i)|1]` modulo the denominator.
pub fn lambda_set(s: &LaplacianSimplex) -> Result<LambdaSet> {
    lambda_set_with(s, &Limits::from_env())
}

pub fn lambda_set_with(s: &LaplacianSimplex, limits: &Limits) -> Result<LambdaSet> {
    let volume = s.volume();
    if volume > BigInt::from(limits.lambda) {
        return Err(Error::guard("Λ enumeration", &volume, limits.lambda));
    }
    let d = s
        .lambda_denominator()
        .to_u64()
        .ok_or_else(|| Error::Overflow(format!("denominator {}", s.lambda_denominator())))?;
    let basis = kernel_basis_mod(s.augmented(), d)?;
    let count = basis.cardinality();
    if BigInt::from(count.clone()) != volume {
        return Err(Error::DimensionMismatch(format!(
            "kernel modulo {d} has {count} elements, expected {volume}"
        )));
    }
    let xs = basis.enumerate_sorted(limits.lambda)?;
    LambdaSet::from_sorted_numerators(d, xs)
}

pub fn hstar(s: &LaplacianSimplex) -> Result<HStarVector> {
    Ok(lambda_set(s)?.hstar())
}

/// Reflexivity by the cofactor criterion, with the first failing cofactor.
pub fn is_reflexive_cofactor(s: &LaplacianSimplex) -> ReflexivityCertificate {
    s.reflexivity().clone()
}

/// Reflexivity by palindromicity of `h*`.
pub fn is_reflexive_hibi(h: &HStarVector) -> bool {
    h.is_palindromic()
}

pub fn is_unimodal(h: &HStarVector) -> bool {
    h.is_unimodal()
}

/// Vertices of the dual simplex, one per row: `V = −C(n)/τ` with the sign of
/// `det[L(i)|1]` folded in, so that `L(i)·Vᵀ = J − nI`.
pub fn dual_vertex_matrix(s: &LaplacianSimplex) -> Result<IntMatrix> {
    if !s.is_reflexive() {
        return Err(Error::NotReflexive);
    }
    let n = s.n();
    let c = s.cofactors().without_column(n - 1)?;
    let scale = if s.determinant().is_negative() {
        s.tau().clone()
    } else {
        -s.tau().clone()
    };
    let v = IntMatrix::from_fn(n, n - 1, |i, j| c.get(i, j) / &scale)?;
    let product = s.vertex_matrix().mul(&v.transpose())?;
    for i in 0..n {
        for j in 0..n {
            let expected = if i == j {
                BigInt::one() - BigInt::from(n)
            } else {
                BigInt::one()
            };
            if product.get(i, j) != &expected {
                return Err(Error::DimensionMismatch(
                    "dual vertex relation L·Vᵀ = J − nI fails".into(),
                ));
            }
        }
    }
    Ok(v)
}
