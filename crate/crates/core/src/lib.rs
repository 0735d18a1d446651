//! Laplacian simplices of simple connected graphs.
//!
//! The simplex of a graph `G` on `n` vertices is the convex hull of the rows
//! of its Laplacian with one column deleted. This crate computes, in exact
//! integer arithmetic, the group `Λ(P_G)` of fundamental-parallelepiped
//! coefficient vectors, the `h*`-vector, reflexivity, the dual vertex matrix,
//! and for reflexive simplices the linear code `ker[L(n)|1]` over `Z_n`.
//!
//! Modules:
//! - [`exactmat`]: big-integer matrices, determinants, cofactors and
//!   structural kernels modulo an integer.
//! - [`graphs`]: the graph model, parsers and the whisker/star/bridge
//!   constructions.
//! - [`simplex`]: the simplex, `Λ`, `h*`, reflexivity and the geometric oracle.
//! - [`codes`]: linear codes over `Z_m` and their parameters.
//! - [`families`]: closed-form descriptions for named graph families.

pub mod codes;
pub mod error;
pub mod exactmat;
pub mod families;
pub mod graphs;
pub mod limits;
pub mod simplex;

pub use codes::{MdsStatus, ModularCode, Rate, SelfRelation};
pub use error::{Error, Result};
pub use exactmat::{IntMatrix, ModBasis, RationalVector};
pub use graphs::Graph;
pub use limits::Limits;
pub use simplex::{HStarVector, LambdaElement, LambdaSet, LaplacianSimplex};
