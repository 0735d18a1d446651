//! Geometric enumeration of `Λ` straight from the definition of the
//! half-open parallelepiped, independent of the modular kernel.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::exactmat::{cofactor_matrix, determinant, IntMatrix};
use crate::limits::Limits;
use crate::simplex::{LambdaSet, LaplacianSimplex};

pub fn lambda_set_bruteforce_oracle(s: &LaplacianSimplex) -> Result<LambdaSet> {
    parallelepiped_lambda(s.vertex_matrix(), &Limits::from_env())
}

/// `Λ` of the lattice simplex whose vertices are the rows of `vertices`.
///
/// Every `z = λ·[V|1]` with `0 <= λ < 1` lies in the box bounded per
/// coordinate by the sums of negative and positive column entries. Each box
/// point is solved exactly for `λ` and kept iff every `λ_i ∈ [0, 1)`.
pub fn parallelepiped_lambda(vertices: &IntMatrix, limits: &Limits) -> Result<LambdaSet> {
    let a = vertices.with_ones_column();
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    let det = determinant(&a)?;
    if det == BigInt::from(0) {
        return Err(Error::Singular);
    }
    if det.abs() > BigInt::from(limits.oracle_volume) {
        return Err(Error::guard("oracle volume", det.abs(), limits.oracle_volume));
    }
    let mut lo = Vec::with_capacity(n);
    let mut hi = Vec::with_capacity(n);
    let mut box_size = BigInt::from(1);
    for j in 0..n {
        let col = a.column(j);
        let neg: BigInt = col.iter().filter(|v| v.is_negative()).sum();
        let pos: BigInt = col.iter().filter(|v| v.is_positive()).sum();
        box_size *= &pos - &neg + 1;
        lo.push(to_i128(&neg)?);
        hi.push(to_i128(&pos)?);
    }
    if box_size > BigInt::from(limits.oracle_box) {
        return Err(Error::guard("oracle bounding box", box_size, limits.oracle_box));
    }
    let sign = if det.is_negative() { -1 } else { 1 };
    let c = cofactor_matrix(&a)?;
    // λ_i = Σ_j z_j·C[i][j] / det, tracked as sign-corrected numerators
    let coef: Vec<Vec<i128>> = (0..n)
        .map(|j| (0..n).map(|i| to_i128(c.get(i, j)).map(|v| v * sign)).collect())
        .collect::<Result<_>>()?;
    let d = to_i128(&det.abs())?;
    let mut z = lo.clone();
    let mut num = vec![0i128; n];
    for j in 0..n {
        for i in 0..n {
            num[i] += z[j] * coef[j][i];
        }
    }
    let mut found = Vec::new();
    'outer: loop {
        if num.iter().all(|&x| (0..d).contains(&x)) {
            found.push(num.iter().map(|&x| x as u64).collect::<Vec<u64>>());
        }
        for j in 0..n {
            if z[j] < hi[j] {
                z[j] += 1;
                for i in 0..n {
                    num[i] += coef[j][i];
                }
                continue 'outer;
            }
            let span = hi[j] - lo[j];
            z[j] = lo[j];
            for i in 0..n {
                num[i] -= span * coef[j][i];
            }
        }
        break;
    }
    LambdaSet::from_numerators(d as u64, found)
}

fn to_i128(v: &BigInt) -> Result<i128> {
    v.to_i128().ok_or_else(|| Error::Overflow(v.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::Graph;
    use crate::simplex::lambda_set;

    #[test]
    fn matches_kernel_on_small_graphs() {
        for g in [
            Graph::complete(3).unwrap(),
            Graph::cycle(4).unwrap(),
            Graph::cycle(5).unwrap(),
            Graph::star(4).unwrap(),
        ] {
            let s = LaplacianSimplex::new(&g).unwrap();
            let oracle = lambda_set_bruteforce_oracle(&s).unwrap();
            assert_eq!(oracle.len() as u64, s.volume().to_u64().unwrap());
            assert_eq!(oracle, lambda_set(&s).unwrap(), "{g}");
        }
    }

    #[test]
    fn guards() {
        let s = LaplacianSimplex::new(&Graph::complete(4).unwrap()).unwrap();
        let tight = Limits {
            oracle_volume: 10,
            ..Limits::default()
        };
        assert!(matches!(
            parallelepiped_lambda(s.vertex_matrix(), &tight),
            Err(Error::GuardExceeded { .. })
        ));
        let tight = Limits {
            oracle_box: 10,
            ..Limits::default()
        };
        assert!(matches!(
            parallelepiped_lambda(s.vertex_matrix(), &tight),
            Err(Error::GuardExceeded { .. })
        ));
    }
}
