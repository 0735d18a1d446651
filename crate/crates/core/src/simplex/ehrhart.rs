use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::simplex::HStarVector;

/// Coefficients (constant term first) of `L(t) = Σ_i h*_i·binom(t + d − i, d)`.
pub fn ehrhart_polynomial(h: &HStarVector, d: usize) -> Result<Vec<BigRational>> {
    check(h, d)?;
    let mut total = vec![BigInt::zero(); d + 1];
    for (i, &c) in h.coefficients().iter().enumerate() {
        // Π_{m=1..d} (t − i + m)
        let mut poly = vec![BigInt::one()];
        for m in 1..=d {
            let shift = BigInt::from(m as i64 - i as i64);
            let mut next = vec![BigInt::zero(); poly.len() + 1];
            for (k, a) in poly.iter().enumerate() {
                next[k + 1] += a;
                next[k] += a * &shift;
            }
            poly = next;
        }
        for (k, a) in poly.into_iter().enumerate() {
            total[k] += a * BigInt::from(c);
        }
    }
    let factorial: BigInt = (1..=d).map(BigInt::from).product();
    Ok(total
        .into_iter()
        .map(|a| BigRational::new(a, factorial.clone()))
        .collect())
}

/// `L(t)` evaluated directly from binomial coefficients.
pub fn ehrhart_value(h: &HStarVector, d: usize, t: u64) -> Result<BigInt> {
    check(h, d)?;
    let mut sum = BigInt::zero();
    for (i, &c) in h.coefficients().iter().enumerate() {
        if t < i as u64 {
            continue;
        }
        let top = t + d as u64 - i as u64;
        let mut binom = BigInt::one();
        for m in 0..d as u64 {
            binom = binom * BigInt::from(top - m) / BigInt::from(m + 1);
        }
        sum += binom * BigInt::from(c);
    }
    Ok(sum)
}

fn check(h: &HStarVector, d: usize) -> Result<()> {
    if h.coefficients().len() > d + 1 {
        return Err(Error::DimensionMismatch(format!(
            "h* has {} entries, more than d + 1 = {}",
            h.coefficients().len(),
            d + 1
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eval(p: &[BigRational], t: i64) -> BigRational {
        p.iter().rev().fold(BigRational::zero(), |acc, c| {
            acc * BigRational::from_integer(t.into()) + c
        })
    }

    #[test]
    fn constant_polynomial() {
        let p = ehrhart_polynomial(&HStarVector::new(vec![1]).unwrap(), 0).unwrap();
        assert_eq!(p, vec![BigRational::one()]);
    }

    #[test]
    fn triangle_of_complete_graph() {
        let h = HStarVector::new(vec![1, 7, 1]).unwrap();
        let p = ehrhart_polynomial(&h, 2).unwrap();
        // L(t) = (9t² + 9t + 2)/2
        let half = |a: i64| BigRational::new(a.into(), 2.into());
        assert_eq!(p, vec![half(2), half(9), half(9)]);
        assert_eq!(eval(&p, 1), BigRational::from_integer(10.into()));
        assert_eq!(ehrhart_value(&h, 2, 1).unwrap() - 2 - 1, BigInt::from(7));
    }

    #[test]
    fn value_and_polynomial_agree() {
        let h = HStarVector::new(vec![1, 3, 3, 5, 3, 5, 3, 3, 1]).unwrap();
        let p = ehrhart_polynomial(&h, 8).unwrap();
        assert_eq!(eval(&p, 0), BigRational::one());
        for t in 0..6 {
            assert_eq!(
                eval(&p, t),
                BigRational::from_integer(ehrhart_value(&h, 8, t as u64).unwrap())
            );
        }
        // leading coefficient is the volume over d!
        assert_eq!(p[8], BigRational::new(27.into(), 40320.into()));
        assert!(ehrhart_polynomial(&h, 7).is_err());
    }
}
