use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;

use crate::error::{Error, Result};

/// One element `x/D` of `Λ`, with `0 <= x_i < D` and integer height `Σx/D`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LambdaElement {
    numerators: Vec<u64>,
    denominator: u64,
    height: usize,
}

impl LambdaElement {
    pub fn new(numerators: Vec<u64>, denominator: u64) -> Result<Self> {
        if denominator == 0 {
            return Err(Error::ParameterOutOfRange("denominator must be positive".into()));
        }
        if let Some(&bad) = numerators.iter().find(|&&x| x >= denominator) {
            return Err(Error::ParameterOutOfRange(format!(
                "numerator {bad} not below denominator {denominator}"
            )));
        }
        let sum: u128 = numerators.iter().map(|&x| u128::from(x)).sum();
        if !sum.is_multiple_of(u128::from(denominator)) {
            return Err(Error::ParameterOutOfRange(format!(
                "coordinate sum {sum} is not a multiple of {denominator}"
            )));
        }
        let height = (sum / u128::from(denominator)) as usize;
        Ok(LambdaElement {
            numerators,
            denominator,
            height,
        })
    }

    pub fn numerators(&self) -> &[u64] {
        &self.numerators
    }

    pub fn denominator(&self) -> u64 {
        self.denominator
    }

    pub fn height(&self) -> usize {
        self.height
    }

    /// Indices (0-based) of nonzero coordinates.
    pub fn support(&self) -> Vec<usize> {
        (0..self.numerators.len())
            .filter(|&i| self.numerators[i] != 0)
            .collect()
    }

    /// The inverse `−λ` in `Λ`.
    pub fn negated(&self) -> LambdaElement {
        let d = self.denominator;
        let numerators: Vec<u64> = self.numerators.iter().map(|&x| (d - x) % d).collect();
        LambdaElement::new(numerators, d).expect("negation stays in range")
    }

    /// `λ + μ` with fractional parts taken coordinatewise.
    pub fn add(&self, other: &LambdaElement) -> Result<LambdaElement> {
        if self.denominator != other.denominator || self.numerators.len() != other.numerators.len() {
            return Err(Error::DimensionMismatch("elements over different denominators".into()));
        }
        let d = self.denominator;
        let x = self
            .numerators
            .iter()
            .zip(&other.numerators)
            .map(|(&a, &b)| ((u128::from(a) + u128::from(b)) % u128::from(d)) as u64)
            .collect();
        LambdaElement::new(x, d)
    }

    /// The same rational vector over `denominator · factor`.
    pub fn rescaled(&self, factor: u64) -> Result<LambdaElement> {
        let d = self
            .denominator
            .checked_mul(factor)
            .ok_or_else(|| Error::Overflow(format!("{} * {factor}", self.denominator)))?;
        let numerators = self.numerators.iter().map(|&x| x * factor).collect();
        Ok(LambdaElement {
            numerators,
            denominator: d,
            height: self.height,
        })
    }
}

impl fmt::Display for LambdaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let xs: Vec<String> = self.numerators.iter().map(u64::to_string).collect();
        write!(f, "({})/{}", xs.join(","), self.denominator)
    }
}

/// `Λ(P)` as a lexicographically sorted list over one denominator.
///
/// Equality compares the underlying rational sets, so two sets over
/// different denominators can be equal.
#[derive(Clone, Debug)]
pub struct LambdaSet {
    denominator: u64,
    elements: Vec<LambdaElement>,
}

impl LambdaSet {
    /// Sorts and deduplicates the numerator vectors.
    pub fn from_numerators(denominator: u64, mut xs: Vec<Vec<u64>>) -> Result<Self> {
        xs.sort_unstable();
        xs.dedup();
        Self::from_sorted_numerators(denominator, xs)
    }

    pub(crate) fn from_sorted_numerators(denominator: u64, xs: Vec<Vec<u64>>) -> Result<Self> {
        debug_assert!(xs.windows(2).all(|w| w[0] < w[1]));
        let elements = xs
            .into_iter()
            .map(|x| LambdaElement::new(x, denominator))
            .collect::<Result<Vec<_>>>()?;
        Ok(LambdaSet { denominator, elements })
    }

    pub fn denominator(&self) -> u64 {
        self.denominator
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[LambdaElement] {
        &self.elements
    }

    pub fn iter(&self) -> std::slice::Iter<'_, LambdaElement> {
        self.elements.iter()
    }

    pub fn contains_numerators(&self, x: &[u64]) -> bool {
        self.elements.binary_search_by(|e| e.numerators().cmp(x)).is_ok()
    }

    pub fn hstar(&self) -> HStarVector {
        let n = self.elements.first().map_or(0, |e| e.numerators.len());
        let mut h = vec![0u64; n.max(1)];
        for e in &self.elements {
            h[e.height] += 1;
        }
        HStarVector { coefficients: h }
    }

    /// Same set over `denominator · factor`.
    pub fn rescaled(&self, factor: u64) -> Result<LambdaSet> {
        let elements = self
            .elements
            .iter()
            .map(|e| e.rescaled(factor))
            .collect::<Result<Vec<_>>>()?;
        Ok(LambdaSet {
            denominator: self.denominator * factor,
            elements,
        })
    }

    /// First element present in exactly one of the two sets, for diagnostics.
    pub fn first_difference(&self, other: &LambdaSet) -> Option<String> {
        let l = self.denominator.lcm(&other.denominator);
        let a = self.rescaled(l / self.denominator).ok()?;
        let b = other.rescaled(l / other.denominator).ok()?;
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            match (a.elements.get(i), b.elements.get(j)) {
                (Some(x), Some(y)) if x.numerators == y.numerators => {
                    i += 1;
                    j += 1;
                }
                (Some(x), Some(y)) if x.numerators < y.numerators => return Some(format!("only left: {x}")),
                (Some(_), Some(y)) | (None, Some(y)) => return Some(format!("only right: {y}")),
                (Some(x), None) => return Some(format!("only left: {x}")),
                (None, None) => unreachable!(),
            }
        }
        None
    }
}

impl PartialEq for LambdaSet {
    fn eq(&self, other: &Self) -> bool {
        self.len() == other.len()
            && self.elements.iter().zip(&other.elements).all(|(a, b)| {
                a.numerators.len() == b.numerators.len()
                    && a.numerators.iter().zip(&b.numerators).all(|(&x, &y)| {
                        u128::from(x) * u128::from(other.denominator) == u128::from(y) * u128::from(self.denominator)
                    })
            })
    }
}

impl Eq for LambdaSet {}

/// Coefficients `h*_0, …, h*_d` of the `h*`-polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HStarVector {
    coefficients: Vec<u64>,
}

impl HStarVector {
    pub fn new(coefficients: Vec<u64>) -> Result<Self> {
        if coefficients.is_empty() {
            return Err(Error::ParameterOutOfRange("h* vector must be non-empty".into()));
        }
        Ok(HStarVector { coefficients })
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.coefficients
    }

    /// Degree bound `d`: the vector has `d + 1` entries.
    pub fn dimension(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// Normalized volume `Σ h*_i`.
    pub fn volume(&self) -> BigUint {
        self.coefficients.iter().map(|&c| BigUint::from(c)).sum()
    }

    pub fn is_palindromic(&self) -> bool {
        self.coefficients.iter().eq(self.coefficients.iter().rev())
    }

    /// Weakly increasing then weakly decreasing.
    pub fn is_unimodal(&self) -> bool {
        let c = &self.coefficients;
        let mut i = 1;
        while i < c.len() && c[i - 1] <= c[i] {
            i += 1;
        }
        while i < c.len() && c[i - 1] >= c[i] {
            i += 1;
        }
        i == c.len()
    }

    /// The polynomial `h*(z^k)·(1 + z + … + z^{k−1})`, truncated to `len` entries.
    pub fn spread(&self, k: usize, len: usize) -> Result<HStarVector> {
        if k == 0 {
            return Err(Error::ParameterOutOfRange("spread factor must be positive".into()));
        }
        let mut out = vec![0u64; len];
        for (i, &c) in self.coefficients.iter().enumerate() {
            for d in 0..k {
                let e = i * k + d;
                if c != 0 {
                    *out.get_mut(e)
                        .ok_or_else(|| Error::DimensionMismatch(format!("term z^{e} beyond length {len}")))? += c;
                }
            }
        }
        HStarVector::new(out)
    }
}

impl fmt::Display for HStarVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs: Vec<String> = self.coefficients.iter().map(u64::to_string).collect();
        write!(f, "({})", cs.join(","))
    }
}
