//! All two-cube representations of a positive integer.
//!
//! The divisor method uses `x^3 + y^3 = (x+y)(x^2 - xy + y^2)`. With
//! `s = x + y` a positive divisor of `N` and `q = N / s = s^2 - 3xy`, the
//! product `xy` is `(s^2 - q) / 3` and `x`, `y` are the roots of
//! `t^2 - s t + xy`. Since `x^2 - xy + y^2 >= s^2 / 4`, only divisors with
//! `s^3 <= 4N` can contribute.
//!
//! [`naive_representations`] is an independent scan used to check it.

use num_bigint::{BigInt, BigUint};
use num_integer::Roots;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::factor::{divisors, Factorizer, TrialDivision};
use crate::identities::{cube_sum_consecutive, exact_sqrt, Representation};

/// Largest input accepted by [`naive_representations`].
pub const NAIVE_MAX: u64 = 10_000_000_000_000;

/// Every representation of `value`, ordered by descending `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepresentationSet {
    pub value: BigInt,
    pub reps: Vec<Representation>,
}

impl RepresentationSet {
    fn new(value: BigInt, mut reps: Vec<Representation>) -> Self {
        reps.sort_by(|l, r| r.cmp(l));
        reps.dedup();
        RepresentationSet { value, reps }
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Keeps only pairs with both cubes positive.
    pub fn positive_only(mut self) -> Self {
        self.reps.retain(|r| r.y.is_positive());
        self
    }
}

fn require_positive(n: &BigInt) -> Result<BigUint> {
    n.to_biguint()
        .filter(|v| !v.is_zero())
        .ok_or_else(|| Error::invalid(format!("expected a positive integer, got {n}")))
}

pub fn divisor_representations(n: &BigInt, budget: u64) -> Result<RepresentationSet> {
    divisor_representations_with(n, &TrialDivision::new(budget))
}

pub fn divisor_representations_with(
    n: &BigInt,
    factorizer: &dyn Factorizer,
) -> Result<RepresentationSet> {
    let value = require_positive(n)?;
    let factors = factorizer.factor(&value)?;
    let bound = &value * 4u32;
    let mut reps = Vec::new();
    for s in divisors(&factors) {
        if s.pow(3) > bound {
            break;
        }
        let q = BigInt::from(&value / &s);
        let s = BigInt::from(s);
        let diff = &s * &s - q;
        if !(&diff % 3u32).is_zero() {
            continue;
        }
        let product = diff / 3u32;
        let disc = &s * &s - product * 4u32;
        let Some(t) = exact_sqrt(&disc) else { continue };
        let sum = &s + &t;
        if (&sum % 2u32).is_zero() {
            reps.push(Representation::new(sum / 2u32, (&s - &t) / 2u32));
        }
    }
    Ok(RepresentationSet::new(n.clone(), reps))
}

/// Direct scan over the second cube.
///
/// For `y >= 0` both cubes are at most `N`. For `y < 0`, `x >= |y| + 1`
/// forces `N >= 3|y|^2`, so `|y| <= sqrt(N/3)`; the inner loop over `x`
/// stops as soon as `x^3 - |y|^3` passes `N`.
pub fn naive_representations(n: &BigInt) -> Result<RepresentationSet> {
    require_positive(n)?;
    let target = n
        .to_u64()
        .filter(|v| *v <= NAIVE_MAX)
        .ok_or_else(|| Error::invalid(format!("{n} is above the naive scan limit {NAIVE_MAX}")))?
        as i128;
    let cube = |v: i128| v * v * v;
    let mut reps = Vec::new();

    let mut y = 0i128;
    while 2 * cube(y) <= target {
        let mut x = y;
        loop {
            let v = cube(x) + cube(y);
            if v > target {
                break;
            }
            if v == target {
                reps.push(Representation::new(x as i64, y as i64));
            }
            x += 1;
        }
        y += 1;
    }

    let m_max = (target / 3).sqrt() + 1;
    for m in 1..=m_max {
        let mut x = m + 1;
        loop {
            let v = cube(x) - cube(m);
            if v > target {
                break;
            }
            if v == target {
                reps.push(Representation::new(x as i64, -(m as i64)));
            }
            x += 1;
        }
    }
    Ok(RepresentationSet::new(n.clone(), reps))
}

/// `n` in `[1, n_max]` whose consecutive-cube sum has at least `min_reps`
/// representations, counting the consecutive pair itself. Ascending `n`.
pub fn multi_representations(
    n_max: u64,
    min_reps: usize,
    budget: u64,
) -> Result<Vec<(BigInt, RepresentationSet)>> {
    if n_max < 1 {
        return Err(Error::invalid("n_max must be at least 1"));
    }
    if min_reps < 2 {
        return Err(Error::invalid("min_reps must be at least 2"));
    }
    let found: Vec<Result<Option<(BigInt, RepresentationSet)>>> = (1..=n_max)
        .into_par_iter()
        .map(|i| {
            let n = BigInt::from(i);
            let set = divisor_representations(&cube_sum_consecutive(&n), budget).map_err(|e| {
                Error::AtIndex {
                    n: n.clone(),
                    source: Box::new(e),
                }
            })?;
            Ok((set.len() >= min_reps).then_some((n, set)))
        })
        .collect();
    found.into_iter().filter_map(Result::transpose).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factor::DEFAULT_BUDGET;

    fn reps(pairs: &[(i64, i64)]) -> Vec<Representation> {
        pairs.iter().map(|&(x, y)| Representation::new(x, y)).collect()
    }

    fn div(n: i64) -> Vec<Representation> {
        divisor_representations(&BigInt::from(n), DEFAULT_BUDGET).unwrap().reps
    }

    fn naive(n: i64) -> Vec<Representation> {
        naive_representations(&BigInt::from(n)).unwrap().reps
    }

    #[test]
    fn divisor_examples() {
        assert_eq!(div(1729), reps(&[(12, 1), (10, 9)]));
        assert_eq!(div(91), reps(&[(6, -5), (4, 3)]));
        assert_eq!(div(2), reps(&[(1, 1)]));
        assert_eq!(div(5), reps(&[]));
        assert_eq!(div(1), reps(&[(1, 0)]));
    }

    #[test]
    fn naive_examples() {
        assert_eq!(naive(189), reps(&[(6, -3), (5, 4)]));
        assert_eq!(naive(1), reps(&[(1, 0)]));
        assert_eq!(naive(152), reps(&[(6, -4), (5, 3)]));
        assert_eq!(naive(5), reps(&[]));
        assert_eq!(naive(1729), reps(&[(12, 1), (10, 9)]));
    }

    #[test]
    fn rejects_non_positive() {
        assert!(divisor_representations(&BigInt::from(0), DEFAULT_BUDGET).is_err());
        assert!(divisor_representations(&BigInt::from(-7), DEFAULT_BUDGET).is_err());
        assert!(naive_representations(&BigInt::from(0)).is_err());
        assert!(naive_representations(&BigInt::from(NAIVE_MAX + 1)).is_err());
    }

    #[test]
    fn budget_error_surfaces() {
        // large prime near 10^12
        let err = divisor_representations(&BigInt::from(999_999_999_989i64), 100).unwrap_err();
        assert!(err.is_budget_exceeded());
    }

    #[test]
    fn positive_only_filter() {
        let set = divisor_representations(&BigInt::from(91), DEFAULT_BUDGET)
            .unwrap()
            .positive_only();
        assert_eq!(set.reps, reps(&[(4, 3)]));
    }

    #[test]
    fn multi_small_range_is_empty() {
        assert!(multi_representations(10, 3, DEFAULT_BUDGET).unwrap().is_empty());
        assert!(multi_representations(10, 1, DEFAULT_BUDGET).is_err());
        assert!(multi_representations(0, 3, DEFAULT_BUDGET).is_err());
    }
}
