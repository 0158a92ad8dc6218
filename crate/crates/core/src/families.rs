//! The two infinite families of solutions.
//!
//! Writing `n + b = -(n + a) + beta`, the cube identity factors into a linear
//! and an irreducible quadratic term in `n` when
//!
//! * `a = (beta - 1) n + beta^2 + beta + 1` with `beta = 2i - 1` (family one), or
//! * `a = ((beta - 3) n + 2 beta) / 3` with `beta = 3(2i - 1)` (family two).
//!
//! Rows are produced either from the closed forms in `i` or from third-order
//! recurrences seeded with the first three closed-form rows.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::identities::{cube_sum_consecutive, eta, not_verifying, verify_record, CubeSumRecord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyId {
    One,
    Two,
}

impl FamilyId {
    pub const ALL: [FamilyId; 2] = [FamilyId::One, FamilyId::Two];

    pub fn number(self) -> u8 {
        match self {
            FamilyId::One => 1,
            FamilyId::Two => 2,
        }
    }

    pub fn params(self) -> FamilyParams {
        match self {
            FamilyId::One => FamilyParams {
                family: self,
                kappa: 72,
                lambda_coefficient: 576,
            },
            FamilyId::Two => FamilyParams {
                family: self,
                kappa: 216,
                lambda_coefficient: 1728,
            },
        }
    }

    /// `beta` for index `i`: `2i - 1` or `3(2i - 1)`.
    pub fn beta(self, i: u64) -> BigInt {
        let odd = BigInt::from(i) * 2 - 1;
        match self {
            FamilyId::One => odd,
            FamilyId::Two => odd * 3,
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "1" => Ok(FamilyId::One),
            "2" => Ok(FamilyId::Two),
            other => Err(Error::Parse(format!("unknown family {other:?}"))),
        }
    }
}

/// Recurrence constants: `kappa` for `n`, and `lambda = lambda_coefficient * (i - 2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyParams {
    pub family: FamilyId,
    pub kappa: i64,
    pub lambda_coefficient: i64,
}

impl FamilyParams {
    pub fn lambda(&self, i: u64) -> BigInt {
        BigInt::from(self.lambda_coefficient) * (BigInt::from(i) - 2)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FamilyRow {
    pub family: FamilyId,
    pub i: u64,
    pub n: BigInt,
    /// `n + a`.
    pub x: BigInt,
    /// `n + b`.
    pub y: BigInt,
    pub eta: BigInt,
    /// `N = n^3 + (n+1)^3 = x^3 + y^3`.
    pub sum: BigInt,
    pub beta: BigInt,
}

impl FamilyRow {
    pub fn record(&self) -> CubeSumRecord {
        CubeSumRecord::new(self.n.clone(), &self.x - &self.n, &self.y - &self.n)
    }
}

fn halve(v: BigInt) -> BigInt {
    let (q, r) = v.div_rem(&BigInt::from(2));
    debug_assert!(r.is_zero());
    q
}

fn check_index(i: u64) -> Result<()> {
    if i == 0 {
        return Err(Error::invalid("family index must be at least 1"));
    }
    Ok(())
}

/// Closed-form row `i` of a family.
pub fn parametric_row(family: FamilyId, i: u64) -> Result<FamilyRow> {
    check_index(i)?;
    let m = BigInt::from(i) * 2 - 1;
    let m2: BigInt = &m * &m;
    let m3: BigInt = &m2 * &m;
    let (n, sum, x, y) = match family {
        FamilyId::One => {
            // n = (m(3m^2+4) - 1) / 2
            let core = &m * (&m2 * 3 + 4);
            let n = halve(&core - 1);
            let inner: BigInt = &m2 * 3 + 4;
            let sum = halve(halve(&core * (&m2 * inner.pow(2u32) + 3)));
            let shell = &m2 * 3 * (&m2 + 2);
            let two_i = BigInt::from(i) * 2;
            let x = halve(&shell + &two_i + 1);
            let y = -halve(&shell - &two_i + 3);
            (n, sum, x, y)
        }
        FamilyId::Two => {
            let n = halve(&m3 * 9 - 1);
            let sum = halve(halve(&m3 * 27 * (m3.pow(2u32) * 27 + 1)));
            let x = halve(&m * 3 * (&m3 * 3 + 1));
            let y = -halve(&m * 3 * (&m3 * 3 - 1));
            (n, sum, x, y)
        }
    };
    Ok(FamilyRow {
        family,
        i,
        eta: &x + &y,
        n,
        x,
        y,
        sum,
        beta: family.beta(i),
    })
}

fn step(prev: [&BigInt; 3], add: &BigInt) -> BigInt {
    let [p1, p2, p3] = prev;
    p1 * 3 - p2 * 3 + p3 + add
}

/// Rows `1..=count` from the third-order recurrences.
///
/// The first three rows come from [`parametric_row`]; each later row `i`
/// applies `v_i = 3v_{i-1} - 3v_{i-2} + v_{i-3} + c` with `c = kappa` for
/// `n`, `+lambda(i)` for `x` and `-lambda(i)` for `y`.
pub fn recurrence_rows(family: FamilyId, count: u64) -> Result<Vec<FamilyRow>> {
    if count == 0 {
        return Err(Error::invalid("count must be at least 1"));
    }
    let params = family.params();
    let kappa = BigInt::from(params.kappa);
    let mut rows = Vec::with_capacity(count as usize);
    for i in 1..=count {
        if i <= 3 {
            rows.push(parametric_row(family, i)?);
            continue;
        }
        let k = rows.len();
        let (r1, r2, r3) = (&rows[k - 1], &rows[k - 2], &rows[k - 3]);
        let lambda = params.lambda(i);
        let n = step([&r1.n, &r2.n, &r3.n], &kappa);
        let x = step([&r1.x, &r2.x, &r3.x], &lambda);
        let y = step([&r1.y, &r2.y, &r3.y], &-&lambda);
        rows.push(FamilyRow {
            family,
            i,
            sum: cube_sum_consecutive(&n),
            eta: &x + &y,
            n,
            x,
            y,
            beta: family.beta(i),
        });
    }
    Ok(rows)
}

/// The family and index of a verifying record, if it is a family member.
///
/// `eta` is strictly increasing in `i` within each family, so it pins down a
/// single candidate index per family. Family two is tried first.
pub fn classify_family(r: &CubeSumRecord) -> Result<Option<(FamilyId, u64)>> {
    if !verify_record(r) {
        return Err(not_verifying(r));
    }
    let e = eta(r);
    if !e.is_positive() || e.is_even() {
        return Ok(None);
    }
    let mut candidates = Vec::with_capacity(2);
    if (&e % 3u32).is_zero() {
        candidates.push((FamilyId::Two, (&e / 3u32 + 1u32) / 2u32));
    }
    candidates.push((FamilyId::One, (&e + 1u32) / 2u32));
    for (family, i) in candidates {
        let Some(i) = i.to_u64() else { continue };
        let row = parametric_row(family, i)?;
        if row.n == r.n && row.x == r.x && row.y == r.y {
            return Ok(Some((family, i)));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triple(row: &FamilyRow) -> (i64, i64, i64, i64) {
        (
            row.n.to_i64().unwrap(),
            row.x.to_i64().unwrap(),
            row.y.to_i64().unwrap(),
            row.eta.to_i64().unwrap(),
        )
    }

    #[test]
    fn parametric_examples() {
        assert_eq!(triple(&parametric_row(FamilyId::One, 3).unwrap()), (197, 1016, -1011, 5));
        assert_eq!(triple(&parametric_row(FamilyId::Two, 2).unwrap()), (121, 369, -360, 9));
        let r = parametric_row(FamilyId::One, 1).unwrap();
        assert_eq!(triple(&r), (3, 6, -5, 1));
        assert_eq!(r.sum, BigInt::from(91));
        let r = parametric_row(FamilyId::Two, 1).unwrap();
        assert_eq!(triple(&r), (4, 6, -3, 3));
        assert_eq!(r.sum, BigInt::from(189));
        assert!(parametric_row(FamilyId::One, 0).is_err());
    }

    #[test]
    fn recurrence_examples() {
        let rows = recurrence_rows(FamilyId::One, 4).unwrap();
        assert_eq!(triple(rows.last().unwrap()), (528, 3753, -3746, 7));
        let rows = recurrence_rows(FamilyId::Two, 4).unwrap();
        assert_eq!(triple(rows.last().unwrap()), (1543, 10815, -10794, 21));
        let rows = recurrence_rows(FamilyId::One, 1).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(triple(&rows[0]), (3, 6, -5, 1));
        assert!(recurrence_rows(FamilyId::One, 0).is_err());
    }

    #[test]
    fn lambda_at_first_step() {
        assert_eq!(FamilyId::One.params().lambda(4), BigInt::from(1152));
        assert_eq!(FamilyId::Two.params().lambda(4), BigInt::from(3456));
    }

    #[test]
    fn classify_examples() {
        let r = CubeSumRecord::new(46, 105, -194);
        assert_eq!(classify_family(&r).unwrap(), Some((FamilyId::One, 2)));
        let r = CubeSumRecord::new(562, 2258, -3367);
        assert_eq!(classify_family(&r).unwrap(), Some((FamilyId::Two, 3)));
        let r = CubeSumRecord::new(18, 10, -39);
        assert_eq!(classify_family(&r).unwrap(), None);
        // eta = 3 has candidates (Two, 1) and (One, 2)
        let r = CubeSumRecord::new(4, 2, -7);
        assert_eq!(classify_family(&r).unwrap(), Some((FamilyId::Two, 1)));
        assert!(classify_family(&CubeSumRecord::new(18, 10, -38)).is_err());
    }

    #[test]
    fn mirrored_records_are_not_classified() {
        let r = crate::identities::mirror(&CubeSumRecord::new(3, 3, -8)).unwrap();
        assert_eq!(classify_family(&r).unwrap(), None);
    }
}
