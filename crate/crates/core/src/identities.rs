//! Exact algebra of `n^3 + (n+1)^3 = (n+a)^3 + (n+b)^3`.
//!
//! Expanding and cancelling the cubic terms leaves the quadratic
//!
//! ```text
//! 3n^2(a+b-1) + 3n(a^2+b^2-1) + (a^3+b^3-1) = 0
//! ```
//!
//! whose discriminant is
//! `D = 3((a-b)^4 - (a^4 + b^4 + (a-1)^4 + (b-1)^4) + 1)`, giving
//! `n = (-3(a^2+b^2-1) +/- sqrt(D)) / (6(a+b-1))`.
//!
//! Everything here is exact. Perfect squares are detected with an integer
//! square root, never with floating point.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Which sign was applied to `sqrt(D)` in the root formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Branch {
    Plus,
    Minus,
}

impl Branch {
    pub fn symbol(self) -> &'static str {
        match self {
            Branch::Plus => "+",
            Branch::Minus => "-",
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for Branch {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "+" => Ok(Branch::Plus),
            "-" => Ok(Branch::Minus),
            other => Err(Error::Parse(format!("unknown root branch {other:?}"))),
        }
    }
}

/// A pair `(x, y)` with `x^3 + y^3` equal to the integer it represents.
///
/// Kept in canonical order `x >= y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Representation {
    pub x: BigInt,
    pub y: BigInt,
}

impl Representation {
    /// Builds a representation, swapping the arguments if needed so that `x >= y`.
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        let (x, y) = (x.into(), y.into());
        if x >= y {
            Representation { x, y }
        } else {
            Representation { x: y, y: x }
        }
    }

    pub fn value(&self) -> BigInt {
        cube(&self.x) + cube(&self.y)
    }
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// One solution `(n, a, b)` together with its derived quantities.
///
/// Fields are public so that externally supplied rows can be checked with
/// [`verify_record`]; use [`CubeSumRecord::new`] to build a consistent one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CubeSumRecord {
    pub n: BigInt,
    pub a: BigInt,
    pub b: BigInt,
    /// `N = n^3 + (n+1)^3`.
    pub sum: BigInt,
    /// `n + a`.
    pub x: BigInt,
    /// `n + b`.
    pub y: BigInt,
    pub root: Option<Branch>,
}

impl CubeSumRecord {
    pub fn new(n: impl Into<BigInt>, a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        let (n, a, b) = (n.into(), a.into(), b.into());
        let sum = cube_sum_consecutive(&n);
        let x = &n + &a;
        let y = &n + &b;
        CubeSumRecord {
            n,
            a,
            b,
            sum,
            x,
            y,
            root: None,
        }
    }

    pub fn with_root(mut self, root: Option<Branch>) -> Self {
        self.root = root;
        self
    }

    /// Builds the record for a representation `(x, y)` of `n^3 + (n+1)^3`.
    pub fn from_representation(n: &BigInt, rep: &Representation) -> Self {
        CubeSumRecord::new(n.clone(), &rep.x - n, &rep.y - n)
    }

    pub fn representation(&self) -> Representation {
        Representation::new(self.x.clone(), self.y.clone())
    }

    /// `(a, b)` is `(1, 0)` or `(0, 1)`: the consecutive pair represents itself.
    pub fn is_trivial(&self) -> bool {
        is_trivial_pair(&self.a, &self.b)
    }
}

pub(crate) fn is_trivial_pair(a: &BigInt, b: &BigInt) -> bool {
    (a.is_one() && b.is_zero()) || (a.is_zero() && b.is_one())
}

pub fn cube(v: &BigInt) -> BigInt {
    v * v * v
}

pub fn cube_sum_consecutive(n: &BigInt) -> BigInt {
    let next = n + 1;
    cube(n) + cube(&next)
}

pub fn discriminant(a: &BigInt, b: &BigInt) -> BigInt {
    let one = BigInt::one();
    let diff = a - b;
    let am1 = a - &one;
    let bm1 = b - &one;
    let inner = diff.pow(4u32) - (a.pow(4u32) + b.pow(4u32) + am1.pow(4u32) + bm1.pow(4u32)) + one;
    inner * 3
}

/// Left-hand side of the reduced quadratic, evaluated at `n`. Zero exactly for solutions.
pub fn quadratic_residual(a: &BigInt, b: &BigInt, n: &BigInt) -> BigInt {
    let (lead, mid, constant) = quadratic_coefficients(a, b);
    lead * n * n + mid * n + constant
}

fn quadratic_coefficients(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let lead = (a + b - 1) * 3;
    let mid = (a * a + b * b - 1) * 3;
    let constant = cube(a) + cube(b) - 1;
    (lead, mid, constant)
}

/// Exact square root of `v` when `v` is a perfect square.
pub fn exact_sqrt(v: &BigInt) -> Option<BigInt> {
    if v.is_negative() {
        return None;
    }
    let s = v.sqrt();
    (&s * &s == *v).then_some(s)
}

/// How the reduced quadratic behaves when its leading coefficient vanishes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Degeneracy {
    /// `a + b - 1 != 0`: a genuine quadratic.
    None,
    /// `a + b - 1 = 0`: the equation is linear in `n`.
    Linear,
    /// The equation collapses to `0 = 0`; every `n` works. Only `(1,0)` and `(0,1)`.
    Identity,
}

/// Outcome of solving the reduced quadratic for fixed `(a, b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairSolution {
    pub a: BigInt,
    pub b: BigInt,
    pub discriminant: BigInt,
    pub roots: Vec<(Branch, BigInt)>,
    pub degeneracy: Degeneracy,
}

impl PairSolution {
    pub fn is_degenerate(&self) -> bool {
        self.degeneracy != Degeneracy::None
    }

    pub fn root_for(&self, n: &BigInt) -> Option<Branch> {
        self.roots.iter().find(|(_, r)| r == n).map(|(br, _)| *br)
    }
}

pub fn solve_pair(a: &BigInt, b: &BigInt) -> PairSolution {
    let discriminant = discriminant(a, b);
    let (lead, mid, constant) = quadratic_coefficients(a, b);

    if lead.is_zero() {
        let (roots, degeneracy) = if mid.is_zero() && constant.is_zero() {
            (Vec::new(), Degeneracy::Identity)
        } else {
            (
                linear_root(&mid, &constant).map(|n| (Branch::Plus, n)).into_iter().collect(),
                Degeneracy::Linear,
            )
        };
        return PairSolution {
            a: a.clone(),
            b: b.clone(),
            discriminant,
            roots,
            degeneracy,
        };
    }

    let roots = match exact_sqrt(&discriminant) {
        Some(s) => quadratic_roots(&(-&mid), &s, &(&lead * 2)),
        None => Vec::new(),
    };
    PairSolution {
        a: a.clone(),
        b: b.clone(),
        discriminant,
        roots,
        degeneracy: Degeneracy::None,
    }
}

// Integer solution of `mid * n + constant = 0`.
fn linear_root(mid: &BigInt, constant: &BigInt) -> Option<BigInt> {
    if mid.is_zero() {
        return None;
    }
    let num = -constant;
    (&num % mid).is_zero().then(|| num / mid)
}

// Exact roots of `(base +/- sqrt_d) / denom`. A zero discriminant yields one `Plus` root.
fn quadratic_roots(base: &BigInt, sqrt_d: &BigInt, denom: &BigInt) -> Vec<(Branch, BigInt)> {
    let mut roots = Vec::with_capacity(2);
    let candidates: &[(Branch, BigInt)] = &[(Branch::Plus, base + sqrt_d), (Branch::Minus, base - sqrt_d)];
    let count = if sqrt_d.is_zero() { 1 } else { 2 };
    for (branch, num) in &candidates[..count] {
        if (num % denom).is_zero() {
            roots.push((*branch, num / denom));
        }
    }
    roots
}

/// Roots of `(a, b)` for machine-sized inputs.
///
/// Runs in checked `i128` arithmetic and falls back to [`solve_pair`] on
/// overflow or degeneracy, so the result is always identical to it.
pub fn solve_pair_small(a: i64, b: i64) -> Vec<(Branch, BigInt)> {
    match small::roots(a, b) {
        Some(roots) => roots
            .into_iter()
            .flatten()
            .map(|(br, n)| (br, BigInt::from(n)))
            .collect(),
        None => solve_pair(&BigInt::from(a), &BigInt::from(b)).roots,
    }
}

mod small {
    use super::Branch;
    use num_integer::Roots;

    fn pow4(v: i128) -> Option<i128> {
        v.checked_mul(v)?.checked_mul(v)?.checked_mul(v)
    }

    pub(super) fn discriminant(a: i128, b: i128) -> Option<i128> {
        let sum = pow4(a)?
            .checked_add(pow4(b)?)?
            .checked_add(pow4(a.checked_sub(1)?)?)?
            .checked_add(pow4(b.checked_sub(1)?)?)?;
        pow4(a.checked_sub(b)?)?
            .checked_sub(sum)?
            .checked_add(1)?
            .checked_mul(3)
    }

    /// `None` means "use the arbitrary-precision path".
    pub(super) fn roots(a: i64, b: i64) -> Option<[Option<(Branch, i128)>; 2]> {
        let (a, b) = (a as i128, b as i128);
        let t = a.checked_add(b)?.checked_sub(1)?;
        if t == 0 {
            return None;
        }
        let d = discriminant(a, b)?;
        if d < 0 {
            return Some([None, None]);
        }
        let s = (d as u128).sqrt();
        if s.checked_mul(s)? != d as u128 {
            return Some([None, None]);
        }
        let s = s as i128;
        let base = a
            .checked_mul(a)?
            .checked_add(b.checked_mul(b)?)?
            .checked_sub(1)?
            .checked_mul(-3)?;
        let denom = t.checked_mul(6)?;
        let pick = |num: i128, br: Branch| (num % denom == 0).then(|| (br, num / denom));
        let plus = pick(base.checked_add(s)?, Branch::Plus);
        let minus = if s == 0 {
            None
        } else {
            pick(base.checked_sub(s)?, Branch::Minus)
        };
        Some([plus, minus])
    }
}

/// Integer roots of `n^3 + (n+1)^3 = (n+3)^3 + (n+alpha)^3`.
///
/// Evaluated from the closed form in `alpha` directly:
/// `n = (-3(alpha^2+8) +/- sqrt(-3(alpha^4 + 8(alpha^3 - 6alpha^2 + 13alpha + 2)))) / (6(alpha+2))`,
/// with the linear equation `3n(alpha^2+8) + alpha^3 + 26 = 0` at `alpha = -2`.
pub fn alpha_solve(alpha: &BigInt) -> Vec<(Branch, BigInt)> {
    let sq = alpha * alpha;
    let shifted: BigInt = &sq + 8;
    let base = -&shifted * 3;
    let denom: BigInt = (alpha + 2) * 6;
    if denom.is_zero() {
        let mid = &shifted * 3;
        let constant = cube(alpha) + 26u32;
        return linear_root(&mid, &constant)
            .map(|n| (Branch::Plus, n))
            .into_iter()
            .collect();
    }
    let poly: BigInt = &sq * &sq + (cube(alpha) - &sq * 6 + alpha * 13 + 2u32) * 8;
    let radicand = -poly * 3;
    match exact_sqrt(&radicand) {
        Some(s) => quadratic_roots(&base, &s, &denom),
        None => Vec::new(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaRoot {
    pub alpha: i64,
    pub root: Branch,
    pub n: BigInt,
}

/// Every `alpha` in `[alpha_min, alpha_max]` with an integer root, ascending.
pub fn alpha_scan(alpha_min: i64, alpha_max: i64) -> Result<Vec<AlphaRoot>> {
    if alpha_min > alpha_max {
        return Err(Error::invalid(format!(
            "alpha range is empty: min {alpha_min} > max {alpha_max}"
        )));
    }
    Ok((alpha_min..=alpha_max)
        .flat_map(|alpha| {
            alpha_solve(&BigInt::from(alpha))
                .into_iter()
                .map(move |(root, n)| AlphaRoot { alpha, root, n })
        })
        .collect())
}

/// True iff the record satisfies the cube identity, its derived fields are
/// consistent, and it is not the trivial self-representation.
pub fn verify_record(r: &CubeSumRecord) -> bool {
    if r.is_trivial() {
        return false;
    }
    if r.x != &r.n + &r.a || r.y != &r.n + &r.b {
        return false;
    }
    let lhs = cube_sum_consecutive(&r.n);
    lhs == r.sum && cube(&r.x) + cube(&r.y) == lhs
}

/// Maps `(n, a, b)` to `(-n-1, 1-b, 1-a)`, a solution of the same quadratic whose
/// cube sum is `-N`.
pub fn mirror(r: &CubeSumRecord) -> Result<CubeSumRecord> {
    if !verify_record(r) {
        return Err(not_verifying(r));
    }
    let n = -&r.n - 1;
    let a = BigInt::one() - &r.b;
    let b = BigInt::one() - &r.a;
    let root = solve_pair(&a, &b).root_for(&n);
    Ok(CubeSumRecord::new(n, a, b).with_root(root))
}

pub(crate) fn not_verifying(r: &CubeSumRecord) -> Error {
    Error::NotVerifying {
        n: r.n.clone(),
        a: r.a.clone(),
        b: r.b.clone(),
    }
}

/// `(k x, k y)`, a representation of `k^3 N`.
pub fn scale_representation(rep: &Representation, k: &BigInt) -> Result<Representation> {
    if !k.is_positive() {
        return Err(Error::invalid(format!("scale factor must be positive, got {k}")));
    }
    Ok(Representation::new(&rep.x * k, &rep.y * k))
}

/// `eta = (n+a) + (n+b)`.
pub fn eta(r: &CubeSumRecord) -> BigInt {
    &r.n * 2 + &r.a + &r.b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn consecutive_cube_sums() {
        assert_eq!(cube_sum_consecutive(&big(3)), big(91));
        assert_eq!(cube_sum_consecutive(&big(0)), big(1));
        assert_eq!(cube_sum_consecutive(&big(9)), big(1729));
        assert_eq!(cube_sum_consecutive(&big(-1)), big(-1));
    }

    #[test]
    fn discriminant_values() {
        assert_eq!(discriminant(&big(3), &big(-8)), big(11664));
        assert_eq!(discriminant(&big(3), &big(-8)), big(108 * 108));
        assert_eq!(discriminant(&big(2), &big(-7)), big(144));
        assert_eq!(discriminant(&big(1), &big(0)), big(0));
        assert_eq!(discriminant(&big(5), &big(-5)), big(21597));
    }

    #[test]
    fn solve_pair_table_rows() {
        let s = solve_pair(&big(3), &big(-8));
        assert_eq!(s.roots, vec![(Branch::Plus, big(3)), (Branch::Minus, big(9))]);
        assert_eq!(s.degeneracy, Degeneracy::None);

        // minus branch is 14/3
        let s = solve_pair(&big(2), &big(-7));
        assert_eq!(s.roots, vec![(Branch::Plus, big(4))]);

        let s = solve_pair(&big(5), &big(-5));
        assert!(exact_sqrt(&s.discriminant).is_none());
        assert!(s.roots.is_empty());
    }

    #[test]
    fn solve_pair_degenerate() {
        let s = solve_pair(&big(1), &big(0));
        assert_eq!(s.degeneracy, Degeneracy::Identity);
        assert!(s.roots.is_empty());
        assert_eq!(solve_pair(&big(0), &big(1)).degeneracy, Degeneracy::Identity);

        let s = solve_pair(&big(3), &big(-2));
        assert_eq!(s.degeneracy, Degeneracy::Linear);
        assert!(s.roots.is_empty());
    }

    #[test]
    fn negative_discriminant_has_no_roots() {
        let s = solve_pair(&big(3), &big(0));
        assert_eq!(s.discriminant, big(-48));
        assert!(s.roots.is_empty());
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(
            alpha_solve(&big(-8)),
            vec![(Branch::Plus, big(3)), (Branch::Minus, big(9))]
        );
        assert!(alpha_solve(&big(0)).is_empty());
        assert!(alpha_solve(&big(-2)).is_empty());
    }

    #[test]
    fn alpha_scan_examples() {
        let expected = vec![
            AlphaRoot { alpha: -8, root: Branch::Plus, n: big(3) },
            AlphaRoot { alpha: -8, root: Branch::Minus, n: big(9) },
        ];
        assert_eq!(alpha_scan(-10, 10).unwrap(), expected);
        assert_eq!(alpha_scan(-8, -8).unwrap(), expected);
        assert!(alpha_scan(0, 10).unwrap().is_empty());
        assert!(alpha_scan(1, 0).is_err());
    }

    #[test]
    fn verify_examples() {
        assert!(verify_record(&CubeSumRecord::new(18, 10, -39)));
        assert!(!verify_record(&CubeSumRecord::new(18, 10, -38)));
        assert!(verify_record(&CubeSumRecord::new(121, 32, -103)));
        assert!(!verify_record(&CubeSumRecord::new(5, 1, 0)));

        let mut r = CubeSumRecord::new(18, 10, -39);
        r.sum += 1;
        assert!(!verify_record(&r));
        let mut r = CubeSumRecord::new(18, 10, -39);
        r.x += 1;
        assert!(!verify_record(&r));
    }

    #[test]
    fn mirror_examples() {
        let m = mirror(&CubeSumRecord::new(3, 3, -8)).unwrap();
        assert_eq!((m.n.clone(), m.a.clone(), m.b.clone()), (big(-4), big(9), big(-2)));
        assert_eq!(m.sum, big(-91));
        assert_eq!((m.x.clone(), m.y.clone()), (big(5), big(-6)));
        assert_eq!(m.root, Some(Branch::Plus));

        let m = mirror(&CubeSumRecord::new(4, 2, -7)).unwrap();
        assert_eq!((m.n.clone(), m.a.clone(), m.b.clone()), (big(-5), big(8), big(-1)));
        assert_eq!(m.sum, big(-189));

        let r = CubeSumRecord::new(9, 3, -8);
        let back = mirror(&mirror(&r).unwrap()).unwrap();
        assert_eq!((back.n, back.a, back.b), (r.n, r.a, r.b));

        assert!(mirror(&CubeSumRecord::new(18, 10, -38)).is_err());
    }

    #[test]
    fn scaling() {
        let r = scale_representation(&Representation::new(12, 1), &big(2)).unwrap();
        assert_eq!(r, Representation::new(24, 2));
        assert_eq!(r.value(), big(13832));
        let r = scale_representation(&Representation::new(6, -5), &big(1)).unwrap();
        assert_eq!(r, Representation::new(6, -5));
        let r = scale_representation(&Representation::new(4, 3), &big(3)).unwrap();
        assert_eq!(r, Representation::new(12, 9));
        assert_eq!(r.value(), big(2457));
        assert!(scale_representation(&Representation::new(4, 3), &big(0)).is_err());
        assert!(scale_representation(&Representation::new(4, 3), &big(-2)).is_err());
    }

    #[test]
    fn eta_examples() {
        assert_eq!(eta(&CubeSumRecord::new(3, 3, -8)), big(1));
        assert_eq!(eta(&CubeSumRecord::new(4, 2, -7)), big(3));
        assert_eq!(eta(&CubeSumRecord::new(46, 105, -194)), big(3));
    }

    #[test]
    fn representation_is_canonical() {
        let r = Representation::new(-5, 6);
        assert_eq!((r.x, r.y), (big(6), big(-5)));
    }

    #[test]
    fn small_path_handles_overflow() {
        let roots = solve_pair_small(i64::MAX, i64::MIN);
        let expected = solve_pair(&big(i64::MAX), &big(i64::MIN)).roots;
        assert_eq!(roots, expected);
    }
}
