//! Integer factorization behind a narrow interface.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Default cap on trial-division candidates per factorization.
///
/// Enough to fully factor any integer below roughly `4 * 10^16`.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Prime factorization as `(prime, exponent)` pairs in ascending prime order.
pub type Factorization = Vec<(BigUint, u32)>;

pub trait Factorizer: Sync {
    fn factor(&self, n: &BigUint) -> Result<Factorization>;
}

/// Deterministic trial division by 2 and then odd candidates up to the square
/// root of the remaining cofactor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TrialDivision {
    /// Maximum number of candidate divisors tried before giving up.
    pub budget: u64,
}

impl Default for TrialDivision {
    fn default() -> Self {
        TrialDivision {
            budget: DEFAULT_BUDGET,
        }
    }
}

impl TrialDivision {
    pub fn new(budget: u64) -> Self {
        TrialDivision { budget }
    }

    fn exceeded(&self, n: &BigUint) -> Error {
        Error::BudgetExceeded {
            value: BigInt::from(n.clone()),
            budget: self.budget,
        }
    }

    fn factor_u64(&self, mut m: u64) -> Option<Vec<(u64, u32)>> {
        let mut out = Vec::new();
        let mut tried = 0u64;
        let mut p = 2u64;
        while (p as u128) * (p as u128) <= m as u128 {
            tried += 1;
            if tried > self.budget {
                return None;
            }
            if m.is_multiple_of(p) {
                let mut e = 0;
                while m.is_multiple_of(p) {
                    m /= p;
                    e += 1;
                }
                out.push((p, e));
            }
            p += if p == 2 { 1 } else { 2 };
        }
        if m > 1 {
            out.push((m, 1));
        }
        Some(out)
    }

    fn factor_big(&self, n: &BigUint) -> Option<Factorization> {
        let mut m = n.clone();
        let mut out = Vec::new();
        let mut tried = 0u64;
        let mut p = BigUint::from(2u32);
        while &p * &p <= m {
            // hand off to the machine-word path once the cofactor is small enough
            if let Some(small) = m.to_u64() {
                let rest = self.with_budget(self.budget - tried).factor_u64(small)?;
                out.extend(rest.into_iter().map(|(q, e)| (BigUint::from(q), e)));
                return Some(out);
            }
            tried += 1;
            if tried > self.budget {
                return None;
            }
            let (q, r) = m.div_rem(&p);
            if r.is_zero() {
                m = q;
                let mut e = 1;
                loop {
                    let (q, r) = m.div_rem(&p);
                    if !r.is_zero() {
                        break;
                    }
                    m = q;
                    e += 1;
                }
                out.push((p.clone(), e));
            }
            p += if p == BigUint::from(2u32) { 1u32 } else { 2u32 };
        }
        if !m.is_one() {
            out.push((m, 1));
        }
        Some(out)
    }

    fn with_budget(&self, budget: u64) -> Self {
        TrialDivision { budget }
    }
}

impl Factorizer for TrialDivision {
    fn factor(&self, n: &BigUint) -> Result<Factorization> {
        if n.is_zero() {
            return Err(Error::invalid("cannot factor zero"));
        }
        let found = match n.to_u64() {
            Some(small) => self
                .factor_u64(small)
                .map(|fs| fs.into_iter().map(|(p, e)| (BigUint::from(p), e)).collect()),
            None => self.factor_big(n),
        };
        found.ok_or_else(|| self.exceeded(n))
    }
}

/// All positive divisors of the factored number, ascending.
pub fn divisors(factors: &[(BigUint, u32)]) -> Vec<BigUint> {
    let mut divs = vec![BigUint::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (*e as usize + 1));
        for d in &divs {
            let mut pk = d.clone();
            next.push(pk.clone());
            for _ in 0..*e {
                pk *= p;
                next.push(pk.clone());
            }
        }
        divs = next;
    }
    divs.sort();
    divs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factor(n: u64) -> Vec<(u64, u32)> {
        TrialDivision::default()
            .factor(&BigUint::from(n))
            .unwrap()
            .into_iter()
            .map(|(p, e)| (p.to_u64().unwrap(), e))
            .collect()
    }

    #[test]
    fn small_factorizations() {
        assert_eq!(factor(1), vec![]);
        assert_eq!(factor(2), vec![(2, 1)]);
        assert_eq!(factor(1729), vec![(7, 1), (13, 1), (19, 1)]);
        assert_eq!(factor(1024), vec![(2, 10)]);
        assert_eq!(factor(97), vec![(97, 1)]);
        assert_eq!(factor(3587409), vec![(3, 6), (7, 1), (19, 1), (37, 1)]);
    }

    #[test]
    fn zero_is_rejected() {
        assert!(TrialDivision::default().factor(&BigUint::zero()).is_err());
    }

    #[test]
    fn budget_is_enforced() {
        // 1_000_003 is prime; needs ~500 odd candidates
        let td = TrialDivision::new(10);
        let err = td.factor(&BigUint::from(1_000_003u64)).unwrap_err();
        assert!(err.is_budget_exceeded());
        assert!(TrialDivision::new(1000).factor(&BigUint::from(1_000_003u64)).is_ok());
    }

    #[test]
    fn wide_path_matches_word_path() {
        // 2^64 + 1 = 274177 * 67280421310721
        let n: BigUint = (BigUint::one() << 64u32) + 1u32;
        let fs = TrialDivision::default().factor(&n).unwrap();
        assert_eq!(
            fs,
            vec![
                (BigUint::from(274177u32), 1),
                (BigUint::from(67280421310721u64), 1)
            ]
        );
        let product: BigUint = fs.iter().map(|(p, e)| p.pow(*e)).product();
        assert_eq!(product, n);
    }

    #[test]
    fn divisor_listing() {
        let fs = TrialDivision::default().factor(&BigUint::from(12u32)).unwrap();
        let ds: Vec<u64> = divisors(&fs).iter().map(|d| d.to_u64().unwrap()).collect();
        assert_eq!(ds, vec![1, 2, 3, 4, 6, 12]);
    }
}
