//! Exhaustive enumeration of records with `0 < n < n_max` and `b < 0 < a < |b|`.
//!
//! [`search_consecutive`] decomposes every `n^3 + (n+1)^3` with the divisor
//! oracle, so it is complete for the range. [`scan_ab`] sweeps an `(a, b)`
//! window through the closed-form roots instead and serves as a cross-check.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::factor::DEFAULT_BUDGET;
use crate::identities::{cube_sum_consecutive, solve_pair, solve_pair_small, Branch, CubeSumRecord};
use crate::oracle::divisor_representations;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    /// Worker threads. `0` uses the ambient rayon pool.
    pub jobs: usize,
    /// Consecutive `n` values (or `a` values in [`scan_ab`]) handled per task.
    pub chunk_size: u64,
    /// Trial-division budget handed to the oracle.
    pub budget: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            jobs: 0,
            chunk_size: 64,
            budget: DEFAULT_BUDGET,
        }
    }
}

impl SearchConfig {
    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs;
        self
    }

    pub fn with_chunk_size(mut self, chunk_size: u64) -> Self {
        self.chunk_size = chunk_size;
        self
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    fn install<T: Send>(&self, op: impl FnOnce() -> T + Send) -> Result<T> {
        if self.jobs == 0 {
            return Ok(op());
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.jobs)
            .build()
            .map_err(|e| Error::invalid(format!("cannot start {} workers: {e}", self.jobs)))?;
        Ok(pool.install(op))
    }
}

/// Whether `(a, b)` lies in the region `b < 0 < a < |b|`.
pub fn in_search_region(a: &BigInt, b: &BigInt) -> bool {
    b.is_negative() && a.is_positive() && a < &-b
}

/// The root branch that produces `n` for `(a, b)`, if any.
fn branch_of(n: &BigInt, a: &BigInt, b: &BigInt) -> Option<Branch> {
    let roots = match (a.to_i64(), b.to_i64()) {
        (Some(a), Some(b)) => solve_pair_small(a, b),
        _ => solve_pair(a, b).roots,
    };
    roots.into_iter().find(|(_, r)| r == n).map(|(br, _)| br)
}

/// Ascending `N`, then ascending `a`.
pub fn sort_records(records: &mut [CubeSumRecord]) {
    records.sort_by(|l, r| {
        (&l.sum, &l.a, &l.n, &l.b).cmp(&(&r.sum, &r.a, &r.n, &r.b))
    });
}

fn chunks(lo: u64, hi: u64, size: u64) -> Vec<(u64, u64)> {
    let size = size.max(1);
    let mut out = Vec::new();
    let mut start = lo;
    while start < hi {
        let end = start.saturating_add(size).min(hi);
        out.push((start, end));
        start = end;
    }
    out
}

fn records_at(n: u64, budget: u64) -> Result<Vec<CubeSumRecord>> {
    let n = BigInt::from(n);
    let set = divisor_representations(&cube_sum_consecutive(&n), budget).map_err(|e| {
        Error::AtIndex {
            n: n.clone(),
            source: Box::new(e),
        }
    })?;
    Ok(set
        .reps
        .iter()
        .map(|rep| CubeSumRecord::from_representation(&n, rep))
        .filter(|r| !r.is_trivial() && in_search_region(&r.a, &r.b))
        .map(|r| {
            let root = branch_of(&r.n, &r.a, &r.b);
            r.with_root(root)
        })
        .collect())
}

pub fn search_consecutive(n_max: u64) -> Result<Vec<CubeSumRecord>> {
    search_consecutive_with(n_max, &SearchConfig::default())
}

pub fn search_consecutive_with(n_max: u64, config: &SearchConfig) -> Result<Vec<CubeSumRecord>> {
    if n_max < 2 {
        return Err(Error::invalid(format!("n_max must be at least 2, got {n_max}")));
    }
    let parts = chunks(1, n_max, config.chunk_size);
    let budget = config.budget;
    let found: Vec<Result<Vec<CubeSumRecord>>> = config.install(|| {
        parts
            .par_iter()
            .map(|&(lo, hi)| {
                let mut out = Vec::new();
                for n in lo..hi {
                    out.extend(records_at(n, budget)?);
                }
                Ok(out)
            })
            .collect()
    })?;
    let mut records = Vec::new();
    for part in found {
        records.extend(part?);
    }
    sort_records(&mut records);
    Ok(records)
}

pub fn scan_ab(a_max: i64, b_min: i64, n_limit: i64) -> Result<Vec<CubeSumRecord>> {
    scan_ab_with(a_max, b_min, n_limit, &SearchConfig::default())
}

/// Every root `0 < n < n_limit` of pairs `1 <= a <= a_max`, `b_min <= b <= -1`, `a < |b|`.
pub fn scan_ab_with(
    a_max: i64,
    b_min: i64,
    n_limit: i64,
    config: &SearchConfig,
) -> Result<Vec<CubeSumRecord>> {
    if a_max < 1 {
        return Err(Error::invalid(format!("a_max must be at least 1, got {a_max}")));
    }
    if b_min > -1 {
        return Err(Error::invalid(format!("b_min must be at most -1, got {b_min}")));
    }
    if n_limit < 1 {
        return Err(Error::invalid(format!("n_limit must be at least 1, got {n_limit}")));
    }
    let limit = BigInt::from(n_limit);
    let parts = chunks(1, a_max as u64 + 1, config.chunk_size);
    let mut records: Vec<CubeSumRecord> = config.install(|| {
        parts
            .par_iter()
            .flat_map_iter(|&(lo, hi)| {
                let limit = &limit;
                (lo as i64..hi as i64).flat_map(move |a| {
                    (b_min..-a).flat_map(move |b| {
                        solve_pair_small(a, b)
                            .into_iter()
                            .filter(|(_, n)| !n.is_zero() && n.is_positive() && n < limit)
                            .map(move |(root, n)| CubeSumRecord::new(n, a, b).with_root(Some(root)))
                    })
                })
            })
            .collect()
    })?;
    sort_records(&mut records);
    Ok(records)
}
