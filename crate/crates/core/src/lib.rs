//! Exact search, generation and verification of integers
//! `N = n^3 + (n+1)^3 = (n+a)^3 + (n+b)^3`.
//!
//! * [`identities`]: the reduced quadratic in `n`, its discriminant and exact roots.
//! * [`oracle`]: every two-cube representation of an integer, by divisor enumeration.
//! * [`search`]: exhaustive enumeration for `0 < n < n_max`.
//! * [`families`]: the two infinite families, by closed form and by recurrence.
//! * [`io`] and [`cli`]: CSV, JSON, Markdown and b-file output, and the command line.
//!
//! All arithmetic is arbitrary precision.

pub mod cli;
pub mod error;
pub mod factor;
pub mod families;
pub mod fixtures;
pub mod identities;
pub mod io;
pub mod oracle;
pub mod search;

pub use error::{Error, Result};
pub use families::{classify_family, parametric_row, recurrence_rows, FamilyId, FamilyParams, FamilyRow};
pub use identities::{
    alpha_scan, alpha_solve, cube_sum_consecutive, discriminant, eta, mirror, scale_representation, solve_pair,
    verify_record, AlphaRoot, Branch, CubeSumRecord, Degeneracy, PairSolution, Representation,
};
pub use oracle::{divisor_representations, multi_representations, naive_representations, RepresentationSet};
pub use search::{scan_ab, search_consecutive, SearchConfig};
