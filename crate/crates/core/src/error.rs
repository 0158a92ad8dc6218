use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The record does not satisfy `n^3 + (n+1)^3 = x^3 + y^3` with consistent derived fields.
    #[error("record (n={n}, a={a}, b={b}) does not verify")]
    NotVerifying { n: BigInt, a: BigInt, b: BigInt },

    /// Trial division needed more candidates than the configured work limit.
    #[error("factorization budget of {budget} trial divisions exceeded for {value}")]
    BudgetExceeded { value: BigInt, budget: u64 },

    /// A budget error raised while processing consecutive-cube index `n`.
    #[error("at n={n}: {source}")]
    AtIndex {
        n: BigInt,
        #[source]
        source: Box<Error>,
    },

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    /// True when this error, or the error it wraps, is a budget overrun.
    pub fn is_budget_exceeded(&self) -> bool {
        match self {
            Error::BudgetExceeded { .. } => true,
            Error::AtIndex { source, .. } => source.is_budget_exceeded(),
            _ => false,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
