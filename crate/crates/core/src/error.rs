use num_bigint::BigInt;
use thiserror::Error;

/// Errors surfaced by the exact engines.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("partition sizes differ: lambda sums to {lambda_n}, mu sums to {mu_n}")]
    SizeMismatch { lambda_n: usize, mu_n: usize },

    #[error("face-type closed form requires n >= 2p+2 (got n={n}, p={p}); use the Murnaghan-Nakayama path instead")]
    FaceTypeRegime { n: usize, p: usize },

    #[error("closed form requires min(mu) >= p+1 (got min(mu)={min_mu}, p={p})")]
    WddHypothesis { min_mu: usize, p: usize },

    #[error("lambda is outside every face-type character family for p={p}")]
    NotInFamily { p: usize },

    #[error("instance is outside the closed-form regime (min(mu)={min_mu} <= p={p}); fall back to the character-sum engine (poly_charsum)")]
    OutOfRegime { min_mu: usize, p: usize },

    #[error("conjugacy class too large to enumerate: {size} elements exceeds limit {limit}")]
    GuardExceeded { size: BigInt, limit: u64 },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("internal consistency violation: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
