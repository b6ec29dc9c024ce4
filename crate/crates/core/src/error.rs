use std::fmt;

use thiserror::Error;

/// Why a raw `(n, k, r)` triple was rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ParamsReason {
    /// One of `n`, `k`, `r` is zero.
    NonPositive,
    /// Locality exceeds the dimension (`r > k`).
    LocalityAboveDimension,
    /// Dimension is not below the length (`k >= n`).
    DimensionNotBelowLength,
    /// Too little redundancy for all-symbol locality (`n - k < ceil(k/r)`).
    RateBound,
    /// Value outside the supported integer range.
    OutOfRange,
}

impl ParamsReason {
    /// `true` for violations of the basic ordering `1 <= r <= k < n`.
    pub fn is_ordering(self) -> bool {
        matches!(
            self,
            ParamsReason::NonPositive
                | ParamsReason::LocalityAboveDimension
                | ParamsReason::DimensionNotBelowLength
                | ParamsReason::OutOfRange
        )
    }
}

impl fmt::Display for ParamsReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ParamsReason::NonPositive => "n, k and r must be positive",
            ParamsReason::LocalityAboveDimension => "locality r exceeds dimension k",
            ParamsReason::DimensionNotBelowLength => "dimension k must be below length n",
            ParamsReason::RateBound => "n - k is smaller than ceil(k/r) (rate bound)",
            ParamsReason::OutOfRange => "parameter outside [1, 2^31)",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameters (n={n}, k={k}, r={r}): {reason}")]
    InvalidParams {
        n: u64,
        k: u64,
        r: u64,
        reason: ParamsReason,
    },
    #[error("vertex {vertex} out of range for order {order}")]
    UnknownVertex { vertex: usize, order: usize },
    #[error("self-loop on vertex {0}")]
    Loop(usize),
    #[error("subgraph order {k} out of range 1..={order}")]
    BadK { k: usize, order: usize },
    #[error("bad arguments: {0}")]
    BadArgs(String),
    #[error("degree sequence is not graphic")]
    NotGraphic,
    #[error("{what} = {value} exceeds the search envelope ({limit})")]
    EnvelopeExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
    },
    #[error("extremal number is unbounded: {0}")]
    Unbounded(String),
    #[error("invalid Tanner graph: {0}")]
    InvalidTanner(String),
    #[error("invalid pruned graph: {0}")]
    InvalidPruned(String),
    #[error("check node {check} out of range ({count} checks)")]
    UnknownCheck { check: usize, count: usize },
    #[error("pruned graph already has the minimum number of check nodes")]
    NothingToReduce,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field order bound does not fit in 64 bits")]
    FieldTooLarge,
    #[error("parity-check matrix has rank {rank}, expected {expected}")]
    DegenerateCode { rank: usize, expected: usize },
    #[error("coordinate {0} is not covered by any local row")]
    NoLocalCover(usize),
    #[error("erasure pattern must contain exactly one erased position, found {0}")]
    BadErasure(usize),
    #[error("optimal distance not achievable: largest distance is {decided}")]
    NotAchievable { decided: usize },
    #[error("largest minimum distance is unresolved for these parameters")]
    Undecided,
    #[error("no verified code after {attempts} attempts")]
    RetriesExhausted { attempts: usize },
    #[error("malformed file: {0}")]
    Malformed(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
