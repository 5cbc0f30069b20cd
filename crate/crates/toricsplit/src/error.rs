//! Library-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("configuration has no columns")]
    EmptyConfiguration,
    #[error("column {0} of the configuration is zero")]
    ZeroColumn(usize),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("move vector must be nonzero")]
    ZeroMove,
    #[error("operation requires a pointed configuration")]
    NotPointed,
    #[error("fiber size exceeds cap of {0} elements")]
    FiberCapExceeded(usize),
    #[error("number of minimal systems {count} exceeds cap of {cap}")]
    EnumerationCapExceeded { count: String, cap: usize },
    #[error("partition search limit exceeded: {n} columns, limit {limit}")]
    PartitionLimitExceeded { n: usize, limit: usize },
    #[error("invalid splitting witness: {0}")]
    InvalidWitness(String),
    #[error("invalid gluing certificate: {0}")]
    InvalidCertificate(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("semigroup generators must have gcd 1")]
    GcdNotOne,
    #[error("semigroup generators must be positive")]
    NonPositiveGenerator,
    #[error("expected {expected} semigroup generators, got {got}")]
    WrongArity { expected: usize, got: usize },
    #[error("semigroup generators must be distinct")]
    DuplicateGenerator,
    #[error("generator {0} is redundant: the semigroup is not 4-embedded")]
    RedundantGenerator(String),
    #[error("the numerical semigroup is not symmetric (not Gorenstein)")]
    NotGorenstein,
    #[error("the toric ideal is a complete intersection")]
    IsCompleteIntersection,
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("degenerate cycle: equal row or column indices")]
    DegenerateCycle,
    #[error("exhaustive check limit exceeded: n = {n}, limit {limit}")]
    LimitExceeded { n: usize, limit: usize },
}

impl Error {
    /// True for errors caused by a configured resource cap rather than by
    /// invalid input.
    pub fn is_resource_limit(&self) -> bool {
        matches!(
            self,
            Error::FiberCapExceeded(_)
                | Error::EnumerationCapExceeded { .. }
                | Error::PartitionLimitExceeded { .. }
                | Error::LimitExceeded { .. }
        )
    }
}
