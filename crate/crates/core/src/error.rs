use thiserror::Error;

/// Errors raised by semigroup, ideal, series and criteria computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty generator list")]
    EmptyInput,
    #[error("generator {0} is not a positive integer")]
    InvalidGenerator(i64),
    #[error("generators have gcd {0}; the semigroup is not cofinite")]
    NotCofinite(i64),
    #[error("{0} is not a positive element of the semigroup")]
    NotMember(i64),
    #[error("membership table of size {0} exceeds the supported limit")]
    TooLarge(i64),

    #[error("an ideal needs at least one generator")]
    EmptyGenerators,
    #[error("ideals live over different semigroups")]
    AmbientMismatch,
    #[error("first ideal is not contained in the second")]
    NotContained,
    #[error("ideal has values outside the semigroup")]
    NotIntegral,
    #[error("ideal is not m-primary: {0}")]
    NotMPrimary(String),

    #[error("internal disagreement between equivalent routes: {0}")]
    InternalDisagreement(String),
    #[error("the covering ideal is not Ulrich")]
    JNotUlrich,
    #[error("semigroup is not symmetric")]
    NotSymmetric,
    #[error("ring is not Gorenstein")]
    NotGorenstein,

    #[error("truncation {got} is below the required {required}")]
    TruncationTooSmall { required: i64, got: i64 },
    #[error("element is not in the ring: {0}")]
    NotInRing(String),
    #[error("truncation is unsound: {0}")]
    TruncationUnsound(String),
    #[error("element is a zero divisor: branch {0} vanishes")]
    ZeroDivisorWitness(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
