use thiserror::Error;

/// Error type shared by the whole crate.
///
/// `ModuleFile` and the various `Invalid*`/`ShapeMismatch` variants are input
/// errors (CLI exit code 2); `PavingViolation` and `InfiniteRing`-style
/// anomalies are reported by the verification layer (exit code 1).
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid Cartan data: {0}")]
    InvalidCartan(String),

    #[error("Weyl group larger than the configured bound {0}")]
    WeylBoundExceeded(usize),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("preprojective relation fails at vertices {0:?}")]
    RelationViolation(Vec<usize>),

    #[error("chamber weight has |coordinate| >= 2 at vertex {0}; multiplicities are unsupported")]
    UnsupportedMultiplicity(usize),

    #[error("invalid dimension vector: {0}")]
    BadDimVector(String),

    #[error("invalid interval: {0}")]
    BadInterval(String),

    #[error("prime {0} is not admissible here: {1}")]
    BadPrime(u64, String),

    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("point counts do not interpolate to a nonnegative integer polynomial: {0}")]
    PavingViolation(String),

    #[error("module file: {0}")]
    ModuleFile(String),

    #[error("missing data: {0}")]
    MissingData(String),
}
