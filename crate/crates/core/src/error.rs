use thiserror::Error;

/// Errors raised anywhere in the library.
///
/// The variants are grouped so the CLI can map them onto distinct exit codes:
/// budget violations, invalid input, and arithmetic failures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cyclotomic conductor mismatch: {0} vs {1}")]
    ConductorMismatch(u32, u32),
    #[error("unsupported cyclotomic conductor {0} (supported: 8, 12, 20)")]
    UnsupportedConductor(u32),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("series has zero constant term")]
    ZeroConstantTerm,
    #[error("value is not rational: {0}")]
    NotRational(String),
    #[error("group closure exceeded the budget of {max_order} elements ({partial} found so far)")]
    ClosureOverflow { max_order: usize, partial: usize },
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    pub fn budget(msg: impl Into<String>) -> Self {
        Error::Budget(msg.into())
    }

    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn unsupported(msg: impl Into<String>) -> Self {
        Error::Unsupported(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
