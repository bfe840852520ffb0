use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("variable count mismatch: {left} vs {right}")]
    NvarsMismatch { left: usize, right: usize },

    #[error("dimension mismatch: expected at least {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("code {0} is not dominant")]
    NotDominant(String),

    #[error("the zero code has no transition")]
    ZeroCode,

    #[error("negative coordinate at position {0}")]
    NegativeCoordinate(usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("size guard: {0}")]
    SizeGuard(String),

    #[error("non-integral coefficient: {0}")]
    NonIntegral(String),

    #[error("non-distinguishing vector: {0}")]
    NonDistinguishing(String),

    #[error("no strict majority among {t} vectors (best agreement {best})")]
    NoMajority { t: usize, best: usize },

    #[error("promise violation: {0}")]
    PromiseViolation(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// True for errors caused by a broken input promise or contract rather than
    /// malformed usage.
    pub fn is_contract_violation(&self) -> bool {
        matches!(
            self,
            Error::NonIntegral(_)
                | Error::NonDistinguishing(_)
                | Error::NoMajority { .. }
                | Error::PromiseViolation(_)
                | Error::SizeGuard(_)
        )
    }
}
