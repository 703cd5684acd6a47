use thiserror::Error;

/// Errors produced by the toolkit.
///
/// Variants split into two classes. Usage errors describe malformed or
/// ill-shaped input (wrong dimensions, unparseable data, missing
/// parameters) and map to CLI exit code 2. Math errors describe a failed
/// mathematical check (a violated constraint, a failed certificate step,
/// an internal self-check mismatch) and map to CLI exit code 1.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("gram matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix is not square")]
    NotSquare,
    #[error("vectors belong to different lattices")]
    LatticeMismatch,

    #[error("matrix is not alternating")]
    NotAlternating,
    #[error("alternating form has odd dimension {0}")]
    OddDimension(usize),
    #[error("alternating form is singular")]
    SingularForm,
    #[error("vector pairs to zero with the whole lattice; divisibility is undefined")]
    RadicalVector,
    #[error("input vectors are linearly dependent")]
    DependentInput,
    #[error("constraint violated: {0}")]
    ConstraintViolated(String),
    #[error("certificate step '{step}' failed: {detail}")]
    StepFailed { step: String, detail: String },
    #[error("internal self-check failed: {0}")]
    SelfCheck(String),
}

impl Error {
    /// True for input-shape problems (CLI exit 2), false for failed
    /// mathematical checks (CLI exit 1).
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::InvalidParameter(_)
                | Error::DimensionMismatch { .. }
                | Error::NotSymmetric
                | Error::NotSquare
                | Error::LatticeMismatch
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
