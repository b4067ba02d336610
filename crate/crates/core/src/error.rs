use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("polynomial is not homogeneous: {0}")]
    Inhomogeneous(String),
    #[error("operation requires a standard-graded ring")]
    WeightedRing,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("graded matrix entry ({row}, {col}) has the wrong degree")]
    DegreeMismatch { row: usize, col: usize },
    #[error("Hilbert function did not stabilise by degree {m_max}; raise the degree bound to at least {needed}")]
    NotStabilized { m_max: u32, needed: u32 },
    #[error("ideal of W is not contained in the ideal of V")]
    ContainmentFailed,
    #[error("{0} is not a member of the ideal")]
    NotMember(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("not a complete intersection: {0}")]
    NotCompleteIntersection(String),
    #[error("resolution is not minimal")]
    NotMinimal,
    #[error("internal check failed: {0}")]
    Internal(String),
    #[error("{line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}
