use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch in {field}: expected {expected}, got {got}")]
    DimensionMismatch {
        field: String,
        expected: usize,
        got: usize,
    },

    #[error("{0} must be nonzero")]
    ZeroVector(String),

    #[error("vertex set is not origin-symmetric: {0} has no antipode")]
    NotSymmetric(String),

    #[error("degenerate unit ball: {0}")]
    Degenerate(String),

    #[error("unsupported dimension {dim} for {what}")]
    UnsupportedDimension { dim: usize, what: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{field} is not a unit vector (norm {norm})")]
    NotUnit { field: String, norm: String },

    #[error("{0} is not an extreme point of the unit ball")]
    NotExtreme(String),

    #[error("inputs are linearly dependent")]
    Dependent,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("not supported for this space: {0}")]
    Unsupported(String),

    #[error("unknown catalog name {0:?}")]
    UnknownCatalog(String),

    /// A computed witness failed independent re-verification.
    #[error("verification failed: {0}")]
    Verification(String),
}

impl Error {
    pub(crate) fn dim(field: &str, expected: usize, got: usize) -> Self {
        Error::DimensionMismatch {
            field: field.to_string(),
            expected,
            got,
        }
    }
}
