use thiserror::Error;

use crate::exactmat::ScalarKind;
use crate::label::Label;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("scalar kind mismatch: expected {expected}, found {found}")]
    KindMismatch {
        expected: ScalarKind,
        found: ScalarKind,
    },

    #[error("index {index} out of range for dimension {bound}")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("pivot entry at ({row}, {col}) is zero")]
    ZeroPivot { row: usize, col: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("invalid entry: {0}")]
    InvalidEntry(String),

    #[error("invalid label set: {0}")]
    Labels(String),

    #[error("label {0} is not present")]
    MissingLabel(Label),

    #[error("{0}")]
    NotABase(String),

    #[error("matrix is not totally unimodular")]
    NotTotallyUnimodular,

    #[error("invalid base family: {0}")]
    BaseFamily(String),

    #[error("sum hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("no sign scaling reaches the target: {0}")]
    Resign(String),

    #[error("size guard exceeded: {what} is {size}, limit {limit}")]
    Guard {
        what: &'static str,
        size: usize,
        limit: usize,
    },
}

impl Error {
    pub(crate) fn dim(msg: impl Into<String>) -> Self {
        Error::Dimension(msg.into())
    }

    pub fn is_guard(&self) -> bool {
        matches!(self, Error::Guard { .. })
    }
}
