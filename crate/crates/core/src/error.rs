use thiserror::Error;

use crate::serial::StepError;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{format} parse error at line {line}, column {column}: {message}")]
    Parse {
        format: &'static str,
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid framework: {0}")]
    InvalidFramework(String),

    #[error("unknown argument `{0}`")]
    UnknownArgument(String),

    #[error("set is not conflict-free")]
    NotConflictFree,

    #[error("set is not admissible")]
    NotAdmissible,

    #[error("argument {0} is not a member of the given set")]
    NotAMember(usize),

    #[error("invalid selection: {0}")]
    InvalidSelection(#[from] StepError),

    #[error("framework has {size} arguments, exceeding the brute-force bound of {bound}")]
    BoundExceeded { size: usize, bound: usize },

    #[error("invalid formula: {0}")]
    InvalidFormula(String),

    #[error("unknown task `{0}`")]
    UnknownTask(String),

    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
