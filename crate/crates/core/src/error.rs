use thiserror::Error;

/// Errors raised by the algebra engine and its front ends.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown variable `{name}` at line {line}, column {column}")]
    UnknownVariable {
        name: String,
        line: usize,
        column: usize,
    },
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        message: String,
        line: usize,
        column: usize,
    },
    #[error("division is not allowed in polynomial input (line {line}, column {column})")]
    DivisionInInput { line: usize, column: usize },
    #[error("invalid ring declaration: {0}")]
    InvalidRing(String),
    #[error("operation requires a {expected} ring")]
    ModeMismatch { expected: &'static str },
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("input is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("the ideal is the unit ideal")]
    UnitIdeal,
    #[error("degree cap {cap} exceeded")]
    DegreeCapExceeded { cap: u32 },
    #[error("Ext^{index} requested but the resolution has length {length}")]
    ExtOutOfRange { index: usize, length: usize },
    #[error("symbolic matrix of size {size} exceeds the cap of {cap}")]
    SizeCapExceeded { size: usize, cap: usize },
    #[error("no generic specialization found after {attempts} attempts")]
    GenericityFailure { attempts: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("no ideal named `{0}`")]
    UnknownIdeal(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn syntax(message: impl Into<String>, line: usize, column: usize) -> Self {
        Error::Syntax {
            message: message.into(),
            line,
            column,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
