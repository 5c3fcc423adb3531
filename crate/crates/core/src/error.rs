use std::fmt;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Location-tagged parse failure for presentation, representation and
/// polynomial text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    UnknownGenerator(String),
    ZeroExponent,
    DuplicateGenerator(String),
}

impl ParseError {
    pub fn syntax(line: usize, col: usize, msg: impl Into<String>) -> Self {
        ParseError { line, col, kind: ParseErrorKind::Syntax(msg.into()) }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: ", self.line, self.col)?;
        match &self.kind {
            ParseErrorKind::Syntax(msg) => write!(f, "{msg}"),
            ParseErrorKind::UnknownGenerator(name) => write!(f, "unknown generator `{name}`"),
            ParseErrorKind::ZeroExponent => write!(f, "zero exponent is not allowed"),
            ParseErrorKind::DuplicateGenerator(name) => {
                write!(f, "duplicate generator name `{name}`")
            }
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("not a unit: {0}")]
    NotAUnit(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("polynomial is identically zero")]
    IdenticallyZero,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("not a cocycle: {0}")]
    NotACocycle(String),
    #[error("integer overflow: {0}")]
    Overflow(String),
    #[error("input too large: {0}")]
    TooLarge(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
}
