use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("malformed PD code: {0}")]
    MalformedPd(String),

    #[error("malformed braid: {0}")]
    MalformedBraid(String),

    #[error("diagram has {components} components, expected a knot")]
    NotAKnot { components: usize },

    #[error("white region {index} out of range (diagram has {count} white regions)")]
    BadRegion { index: usize, count: usize },

    #[error("diagram is not a reduced alternating diagram: {0}")]
    NotAlternating(String),

    #[error("braid closure surface is disconnected: generator {0} never occurs")]
    DisconnectedSurface(usize),

    #[error("form of rank {rank} is too large for exhaustive enumeration (limit {limit})")]
    TooLarge { rank: usize, limit: usize },

    #[error("vector has length {got}, expected {expected}")]
    BadVector { expected: usize, got: usize },

    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("Euler number {0} is odd")]
    OddEuler(i64),

    #[error("matrix rows have inconsistent lengths")]
    Ragged,

    #[error("value does not fit in a machine integer: {0}")]
    Overflow(String),

    #[error("i/o error: {0}")]
    Io(String),

    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
}

impl Error {
    pub(crate) fn parse(text: &str, offset: usize, message: impl Into<String>) -> Self {
        let before = &text[..offset.min(text.len())];
        let line = before.matches('\n').count() + 1;
        let column = before.rfind('\n').map_or(offset, |nl| offset - nl - 1) + 1;
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
