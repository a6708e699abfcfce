use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("strand index {index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("connector endpoints must differ (got {0},{0})")]
    EqualMuIndices(usize),
    #[error("expected a connector token, got {0}")]
    NotAConnector(String),
    #[error("word uses connector tokens but only classical/virtual generators are allowed")]
    UnexpectedConnector,
    #[error("unknown presentation `{0}`")]
    UnknownPresentation(String),
    #[error("presentation `{name}` needs at least {min} strands (got {n})")]
    TooFewStrands {
        name: &'static str,
        min: usize,
        n: usize,
    },
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(&'static str, &'static str),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is not invertible over its ring")]
    NotInvertible,
    #[error("{0}")]
    FailedCheck(String),
    #[error("tangle slice {slice}: {msg}")]
    BadSlice { slice: usize, msg: String },
    #[error("operation requires a closed diagram ([0] -> [0])")]
    NotClosed,
    #[error("Hopf data is missing `{0}`")]
    MissingStructure(&'static str),
    #[error("unknown builtin `{0}`")]
    UnknownBuiltin(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
