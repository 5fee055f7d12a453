use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("coordinate ({x}, {y}) outside [-2^24, 2^24]")]
    CoordinateOutOfRange { x: i64, y: i64 },
    #[error("structure is empty")]
    EmptyStructure,
    #[error("unknown or removed site handle {0}")]
    UnknownHandle(u32),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("malformed point file at line {line}: {message}")]
    PointFile { line: usize, message: String },
    #[error("unknown {what} `{value}`")]
    UnknownName { what: &'static str, value: String },
    #[error("time limit of {0:?} exceeded")]
    TimeLimit(std::time::Duration),
    #[error(transparent)]
    Io(#[from] IoError),
}

/// `std::io::Error` wrapper so that `Error` stays `Clone + PartialEq`.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{0}")]
pub struct IoError(pub String);

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(IoError(e.to_string()))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
