use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Positive and negative weights are stored as magnitudes; the sign lives
    /// in which field carries the value.
    #[error("edge ({u}, {v}) has a negative or non-finite magnitude ({wpos}, {wneg})")]
    NegativeMagnitude {
        u: usize,
        v: usize,
        wpos: f64,
        wneg: f64,
    },

    #[error("node set is empty")]
    EmptySet,

    #[error("unknown node {0}")]
    UnknownNode(usize),

    #[error("unknown node label `{0}`")]
    UnknownLabel(String),

    #[error("objective denominator is zero")]
    ZeroDenominator,

    #[error("invalid objective parameters: {0}")]
    InvalidParams(String),

    #[error("peeling multiplier C must be positive, got {0}")]
    NonPositiveC(f64),

    #[error("C list is empty")]
    EmptyCList,

    #[error("graph has a negative edge weight {weight} on ({u}, {v})")]
    NegativeWeight { u: usize, v: usize, weight: f64 },

    #[error("brute force supports at most {max} nodes, graph has {n}")]
    TooLarge { n: usize, max: usize },

    #[error("value out of range: {0}")]
    OutOfRange(String),

    #[error("both filmographies are empty")]
    EmptyFilmography,

    #[error("unknown layer `{0}`")]
    UnknownLayer(String),

    #[error("bad generator parameters: {0}")]
    BadParameters(String),

    #[error("graph has no nodes")]
    EmptyGraph,

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] IoError),
}

/// `std::io::Error` is neither `Clone` nor `PartialEq`; keep the message only.
#[derive(Debug, Clone, PartialEq, Error)]
#[error("{0}")]
pub struct IoError(pub String);

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(IoError(e.to_string()))
    }
}
