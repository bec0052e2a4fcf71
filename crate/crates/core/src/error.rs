use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("graph is disconnected: no path between vertices {0} and {1}")]
    Disconnected(usize, usize),

    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graphs are limited to 64 vertices, got {0}")]
    TooManyVertices(usize),

    #[error("coefficient domains do not match ({0} vs {1})")]
    DomainMismatch(&'static str, &'static str),

    #[error("ideal needs at least one generator")]
    EmptyGenerators,

    #[error("Gröbner step budget of {budget} exhausted{}", match .index { Some(k) => format!(" at ideal index {k}"), None => String::new() })]
    Budget { budget: u64, index: Option<usize> },

    #[error("cannot override diagonal entry ({0}, {0})")]
    DiagonalOverride(usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("internal consistency check failed: {0}")]
    Consistency(String),
}

impl Error {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse { offset, message: message.into() }
    }

    pub(crate) fn invalid(message: impl Into<String>) -> Self {
        Error::InvalidArgument(message.into())
    }
}
