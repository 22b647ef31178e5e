use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("edge {edge} out of range for graph with {m} edges")]
    EdgeOutOfRange { edge: usize, m: usize },

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("negative weight {0}")]
    NegativeWeight(String),

    #[error("invalid weight {0:?}: expected a decimal or p/q rational")]
    InvalidWeight(String),

    /// A size limit was exceeded; never silently truncated.
    #[error("{what} has size {size}, above the configured cap of {cap}")]
    Capacity {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid input: {0}")]
    Input(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn is_capacity(&self) -> bool {
        matches!(self, Error::Capacity { .. })
    }

    pub(crate) fn input(message: impl Into<String>) -> Self {
        Error::Input(message.into())
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
