use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("graph is not chordal")]
    NotChordal,

    #[error("vertex set is not a clique")]
    NotAClique,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid constant schedule: {}", .0.join("; "))]
    InvalidConstants(Vec<String>),

    #[error("oracle refuses graph on {n} vertices (cap {cap})")]
    CapExceeded { n: usize, cap: usize },

    #[error("unknown class `{0}`")]
    UnknownClass(String),

    #[error("unknown mode `{0}`")]
    UnknownMode(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
