use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("edge {0}-{1} not present")]
    MissingEdge(usize, usize),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },
    #[error("not a cactus: {0}")]
    NotCactus(String),
    #[error("graph on {n} vertices exceeds the limit of {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid exponent: {0}")]
    InvalidExponent(String),
    #[error("exponent mismatch: {0} vs {1}")]
    ExponentMismatch(String, String),
    #[error("(n={n}, k={k}) is not admissible for {theorem}")]
    Inadmissible { theorem: String, n: usize, k: usize },
    #[error("infeasible degree sequence: {0}")]
    InfeasibleSequence(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("stale move: {0}")]
    StaleMove(String),
    #[error("move post-check failed: {0}")]
    PostCheck(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
