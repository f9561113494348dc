use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("unknown graph name `{0}`")]
    UnknownGraph(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("configuration model gave up after {0} attempts")]
    RetryCapExceeded(usize),
    #[error("vertex {0} is already in D")]
    AlreadySelected(usize),
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("minimum degree {found} is below the required {required}")]
    MinDegreeTooSmall { found: usize, required: usize },
    #[error("coefficient set: {0}")]
    Coefficients(String),
    #[error("coefficient set violates conditions: {0}")]
    ConditionsFailed(String),
    #[error("graph has {n} vertices, above the exact-search limit {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("no selection rule applies to a state that is not 2-dominating")]
    NoRuleApplicable,
    #[error("replay failed at batch {batch}: {msg}")]
    Replay { batch: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
