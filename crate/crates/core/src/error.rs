use thiserror::Error;

/// Unified error type for the whole crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex {0} out of range for graph on {1} vertices")]
    OutOfRange(usize, usize),
    #[error("self loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("edge ({0}, {1}) not present")]
    NoSuchEdge(usize, usize),
    #[error("parse error at byte {offset}: {reason}")]
    Parse { offset: usize, reason: String },
    #[error("eigensolver failed to converge within {0} sweeps")]
    ConvergenceFailure(usize),
    #[error("argument outside the supported domain: {0}")]
    OutOfDomain(String),
    #[error("basis is numerically rank deficient")]
    RankDeficient,
    #[error("vertex sets are not disjoint or share an edge")]
    NotEdgeDisjoint,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("certified bound violated: {0}")]
    BoundViolation(String),
    #[error("graph is not certified for line extraction: {0}")]
    NotCertified(String),
    #[error("seed graph does not match the requested angle: {0}")]
    SeedMismatch(String),
    #[error("vector dimensions disagree")]
    DimensionMismatch,
}

pub type Result<T> = std::result::Result<T, Error>;
