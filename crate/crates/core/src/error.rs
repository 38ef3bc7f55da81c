use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("line {line}: self-loop on vertex '{vertex}'")]
    SelfLoop { line: usize, vertex: String },

    #[error("graph has no vertices")]
    Empty,

    #[error("line {line}: malformed input: {reason}")]
    Malformed { line: usize, reason: String },

    /// One representative vertex per connected component.
    #[error("graph is disconnected; component representatives: {}", .representatives.join(", "))]
    Disconnected { representatives: Vec<String> },

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("vertices '{x}' and '{y}' are not adjacent")]
    NotAdjacent { x: String, y: String },

    #[error("unknown vertex '{0}'")]
    UnknownVertex(String),

    #[error("eigensolver did not converge after {iterations} sweeps (residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },

    #[error("invalid quintuple: {0}")]
    InvalidQuintuple(String),

    #[error("{what} out of range: {value}")]
    OutOfRange { what: &'static str, value: String },

    #[error("group order {order} exceeds cap {cap}")]
    OrderCapExceeded { order: u128, cap: u128 },

    #[error("graph has {n} vertices; need {min} to {max}")]
    SizeOutOfBounds { n: usize, min: usize, max: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn out_of_range(what: &'static str, value: impl ToString) -> Self {
        Error::OutOfRange {
            what,
            value: value.to_string(),
        }
    }
}
