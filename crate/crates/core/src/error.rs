use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("edge list parse error on line {line}: {reason}")]
    EdgeList { line: usize, reason: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid parameters: {0}")]
    InvalidSpec(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid coloring: {0}")]
    InvalidColoring(String),

    #[error("instance too large: {0}")]
    TooLarge(String),

    /// The search ran out of its node budget before reaching an answer.
    #[error("search budget of {nodes} nodes exhausted")]
    BudgetExceeded { nodes: u64 },

    #[error("unknown builtin graph `{0}`")]
    UnknownBuiltin(String),

    /// A state the surrounding construction guarantees cannot happen.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
