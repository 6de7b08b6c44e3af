use thiserror::Error;

use crate::recognize::{ClassTag, Pattern};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("cannot contract an empty vertex set")]
    EmptyContraction,
    #[error("weight vector has length {got}, expected {expected}")]
    WeightLength { got: usize, expected: usize },
    #[error("negative weight on vertex {0}")]
    NegativeWeight(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    /// The input is outside the class a solver requires; `witness` induces `pattern`.
    #[error("input is not {class}: found {pattern} on {witness:?}")]
    NotInClass {
        class: ClassTag,
        pattern: Pattern,
        witness: Vec<usize>,
    },
    #[error("input graph is disconnected")]
    Disconnected,
    #[error("vertex set is not a vertex cover")]
    InfeasibleCover,
    #[error("vertex set is not a clique")]
    NotAClique,
    #[error("connected vertex cover of the contracted graph exceeds budget {0}")]
    BudgetExceeded(usize),
    #[error("{what} oracle refused {n} vertices (budget {limit})")]
    OverBudget {
        what: &'static str,
        n: usize,
        limit: usize,
    },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
