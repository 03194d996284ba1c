use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what}: expected size {expected}, found {found}")]
    SizeMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid permutation matrix: {0}")]
    InvalidMatrix(String),

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("group element {index} out of range for a group of order {order}")]
    ElementOutOfRange { index: usize, order: usize },

    #[error("operands live over different groups")]
    GroupMismatch,

    #[error("invalid G-set: {0}")]
    InvalidGSet(String),

    #[error("element is not primitive (value at the identity is {0})")]
    NonPrimitive(String),

    #[error("tree is not primitive: {0}; factor it through the group and symmetric actions first")]
    NonPrimitiveTree(String),

    #[error("malformed tree: {0}")]
    MalformedTree(String),

    #[error("search infeasible at arity {arity}: {candidates} candidate decompositions exceed the cap of {cap}")]
    Infeasible { arity: usize, candidates: u128, cap: u128 },

    #[error("{0} is not separable")]
    NotSeparable(String),

    #[error("not in Q_C3: no uncovered-node pattern at arity {arity} (remaining element {element})")]
    NotInQ { arity: usize, element: String },

    #[error("pattern {node} does not occur at column {column}")]
    PatternAbsent { node: String, column: usize },

    #[error("universe is unbounded: {0}")]
    UnboundedUniverse(String),

    #[error("expansion budget of {limit} trees exhausted; offending chain:\n{}", chain.join("\n  -> "))]
    BudgetExhausted { limit: usize, chain: Vec<String> },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("arithmetic overflow computing {0}")]
    Overflow(String),
}
