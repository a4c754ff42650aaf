use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("maximum degree {found} exceeds the allowed {limit}")]
    DegreeTooLarge { found: usize, limit: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("color {color} outside palette 1..={k}")]
    ColorOutOfRange { color: u32, k: u32 },
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum SolveError {
    #[error("mapping has length {found}, expected {expected}")]
    LengthMismatch { found: usize, expected: usize },
    #[error("vertex {vertex} is mapped to {target}, but the target graph has {h} vertices")]
    TargetOutOfRange {
        vertex: usize,
        target: usize,
        h: usize,
    },
    #[error("list of vertex {vertex} names {target}, but the target graph has {h} vertices")]
    ListOutOfRange {
        vertex: usize,
        target: usize,
        h: usize,
    },
    #[error("instance has {found} lists for {expected} vertices")]
    ListCountMismatch { found: usize, expected: usize },
    #[error("enumeration budget exceeded: {candidates} candidate maps > budget {budget}")]
    BudgetExceeded { candidates: u128, budget: u128 },
    #[error("supplied set is not a vertex cover: edge {{{0}, {1}}} is uncovered")]
    NotACover(usize, usize),
    #[error("cover vertex {0} is out of range")]
    CoverOutOfRange(usize),
    #[error("fast path requires full lists")]
    RestrictedLists,
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ReductionError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("witness rejected: {0}")]
    BadWitness(String),
    #[error("gadget mismatch: {0}")]
    Gadget(String),
}
