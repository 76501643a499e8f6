use thiserror::Error;

/// Errors raised while building inputs or evaluating statistics.
///
/// Degenerate outcomes (undefined assortativity, empty partitions) are
/// reported as variants here instead of NaN or sentinel values.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop on node {0}")]
    SelfLoop(usize),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    #[error("node index {index} out of range for {n} nodes")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("label vector has length {labels}, graph has {nodes} nodes")]
    LengthMismatch { labels: usize, nodes: usize },

    #[error("label {0} is not binary")]
    InvalidLabel(u8),

    #[error("k = {k} out of range for a degree sequence of length {n}")]
    OutOfRange { k: usize, n: usize },

    #[error("invalid contingency table: {0}")]
    InvalidTable(String),

    #[error("graph has no edges")]
    EmptyGraph,

    #[error("marginal is zero; coefficient undefined")]
    DegenerateMarginal,

    #[error("undefined (single-class edge set)")]
    DegenerateDenominator,

    #[error("partition is degenerate: n1 = {n1} of n = {n}")]
    DegeneratePartition { n1: usize, n: usize },

    #[error("invalid degree partition: {0}")]
    InvalidPartition(String),

    #[error("no feasible lower-bound candidate")]
    NoFeasibleCandidate,

    #[error("normalising bound is zero")]
    ZeroBound,

    #[error("C({n}, {k}) = {combinations} assignments exceeds the cap of {cap}; use the swap heuristic instead")]
    TooManyCombinations {
        n: usize,
        k: usize,
        combinations: u128,
        cap: u128,
    },

    #[error("observed assortativity is undefined")]
    UndefinedObserved,

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("degree sequence is not graphical")]
    NotGraphical,

    #[error("enumeration limited to n <= {max}, got n = {n}")]
    TooLarge { n: usize, max: usize },

    #[error("{path}:{line}: {message}")]
    Parse {
        path: String,
        line: usize,
        message: String,
    },

    #[error("{0}")]
    Io(String),

    #[error("report schema: {0}")]
    Schema(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
