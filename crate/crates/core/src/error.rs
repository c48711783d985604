use thiserror::Error;

/// Construction errors for graphs, digraphs and partial orientations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex count {0} outside supported range 1..=64")]
    VertexCount(usize),
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("bidirected pair ({0}, {1})")]
    BidirectedPair(usize, usize),
    #[error("edge index {index} out of range for {m} edges")]
    EdgeIndexOutOfRange { index: usize, m: usize },
    #[error("vertex sets overlap at vertex {0}")]
    OverlappingSets(usize),
    #[error("combined graph would have {0} vertices, over the 64-vertex capacity")]
    CapacityOverflow(usize),
    #[error("underlying graph does not match the expected construction")]
    WrongUnderlyingGraph,
}

/// A requested computation is outside the documented exact envelope.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{what} exceeds the exact envelope ({limit}); {hint}")]
pub struct CapacityError {
    pub what: String,
    pub limit: String,
    pub hint: String,
}

impl CapacityError {
    pub fn new(what: impl Into<String>, limit: impl Into<String>, hint: impl Into<String>) -> Self {
        CapacityError { what: what.into(), limit: limit.into(), hint: hint.into() }
    }
}

/// Errors from the text formats and named descriptors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("malformed descriptor {0:?}: {1}")]
    Descriptor(String, String),
    #[error("line {line}: {msg}")]
    Line { line: usize, msg: String },
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Errors from the decomposition-family computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompError {
    #[error("chromatic number {0} below 3; the decomposition family needs chi(H) >= 3")]
    ChromaticTooSmall(usize),
    #[error("underlying graph of the oriented member is not in the decomposition family")]
    NotAFamilyMember,
    #[error(transparent)]
    Capacity(#[from] CapacityError),
}
