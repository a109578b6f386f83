use thiserror::Error;

/// Errors raised while reading an edge-list text.
///
/// Every variant carries the 1-based line number of the offending line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: expected two whitespace-separated labels, found {found}")]
    MalformedLine { line: usize, found: usize },
    #[error("line {line}: self-loop on vertex {label:?}")]
    SelfLoop { line: usize, label: String },
    #[error("line {line}: duplicate edge {a:?} {b:?}")]
    DuplicateEdge { line: usize, a: String, b: String },
}

/// Errors raised by graph construction, the solvers, and walk validation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("vertex index {index} out of range for a graph on {n} vertices")]
    VertexOutOfRange { index: usize, n: usize },
    #[error("vertex {index} listed twice in subset")]
    DuplicateVertex { index: usize },
    #[error("pair index {index} out of range for a product on {limit} pair-vertices")]
    PairOutOfRange { index: usize, limit: usize },
    #[error("self-loop on vertex {index}")]
    SelfLoopEdge { index: usize },
    #[error("duplicate edge {u}-{v}")]
    DuplicateIndexEdge { u: usize, v: usize },
    #[error("duplicate label {label:?}")]
    DuplicateLabel { label: String },
    #[error("label {label:?} is empty or contains whitespace")]
    InvalidLabel { label: String },
    #[error("product on {n} vertices exceeds the materialization limit of {limit}")]
    ProductTooLarge { n: usize, limit: usize },
    #[error("n must be a positive integer")]
    NonPositiveN,
    #[error("coverage mask needs {required} bits but only {limit} are supported")]
    MaskWidthExceeded { required: usize, limit: usize },
    #[error("witness component is empty")]
    EmptyWitness,
    #[error("walk is empty")]
    EmptyWalk,
    #[error("itineraries differ in length ({alice} vs {bob})")]
    WalkLengthMismatch { alice: usize, bob: usize },
    #[error("walk step {step}: consecutive pairs are neither equal nor product-adjacent")]
    NonAdjacentStep { step: usize },
    #[error("label {label:?} does not name a vertex of the graph")]
    UnknownLabel { label: String },
    #[error("invalid walk-pair JSON: {0}")]
    WalkJson(String),
}

pub type Result<T> = std::result::Result<T, Error>;
