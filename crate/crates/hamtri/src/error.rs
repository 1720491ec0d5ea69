use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("missing or malformed planar_code header")]
    BadHeader,

    #[error("graph {index} in stream: unexpected end of data")]
    TruncatedStream { index: usize },

    #[error("graph {index} in stream: vertex count {n} outside supported range 4..=255")]
    BadVertexCount { index: usize, n: usize },

    #[error("graph {index} in stream: {source}")]
    InvalidStreamGraph { index: usize, source: Box<Error> },

    #[error("vertex count {n} exceeds the single-byte planar_code limit of 255")]
    UnsupportedSize { n: usize },

    #[error("invalid plane graph: {0}")]
    InvalidPlaneGraph(String),

    #[error("invalid triangulation: {0}")]
    InvalidTriangulation(String),

    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("{u}-{v} is not an edge")]
    NotAnEdge { u: usize, v: usize },

    #[error("({a},{b},{c}) is not a face")]
    NotAFace { a: usize, b: usize, c: usize },

    #[error("({a},{b},{c}) is not a separating triangle")]
    NotSeparating { a: usize, b: usize, c: usize },

    #[error("contracting {u}-{v} would create a multi-edge ({count} common neighbors, need exactly 2)")]
    ContractionMultiEdge { u: usize, v: usize, count: usize },

    #[error("cannot flip {u}-{v}: replacement {w1}-{w2} is already an edge")]
    FlipChordPresent { u: usize, v: usize, w1: usize, w2: usize },

    #[error("cannot flip {u}-{v}: {w1}-{w2} does not match the apexes of its two faces")]
    FlipApexMismatch { u: usize, v: usize, w1: usize, w2: usize },

    #[error("graph is not 4-connected")]
    NotFourConnected,

    #[error("required edges do not form a path system: {0}")]
    NotPathSystem(String),

    #[error("at most {max} required edges are supported, got {got}")]
    TooManyRequiredEdges { max: usize, got: usize },

    #[error("invalid tree specification: {0}")]
    BadTreeSpec(String),

    #[error("tree has maximum degree {max_degree}, the construction needs at least 4")]
    TreeDegreeTooSmall { max_degree: usize },

    #[error("order {n} outside supported enumeration range 4..={cap}")]
    EnumerationRange { n: usize, cap: usize },

    #[error("wheel rim length {n} must be at least 3")]
    WheelTooSmall { n: usize },

    #[error("unknown fixture name {0:?}")]
    UnknownFixture(String),

    #[error("text format: {0}")]
    BadTextGraph(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
