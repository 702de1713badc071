use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),

    #[error("blow-up size list has {got} entries, graph has {expected} vertices")]
    SizeListMismatch { expected: usize, got: usize },

    #[error("blow-up part sizes must be at least 1")]
    EmptyPart,

    #[error("invalid parameter: {0}")]
    BadParameter(String),

    #[error("order {n} exceeds guard {guard} (pass an explicit override to proceed)")]
    OrderGuard { n: usize, guard: usize },

    #[error("gray edge count {count} exceeds guard {guard}")]
    GrayGuard { count: usize, guard: usize },

    #[error("empty pattern family")]
    EmptyFamily,

    #[error("graph6 parse error: {0}")]
    Graph6(String),

    #[error("trigraph parse error at line {line}: {msg}")]
    TrigraphParse { line: usize, msg: String },

    #[error("unknown catalogue id: {0}")]
    UnknownCatalogueId(String),

    #[error("witness requires a threshold graph with at least one edge")]
    WitnessUndefined,
}

pub type Result<T> = std::result::Result<T, Error>;
