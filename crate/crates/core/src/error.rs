use thiserror::Error;

/// Errors produced by graph construction, parsing, and the numerical kernels.
#[derive(Debug, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("edge probability {0} outside [0, 1]")]
    BadProbability(f64),

    #[error("edge-list parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("operation requires a non-empty graph")]
    EmptyGraph,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("negative radicand {radicand} in {bound} bound")]
    NegativeRadicand { bound: &'static str, radicand: f64 },

    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("matrix contains non-finite entries")]
    NonFiniteMatrix,

    #[error("graph order {order} exceeds size cap {cap}")]
    SizeCap { order: u64, cap: u64 },

    #[error("count {base}^{exponent} overflows 64-bit arithmetic")]
    CountOverflow { base: u64, exponent: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;
