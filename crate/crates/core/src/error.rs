use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid dimension {0}: matrices and vectors must be non-empty")]
    InvalidDimension(usize),

    #[error("{op}: incompatible shapes {left:?} and {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("block layout requires 1x1, 1xm, mx1, mxm blocks; {0}")]
    BlockShape(String),

    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("matrix is singular")]
    Singular,

    #[error("matrix has a negative entry at ({0}, {1})")]
    NegativeEntry(usize, usize),

    #[error("n = {n} is out of range: {requirement}")]
    OutOfRange { n: usize, requirement: &'static str },

    #[error("n = {n} is outside the residue class: {requirement}")]
    ResidueClass { n: usize, requirement: &'static str },

    #[error("index {index} out of range: {requirement}")]
    IndexOutOfRange { index: usize, requirement: &'static str },

    #[error("graph is not a wheel")]
    NotWheel,

    #[error("graph is disconnected")]
    Disconnected,

    #[error("vector does not repeat with period 3")]
    NotPeriodic,

    #[error("power iteration did not converge after {iterations} iterations (last estimate {last})")]
    NoConvergence { iterations: usize, last: f64 },

    #[error("could not parse rational from {0:?}")]
    Parse(String),
}
