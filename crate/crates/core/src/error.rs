use thiserror::Error;

/// Errors raised by operator construction, model evaluation and the eigensolver.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("photon order must be at least 1 (use the identity for k = 0)")]
    ZeroOrder,

    #[error("Fock dimension {dim} is too small for photon order {k}: need at least {needed}")]
    InsufficientTruncation { dim: usize, k: usize, needed: usize },

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("index {index} outside the exact window 0..={max}")]
    OutsideWindow { index: usize, max: usize },

    #[error("degenerate tilt direction: xi = 0 has no phase")]
    DegenerateTilt,

    #[error("tilt angle theta = {theta} outside (-pi, pi)")]
    TiltOutOfDomain { theta: f64 },

    #[error("invalid spin labels j = {j}, mu = {mu}")]
    InvalidSpin { j: f64, mu: f64 },

    #[error("matrix is not Hermitian (max |M - M^H| = {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("matrix of size {rows}x{cols} is not square")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {offdiag:e})")]
    NoConvergence { sweeps: usize, offdiag: f64 },

    #[error("zero vector has no residual")]
    ZeroVector,
}

pub type Result<T> = std::result::Result<T, Error>;
