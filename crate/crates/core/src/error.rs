use thiserror::Error;

/// Errors produced by the recovery pipelines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("point {re}{im:+}i is not strictly inside the unit disk (|z| = {modulus})")]
    OutsideDisk { re: f64, im: f64, modulus: f64 },

    #[error("generating sequence must contain at least one entry")]
    EmptyGeneratingSequence,

    #[error("sampling grids differ: {left} vs {right} points")]
    GridMismatch { left: usize, right: usize },

    #[error("sampling grid needs at least {min} points, got {got}")]
    GridTooSmall { min: usize, got: usize },

    #[error("need {needed} moments, got {got}")]
    InsufficientMoments { needed: usize, got: usize },

    #[error("matrix is rank deficient: numerical rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },

    #[error("zero pivot at diagonal index {index}")]
    ZeroPivot { index: usize },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("polynomial order must be at least 1")]
    EmptyPolynomial,

    #[error("eigenvalue iteration did not converge")]
    EigenFailure,

    #[error("poles {i} and {j} coincide (distance {distance:e})")]
    DuplicatePoles { i: usize, j: usize, distance: f64 },

    #[error("all ladder coefficients vanish; the signal has no component along this ladder")]
    ZeroLadder,

    #[error("ratio iteration did not converge: last increment {last_delta:e} > tol {tol:e} after {steps} steps")]
    NonConvergence {
        last_delta: f64,
        tol: f64,
        steps: usize,
    },

    #[error("sequence does not decay under weight {weight}; choose a larger weight")]
    Divergent { weight: f64 },

    #[error("moment sequence is identically zero")]
    ZeroSequence,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// True for failures of an iterative method rather than bad input.
    pub fn is_non_convergence(&self) -> bool {
        matches!(self, Error::NonConvergence { .. } | Error::EigenFailure)
    }
}

pub type Result<T> = std::result::Result<T, Error>;
