//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum RprError {
    #[error("dimension mismatch: expected length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Power iteration stalled before reaching its tolerance. The best
    /// eigenvalue/singular-value estimate seen so far is carried along.
    #[error("spectral estimate did not converge within {iters} iterations (best {best})")]
    SpectralNonConvergence { iters: usize, best: f64 },

    /// Eigenvector iteration for the spectral initializer did not reach its
    /// tolerance; the best direction found is retained for callers that want
    /// to proceed anyway.
    #[error("eigenvector iteration did not converge; best direction retained")]
    EigenNonConvergence { best_direction: Vec<f64> },

    /// A gap-targeted subproblem solve ran out of iterations.
    #[error("duality gap target {target} not reached (achieved {achieved})")]
    GapTargetNotReached { target: f64, achieved: f64 },

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),

    #[error("format: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, RprError>;

pub(crate) fn check_len(expected: usize, got: usize) -> Result<()> {
    if expected != got {
        return Err(RprError::DimensionMismatch { expected, got });
    }
    Ok(())
}
