//! Robust phase retrieval: recover a signal `x` (up to global sign) from
//! measurements `b_i ≈ (a_i^T x)^2`, a fraction of which may be grossly
//! corrupted, by minimizing the l1 objective
//!
//! ```text
//!     F(x) = (1/m) * sum_i | (a_i^T x)^2 - b_i |
//! ```
//!
//! The main solver is an inexact proximal linear method: each outer iteration
//! linearizes the residual map at the current point and minimizes a strongly
//! convex model over the step. The model is solved in its box-constrained
//! dual by FISTA, and the duality gap provides a computable certificate for
//! two adaptive stopping rules (a low-accuracy and a high-accuracy variant).
//! A normalized subgradient method with geometrically decaying steps is
//! included as a baseline, together with spectral initialization, synthetic
//! instance generation (Gaussian and sign-diagonal Hadamard designs, heavy
//! tailed corruption), and an experiment harness.
//!
//! Measurement operators come in two flavors: dense row-major matrices and a
//! structured construction from Hadamard blocks with random sign diagonals,
//! applied via the fast Walsh-Hadamard transform. With the `parallel`
//! feature (on by default) the operator kernels and the experiment harness
//! use rayon; all parallel code paths produce bit-identical results to a
//! fixed reduction order, so outputs do not depend on the worker count.

pub mod datagen;
pub mod error;
pub mod harness;
pub mod init;
pub mod ipl;
pub mod linalg;
pub mod operators;
pub mod problem;
pub mod subgrad;
pub mod subproblem;
pub mod trace;

pub use error::{Result, RprError};
pub use operators::{DenseOperator, HadamardOperator, LinOp, MeasurementOperator};
pub use problem::{ProblemInstance, SubproblemData};
