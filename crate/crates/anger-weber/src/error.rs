//! Crate-wide error type.
//!
//! Errors are deliberately coarse: every operation either produces a
//! value at the requested precision or says *why* it refused
//! (precondition violated, argument outside a validity sector, or a
//! numerical scheme that failed to converge). The CLI maps these onto
//! distinct exit codes.

use thiserror::Error;

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, AwError>;

#[derive(Debug, Error)]
pub enum AwError {
    /// A parameter violates a documented precondition (e.g. β outside
    /// (0, π/2), truncation index out of range, digits too small).
    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    /// arg ν (or arg w) lies outside the validity sector of the
    /// requested expansion / bound / continuation.
    #[error("argument outside validity sector: {0}")]
    Sector(String),

    /// Gamma evaluated at a non-positive integer.
    #[error("gamma pole at non-positive integer {0}")]
    GammaPole(String),

    /// An iterative scheme (quadrature level-doubling, continued
    /// fraction, Newton iteration, series summation) failed to reach
    /// the requested tolerance.
    #[error("numerical non-convergence: {0}")]
    NonConvergence(String),

    /// A quantity that must be resolvable at the working precision is
    /// not (e.g. the oscillatory Hankel profile beyond its resolvable
    /// range).
    #[error("resolution exceeded: {0}")]
    Resolution(String),

    /// Command-line usage error.
    #[error("usage: {0}")]
    Usage(String),
}
