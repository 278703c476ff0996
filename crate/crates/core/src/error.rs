use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("rank must be at least {min}, got {rank}")]
    InvalidRank { rank: u32, min: u32 },

    #[error("letter index {index} out of range for rank {rank}")]
    LetterOutOfRange { index: u32, rank: u32 },

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: u32, right: u32 },

    #[error("cannot parse word {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("not a Munn tree: {0}")]
    InvalidTree(String),

    /// Growth computations are only meaningful for rank >= 2; rank 1 grows
    /// polynomially.
    #[error("rank 1 has polynomial (quadratic spherical) growth; no exponential growth rate")]
    PolynomialGrowth,

    /// Enumeration stopped before the requested radius. `completed` is the
    /// largest radius whose counts are complete, if any.
    #[error("work budget of {budget} exceeded (largest completed radius: {completed:?})")]
    BudgetExceeded { budget: u64, completed: Option<usize> },

    #[error("requested precision of {digits} digits exceeds the supported maximum of {max}")]
    PrecisionBudget { digits: u32, max: u32 },

    #[error("tolerance {tol:e} not reached (achieved {achieved:e})")]
    ToleranceNotReached { tol: f64, achieved: f64 },

    #[error("root isolation failed: {0}")]
    RootIsolation(String),
}
