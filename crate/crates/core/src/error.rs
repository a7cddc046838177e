//! Error type shared by every module in the crate.

use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// chi_n with zero detuning.
    #[error("degenerate detuning: chi_n undefined at delta = 0")]
    DegenerateDetuning,

    /// An input that must be strictly positive was not.
    #[error("domain error: {name} must be positive, got {value}")]
    NonPositive { name: &'static str, value: f64 },

    /// An input failed a structural or range check.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Peak-spacing estimation needs at least two peaks.
    #[error("insufficient peaks: need at least {needed}, got {found}")]
    InsufficientPeaks { needed: usize, found: usize },

    /// Poisson fit over intensities that are all zero.
    #[error("no signal: all peak intensities are zero")]
    NoSignal,

    /// g^2 = chi01 * delta01 must be positive.
    #[error("inconsistent signs: chi01 and delta01 disagree (chi01*delta01 = {product:e} <= 0)")]
    InconsistentSigns { product: f64 },

    /// A least-squares fit did not converge within the iteration budget.
    #[error("fit failed after {iterations} iterations (residual norm {residual_norm:e})")]
    FitFailed {
        iterations: usize,
        residual_norm: f64,
    },

    /// Maxwell matrix with a singular or degenerate network.
    #[error("degenerate capacitance network: matrix is singular")]
    DegenerateCapacitance,

    /// Mode-volume or participation integral over an identically zero field.
    #[error("zero field: integral undefined")]
    ZeroField,

    /// Effective-distance integral with zero total pad charge.
    #[error("zero charge: effective distance undefined")]
    ZeroCharge,

    /// A participation computation referenced an interface with no samples.
    #[error("missing interface: no samples for {0}")]
    MissingInterface(String),

    /// Vector lengths disagree.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// Training loss became NaN.
    #[error("loss is NaN at iteration {iteration}")]
    NanLoss { iteration: usize },

    /// A sub-step of a pipeline failed; the label names the stage.
    #[error("{stage}: {source}")]
    Stage {
        stage: &'static str,
        #[source]
        source: alloc::boxed::Box<Error>,
    },
}

impl Error {
    /// Wraps an error with the pipeline stage that produced it.
    pub fn at_stage(self, stage: &'static str) -> Self {
        Error::Stage {
            stage,
            source: alloc::boxed::Box::new(self),
        }
    }
}
