//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A matrix handed to a kernel routine violated its contract
    /// (not Hermitian, not unitary, non-finite entries, ...).
    #[error("contract violation: {0}")]
    Contract(String),

    /// A dense kernel failed to converge or produced out-of-tolerance output.
    #[error("numeric error: {0}")]
    Numeric(String),

    /// Matrix or window dimensions exceed the configured cap, or are inconsistent.
    #[error("dimension error: {0}")]
    Dimension(String),

    /// Structured-input parsing failed (JSON schema, unknown keys, bad paths).
    #[error("parse error: {0}")]
    Parse(String),

    /// Parsed input violates a model invariant (hermiticity per mode, norm bounds).
    #[error("validation error: {0}")]
    Validation(String),

    /// A block-encoding normalization is too small for its target.
    #[error("normalization error: {0}")]
    Normalization(String),

    /// Mismatched spectra, registers, or report structures.
    #[error("structural error: {0}")]
    Structural(String),

    /// A Fourier-lattice shift pushed support outside the window in strict mode.
    #[error("boundary error: lost norm {lost_norm:.3e} shifting by {shift}")]
    Boundary { shift: i64, lost_norm: f64 },

    /// A rounding promise was requested but the spectrum violates it.
    #[error("promise violation: {0}")]
    PromiseViolation(String),

    /// The promised quasienergy gap does not hold on the model.
    #[error("gap violation: {0}")]
    GapViolation(String),

    /// The initial-state overlap with the target eigenstate is below the promised bound.
    #[error("overlap violation: {0}")]
    OverlapViolation(String),

    /// Run configuration is inconsistent (filter narrower than a bin, missing oracle, ...).
    #[error("configuration error: {0}")]
    Config(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
