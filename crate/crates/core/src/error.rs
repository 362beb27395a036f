//! Crate-wide error type.

/// Errors produced by the lattice-gramian library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A precondition on an argument was violated (dimension mismatch,
    /// non-positive parameter, empty driver set, ...).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A lattice index fell outside the extents of a finite lattice.
    #[error("index out of bounds: {0}")]
    OutOfBounds(String),

    /// An unscaled quantity is not representable in f64. Callers should
    /// switch to the exponentially scaled form.
    #[error("overflow: {0}")]
    Overflow(String),

    /// An integrand returned a non-finite value.
    #[error("numerical domain error: {0}")]
    NumericalDomain(String),

    /// Adaptive quadrature hit its subdivision limit before reaching the
    /// requested tolerance. Carries the best estimate obtained.
    #[error("accuracy not attained: estimate {estimate} with error bound {error_bound} after {evaluations} evaluations")]
    AccuracyNotAttained {
        estimate: f64,
        error_bound: f64,
        evaluations: usize,
    },

    /// The output Gramian is numerically singular, signalling loss of
    /// output controllability.
    #[error("singular output Gramian: condition estimate {condition:.3e}")]
    SingularGramian { condition: f64 },

    /// Adaptive ODE step size underflowed.
    #[error("stiffness: step size underflow at t = {t}")]
    Stiffness { t: f64 },

    /// The Gramian diagonal entry underflowed, so the control energy is not
    /// representable; the estimated log10 of the energy is reported instead.
    #[error("control energy out of f64 range: log10(E) ~ {log10_energy:.2}")]
    EnergyOutOfRange { log10_energy: f64 },

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
