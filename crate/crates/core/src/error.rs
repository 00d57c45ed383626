//! Error type shared by every module in the crate.

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while configuring or evolving a walk.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// The initial internal state must be a unit vector.
    #[error("initial internal state has squared norm {norm_sqr}, expected 1")]
    NotNormalized { norm_sqr: f64 },

    /// A coin matrix failed the unitarity check.
    #[error("coin operator is not unitary (max deviation {deviation:.3e})")]
    NonUnitaryCoin { deviation: f64 },

    /// The lattice must contain at least sites -1, 0, and +1.
    #[error("lattice half-width must be at least 1, got {0}")]
    InvalidHalfWidth(usize),

    /// Amplitude reached the edge of the finite lattice, so further steps
    /// would wrap or truncate the state.
    #[error(
        "amplitude of magnitude {magnitude:.3e} reached boundary site {site} \
         after step {step}; rerun with a larger lattice half-width"
    )]
    BoundaryOverflow {
        site: i64,
        magnitude: f64,
        step: usize,
    },

    /// A per-step angle schedule did not cover every step.
    #[error("per-step angle list has {got} entries, expected {expected}")]
    ScheduleLength { expected: usize, got: usize },

    /// Lattice amplitudes outside the regime the coupling formula covers.
    #[error("invalid lattice amplitudes: V = {v}, V' = {v_prime} (need V > 0 and 0 <= V' < V)")]
    InvalidLatticeParams { v: f64, v_prime: f64 },

    /// A scalar argument outside its physical domain.
    #[error("{0}")]
    Domain(String),

    /// No secondary amplitude reaches the requested coupling ratio.
    #[error(
        "no secondary amplitude reaches coupling ratio {target:.6e}; \
         achievable range at this primary amplitude is [{min:.6e}, 1]"
    )]
    NoSolution { target: f64, min: f64 },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
