//! Simulator and analysis toolkit for a one-dimensional discrete-time quantum
//! walk realized by state-dependent tunneling in an alternating optical
//! superlattice.
//!
//! The walker is a single atom with a two-level internal degree of freedom.
//! One step of the walk is an internal-state rotation (the "coin") followed by
//! a half-period tunneling pulse that exchanges amplitude between neighboring
//! sites. Which neighbor a site pairs with depends on the internal state and
//! on whether the step index is odd or even, so repeated steps transport the
//! two internal components in opposite directions and the position
//! distribution spreads ballistically.
//!
//! Crate layout:
//!
//! * [`coin`] and [`walk`] evolve the exact state vector on a finite lattice.
//! * [`lattice`] maps superlattice amplitudes to tunneling couplings, pulse
//!   timings, and rotation angles.
//! * [`classical`] provides the diffusive random-walk baseline.
//! * [`analysis`] compares distributions across pulse-timing errors.
//! * [`distribution`] holds the shared probability-table types.
//!
//! All energies are in recoil units and all times in units of the reduced
//! Planck constant over the recoil energy, so every quantity here is a plain
//! `f64`.
//!
//! # Example
//!
//! ```
//! use superwalk_core::{run_walk, WalkConfig};
//!
//! // Ideal 10-step walk; snapshots[k] is the state after k steps.
//! let snapshots = run_walk(&WalkConfig::ideal(10)).unwrap();
//! let ideal = snapshots.last().unwrap().position_distribution();
//! assert!((ideal.std_dev() - 5.4729).abs() < 1e-3);
//!
//! // The same walk with a pulse-timing error of 0.4 in units of J spreads
//! // more slowly.
//! let skewed = run_walk(&WalkConfig::with_timing_offset(10, 0.4)).unwrap();
//! assert!(skewed.last().unwrap().position_distribution().std_dev() < ideal.std_dev());
//! ```

pub mod analysis;
pub mod classical;
pub mod coin;
pub mod distribution;
pub mod error;
pub mod lattice;
pub mod walk;

pub use coin::CoinOperator;
pub use distribution::{Distribution, TraceSeries};
pub use error::{Error, Result};
pub use lattice::LatticeParams;
pub use num_complex::Complex64;
pub use walk::{run_walk, Parity, StepSpec, ThetaSchedule, WalkConfig, WalkState};
