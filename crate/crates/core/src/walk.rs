//! Exact state-vector evolution of the discrete-time walk.
//!
//! The walker lives on integer sites `-L..=L` with a two-level internal
//! state. One walk step is a coin rotation followed by a tunneling pulse.
//! The pulse partitions the lattice into neighboring pairs `{a, a + 1}` and
//! rotates amplitude within each pair:
//!
//! ```text
//! psi_a  <-  cos(theta) psi_a + i sin(theta) psi_b
//! psi_b  <-  i sin(theta) psi_a + cos(theta) psi_b
//! ```
//!
//! Which sites pair up depends on the internal state and on the alternating
//! superlattice configuration, which flips between odd and even steps. At the
//! ideal angle `theta = pi/2` the pulse swaps the pair contents (times a
//! global `i`), so the two internal components march in opposite directions.

use num_complex::Complex64;

use crate::coin::CoinOperator;
use crate::distribution::Distribution;
use crate::error::{Error, Result};

/// Initial internal states are accepted when the squared norm is within this
/// distance of one.
pub const NORM_TOLERANCE: f64 = 1e-12;

/// After every step the outermost site on each edge must carry no more than
/// this amplitude magnitude, otherwise the finite lattice is about to
/// truncate the state.
pub const BOUNDARY_TOLERANCE: f64 = 1e-12;

/// Whether a step index (1-based) is odd or even; the superlattice alternates
/// between two configurations on this schedule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    /// Parity of the `step`-th walk step; the first step is odd.
    pub fn of_step(step: usize) -> Parity {
        if step % 2 == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }
}

/// One tunneling pulse: the lattice configuration plus the rotation angle
/// `theta = J * dt / 2` accumulated over the pulse.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StepSpec {
    pub parity: Parity,
    pub theta: f64,
}

impl StepSpec {
    /// Spec for the `step`-th step (1-based) of a walk.
    pub fn for_step(step: usize, theta: f64) -> StepSpec {
        StepSpec {
            parity: Parity::of_step(step),
            theta,
        }
    }
}

/// True when the given configuration pairs `{a, a + 1}` with even `a`.
///
/// On odd steps internal state 0 sits in the even-based double wells and
/// internal state 1 in the odd-based ones; even steps swap the roles. This
/// is what makes the two internal components move in opposite directions.
pub(crate) fn base_is_even(parity: Parity, internal: usize) -> bool {
    debug_assert!(internal < 2);
    match parity {
        Parity::Odd => internal == 0,
        Parity::Even => internal == 1,
    }
}

/// The pair `{a, a + 1}` that `site` belongs to under the given
/// configuration and internal state.
pub fn pair_of(parity: Parity, internal: usize, site: i64) -> (i64, i64) {
    let base_bit = if base_is_even(parity, internal) { 0 } else { 1 };
    let a = if site.rem_euclid(2) == base_bit {
        site
    } else {
        site - 1
    };
    (a, a + 1)
}

/// How the rotation angle of each step is chosen.
#[derive(Debug, Clone, PartialEq)]
pub enum ThetaSchedule {
    /// Constant dimensionless pulse-timing error `eps = J_min * dt0`; every
    /// step runs at `theta = pi/2 + eps / 2`. Zero reproduces the ideal walk.
    TimingOffset(f64),
    /// Explicit angle per step; entry `k` drives step `k + 1`.
    PerStep(Vec<f64>),
}

impl ThetaSchedule {
    fn validate(&self, n_steps: usize) -> Result<()> {
        if let ThetaSchedule::PerStep(thetas) = self {
            if thetas.len() != n_steps {
                return Err(Error::ScheduleLength {
                    expected: n_steps,
                    got: thetas.len(),
                });
            }
        }
        Ok(())
    }

    /// Angle for the `step`-th step (1-based).
    pub fn theta_for(&self, step: usize) -> f64 {
        match self {
            ThetaSchedule::TimingOffset(eps) => std::f64::consts::FRAC_PI_2 + eps / 2.0,
            ThetaSchedule::PerStep(thetas) => thetas[step - 1],
        }
    }
}

/// Everything needed to run a walk from scratch.
#[derive(Debug, Clone)]
pub struct WalkConfig {
    pub n_steps: usize,
    pub initial_internal: [Complex64; 2],
    pub coin: CoinOperator,
    pub thetas: ThetaSchedule,
    /// Lattice half-width; `None` picks `n_steps + 1`, the smallest width on
    /// which the full light cone fits with the boundary sites left empty.
    pub half_width: Option<usize>,
}

impl WalkConfig {
    /// The standard walk: symmetric initial state, balanced coin, exact
    /// half-period pulses.
    pub fn ideal(n_steps: usize) -> WalkConfig {
        WalkConfig::with_timing_offset(n_steps, 0.0)
    }

    /// The standard walk run with a constant pulse-timing error.
    pub fn with_timing_offset(n_steps: usize, offset: f64) -> WalkConfig {
        WalkConfig {
            n_steps,
            initial_internal: symmetric_initial(),
            coin: CoinOperator::hadamard(),
            thetas: ThetaSchedule::TimingOffset(offset),
            half_width: None,
        }
    }
}

/// `(|0> + i|1>) / sqrt(2)`: the internal state whose walk distribution is
/// symmetric under reflection through the origin.
pub fn symmetric_initial() -> [Complex64; 2] {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    [Complex64::new(h, 0.0), Complex64::new(0.0, h)]
}

/// Full state of the walker: one complex amplitude per internal state and
/// site, plus how many steps have been applied.
#[derive(Debug, Clone, PartialEq)]
pub struct WalkState {
    /// `amps[internal][site + half_width]`.
    amps: [Vec<Complex64>; 2],
    half_width: usize,
    step_count: usize,
}

impl WalkState {
    /// A walker at site 0 in the given internal state.
    pub fn new(initial_internal: [Complex64; 2], half_width: usize) -> Result<Self> {
        if half_width < 1 {
            return Err(Error::InvalidHalfWidth(half_width));
        }
        let norm_sqr = initial_internal[0].norm_sqr() + initial_internal[1].norm_sqr();
        if (norm_sqr - 1.0).abs() > NORM_TOLERANCE {
            return Err(Error::NotNormalized { norm_sqr });
        }
        let len = 2 * half_width + 1;
        let zero = Complex64::new(0.0, 0.0);
        let mut amps = [vec![zero; len], vec![zero; len]];
        amps[0][half_width] = initial_internal[0];
        amps[1][half_width] = initial_internal[1];
        Ok(WalkState {
            amps,
            half_width,
            step_count: 0,
        })
    }

    pub fn half_width(&self) -> usize {
        self.half_width
    }

    /// Number of steps applied so far.
    pub fn step_count(&self) -> usize {
        self.step_count
    }

    fn index(&self, site: i64) -> usize {
        (site + self.half_width as i64) as usize
    }

    /// Amplitude for `internal` at `site`; zero outside the lattice.
    pub fn amplitude(&self, internal: usize, site: i64) -> Complex64 {
        assert!(internal < 2);
        let half = self.half_width as i64;
        if site < -half || site > half {
            return Complex64::new(0.0, 0.0);
        }
        self.amps[internal][self.index(site)]
    }

    /// Squared norm of the full state; stays 1 under coin and step.
    pub fn norm_sqr(&self) -> f64 {
        self.amps
            .iter()
            .flat_map(|row| row.iter())
            .map(|a| a.norm_sqr())
            .sum()
    }

    /// Inner product `<self|other>`; 1 in magnitude when the states agree up
    /// to a global phase.
    pub fn overlap(&self, other: &WalkState) -> Complex64 {
        assert_eq!(self.half_width, other.half_width);
        let mut sum = Complex64::new(0.0, 0.0);
        for internal in 0..2 {
            for (a, b) in self.amps[internal].iter().zip(&other.amps[internal]) {
                sum += a.conj() * b;
            }
        }
        sum
    }

    /// Rotates the internal state at every site.
    pub fn apply_coin(&mut self, coin: &CoinOperator) {
        for k in 0..self.amps[0].len() {
            let out = coin.apply([self.amps[0][k], self.amps[1][k]]);
            self.amps[0][k] = out[0];
            self.amps[1][k] = out[1];
        }
    }

    /// Applies one tunneling pulse.
    ///
    /// Every pair fully inside the lattice is rotated; a leftover single site
    /// at an edge is left untouched. After the pulse the outermost sites must
    /// still be empty (within [`BOUNDARY_TOLERANCE`]), otherwise the state
    /// has outgrown the lattice and [`Error::BoundaryOverflow`] is returned.
    pub fn apply_step(&mut self, spec: StepSpec) -> Result<()> {
        let cos = Complex64::new(spec.theta.cos(), 0.0);
        let isin = Complex64::new(0.0, spec.theta.sin());
        let half = self.half_width as i64;
        for internal in 0..2 {
            let base_bit = if base_is_even(spec.parity, internal) {
                0
            } else {
                1
            };
            let mut a = -half;
            if a.rem_euclid(2) != base_bit {
                a += 1;
            }
            // Both `a` and its partner `a + 1` must lie inside the lattice.
            while a < half {
                let ia = (a + half) as usize;
                let row = &mut self.amps[internal];
                let (pa, pb) = (row[ia], row[ia + 1]);
                row[ia] = cos * pa + isin * pb;
                row[ia + 1] = isin * pa + cos * pb;
                a += 2;
            }
        }
        self.step_count += 1;
        if let Some((site, magnitude)) = self.boundary_violation() {
            return Err(Error::BoundaryOverflow {
                site,
                magnitude,
                step: self.step_count,
            });
        }
        Ok(())
    }

    fn boundary_violation(&self) -> Option<(i64, f64)> {
        let half = self.half_width as i64;
        let mut worst: Option<(i64, f64)> = None;
        for site in [-half, half] {
            let idx = self.index(site);
            let magnitude = self.amps[0][idx].norm().max(self.amps[1][idx].norm());
            if magnitude > BOUNDARY_TOLERANCE && worst.is_none_or(|(_, m)| magnitude > m) {
                worst = Some((site, magnitude));
            }
        }
        worst
    }

    /// Per-site probabilities, internal state traced out.
    pub fn position_distribution(&self) -> Distribution {
        let probabilities = (0..self.amps[0].len())
            .map(|k| self.amps[0][k].norm_sqr() + self.amps[1][k].norm_sqr())
            .collect();
        Distribution::new(
            -(self.half_width as i64),
            probabilities,
            self.step_count,
            "",
        )
    }
}

/// Runs `config.n_steps` coin-then-pulse steps and returns all `n_steps + 1`
/// states, the untouched initial state first.
pub fn run_walk(config: &WalkConfig) -> Result<Vec<WalkState>> {
    config.thetas.validate(config.n_steps)?;
    let half_width = config.half_width.unwrap_or(config.n_steps + 1);
    let mut state = WalkState::new(config.initial_internal, half_width)?;
    let mut snapshots = Vec::with_capacity(config.n_steps + 1);
    snapshots.push(state.clone());
    for step in 1..=config.n_steps {
        state.apply_coin(&config.coin);
        state.apply_step(StepSpec::for_step(step, config.thetas.theta_for(step)))?;
        snapshots.push(state.clone());
    }
    Ok(snapshots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn assert_close(actual: Complex64, expected: Complex64) {
        assert!(
            (actual - expected).norm() < 1e-12,
            "expected {expected}, got {actual}"
        );
    }

    #[test]
    fn new_state_is_a_point_mass_at_the_origin() {
        let state = WalkState::new(symmetric_initial(), 3).unwrap();
        assert_eq!(state.step_count(), 0);
        assert!((state.norm_sqr() - 1.0).abs() < 1e-15);
        let dist = state.position_distribution();
        assert!((dist.probability(0) - 1.0).abs() < 1e-15);
        assert_eq!(dist.probability(1), 0.0);
        assert_eq!(dist.min_site(), -3);
        assert_eq!(dist.max_site(), 3);
    }

    #[test]
    fn unnormalized_initial_state_is_rejected() {
        let err = WalkState::new([c(1.0, 0.0), c(1.0, 0.0)], 3).unwrap_err();
        match err {
            Error::NotNormalized { norm_sqr } => assert!((norm_sqr - 2.0).abs() < 1e-15),
            other => panic!("expected NotNormalized, got {other:?}"),
        }
    }

    #[test]
    fn zero_half_width_is_rejected() {
        assert_eq!(
            WalkState::new(symmetric_initial(), 0).unwrap_err(),
            Error::InvalidHalfWidth(0)
        );
    }

    #[test]
    fn step_parity_alternates_starting_odd() {
        assert_eq!(Parity::of_step(1), Parity::Odd);
        assert_eq!(Parity::of_step(2), Parity::Even);
        assert_eq!(Parity::of_step(3), Parity::Odd);
    }

    #[test]
    fn pairing_follows_parity_and_internal_state() {
        // Odd steps: internal 0 pairs on even bases, internal 1 on odd bases.
        assert_eq!(pair_of(Parity::Odd, 0, 0), (0, 1));
        assert_eq!(pair_of(Parity::Odd, 0, 3), (2, 3));
        assert_eq!(pair_of(Parity::Odd, 1, 0), (-1, 0));
        assert_eq!(pair_of(Parity::Odd, 1, -3), (-3, -2));
        // Even steps swap the two roles.
        assert_eq!(pair_of(Parity::Even, 0, 0), (-1, 0));
        assert_eq!(pair_of(Parity::Even, 1, 0), (0, 1));
        assert_eq!(pair_of(Parity::Even, 1, 2), (2, 3));
    }

    #[test]
    fn zero_angle_pulse_is_the_identity() {
        let mut state = WalkState::new(symmetric_initial(), 2).unwrap();
        let before = state.clone();
        state.apply_step(StepSpec::for_step(1, 0.0)).unwrap();
        assert_eq!(state.amplitude(0, 0), before.amplitude(0, 0));
        assert_eq!(state.amplitude(1, 0), before.amplitude(1, 0));
        assert_eq!(state.step_count(), 1);
    }

    #[test]
    fn full_period_pulse_negates_paired_amplitudes() {
        // theta = pi: each pair block is -1 (up to a ~1e-16 sin(pi) leak), so
        // the walker does not move.
        let mut state = WalkState::new(symmetric_initial(), 2).unwrap();
        state.apply_step(StepSpec::for_step(1, PI)).unwrap();
        assert_close(state.amplitude(0, 0), -symmetric_initial()[0]);
        assert_close(state.amplitude(1, 0), -symmetric_initial()[1]);
        assert!((state.norm_sqr() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn first_step_reproduces_the_worked_single_step_state() {
        // Coin then odd pulse on (|0> + i|1>)/sqrt(2) at the origin gives
        // i (e^{i pi/4} |0>|+1> + e^{-i pi/4} |1>|-1>) / sqrt(2).
        let mut state = WalkState::new(symmetric_initial(), 2).unwrap();
        state.apply_coin(&CoinOperator::hadamard());
        state.apply_step(StepSpec::for_step(1, FRAC_PI_2)).unwrap();
        assert_close(state.amplitude(0, 1), c(-0.5, 0.5));
        assert_close(state.amplitude(1, -1), c(0.5, 0.5));
        assert_close(state.amplitude(0, 0), c(0.0, 0.0));
        assert_close(state.amplitude(1, 0), c(0.0, 0.0));
        let dist = state.position_distribution();
        assert!((dist.probability(1) - 0.5).abs() < 1e-14);
        assert!((dist.probability(-1) - 0.5).abs() < 1e-14);
    }

    #[test]
    fn zero_step_walk_returns_only_the_initial_state() {
        let snapshots = run_walk(&WalkConfig::ideal(0)).unwrap();
        assert_eq!(snapshots.len(), 1);
        assert_eq!(snapshots[0].step_count(), 0);
        assert!((snapshots[0].position_distribution().probability(0) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn two_step_walk_matches_hand_computed_probabilities() {
        let snapshots = run_walk(&WalkConfig::ideal(2)).unwrap();
        let dist = snapshots[2].position_distribution();
        assert!((dist.probability(-2) - 0.25).abs() < 1e-12);
        assert!((dist.probability(0) - 0.5).abs() < 1e-12);
        assert!((dist.probability(2) - 0.25).abs() < 1e-12);
        assert!(dist.probability(1).abs() < 1e-15);
    }

    #[test]
    fn three_step_walk_matches_hand_computed_probabilities() {
        let snapshots = run_walk(&WalkConfig::ideal(3)).unwrap();
        let dist = snapshots[3].position_distribution();
        for (site, expected) in [(-3, 0.125), (-1, 0.375), (1, 0.375), (3, 0.125)] {
            assert!(
                (dist.probability(site) - expected).abs() < 1e-12,
                "site {site}"
            );
        }
    }

    #[test]
    fn ideal_walk_occupies_only_sites_matching_step_parity() {
        let snapshots = run_walk(&WalkConfig::ideal(9)).unwrap();
        let dist = snapshots[9].position_distribution();
        let off_parity_mass: f64 = dist
            .iter()
            .filter(|(x, _)| x.rem_euclid(2) == 0)
            .map(|(_, p)| p)
            .sum();
        assert!(off_parity_mass < 1e-12);
    }

    #[test]
    fn stalled_walk_keeps_the_point_mass_at_the_origin() {
        // Offset pi means theta = pi, a full tunneling period per step.
        let config = WalkConfig::with_timing_offset(10, PI);
        let snapshots = run_walk(&config).unwrap();
        let dist = snapshots[10].position_distribution();
        assert!((dist.probability(0) - 1.0).abs() < 1e-12);
        // The state itself only picks up a sign per step.
        let initial = &snapshots[0];
        let restarted = WalkState::new(symmetric_initial(), initial.half_width()).unwrap();
        assert!((snapshots[10].overlap(&restarted).norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn undersized_lattice_reports_boundary_overflow() {
        let config = WalkConfig {
            half_width: Some(4),
            ..WalkConfig::ideal(5)
        };
        match run_walk(&config).unwrap_err() {
            Error::BoundaryOverflow {
                site,
                step,
                magnitude,
            } => {
                assert_eq!(step, 4);
                assert_eq!(site.abs(), 4);
                assert!(magnitude > 0.1);
            }
            other => panic!("expected BoundaryOverflow, got {other:?}"),
        }
    }

    #[test]
    fn per_step_schedule_must_cover_every_step() {
        let config = WalkConfig {
            thetas: ThetaSchedule::PerStep(vec![FRAC_PI_2; 3]),
            ..WalkConfig::ideal(5)
        };
        assert_eq!(
            run_walk(&config).unwrap_err(),
            Error::ScheduleLength {
                expected: 5,
                got: 3
            }
        );
    }

    #[test]
    fn pair_rotation_block_is_unitary_for_any_angle() {
        for k in 0..64 {
            let theta = k as f64 * 0.1 - 3.2;
            let (cos, sin) = (theta.cos(), theta.sin());
            // U = [[c, is], [is, c]]; U† U must be the identity.
            let diag = cos * cos + sin * sin;
            let off = Complex64::new(0.0, cos * sin - sin * cos);
            assert!((diag - 1.0).abs() <= 1e-14);
            assert!(off.norm() <= 1e-14);
        }
    }
}
