//! Superlattice design: potentials, tunneling couplings, and pulse timings.
//!
//! The walk is driven by a primary lattice of amplitude `V` and period
//! `lambda`, superposed with a secondary lattice of amplitude `V'` and twice
//! the period. Their sum alternates barrier heights `V + V'` and `V - V'`
//! along the axis, which splits the lattice into double wells. Tunneling
//! across a barrier of height `V` (both in recoil energies) happens at the
//! single-band coupling
//!
//! ```text
//! J(V) = (1/2) exp(-(pi^2/4) sqrt(V)) (sqrt(V) + V^(3/2))
//! ```
//!
//! so a modest `V'` suppresses tunneling through the tall barriers by orders
//! of magnitude relative to the short ones. Times are in units of
//! `hbar / E_R`.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::walk::{base_is_even, Parity};

/// Primary and secondary lattice amplitudes (recoil energies) plus the
/// primary period used to convert site indices to physical positions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LatticeParams {
    v: f64,
    v_prime: f64,
    lambda: f64,
}

impl LatticeParams {
    /// Validates finite `V > 0` and `0 <= V' < V`; the period defaults to 1.
    pub fn new(v: f64, v_prime: f64) -> Result<Self> {
        if !v.is_finite() || v <= 0.0 || !(0.0..v).contains(&v_prime) {
            return Err(Error::InvalidLatticeParams { v, v_prime });
        }
        Ok(LatticeParams {
            v,
            v_prime,
            lambda: 1.0,
        })
    }

    /// Same amplitudes with an explicit primary period (must be positive).
    pub fn with_lambda(mut self, lambda: f64) -> Result<Self> {
        if !lambda.is_finite() || lambda <= 0.0 {
            return Err(Error::domain(format!(
                "lattice period must be positive and finite, got {lambda}"
            )));
        }
        self.lambda = lambda;
        Ok(self)
    }

    pub fn v(&self) -> f64 {
        self.v
    }

    pub fn v_prime(&self) -> f64 {
        self.v_prime
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// Height of the tall barriers, `V + V'`.
    pub fn v_max(&self) -> f64 {
        self.v + self.v_prime
    }

    /// Height of the short barriers, `V - V'`.
    pub fn v_min(&self) -> f64 {
        self.v - self.v_prime
    }

    /// Physical displacement of a site from the origin, `site * lambda`.
    pub fn measurement_offset(&self, site: i64) -> f64 {
        site as f64 * self.lambda
    }
}

/// Tunneling coupling `J(V)` through a barrier of height `V >= 0` recoil
/// energies; zero barrier means zero coupling in this single-band form.
pub fn tunneling_coupling(v: f64) -> Result<f64> {
    if !v.is_finite() || v < 0.0 {
        return Err(Error::domain(format!(
            "barrier height must be non-negative and finite, got {v}"
        )));
    }
    Ok(coupling(v))
}

/// `tunneling_coupling` without the domain check, for internal callers that
/// already hold validated amplitudes.
fn coupling(v: f64) -> f64 {
    let root = v.sqrt();
    0.5 * (-(PI * PI / 4.0) * root).exp() * (root + v * root)
}

/// Ratio of tall-barrier to short-barrier coupling, `J(V + V') / J(V - V')`.
///
/// This is the fraction of a walk step that leaks through the barriers that
/// should be frozen; the design goal is to make it small.
pub fn coupling_ratio(params: &LatticeParams) -> f64 {
    coupling(params.v_max()) / coupling(params.v_min())
}

/// Secondary amplitude `V'` at which `coupling_ratio` hits `target`.
///
/// Bisection over `V'` in `[0, V - 1]`; the upper limit keeps the short
/// barrier at least one recoil energy tall, where `J` is still monotone
/// decreasing and the ratio therefore strictly decreasing in `V'`. Returns
/// the midpoint of a bracket narrower than 1e-9, which pins the achieved
/// ratio to well within 1e-6 relative of `target`.
pub fn solve_secondary_amplitude(v: f64, target: f64) -> Result<f64> {
    if !v.is_finite() || v < 2.0 {
        return Err(Error::domain(format!(
            "primary amplitude must be at least 2 recoil energies to leave \
             room for a secondary lattice, got {v}"
        )));
    }
    let min_ratio = coupling(2.0 * v - 1.0) / coupling(1.0);
    if target.is_nan() || target < min_ratio || target > 1.0 {
        return Err(Error::NoSolution {
            target,
            min: min_ratio,
        });
    }
    let mut lo = 0.0; // ratio(lo) = 1 >= target
    let mut hi = v - 1.0; // ratio(hi) = min_ratio <= target
    while hi - lo > 1e-9 {
        let mid = 0.5 * (lo + hi);
        let ratio = coupling(v + mid) / coupling(v - mid);
        if ratio >= target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Duration of an exact half tunneling period, `pi / J`.
pub fn pulse_time(j: f64) -> Result<f64> {
    if !j.is_finite() || j <= 0.0 {
        return Err(Error::domain(format!(
            "tunneling coupling must be positive, got {j}"
        )));
    }
    Ok(PI / j)
}

/// Rotation angle accumulated by holding the short barriers open for
/// `dt`, namely `theta = J * dt / 2`; `pi/2` for a perfect half period.
pub fn theta_from_timing(j: f64, dt: f64) -> Result<f64> {
    if !j.is_finite() || j <= 0.0 {
        return Err(Error::domain(format!(
            "tunneling coupling must be positive, got {j}"
        )));
    }
    if !dt.is_finite() || dt < 0.0 {
        return Err(Error::domain(format!(
            "pulse duration must be non-negative and finite, got {dt}"
        )));
    }
    Ok(0.5 * j * dt)
}

/// Combined lattice potential seen by `internal` at position `x` during a
/// step of the given parity:
///
/// ```text
/// V(x) = V cos(2 pi x / lambda) + s V' cos(pi x / lambda)
/// ```
///
/// The sign `s` follows the pairing rule of the walk: `+1` for the
/// configurations that pair even-based double wells, `-1` otherwise, so
/// swapping both parity and internal state leaves the potential unchanged.
pub fn superlattice_potential(
    x: f64,
    params: &LatticeParams,
    parity: Parity,
    internal: usize,
) -> f64 {
    let sign = if base_is_even(parity, internal) {
        1.0
    } else {
        -1.0
    };
    let u = x / params.lambda();
    params.v() * (2.0 * PI * u).cos() + sign * params.v_prime() * (PI * u).cos()
}

/// Time over which the secondary lattice must be ramped to keep the atom in
/// the trap ground state, `1 / omega` for trap frequency `omega`.
pub fn adiabatic_time(omega: f64) -> Result<f64> {
    if !omega.is_finite() || omega <= 0.0 {
        return Err(Error::domain(format!(
            "trap frequency must be positive, got {omega}"
        )));
    }
    Ok(1.0 / omega)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Relative tolerance for values frozen from an independent
    /// high-precision evaluation of the same closed forms.
    const FROZEN_REL_TOL: f64 = 1e-12;

    fn assert_rel(actual: f64, expected: f64) {
        assert!(
            (actual - expected).abs() <= FROZEN_REL_TOL * expected.abs(),
            "expected {expected}, got {actual}"
        );
    }

    #[test]
    fn coupling_matches_frozen_reference_values() {
        assert_eq!(tunneling_coupling(0.0).unwrap(), 0.0);
        assert_rel(tunneling_coupling(25.0).unwrap(), 2.8511491983861857e-4);
        assert_rel(tunneling_coupling(7.5).unwrap(), 1.3529460499919594e-2);
        assert_rel(tunneling_coupling(42.5).unwrap(), 1.4649250386091438e-5);
        assert!(tunneling_coupling(-1.0).is_err());
    }

    #[test]
    fn coupling_decreases_with_barrier_height_in_the_deep_regime() {
        let mut prev = coupling(1.0);
        for k in 1..200 {
            let v = 1.0 + k as f64 * 0.25;
            let j = coupling(v);
            assert!(j < prev, "J not decreasing at V = {v}");
            assert!(j > 0.0);
            prev = j;
        }
    }

    #[test]
    fn params_validate_amplitudes() {
        assert!(LatticeParams::new(25.0, 17.5).is_ok());
        assert!(LatticeParams::new(25.0, 0.0).is_ok());
        assert!(LatticeParams::new(0.0, 0.0).is_err());
        assert!(LatticeParams::new(25.0, 25.0).is_err());
        assert!(LatticeParams::new(25.0, -1.0).is_err());
        assert!(LatticeParams::new(25.0, 17.5)
            .unwrap()
            .with_lambda(0.0)
            .is_err());
    }

    #[test]
    fn barrier_heights_come_from_sum_and_difference() {
        let p = LatticeParams::new(25.0, 17.5).unwrap();
        assert_eq!(p.v_max(), 42.5);
        assert_eq!(p.v_min(), 7.5);
    }

    #[test]
    fn design_point_ratio_suppresses_wrong_way_tunneling() {
        // V = 25, V' = 17.5 freezes the tall barriers to about a thousandth
        // of the short-barrier coupling.
        let p = LatticeParams::new(25.0, 17.5).unwrap();
        assert_rel(coupling_ratio(&p), 1.082766780403291e-3);

        let no_secondary = LatticeParams::new(25.0, 0.0).unwrap();
        assert_eq!(coupling_ratio(&no_secondary), 1.0);

        let weak = LatticeParams::new(25.0, 10.0).unwrap();
        let r = coupling_ratio(&weak);
        assert!(r > 1.082766780403291e-3 && r < 1.0);
    }

    #[test]
    fn solve_recovers_the_design_point() {
        let v_prime = solve_secondary_amplitude(25.0, 1e-3).unwrap();
        assert!((v_prime - 17.688786034342606).abs() < 1e-6);
        // Round trip: the achieved ratio matches the request.
        let p = LatticeParams::new(25.0, v_prime).unwrap();
        assert!((coupling_ratio(&p) - 1e-3).abs() / 1e-3 < 1e-6);
    }

    #[test]
    fn solve_handles_the_trivial_and_impossible_targets() {
        // Ratio 1 needs no secondary lattice at all.
        let zero = solve_secondary_amplitude(25.0, 1.0).unwrap();
        assert!(zero.abs() < 1e-6);

        assert!(matches!(
            solve_secondary_amplitude(25.0, 2.0),
            Err(Error::NoSolution { .. })
        ));
        assert!(matches!(
            solve_secondary_amplitude(25.0, 1e-30),
            Err(Error::NoSolution { .. })
        ));
        assert!(solve_secondary_amplitude(1.0, 0.5).is_err());
    }

    #[test]
    fn solve_round_trips_across_targets() {
        for target in [0.5, 0.1, 0.01, 1e-3] {
            let v_prime = solve_secondary_amplitude(25.0, target).unwrap();
            let p = LatticeParams::new(25.0, v_prime).unwrap();
            let achieved = coupling_ratio(&p);
            assert!(
                (achieved - target).abs() / target < 1e-6,
                "target {target}, achieved {achieved}"
            );
        }
    }

    #[test]
    fn pulse_time_is_half_a_tunneling_period() {
        let j = tunneling_coupling(7.5).unwrap();
        assert_rel(pulse_time(j).unwrap(), 232.2038379585397);
        assert!(pulse_time(0.0).is_err());
    }

    #[test]
    fn theta_tracks_the_pulse_duration() {
        let j = tunneling_coupling(7.5).unwrap();
        let half_period = pulse_time(j).unwrap();
        let ideal = theta_from_timing(j, half_period).unwrap();
        assert!((ideal - std::f64::consts::FRAC_PI_2).abs() < 1e-12);

        // A timing error dt0 shifts theta by J * dt0 / 2.
        let offset = 0.4 / j; // dimensionless error 0.4
        let late = theta_from_timing(j, half_period + offset).unwrap();
        assert!((late - (std::f64::consts::FRAC_PI_2 + 0.2)).abs() < 1e-12);

        assert_eq!(theta_from_timing(j, 0.0).unwrap(), 0.0);
        assert!(theta_from_timing(j, -1.0).is_err());
        assert!(theta_from_timing(0.0, 1.0).is_err());
    }

    #[test]
    fn potential_alternates_tall_and_short_barriers() {
        let p = LatticeParams::new(25.0, 17.5).unwrap();
        let tall = superlattice_potential(0.0, &p, Parity::Odd, 0);
        let short = superlattice_potential(1.0, &p, Parity::Odd, 0);
        assert!((tall - 42.5).abs() < 1e-12);
        assert!((short - 7.5).abs() < 1e-12);
    }

    #[test]
    fn swapping_parity_and_internal_leaves_the_potential_unchanged() {
        let p = LatticeParams::new(25.0, 17.5).unwrap();
        for k in 0..40 {
            let x = k as f64 * 0.15 - 3.0;
            let a = superlattice_potential(x, &p, Parity::Odd, 0);
            let b = superlattice_potential(x, &p, Parity::Even, 1);
            assert_eq!(a, b, "x = {x}");
            let c = superlattice_potential(x, &p, Parity::Odd, 1);
            let d = superlattice_potential(x, &p, Parity::Even, 0);
            assert_eq!(c, d, "x = {x}");
            // The two internal states see opposite secondary signs.
            assert!((a + c - 2.0 * 25.0 * (2.0 * PI * x).cos()).abs() < 1e-9);
        }
    }

    #[test]
    fn adiabatic_time_is_the_inverse_trap_frequency() {
        // A 30 kHz trap needs about 33 microseconds.
        let dt = adiabatic_time(30e3).unwrap();
        assert!((dt - 3.3333333333333333e-5).abs() < 1e-17);
        assert!(adiabatic_time(0.0).is_err());
        assert!(adiabatic_time(-5.0).is_err());
    }

    #[test]
    fn measurement_offset_scales_sites_by_the_period() {
        let p = LatticeParams::new(25.0, 17.5)
            .unwrap()
            .with_lambda(0.4)
            .unwrap();
        assert!((p.measurement_offset(3) - 1.2).abs() < 1e-15);
        assert!((p.measurement_offset(-2) + 0.8).abs() < 1e-15);
        assert_eq!(p.measurement_offset(0), 0.0);
        // Default period is one lattice constant.
        let unit = LatticeParams::new(25.0, 17.5).unwrap();
        assert_eq!(unit.measurement_offset(5), 5.0);
    }
}
