//! Sweeps over pulse-timing errors and comparisons against the classical
//! baseline.

use crate::classical::{classical_distribution, classical_site_trace};
use crate::distribution::{Distribution, TraceSeries};
use crate::error::Result;
use crate::walk::{run_walk, WalkConfig};

/// Label for the data series taken at dimensionless timing error `offset`.
pub fn offset_label(offset: f64) -> String {
    format!("dt0={offset}")
}

/// Final position distribution of an `n_steps` walk at each timing offset,
/// with the classical baseline appended last.
///
/// Every distribution is windowed to the light cone `[-n_steps, n_steps]`, so
/// the results line up site by site. An explicit `half_width` overrides the
/// default lattice size of every quantum run.
pub fn error_sweep(
    n_steps: usize,
    offsets: &[f64],
    half_width: Option<usize>,
) -> Result<Vec<Distribution>> {
    let window = n_steps as i64;
    let mut out = Vec::with_capacity(offsets.len() + 1);
    for &offset in offsets {
        let mut config = WalkConfig::with_timing_offset(n_steps, offset);
        config.half_width = half_width;
        let snapshots = run_walk(&config)?;
        let dist = snapshots[n_steps]
            .position_distribution()
            .restricted(-window, window)
            .with_label(offset_label(offset));
        out.push(dist);
    }
    out.push(classical_distribution(n_steps));
    Ok(out)
}

/// Probability at one site across steps `0..=n_max`, one series per timing
/// offset, with the classical baseline appended last.
pub fn site_trace(
    site: i64,
    n_max: usize,
    offsets: &[f64],
    half_width: Option<usize>,
) -> Result<Vec<TraceSeries>> {
    let mut out = Vec::with_capacity(offsets.len() + 1);
    for &offset in offsets {
        let mut config = WalkConfig::with_timing_offset(n_max, offset);
        config.half_width = half_width;
        let snapshots = run_walk(&config)?;
        let values = snapshots
            .iter()
            .map(|state| state.position_distribution().probability(site))
            .collect();
        out.push(TraceSeries::new(site, values, offset_label(offset)));
    }
    out.push(classical_site_trace(site, n_max));
    Ok(out)
}

/// Total variation distance `(1/2) sum_x |p(x) - q(x)|` over the union of
/// the two site ranges; 0 for identical distributions, 1 for disjoint ones.
pub fn total_variation(p: &Distribution, q: &Distribution) -> f64 {
    let min_site = p.min_site().min(q.min_site());
    let max_site = p.max_site().max(q.max_site());
    let sum: f64 = (min_site..=max_site)
        .map(|x| (p.probability(x) - q.probability(x)).abs())
        .sum();
    0.5 * sum
}
