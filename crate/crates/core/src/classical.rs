//! Unbiased classical random-walk baseline.
//!
//! The classical counterpart of the walk flips a fair coin each step and
//! moves one site left or right. Its distribution is binomial with standard
//! deviation `sqrt(n)`, the diffusive scaling the quantum walk is compared
//! against.
//!
//! Probabilities are computed by exact dynamic programming. Every value is a
//! dyadic rational `k / 2^n`, which `f64` represents exactly for every `n`
//! reachable in practice, so these tables carry no rounding error at all.

use crate::distribution::{Distribution, TraceSeries};

/// Label attached to every classical data series.
pub const CLASSICAL_LABEL: &str = "classical";

/// Site distribution of the unbiased classical walk after `n` steps, over
/// sites `-n..=n` (site 0 only for `n = 0`).
pub fn classical_distribution(n: usize) -> Distribution {
    Distribution::new(-(n as i64), evolve(n), n, CLASSICAL_LABEL)
}

/// Probability at `site` for each step `0..=n_max`.
pub fn classical_site_trace(site: i64, n_max: usize) -> TraceSeries {
    let values = (0..=n_max)
        .map(|n| classical_distribution(n).probability(site))
        .collect();
    TraceSeries::new(site, values, CLASSICAL_LABEL)
}

/// Exact probabilities over sites `-n..=n` after `n` fair-coin steps.
fn evolve(n: usize) -> Vec<f64> {
    let len = 2 * n + 1;
    let mut current = vec![0.0; len];
    current[n] = 1.0; // site 0
    let mut next = vec![0.0; len];
    for _ in 0..n {
        next.iter_mut().for_each(|p| *p = 0.0);
        for k in 0..len {
            let p = current[k];
            if p == 0.0 {
                continue;
            }
            // Splitting in half is exact in binary floating point.
            let half = p / 2.0;
            next[k - 1] += half;
            next[k + 1] += half;
        }
        std::mem::swap(&mut current, &mut next);
    }
    current
}
