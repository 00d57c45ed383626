//! Probability tables produced by the quantum walk and its classical baseline.

/// A probability distribution over contiguous integer lattice sites.
///
/// Sites run from `min_site()` to `max_site()` inclusive; `step` records how
/// many walk steps produced it and `label` identifies the data series (for
/// example one pulse-timing offset in a sweep).
#[derive(Debug, Clone, PartialEq)]
pub struct Distribution {
    min_site: i64,
    probabilities: Vec<f64>,
    step: usize,
    label: String,
}

impl Distribution {
    /// `probabilities[k]` is the probability at site `min_site + k`.
    ///
    /// Panics if `probabilities` is empty; an empty table has no meaning here.
    pub fn new(
        min_site: i64,
        probabilities: Vec<f64>,
        step: usize,
        label: impl Into<String>,
    ) -> Self {
        assert!(
            !probabilities.is_empty(),
            "a distribution needs at least one site"
        );
        Distribution {
            min_site,
            probabilities,
            step,
            label: label.into(),
        }
    }

    pub fn min_site(&self) -> i64 {
        self.min_site
    }

    pub fn max_site(&self) -> i64 {
        self.min_site + self.probabilities.len() as i64 - 1
    }

    /// Number of steps after which this distribution was recorded.
    pub fn step(&self) -> usize {
        self.step
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// Probability at `site`; zero outside the stored range.
    pub fn probability(&self, site: i64) -> f64 {
        if site < self.min_site || site > self.max_site() {
            return 0.0;
        }
        self.probabilities[(site - self.min_site) as usize]
    }

    /// Iterates `(site, probability)` pairs in ascending site order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, f64)> + '_ {
        self.probabilities
            .iter()
            .enumerate()
            .map(move |(k, &p)| (self.min_site + k as i64, p))
    }

    pub fn total(&self) -> f64 {
        self.probabilities.iter().sum()
    }

    /// Mean position `sum_x x P(x)`.
    pub fn mean(&self) -> f64 {
        self.iter().map(|(x, p)| x as f64 * p).sum()
    }

    /// Standard deviation of the position, `sqrt(<x^2> - <x>^2)`.
    ///
    /// The variance is clamped at zero so rounding noise on a point mass can
    /// never produce a NaN.
    pub fn std_dev(&self) -> f64 {
        let mean = self.mean();
        let second: f64 = self.iter().map(|(x, p)| (x as f64) * (x as f64) * p).sum();
        (second - mean * mean).max(0.0).sqrt()
    }

    /// The same distribution re-windowed to `[min_site, max_site]`, padding
    /// with zeros where the original had no entry.
    pub fn restricted(&self, min_site: i64, max_site: i64) -> Distribution {
        assert!(min_site <= max_site, "empty site window");
        let probabilities = (min_site..=max_site).map(|x| self.probability(x)).collect();
        Distribution {
            min_site,
            probabilities,
            step: self.step,
            label: self.label.clone(),
        }
    }
}

/// Probability at one fixed site, tracked across steps `0..=n_max`.
#[derive(Debug, Clone, PartialEq)]
pub struct TraceSeries {
    site: i64,
    values: Vec<f64>,
    label: String,
}

impl TraceSeries {
    /// `values[n]` is the probability at `site` after `n` steps.
    pub fn new(site: i64, values: Vec<f64>, label: impl Into<String>) -> Self {
        TraceSeries {
            site,
            values,
            label: label.into(),
        }
    }

    pub fn site(&self) -> i64 {
        self.site
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Largest recorded step index.
    pub fn max_step(&self) -> usize {
        self.values.len().saturating_sub(1)
    }

    /// Step index with the highest probability; ties resolve to the earliest.
    pub fn peak_step(&self) -> usize {
        let mut best = 0;
        for (n, &value) in self.values.iter().enumerate() {
            if value > self.values[best] {
                best = n;
            }
        }
        best
    }
}
