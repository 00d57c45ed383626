//! Deterministic rendering of distributions and traces.
//!
//! CSV payloads are byte-reproducible: probabilities are always printed with
//! twelve significant digits in scientific notation, rows end in a bare line
//! feed, and column order follows the input series order.

use serde::Serialize;
use superwalk_core::{Distribution, TraceSeries};

/// Fixed-width scientific form used for every probability cell.
pub fn format_probability(p: f64) -> String {
    format!("{p:.11e}")
}

/// One CSV table, sites as rows and one column per series.
///
/// All series must share the same site window (the sweep API guarantees it).
pub fn distribution_csv(series: &[Distribution]) -> String {
    assert!(!series.is_empty());
    let min_site = series[0].min_site();
    let max_site = series[0].max_site();
    let mut out = String::from("site");
    for d in series {
        out.push(',');
        out.push_str(d.label());
    }
    out.push('\n');
    for site in min_site..=max_site {
        out.push_str(&site.to_string());
        for d in series {
            out.push(',');
            out.push_str(&format_probability(d.probability(site)));
        }
        out.push('\n');
    }
    out
}

/// One CSV table, steps as rows and one column per series.
pub fn trace_csv(series: &[TraceSeries]) -> String {
    assert!(!series.is_empty());
    let n_rows = series[0].values().len();
    let mut out = String::from("step");
    for t in series {
        assert_eq!(t.values().len(), n_rows, "trace lengths must agree");
        out.push(',');
        out.push_str(t.label());
    }
    out.push('\n');
    for step in 0..n_rows {
        out.push_str(&step.to_string());
        for t in series {
            out.push(',');
            out.push_str(&format_probability(t.values()[step]));
        }
        out.push('\n');
    }
    out
}

#[derive(Serialize)]
struct SeriesDoc<'a> {
    label: &'a str,
    values: &'a [f64],
}

#[derive(Serialize)]
struct DistributionDoc<'a> {
    kind: &'static str,
    steps: usize,
    sites: Vec<i64>,
    series: Vec<SeriesDoc<'a>>,
}

#[derive(Serialize)]
struct TraceDoc<'a> {
    kind: &'static str,
    site: i64,
    max_step: usize,
    series: Vec<SeriesDoc<'a>>,
}

/// JSON form of a distribution table. Owned value vectors are built here so
/// padding outside a series' window is explicit in the output.
pub fn distribution_json(steps: usize, series: &[Distribution]) -> serde_json::Result<String> {
    assert!(!series.is_empty());
    let sites: Vec<i64> = (series[0].min_site()..=series[0].max_site()).collect();
    let values: Vec<Vec<f64>> = series
        .iter()
        .map(|d| sites.iter().map(|&x| d.probability(x)).collect())
        .collect();
    let doc = DistributionDoc {
        kind: "distribution",
        steps,
        sites,
        series: series
            .iter()
            .zip(&values)
            .map(|(d, v)| SeriesDoc {
                label: d.label(),
                values: v,
            })
            .collect(),
    };
    Ok(serde_json::to_string_pretty(&doc)? + "\n")
}

/// JSON form of a site trace.
pub fn trace_json(site: i64, series: &[TraceSeries]) -> serde_json::Result<String> {
    assert!(!series.is_empty());
    let doc = TraceDoc {
        kind: "trace",
        site,
        max_step: series[0].values().len().saturating_sub(1),
        series: series
            .iter()
            .map(|t| SeriesDoc {
                label: t.label(),
                values: t.values(),
            })
            .collect(),
    };
    Ok(serde_json::to_string_pretty(&doc)? + "\n")
}
