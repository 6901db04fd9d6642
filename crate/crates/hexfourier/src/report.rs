//! Experiment reports and their deterministic serialized forms.
//!
//! A report is a parameter sweep: one row per parameter value with the
//! measured functional, the bound it is compared against, and their
//! ratio. JSON keeps full float precision and round-trips exactly;
//! CSV renders numbers to 12 significant digits with metadata in
//! `#`-prefixed comment lines.

use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt::Write;

/// One sweep row.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentRow {
    /// Sweep parameter (degree `n` or radius `r`).
    pub parameter: f64,
    /// Measured functional value.
    pub measured: f64,
    /// Bound the measurement is compared against.
    pub bound: f64,
    /// `measured / bound`, or 0 when the bound underflows.
    pub ratio: f64,
}

impl ExperimentRow {
    /// Builds a row, computing the guarded ratio.
    pub fn new(parameter: f64, measured: f64, bound: f64) -> Self {
        Self {
            parameter,
            measured,
            bound,
            ratio: guarded_ratio(measured, bound),
        }
    }
}

/// `measured / bound` with a guard: vanishing or underflowing bounds
/// give 0 instead of an infinity that would not survive JSON.
pub fn guarded_ratio(measured: f64, bound: f64) -> f64 {
    if bound > 1e-300 {
        measured / bound
    } else {
        0.0
    }
}

/// Context shared by all rows of a report.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportMetadata {
    /// Test function or kernel the sweep ran over.
    pub function: String,
    /// Human-readable sweep description.
    pub sweep: String,
    /// Evaluation grid refinement (or sweep-specific size stand-in).
    pub grid_n: u32,
    /// Optional wall-clock stamp; omitted by default so identical runs
    /// stay byte-identical.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<String>,
}

/// A full sweep: metadata plus rows sorted by parameter.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub metadata: ReportMetadata,
    pub rows: Vec<ExperimentRow>,
}

impl ExperimentReport {
    /// Assembles a report, sorting the rows by parameter.
    pub fn new(metadata: ReportMetadata, mut rows: Vec<ExperimentRow>) -> Self {
        rows.sort_by(|a, b| {
            a.parameter
                .partial_cmp(&b.parameter)
                .expect("sweep parameters are finite")
        });
        Self { metadata, rows }
    }

    /// Largest ratio over the rows; 0 for an empty report.
    pub fn max_ratio(&self) -> f64 {
        self.rows.iter().map(|r| r.ratio).fold(0.0, f64::max)
    }

    /// Median ratio over the rows (mean of the middle pair when even);
    /// 0 for an empty report.
    pub fn median_ratio(&self) -> f64 {
        if self.rows.is_empty() {
            return 0.0;
        }
        let mut ratios: Vec<f64> = self.rows.iter().map(|r| r.ratio).collect();
        ratios.sort_by(|a, b| a.partial_cmp(b).expect("ratios are finite"));
        let mid = ratios.len() / 2;
        if ratios.len() % 2 == 1 {
            ratios[mid]
        } else {
            0.5 * (ratios[mid - 1] + ratios[mid])
        }
    }

    /// Pretty JSON with full float precision.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Parses a report back from [`to_json`](Self::to_json) output.
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// CSV rendering: metadata as `#` comments, then the given header
    /// line, then one row per line at 12 significant digits. The bound
    /// column is included only when `include_bound` is set, matching
    /// headers with three or four names.
    pub fn to_csv(&self, header: &str, include_bound: bool) -> String {
        let mut out = String::new();
        writeln!(out, "# function: {}", self.metadata.function).expect("string write");
        writeln!(out, "# sweep: {}", self.metadata.sweep).expect("string write");
        writeln!(out, "# grid_n: {}", self.metadata.grid_n).expect("string write");
        if let Some(stamp) = &self.metadata.timestamp {
            writeln!(out, "# timestamp: {stamp}").expect("string write");
        }
        writeln!(out, "{header}").expect("string write");
        for row in &self.rows {
            let parameter = format_significant(row.parameter);
            let measured = format_significant(row.measured);
            let ratio = format_significant(row.ratio);
            if include_bound {
                let bound = format_significant(row.bound);
                writeln!(out, "{parameter},{measured},{bound},{ratio}").expect("string write");
            } else {
                writeln!(out, "{parameter},{measured},{ratio}").expect("string write");
            }
        }
        out
    }
}

/// Renders a float with 12 significant digits, trimming trailing
/// zeros; falls back to exponent notation outside `[1e-4, 1e12)`.
///
/// # Examples
///
/// ```
/// use hexfourier::report::format_significant;
///
/// assert_eq!(format_significant(37.0), "37");
/// assert_eq!(format_significant(1.875), "1.875");
/// assert_eq!(format_significant(1.0 / 3.0), "0.333333333333");
/// ```
pub fn format_significant(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let scientific = format!("{x:.11e}");
    let (mantissa, exponent) = scientific
        .split_once('e')
        .expect("formatter emits an exponent");
    let exponent: i32 = exponent.parse().expect("formatter emits a valid exponent");
    if (-4..12).contains(&exponent) {
        let decimals = (11 - exponent).max(0) as usize;
        trim_fraction(format!("{x:.decimals$}"))
    } else {
        let mantissa = trim_fraction(mantissa.to_string());
        format!("{mantissa}e{exponent}")
    }
}

fn trim_fraction(mut s: String) -> String {
    if s.contains('.') {
        let trimmed = s.trim_end_matches('0').trim_end_matches('.').len();
        s.truncate(trimmed);
    }
    s
}
