//! Command-line front end: kernel evaluations, norm sweeps, and
//! approximation experiments with deterministic CSV or JSON output.
//!
//! Identical flags always produce byte-identical output: rows are
//! sorted, maps are ordered, floats render through a fixed 12-digit
//! formatter, and reports carry no timestamp unless one is supplied.

use crate::analysis::{
    builtin_by_name, cos_sum_ratio_sweep, default_u_grid, experiment_cesaro, experiment_poisson,
    kernel_moment, lebesgue_constant, poisson_moment,
};
use crate::kernels::{dirichlet, poisson_compact, CesaroKernel, CesaroOrder, SingularityPolicy};
use crate::means::CoefficientTable;
use crate::parse::{parse_point, parse_reals};
use crate::quadrature::HexGrid;
use crate::report::{format_significant, ExperimentReport, ExperimentRow, ReportMetadata};
use crate::Error;
use clap::{Parser, Subcommand, ValueEnum};
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io;
use std::path::PathBuf;

/// Hexagonal Fourier analysis experiments.
#[derive(Parser, Debug)]
#[command(name = "hexfourier", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "csv")]
    pub format: Format,

    /// Output path; standard output when omitted.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

/// Output encoding.
#[derive(Clone, Copy, Debug, PartialEq, ValueEnum)]
pub enum Format {
    /// Comma-separated rows with `#` metadata comments.
    Csv,
    /// Pretty-printed JSON, full float precision.
    Json,
}

/// Kernel selector for `kernel-eval`.
#[derive(Clone, Copy, Debug, PartialEq, ValueEnum)]
pub enum KernelKind {
    /// Dirichlet kernel `D_n`; needs `--n`.
    Dirichlet,
    /// Cesaro kernel `K_n^delta`; needs `--n` and `--delta`.
    Cesaro,
    /// Abel-Poisson kernel `P_r`; needs `--r`.
    Poisson,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate one kernel at one point.
    KernelEval {
        /// Which kernel to evaluate.
        #[arg(long, value_enum)]
        kernel: KernelKind,
        /// Kernel degree for `dirichlet` and `cesaro`.
        #[arg(long)]
        n: Option<u32>,
        /// Summability order for `cesaro`.
        #[arg(long)]
        delta: Option<f64>,
        /// Radius in [0, 1) for `poisson`.
        #[arg(long)]
        r: Option<f64>,
        /// Evaluation point as `t1,t2,t3` summing to zero.
        #[arg(long)]
        t: String,
    },
    /// Sweep the normalized L1 kernel norm over degrees 0..=n-max.
    Lebesgue {
        /// Summability order.
        #[arg(long)]
        delta: f64,
        /// Largest degree in the sweep.
        #[arg(long, default_value_t = 16)]
        n_max: u32,
        /// Quadrature grid refinement; defaults to `8 (n_max + 1)`.
        #[arg(long)]
        grid_n: Option<u32>,
    },
    /// Sweep the first absolute kernel moment over degrees 0..=n-max.
    Moment {
        /// Summability order.
        #[arg(long)]
        delta: f64,
        /// Largest degree in the sweep.
        #[arg(long, default_value_t = 16)]
        n_max: u32,
        /// Quadrature grid refinement; defaults to `8 (n_max + 1)`.
        #[arg(long)]
        grid_n: Option<u32>,
    },
    /// Sweep the first Abel-Poisson kernel moment over radii.
    PoissonMoment {
        /// Comma-separated radii in [0, 1).
        #[arg(long, default_value = "0.5,0.7,0.9,0.95,0.99")]
        r: String,
        /// Quadrature grid refinement; adaptive per radius when omitted.
        #[arg(long)]
        grid_n: Option<u32>,
    },
    /// Measure Cesaro-mean approximation errors against the modulus
    /// decay law.
    CesaroApprox {
        /// Test function: f1, f2, f3, or f4.
        #[arg(long, default_value = "f3")]
        function: String,
        /// Hoelder exponent for f4.
        #[arg(long, default_value_t = 0.5)]
        alpha: f64,
        /// Summability order.
        #[arg(long)]
        delta: f64,
        /// Smallest degree in the sweep.
        #[arg(long, default_value_t = 4)]
        n_min: u32,
        /// Largest degree in the sweep.
        #[arg(long, default_value_t = 64)]
        n_max: u32,
        /// Evaluation grid refinement for sup norms and moduli.
        #[arg(long, default_value_t = 64)]
        grid_n: u32,
        /// Coefficient sampling grid; defaults to `2 n_max + 2`.
        #[arg(long)]
        sample_grid_n: Option<u32>,
    },
    /// Measure Abel-Poisson approximation errors against the modulus
    /// decay law.
    PoissonApprox {
        /// Test function: f1, f2, f3, or f4.
        #[arg(long, default_value = "f3")]
        function: String,
        /// Hoelder exponent for f4.
        #[arg(long, default_value_t = 0.5)]
        alpha: f64,
        /// Comma-separated radii in [0, 1).
        #[arg(long, default_value = "0.5,0.7,0.9,0.95,0.99")]
        r: String,
        /// Evaluation grid refinement for sup norms and moduli.
        #[arg(long, default_value_t = 64)]
        grid_n: u32,
        /// Coefficient sampling grid refinement.
        #[arg(long, default_value_t = 386)]
        sample_grid_n: u32,
        /// Ring truncation tolerance.
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Sweep the weighted cosine sum against its sine bound for orders
    /// strictly between 0 and 1.
    Lemma1 {
        /// Summability order in (0, 1).
        #[arg(long)]
        delta: f64,
        /// Largest degree in the sweep.
        #[arg(long, default_value_t = 64)]
        n_max: u32,
        /// Comma-separated u values in (0, pi); a 20-point default
        /// grid when omitted.
        #[arg(long)]
        u_values: Option<String>,
    },
    /// Print the Fourier coefficients of a test function over H_n.
    Coeffs {
        /// Test function: f1, f2, f3, or f4.
        #[arg(long, default_value = "f2")]
        function: String,
        /// Hoelder exponent for f4.
        #[arg(long, default_value_t = 0.5)]
        alpha: f64,
        /// Largest coefficient degree.
        #[arg(long, default_value_t = 4)]
        n_max: u32,
        /// Sampling grid refinement; defaults to `2 n_max + 2` and must
        /// not alias the requested degrees.
        #[arg(long)]
        grid_n: Option<u32>,
    },
}

/// Failure modes of a CLI run, split by exit code.
#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum RunError {
    /// Flag combinations that do not describe a computation; exit 2.
    #[error("{0}")]
    Usage(String),
    /// Domain, numeric, or output failures; exit 1.
    #[error("{0}")]
    Failure(String),
}

impl RunError {
    /// Process exit code for this failure.
    pub fn exit_code(&self) -> u8 {
        match self {
            RunError::Usage(_) => 2,
            RunError::Failure(_) => 1,
        }
    }
}

impl From<Error> for RunError {
    fn from(error: Error) -> Self {
        RunError::Failure(error.to_string())
    }
}

/// Maps parse-shaped errors to usage failures and domain errors to
/// numeric failures.
fn argument<T>(parsed: crate::Result<T>) -> Result<T, RunError> {
    parsed.map_err(|error| match error {
        Error::Parse(message) => RunError::Usage(message),
        other => RunError::Failure(other.to_string()),
    })
}

/// Runs one parsed command, writing its whole output to `out`.
pub fn run(cli: &Cli, out: &mut dyn io::Write) -> Result<(), RunError> {
    let text = render(cli)?;
    out.write_all(text.as_bytes())
        .map_err(|error| RunError::Failure(format!("cannot write output: {error}")))
}

fn render(cli: &Cli) -> Result<String, RunError> {
    let policy = SingularityPolicy::default();
    match &cli.command {
        Command::KernelEval {
            kernel,
            n,
            delta,
            r,
            t,
        } => {
            let point = argument(parse_point(t))?;
            let value = match kernel {
                KernelKind::Dirichlet => {
                    let n = n.ok_or_else(|| {
                        RunError::Usage("--kernel dirichlet requires --n".to_string())
                    })?;
                    dirichlet(n, point, policy)
                }
                KernelKind::Cesaro => {
                    let n = n.ok_or_else(|| {
                        RunError::Usage("--kernel cesaro requires --n".to_string())
                    })?;
                    let delta = delta.ok_or_else(|| {
                        RunError::Usage("--kernel cesaro requires --delta".to_string())
                    })?;
                    let order = CesaroOrder::new(delta)?;
                    CesaroKernel::new(n, order).eval(point, policy)
                }
                KernelKind::Poisson => {
                    let r = r.ok_or_else(|| {
                        RunError::Usage("--kernel poisson requires --r".to_string())
                    })?;
                    poisson_compact(r, point)?
                }
            };
            Ok(scalar_output(cli.format, value))
        }
        Command::Lebesgue {
            delta,
            n_max,
            grid_n,
        } => {
            let order = CesaroOrder::new(*delta)?;
            let grid_n = grid_n.unwrap_or(8 * (n_max + 1));
            let grid = HexGrid::build(grid_n)?;
            let rows = (0..=*n_max)
                .map(|n| {
                    let measured = lebesgue_constant(n, order, &grid, policy);
                    let bound = if *delta < 1.0 {
                        f64::from(n + 2).ln()
                    } else {
                        1.0
                    };
                    ExperimentRow::new(f64::from(n), measured, bound)
                })
                .collect();
            let report = ExperimentReport::new(
                ReportMetadata {
                    function: "cesaro-kernel".to_string(),
                    sweep: format!("lebesgue delta={delta}, n=0..{n_max}"),
                    grid_n,
                    timestamp: None,
                },
                rows,
            );
            Ok(report_output(cli.format, &report, "n,L,ratio", false))
        }
        Command::Moment {
            delta,
            n_max,
            grid_n,
        } => {
            let order = CesaroOrder::new(*delta)?;
            let grid_n = grid_n.unwrap_or(8 * (n_max + 1));
            let grid = HexGrid::build(grid_n)?;
            let rows = (0..=*n_max)
                .map(|n| {
                    let measured = kernel_moment(n, order, &grid, policy);
                    let log = f64::from(n + 2).ln();
                    let bound = if *delta < 1.0 {
                        log / f64::from(n + 1).powf(*delta)
                    } else {
                        log * log / f64::from(n + 1)
                    };
                    ExperimentRow::new(f64::from(n), measured, bound)
                })
                .collect();
            let report = ExperimentReport::new(
                ReportMetadata {
                    function: "cesaro-kernel".to_string(),
                    sweep: format!("moment delta={delta}, n=0..{n_max}"),
                    grid_n,
                    timestamp: None,
                },
                rows,
            );
            Ok(report_output(cli.format, &report, "n,d,ratio", false))
        }
        Command::PoissonMoment { r, grid_n } => {
            let mut radii = argument(parse_reals(r))?;
            for &radius in &radii {
                if !(0.0..1.0).contains(&radius) {
                    return Err(RunError::Failure(format!(
                        "r value {radius} is outside the half-open interval [0, 1)"
                    )));
                }
            }
            radii.sort_by(|a, b| a.partial_cmp(b).expect("validated finite"));
            radii.dedup();
            let mut rows = Vec::with_capacity(radii.len());
            for &radius in &radii {
                let refinement = grid_n.unwrap_or_else(|| adaptive_moment_grid(radius));
                let grid = HexGrid::build(refinement)?;
                let measured = poisson_moment(radius, &grid)?;
                let bound = (1.0 - radius) * (1.0 - radius).ln().abs();
                rows.push(ExperimentRow::new(radius, measured, bound));
            }
            let report = ExperimentReport::new(
                ReportMetadata {
                    function: "poisson-kernel".to_string(),
                    sweep: format!(
                        "moment r={}..{}",
                        radii.first().expect("nonempty list"),
                        radii.last().expect("nonempty list")
                    ),
                    grid_n: grid_n.unwrap_or(0),
                    timestamp: None,
                },
                rows,
            );
            Ok(report_output(cli.format, &report, "r,lambda,ratio", false))
        }
        Command::CesaroApprox {
            function,
            alpha,
            delta,
            n_min,
            n_max,
            grid_n,
            sample_grid_n,
        } => {
            if n_min > n_max {
                return Err(RunError::Usage(format!(
                    "--n-min {n_min} exceeds --n-max {n_max}"
                )));
            }
            let f = builtin_by_name(function, *alpha)?;
            let order = CesaroOrder::new(*delta)?;
            let ns: Vec<u32> = (*n_min..=*n_max).collect();
            let sample = sample_grid_n.unwrap_or(2 * n_max + 2);
            let eval_grid = HexGrid::build(*grid_n)?;
            let report = experiment_cesaro(&f, order, &ns, sample, &eval_grid)?;
            Ok(report_output(
                cli.format,
                &report,
                "n,error,bound,ratio",
                true,
            ))
        }
        Command::PoissonApprox {
            function,
            alpha,
            r,
            grid_n,
            sample_grid_n,
            tol,
        } => {
            let f = builtin_by_name(function, *alpha)?;
            let radii = argument(parse_reals(r))?;
            let eval_grid = HexGrid::build(*grid_n)?;
            let report = experiment_poisson(&f, &radii, *sample_grid_n, &eval_grid, *tol)?;
            Ok(report_output(
                cli.format,
                &report,
                "r,error,bound,ratio",
                true,
            ))
        }
        Command::Lemma1 {
            delta,
            n_max,
            u_values,
        } => {
            let order = CesaroOrder::new(*delta)?;
            let us = match u_values {
                Some(text) => argument(parse_reals(text))?,
                None => default_u_grid(),
            };
            let ns: Vec<u32> = (0..=*n_max).collect();
            let report = cos_sum_ratio_sweep(order, &ns, &us)?;
            Ok(report_output(
                cli.format,
                &report,
                "n,measured,bound,ratio",
                true,
            ))
        }
        Command::Coeffs {
            function,
            alpha,
            n_max,
            grid_n,
        } => {
            let f = builtin_by_name(function, *alpha)?;
            let needed = 2 * n_max + 2;
            let grid_n = grid_n.unwrap_or(needed);
            if grid_n < needed {
                return Err(RunError::Failure(format!(
                    "grid refinement {grid_n} aliases degree {n_max}; need at least {needed}"
                )));
            }
            let grid = HexGrid::build(grid_n)?;
            let samples = grid.sample_real(|t| f.eval(t));
            let table = CoefficientTable::compute(&samples, *n_max);
            match cli.format {
                Format::Csv => {
                    let mut text = String::new();
                    writeln!(text, "# function: {}", f.name()).expect("string write");
                    writeln!(text, "# n_max: {n_max}").expect("string write");
                    writeln!(text, "# grid_n: {grid_n}").expect("string write");
                    writeln!(text, "j1,j2,j3,re,im").expect("string write");
                    for (j, c) in table.entries() {
                        writeln!(
                            text,
                            "{},{},{},{},{}",
                            j.j1(),
                            j.j2(),
                            j.j3(),
                            format_significant(c.re),
                            format_significant(c.im)
                        )
                        .expect("string write");
                    }
                    Ok(text)
                }
                Format::Json => {
                    let coefficients: BTreeMap<String, [f64; 2]> = table
                        .entries()
                        .iter()
                        .map(|(j, c)| (format!("{},{},{}", j.j1(), j.j2(), j.j3()), [c.re, c.im]))
                        .collect();
                    let value = serde_json::json!({
                        "metadata": {
                            "function": f.name(),
                            "n_max": n_max,
                            "grid_n": grid_n,
                        },
                        "coefficients": coefficients,
                    });
                    Ok(pretty_json(&value))
                }
            }
        }
    }
}

fn adaptive_moment_grid(r: f64) -> u32 {
    let needed = (8.0 / (1.0 - r)).ceil() as u32;
    needed.clamp(256, 1024)
}

fn scalar_output(format: Format, value: f64) -> String {
    match format {
        Format::Csv => format!("{}\n", format_significant(value)),
        Format::Json => pretty_json(&serde_json::json!({ "value": value })),
    }
}

fn report_output(
    format: Format,
    report: &ExperimentReport,
    header: &str,
    include_bound: bool,
) -> String {
    match format {
        Format::Csv => report.to_csv(header, include_bound),
        Format::Json => {
            let mut text = report.to_json();
            text.push('\n');
            text
        }
    }
}

fn pretty_json(value: &serde_json::Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("value serializes");
    text.push('\n');
    text
}
