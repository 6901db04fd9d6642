//! Kernel-norm functionals, moduli of continuity, a catalog of test
//! functions, and sweep experiments that compare measured approximation
//! errors against their expected decay laws.
//!
//! Sup norms and moduli are estimated over finite grids and finite
//! shift sets, so every reported value is a lower estimate of the true
//! functional. Decay laws are written with `log(n + 2)` so the `n = 0`
//! rows stay finite.

use crate::basis::{phi, HexIndex};
use crate::hexcoord::{HomogeneousPoint, PlanePoint};
use crate::kernels::{
    cesaro_cos_sum, poisson_compact, CesaroKernel, CesaroOrder, SingularityPolicy,
};
use crate::means::{cesaro_multipliers, CoefficientTable};
use crate::quadrature::HexGrid;
use crate::report::{ExperimentReport, ExperimentRow, ReportMetadata};
use crate::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;
use std::fmt;

/// Regularity tag attached to a test function.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SmoothnessClass {
    /// Trigonometric polynomial of the given degree.
    TrigPoly(u32),
    /// Infinitely differentiable.
    Smooth,
    /// Lipschitz with constant 1.
    Lipschitz,
    /// Hoelder-continuous with the given exponent.
    Hoelder(f64),
}

/// A lattice-periodic real function under study.
///
/// The evaluator must be periodic under the hexagonal period lattice;
/// the built-in catalog is verified for that by folding random points.
pub struct TestFunction {
    name: String,
    smoothness: SmoothnessClass,
    eval: Box<dyn Fn(HomogeneousPoint) -> f64 + Send + Sync>,
}

impl TestFunction {
    /// Wraps a periodic evaluator under a catalog name.
    pub fn new<F>(name: impl Into<String>, smoothness: SmoothnessClass, eval: F) -> Self
    where
        F: Fn(HomogeneousPoint) -> f64 + Send + Sync + 'static,
    {
        Self {
            name: name.into(),
            smoothness,
            eval: Box::new(eval),
        }
    }

    /// Catalog name.
    pub fn name(&self) -> &str {
        &self.name
    }

    /// Regularity tag.
    pub const fn smoothness(&self) -> SmoothnessClass {
        self.smoothness
    }

    /// Evaluates the function.
    pub fn eval(&self, t: HomogeneousPoint) -> f64 {
        (self.eval)(t)
    }
}

impl fmt::Debug for TestFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TestFunction")
            .field("name", &self.name)
            .field("smoothness", &self.smoothness)
            .finish()
    }
}

fn trig_mix() -> TestFunction {
    TestFunction::new("f1", SmoothnessClass::TrigPoly(2), |t| {
        phi(HexIndex::new(1, 0), t).re + 0.5 * phi(HexIndex::new(2, -1), t).re
    })
}

fn smooth_exponential() -> TestFunction {
    TestFunction::new("f2", SmoothnessClass::Smooth, |t| {
        let scale = 2.0 * PI / 3.0;
        ((scale * (t.t1() - t.t2())).cos()
            + (scale * (t.t2() - t.t3())).cos()
            + (scale * (t.t3() - t.t1())).cos())
        .exp()
    })
}

fn lattice_distance() -> TestFunction {
    TestFunction::new("f3", SmoothnessClass::Lipschitz, |t| {
        t.hex_distance_to_lattice()
    })
}

fn lattice_distance_power(alpha: f64) -> TestFunction {
    TestFunction::new("f4", SmoothnessClass::Hoelder(alpha), move |t| {
        t.hex_distance_to_lattice().powf(alpha)
    })
}

/// The built-in catalog: a degree-2 trigonometric polynomial `f1`, a
/// smooth exponential of cosines `f2`, the lattice distance `f3`, and
/// its 0.5 power `f4`.
pub fn builtin_test_functions() -> Vec<TestFunction> {
    vec![
        trig_mix(),
        smooth_exponential(),
        lattice_distance(),
        lattice_distance_power(0.5),
    ]
}

/// Looks up a catalog function by name; `alpha` applies to `f4` only
/// and must lie in `(0, 1]`.
pub fn builtin_by_name(name: &str, alpha: f64) -> Result<TestFunction> {
    match name {
        "f1" => Ok(trig_mix()),
        "f2" => Ok(smooth_exponential()),
        "f3" => Ok(lattice_distance()),
        "f4" => {
            if !(alpha > 0.0 && alpha <= 1.0) {
                return Err(Error::invalid(
                    "alpha",
                    format!("{alpha} is outside the half-open interval (0, 1]"),
                ));
            }
            Ok(lattice_distance_power(alpha))
        }
        other => Err(Error::invalid(
            "function",
            format!("unknown test function {other}; expected f1, f2, f3, or f4"),
        )),
    }
}

/// Shift-set size for modulus estimation: directions around the
/// hexagon boundary times dyadic radius shells `u, u/2, u/4, ...`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ShiftSampling {
    /// Boundary directions per shell.
    pub directions: u32,
    /// Number of dyadic shells below the requested radius.
    pub shells: u32,
}

impl Default for ShiftSampling {
    fn default() -> Self {
        Self {
            directions: 200,
            shells: 3,
        }
    }
}

/// Point at angle `theta` in the plane, scaled to the given hex norm.
fn hex_direction(theta: f64, radius: f64) -> HomogeneousPoint {
    let raw = HomogeneousPoint::from_plane(PlanePoint::new(theta.cos(), theta.sin()));
    let scale = radius / raw.hex_norm();
    HomogeneousPoint::new(raw.t1() * scale, raw.t2() * scale)
}

/// Modulus of continuity estimate
/// `sup over shifts of norm <= u of sup over t of |f(t) - f(t + s)|`,
/// maximized over the sampled shift set and the grid nodes. A lower
/// estimate of the true modulus; non-decreasing in `u` up to sampling
/// error.
pub fn modulus_of_continuity(
    f: &TestFunction,
    u: f64,
    sampling: ShiftSampling,
    grid: &HexGrid,
) -> Result<f64> {
    if !(u > 0.0 && u.is_finite()) {
        return Err(Error::invalid(
            "u",
            format!("{u} is not a positive finite radius"),
        ));
    }
    if sampling.directions == 0 || sampling.shells == 0 {
        return Err(Error::invalid(
            "sampling",
            "needs at least one direction and one shell",
        ));
    }
    let base: Vec<f64> = grid.nodes().iter().map(|&t| f.eval(t)).collect();
    let mut best = 0.0f64;
    for shell in 0..sampling.shells {
        let radius = u / f64::powi(2.0, shell as i32);
        for d in 0..sampling.directions {
            let theta = 2.0 * PI * f64::from(d) / f64::from(sampling.directions);
            let shift = hex_direction(theta, radius);
            for (&t, &base_value) in grid.nodes().iter().zip(&base) {
                let deviation = (f.eval(t + shift) - base_value).abs();
                if deviation > best {
                    best = deviation;
                }
            }
        }
    }
    Ok(best)
}

/// Largest deviation `|f(t) - approximant(t)|` over the grid nodes, a
/// lower estimate of the sup-norm error.
pub fn sup_error<F>(f: &TestFunction, approximant: F, grid: &HexGrid) -> f64
where
    F: Fn(HomogeneousPoint) -> f64,
{
    grid.nodes()
        .iter()
        .map(|&t| (f.eval(t) - approximant(t)).abs())
        .fold(0.0, f64::max)
}

/// Normalized absolute kernel integral `mean of |K_n^delta|` over the
/// grid. At least 1 up to quadrature error, since the signed mean is 1.
///
/// # Examples
///
/// ```
/// use hexfourier::analysis::lebesgue_constant;
/// use hexfourier::kernels::{CesaroOrder, SingularityPolicy};
/// use hexfourier::quadrature::HexGrid;
///
/// let grid = HexGrid::build(8).unwrap();
/// let order = CesaroOrder::new(1.0).unwrap();
/// let l0 = lebesgue_constant(0, order, &grid, SingularityPolicy::default());
/// assert!((l0 - 1.0).abs() < 1e-12);
/// ```
pub fn lebesgue_constant(
    n: u32,
    order: CesaroOrder,
    grid: &HexGrid,
    policy: SingularityPolicy,
) -> f64 {
    let kernel = CesaroKernel::new(n, order);
    let sum: f64 = grid
        .nodes()
        .iter()
        .map(|&t| kernel.eval(t, policy).abs())
        .sum();
    sum / grid.node_count() as f64
}

/// First absolute kernel moment `mean of hex_norm(t) |K_n^delta(t)|`
/// over the grid.
pub fn kernel_moment(n: u32, order: CesaroOrder, grid: &HexGrid, policy: SingularityPolicy) -> f64 {
    let kernel = CesaroKernel::new(n, order);
    let sum: f64 = grid
        .nodes()
        .iter()
        .map(|&t| t.hex_norm() * kernel.eval(t, policy).abs())
        .sum();
    sum / grid.node_count() as f64
}

/// First moment of the Abel-Poisson kernel,
/// `mean of hex_norm(t) P_r(t)` over the grid.
pub fn poisson_moment(r: f64, grid: &HexGrid) -> Result<f64> {
    let mut sum = 0.0;
    for &t in grid.nodes() {
        sum += t.hex_norm() * poisson_compact(r, t)?;
    }
    Ok(sum / grid.node_count() as f64)
}

fn max_real_deviation(base: &[f64], values: &[Complex64]) -> f64 {
    base.iter()
        .zip(values)
        .map(|(&b, v)| (b - v.re).abs())
        .fold(0.0, f64::max)
}

fn sorted_sweep_u32(values: &[u32], name: &'static str) -> Result<Vec<u32>> {
    let mut sorted = values.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.is_empty() {
        return Err(Error::invalid(name, "empty sweep"));
    }
    Ok(sorted)
}

/// Error sweep of the Cesaro means of `f` against the modulus decay
/// law: per degree `n` the measured value is the grid sup error of
/// `S_n^delta(f)` and the bound is
/// `log(n+2) * omega(log(n+2) / (n+1)^delta)` for `delta < 1` or
/// `omega(log(n+2)^2 / (n+1))` for `delta >= 1`.
///
/// Coefficients are taken on a sampling grid of refinement
/// `sample_grid_n`, which must be alias-free for the largest degree in
/// the sweep.
pub fn experiment_cesaro(
    f: &TestFunction,
    order: CesaroOrder,
    n_values: &[u32],
    sample_grid_n: u32,
    eval_grid: &HexGrid,
) -> Result<ExperimentReport> {
    let ns = sorted_sweep_u32(n_values, "n_values")?;
    let n_max = *ns.last().expect("nonempty after validation");
    if sample_grid_n < 2 * n_max + 2 {
        return Err(Error::invalid(
            "sample_grid_n",
            format!(
                "refinement {sample_grid_n} aliases degree {n_max}; need at least {}",
                2 * n_max + 2
            ),
        ));
    }
    let sample_grid = HexGrid::build(sample_grid_n)?;
    let samples = sample_grid.sample_real(|t| f.eval(t));
    let table = CoefficientTable::compute(&samples, n_max);
    let rings = table.ring_sums_on_grid(eval_grid);
    let base: Vec<f64> = eval_grid.nodes().iter().map(|&t| f.eval(t)).collect();
    let sampling = ShiftSampling::default();
    let delta = order.delta();
    let mut rows = Vec::with_capacity(ns.len());
    for &n in &ns {
        let values = rings.combine(&cesaro_multipliers(n, order));
        let measured = max_real_deviation(&base, &values);
        let log = f64::from(n + 2).ln();
        let (scale, width) = if delta < 1.0 {
            (log, log / f64::from(n + 1).powf(delta))
        } else {
            (1.0, log * log / f64::from(n + 1))
        };
        let bound = scale * modulus_of_continuity(f, width, sampling, eval_grid)?;
        rows.push(ExperimentRow::new(f64::from(n), measured, bound));
    }
    Ok(ExperimentReport::new(
        ReportMetadata {
            function: f.name().to_string(),
            sweep: format!(
                "cesaro delta={delta}, n={}..{n_max}",
                ns.first().expect("nonempty after validation")
            ),
            grid_n: eval_grid.refinement(),
            timestamp: None,
        },
        rows,
    ))
}

/// Error sweep of the Abel-Poisson means of `f`: per radius `r` the
/// measured value is the grid sup error of `U_r(f)` and the bound is
/// `omega((1-r) |log(1-r)|)`.
///
/// Coefficients come from a sampling grid of refinement
/// `sample_grid_n`; the table carries every ring that grid resolves
/// without aliasing, and each ring sum is truncated by the geometric
/// tail rule at tolerance `tol`.
pub fn experiment_poisson(
    f: &TestFunction,
    r_values: &[f64],
    sample_grid_n: u32,
    eval_grid: &HexGrid,
    tol: f64,
) -> Result<ExperimentReport> {
    let mut rs = r_values.to_vec();
    for &r in &rs {
        if !(0.0..1.0).contains(&r) {
            return Err(Error::invalid(
                "r",
                format!("{r} is outside the half-open interval [0, 1)"),
            ));
        }
    }
    rs.sort_by(|a, b| a.partial_cmp(b).expect("validated finite"));
    rs.dedup();
    if rs.is_empty() {
        return Err(Error::invalid("r_values", "empty sweep"));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::invalid("tol", format!("{tol} is not positive")));
    }
    if sample_grid_n < 4 {
        return Err(Error::invalid(
            "sample_grid_n",
            "refinement below 4 resolves no ring beyond the constant",
        ));
    }
    let degree = (sample_grid_n - 2) / 2;
    let sample_grid = HexGrid::build(sample_grid_n)?;
    let samples = sample_grid.sample_real(|t| f.eval(t));
    let table = CoefficientTable::compute(&samples, degree);
    let rings = table.ring_sums_on_grid(eval_grid);
    let base: Vec<f64> = eval_grid.nodes().iter().map(|&t| f.eval(t)).collect();
    let scale = table.max_abs();
    let sampling = ShiftSampling::default();
    let mut rows = Vec::with_capacity(rs.len());
    for &r in &rs {
        let mut multipliers = Vec::new();
        let mut power = 1.0;
        for k in 0..=degree {
            if k > 0 && scale * 6.0 * f64::from(k) * power / (1.0 - r) < tol {
                break;
            }
            multipliers.push(power);
            power *= r;
        }
        let values = rings.combine(&multipliers);
        let measured = max_real_deviation(&base, &values);
        let width = (1.0 - r) * (1.0 - r).ln().abs();
        let bound = if width > 0.0 {
            modulus_of_continuity(f, width, sampling, eval_grid)?
        } else {
            0.0
        };
        rows.push(ExperimentRow::new(r, measured, bound));
    }
    Ok(ExperimentReport::new(
        ReportMetadata {
            function: f.name().to_string(),
            sweep: format!(
                "poisson r={}..{}",
                rs.first().expect("nonempty after validation"),
                rs.last().expect("nonempty after validation")
            ),
            grid_n: eval_grid.refinement(),
            timestamp: None,
        },
        rows,
    ))
}

/// Ratio sweep of the normalized weighted cosine sum against its sine
/// bound `1/((n+1)^delta (sin u)^delta) + 1/((n+1) sin u)`, for orders
/// `0 < delta < 1`.
///
/// Each report row carries, for one `n`, the `(measured, bound)` pair
/// at the `u` value with the worst ratio over `u_values`.
pub fn cos_sum_ratio_sweep(
    order: CesaroOrder,
    n_values: &[u32],
    u_values: &[f64],
) -> Result<ExperimentReport> {
    let delta = order.delta();
    if delta >= 1.0 {
        return Err(Error::invalid(
            "delta",
            format!("{delta} is outside the open interval (0, 1) the sweep covers"),
        ));
    }
    let ns = sorted_sweep_u32(n_values, "n_values")?;
    if u_values.is_empty() {
        return Err(Error::invalid("u_values", "empty sweep"));
    }
    let mut rows = Vec::with_capacity(ns.len());
    for &n in &ns {
        let mut worst: Option<ExperimentRow> = None;
        for &u in u_values {
            let measured = cesaro_cos_sum(n, order, u)?;
            let s = u.sin();
            let bound =
                1.0 / (f64::from(n + 1).powf(delta) * s.powf(delta)) + 1.0 / (f64::from(n + 1) * s);
            let row = ExperimentRow::new(f64::from(n), measured, bound);
            if worst.as_ref().is_none_or(|w| row.ratio > w.ratio) {
                worst = Some(row);
            }
        }
        rows.push(worst.expect("u_values nonempty"));
    }
    Ok(ExperimentReport::new(
        ReportMetadata {
            function: "cos-sum".to_string(),
            sweep: format!(
                "delta={delta}, n={}..{}, {} u-values",
                ns.first().expect("nonempty after validation"),
                ns.last().expect("nonempty after validation"),
                u_values.len()
            ),
            grid_n: u_values.len() as u32,
            timestamp: None,
        },
        rows,
    ))
}

/// Default 20-point `u` grid, midpoints of `(0.05, pi - 0.05)`.
pub fn default_u_grid() -> Vec<f64> {
    (0..20)
        .map(|k| 0.05 + (PI - 0.1) * (2.0 * f64::from(k) + 1.0) / 40.0)
        .collect()
}
