//! Dirichlet, Cesaro, and Abel-Poisson kernels on the hexagon.
//!
//! The Dirichlet kernel `D_n` sums the exponentials over `H_n` and has
//! a closed form through the cumulative kernel `Theta_n`, a quotient of
//! six sines. Cesaro kernels average Dirichlet kernels with binomial
//! weights; the Abel-Poisson kernel `P_r` weights rings geometrically
//! and collapses to a rational expression in cosines. All closed forms
//! degenerate on the lines where a sine denominator vanishes, and every
//! evaluator falls back to direct summation there, controlled by
//! [`SingularityPolicy`].

use crate::basis::{phi_phase, ring, HexIndex};
use crate::hexcoord::HomogeneousPoint;
use crate::{Error, Result};
use std::f64::consts::PI;

/// Cesaro summability order `delta > 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CesaroOrder {
    delta: f64,
}

impl CesaroOrder {
    /// Validates and wraps a summability order.
    pub fn new(delta: f64) -> Result<Self> {
        if !(delta > 0.0 && delta.is_finite()) {
            return Err(Error::invalid(
                "delta",
                format!("{delta} is not a positive finite order"),
            ));
        }
        Ok(Self { delta })
    }

    /// The order value.
    pub const fn delta(&self) -> f64 {
        self.delta
    }
}

/// Threshold below which a sine denominator counts as singular and
/// closed-form kernel evaluation falls back to direct summation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SingularityPolicy {
    /// Absolute lower bound demanded of each `|sin((ti - tj) pi / 3)|`.
    pub threshold: f64,
}

impl Default for SingularityPolicy {
    fn default() -> Self {
        Self { threshold: 1e-8 }
    }
}

/// Binomial coefficient `A_n^delta = C(n + delta, n)` evaluated as a
/// running product, for `delta > -1`.
///
/// # Examples
///
/// ```
/// use hexfourier::kernels::binom_a;
///
/// assert_eq!(binom_a(5, 0.0).unwrap(), 1.0);
/// assert_eq!(binom_a(5, 1.0).unwrap(), 6.0);
/// assert_eq!(binom_a(2, 0.5).unwrap(), 1.875);
/// ```
pub fn binom_a(n: u32, delta: f64) -> Result<f64> {
    if !(delta > -1.0 && delta.is_finite()) {
        return Err(Error::invalid(
            "delta",
            format!("{delta} is not a finite order above -1"),
        ));
    }
    Ok(binom_product(n, delta))
}

/// Unchecked `A_n^delta`; well defined for every `delta >= -1`.
pub(crate) fn binom_product(n: u32, delta: f64) -> f64 {
    let mut value = 1.0;
    for k in 1..=n {
        value *= (delta + f64::from(k)) / f64::from(k);
    }
    value
}

/// Sine arguments and values shared by the closed-form kernels at one
/// evaluation point.
#[derive(Clone, Copy)]
struct SineTriple {
    args: [f64; 3],
    sines: [f64; 3],
    min_abs: f64,
}

impl SineTriple {
    fn at(t: HomogeneousPoint) -> Self {
        let args = [
            (t.t1() - t.t2()) * PI / 3.0,
            (t.t2() - t.t3()) * PI / 3.0,
            (t.t3() - t.t1()) * PI / 3.0,
        ];
        let sines = [args[0].sin(), args[1].sin(), args[2].sin()];
        let min_abs = sines[0].abs().min(sines[1].abs()).min(sines[2].abs());
        Self {
            args,
            sines,
            min_abs,
        }
    }

    fn is_singular(&self, policy: SingularityPolicy) -> bool {
        self.min_abs.is_nan() || self.min_abs < policy.threshold
    }

    /// Closed-form `Theta_n` from the shared denominators.
    fn theta(&self, n: i64) -> f64 {
        let m = (n + 1) as f64;
        let numerator =
            (m * self.args[0]).sin() * (m * self.args[1]).sin() * (m * self.args[2]).sin();
        numerator / (self.sines[0] * self.sines[1] * self.sines[2])
    }
}

/// Dirichlet kernel by direct summation over `H_n`.
///
/// The index set is symmetric under negation, so the imaginary parts
/// cancel and the sum reduces to cosines.
///
/// # Examples
///
/// ```
/// use hexfourier::hexcoord::HomogeneousPoint;
/// use hexfourier::kernels::dirichlet_direct;
///
/// let origin = HomogeneousPoint::new(0.0, 0.0);
/// assert_eq!(dirichlet_direct(3, origin), 37.0);
/// ```
pub fn dirichlet_direct(n: u32, t: HomogeneousPoint) -> f64 {
    let value = weighted_direct_sum(n, t, |_| 1.0);
    #[cfg(debug_assertions)]
    {
        let imag = weighted_direct_sum_imag(n, t, |_| 1.0);
        debug_assert!(imag.abs() < 1e-9, "imaginary residue {imag:e}");
    }
    value
}

/// Sums `weight(degree(j)) * cos(phase_j(t))` over `H_n`.
fn weighted_direct_sum(n: u32, t: HomogeneousPoint, weight: impl Fn(u32) -> f64) -> f64 {
    let n_i = n as i32;
    let mut total = 0.0;
    for j1 in -n_i..=n_i {
        let lo = (-n_i).max(-n_i - j1);
        let hi = n_i.min(n_i - j1);
        for j2 in lo..=hi {
            let j = HexIndex::new(j1, j2);
            total += weight(j.degree()) * phi_phase(j, t).cos();
        }
    }
    total
}

#[cfg(debug_assertions)]
fn weighted_direct_sum_imag(n: u32, t: HomogeneousPoint, weight: impl Fn(u32) -> f64) -> f64 {
    let n_i = n as i32;
    let mut total = 0.0;
    for j1 in -n_i..=n_i {
        let lo = (-n_i).max(-n_i - j1);
        let hi = n_i.min(n_i - j1);
        for j2 in lo..=hi {
            let j = HexIndex::new(j1, j2);
            total += weight(j.degree()) * phi_phase(j, t).sin();
        }
    }
    total
}

/// Cumulative kernel `Theta_n = D_0 + ... + D_n`, with `Theta_n = 0`
/// for `n < 0`.
///
/// Away from the singular lines the six-sine closed form is used; on
/// them the telescoped direct sum
/// `sum over H_n of (n + 1 - degree(j)) phi_j(t)` takes over.
///
/// # Examples
///
/// ```
/// use hexfourier::hexcoord::HomogeneousPoint;
/// use hexfourier::kernels::{theta, SingularityPolicy};
///
/// let origin = HomogeneousPoint::new(0.0, 0.0);
/// assert_eq!(theta(2, origin, SingularityPolicy::default()), 27.0);
/// assert_eq!(theta(-1, origin, SingularityPolicy::default()), 0.0);
/// ```
pub fn theta(n: i64, t: HomogeneousPoint, policy: SingularityPolicy) -> f64 {
    if n < 0 {
        return 0.0;
    }
    let triple = SineTriple::at(t);
    if triple.is_singular(policy) {
        theta_direct(n as u32, t)
    } else {
        triple.theta(n)
    }
}

fn theta_direct(n: u32, t: HomogeneousPoint) -> f64 {
    let top = f64::from(n) + 1.0;
    weighted_direct_sum(n, t, |degree| top - f64::from(degree))
}

/// Dirichlet kernel `D_n = Theta_n - Theta_(n-1)`, falling back to
/// [`dirichlet_direct`] near the singular lines.
///
/// # Examples
///
/// ```
/// use hexfourier::hexcoord::HomogeneousPoint;
/// use hexfourier::kernels::{dirichlet, SingularityPolicy};
///
/// let origin = HomogeneousPoint::new(0.0, 0.0);
/// assert_eq!(dirichlet(3, origin, SingularityPolicy::default()), 37.0);
/// ```
pub fn dirichlet(n: u32, t: HomogeneousPoint, policy: SingularityPolicy) -> f64 {
    let triple = SineTriple::at(t);
    if triple.is_singular(policy) {
        dirichlet_direct(n, t)
    } else {
        triple.theta(i64::from(n)) - triple.theta(i64::from(n) - 1)
    }
}

/// Cesaro kernel `K_n^delta` with weights precomputed for one `(n, delta)`.
///
/// Evaluation telescopes the defining sum
/// `(1 / A_n^delta) sum_k A_(n-k)^(delta-1) D_k` into a weighted sum of
/// cumulative kernels, which costs `O(n)` sines per point. On singular
/// lines it switches to the exchanged summation
/// `sum over H_n of (A_(n-deg)^delta / A_n^delta) phi_j(t)`.
#[derive(Clone, Debug)]
pub struct CesaroKernel {
    n: u32,
    /// Coefficient of `Theta_k` in the telescoped sum, divided by `A_n^delta`.
    theta_coeffs: Vec<f64>,
    /// Ring weight `A_(n-m)^delta / A_n^delta` for the exchanged sum.
    ring_weights: Vec<f64>,
}

impl CesaroKernel {
    /// Precomputes the weight tables for `K_n^delta`.
    pub fn new(n: u32, order: CesaroOrder) -> Self {
        let delta = order.delta();
        let size = n as usize + 1;
        // lower[m] = A_m^(delta-1), upper[m] = A_m^delta.
        let mut lower = Vec::with_capacity(size);
        let mut upper = Vec::with_capacity(size);
        let mut low = 1.0;
        let mut up = 1.0;
        for m in 0..=n {
            if m > 0 {
                low *= (delta - 1.0 + f64::from(m)) / f64::from(m);
                up *= (delta + f64::from(m)) / f64::from(m);
            }
            lower.push(low);
            upper.push(up);
        }
        let normalizer = upper[n as usize];
        let theta_coeffs = (0..=n as usize)
            .map(|k| {
                let m = n as usize - k;
                let previous = if m == 0 { 0.0 } else { lower[m - 1] };
                (lower[m] - previous) / normalizer
            })
            .collect();
        let ring_weights = (0..=n as usize)
            .map(|m| upper[n as usize - m] / normalizer)
            .collect();
        Self {
            n,
            theta_coeffs,
            ring_weights,
        }
    }

    /// Kernel degree `n`.
    pub const fn n(&self) -> u32 {
        self.n
    }

    /// Evaluates `K_n^delta(t)`.
    pub fn eval(&self, t: HomogeneousPoint, policy: SingularityPolicy) -> f64 {
        let triple = SineTriple::at(t);
        if triple.is_singular(policy) {
            return weighted_direct_sum(self.n, t, |degree| self.ring_weights[degree as usize]);
        }
        let mut total = 0.0;
        for (k, coeff) in self.theta_coeffs.iter().enumerate() {
            if *coeff != 0.0 {
                total += coeff * triple.theta(k as i64);
            }
        }
        total
    }
}

/// Cesaro kernel `K_n^delta(t)`; see [`CesaroKernel`] for the method.
///
/// # Examples
///
/// ```
/// use hexfourier::hexcoord::HomogeneousPoint;
/// use hexfourier::kernels::{cesaro_kernel, CesaroOrder, SingularityPolicy};
///
/// let origin = HomogeneousPoint::new(0.0, 0.0);
/// let order = CesaroOrder::new(1.0).unwrap();
/// let k1 = cesaro_kernel(1, order, origin, SingularityPolicy::default());
/// assert!((k1 - 4.0).abs() < 1e-12);
/// ```
pub fn cesaro_kernel(
    n: u32,
    order: CesaroOrder,
    t: HomogeneousPoint,
    policy: SingularityPolicy,
) -> f64 {
    CesaroKernel::new(n, order).eval(t, policy)
}

/// Normalized absolute cosine sum
/// `|sum_k A_(n-k)^(delta-1) cos((2k+1) u)| / A_n^delta` for
/// `u` strictly inside `(0, pi)`.
pub fn cesaro_cos_sum(n: u32, order: CesaroOrder, u: f64) -> Result<f64> {
    if !(u > 0.0 && u < PI) {
        return Err(Error::invalid(
            "u",
            format!("{u} is outside the open interval (0, pi)"),
        ));
    }
    let delta = order.delta();
    let mut sum = 0.0;
    for k in 0..=n {
        let weight = binom_product(n - k, delta - 1.0);
        sum += weight * ((2.0 * f64::from(k) + 1.0) * u).cos();
    }
    Ok(sum.abs() / binom_product(n, delta))
}

fn validate_r(r: f64) -> Result<()> {
    if !(0.0..1.0).contains(&r) {
        return Err(Error::invalid(
            "r",
            format!("{r} is outside the half-open interval [0, 1)"),
        ));
    }
    Ok(())
}

/// Denominator `q_r(x) = 1 - 2 r cos x + r^2`, evaluated in the
/// cancellation-free form `(1 - r)^2 + 4 r sin^2(x / 2)`.
///
/// # Examples
///
/// ```
/// use hexfourier::kernels::q;
///
/// assert_eq!(q(0.5, 0.0).unwrap(), 0.25);
/// ```
pub fn q(r: f64, x: f64) -> Result<f64> {
    validate_r(r)?;
    Ok(q_raw(r, x))
}

fn q_raw(r: f64, x: f64) -> f64 {
    let s = (x / 2.0).sin();
    (1.0 - r) * (1.0 - r) + 4.0 * r * s * s
}

/// One-dimensional Poisson kernel `p_r(x) = (1 - r^2) / q_r(x)`.
///
/// # Examples
///
/// ```
/// use hexfourier::kernels::classical_poisson;
///
/// let value = classical_poisson(0.5, std::f64::consts::PI).unwrap();
/// assert!((value - 1.0 / 3.0).abs() < 1e-15);
/// ```
pub fn classical_poisson(r: f64, x: f64) -> Result<f64> {
    validate_r(r)?;
    Ok((1.0 - r * r) / q_raw(r, x))
}

/// Abel-Poisson kernel `P_r(t)` in closed form.
///
/// # Examples
///
/// ```
/// use hexfourier::hexcoord::HomogeneousPoint;
/// use hexfourier::kernels::poisson_compact;
///
/// let origin = HomogeneousPoint::new(0.0, 0.0);
/// assert_eq!(poisson_compact(0.0, origin).unwrap(), 1.0);
/// assert!((poisson_compact(0.5, origin).unwrap() - 13.0).abs() < 1e-12);
/// ```
pub fn poisson_compact(r: f64, t: HomogeneousPoint) -> Result<f64> {
    validate_r(r)?;
    let scale = 2.0 * PI / 3.0;
    let q12 = q_raw(r, scale * (t.t1() - t.t2()));
    let q23 = q_raw(r, scale * (t.t2() - t.t3()));
    let q31 = q_raw(r, scale * (t.t3() - t.t1()));
    let one = 1.0 - r;
    let head = one.powi(3) * (1.0 - r.powi(3)) / (q12 * q23 * q31);
    let pair = r * one * one;
    Ok(head + pair * (1.0 / (q12 * q23) + 1.0 / (q23 * q31) + 1.0 / (q31 * q12)))
}

/// Abel-Poisson kernel by ring summation,
/// `P_r(t) = sum_k r^k sum over J_k of phi_j(t)`, truncated at the
/// first `K` whose geometric tail bound `6 K r^K / (1 - r)` drops
/// below `tol`.
///
/// # Examples
///
/// ```
/// use hexfourier::hexcoord::HomogeneousPoint;
/// use hexfourier::kernels::poisson_series;
///
/// let origin = HomogeneousPoint::new(0.0, 0.0);
/// let value = poisson_series(0.5, origin, 1e-12).unwrap();
/// assert!((value - 13.0).abs() < 1e-9);
/// ```
pub fn poisson_series(r: f64, t: HomogeneousPoint, tol: f64) -> Result<f64> {
    validate_r(r)?;
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::invalid("tol", format!("{tol} is not positive")));
    }
    let mut total = 0.0;
    let mut power = 1.0;
    let mut k = 0u32;
    loop {
        let ring_sum: f64 = ring(k).iter().map(|&j| phi_phase(j, t).cos()).sum();
        total += power * ring_sum;
        k += 1;
        power *= r;
        if 6.0 * f64::from(k) * power / (1.0 - r) < tol {
            return Ok(total);
        }
    }
}
