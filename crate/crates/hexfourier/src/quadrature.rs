//! Equal-weight lattice quadrature on the fundamental hexagon.
//!
//! The rule of refinement `N` places nodes at `(k1, k2, -k1 - k2) / N`
//! for integer pairs with `-N <= k1 < N`, `-N <= k2 < N`,
//! `-N <= k1 + k2 < N`; there are exactly `3 N^2` of them and they tile
//! the half-open hexagon. Averaging over the nodes integrates every
//! basis exponential of low enough degree exactly, so normalized
//! integrals, Fourier coefficients, and kernel norms all reduce to
//! plain means. Aliasing first appears when a nonzero frequency lands
//! on `N` times the period lattice, whose shortest vector has degree
//! `2N`; the conservative working precondition `N >= 2n + 2` keeps
//! degree-`n` data comfortably inside the safe zone.

use crate::basis::HexIndex;
use crate::hexcoord::HomogeneousPoint;
use crate::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

/// Quadrature grid of refinement `N` with `3 N^2` nodes in the hexagon.
#[derive(Clone, Debug)]
pub struct HexGrid {
    n: u32,
    nodes: Vec<HomogeneousPoint>,
    pairs: Vec<(i32, i32)>,
}

impl HexGrid {
    /// Builds the grid of refinement `n >= 1`.
    ///
    /// # Examples
    ///
    /// ```
    /// use hexfourier::quadrature::HexGrid;
    ///
    /// let grid = HexGrid::build(4).unwrap();
    /// assert_eq!(grid.node_count(), 48);
    /// assert!(grid.nodes().iter().all(|t| t.in_omega()));
    /// ```
    pub fn build(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("grid refinement", "must be at least 1"));
        }
        let n_i = n as i32;
        let step = 1.0 / f64::from(n);
        let capacity = 3 * (n as usize) * (n as usize);
        let mut nodes = Vec::with_capacity(capacity);
        let mut pairs = Vec::with_capacity(capacity);
        for k1 in -n_i..n_i {
            let lo = (-n_i).max(-n_i - k1);
            let hi = (n_i - 1).min(n_i - 1 - k1);
            for k2 in lo..=hi {
                nodes.push(HomogeneousPoint::new(
                    f64::from(k1) * step,
                    f64::from(k2) * step,
                ));
                pairs.push((k1, k2));
            }
        }
        debug_assert_eq!(nodes.len(), capacity);
        Ok(Self { n, nodes, pairs })
    }

    /// Refinement parameter `N`.
    pub const fn refinement(&self) -> u32 {
        self.n
    }

    /// Nodes in lexicographic `(k1, k2)` order.
    pub fn nodes(&self) -> &[HomogeneousPoint] {
        &self.nodes
    }

    /// Integer index pairs `(k1, k2)` of the nodes, in node order.
    pub fn index_pairs(&self) -> &[(i32, i32)] {
        &self.pairs
    }

    /// Number of nodes, `3 N^2`.
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Samples a complex-valued function at every node.
    pub fn sample<F>(&self, f: F) -> GridFunction<'_>
    where
        F: Fn(HomogeneousPoint) -> Complex64,
    {
        let values = self.nodes.iter().map(|&t| f(t)).collect();
        GridFunction { grid: self, values }
    }

    /// Samples a real-valued function at every node.
    pub fn sample_real<F>(&self, f: F) -> GridFunction<'_>
    where
        F: Fn(HomogeneousPoint) -> f64,
    {
        self.sample(|t| Complex64::new(f(t), 0.0))
    }

    /// Samples a fallible function, reporting the first failing node.
    pub fn try_sample<F>(&self, f: F) -> Result<GridFunction<'_>>
    where
        F: Fn(HomogeneousPoint) -> std::result::Result<Complex64, String>,
    {
        let mut values = Vec::with_capacity(self.nodes.len());
        for (index, &t) in self.nodes.iter().enumerate() {
            match f(t) {
                Ok(value) => values.push(value),
                Err(message) => return Err(Error::SampleFailure { index, message }),
            }
        }
        Ok(GridFunction { grid: self, values })
    }

    /// Wraps externally computed node values; the length must match.
    pub fn function_from_values(&self, values: Vec<Complex64>) -> Result<GridFunction<'_>> {
        if values.len() != self.nodes.len() {
            return Err(Error::invalid(
                "values",
                format!("{} values for {} nodes", values.len(), self.nodes.len()),
            ));
        }
        Ok(GridFunction { grid: self, values })
    }

    /// Phase table `exp(-2 pi i m / (3N))` for `m = 0..3N`, the basis of
    /// exact exponential evaluation at grid nodes.
    pub(crate) fn conjugate_phase_table(&self) -> Vec<Complex64> {
        let modulus = 3 * self.n as usize;
        (0..modulus)
            .map(|m| Complex64::cis(-2.0 * PI * m as f64 / modulus as f64))
            .collect()
    }
}

/// Function samples bound to the grid they were taken on.
#[derive(Clone, Debug)]
pub struct GridFunction<'g> {
    grid: &'g HexGrid,
    values: Vec<Complex64>,
}

impl GridFunction<'_> {
    /// The underlying grid.
    pub fn grid(&self) -> &HexGrid {
        self.grid
    }

    /// Sampled values in node order.
    pub fn values(&self) -> &[Complex64] {
        &self.values
    }
}

/// Normalized integral over the hexagon: the plain mean of the node
/// values, summed in node order.
///
/// # Examples
///
/// ```
/// use hexfourier::quadrature::{mean_integral, HexGrid};
/// use num_complex::Complex64;
///
/// let grid = HexGrid::build(8).unwrap();
/// let ones = grid.sample(|_| Complex64::new(1.0, 0.0));
/// assert_eq!(mean_integral(&ones).re, 1.0);
/// ```
pub fn mean_integral(g: &GridFunction) -> Complex64 {
    let sum: Complex64 = g.values.iter().sum();
    sum / g.values.len() as f64
}

/// Fourier coefficient `mean of f * conj(phi_j)` on the grid.
///
/// Exact for band-limited samples when no difference frequency aliases
/// onto `N` times the period lattice; `N >= 2n + 2` is always safe for
/// data of degree `n`.
pub fn fourier_coeff(g: &GridFunction, j: HexIndex) -> Complex64 {
    let grid = g.grid();
    let table = grid.conjugate_phase_table();
    let modulus = table.len() as i64;
    let a = i64::from(j.j1() - j.j3());
    let b = i64::from(j.j2() - j.j3());
    let mut sum = Complex64::new(0.0, 0.0);
    for (&value, &(k1, k2)) in g.values().iter().zip(grid.index_pairs()) {
        let e = (a * i64::from(k1) + b * i64::from(k2)).rem_euclid(modulus);
        sum += value * table[e as usize];
    }
    sum / g.values().len() as f64
}
