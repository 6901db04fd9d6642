//! Summability means built from hexagonal Fourier coefficients.
//!
//! A [`CoefficientTable`] stores the coefficients of a function over
//! `H_n`. Partial sums, Cesaro means, and Abel-Poisson means are all
//! multiplier operators on it: each scales the ring of degree `m` by a
//! factor depending only on `m`, so batch evaluation reduces to per-ring
//! sums via [`RingEvaluations`]. Every mean also has a convolution form
//! against the matching kernel, used to cross-check the spectral path.

use crate::basis::{enumerate_hn, phi, HexIndex};
use crate::hexcoord::HomogeneousPoint;
use crate::kernels::{
    binom_product, dirichlet, poisson_compact, CesaroKernel, CesaroOrder, SingularityPolicy,
};
use crate::quadrature::{GridFunction, HexGrid};
use crate::{Error, Result};
use num_complex::Complex64;
use std::collections::BTreeMap;

/// Complete table of Fourier coefficients over `H_n`.
#[derive(Clone, Debug, PartialEq)]
pub struct CoefficientTable {
    n_max: u32,
    entries: BTreeMap<HexIndex, Complex64>,
}

impl CoefficientTable {
    /// Computes all coefficients of degree at most `n_max` from grid
    /// samples.
    ///
    /// The double sum over nodes factorizes through partial sums along
    /// `k2`, which brings the cost down to
    /// `O(3 N^2 degrees + |H_n| N)` without any fast transform.
    /// Aliasing follows the same rule as [`fourier_coeff`]: refinement
    /// `N >= 2 n_max + 2` is always safe for band-limited samples.
    pub fn compute(g: &GridFunction, n_max: u32) -> Self {
        let grid = g.grid();
        let table = grid.conjugate_phase_table();
        let modulus = table.len() as i64;
        let rows = 2 * grid.refinement() as usize;
        let width = 4 * n_max as usize + 1;
        let offset = 2 * i64::from(n_max);

        // Stage 1: partial sums along k2 for every second exponent b.
        let mut partial = vec![Complex64::new(0.0, 0.0); rows * width];
        for (&value, &(k1, k2)) in g.values().iter().zip(grid.index_pairs()) {
            let row = (i64::from(k1) + i64::from(grid.refinement())) as usize;
            let base = row * width;
            for bi in 0..width {
                let b = bi as i64 - offset;
                let e = (b * i64::from(k2)).rem_euclid(modulus);
                partial[base + bi] += value * table[e as usize];
            }
        }

        // Stage 2: contract along k1 for every index in H_n.
        let scale = 1.0 / g.values().len() as f64;
        let mut entries = BTreeMap::new();
        for &j in enumerate_hn(n_max).members() {
            let a = i64::from(j.j1() - j.j3());
            let b = i64::from(j.j2() - j.j3());
            let bi = (b + offset) as usize;
            let mut sum = Complex64::new(0.0, 0.0);
            for row in 0..rows {
                let k1 = row as i64 - i64::from(grid.refinement());
                let e = (a * k1).rem_euclid(modulus);
                sum += table[e as usize] * partial[row * width + bi];
            }
            entries.insert(j, sum * scale);
        }
        Self { n_max, entries }
    }

    /// Builds a table from explicit entries; missing indices are zero.
    pub fn from_entries<I>(n_max: u32, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (HexIndex, Complex64)>,
    {
        let mut map = BTreeMap::new();
        for (j, c) in entries {
            if j.degree() > n_max {
                return Err(Error::DegreeOutOfRange {
                    requested: j.degree(),
                    available: n_max,
                });
            }
            map.insert(j, c);
        }
        Ok(Self {
            n_max,
            entries: map,
        })
    }

    /// Largest degree covered by the table.
    pub const fn n_max(&self) -> u32 {
        self.n_max
    }

    /// Coefficient at `j`, zero when absent.
    pub fn get(&self, j: HexIndex) -> Complex64 {
        self.entries
            .get(&j)
            .copied()
            .unwrap_or(Complex64::new(0.0, 0.0))
    }

    /// All stored entries in index order.
    pub fn entries(&self) -> &BTreeMap<HexIndex, Complex64> {
        &self.entries
    }

    /// Largest coefficient magnitude; zero for an empty table.
    pub fn max_abs(&self) -> f64 {
        self.entries.values().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Per-ring sums `R_m(t) = sum over J_m of c_j phi_j(t)` for
    /// `m = 0..=n_max` at a single point.
    pub fn ring_sums_at(&self, t: HomogeneousPoint) -> Vec<Complex64> {
        let mut sums = vec![Complex64::new(0.0, 0.0); self.n_max as usize + 1];
        for (&j, &c) in &self.entries {
            sums[j.degree() as usize] += c * phi(j, t);
        }
        sums
    }

    /// Per-ring sums at every node of `grid`, evaluated with exact
    /// grid phases.
    pub fn ring_sums_on_grid(&self, grid: &HexGrid) -> RingEvaluations {
        let table = grid.conjugate_phase_table();
        let modulus = table.len() as i64;
        // Flat copies of the entries keep the inner loop sequential.
        let count = self.entries.len();
        let mut exps_a = Vec::with_capacity(count);
        let mut exps_b = Vec::with_capacity(count);
        let mut degrees = Vec::with_capacity(count);
        let mut coeffs = Vec::with_capacity(count);
        for (&j, &c) in &self.entries {
            exps_a.push(i64::from(j.j1() - j.j3()));
            exps_b.push(i64::from(j.j2() - j.j3()));
            degrees.push(j.degree() as usize);
            coeffs.push(c);
        }
        let rings = self.n_max as usize + 1;
        let mut per_point = Vec::with_capacity(grid.node_count());
        for &(k1, k2) in grid.index_pairs() {
            let mut sums = vec![Complex64::new(0.0, 0.0); rings];
            for i in 0..count {
                // Grid phases are conjugated in the table; negate to
                // evaluate phi itself.
                let e =
                    (-(exps_a[i] * i64::from(k1) + exps_b[i] * i64::from(k2))).rem_euclid(modulus);
                sums[degrees[i]] += coeffs[i] * table[e as usize];
            }
            per_point.push(sums);
        }
        RingEvaluations { per_point }
    }
}

/// Ring sums of one coefficient table at a fixed point set.
#[derive(Clone, Debug)]
pub struct RingEvaluations {
    per_point: Vec<Vec<Complex64>>,
}

impl RingEvaluations {
    /// Number of evaluation points.
    pub fn point_count(&self) -> usize {
        self.per_point.len()
    }

    /// Number of rings held per point.
    pub fn ring_count(&self) -> usize {
        self.per_point.first().map_or(0, Vec::len)
    }

    /// Applies a ring multiplier sequence: value at each point is
    /// `sum_m multipliers[m] * R_m`.
    pub fn combine(&self, multipliers: &[f64]) -> Vec<Complex64> {
        assert!(
            multipliers.len() <= self.ring_count(),
            "{} multipliers for {} rings",
            multipliers.len(),
            self.ring_count()
        );
        self.per_point
            .iter()
            .map(|sums| multipliers.iter().zip(sums).map(|(&m, &s)| m * s).sum())
            .collect()
    }
}

/// Partial sum `S_n(f)(t)` from a coefficient table.
///
/// # Examples
///
/// ```
/// use hexfourier::basis::HexIndex;
/// use hexfourier::hexcoord::HomogeneousPoint;
/// use hexfourier::means::{partial_sum, CoefficientTable};
/// use num_complex::Complex64;
///
/// let one = Complex64::new(1.0, 0.0);
/// let table = CoefficientTable::from_entries(2, [(HexIndex::new(1, 0), one)]).unwrap();
/// let t = HomogeneousPoint::new(0.3, 0.1);
/// // Degree 0 truncates the only frequency away.
/// assert_eq!(partial_sum(&table, 0, t).unwrap(), Complex64::new(0.0, 0.0));
/// ```
pub fn partial_sum(table: &CoefficientTable, n: u32, t: HomogeneousPoint) -> Result<Complex64> {
    check_degree(table, n)?;
    let mut sum = Complex64::new(0.0, 0.0);
    for (&j, &c) in table.entries() {
        if j.degree() <= n {
            sum += c * phi(j, t);
        }
    }
    Ok(sum)
}

/// Partial sum by convolution with the Dirichlet kernel,
/// `mean over u of f(u) D_n(t - u)`.
pub fn partial_sum_conv(
    f: &GridFunction,
    n: u32,
    t: HomogeneousPoint,
    policy: SingularityPolicy,
) -> Complex64 {
    let mut sum = Complex64::new(0.0, 0.0);
    for (&value, &u) in f.values().iter().zip(f.grid().nodes()) {
        sum += value * dirichlet(n, t - u, policy);
    }
    sum / f.values().len() as f64
}

/// Cesaro multiplier `A_(n-k)^delta / A_n^delta` applied to ring `k`
/// by the mean `S_n^delta`.
///
/// # Examples
///
/// ```
/// use hexfourier::kernels::CesaroOrder;
/// use hexfourier::means::cesaro_multiplier;
///
/// let order = CesaroOrder::new(1.0).unwrap();
/// assert_eq!(cesaro_multiplier(3, order, 0).unwrap(), 1.0);
/// assert_eq!(cesaro_multiplier(3, order, 1).unwrap(), 0.75);
/// ```
pub fn cesaro_multiplier(n: u32, order: CesaroOrder, k: u32) -> Result<f64> {
    if k > n {
        return Err(Error::invalid(
            "k",
            format!("ring {k} exceeds mean degree {n}"),
        ));
    }
    Ok(binom_product(n - k, order.delta()) / binom_product(n, order.delta()))
}

/// Cesaro mean `S_n^delta(f)(t)` from a coefficient table.
pub fn cesaro_mean(
    table: &CoefficientTable,
    n: u32,
    order: CesaroOrder,
    t: HomogeneousPoint,
) -> Result<Complex64> {
    check_degree(table, n)?;
    let multipliers = cesaro_multipliers(n, order);
    let mut sum = Complex64::new(0.0, 0.0);
    for (&j, &c) in table.entries() {
        let degree = j.degree();
        if degree <= n {
            sum += multipliers[degree as usize] * c * phi(j, t);
        }
    }
    Ok(sum)
}

/// All multipliers of `S_n^delta`, indexed by ring.
pub fn cesaro_multipliers(n: u32, order: CesaroOrder) -> Vec<f64> {
    let normalizer = binom_product(n, order.delta());
    (0..=n)
        .map(|k| binom_product(n - k, order.delta()) / normalizer)
        .collect()
}

/// Cesaro mean by convolution with `K_n^delta`.
pub fn cesaro_mean_conv(
    f: &GridFunction,
    n: u32,
    order: CesaroOrder,
    t: HomogeneousPoint,
    policy: SingularityPolicy,
) -> Complex64 {
    let kernel = CesaroKernel::new(n, order);
    let mut sum = Complex64::new(0.0, 0.0);
    for (&value, &u) in f.values().iter().zip(f.grid().nodes()) {
        sum += value * kernel.eval(t - u, policy);
    }
    sum / f.values().len() as f64
}

/// Abel-Poisson mean `U_r(f)(t)` from a coefficient table.
///
/// Rings are summed in increasing degree and truncated at the first
/// `K` where the tail bound
/// `max|coefficient| * 6 K r^K / (1 - r)` drops below `tol`; the table
/// degree caps the sum in any case.
pub fn abel_poisson(
    table: &CoefficientTable,
    r: f64,
    t: HomogeneousPoint,
    tol: f64,
) -> Result<Complex64> {
    if !(0.0..1.0).contains(&r) {
        return Err(Error::invalid(
            "r",
            format!("{r} is outside the half-open interval [0, 1)"),
        ));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::invalid("tol", format!("{tol} is not positive")));
    }
    let scale = table.max_abs();
    let rings = table.ring_sums_at(t);
    let mut sum = Complex64::new(0.0, 0.0);
    let mut power = 1.0;
    for (k, &ring_sum) in rings.iter().enumerate() {
        if k > 0 && scale * 6.0 * k as f64 * power / (1.0 - r) < tol {
            break;
        }
        sum += power * ring_sum;
        power *= r;
    }
    Ok(sum)
}

/// Abel-Poisson mean by convolution with the closed-form kernel.
pub fn abel_poisson_conv(f: &GridFunction, r: f64, t: HomogeneousPoint) -> Result<Complex64> {
    let mut sum = Complex64::new(0.0, 0.0);
    for (&value, &u) in f.values().iter().zip(f.grid().nodes()) {
        sum += value * poisson_compact(r, t - u)?;
    }
    Ok(sum / f.values().len() as f64)
}

/// Evaluates both sides of the order-lowering identity
/// `S_n^delta(f) = (1 / A_n^delta) sum_k A_(n-k)^(delta-2) A_k^1 S_k^1(f)`
/// for `delta >= 1`, returning `(direct, recombined)`.
pub fn ulyanov_identity_check(
    table: &CoefficientTable,
    n: u32,
    delta: f64,
    t: HomogeneousPoint,
) -> Result<(Complex64, Complex64)> {
    if !(delta >= 1.0 && delta.is_finite()) {
        return Err(Error::invalid(
            "delta",
            format!("{delta} is below the identity's range delta >= 1"),
        ));
    }
    let order = CesaroOrder::new(delta)?;
    let order_one = CesaroOrder::new(1.0)?;
    let lhs = cesaro_mean(table, n, order, t)?;
    let mut rhs = Complex64::new(0.0, 0.0);
    for k in 0..=n {
        let weight = binom_product(n - k, delta - 2.0) * binom_product(k, 1.0);
        if weight != 0.0 {
            rhs += weight * cesaro_mean(table, k, order_one, t)?;
        }
    }
    rhs /= binom_product(n, delta);
    Ok((lhs, rhs))
}

fn check_degree(table: &CoefficientTable, n: u32) -> Result<()> {
    if n > table.n_max() {
        return Err(Error::DegreeOutOfRange {
            requested: n,
            available: table.n_max(),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::fourier_coeff;
    use proptest::prelude::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    const POLICY: SingularityPolicy = SingularityPolicy { threshold: 1e-8 };

    fn pt(t1: f64, t2: f64) -> HomogeneousPoint {
        HomogeneousPoint::new(t1, t2)
    }

    fn unit_table(j: HexIndex, n_max: u32) -> CoefficientTable {
        CoefficientTable::from_entries(n_max, [(j, Complex64::new(1.0, 0.0))]).unwrap()
    }

    fn random_table(rng: &mut ChaCha8Rng, n_max: u32) -> CoefficientTable {
        let entries: Vec<_> = enumerate_hn(n_max)
            .members()
            .iter()
            .map(|&j| {
                (
                    j,
                    Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)),
                )
            })
            .collect();
        CoefficientTable::from_entries(n_max, entries).unwrap()
    }

    #[test]
    fn compute_matches_node_by_node_coefficients() {
        let grid = HexGrid::build(10).unwrap();
        let g = grid.sample(|t| Complex64::new((t.t1() * 2.1).sin() + t.t2(), t.t3() * 0.5));
        let table = CoefficientTable::compute(&g, 4);
        for &j in enumerate_hn(4).members() {
            let direct = fourier_coeff(&g, j);
            assert!(
                (table.get(j) - direct).norm() < 1e-12,
                "factorized coefficient at {j:?} deviates"
            );
        }
    }

    #[test]
    fn partial_sum_is_spectral_projection() {
        let j = HexIndex::new(2, -1);
        let table = unit_table(j, 5);
        let t = pt(0.37, -0.21);
        for n in 0..=5u32 {
            let expected = if n >= 2 {
                phi(j, t)
            } else {
                Complex64::new(0.0, 0.0)
            };
            assert!((partial_sum(&table, n, t).unwrap() - expected).norm() < 1e-14);
        }
        assert!(partial_sum(&table, 6, t).is_err());
    }

    #[test]
    fn multiplier_hand_values_and_monotonicity() {
        let one = CesaroOrder::new(1.0).unwrap();
        for n in 0..=12u32 {
            for k in 0..=n {
                let value = cesaro_multiplier(n, one, k).unwrap();
                let expected = f64::from(n - k + 1) / f64::from(n + 1);
                assert!((value - expected).abs() < 1e-14);
            }
        }
        for &delta in &[0.4, 1.0, 2.5] {
            let order = CesaroOrder::new(delta).unwrap();
            assert_eq!(cesaro_multiplier(7, order, 0).unwrap(), 1.0);
            let values = cesaro_multipliers(7, order);
            for pair in values.windows(2) {
                assert!(pair[1] < pair[0], "multipliers not decreasing: {values:?}");
            }
            assert!(cesaro_multiplier(7, order, 8).is_err());
        }
    }

    #[test]
    fn cesaro_mean_scales_eigenfunctions() {
        let j = HexIndex::new(1, 1);
        let table = unit_table(j, 6);
        let t = pt(-0.42, 0.11);
        for &delta in &[0.5, 1.0, 2.0] {
            let order = CesaroOrder::new(delta).unwrap();
            for n in 0..=6u32 {
                let value = cesaro_mean(&table, n, order, t).unwrap();
                let expected = if n >= 2 {
                    // Independent route: sum the defining weights ring
                    // by ring instead of using the closed multiplier.
                    let tail: f64 = (2..=n).map(|k| binom_product(n - k, delta - 1.0)).sum();
                    (tail / binom_product(n, delta)) * phi(j, t)
                } else {
                    Complex64::new(0.0, 0.0)
                };
                assert!(
                    (value - expected).norm() < 1e-12,
                    "degree {n}, delta {delta}: {value} vs {expected}"
                );
            }
        }
    }

    #[test]
    fn abel_poisson_scales_eigenfunctions() {
        let j = HexIndex::new(2, 0);
        let table = unit_table(j, 8);
        let t = pt(0.12, 0.55);
        for &r in &[0.0, 0.5, 0.9] {
            let value = abel_poisson(&table, r, t, 1e-14).unwrap();
            let expected = r.powi(2) * phi(j, t);
            assert!((value - expected).norm() < 1e-12);
        }
        assert!(abel_poisson(&table, 1.0, t, 1e-10).is_err());
        assert!(abel_poisson(&table, 0.5, t, 0.0).is_err());
    }

    #[test]
    fn ring_sums_recombine_into_partial_sums() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let table = random_table(&mut rng, 6);
        let grid = HexGrid::build(7).unwrap();
        let rings = table.ring_sums_on_grid(&grid);
        assert_eq!(rings.point_count(), grid.node_count());
        assert_eq!(rings.ring_count(), 7);
        for n in [0u32, 3, 6] {
            let values = rings.combine(&vec![1.0; n as usize + 1]);
            for (&node, value) in grid.nodes().iter().zip(&values) {
                let expected = partial_sum(&table, n, node).unwrap();
                assert!((value - expected).norm() < 1e-11);
            }
        }
    }

    #[test]
    fn ring_sums_at_arbitrary_points_match_grid_path() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let table = random_table(&mut rng, 5);
        let grid = HexGrid::build(3).unwrap();
        let on_grid = table.ring_sums_on_grid(&grid);
        for (i, &node) in grid.nodes().iter().enumerate() {
            let loose = table.ring_sums_at(node);
            for (m, &ring_value) in loose.iter().enumerate() {
                assert!((ring_value - on_grid.per_point[i][m]).norm() < 1e-11);
            }
        }
    }

    #[test]
    fn ulyanov_identity_holds_for_random_tables() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let table = random_table(&mut rng, 8);
        let points = [pt(0.31, -0.44), pt(0.0, 0.62)];
        for &delta in &[1.0, 1.5, 2.0] {
            for n in 0..=8u32 {
                for &t in &points {
                    let (lhs, rhs) = ulyanov_identity_check(&table, n, delta, t).unwrap();
                    assert!(
                        (lhs - rhs).norm() < 1e-10,
                        "identity gap at n={n}, delta={delta}: {}",
                        (lhs - rhs).norm()
                    );
                }
            }
        }
        assert!(ulyanov_identity_check(&table, 3, 0.8, pt(0.0, 0.0)).is_err());
    }

    #[test]
    fn real_samples_produce_real_partial_sums() {
        let grid = HexGrid::build(10).unwrap();
        let g =
            grid.sample_real(|t| (2.0 * PI_THIRD * (t.t1() - t.t2())).cos() + 0.3 * t.t2().sin());
        let table = CoefficientTable::compute(&g, 4);
        for &t in &[pt(0.2, 0.3), pt(-0.7, 0.1)] {
            for n in 0..=4u32 {
                let value = partial_sum(&table, n, t).unwrap();
                assert!(value.im.abs() < 1e-10, "imaginary leak {:e}", value.im);
            }
        }
    }

    const PI_THIRD: f64 = std::f64::consts::PI / 3.0;

    proptest! {
        #[test]
        fn means_are_linear(
            re1 in -2.0..2.0f64, im1 in -2.0..2.0f64,
            re2 in -2.0..2.0f64, im2 in -2.0..2.0f64,
            t1 in -1.0..1.0f64, t2 in -1.0..1.0f64,
        ) {
            let ja = HexIndex::new(1, 0);
            let jb = HexIndex::new(-2, 1);
            let ca = Complex64::new(re1, im1);
            let cb = Complex64::new(re2, im2);
            let combined =
                CoefficientTable::from_entries(4, [(ja, ca), (jb, cb)]).unwrap();
            let t = pt(t1, t2);
            let order = CesaroOrder::new(0.7).unwrap();

            let whole = cesaro_mean(&combined, 3, order, t).unwrap();
            let parts = ca * cesaro_mean(&unit_table(ja, 4), 3, order, t).unwrap()
                + cb * cesaro_mean(&unit_table(jb, 4), 3, order, t).unwrap();
            prop_assert!((whole - parts).norm() < 1e-11);

            let whole_u = abel_poisson(&combined, 0.6, t, 1e-13).unwrap();
            let parts_u = ca * abel_poisson(&unit_table(ja, 4), 0.6, t, 1e-13).unwrap()
                + cb * abel_poisson(&unit_table(jb, 4), 0.6, t, 1e-13).unwrap();
            prop_assert!((whole_u - parts_u).norm() < 1e-11);
        }

        #[test]
        fn constants_are_fixed_points(
            re in -2.0..2.0f64,
            t1 in -1.0..1.0f64, t2 in -1.0..1.0f64,
            n in 0u32..=6,
        ) {
            let c = Complex64::new(re, 0.0);
            let table = CoefficientTable::from_entries(6, [(HexIndex::new(0, 0), c)]).unwrap();
            let t = pt(t1, t2);
            let order = CesaroOrder::new(1.3).unwrap();
            prop_assert!((partial_sum(&table, n, t).unwrap() - c).norm() < 1e-13);
            prop_assert!((cesaro_mean(&table, n, order, t).unwrap() - c).norm() < 1e-13);
            prop_assert!((abel_poisson(&table, 0.8, t, 1e-13).unwrap() - c).norm() < 1e-13);
        }

        #[test]
        fn convolution_agrees_with_spectral_path(
            seed in 0u64..1000,
            t1 in -0.9..0.9f64, t2 in -0.9..0.9f64,
            n in 0u32..=4,
        ) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let table = random_table(&mut rng, 4);
            let grid = HexGrid::build(32).unwrap();
            let g = grid.sample(|u| {
                table
                    .entries()
                    .iter()
                    .map(|(&j, &c)| c * phi(j, u))
                    .sum()
            });
            let t = pt(t1, t2);

            let spectral = partial_sum(&table, n, t).unwrap();
            let convolved = partial_sum_conv(&g, n, t, POLICY);
            prop_assert!((spectral - convolved).norm() < 1e-8);

            let order = CesaroOrder::new(0.5).unwrap();
            let spectral_c = cesaro_mean(&table, n, order, t).unwrap();
            let convolved_c = cesaro_mean_conv(&g, n, order, t, POLICY);
            prop_assert!((spectral_c - convolved_c).norm() < 1e-8);

            let spectral_u = abel_poisson(&table, 0.7, t, 1e-12).unwrap();
            let convolved_u = abel_poisson_conv(&g, 0.7, t).unwrap();
            prop_assert!((spectral_u - convolved_u).norm() < 1e-6);
        }
    }
}
