//! Hexagonal frequency indices and the exponential basis.
//!
//! Frequencies are sum-zero integer triples `j = (j1, j2, j3)`. The
//! degree-`n` index set `H_n` collects the triples with all components
//! in `[-n, n]`; it has `3n^2 + 3n + 1` elements and splits into rings
//! of constant degree. Each index carries the exponential
//! `phi_j(t) = exp((2 pi i / 3) (j1 t1 + j2 t2 + j3 t3))`, which is
//! periodic with respect to the hexagon's translation lattice.

use crate::hexcoord::HomogeneousPoint;
use num_complex::Complex64;
use std::f64::consts::PI;
use std::ops::Neg;

/// Sum-zero integer frequency triple.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HexIndex {
    j1: i32,
    j2: i32,
    j3: i32,
}

impl HexIndex {
    /// Creates an index from its first two components; `j3` is derived.
    pub const fn new(j1: i32, j2: i32) -> Self {
        Self {
            j1,
            j2,
            j3: -j1 - j2,
        }
    }

    /// Creates an index from all three components, rejecting triples
    /// that do not sum to zero.
    pub fn from_components(j1: i32, j2: i32, j3: i32) -> crate::Result<Self> {
        if j1 + j2 + j3 != 0 {
            return Err(crate::Error::invalid(
                "index",
                format!("({j1}, {j2}, {j3}) does not sum to zero"),
            ));
        }
        Ok(Self::new(j1, j2))
    }

    /// First component.
    pub const fn j1(&self) -> i32 {
        self.j1
    }

    /// Second component.
    pub const fn j2(&self) -> i32 {
        self.j2
    }

    /// Third component, `-j1 - j2`.
    pub const fn j3(&self) -> i32 {
        self.j3
    }

    /// Degree `max(|j1|, |j2|, |j3|)`; the ring number of the index.
    ///
    /// # Examples
    ///
    /// ```
    /// use hexfourier::basis::HexIndex;
    ///
    /// assert_eq!(HexIndex::new(0, 0).degree(), 0);
    /// assert_eq!(HexIndex::new(1, 0).degree(), 1);
    /// assert_eq!(HexIndex::new(2, -1).degree(), 2);
    /// ```
    pub const fn degree(&self) -> u32 {
        let a = self.j1.unsigned_abs();
        let b = self.j2.unsigned_abs();
        let c = self.j3.unsigned_abs();
        let ab = if a > b { a } else { b };
        if ab > c {
            ab
        } else {
            c
        }
    }

    /// Cyclic rotation `(j1, j2, j3) -> (j2, j3, j1)`; a symmetry of
    /// every index set.
    pub const fn rotate(&self) -> Self {
        Self {
            j1: self.j2,
            j2: self.j3,
            j3: self.j1,
        }
    }
}

impl Neg for HexIndex {
    type Output = Self;

    fn neg(self) -> Self {
        Self::new(-self.j1, -self.j2)
    }
}

/// The index set `H_n`, ordered lexicographically by `(j1, j2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexSet {
    n: u32,
    members: Vec<HexIndex>,
}

impl IndexSet {
    /// Degree bound of the set.
    pub const fn n(&self) -> u32 {
        self.n
    }

    /// Members in lexicographic `(j1, j2)` order.
    pub fn members(&self) -> &[HexIndex] {
        &self.members
    }

    /// Number of members, `3n^2 + 3n + 1`.
    pub fn len(&self) -> usize {
        self.members.len()
    }

    /// Whether the set is empty; never true since `H_0 = {0}`.
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Enumerates `H_n = { j sum-zero : -n <= j1, j2, j3 <= n }`.
///
/// # Examples
///
/// ```
/// use hexfourier::basis::enumerate_hn;
///
/// assert_eq!(enumerate_hn(0).len(), 1);
/// assert_eq!(enumerate_hn(1).len(), 7);
/// assert_eq!(enumerate_hn(2).len(), 19);
/// ```
pub fn enumerate_hn(n: u32) -> IndexSet {
    let n_i = n as i32;
    let mut members = Vec::with_capacity((3 * n * n + 3 * n + 1) as usize);
    for j1 in -n_i..=n_i {
        // The bound on j3 = -j1 - j2 restricts j2 to [-n - j1, n - j1].
        let lo = (-n_i).max(-n_i - j1);
        let hi = n_i.min(n_i - j1);
        for j2 in lo..=hi {
            members.push(HexIndex::new(j1, j2));
        }
    }
    IndexSet { n, members }
}

/// Enumerates the ring `J_k` of indices with degree exactly `k`, in
/// lexicographic `(j1, j2)` order. `J_0 = {0}` and `|J_k| = 6k` for
/// `k >= 1`.
pub fn ring(k: u32) -> Vec<HexIndex> {
    enumerate_hn(k)
        .members()
        .iter()
        .copied()
        .filter(|j| j.degree() == k)
        .collect()
}

/// Evaluates the basis exponential `phi_j(t)`.
///
/// The sum-zero constraints reduce the phase to
/// `(2 pi / 3) ((j1 - j3) t1 + (j2 - j3) t2)`.
///
/// # Examples
///
/// ```
/// use hexfourier::basis::{phi, HexIndex};
/// use hexfourier::hexcoord::HomogeneousPoint;
///
/// let t = HomogeneousPoint::new(1.0, 0.0);
/// let value = phi(HexIndex::new(1, 0), t);
/// let expected = num_complex::Complex64::cis(4.0 * std::f64::consts::PI / 3.0);
/// assert!((value - expected).norm() < 1e-14);
/// ```
pub fn phi(j: HexIndex, t: HomogeneousPoint) -> Complex64 {
    Complex64::cis(phi_phase(j, t))
}

pub(crate) fn phi_phase(j: HexIndex, t: HomogeneousPoint) -> f64 {
    let a = f64::from(j.j1 - j.j3);
    let b = f64::from(j.j2 - j.j3);
    2.0 * PI / 3.0 * (a * t.t1() + b * t.t2())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hexcoord::lattice_point;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    /// Counts sum-zero triples with all components in [-n, n] by
    /// scanning the full square and filtering.
    fn count_by_filter(n: u32) -> usize {
        let n_i = i64::from(n);
        let mut count = 0;
        for j1 in -n_i..=n_i {
            for j2 in -n_i..=n_i {
                if (j1 + j2).abs() <= n_i {
                    count += 1;
                }
            }
        }
        count
    }

    #[test]
    fn cardinality_matches_filter_count_and_formula() {
        for n in 0..=32u32 {
            let set = enumerate_hn(n);
            assert_eq!(set.len(), count_by_filter(n));
            assert_eq!(set.len() as u32, 3 * n * n + 3 * n + 1);
        }
    }

    #[test]
    fn h1_members_in_order() {
        let expected = [
            HexIndex::new(-1, 0),
            HexIndex::new(-1, 1),
            HexIndex::new(0, -1),
            HexIndex::new(0, 0),
            HexIndex::new(0, 1),
            HexIndex::new(1, -1),
            HexIndex::new(1, 0),
        ];
        assert_eq!(enumerate_hn(1).members(), &expected);
    }

    #[test]
    fn members_are_sorted_and_within_bounds() {
        let set = enumerate_hn(9);
        let mut sorted = set.members().to_vec();
        sorted.sort();
        assert_eq!(sorted, set.members());
        assert!(set.members().iter().all(|j| j.degree() <= 9));
    }

    #[test]
    fn rings_partition_the_index_set() {
        let n = 12u32;
        let whole: BTreeSet<_> = enumerate_hn(n).members().iter().copied().collect();
        let mut union = BTreeSet::new();
        for k in 0..=n {
            let rk = ring(k);
            let expected = if k == 0 { 1 } else { 6 * k as usize };
            assert_eq!(rk.len(), expected);
            for j in rk {
                assert_eq!(j.degree(), k);
                assert!(union.insert(j), "rings overlap at {j:?}");
            }
        }
        assert_eq!(union, whole);
    }

    #[test]
    fn index_set_closed_under_negation_and_rotation() {
        for n in 0..=8u32 {
            let set: BTreeSet<_> = enumerate_hn(n).members().iter().copied().collect();
            for &j in &set {
                assert!(set.contains(&-j));
                assert!(set.contains(&j.rotate()));
                assert_eq!(j.rotate().degree(), j.degree());
            }
        }
    }

    #[test]
    fn phi_hand_values() {
        let t = HomogeneousPoint::new(1.0, 0.0);
        assert!((phi(HexIndex::new(0, 0), t) - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        let expected = Complex64::cis(4.0 * PI / 3.0);
        assert!((phi(HexIndex::new(1, 0), t) - expected).norm() < 1e-14);
    }

    proptest! {
        #[test]
        fn phi_is_unimodular(
            j1 in -20i32..=20, j2 in -20i32..=20,
            t1 in -2.0..2.0f64, t2 in -2.0..2.0f64,
        ) {
            let value = phi(HexIndex::new(j1, j2), HomogeneousPoint::new(t1, t2));
            prop_assert!((value.norm() - 1.0).abs() < 1e-12);
        }

        #[test]
        fn phi_is_lattice_periodic(
            j1 in -10i32..=10, j2 in -10i32..=10,
            t1 in -2.0..2.0f64, t2 in -2.0..2.0f64,
            a in -5i64..=5, b in -5i64..=5,
        ) {
            let j = HexIndex::new(j1, j2);
            let t = HomogeneousPoint::new(t1, t2);
            let shifted = t + lattice_point(a, b);
            prop_assert!((phi(j, t) - phi(j, shifted)).norm() < 1e-9);
        }

        #[test]
        fn phi_negation_conjugates(
            j1 in -10i32..=10, j2 in -10i32..=10,
            t1 in -2.0..2.0f64, t2 in -2.0..2.0f64,
        ) {
            let j = HexIndex::new(j1, j2);
            let t = HomogeneousPoint::new(t1, t2);
            prop_assert!((phi(-j, t) - phi(j, t).conj()).norm() < 1e-12);
        }

        #[test]
        fn phi_translation_multiplies(
            j1 in -10i32..=10, j2 in -10i32..=10,
            t1 in -1.0..1.0f64, t2 in -1.0..1.0f64,
            u1 in -1.0..1.0f64, u2 in -1.0..1.0f64,
        ) {
            let j = HexIndex::new(j1, j2);
            let t = HomogeneousPoint::new(t1, t2);
            let u = HomogeneousPoint::new(u1, u2);
            let lhs = phi(j, t + u);
            let rhs = phi(j, t) * phi(j, u);
            prop_assert!((lhs - rhs).norm() < 1e-11);
        }
    }
}
