//! Homogeneous coordinates, the fundamental hexagon, and the hex norm.
//!
//! A point of the plane is represented by the sum-zero triple
//! `t = (t1, t2, t3)` obtained from Cartesian coordinates through
//! [`HomogeneousPoint::from_plane`]. The fundamental domain is the
//! half-open hexagon `Omega = { -1 <= t1, t2, -t3 < 1 }`, whose closure
//! is exactly the unit ball of the hex norm `max(|t1|, |t2|, |t3|)`.
//! Translates of `Omega` under the period lattice spanned by
//! `(1, 1, -2)` and `(2, -1, -1)` tile the plane, and
//! [`HomogeneousPoint::fold_to_omega`] picks the representative inside
//! `Omega`.

use std::ops::{Add, Neg, Sub};

/// Cartesian point of the plane.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct PlanePoint {
    /// Horizontal coordinate.
    pub x1: f64,
    /// Vertical coordinate.
    pub x2: f64,
}

impl PlanePoint {
    /// Creates a plane point from Cartesian coordinates.
    pub const fn new(x1: f64, x2: f64) -> Self {
        Self { x1, x2 }
    }
}

/// Sum-zero triple of homogeneous coordinates.
///
/// The third component is always derived as `t3 = -t1 - t2`, so the
/// sum-zero invariant holds exactly in floating point.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct HomogeneousPoint {
    t1: f64,
    t2: f64,
    t3: f64,
}

impl HomogeneousPoint {
    /// Creates a point from its first two components; `t3` is derived.
    ///
    /// # Examples
    ///
    /// ```
    /// use hexfourier::hexcoord::HomogeneousPoint;
    ///
    /// let t = HomogeneousPoint::new(0.25, 0.5);
    /// assert_eq!(t.t3(), -0.75);
    /// assert_eq!(t.t1() + t.t2() + t.t3(), 0.0);
    /// ```
    pub fn new(t1: f64, t2: f64) -> Self {
        Self {
            t1,
            t2,
            t3: -(t1 + t2),
        }
    }

    /// Creates a point from all three components, checking the sum-zero
    /// constraint to an absolute tolerance of `1e-9`.
    ///
    /// The stored third component is re-derived from the first two, so
    /// tiny constraint violations in the input are projected away.
    pub fn from_components(t1: f64, t2: f64, t3: f64) -> crate::Result<Self> {
        let sum = t1 + t2 + t3;
        if sum.is_nan() || sum.abs() > 1e-9 {
            return Err(crate::Error::invalid(
                "point",
                format!("components sum to {sum:e}, expected 0"),
            ));
        }
        Ok(Self::new(t1, t2))
    }

    /// First component.
    pub const fn t1(&self) -> f64 {
        self.t1
    }

    /// Second component.
    pub const fn t2(&self) -> f64 {
        self.t2
    }

    /// Third component, `-t1 - t2`.
    pub const fn t3(&self) -> f64 {
        self.t3
    }

    /// Converts Cartesian coordinates to homogeneous coordinates.
    ///
    /// # Examples
    ///
    /// ```
    /// use hexfourier::hexcoord::{HomogeneousPoint, PlanePoint};
    ///
    /// let t = HomogeneousPoint::from_plane(PlanePoint::new(2.0 / 3f64.sqrt(), 0.0));
    /// assert!((t.t1() - 1.0).abs() < 1e-15);
    /// assert!(t.t2().abs() < 1e-15);
    /// assert!((t.t3() + 1.0).abs() < 1e-15);
    /// ```
    pub fn from_plane(p: PlanePoint) -> Self {
        let s3 = 3f64.sqrt();
        Self::new(-p.x2 / 2.0 + s3 * p.x1 / 2.0, p.x2)
    }

    /// Converts back to Cartesian coordinates; inverse of [`Self::from_plane`].
    pub fn to_plane(&self) -> PlanePoint {
        PlanePoint {
            x1: (self.t1 - self.t3) / 3f64.sqrt(),
            x2: self.t2,
        }
    }

    /// Hex norm `max(|t1|, |t2|, |t3|)`.
    ///
    /// # Examples
    ///
    /// ```
    /// use hexfourier::hexcoord::HomogeneousPoint;
    ///
    /// assert_eq!(HomogeneousPoint::new(1.0, 0.0).hex_norm(), 1.0);
    /// assert_eq!(HomogeneousPoint::new(0.5, 0.5).hex_norm(), 1.0);
    /// ```
    pub fn hex_norm(&self) -> f64 {
        self.t1.abs().max(self.t2.abs()).max(self.t3.abs())
    }

    /// Whether the point lies in the half-open fundamental hexagon
    /// `-1 <= t1 < 1`, `-1 <= t2 < 1`, `-1 <= -t3 < 1`.
    ///
    /// # Examples
    ///
    /// ```
    /// use hexfourier::hexcoord::HomogeneousPoint;
    ///
    /// assert!(HomogeneousPoint::new(0.0, 0.0).in_omega());
    /// assert!(HomogeneousPoint::new(-1.0, 0.0).in_omega());
    /// assert!(!HomogeneousPoint::new(1.0, 0.0).in_omega());
    /// ```
    pub fn in_omega(&self) -> bool {
        (-1.0..1.0).contains(&self.t1)
            && (-1.0..1.0).contains(&self.t2)
            && (-1.0..1.0).contains(&-self.t3)
    }

    /// Reduces the point modulo the period lattice into the fundamental
    /// hexagon.
    ///
    /// The lattice coordinates of `t` with respect to the generators
    /// `(1, 1, -2)` and `(2, -1, -1)` are rounded to the nearest integer
    /// pair, then the nine neighbouring translates are scanned for the
    /// unique one that lands in the half-open hexagon.
    ///
    /// # Examples
    ///
    /// ```
    /// use hexfourier::hexcoord::HomogeneousPoint;
    ///
    /// let folded = HomogeneousPoint::new(1.2, 1.1).fold_to_omega();
    /// assert!((folded.t1() - 0.2).abs() < 1e-12);
    /// assert!((folded.t2() - 0.1).abs() < 1e-12);
    /// assert!((folded.t3() + 0.3).abs() < 1e-12);
    /// ```
    pub fn fold_to_omega(self) -> Self {
        let a = ((self.t1 + 2.0 * self.t2) / 3.0).round() as i64;
        let b = ((self.t1 - self.t2) / 3.0).round() as i64;
        for da in -1..=1 {
            for db in -1..=1 {
                let s = lattice_point(a + da, b + db);
                let candidate = Self::new(self.t1 - s.t1, self.t2 - s.t2);
                if candidate.in_omega() {
                    return candidate;
                }
            }
        }
        self
    }

    /// Hex-norm distance to the nearest period-lattice point.
    ///
    /// Zero exactly on the lattice, positive elsewhere, and periodic by
    /// construction.
    ///
    /// # Examples
    ///
    /// ```
    /// use hexfourier::hexcoord::HomogeneousPoint;
    ///
    /// assert_eq!(HomogeneousPoint::new(2.0, -1.0).hex_distance_to_lattice(), 0.0);
    /// let d = HomogeneousPoint::new(0.2, 0.1).hex_distance_to_lattice();
    /// assert!((d - 0.3).abs() < 1e-12);
    /// ```
    pub fn hex_distance_to_lattice(&self) -> f64 {
        // The closed hexagon is the unit ball of the hex norm and the
        // shortest nonzero lattice vector has norm 2, so inside the
        // hexagon the nearest lattice point is the origin.
        self.fold_to_omega().hex_norm()
    }
}

/// Point of the period lattice with coordinates `(a, b)` in the basis
/// `(1, 1, -2)`, `(2, -1, -1)`.
pub fn lattice_point(a: i64, b: i64) -> HomogeneousPoint {
    HomogeneousPoint::new((a + 2 * b) as f64, (a - b) as f64)
}

impl Add for HomogeneousPoint {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self::new(self.t1 + rhs.t1, self.t2 + rhs.t2)
    }
}

impl Sub for HomogeneousPoint {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        Self::new(self.t1 - rhs.t1, self.t2 - rhs.t2)
    }
}

impl Neg for HomogeneousPoint {
    type Output = Self;

    fn neg(self) -> Self {
        Self::new(-self.t1, -self.t2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Every translate of `t` by a lattice vector with coordinates in
    /// `[-limit, limit]^2`, restricted to those landing in the hexagon.
    fn brute_force_fold(t: HomogeneousPoint, limit: i64) -> Vec<HomogeneousPoint> {
        let mut hits = Vec::new();
        for a in -limit..=limit {
            for b in -limit..=limit {
                let s = lattice_point(a, b);
                let candidate = HomogeneousPoint::new(t.t1() - s.t1(), t.t2() - s.t2());
                if candidate.in_omega() {
                    hits.push(candidate);
                }
            }
        }
        hits
    }

    fn brute_force_distance(t: HomogeneousPoint, limit: i64) -> f64 {
        let mut best = f64::INFINITY;
        for a in -limit..=limit {
            for b in -limit..=limit {
                best = best.min((t - lattice_point(a, b)).hex_norm());
            }
        }
        best
    }

    #[test]
    fn from_plane_matches_hand_values() {
        let t = HomogeneousPoint::from_plane(PlanePoint::new(2.0 / 3f64.sqrt(), 0.0));
        assert!((t.t1() - 1.0).abs() < 1e-14);
        assert!(t.t2().abs() < 1e-14);
        assert!((t.t3() + 1.0).abs() < 1e-14);

        let t = HomogeneousPoint::from_plane(PlanePoint::new(0.0, 1.0));
        assert!((t.t1() + 0.5).abs() < 1e-14);
        assert!((t.t2() - 1.0).abs() < 1e-14);
        assert!((t.t3() + 0.5).abs() < 1e-14);
    }

    #[test]
    fn from_components_checks_sum() {
        assert!(HomogeneousPoint::from_components(0.5, 0.25, -0.75).is_ok());
        assert!(HomogeneousPoint::from_components(0.5, 0.25, -0.75 + 5e-10).is_ok());
        assert!(HomogeneousPoint::from_components(0.5, 0.25, 0.0).is_err());
        assert!(HomogeneousPoint::from_components(f64::NAN, 0.0, 0.0).is_err());
    }

    #[test]
    fn hex_norm_hand_values() {
        assert_eq!(HomogeneousPoint::new(1.0, 0.0).hex_norm(), 1.0);
        assert_eq!(HomogeneousPoint::new(0.5, 0.5).hex_norm(), 1.0);
        assert_eq!(HomogeneousPoint::new(0.0, 0.0).hex_norm(), 0.0);
        assert_eq!(HomogeneousPoint::new(0.25, 0.125).hex_norm(), 0.375);
    }

    #[test]
    fn omega_membership_on_the_boundary() {
        assert!(HomogeneousPoint::new(0.0, 0.0).in_omega());
        // Vertex with t1 = 1 is excluded, its opposite with t1 = -1 kept.
        assert!(!HomogeneousPoint::new(1.0, 0.0).in_omega());
        assert!(HomogeneousPoint::new(-1.0, 0.0).in_omega());
        // -t3 = 1 is excluded.
        assert!(!HomogeneousPoint::new(0.5, 0.5).in_omega());
        assert!(HomogeneousPoint::new(-0.5, -0.5).in_omega());
    }

    #[test]
    fn fold_hand_value() {
        let folded = HomogeneousPoint::new(1.2, 1.1).fold_to_omega();
        assert!((folded.t1() - 0.2).abs() < 1e-12);
        assert!((folded.t2() - 0.1).abs() < 1e-12);
        assert!((folded.t3() + 0.3).abs() < 1e-12);
    }

    #[test]
    fn fold_fixes_interior_points() {
        let t = HomogeneousPoint::new(-0.99, 0.73);
        assert_eq!(t.fold_to_omega(), t);
        assert_eq!(
            HomogeneousPoint::new(0.0, 0.0).fold_to_omega(),
            HomogeneousPoint::new(0.0, 0.0)
        );
    }

    #[test]
    fn distance_hand_values() {
        assert_eq!(
            HomogeneousPoint::new(0.0, 0.0).hex_distance_to_lattice(),
            0.0
        );
        assert_eq!(
            HomogeneousPoint::new(2.0, -1.0).hex_distance_to_lattice(),
            0.0
        );
        assert_eq!(
            HomogeneousPoint::new(1.0, 1.0).hex_distance_to_lattice(),
            0.0
        );
        let d = HomogeneousPoint::new(0.2, 0.1).hex_distance_to_lattice();
        assert!((d - 0.3).abs() < 1e-12);
    }

    #[test]
    fn plane_round_trip() {
        let p = PlanePoint::new(0.37, -1.62);
        let q = HomogeneousPoint::from_plane(p).to_plane();
        assert!((p.x1 - q.x1).abs() < 1e-14);
        assert!((p.x2 - q.x2).abs() < 1e-14);
    }

    proptest! {
        #[test]
        fn fold_agrees_with_brute_force(t1 in -100.0..100.0f64, t2 in -100.0..100.0f64) {
            let t = HomogeneousPoint::new(t1, t2);
            let hits = brute_force_fold(t, 110);
            prop_assert_eq!(hits.len(), 1);
            let folded = t.fold_to_omega();
            prop_assert!((folded.t1() - hits[0].t1()).abs() < 1e-10);
            prop_assert!((folded.t2() - hits[0].t2()).abs() < 1e-10);
        }

        #[test]
        fn fold_is_idempotent(t1 in -100.0..100.0f64, t2 in -100.0..100.0f64) {
            let folded = HomogeneousPoint::new(t1, t2).fold_to_omega();
            prop_assert!(folded.in_omega());
            let twice = folded.fold_to_omega();
            prop_assert!((folded.t1() - twice.t1()).abs() < 1e-10);
            prop_assert!((folded.t2() - twice.t2()).abs() < 1e-10);
        }

        #[test]
        fn fold_is_periodic(
            t1 in -3.0..3.0f64,
            t2 in -3.0..3.0f64,
            a in -30i64..=30,
            b in -30i64..=30,
        ) {
            let t = HomogeneousPoint::new(t1, t2);
            let shifted = t + lattice_point(a, b);
            let f0 = t.fold_to_omega();
            let f1 = shifted.fold_to_omega();
            prop_assert!((f0.t1() - f1.t1()).abs() < 1e-10);
            prop_assert!((f0.t2() - f1.t2()).abs() < 1e-10);
        }

        #[test]
        fn hex_norm_is_a_norm(
            a1 in -5.0..5.0f64, a2 in -5.0..5.0f64,
            b1 in -5.0..5.0f64, b2 in -5.0..5.0f64,
            scale in -4.0..4.0f64,
        ) {
            let a = HomogeneousPoint::new(a1, a2);
            let b = HomogeneousPoint::new(b1, b2);
            prop_assert!((a + b).hex_norm() <= a.hex_norm() + b.hex_norm() + 1e-12);
            let scaled = HomogeneousPoint::new(scale * a1, scale * a2);
            prop_assert!((scaled.hex_norm() - scale.abs() * a.hex_norm()).abs() < 1e-12);
        }

        #[test]
        fn distance_agrees_with_brute_force(t1 in -5.0..5.0f64, t2 in -5.0..5.0f64) {
            let t = HomogeneousPoint::new(t1, t2);
            let expected = brute_force_distance(t, 8);
            prop_assert!((t.hex_distance_to_lattice() - expected).abs() < 1e-10);
        }

        #[test]
        fn distance_is_lipschitz(
            t1 in -5.0..5.0f64, t2 in -5.0..5.0f64,
            u1 in -5.0..5.0f64, u2 in -5.0..5.0f64,
        ) {
            let t = HomogeneousPoint::new(t1, t2);
            let u = HomogeneousPoint::new(u1, u2);
            let gap = (t.hex_distance_to_lattice() - u.hex_distance_to_lattice()).abs();
            prop_assert!(gap <= (t - u).hex_norm() + 1e-10);
        }
    }
}
