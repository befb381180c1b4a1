//! The d=1 polygon builder and its boost-invariant extension.
//!
//! On H^1 a wall is a single point, a cell is an interval, and the built set
//! is a spacelike polygonal line: crossing the wall at parameter `t` jumps by
//! `a * v(t)` with `v(t) = (cosh t, sinh t)` the unit tangent oriented toward
//! increasing parameter. For weights invariant under the cyclic boost group
//! generated by `gamma_0 = boost(t_0)`, the construction over a few periods
//! yields the translation cocycle `tau = X(gamma_0 xi_b)`; since a boost has
//! no eigenvalue 1, `tau` is a coboundary `(Id - gamma_0) v`, and translating
//! the polygon by `-v` makes it genuinely invariant.

use lorentz_core::{
    cocycle_check, coboundary_solve_d1, AmbientVector, LorentzIsometry, SpacelikeUnit,
};

use crate::build::{build_polyhedron, PolyhedralFConvex};
use crate::cellulation::{Cellulation, Wall, WEIGHT_FLOOR};
use crate::PolyError;

/// The translation cocycle of a boost-periodic d=1 build: the generator acts
/// on the polygon as `x -> gamma_0 x + tau`.
#[derive(Clone, Debug)]
pub struct CocycleD1 {
    /// Boost parameter `t_0 > 0` of the generator.
    pub period: f64,
    /// Translation part `tau = X(gamma_0 xi_b)` with `X(xi_b) = 0`.
    pub tau: AmbientVector,
}

impl CocycleD1 {
    /// The affine isometry `x -> gamma_0 x + tau`.
    pub fn generator(&self) -> LorentzIsometry {
        LorentzIsometry::boost_d1(self.period).with_translation(self.tau)
    }
}

/// Outcome of the invariant d=1 construction.
#[derive(Clone, Debug)]
pub struct InvariantBuildResult {
    /// The polygon over periods -1..=2 of the weight set, based at the cell
    /// immediately left of the fundamental block.
    pub polyhedron: PolyhedralFConvex,
    pub cocycle: CocycleD1,
    /// `v` with `(Id - gamma_0) v = tau`; the polygon translated by `-v` is
    /// invariant under the pure boost.
    pub coboundary_vector: AmbientVector,
    /// Cell ids of the base-cell orbit `xi_b, gamma_0 xi_b, gamma_0^2 xi_b,
    /// gamma_0^3 xi_b` inside the extended polygon.
    pub base_orbit_cells: Vec<usize>,
    /// Largest `|gamma_0 (X(c) - v) + v - X(gamma_0 c)|` over the cells whose
    /// image stays in the extended range.
    pub invariance_defect: f64,
}

/// Builds the spacelike polygon over weighted points of H^1, given as
/// strictly increasing parameters `t_k` with weights `a_k`. The base cell is
/// the leftmost interval, so `X_k = sum_{j<k} a_j v(t_j)`.
pub fn build_d1(points: &[(f64, f64)]) -> Result<PolyhedralFConvex, PolyError> {
    for k in 1..points.len() {
        if points[k].0 <= points[k - 1].0 {
            return Err(PolyError::UnsortedPoints(k - 1, k));
        }
    }
    let mut walls = Vec::with_capacity(points.len());
    for &(t, a) in points {
        walls.push(Wall::new(SpacelikeUnit::from_coords(&[t.cosh(), t.sinh()])?, a));
    }
    build_polyhedron(&Cellulation::arrangement(1, walls), 0, 0)
}

/// Builds the boost-invariant d=1 polygon from one period of weights.
///
/// The parameters are reduced modulo the period into `[0, t_0)`, extended
/// over periods -1..=2, and realized with the base cell immediately left of
/// the fundamental block. The cocycle identity is cross-checked on all group
/// words of length <= 3, and the coboundary vector is verified against every
/// cell of the orbit range.
pub fn build_invariant_d1(
    period: f64,
    weights: &[(f64, f64)],
) -> Result<InvariantBuildResult, PolyError> {
    if !(period > 0.0) || !period.is_finite() {
        return Err(PolyError::BadPeriod(period));
    }
    if weights.is_empty() {
        return Err(PolyError::EmptyComplex);
    }
    let mut reduced: Vec<(f64, f64, usize)> = Vec::with_capacity(weights.len());
    for (i, &(t, a)) in weights.iter().enumerate() {
        if !(a >= WEIGHT_FLOOR) {
            return Err(PolyError::WeightBelowFloor { index: i, weight: a });
        }
        reduced.push((t.rem_euclid(period), a, i));
    }
    reduced.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap());
    for k in 1..reduced.len() {
        if reduced[k].0 - reduced[k - 1].0 < 1.0e-9 {
            return Err(PolyError::DuplicateWall(reduced[k - 1].2, reduced[k].2));
        }
    }
    if reduced.len() >= 2 {
        // Wraparound collision: last point of one period against the first
        // of the next.
        let gap = reduced[0].0 + period - reduced[reduced.len() - 1].0;
        if gap < 1.0e-9 {
            return Err(PolyError::DuplicateWall(reduced[reduced.len() - 1].2, reduced[0].2));
        }
    }

    let n = reduced.len();
    let mut extended: Vec<(f64, f64)> = Vec::with_capacity(4 * n);
    for p in -1i32..=2 {
        for &(t, a, _) in &reduced {
            extended.push((t + f64::from(p) * period, a));
        }
    }
    // 4n walls make 4n + 1 interval cells; the fundamental block starts at
    // wall n, so its left neighbor cell (the base) has id n.
    let poly = build_d1(&extended)?.rebased(n)?;
    let tau = poly.vertex(2 * n);
    let cocycle = CocycleD1 { period, tau };
    let gamma = cocycle.generator();

    // The boost maps cell c to cell c + n, so gamma^j xi_b is cell (1+j)n and
    // the cocycle forces tau_{gamma^2} = X(3n), tau_{gamma^3} = X(4n).
    let g2 = LorentzIsometry::boost_d1(2.0 * period).with_translation(poly.vertex(3 * n));
    let g3 = LorentzIsometry::boost_d1(3.0 * period).with_translation(poly.vertex(4 * n));
    let words: Vec<Vec<usize>> = vec![
        vec![0, 0],
        vec![1],
        vec![0, 0, 0],
        vec![0, 1],
        vec![1, 0],
        vec![2],
    ];
    let report = cocycle_check(&[gamma, g2, g3], &words);
    if !report.consistent {
        return Err(PolyError::CocycleInconsistent(report.worst_mismatch));
    }

    let v = coboundary_solve_d1(&gamma)?;
    let gamma0 = LorentzIsometry::boost_d1(period);
    let mut defect = 0.0f64;
    for c in n..=3 * n {
        let lhs = gamma0.apply_linear(&(poly.vertex(c) - v)) + v;
        defect = defect.max((lhs - poly.vertex(c + n)).euclid_sq().sqrt());
    }

    Ok(InvariantBuildResult {
        polyhedron: poly,
        cocycle,
        coboundary_vector: v,
        base_orbit_cells: vec![n, 2 * n, 3 * n, 4 * n],
        invariance_defect: defect,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::build::recompute_s1;
    use lorentz_core::HPoint;

    fn h1(u: f64) -> HPoint {
        HPoint::from_coords(&[u.sinh(), u.cosh()]).unwrap()
    }

    fn v1(t: f64) -> AmbientVector {
        AmbientVector::new(&[t.cosh(), t.sinh()]).unwrap()
    }

    #[test]
    fn single_point_builds_a_segment() {
        let (t, a) = (0.8, 1.5);
        let poly = build_d1(&[(t, a)]).unwrap();
        assert_eq!(poly.cell_count(), 2);
        assert_eq!(poly.vertex(0), AmbientVector::zero(2));
        let d = (poly.vertex(1) - v1(t) * a).euclid_sq().sqrt();
        assert!(d < 1e-12);
        // h(u) = max(0, a sinh(u - t)).
        for u in [-0.5, 0.8, 2.0] {
            let want = (a * (u - t).sinh()).max(0.0);
            assert!((poly.support(&h1(u)).unwrap() - want).abs() < 1e-12);
        }
        let rep = recompute_s1(&poly);
        assert!(rep.all_spacelike && rep.worst_deviation < 1e-12);
    }

    #[test]
    fn unit_weights_make_a_three_vertex_polyline() {
        let poly = build_d1(&[(-1.0, 1.0), (1.0, 1.0)]).unwrap();
        assert_eq!(poly.cell_count(), 3);
        assert!((poly.vertex(1) - v1(-1.0)).euclid_sq().sqrt() < 1e-12);
        assert!((poly.vertex(2) - (v1(-1.0) + v1(1.0))).euclid_sq().sqrt() < 1e-12);
        let rep = recompute_s1(&poly);
        assert!(rep.all_spacelike);
        for row in &rep.rows {
            assert!((row.edge_length - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn support_ties_exactly_at_the_input_points() {
        let poly = build_d1(&[(-1.0, 1.0), (1.0, 1.0)]).unwrap();
        let ties_left = poly.spec.tie_set(&h1(-1.0));
        let ties_right = poly.spec.tie_set(&h1(1.0));
        assert_eq!(ties_left.len(), 2);
        assert_eq!(ties_right.len(), 2);
        // Off the walls the maximizer is unique.
        assert_eq!(poly.spec.tie_set(&h1(0.0)).len(), 1);
        assert_eq!(poly.spec.tie_set(&h1(3.0)).len(), 1);
    }

    #[test]
    fn unsorted_points_are_rejected() {
        assert!(matches!(
            build_d1(&[(1.0, 1.0), (0.5, 1.0)]),
            Err(PolyError::UnsortedPoints(0, 1))
        ));
        assert!(matches!(
            build_d1(&[(0.5, 1.0), (0.5, 1.0)]),
            Err(PolyError::UnsortedPoints(0, 1))
        ));
    }

    #[test]
    fn one_weight_per_period_gives_tau_along_the_wall_normal() {
        let (t0, t, a) = (1.0, 0.3, 0.7);
        let res = build_invariant_d1(t0, &[(t, a)]).unwrap();
        assert_eq!(res.polyhedron.cell_count(), 5);
        assert_eq!(res.base_orbit_cells, vec![1, 2, 3, 4]);
        let d = (res.cocycle.tau - v1(t) * a).euclid_sq().sqrt();
        assert!(d < 1e-12);
        assert!(res.invariance_defect < 1e-10);
    }

    #[test]
    fn midpoint_symmetric_weights_put_the_coboundary_on_the_axis() {
        let t0 = 1.4;
        let (mid, s, a) = (0.7, 0.4, 0.9);
        let res = build_invariant_d1(t0, &[(mid - s, a), (mid + s, a)]).unwrap();
        // tau is proportional to the wall normal at the midpoint...
        let tau = res.cocycle.tau;
        let cross = tau[0] * mid.sinh() - tau[1] * mid.cosh();
        assert!(cross.abs() < 1e-12, "tau not aligned with v(mid): {cross}");
        // ...which places the coboundary vector on the boost axis (pure
        // time direction, spatial component zero).
        assert!(res.coboundary_vector[0].abs() < 1e-9);
        assert!(res.invariance_defect < 1e-10);
    }

    #[test]
    fn generic_weights_pass_the_cocycle_words() {
        let res =
            build_invariant_d1(2.1, &[(0.2, 1.1), (0.9, 0.4), (1.7, 0.8)]).unwrap();
        assert_eq!(res.polyhedron.cell_count(), 13);
        assert!(res.invariance_defect < 1e-10);
        // Re-verify the words externally on the returned cocycle.
        let gamma = res.cocycle.generator();
        let poly = &res.polyhedron;
        let g2 = LorentzIsometry::boost_d1(4.2).with_translation(poly.vertex(9));
        let words: Vec<Vec<usize>> = vec![vec![0, 0], vec![1]];
        let rep = cocycle_check(&[gamma, g2], &words);
        assert!(rep.consistent && rep.worst_mismatch < 1e-9);
    }

    #[test]
    fn parameters_reduce_into_the_fundamental_period() {
        // Same configuration handed in shifted by whole periods.
        let a = build_invariant_d1(1.0, &[(0.25, 1.0), (0.6, 0.5)]).unwrap();
        let b = build_invariant_d1(1.0, &[(3.25, 1.0), (-1.4, 0.5)]).unwrap();
        let d = (a.cocycle.tau - b.cocycle.tau).euclid_sq().sqrt();
        assert!(d < 1e-12);
        assert!(
            (a.coboundary_vector - b.coboundary_vector).euclid_sq().sqrt() < 1e-12
        );
    }

    #[test]
    fn degenerate_inputs_are_rejected() {
        assert!(matches!(
            build_invariant_d1(0.0, &[(0.1, 1.0)]),
            Err(PolyError::BadPeriod(_))
        ));
        assert!(matches!(
            build_invariant_d1(-1.0, &[(0.1, 1.0)]),
            Err(PolyError::BadPeriod(_))
        ));
        assert!(matches!(
            build_invariant_d1(1.0, &[(0.1, 1.0e-13)]),
            Err(PolyError::WeightBelowFloor { .. })
        ));
        assert!(matches!(
            build_invariant_d1(1.0, &[(0.25, 1.0), (1.25, 0.5)]),
            Err(PolyError::DuplicateWall(0, 1))
        ));
        // Collision across the period boundary.
        assert!(matches!(
            build_invariant_d1(1.0, &[(1.0e-10, 1.0), (1.0 - 1.0e-10, 0.5)]),
            Err(PolyError::DuplicateWall(1, 0))
        ));
    }
}
