//! Cellulations of H^d by totally geodesic walls and the closure condition.
//!
//! A polyhedral first area measure is a weighted family of totally geodesic
//! hypersurfaces. The measure is realizable exactly when, around every
//! codim-2 face eta, the weighted unit tangents u(eta, zeta) of the incident
//! facets zeta sum to zero. For a wall arrangement this holds identically:
//! each wall through eta contributes its two opposite half-walls with one
//! shared weight, so the sum telescopes wall by wall.

use lorentz_core::{minkowski_form, AmbientVector, HPoint, SpacelikeUnit};

use crate::PolyError;

/// Below this weight a facet no longer yields a uniformly spacelike edge at
/// working precision; finite builds proceed but flag it, orbit-extended
/// builds refuse.
pub const WEIGHT_FLOOR: f64 = 1.0e-12;

/// One totally geodesic wall `{x : <x, v> = 0}` carrying a positive weight.
#[derive(Clone, Copy, Debug)]
pub struct Wall {
    pub normal: SpacelikeUnit,
    pub weight: f64,
}

impl Wall {
    pub fn new(normal: SpacelikeUnit, weight: f64) -> Self {
        Self { normal, weight }
    }
}

/// A facet of an explicit complex: a codim-1 piece of wall separating the
/// cell `back` (where `<x, normal> < 0`) from `front`.
#[derive(Clone, Debug)]
pub struct ExplicitFacet {
    pub weight: f64,
    pub normal: SpacelikeUnit,
    pub back: usize,
    pub front: usize,
}

/// A codim-2 face given by its incidence data: for each incident facet, the
/// unit tangent vector of that facet pointing away from the face.
#[derive(Clone, Debug)]
pub struct Codim2Face {
    pub incident: Vec<(usize, AmbientVector)>,
}

/// A hand-described cell complex. Cells are abstract ids `0..n_cells`; the
/// geometry enters only through facet normals, codim-2 incidences, and
/// optional interior witness points used for sampling checks.
#[derive(Clone, Debug)]
pub struct ExplicitComplex {
    pub dim: usize,
    pub n_cells: usize,
    pub facets: Vec<ExplicitFacet>,
    pub codim2: Vec<Codim2Face>,
    /// Optional interior points, indexed by cell id.
    pub witnesses: Vec<Vec<HPoint>>,
}

/// The cell decomposition input of the polyhedral Christoffel problem.
#[derive(Clone, Debug)]
pub enum Cellulation {
    /// The complex induced on H^d by finitely many weighted walls. Closure
    /// is automatic and cells are enumerable by sign vectors.
    Arrangement { dim: usize, walls: Vec<Wall> },
    /// A hand-built complex, accepted for explicit tests.
    Explicit(ExplicitComplex),
}

impl Cellulation {
    pub fn arrangement(dim: usize, walls: Vec<Wall>) -> Self {
        Cellulation::Arrangement { dim, walls }
    }

    pub fn dim(&self) -> usize {
        match self {
            Cellulation::Arrangement { dim, .. } => *dim,
            Cellulation::Explicit(c) => c.dim,
        }
    }

    pub(crate) fn validate(&self) -> Result<(), PolyError> {
        match self {
            Cellulation::Arrangement { dim, walls } => validate_walls(*dim, walls),
            Cellulation::Explicit(c) => c.validate(),
        }
    }
}

pub(crate) fn validate_walls(dim: usize, walls: &[Wall]) -> Result<(), PolyError> {
    if !(1..=3).contains(&dim) {
        return Err(PolyError::UnsupportedDimension(dim));
    }
    for (i, w) in walls.iter().enumerate() {
        if w.normal.vec().dim() != dim {
            return Err(PolyError::Core(lorentz_core::CoreError::DimensionMismatch(
                w.normal.vec().dim(),
                dim,
            )));
        }
        if !(w.weight > 0.0) || !w.weight.is_finite() {
            return Err(PolyError::NonpositiveWeight { index: i, weight: w.weight });
        }
    }
    // v and -v cut the same geodesic, so both orientations count as equal.
    for i in 0..walls.len() {
        for j in i + 1..walls.len() {
            let a = walls[i].normal.vec();
            let b = walls[j].normal.vec();
            if (*a - *b).euclid_sq().sqrt() < 1.0e-9 || (*a + *b).euclid_sq().sqrt() < 1.0e-9 {
                return Err(PolyError::DuplicateWall(i, j));
            }
        }
    }
    Ok(())
}

impl ExplicitComplex {
    pub(crate) fn validate(&self) -> Result<(), PolyError> {
        if !(1..=3).contains(&self.dim) {
            return Err(PolyError::UnsupportedDimension(self.dim));
        }
        if self.n_cells == 0 {
            return Err(PolyError::EmptyComplex);
        }
        if !self.witnesses.is_empty() && self.witnesses.len() != self.n_cells {
            return Err(PolyError::EmptyComplex);
        }
        for (i, f) in self.facets.iter().enumerate() {
            if f.back >= self.n_cells || f.front >= self.n_cells || f.back == f.front {
                return Err(PolyError::BadFacetCells(i));
            }
            if !(f.weight > 0.0) || !f.weight.is_finite() {
                return Err(PolyError::NonpositiveWeight { index: i, weight: f.weight });
            }
        }
        for (fi, face) in self.codim2.iter().enumerate() {
            for &(zeta, u) in &face.incident {
                if zeta >= self.facets.len() {
                    return Err(PolyError::MalformedIncidence { face: fi, facet: zeta });
                }
                if (minkowski_form(&u, &u) - 1.0).abs() > 1.0e-8 {
                    return Err(PolyError::MalformedIncidence { face: fi, facet: zeta });
                }
            }
        }
        Ok(())
    }
}

/// Outcome of the closure (realizability) check.
#[derive(Clone, Debug)]
pub struct ClosureReport {
    pub passed: bool,
    /// Set when the conclusion needs no numerics (wall arrangements).
    pub analytic: bool,
    pub worst_defect: f64,
    /// Euclidean norm of `sum lambda(zeta) u(eta, zeta)` per codim-2 face.
    pub face_defects: Vec<f64>,
}

/// Verifies `sum_zeta lambda(zeta) u(eta, zeta) = 0` over every codim-2
/// face. Arrangements pass analytically; explicit complexes are summed
/// numerically against a 1e-9 gate.
pub fn check_closure(c: &Cellulation) -> Result<ClosureReport, PolyError> {
    c.validate()?;
    match c {
        Cellulation::Arrangement { .. } => Ok(ClosureReport {
            passed: true,
            analytic: true,
            worst_defect: 0.0,
            face_defects: Vec::new(),
        }),
        Cellulation::Explicit(complex) => {
            let n = complex.dim + 1;
            let mut defects = Vec::with_capacity(complex.codim2.len());
            let mut worst = 0.0f64;
            for face in &complex.codim2 {
                let mut sum = AmbientVector::zero(n);
                for &(zeta, u) in &face.incident {
                    sum = sum + u * complex.facets[zeta].weight;
                }
                let defect = sum.euclid_sq().sqrt();
                worst = worst.max(defect);
                defects.push(defect);
            }
            Ok(ClosureReport {
                passed: worst < 1.0e-9,
                analytic: false,
                worst_defect: worst,
                face_defects: defects,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wall2(x: f64, y: f64, t: f64, weight: f64) -> Wall {
        Wall::new(SpacelikeUnit::from_coords(&[x, y, t]).unwrap(), weight)
    }

    #[test]
    fn arrangement_closure_is_analytic() {
        let c = Cellulation::arrangement(
            2,
            vec![wall2(1.0, 0.0, 0.0, 0.7), wall2(0.0, 1.0, 0.0, 2.0)],
        );
        let rep = check_closure(&c).unwrap();
        assert!(rep.passed && rep.analytic);
        assert_eq!(rep.worst_defect, 0.0);
    }

    #[test]
    fn duplicate_walls_are_rejected_in_both_orientations() {
        let c = Cellulation::arrangement(2, vec![wall2(1.0, 0.0, 0.0, 1.0), wall2(1.0, 0.0, 0.0, 2.0)]);
        assert!(matches!(check_closure(&c), Err(PolyError::DuplicateWall(0, 1))));
        let c = Cellulation::arrangement(2, vec![wall2(1.0, 0.0, 0.0, 1.0), wall2(-1.0, 0.0, 0.0, 2.0)]);
        assert!(matches!(check_closure(&c), Err(PolyError::DuplicateWall(0, 1))));
    }

    #[test]
    fn nonpositive_weight_is_rejected() {
        let c = Cellulation::arrangement(2, vec![wall2(1.0, 0.0, 0.0, 0.0)]);
        assert!(matches!(check_closure(&c), Err(PolyError::NonpositiveWeight { index: 0, .. })));
    }

    /// Two geodesics crossing at the basepoint of H^2, cut into four
    /// half-line facets; closure at the crossing needs opposite halves of
    /// each geodesic to carry equal weight.
    fn crossing_at_basepoint(l1: f64, l2: f64, l3: f64, l4: f64) -> Cellulation {
        let e1 = AmbientVector::new(&[1.0, 0.0, 0.0]).unwrap();
        let e2 = AmbientVector::new(&[0.0, 1.0, 0.0]).unwrap();
        let v1 = SpacelikeUnit::from_coords(&[1.0, 0.0, 0.0]).unwrap();
        let v2 = SpacelikeUnit::from_coords(&[0.0, 1.0, 0.0]).unwrap();
        // Facets 0/2 are the halves of the wall normal to v1 (tangent +-e2),
        // facets 1/3 the halves of the wall normal to v2 (tangent +-e1).
        // Cells are the four quadrants 0..4 in circular order.
        let facets = vec![
            ExplicitFacet { weight: l1, normal: v1, back: 1, front: 0 },
            ExplicitFacet { weight: l2, normal: v2, back: 3, front: 0 },
            ExplicitFacet { weight: l3, normal: v1, back: 2, front: 3 },
            ExplicitFacet { weight: l4, normal: v2, back: 2, front: 1 },
        ];
        let codim2 = vec![Codim2Face {
            incident: vec![(0, e2), (1, e1), (2, e2 * -1.0), (3, e1 * -1.0)],
        }];
        Cellulation::Explicit(ExplicitComplex {
            dim: 2,
            n_cells: 4,
            facets,
            codim2,
            witnesses: Vec::new(),
        })
    }

    #[test]
    fn explicit_crossing_needs_matched_opposite_weights() {
        let rep = check_closure(&crossing_at_basepoint(1.2, 0.5, 1.2, 0.5)).unwrap();
        assert!(rep.passed && !rep.analytic);
        assert!(rep.worst_defect < 1e-12);
        let rep = check_closure(&crossing_at_basepoint(1.2, 0.5, 1.0, 0.5)).unwrap();
        assert!(!rep.passed);
        assert!((rep.worst_defect - 0.2).abs() < 1e-12);
    }

    #[test]
    fn single_wall_closure_is_vacuous() {
        let v = SpacelikeUnit::from_coords(&[1.0, 0.0, 0.0]).unwrap();
        let facets = vec![ExplicitFacet { weight: 1.0, normal: v, back: 0, front: 1 }];
        let c = Cellulation::Explicit(ExplicitComplex {
            dim: 2,
            n_cells: 2,
            facets,
            codim2: Vec::new(),
            witnesses: Vec::new(),
        });
        let rep = check_closure(&c).unwrap();
        assert!(rep.passed);
        assert!(rep.face_defects.is_empty());
    }

    #[test]
    fn malformed_incidence_is_reported() {
        let v = SpacelikeUnit::from_coords(&[1.0, 0.0, 0.0]).unwrap();
        let facets = vec![ExplicitFacet { weight: 1.0, normal: v, back: 0, front: 1 }];
        let c = Cellulation::Explicit(ExplicitComplex {
            dim: 2,
            n_cells: 2,
            facets,
            codim2: vec![Codim2Face {
                incident: vec![(7, AmbientVector::new(&[0.0, 1.0, 0.0]).unwrap())],
            }],
            witnesses: Vec::new(),
        });
        assert!(matches!(
            check_closure(&c),
            Err(PolyError::MalformedIncidence { face: 0, facet: 7 })
        ));
    }
}
