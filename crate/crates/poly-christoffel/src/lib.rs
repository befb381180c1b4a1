//! Constructive solver for the polyhedral Christoffel problem.
//!
//! A polyhedral first area measure is a cellulation of H^d by totally
//! geodesic walls carrying one weight each. When the weighted facet normals
//! close up around every codimension-2 face, the measure is realized by an
//! F-convex polyhedron whose support function is `max <eta, X(xi)>` over one
//! vertex `X(xi)` per cell: fix `X(base) = 0` and let each facet crossing
//! jump by its weight times its unit normal. Path independence is exactly
//! the closure condition.
//!
//! This crate checks closure, enumerates arrangement cells by sign vectors,
//! realizes the vertices along BFS tree paths (cross-checked against the
//! direct separating-wall sum), and verifies the construction three ways:
//! random-path independence, the Gauss image decomposition (each cell's
//! vertex wins the support maximum on that cell), and the first-area-measure
//! round trip (facet edge lengths reproduce the input weights). For d = 1 it
//! also builds boost-periodic polygons with their translation cocycle and
//! coboundary vector.

mod arrangement;
mod build;
mod cellulation;
mod invariant;

pub use build::{
    build_polyhedron, recompute_s1, verify_gauss_decomposition, verify_path_independence,
    GaussReport, PolyCell, PolyFacet, PolyhedralFConvex, S1Report, S1Row,
};
pub use cellulation::{
    check_closure, Cellulation, ClosureReport, Codim2Face, ExplicitComplex, ExplicitFacet, Wall,
    WEIGHT_FLOOR,
};
pub use invariant::{build_d1, build_invariant_d1, CocycleD1, InvariantBuildResult};

use lorentz_core::CoreError;
use support_fn::SupportError;

/// Errors raised by the polyhedral construction.
#[derive(Debug, thiserror::Error)]
pub enum PolyError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error(transparent)]
    Support(#[from] SupportError),
    #[error("dimension {0} is not supported (d must be 1, 2 or 3)")]
    UnsupportedDimension(usize),
    #[error("walls {0} and {1} coincide")]
    DuplicateWall(usize, usize),
    #[error("wall {index} has nonpositive weight {weight}")]
    NonpositiveWeight { index: usize, weight: f64 },
    #[error("codim-2 face {face} references facet {facet} out of range")]
    MalformedIncidence { face: usize, facet: usize },
    #[error("facet {0} must bound two distinct valid cells")]
    BadFacetCells(usize),
    #[error("complex has no cells")]
    EmptyComplex,
    #[error("no witness pair produced a point on the facet of wall {wall}")]
    FacetProbeFailed { wall: usize },
    #[error("closure fails at codim-2 face {face}: defect {defect:.3e}")]
    ClosureViolated { face: usize, defect: f64 },
    #[error("base cell {0} out of range (complex has {1} cells)")]
    BadBaseCell(usize, usize),
    #[error("cell {0} is unreachable from the base cell")]
    DisconnectedComplex(usize),
    #[error("separating-wall sum disagrees with the path realization by {0:.3e}")]
    PathRealizationMismatch(f64),
    #[error("cell {0} carries no interior witness to sample")]
    NoCellWitness(usize),
    #[error("points {0} and {1} are not strictly increasing")]
    UnsortedPoints(usize, usize),
    #[error("boost period must be positive, got {0}")]
    BadPeriod(f64),
    #[error("weight {weight:.3e} at index {index} is below the floor 1e-12")]
    WeightBelowFloor { index: usize, weight: f64 },
    #[error("cocycle words disagree by {0:.3e}")]
    CocycleInconsistent(f64),
}
