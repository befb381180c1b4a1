//! Support functions of F-convex sets, restricted to hyperbolic space.
//!
//! An F-convex set K in Minkowski space R^{d,1} is determined by its total
//! support function `H(x) = sup_{k in K} <k,x>` on the future cone, and H is
//! in turn determined by its restriction `h = H|_{H^d}` together with
//! 1-homogeneity: `H(x) = |x| h(x / |x|)` with `|x| = sqrt(-<x,x>)`.
//!
//! This crate provides a catalog of support function specifications
//! (constants, cone apexes, powers of cosh, maxima of linear forms, sums,
//! scalings, tabulated solution fields, and a closed-form family), their
//! evaluation, tangential derivatives and curvature data (the reverse
//! second fundamental form `grad^2 h - h g` whose eigenvalues are the radii
//! of curvature), normal representations, convexity verification, duality
//! through the radial function, behaviour at infinity, and the hedgehog
//! decomposition of a smooth support function as a difference of two convex
//! ones.

mod bump;
mod convexity;
mod diff;
mod dual;
mod field;
mod hedgehog;
mod infinity;
mod interp;
mod normal;
mod optimize;
mod profile;
mod spec;

pub use bump::Bump;
pub use convexity::{
    check_convexity_geodesic, check_convexity_smooth, ConvexityReport, ConvexityVerdict,
    ConvexityWitness, SamplingPlan,
};
pub use diff::{curvature, curvature_fd, tangential_gradient, CurvatureData};
pub use dual::{dual, dual_value, radial_function, DualGrid};
pub use field::{ResidualStats, SolutionField};
pub use hedgehog::{decompose_hedgehog, HedgehogDecomposition};
pub use infinity::{support_at_infinity, InfinityValue};
pub use normal::normal_representation;
pub use optimize::{maximize_on_hyperboloid, OptimizeResult};
pub use profile::RadialProfile;
pub use spec::{elementary_wall_value, SupportSpec};

use lorentz_core::CoreError;

/// Errors raised by support function constructions and queries.
#[derive(Debug, thiserror::Error)]
pub enum SupportError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("support function is not differentiable here (tie between vertices {0:?})")]
    TieSet(Vec<usize>),
    #[error("support function is not differentiable here: {0}")]
    NotDifferentiable(String),
    #[error("point at distance {rho:.6} is outside the tabulated chart (max {rho_max:.6})")]
    OutOfChart { rho: f64, rho_max: f64 },
    #[error("specification needs at least one entry")]
    Empty,
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("operation needs a strictly negative support function, found h = {value:.6e}")]
    NotStrictlyNegative { value: f64 },
    #[error("grid must be uniform and have at least {need} nodes, got {got}")]
    BadGrid { need: usize, got: usize },
    #[error("dimension {0} is not supported by this operation")]
    UnsupportedDimension(usize),
    #[error("maximization found no admissible sample point")]
    NoSample,
}
