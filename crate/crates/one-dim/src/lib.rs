//! The d = 1 Christoffel problem in the Minkowski plane, where everything is
//! explicit: the equation h'' - h = mu on the hyperbola H^1 (coordinate t),
//! its general solution by convolution with -e^{-|t-s|}/2, convexity as a
//! hyperbolic midpoint inequality, and reconstruction of the boundary curve
//! from its support function.
//!
//! Sign convention: for a positive measure the convolution particular
//! solution is negative (h_{delta_0} = -e^{-|t|}/2); convex representatives
//! differ from it by a homogeneous solution A cosh + B sinh, e.g.
//! -e^{-|t|}/2 + cosh(t)/2 = |sinh t|/2, the support function of a segment.

mod convexity;
mod curve;
mod measure;
mod quad;
mod solve;

pub use convexity::{convexity_1d, convexity_samples, ConvexityReport1D};
pub use curve::{curve_from_support, radius_1d, CurvePoint};
pub use measure::{Bump1D, Density1D, OneDimMeasure, Profile1D};
pub use solve::{
    distributional_pairing, segment_support, smooth_from_convolution, solve_1d, solve_1d_smooth,
    zero_mean_profile, Solution1D,
};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum OneDimError {
    #[error("atom weight must be positive and finite, got {0}")]
    BadAtom(f64),
    #[error("density is not integrable against e^{{-|t|}}: {0}")]
    BadDensity(String),
    #[error("function is not smooth at t = {0}: one-sided curvatures disagree")]
    NonSmoothPoint(f64),
}
