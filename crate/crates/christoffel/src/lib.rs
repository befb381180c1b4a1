//! Kernel-based solvers for the Christoffel problem on F-convex sets.
//!
//! The first area measure of an F-convex set prescribes the right-hand side
//! of `(1/d) Delta h - h = phi` on H^d. A particular solution is obtained by
//! convolution with the rotationally symmetric Green kernel
//! `G(x,y) = k(dist(x,y))`, where `k` solves the radial ODE
//! `k'' + (d-1) coth(rho) k' - d k = 0` with decay `-k ~ C e^{-d rho}` at
//! infinity and the normalization `k'(rho) A(rho) -> 1` as `rho -> 0`
//! (`A(rho)` the area of the geodesic sphere).
//!
//! This crate provides the kernel (closed forms for d = 1, 2, adaptive
//! quadrature for d = 3), smooth-density and measure solvers, both convexity
//! criteria (the pairwise support-combination test and the directional
//! integral test), residual verification through the ambient wave operator,
//! a Fuchsian (periodic) solver for d = 1, and uniqueness checks at
//! infinity.

mod convexity;
mod fuchsian;
mod kernel;
mod measure;
mod quadrature;
mod residual;
mod solve;
mod uniqueness;

pub use convexity::{convexity_form_smooth, convexity_integral_smooth, convexity_lambda};
pub use fuchsian::fuchsian_solve_d1;
pub use kernel::{kernel_derivatives, kernel_k, kernel_ode_residual, kernel_quadrature, KernelContext};
pub use measure::{DensitySpec, MeasureSpec};
pub use quadrature::{adaptive_integral, gauss_legendre, QuadratureSpec, SphereRule};
pub use residual::{residual_wave, residual_wave_fn};
pub use solve::{elementary_closed_form, solve_measure, solve_smooth, tabulate_solution};
pub use uniqueness::{check_uniqueness_at_infinity, UniquenessReport};

use lorentz_core::CoreError;
use support_fn::SupportError;

/// Errors raised by the Christoffel solvers.
#[derive(Debug, thiserror::Error)]
pub enum ChristoffelError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error(transparent)]
    Support(#[from] SupportError),
    #[error("kernel argument must be positive, got {0}")]
    NonpositiveRadius(f64),
    #[error("dimension {0} is not supported (d must be 1, 2 or 3)")]
    UnsupportedDimension(usize),
    #[error("quadrature truncation radius {given} is below the required {needed}")]
    TruncationInsufficient { needed: f64, given: f64 },
    #[error("query point lies {distance:.3e} from an atom; the kernel is singular there")]
    SingularAtAtom { distance: f64 },
    #[error("input must be future timelike, got Minkowski norm squared {0}")]
    NotFutureTimelike(f64),
    #[error("quadrature spec invalid: {0}")]
    BadQuadrature(String),
    #[error("finite-difference step {step} leaves the tabulated chart or is degenerate")]
    BadStep { step: f64 },
}
