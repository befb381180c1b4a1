//! The two convexity criteria for kernel solutions.
//!
//! Pairwise criterion: the 1-homogeneous extension of the solution is
//! superadditive on the future cone iff
//! `Lambda(eta, nu) = Gamma(eta) + Gamma(nu) - Gamma(eta + nu) >= 0` for all
//! future timelike eta, nu, where `Gamma(eta) = |eta| G(eta/|eta|, .)`
//! integrated against the measure.
//!
//! Directional criterion: for smooth data the improper integral
//! `V(x, X) = Integral (v_{d-1} sinh^d rho)^{-1} Integral_{boundary B_rho(x)}
//! [|X|^2 - d g(grad rho, X)^2] phi dA drho` converges to the trace-free
//! part of `(grad^2 h - h g)(X, X)` divided by d (the local contribution of
//! the kernel's Green delta cancels against the angular average of the
//! bracket, which vanishes). The full quadratic form is
//! `phi(x) |X|^2 + d V(x, X)`, and the solution is the support function of
//! an F-convex set iff that form is nonnegative for every x and X.

use crate::kernel::KernelContext;
use crate::measure::{DensitySpec, MeasureSpec};
use crate::quadrature::{graded_radial_integral, QuadratureSpec, SphereRule};
use crate::solve::{solve_measure, solve_smooth};
use crate::ChristoffelError;
use lorentz_core::{minkowski_form, AmbientVector, HPoint};

fn restricted_support(
    ctx: &KernelContext,
    mu: &MeasureSpec,
    x: &AmbientVector,
    q: &QuadratureSpec,
) -> Result<f64, ChristoffelError> {
    let qn = x.mnorm_sq();
    if qn >= 0.0 || x.time() <= 0.0 {
        return Err(ChristoffelError::NotFutureTimelike(qn));
    }
    let norm = (-qn).sqrt();
    let unit = HPoint::normalize(*x)?;
    Ok(norm * solve_measure(ctx, mu, &unit, q)? / ctx.dim() as f64)
}

/// `Lambda(eta, nu)` integrated against the measure: nonnegative for all
/// pairs iff the solution is the support function of an F-convex set.
/// Symmetric in its arguments by construction.
pub fn convexity_lambda(
    ctx: &KernelContext,
    mu: &MeasureSpec,
    eta: &AmbientVector,
    nu: &AmbientVector,
    q: &QuadratureSpec,
) -> Result<f64, ChristoffelError> {
    let sum = *eta + *nu;
    Ok(restricted_support(ctx, mu, eta, q)? + restricted_support(ctx, mu, nu, q)?
        - restricted_support(ctx, mu, &sum, q)?)
}

/// Directional convexity integral for smooth data: nonnegative for every
/// `(x, X)` iff the smooth solution is convex. `x_dir` must be a unit
/// tangent vector at `x`.
pub fn convexity_integral_smooth(
    ctx: &KernelContext,
    density: &DensitySpec,
    x: &HPoint,
    x_dir: &AmbientVector,
    q: &QuadratureSpec,
) -> Result<f64, ChristoffelError> {
    q.validate()?;
    let d = ctx.dim();
    if x.dim() != d {
        return Err(ChristoffelError::UnsupportedDimension(x.dim()));
    }
    if (x_dir.mnorm_sq() - 1.0).abs() > 1.0e-8
        || minkowski_form(x_dir, x.vec()).abs() > 1.0e-8
    {
        return Err(ChristoffelError::BadQuadrature(
            "direction must be a unit tangent vector at x".into(),
        ));
    }
    let needed = x.distance(&density.center) + density.radius;
    if q.rho_max < needed {
        return Err(ChristoffelError::TruncationInsufficient { needed, given: q.rho_max });
    }
    let rule = SphereRule::at(x, q.n_angular);
    let bump = density.bump();
    let v_dm1 = ctx.unit_sphere_area();
    let mut g = |rho: f64| -> Result<f64, ChristoffelError> {
        let mut angular = 0.0;
        for (dir, w) in rule.directions.iter().zip(&rule.weights) {
            let p = x.polar_to(rho, dir)?;
            let phi = bump.eval(&p);
            if phi != 0.0 {
                let c = minkowski_form(dir, x_dir);
                angular += w * (1.0 - d as f64 * c * c) * phi;
            }
        }
        // dA = sinh^{d-1} dOmega against the 1/(v sinh^d) weight.
        Ok(angular / (v_dm1 * rho.sinh()))
    };
    graded_radial_integral(&mut g, needed, q.n_radial, q.grading)
}

/// The directional reverse second fundamental form
/// `(grad^2 h - h g)(X, X) = phi(x) |X|^2 + d V(x, X)` of the smooth
/// solution; nonnegative for every (x, unit X) iff the solution is the
/// support function of an F-convex set.
pub fn convexity_form_smooth(
    ctx: &KernelContext,
    density: &DensitySpec,
    x: &HPoint,
    x_dir: &AmbientVector,
    q: &QuadratureSpec,
) -> Result<f64, ChristoffelError> {
    let v = convexity_integral_smooth(ctx, density, x, x_dir, q)?;
    Ok(density.eval(x) + ctx.dim() as f64 * v)
}
