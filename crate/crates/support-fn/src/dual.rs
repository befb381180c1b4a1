//! Duality of F-convex sets through the radial function.
//!
//! For a strictly negative support function h (the set stays inside the
//! future cone), the radial function of the underlying set is
//! `R(eta) = sup_nu h(nu) / <eta, nu>` over nu in H^d, and the dual set has
//! support function `h*(eta) = -1 / R(eta)`.

use crate::field::SolutionField;
use crate::optimize::maximize_on_hyperboloid;
use crate::spec::SupportSpec;
use crate::SupportError;
use lorentz_core::{minkowski_form, HPoint};

/// Search and tabulation parameters for duality.
#[derive(Clone, Copy, Debug)]
pub struct DualGrid {
    /// Radius of the tabulation chart for `dual`.
    pub chart_rho_max: f64,
    pub n_rho: usize,
    pub n_theta: usize,
    /// Radius of the geodesic ball searched for the supremum.
    pub search_rho: f64,
    pub n_coarse: usize,
    pub refine_steps: usize,
}

impl Default for DualGrid {
    fn default() -> Self {
        Self {
            chart_rho_max: 2.0,
            n_rho: 41,
            n_theta: 48,
            search_rho: 8.0,
            n_coarse: 4096,
            refine_steps: 50,
        }
    }
}

/// Radial function `R(eta) = sup_nu h(nu)/<eta,nu>` of a strictly negative
/// specification. Points where the spec is not evaluable (outside a
/// tabulation chart) are skipped; a nonnegative support value anywhere in
/// the search ball is an error.
pub fn radial_function(
    spec: &SupportSpec,
    eta: &HPoint,
    grid: &DualGrid,
) -> Result<f64, SupportError> {
    let mut positive: Option<f64> = None;
    let result = maximize_on_hyperboloid(
        eta,
        grid.search_rho,
        grid.n_coarse,
        grid.refine_steps,
        |nu| match spec.eval(nu) {
            Ok(h) if h < -1.0e-14 => Some(h / minkowski_form(eta.vec(), nu.vec())),
            Ok(h) => {
                positive.get_or_insert(h);
                None
            }
            Err(_) => None,
        },
    );
    if let Some(value) = positive {
        return Err(SupportError::NotStrictlyNegative { value });
    }
    Ok(result?.value)
}

/// Support function of the dual set at one normal: `-1/R(eta)`.
pub fn dual_value(spec: &SupportSpec, eta: &HPoint, grid: &DualGrid) -> Result<f64, SupportError> {
    Ok(-1.0 / radial_function(spec, eta, grid)?)
}

/// Tabulates the dual support function on a polar chart about the base
/// point of H^d (d = 1 or 2).
pub fn dual(spec: &SupportSpec, d: usize, grid: &DualGrid) -> Result<SupportSpec, SupportError> {
    let base = HPoint::basepoint(d);
    let field = match d {
        1 => SolutionField::build_d1(
            &base,
            -grid.chart_rho_max,
            grid.chart_rho_max,
            grid.n_rho,
            |p| dual_value(spec, p, grid),
        )?,
        2 => SolutionField::build_d2(&base, grid.chart_rho_max, grid.n_rho, grid.n_theta, |p| {
            dual_value(spec, p, grid)
        })?,
        other => return Err(SupportError::UnsupportedDimension(other)),
    };
    Ok(SupportSpec::Tabulated(field))
}
