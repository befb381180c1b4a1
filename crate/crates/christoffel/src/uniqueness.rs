//! Boundary-at-infinity comparison of two solutions.
//!
//! Two continuous solutions of the same Christoffel equation agree once they
//! induce the same support function at infinity, so comparing the limits of
//! h/cosh(rho) along a direction set is a practical uniqueness check.

use crate::ChristoffelError;
use lorentz_core::{AmbientVector, HPoint};
use support_fn::{support_at_infinity, SupportSpec};

/// Relative tolerance on the per-direction limits; the rho = 20 sample has
/// converged far below this for every spec variant we evaluate.
const LIMIT_TOL: f64 = 1.0e-3;

/// Per-direction limits of h/cosh(rho) for two specs, with their comparison.
/// Divergent directions are recorded as +infinity.
#[derive(Clone, Debug)]
pub struct UniquenessReport {
    pub limits1: Vec<f64>,
    pub limits2: Vec<f64>,
    /// Largest finite per-direction gap; infinite when exactly one side
    /// diverges in some direction.
    pub max_difference: f64,
    pub equal: bool,
}

/// Estimates the boundary value of each spec along every direction and
/// reports whether the two agree within `LIMIT_TOL` everywhere.
pub fn check_uniqueness_at_infinity(
    h1: &SupportSpec,
    h2: &SupportSpec,
    base: &HPoint,
    directions: &[AmbientVector],
) -> Result<UniquenessReport, ChristoffelError> {
    let mut limits1 = Vec::with_capacity(directions.len());
    let mut limits2 = Vec::with_capacity(directions.len());
    let mut max_difference = 0.0f64;
    let mut equal = true;
    for theta in directions {
        let a = support_at_infinity(h1, base, theta)?;
        let b = support_at_infinity(h2, base, theta)?;
        let va = if a.is_infinite { f64::INFINITY } else { a.value };
        let vb = if b.is_infinite { f64::INFINITY } else { b.value };
        limits1.push(va);
        limits2.push(vb);
        match (a.is_infinite, b.is_infinite) {
            (true, true) => {}
            (false, false) => {
                let gap = (va - vb).abs();
                max_difference = max_difference.max(gap);
                if gap > LIMIT_TOL * (1.0 + va.abs().max(vb.abs())) {
                    equal = false;
                }
            }
            _ => {
                max_difference = f64::INFINITY;
                equal = false;
            }
        }
    }
    Ok(UniquenessReport {
        limits1,
        limits2,
        max_difference,
        equal,
    })
}
