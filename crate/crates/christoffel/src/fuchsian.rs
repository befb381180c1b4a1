//! Periodic Christoffel solving on the d = 1 hyperboloid.
//!
//! A density invariant under the translation s -> s + T is resolved by
//! convolving with the one-dimensional Green kernel -e^{-|s-x|}/2 one period
//! block at a time; blocks decay geometrically with ratio e^{-T}.

use crate::quadrature::adaptive_integral;
use crate::ChristoffelError;

const TAIL: f64 = 1.0e-14;
const BLOCK_TOL: f64 = 1.0e-15;

/// Solves h'' - h = phi for a T-periodic density phi at the hyperbolic
/// coordinate `x`, returning the unique bounded (hence T-periodic) solution
/// h(x) = -(1/2) integral of e^{-|s-x|} phi(s) ds over the whole line.
pub fn fuchsian_solve_d1(
    period: f64,
    phi: &dyn Fn(f64) -> f64,
    x: f64,
) -> Result<f64, ChristoffelError> {
    if !(period > 0.0) || !period.is_finite() {
        return Err(ChristoffelError::BadQuadrature(format!(
            "period must be positive and finite, got {period}"
        )));
    }
    // Integrand is smooth away from the kink at s = x; each side is summed
    // over period blocks anchored at the kink, so no block straddles it.
    let right = |s: f64| (x - s).exp() * phi(s);
    let left = |s: f64| (s - x).exp() * phi(s);
    let mut total = 0.0;
    let mut m = 0usize;
    loop {
        let a = x + m as f64 * period;
        let block_r = adaptive_integral(&right, a, a + period, BLOCK_TOL);
        let b = x - m as f64 * period;
        let block_l = adaptive_integral(&left, b - period, b, BLOCK_TOL);
        total += block_r + block_l;
        m += 1;
        // Periodicity makes consecutive blocks exact geometric rescalings,
        // so a small block bounds the whole remaining tail.
        if block_r.abs() < TAIL && block_l.abs() < TAIL && m >= 2 {
            break;
        }
        if m > 200_000 {
            return Err(ChristoffelError::BadQuadrature(
                "periodized tail failed to converge".to_string(),
            ));
        }
    }
    Ok(-0.5 * total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn constant_density_gives_constant_solution() {
        let h = fuchsian_solve_d1(2.0, &|_| 1.3, 0.7).unwrap();
        assert!((h + 1.3).abs() < 1.0e-10, "got {h}");
        let h = fuchsian_solve_d1(0.5, &|_| -0.4, -3.1).unwrap();
        assert!((h - 0.4).abs() < 1.0e-10, "got {h}");
    }

    #[test]
    fn cosine_mode_matches_ode_solution() {
        // h'' - h = c + eps cos(w s) has the bounded solution
        // -c - eps cos(w x)/(1 + w^2).
        let t = 3.0;
        let w = 2.0 * PI / t;
        let c = 0.8;
        let eps = 0.35;
        let phi = move |s: f64| c + eps * (w * s).cos();
        for &x in &[0.0, 0.4, 1.1, -2.6, 7.3] {
            let h = fuchsian_solve_d1(t, &phi, x).unwrap();
            let expect = -c - eps * (w * x).cos() / (1.0 + w * w);
            assert!((h - expect).abs() < 1.0e-8, "x={x}: {h} vs {expect}");
        }
    }

    #[test]
    fn solution_is_periodic() {
        let t = 1.7;
        let w = 2.0 * PI / t;
        let phi = move |s: f64| 1.0 + 0.5 * (w * s).cos() - 0.2 * (2.0 * w * s).sin();
        for &x in &[0.0, 0.33, -1.2] {
            let a = fuchsian_solve_d1(t, &phi, x).unwrap();
            let b = fuchsian_solve_d1(t, &phi, x + t).unwrap();
            assert!((a - b).abs() < 1.0e-10, "x={x}: {a} vs {b}");
        }
    }

    #[test]
    fn rejects_bad_period() {
        assert!(fuchsian_solve_d1(0.0, &|_| 1.0, 0.0).is_err());
        assert!(fuchsian_solve_d1(-2.0, &|_| 1.0, 0.0).is_err());
    }
}
