//! The radial Green kernel `k` and its derivatives.
//!
//! `k(rho) = (cosh rho / v_{d-1}) * Integral_{+infinity}^{rho} dt / (sinh^{d-1} t cosh^2 t)`
//! with `v_{d-1}` the area of the unit (d-1)-sphere. Closed forms:
//!   d = 1:  k = -e^{-rho}/2
//!   d = 2:  k = (1/2pi) [1 + (cosh rho / 2) ln((cosh rho - 1)/(cosh rho + 1))]
//! For d = 3 the production path is adaptive quadrature after the tail
//! substitution `u = e^{-t}`, which maps the integral to
//! `-(cosh rho / v_2) * Integral_0^{e^{-rho}} 2^{d+1} u^d / ((1-u^2)^{d-1} (1+u^2)^2) du`.
//!
//! For large rho the d = 2 closed form cancels catastrophically; the exact
//! series `k = -(1/2pi) sum_{m>=1} w^{2m}/(2m+1)` with `w = 1/cosh rho`
//! (from expanding the logarithm) is used instead.

use crate::quadrature::adaptive_integral;
use crate::ChristoffelError;

/// Dimension context for the kernel: H^d with geodesic sphere area
/// `A(rho) = v_{d-1} sinh^{d-1}(rho)`, `v_0 = 2`, `v_1 = 2pi`, `v_2 = 4pi`.
#[derive(Clone, Copy, Debug)]
pub struct KernelContext {
    d: usize,
}

impl KernelContext {
    pub fn new(d: usize) -> Result<Self, ChristoffelError> {
        if !(1..=3).contains(&d) {
            return Err(ChristoffelError::UnsupportedDimension(d));
        }
        Ok(Self { d })
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    /// Area of the unit (d-1)-sphere.
    pub fn unit_sphere_area(&self) -> f64 {
        match self.d {
            1 => 2.0,
            2 => std::f64::consts::TAU,
            _ => 4.0 * std::f64::consts::PI,
        }
    }

    /// Area `A(rho)` of the geodesic sphere of radius rho in H^d.
    pub fn sphere_area(&self, rho: f64) -> f64 {
        self.unit_sphere_area() * rho.sinh().powi(self.d as i32 - 1)
    }
}

/// Exact tail series for d = 2: `-(1/2pi) sum w^{2m}/(2m+1)`, `w = sech rho`.
fn k2_series(w2: f64) -> f64 {
    let mut sum = 0.0;
    let mut pw = w2;
    for m in 1..200 {
        let term = pw / (2 * m + 1) as f64;
        sum += term;
        if term < 1.0e-18 * sum {
            break;
        }
        pw *= w2;
    }
    -sum / std::f64::consts::TAU
}

fn k2_closed(rho: f64) -> f64 {
    let c = rho.cosh();
    if rho > 2.0 {
        k2_series(1.0 / (c * c))
    } else {
        // (c-1)/(c+1) = tanh^2(rho/2); the direct ratio underflows to 0 for
        // rho below ~1.5e-8 where cosh rounds to 1.
        (1.0 + c * (0.5 * rho).tanh().ln()) / std::f64::consts::TAU
    }
}

/// The kernel `k(rho) < 0`. Closed form for d = 1 and 2, adaptive quadrature
/// of the tail-substituted integral for d = 3.
pub fn kernel_k(ctx: &KernelContext, rho: f64) -> Result<f64, ChristoffelError> {
    if rho <= 0.0 || !rho.is_finite() {
        return Err(ChristoffelError::NonpositiveRadius(rho));
    }
    Ok(match ctx.d {
        1 => -0.5 * (-rho).exp(),
        2 => k2_closed(rho),
        _ => kernel_quadrature(ctx, rho)?,
    })
}

/// Kernel evaluated by adaptive quadrature in the substituted variable
/// `u = e^{-t}` (any d; used as the production path for d = 3 and as a
/// cross-check of the closed forms).
pub fn kernel_quadrature(ctx: &KernelContext, rho: f64) -> Result<f64, ChristoffelError> {
    if rho <= 0.0 || !rho.is_finite() {
        return Err(ChristoffelError::NonpositiveRadius(rho));
    }
    let d = ctx.d as i32;
    let scale = 2.0f64.powi(d + 1);
    let integrand = |u: f64| {
        let u2 = u * u;
        scale * u.powi(d) / ((1.0 - u2).powi(d - 1) * (1.0 + u2).powi(2))
    };
    let integral = adaptive_integral(&integrand, 0.0, (-rho).exp(), 1.0e-13);
    Ok(-rho.cosh() / ctx.unit_sphere_area() * integral)
}

/// `(k, k', k'')` at rho. Analytic for d = 1, 2. For d = 3 the derivatives
/// come from the exact identities
/// `k' = tanh(rho) k + 1/(A(rho) cosh rho)` (differentiating the defining
/// integral) and the ODE `k'' = d k - (d-1) coth(rho) k'`; both are exact
/// given k, so ODE-residual checks must not use them (see
/// `kernel_ode_residual`).
pub fn kernel_derivatives(
    ctx: &KernelContext,
    rho: f64,
) -> Result<(f64, f64, f64), ChristoffelError> {
    if rho <= 0.0 || !rho.is_finite() {
        return Err(ChristoffelError::NonpositiveRadius(rho));
    }
    match ctx.d {
        1 => {
            let e = 0.5 * (-rho).exp();
            Ok((-e, e, -e))
        }
        2 => {
            let (s, c) = (rho.sinh(), rho.cosh());
            let tau = std::f64::consts::TAU;
            if rho > 2.0 {
                // Series forms free of cancellation: with S = sum w^{2m}/(2m+1),
                // k = -S/2pi, k' = (1/2pi)(1/(s c) - tanh(rho) S),
                // k'' = -(1/2pi)(1/s^2 + S).
                let w2 = 1.0 / (c * c);
                let s_sum = -k2_series(w2) * tau;
                Ok((
                    -s_sum / tau,
                    (1.0 / (s * c) - rho.tanh() * s_sum) / tau,
                    -(1.0 / (s * s) + s_sum) / tau,
                ))
            } else {
                let l = 2.0 * (0.5 * rho).tanh().ln();
                Ok((
                    (1.0 + 0.5 * c * l) / tau,
                    (0.5 * s * l + c / s) / tau,
                    (0.5 * c * l + 1.0 - 1.0 / (s * s)) / tau,
                ))
            }
        }
        _ => {
            let k = kernel_k(ctx, rho)?;
            let kd = rho.tanh() * k + 1.0 / (ctx.sphere_area(rho) * rho.cosh());
            let kdd = ctx.d as f64 * k - (ctx.d as f64 - 1.0) * (1.0 / rho.tanh()) * kd;
            Ok((k, kd, kdd))
        }
    }
}

/// Maximum of `|k'' + (d-1) coth(rho) k' - d k|` over the grid. Derivatives
/// are analytic where closed forms exist (d = 1, 2); for d = 3 they are
/// 5-point central differences of the quadrature kernel, so the residual is
/// an independent check rather than a tautology.
pub fn kernel_ode_residual(ctx: &KernelContext, grid: &[f64]) -> Result<f64, ChristoffelError> {
    let mut worst = 0.0f64;
    for &rho in grid {
        if rho <= 0.0 {
            return Err(ChristoffelError::NonpositiveRadius(rho));
        }
        let (k, kd, kdd) = if ctx.d <= 2 {
            kernel_derivatives(ctx, rho)?
        } else {
            // Step balances 4th-order truncation against quadrature noise;
            // proportional to rho because derivatives grow like 1/rho^n.
            let h = (3.0e-3 * rho).min(0.05);
            let mut v = [0.0; 5];
            for (i, slot) in v.iter_mut().enumerate() {
                *slot = kernel_k(ctx, rho + h * (i as f64 - 2.0))?;
            }
            let kd = (v[0] - 8.0 * v[1] + 8.0 * v[3] - v[4]) / (12.0 * h);
            let kdd = (-v[0] + 16.0 * v[1] - 30.0 * v[2] + 16.0 * v[3] - v[4]) / (12.0 * h * h);
            (v[2], kd, kdd)
        };
        let res = (kdd + (ctx.d as f64 - 1.0) / rho.tanh() * kd - ctx.d as f64 * k).abs();
        worst = worst.max(res);
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    /// Antiderivative evaluation of the d = 3 integral (exact):
    /// k_3 = (cosh rho / 4pi) (2 - coth rho - tanh rho).
    fn k3_exact(rho: f64) -> f64 {
        rho.cosh() / (4.0 * std::f64::consts::PI) * (2.0 - 1.0 / rho.tanh() - rho.tanh())
    }

    #[test]
    fn d1_kernel_is_exponential() {
        let ctx = KernelContext::new(1).unwrap();
        for i in 1..=100 {
            let rho = 0.1 * i as f64;
            assert!((kernel_k(&ctx, rho).unwrap() + 0.5 * (-rho).exp()).abs() < 1e-16);
        }
    }

    #[test]
    fn d2_value_at_one_matches_frozen_literal() {
        let ctx = KernelContext::new(2).unwrap();
        // Closed form evaluated at rho = 1 with 50-digit arithmetic.
        assert_relative_eq!(
            kernel_k(&ctx, 1.0).unwrap(),
            -0.0304241827689457649,
            epsilon = 1e-15
        );
    }

    #[test]
    fn quadrature_matches_closed_forms() {
        for d in [1usize, 2] {
            let ctx = KernelContext::new(d).unwrap();
            for rho in [0.3, 1.0, 2.5, 6.0] {
                let q = kernel_quadrature(&ctx, rho).unwrap();
                let c = kernel_k(&ctx, rho).unwrap();
                assert!((q - c).abs() < 1e-11 * (1.0 + c.abs()), "d={} rho={}: {} vs {}", d, rho, q, c);
            }
        }
    }

    #[test]
    fn d3_quadrature_matches_antiderivative() {
        let ctx = KernelContext::new(3).unwrap();
        for rho in [0.05, 0.4, 1.0, 3.0, 8.0] {
            assert_relative_eq!(
                kernel_k(&ctx, rho).unwrap(),
                k3_exact(rho),
                epsilon = 1e-12,
                max_relative = 1e-10
            );
        }
    }

    #[test]
    fn series_and_log_forms_agree_near_switch() {
        let ctx = KernelContext::new(2).unwrap();
        for rho in [1.99f64, 2.0, 2.01, 3.0] {
            let c = rho.cosh();
            let log_form = (1.0 + 0.5 * c * ((c - 1.0) / (c + 1.0)).ln()) / std::f64::consts::TAU;
            assert_relative_eq!(kernel_k(&ctx, rho).unwrap(), log_form, max_relative = 1e-10);
        }
    }

    #[test]
    fn kernel_is_negative_increasing_to_zero() {
        for d in 1..=3usize {
            let ctx = KernelContext::new(d).unwrap();
            let mut prev = f64::NEG_INFINITY;
            for i in 1..=60 {
                let rho = 0.2 * i as f64;
                let k = kernel_k(&ctx, rho).unwrap();
                assert!(k < 0.0, "d={} rho={}", d, rho);
                assert!(k > prev, "monotonicity d={} rho={}", d, rho);
                prev = k;
            }
            // Tail magnitude at rho = 12 scales like e^{-d rho}.
            assert!(prev.abs() < (-12.0 * d as f64).exp(), "k decays, d={}", d);
        }
    }

    #[test]
    fn decay_rate_is_exp_minus_d_rho() {
        for d in 1..=3usize {
            let ctx = KernelContext::new(d).unwrap();
            let r1 = kernel_k(&ctx, 6.0).unwrap().abs();
            let r2 = kernel_k(&ctx, 7.0).unwrap().abs();
            assert_relative_eq!((r1 / r2).ln(), d as f64, epsilon = 0.02);
        }
    }

    #[test]
    fn ode_residual_small_on_acceptance_grid() {
        let grid: Vec<f64> = (0..200).map(|i| 0.05 + i as f64 * (10.0 - 0.05) / 199.0).collect();
        let bounds = [1e-10, 1e-6, 1e-6];
        for d in 1..=3usize {
            let ctx = KernelContext::new(d).unwrap();
            let res = kernel_ode_residual(&ctx, &grid).unwrap();
            assert!(res < bounds[d - 1], "d={} residual {}", d, res);
        }
    }

    #[test]
    fn derivative_identity_and_normalization() {
        // k'(rho) A(rho) -> 1 as rho -> 0, and the defining identity
        // k' = tanh(rho) k + 1/(A cosh) holds for the analytic forms.
        for d in 1..=3usize {
            let ctx = KernelContext::new(d).unwrap();
            // Convergence is O(rho) for d = 1 (k' A - 1 = e^{-rho} - 1) and
            // faster for d >= 2, so the bound reflects the slowest rate.
            for rho in [1.0e-3, 1.0e-2] {
                let (_, kd, _) = kernel_derivatives(&ctx, rho).unwrap();
                assert!((kd * ctx.sphere_area(rho) - 1.0).abs() < 2.0 * rho, "d={} rho={}", d, rho);
            }
            let (k, kd, _) = kernel_derivatives(&ctx, 1.3).unwrap();
            let ident = 1.3f64.tanh() * k + 1.0 / (ctx.sphere_area(1.3) * 1.3f64.cosh());
            assert_relative_eq!(kd, ident, epsilon = 1e-12);
        }
    }

    #[test]
    fn integral_of_kernel_against_sphere_area_is_one_over_d() {
        // Constant density phi = 1 solves (1/d) Delta h - h = phi with
        // h = -1, so d * Integral k A = -1.
        for d in 1..=3usize {
            let ctx = KernelContext::new(d).unwrap();
            let f = |rho: f64| {
                if rho <= 0.0 {
                    0.0
                } else {
                    kernel_k(&ctx, rho).unwrap() * ctx.sphere_area(rho)
                }
            };
            let coarse = adaptive_integral(&f, 0.0, 40.0, 1.0e-9);
            assert_relative_eq!(coarse * d as f64, -1.0, epsilon = 1e-6);
        }
    }

    #[test]
    fn rejects_nonpositive_radius() {
        let ctx = KernelContext::new(2).unwrap();
        assert!(kernel_k(&ctx, 0.0).is_err());
        assert!(kernel_k(&ctx, -1.0).is_err());
        assert!(KernelContext::new(4).is_err());
    }
}
