//! Convexity on the hyperbola: a function is the support function of an
//! F-convex curve iff h(rho+alpha) + h(rho-alpha) >= 2 cosh(alpha) h(rho)
//! for all rho, alpha (hyperbolic midpoint inequality).

/// Slack tolerance absorbing roundoff in the midpoint inequality.
const MARGIN: f64 = 1.0e-9;

#[derive(Clone, Debug)]
pub struct ConvexityReport1D {
    pub passed: bool,
    /// Smallest value of h(rho+alpha) + h(rho-alpha) - 2 cosh(alpha) h(rho).
    pub worst_margin: f64,
    /// Samples (rho, alpha) where the inequality failed beyond tolerance.
    pub failures: Vec<(f64, f64)>,
}

/// Checks the midpoint inequality at every listed sample.
pub fn convexity_1d(h: &dyn Fn(f64) -> f64, samples: &[(f64, f64)]) -> ConvexityReport1D {
    let mut worst = f64::INFINITY;
    let mut failures = Vec::new();
    for &(rho, alpha) in samples {
        let m = h(rho + alpha) + h(rho - alpha) - 2.0 * alpha.cosh() * h(rho);
        if m < worst {
            worst = m;
        }
        if m < -MARGIN {
            failures.push((rho, alpha));
        }
    }
    ConvexityReport1D { passed: failures.is_empty(), worst_margin: worst, failures }
}

/// Uniform sample grid: rho in [-rho_max, rho_max] (n_rho nodes, includes 0
/// when n_rho is odd) crossed with alpha in (0, rho_max] (n_alpha nodes).
pub fn convexity_samples(rho_max: f64, n_rho: usize, n_alpha: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n_rho * n_alpha);
    for i in 0..n_rho {
        let rho = if n_rho == 1 {
            0.0
        } else {
            -rho_max + 2.0 * rho_max * i as f64 / (n_rho - 1) as f64
        };
        for j in 1..=n_alpha {
            out.push((rho, rho_max * j as f64 / n_alpha as f64));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solve::segment_support;

    #[test]
    fn segment_support_is_convex() {
        let samples = convexity_samples(2.5, 41, 16);
        let report = convexity_1d(&segment_support, &samples);
        assert!(report.passed, "worst margin {}", report.worst_margin);
    }

    #[test]
    fn negative_exponential_kink_is_convex() {
        // -e^{-|t|}/2 differs from |sinh t|/2 by -cosh(t)/2, a homogeneous
        // solution, so it supports the same curve.
        let samples = convexity_samples(2.5, 41, 16);
        let report = convexity_1d(&|t: f64| -0.5 * (-t.abs()).exp(), &samples);
        assert!(report.passed, "worst margin {}", report.worst_margin);
    }

    #[test]
    fn positive_exponential_kink_fails() {
        let samples = convexity_samples(2.5, 41, 16);
        let report = convexity_1d(&|t: f64| 0.5 * (-t.abs()).exp(), &samples);
        assert!(!report.passed);
        assert!(report.worst_margin < -0.1);
        // The violation shows up straddling the concave kink at 0.
        assert!(report.failures.iter().any(|&(rho, _)| rho == 0.0));
    }

    #[test]
    fn sample_grid_covers_the_origin() {
        let samples = convexity_samples(1.0, 5, 2);
        assert_eq!(samples.len(), 10);
        assert!(samples.iter().any(|&(rho, _)| rho == 0.0));
    }
}
