//! Explicit solutions of h'' - h = mu on the hyperbola.

use crate::measure::{Bump1D, Density1D, OneDimMeasure, Profile1D};
use crate::quad::integrate;
use std::sync::Arc;

/// A solution split into a particular part and the homogeneous coefficients
/// `a cosh t + b sinh t`.
#[derive(Clone)]
pub struct Solution1D {
    particular: Profile1D,
    pub a: f64,
    pub b: f64,
}

impl Solution1D {
    pub fn eval(&self, t: f64) -> f64 {
        (self.particular)(t) + self.a * t.cosh() + self.b * t.sinh()
    }

    pub fn particular(&self, t: f64) -> f64 {
        (self.particular)(t)
    }
}

/// General solution of h'' - h = mu by convolution with -e^{-|t-s|}/2:
/// h(t) = -sum_i w_i e^{-|t-t_i|}/2 - (1/2) integral e^{-|t-s|} phi(s) ds
/// + a cosh t + b sinh t. For a positive measure the particular part is
/// negative (h_{delta_0} = -e^{-|t|}/2).
pub fn solve_1d(mu: &OneDimMeasure, a: f64, b: f64) -> Solution1D {
    let atoms: Vec<(f64, f64)> = mu.atoms().to_vec();
    let density = mu.density().cloned();
    let particular = move |t: f64| {
        let mut h: f64 = atoms.iter().map(|&(s, w)| -0.5 * w * (-(t - s).abs()).exp()).sum();
        if let Some(d) = &density {
            h -= 0.5 * d.weighted_integral(&|s| (-(t - s).abs()).exp(), Some(t));
        }
        h
    };
    Solution1D { particular: Arc::new(particular), a, b }
}

/// Variation-of-parameters form anchored at t = 1:
/// h(t) = integral_1^t sinh(t-s) phi(s) ds + c cosh t + d sinh t.
pub fn solve_1d_smooth(phi: Profile1D, c: f64, d: f64) -> Solution1D {
    let particular = move |t: f64| integrate(&|s| (t - s).sinh() * phi(s), 1.0, t, 1.0e-12);
    Solution1D { particular: Arc::new(particular), a: c, b: d }
}

/// Converts the homogeneous coefficients of the convolution form into the
/// ones for the variation-of-parameters form, so that
/// `solve_1d(mu, a, b)` equals `solve_1d_smooth(phi, c, d)` for a measure
/// with compactly supported density phi and no atoms.
pub fn smooth_from_convolution(density: &Density1D, a: f64, b: f64) -> (f64, f64) {
    let (lower, upper) = density.bounds();
    let head = upper.min(1.0);
    let p = if lower < head {
        integrate(&|s: f64| s.cosh() * density.eval(s), lower, head, 1.0e-12)
    } else {
        0.0
    };
    let q = if lower < head {
        integrate(&|s: f64| s.sinh() * density.eval(s), lower, head, 1.0e-12)
    } else {
        0.0
    };
    let e = integrate(&|s: f64| (-s).exp() * density.eval(s), lower, upper, 1.0e-12);
    (a - q - 0.5 * e, b + p - 0.5 * e)
}

/// Pairs `h` with `f'' - f` for a C^2 bump: for a solution of h'' - h = mu
/// this equals the measure pairing `integral f d(mu)`. Kink positions of `h`
/// inside the bump support must be listed so the quadrature splits there.
pub fn distributional_pairing(h: &dyn Fn(f64) -> f64, bump: &Bump1D, kinks: &[f64]) -> f64 {
    let (lo, hi) = bump.support();
    let g = |t: f64| h(t) * (bump.second_derivative(t) - bump.eval(t));
    let mut cuts: Vec<f64> = kinks.iter().copied().filter(|&k| k > lo && k < hi).collect();
    cuts.sort_by(f64::total_cmp);
    let mut total = 0.0;
    let mut left = lo;
    for k in cuts {
        total += integrate(&g, left, k, 1.0e-11);
        left = k;
    }
    total + integrate(&g, left, hi, 1.0e-11)
}

/// Support function of the segment dual to a unit atom at 0: |sinh t|/2,
/// the convex representative -e^{-|t|}/2 + cosh(t)/2 of the Dirac solution.
pub fn segment_support(t: f64) -> f64 {
    0.5 * t.sinh().abs()
}

/// Profile of the zero-mean-radius surface: sinh(t) atan(1/sinh t) - 1,
/// extended evenly through the kink at t = 0 where the value is -1. Its
/// radius of curvature is -1/cosh^2 t away from the kink.
pub fn zero_mean_profile(t: f64) -> f64 {
    let s = t.sinh();
    if s == 0.0 {
        -1.0
    } else {
        s * (1.0 / s).atan() - 1.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::radius_1d;

    #[test]
    fn dirac_solution_is_negative_exponential() {
        let mu = OneDimMeasure::dirac(0.0, 1.0).unwrap();
        let h = solve_1d(&mu, 0.0, 0.0);
        for &t in &[-2.0, -0.5, 0.0, 0.3, 1.7] {
            assert!((h.eval(t) + 0.5 * (-t.abs()).exp()).abs() < 1.0e-14);
        }
    }

    #[test]
    fn dirac_plus_half_cosh_is_the_segment() {
        let mu = OneDimMeasure::dirac(0.0, 1.0).unwrap();
        let h = solve_1d(&mu, 0.5, 0.0);
        for &t in &[-1.4, -0.2, 0.0, 0.6, 2.3] {
            assert!((h.eval(t) - segment_support(t)).abs() < 1.0e-14);
        }
    }

    #[test]
    fn empty_measure_gives_homogeneous_solution() {
        let h = solve_1d(&OneDimMeasure::empty(), 0.7, -0.3);
        for &t in &[-1.0, 0.0, 2.0] {
            assert!((h.eval(t) - (0.7 * t.cosh() - 0.3 * t.sinh())).abs() < 1.0e-15);
        }
    }

    #[test]
    fn pairing_oracle_recovers_the_measure() {
        let bumpy: Profile1D = Arc::new(|s: f64| 1.0 + 0.5 * (2.0 * s).cos());
        let d = Density1D::new(bumpy, -1.0, 2.0).unwrap();
        let mu = OneDimMeasure::new(vec![(0.4, 1.7), (-0.9, 0.6)], Some(d)).unwrap();
        let h = solve_1d(&mu, 0.2, -0.1);
        let kinks = [0.4, -0.9];
        for bump in [Bump1D::new(0.0, 1.5), Bump1D::new(0.5, 2.5), Bump1D::new(-1.0, 0.8)] {
            let lhs = distributional_pairing(&|t| h.eval(t), &bump, &kinks);
            let rhs = mu.pair_with(&|t| bump.eval(t));
            assert!((lhs - rhs).abs() < 1.0e-8, "pairing {lhs} vs measure {rhs}");
        }
    }

    #[test]
    fn smooth_form_with_unit_density() {
        let h = solve_1d_smooth(Arc::new(|_| 1.0), 0.0, 0.0);
        for &t in &[-1.0, 0.0, 1.0, 2.5] {
            assert!((h.eval(t) - ((t - 1.0).cosh() - 1.0)).abs() < 1.0e-10);
            let r = radius_1d(&|x| h.eval(x), t).unwrap();
            assert!((r - 1.0).abs() < 1.0e-7, "residual radius {r} at {t}");
        }
    }

    #[test]
    fn homogeneous_coefficient_conversion_matches() {
        let bump = Bump1D::new(0.3, 1.2);
        let phi: Profile1D = Arc::new(move |s| bump.eval(s));
        let d = Density1D::new(phi.clone(), -0.9, 1.5).unwrap();
        let mu = OneDimMeasure::new(vec![], Some(d.clone())).unwrap();
        let (a, b) = (0.31, -0.27);
        let conv = solve_1d(&mu, a, b);
        let (c, dd) = smooth_from_convolution(&d, a, b);
        let smooth = solve_1d_smooth(phi, c, dd);
        for &t in &[-2.0, -0.4, 0.0, 0.8, 1.9, 3.0] {
            let u = conv.eval(t);
            let v = smooth.eval(t);
            assert!((u - v).abs() < 1.0e-8, "t={t}: {u} vs {v}");
        }
    }

    #[test]
    fn zero_mean_profile_values() {
        assert!((zero_mean_profile(0.0) + 1.0).abs() < 1.0e-15);
        assert!((zero_mean_profile(1.3) - zero_mean_profile(-1.3)).abs() < 1.0e-15);
        // Large t: h -> 0 from below like -1/(3 sinh^2).
        assert!(zero_mean_profile(5.0) < 0.0);
        assert!(zero_mean_profile(5.0) > -1.0e-3);
    }
}
