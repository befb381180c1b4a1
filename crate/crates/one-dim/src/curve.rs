//! Boundary curve reconstruction from a d = 1 support function, and the
//! radius of curvature h'' - h (the S_1 density of the curve).

use crate::OneDimError;

/// First-derivative step for smooth points (fourth-order stencil).
const D1_STEP: f64 = 1.0e-3;
/// One-sided probe step for kink detection.
const SIDE_STEP: f64 = 1.0e-5;
/// Second-derivative step for the radius (fourth-order stencil).
const D2_STEP: f64 = 1.0e-2;

/// A sampled point of the boundary curve in the Minkowski plane, with
/// coordinates (x1, x2), x2 timelike. At a kink of the support function the
/// two one-sided limits are the endpoints of a straight edge of the curve.
#[derive(Clone, Copy, Debug)]
pub enum CurvePoint {
    Smooth { rho: f64, x: [f64; 2] },
    Kink { rho: f64, before: [f64; 2], after: [f64; 2] },
}

fn point(h: f64, hp: f64, rho: f64) -> [f64; 2] {
    let (c, s) = (rho.cosh(), rho.sinh());
    [hp * c - h * s, hp * s - h * c]
}

/// Samples c(rho) = h'(rho)(cosh, sinh) - h(rho)(sinh, cosh) on the grid.
/// Derivatives are taken by central differences; where the one-sided slopes
/// disagree the point is emitted as a `Kink` carrying both limits.
pub fn curve_from_support(h: &dyn Fn(f64) -> f64, grid: &[f64]) -> Vec<CurvePoint> {
    grid.iter()
        .map(|&rho| {
            let v = h(rho);
            let s = SIDE_STEP;
            let fwd = (-3.0 * v + 4.0 * h(rho + s) - h(rho + 2.0 * s)) / (2.0 * s);
            let bwd = (3.0 * v - 4.0 * h(rho - s) + h(rho - 2.0 * s)) / (2.0 * s);
            if (fwd - bwd).abs() > 1.0e-4 * (1.0 + fwd.abs()) {
                CurvePoint::Kink {
                    rho,
                    before: point(v, bwd, rho),
                    after: point(v, fwd, rho),
                }
            } else {
                let d = D1_STEP;
                let hp = (h(rho - 2.0 * d) - 8.0 * h(rho - d) + 8.0 * h(rho + d)
                    - h(rho + 2.0 * d))
                    / (12.0 * d);
                CurvePoint::Smooth { rho, x: point(v, hp, rho) }
            }
        })
        .collect()
}

/// Radius of curvature h''(rho) - h(rho) by a fourth-order stencil; errors
/// out when a second-order stencil disagrees, which flags non-smooth points.
pub fn radius_1d(h: &dyn Fn(f64) -> f64, rho: f64) -> Result<f64, OneDimError> {
    let d = D2_STEP;
    let v = h(rho);
    let (m2, m1, p1, p2) = (h(rho - 2.0 * d), h(rho - d), h(rho + d), h(rho + 2.0 * d));
    let second5 = (-m2 + 16.0 * m1 - 30.0 * v + 16.0 * p1 - p2) / (12.0 * d * d);
    let second3 = (m1 - 2.0 * v + p1) / (d * d);
    if (second5 - second3).abs() > 1.0e-2 * (1.0 + second5.abs() + second3.abs()) {
        return Err(OneDimError::NonSmoothPoint(rho));
    }
    Ok(second5 - v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::integrate;
    use crate::solve::{segment_support, zero_mean_profile};

    fn minkowski_length(a: [f64; 2], b: [f64; 2]) -> f64 {
        let dx = b[0] - a[0];
        let dt = b[1] - a[1];
        (dx * dx - dt * dt).max(0.0).sqrt()
    }

    #[test]
    fn constant_support_gives_the_hyperbola() {
        let grid: Vec<f64> = (0..21).map(|i| -1.0 + 0.1 * i as f64).collect();
        for p in curve_from_support(&|_| -1.0, &grid) {
            match p {
                CurvePoint::Smooth { rho, x } => {
                    assert!((x[0] - rho.sinh()).abs() < 1.0e-9);
                    assert!((x[1] - rho.cosh()).abs() < 1.0e-9);
                }
                CurvePoint::Kink { .. } => panic!("constant support has no kinks"),
            }
        }
    }

    #[test]
    fn segment_support_emits_its_edge_at_the_kink() {
        let curve = curve_from_support(&segment_support, &[-0.5, 0.0, 0.5]);
        match curve[1] {
            CurvePoint::Kink { before, after, .. } => {
                assert!((before[0] + 0.5).abs() < 1.0e-4);
                assert!(before[1].abs() < 1.0e-4);
                assert!((after[0] - 0.5).abs() < 1.0e-4);
                assert!(after[1].abs() < 1.0e-4);
            }
            _ => panic!("expected a kink at rho = 0"),
        }
        assert!(matches!(curve[0], CurvePoint::Smooth { .. }));
    }

    #[test]
    fn tangent_is_radial_with_factor_radius() {
        let h = |t: f64| -(0.5 * t).cosh();
        let rho = 0.7;
        let eps = 1.0e-4;
        let pts = curve_from_support(&h, &[rho - eps, rho + eps]);
        let (a, b) = match (pts[0], pts[1]) {
            (CurvePoint::Smooth { x: a, .. }, CurvePoint::Smooth { x: b, .. }) => (a, b),
            _ => panic!("smooth support"),
        };
        let deriv = [(b[0] - a[0]) / (2.0 * eps), (b[1] - a[1]) / (2.0 * eps)];
        let r = radius_1d(&h, rho).unwrap();
        assert!((deriv[0] - r * rho.cosh()).abs() < 1.0e-5);
        assert!((deriv[1] - r * rho.sinh()).abs() < 1.0e-5);
    }

    #[test]
    fn radius_of_constant_and_homogeneous() {
        assert!((radius_1d(&|_| -1.0, 0.9).unwrap() - 1.0).abs() < 1.0e-10);
        let hom = |t: f64| 0.4 * t.cosh() - 1.1 * t.sinh();
        assert!(radius_1d(&hom, -0.6).unwrap().abs() < 1.0e-8);
        // Adding a homogeneous solution never changes the radius.
        let h = |t: f64| -(0.5 * t).cosh();
        let shifted = |t: f64| h(t) + 0.4 * t.cosh() - 1.1 * t.sinh();
        let r0 = radius_1d(&h, 0.8).unwrap();
        let r1 = radius_1d(&shifted, 0.8).unwrap();
        assert!((r0 - r1).abs() < 1.0e-8);
    }

    #[test]
    fn zero_mean_profile_radius_matches_closed_form() {
        for &t in &[0.4, 0.9, 1.6, 2.5] {
            let r = radius_1d(&zero_mean_profile, t).unwrap();
            let expect = -1.0 / (t.cosh() * t.cosh());
            assert!((r - expect).abs() < 1.0e-8, "t={t}: {r} vs {expect}");
        }
    }

    #[test]
    fn radius_refuses_kinks() {
        assert!(matches!(
            radius_1d(&segment_support, 0.0),
            Err(OneDimError::NonSmoothPoint(_))
        ));
    }

    #[test]
    fn arc_length_integrates_the_radius() {
        let h = |t: f64| -(0.5 * t).cosh();
        let (lo, hi) = (-1.0, 1.5);
        let n = 4000usize;
        let grid: Vec<f64> = (0..=n).map(|i| lo + (hi - lo) * i as f64 / n as f64).collect();
        let pts = curve_from_support(&h, &grid);
        let mut length = 0.0;
        for w in pts.windows(2) {
            let (a, b) = match (w[0], w[1]) {
                (CurvePoint::Smooth { x: a, .. }, CurvePoint::Smooth { x: b, .. }) => (a, b),
                _ => panic!("smooth support"),
            };
            length += minkowski_length(a, b);
        }
        let expect = integrate(&|t| radius_1d(&h, t).unwrap(), lo, hi, 1.0e-9);
        assert!((length - expect).abs() < 1.0e-6, "{length} vs {expect}");
    }
}
