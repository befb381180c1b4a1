//! Derivative-free maximization over H^d: quasi-uniform coarse sampling of a
//! geodesic ball followed by golden-section refinement along frame
//! directions.

use crate::SupportError;
use lorentz_core::{AmbientVector, HPoint};

const GOLDEN: f64 = 0.618_033_988_749_894_9;
const GOLDEN_ANGLE: f64 = 2.399_963_229_728_653;

#[derive(Clone, Copy, Debug)]
pub struct OptimizeResult {
    pub point: HPoint,
    pub value: f64,
    /// Length scale of the final refinement bracket; a rough uncertainty for
    /// the location (not the value) of the maximum.
    pub scale: f64,
    pub evaluations: usize,
}

/// Quasi-uniform directions on the unit tangent sphere at the base of the
/// given orthonormal frame (2 points for d=1, angles for d=2, spherical
/// Fibonacci for d=3).
pub(crate) fn sphere_directions(frame: &[AmbientVector], n: usize) -> Vec<AmbientVector> {
    match frame.len() {
        1 => vec![frame[0], -frame[0]],
        2 => (0..n)
            .map(|k| {
                let th = std::f64::consts::TAU * k as f64 / n as f64;
                frame[0] * th.cos() + frame[1] * th.sin()
            })
            .collect(),
        3 => (0..n)
            .map(|k| {
                let z = 1.0 - 2.0 * (k as f64 + 0.5) / n as f64;
                let r = (1.0 - z * z).sqrt();
                let th = GOLDEN_ANGLE * k as f64;
                frame[0] * (r * th.cos()) + frame[1] * (r * th.sin()) + frame[2] * z
            })
            .collect(),
        _ => unreachable!("frame dimension is 1..=3"),
    }
}

fn coarse_points(base: &HPoint, rho_max: f64, n: usize) -> Vec<HPoint> {
    let d = base.dim();
    let frame = base.orthonormal_frame();
    let mut pts = vec![*base];
    match d {
        1 => {
            for k in 0..n {
                let t = -rho_max + 2.0 * rho_max * (k as f64 + 0.5) / n as f64;
                if let Ok(p) = base.polar_to(t.abs(), &(frame[0] * t.signum())) {
                    pts.push(p);
                }
            }
        }
        2 => {
            // Golden-angle spiral, area-uniform in the chart radius.
            for k in 0..n {
                let rho = rho_max * ((k as f64 + 0.5) / n as f64).sqrt();
                let th = GOLDEN_ANGLE * k as f64;
                let dir = frame[0] * th.cos() + frame[1] * th.sin();
                if let Ok(p) = base.polar_to(rho, &dir) {
                    pts.push(p);
                }
            }
        }
        3 => {
            let n_dir = 128.min(n);
            let dirs = sphere_directions(&frame, n_dir);
            let n_r = (n / n_dir).max(1);
            for (k, dir) in dirs.iter().cycle().take(n_r * n_dir).enumerate() {
                let frac = ((k / n_dir) as f64 + 0.7) / n_r as f64;
                let rho = rho_max * frac.cbrt();
                if let Ok(p) = base.polar_to(rho, dir) {
                    pts.push(p);
                }
            }
        }
        _ => unreachable!(),
    }
    pts
}

/// Maximizes `f` over the geodesic ball of radius `rho_max` about `base`.
/// `f` may return `None` to mark a point as inadmissible (outside a chart,
/// say). Fails with `NoSample` when no coarse point is admissible.
pub fn maximize_on_hyperboloid(
    base: &HPoint,
    rho_max: f64,
    n_coarse: usize,
    refine_steps: usize,
    mut f: impl FnMut(&HPoint) -> Option<f64>,
) -> Result<OptimizeResult, SupportError> {
    let mut evals = 0usize;
    let mut best: Option<(HPoint, f64)> = None;
    for p in coarse_points(base, rho_max, n_coarse) {
        evals += 1;
        if let Some(v) = f(&p) {
            if best.map_or(true, |(_, bv)| v > bv) {
                best = Some((p, v));
            }
        }
    }
    let (mut x, mut val) = best.ok_or(SupportError::NoSample)?;
    let mut scale = 2.0 * rho_max / (n_coarse as f64).sqrt().max(2.0);
    for _ in 0..refine_steps {
        let frame = x.orthonormal_frame();
        for e in &frame {
            // Golden-section maximization of t -> f(exp_x(t e)) on [-s, s].
            let (mut a, mut b) = (-scale, scale);
            let probe = |t: f64, x: &HPoint, f: &mut dyn FnMut(&HPoint) -> Option<f64>| {
                x.exp(&(*e * t)).ok().and_then(|p| f(&p).map(|v| (p, v)))
            };
            let mut c = b - GOLDEN * (b - a);
            let mut dpt = a + GOLDEN * (b - a);
            let mut fc = probe(c, &x, &mut f);
            let mut fd = probe(dpt, &x, &mut f);
            evals += 2;
            for _ in 0..12 {
                let vc = fc.as_ref().map_or(f64::NEG_INFINITY, |q| q.1);
                let vd = fd.as_ref().map_or(f64::NEG_INFINITY, |q| q.1);
                if vc > vd {
                    b = dpt;
                    dpt = c;
                    fd = fc;
                    c = b - GOLDEN * (b - a);
                    fc = probe(c, &x, &mut f);
                } else {
                    a = c;
                    c = dpt;
                    fc = fd;
                    dpt = a + GOLDEN * (b - a);
                    fd = probe(dpt, &x, &mut f);
                }
                evals += 1;
            }
            let cand = match (fc, fd) {
                (Some(p), Some(q)) => Some(if p.1 >= q.1 { p } else { q }),
                (Some(p), None) => Some(p),
                (None, Some(q)) => Some(q),
                (None, None) => None,
            };
            if let Some((p, v)) = cand {
                if v > val {
                    x = p;
                    val = v;
                }
            }
        }
        scale *= 0.55;
        if scale < 1.0e-12 {
            break;
        }
    }
    Ok(OptimizeResult { point: x, value: val, scale, evaluations: evals })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn finds_cosh_peak_off_center() {
        // Maximize -cosh(dist(target, x)): peak exactly at target.
        let base = HPoint::basepoint(2);
        let target =
            HPoint::from_coords(&[0.9f64.sinh() * 0.6, 0.9f64.sinh() * 0.8, 0.9f64.cosh()])
                .unwrap();
        let res = maximize_on_hyperboloid(&base, 3.0, 2048, 40, |p| {
            Some(-target.distance(p).cosh())
        })
        .unwrap();
        assert_relative_eq!(res.value, -1.0, epsilon = 1e-8);
        assert!(target.distance(&res.point) < 1e-4);
    }

    #[test]
    fn respects_inadmissible_regions() {
        let base = HPoint::basepoint(1);
        // Peak at t = 2 but the domain is cut at t <= 1.
        let res = maximize_on_hyperboloid(&base, 4.0, 512, 30, |p| {
            let t = p.vec()[0].asinh();
            if t > 1.0 {
                None
            } else {
                Some(-(t - 2.0) * (t - 2.0))
            }
        })
        .unwrap();
        assert_relative_eq!(res.value, -1.0, epsilon = 1e-6);
    }
}
