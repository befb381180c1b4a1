//! Hedgehog decomposition: every C^2 support function on a geodesic ball is
//! the difference of two convex support functions.
//!
//! Construction: let `h*(rho)` be the positive part of the largest radius of
//! curvature of h over the sphere of radius rho about the base point, and
//! `h1*` its running supremum. Smooth it twice,
//! `htilde(rho) = int_rho^{rho+1} int_t^{t+1} h1*(s) ds dt`, and solve the
//! radial comparison equation
//! `f(rho) = cosh(rho) int_0^rho sinh(t)/cosh(t)^2 htilde(t) dt`.
//! Then `f' coth - f = htilde` exactly and `f'' - f' coth = tanh(rho)
//! htilde'(rho) >= 0`, so the radial profile f dominates the curvature of h
//! everywhere on the ball: both `h1 = f` and `h2 = f - h` are convex there,
//! and `h1 - h2 = h` identically.

use crate::diff::curvature;
use crate::interp::UniformSamples;
use crate::optimize::sphere_directions;
use crate::profile::RadialProfile;
use crate::spec::SupportSpec;
use crate::SupportError;
use lorentz_core::HPoint;

#[derive(Clone, Debug)]
pub struct HedgehogDecomposition {
    /// The convex radial majorant f.
    pub h1: SupportSpec,
    /// The convex remainder f - h.
    pub h2: SupportSpec,
    /// Ball radius on which convexity of both parts is guaranteed.
    pub radius: f64,
}

/// 4-point Newton-Cotes cumulative integral on a uniform grid.
fn cumulative_integral(values: &[f64], step: f64) -> Vec<f64> {
    let n = values.len();
    assert!(n >= 4);
    let mut c = vec![0.0; n];
    for i in 0..n - 1 {
        let (f, w) = if i == 0 {
            ([values[0], values[1], values[2], values[3]], [9.0, 19.0, -5.0, 1.0])
        } else if i == n - 2 {
            ([values[n - 4], values[n - 3], values[n - 2], values[n - 1]], [1.0, -5.0, 19.0, 9.0])
        } else {
            ([values[i - 1], values[i], values[i + 1], values[i + 2]], [-1.0, 13.0, 13.0, -1.0])
        };
        let inc = step * (w[0] * f[0] + w[1] * f[1] + w[2] * f[2] + w[3] * f[3]) / 24.0;
        c[i + 1] = c[i] + inc;
    }
    c
}

/// Decomposes a twice differentiable specification as `h = h1 - h2` with
/// both parts convex on the ball of radius `radius` about `base`. The
/// construction samples curvature out to `radius + 2`, so the spec must be
/// smooth there.
pub fn decompose_hedgehog(
    spec: &SupportSpec,
    base: &HPoint,
    radius: f64,
) -> Result<HedgehogDecomposition, SupportError> {
    if radius <= 0.0 {
        return Err(SupportError::BadGrid { need: 1, got: 0 });
    }
    let d = base.dim();
    if let Some(sd) = spec.dim() {
        if sd != d {
            return Err(SupportError::DimensionMismatch(sd, d));
        }
    }
    let total = radius + 2.02;
    let n: usize = 1601;
    let step = total / (n - 1) as f64;
    let n_dir = match d {
        1 => 2,
        2 => 48,
        _ => 96,
    };
    let frame = base.orthonormal_frame();
    let dirs = sphere_directions(&frame, n_dir);

    // Positive part of the largest radius of curvature over each sphere.
    let mut hstar = vec![0.0f64; n];
    for (j, h) in hstar.iter_mut().enumerate() {
        let rho = step * j as f64;
        let mut m = f64::NEG_INFINITY;
        if j == 0 {
            m = curvature(spec, base)?.max_radius();
        } else {
            for dir in &dirs {
                let p = base.polar_to(rho, dir)?;
                m = m.max(curvature(spec, &p)?.max_radius());
            }
        }
        *h = m.max(0.0);
    }
    // Running supremum makes the majorant nondecreasing.
    for j in 1..n {
        hstar[j] = hstar[j].max(hstar[j - 1]);
    }

    let c = UniformSamples { x0: 0.0, step, values: cumulative_integral(&hstar, step) };
    let g_at = |t: f64| c.eval(t + 1.0) - c.eval(t);
    // g is available on [0, total - 1].
    let m1 = ((total - 1.0) / step).floor() as usize;
    let g_vals: Vec<f64> = (0..=m1).map(|j| g_at(step * j as f64)).collect();
    let big_g = UniformSamples { x0: 0.0, step, values: cumulative_integral(&g_vals, step) };
    // htilde and its derivative live on [0, total - 2].
    let m2 = ((total - 2.0) / step).floor() as usize;
    let mut htilde = Vec::with_capacity(m2 + 1);
    let mut htilde_p = Vec::with_capacity(m2 + 1);
    for j in 0..=m2 {
        let rho = step * j as f64;
        htilde.push(big_g.eval(rho + 1.0) - big_g.eval(rho));
        htilde_p.push(g_at(rho + 1.0) - g_at(rho));
    }
    let integrand: Vec<f64> = (0..=m2)
        .map(|j| {
            let rho = step * j as f64;
            rho.sinh() / rho.cosh().powi(2) * htilde[j]
        })
        .collect();
    let integral = cumulative_integral(&integrand, step);
    let mut f = Vec::with_capacity(m2 + 1);
    let mut fp = Vec::with_capacity(m2 + 1);
    let mut radial = Vec::with_capacity(m2 + 1);
    for j in 0..=m2 {
        let rho = step * j as f64;
        f.push(rho.cosh() * integral[j]);
        fp.push(rho.sinh() * integral[j] + rho.tanh() * htilde[j]);
        radial.push(rho.tanh() * htilde_p[j]);
    }
    let profile = RadialProfile::new(*base, step, f, fp, htilde, radial)?;
    let h1 = SupportSpec::Radial(profile);
    let h2 = SupportSpec::Difference(Box::new(h1.clone()), Box::new(spec.clone()));
    Ok(HedgehogDecomposition { h1, h2, radius })
}
