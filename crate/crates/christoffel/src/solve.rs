//! Particular solutions of the Christoffel problem by kernel integration.
//!
//! The smooth solver computes
//! `h_phi(x) = d * Integral_0^inf k(rho) Integral_{boundary B_rho(x)} phi dA drho`
//! by polar quadrature about the query point. The measure solver adds the
//! closed forms for atoms (`d w G(x,y)`) and uniform geodesic walls (the
//! kernel integrated along the wall through the hyperbolic Pythagorean
//! relation `cosh dist(x, gamma(t)) = cosh t * cosh dist(x, wall)`).

use crate::kernel::{kernel_k, KernelContext};
use crate::measure::{DensitySpec, MeasureSpec};
use crate::quadrature::{adaptive_integral, graded_radial_integral, QuadratureSpec, SphereRule};
use crate::residual::residual_wave_fn;
use crate::ChristoffelError;
use lorentz_core::HPoint;
use support_fn::{elementary_wall_value, ResidualStats, SolutionField};

/// Particular solution for a smooth compactly supported density, evaluated
/// at one point. Errors when the quadrature cap `q.rho_max` cannot cover the
/// support of the density as seen from `x`.
pub fn solve_smooth(
    ctx: &KernelContext,
    density: &DensitySpec,
    x: &HPoint,
    q: &QuadratureSpec,
) -> Result<f64, ChristoffelError> {
    q.validate()?;
    let d = ctx.dim();
    if x.dim() != d {
        return Err(ChristoffelError::UnsupportedDimension(x.dim()));
    }
    let sep = x.distance(&density.center);
    let needed = sep + density.radius;
    if q.rho_max < needed {
        return Err(ChristoffelError::TruncationInsufficient { needed, given: q.rho_max });
    }
    let bump = density.bump();
    if sep > density.radius + 0.5 {
        // Seen from a distant query point the support subtends an angle of
        // order radius / sinh(sep), far below the angular resolution; chart
        // the integral about the density's own center instead, where the
        // kernel factor is smooth (closest approach sep - radius > 0.5).
        let rule = SphereRule::at(&density.center, q.n_angular);
        let mut g = |rho: f64| -> Result<f64, ChristoffelError> {
            let mut acc = 0.0;
            for (dir, w) in rule.directions.iter().zip(&rule.weights) {
                let y = density.center.polar_to(rho, dir)?;
                let phi = bump.eval(&y);
                if phi != 0.0 {
                    acc += w * phi * kernel_k(ctx, x.distance(&y))?;
                }
            }
            Ok(rho.sinh().powi(d as i32 - 1) * acc)
        };
        let integral = graded_radial_integral(&mut g, density.radius, q.n_radial, 1.0)?;
        return Ok(d as f64 * integral);
    }
    let rule = SphereRule::at(x, q.n_angular);
    let mut g = |rho: f64| -> Result<f64, ChristoffelError> {
        let mut angular = 0.0;
        for (dir, w) in rule.directions.iter().zip(&rule.weights) {
            let p = x.polar_to(rho, dir)?;
            angular += w * bump.eval(&p);
        }
        if angular == 0.0 {
            return Ok(0.0);
        }
        Ok(kernel_k(ctx, rho)? * rho.sinh().powi(d as i32 - 1) * angular)
    };
    let integral = graded_radial_integral(&mut g, needed, q.n_radial, q.grading)?;
    Ok(d as f64 * integral)
}

/// Tail truncation radius: `|k| ~ e^{-d rho}` falls below 1e-14 by here.
fn tail_radius(d: usize) -> f64 {
    36.0 / d as f64
}

/// Distance from the query point to the wall point at arclength `t`, via
/// `cosh^2 b cosh^2 t - 1 = sinh^2 b + cosh^2 b sinh^2 t`. The naive
/// `acosh(cosh b * cosh t)` loses all precision for small `t` (relative
/// error ~ eps/t^2), which turns the integrand into a staircase whose steps
/// exceed the adaptive tolerance and blow the bisection tree up; the asinh
/// form is accurate at every scale.
fn wall_point_distance(sb: f64, cb: f64, t: f64) -> f64 {
    f64::hypot(sb, cb * t.sinh()).asinh()
}

/// Kernel integrated over a geodesic wall at wall-distance `b` from the
/// query point, for d = 2. The substitution t = sigma^6 tames the on-wall
/// endpoint: k(t) ~ ln t becomes sigma^5 ln sigma, whose paired-rule error
/// shrinks ~64x per bisection against the tolerance's 2x.
fn wall_integral_d2(ctx: &KernelContext, b: f64) -> f64 {
    let rho_c = tail_radius(2);
    let (sb, cb) = (b.sinh(), b.cosh());
    if cb >= rho_c.cosh() {
        return 0.0;
    }
    let t_max = (rho_c.cosh() / cb).acosh();
    let f = |sigma: f64| {
        let s2 = sigma * sigma;
        let dist = wall_point_distance(sb, cb, s2 * s2 * s2);
        6.0 * s2 * s2 * sigma * kernel_k(ctx, dist).unwrap_or(0.0)
    };
    2.0 * adaptive_integral(&f, 0.0, t_max.powf(1.0 / 6.0), 1.0e-13)
}

/// Kernel integrated over a totally geodesic plane in H^3 at wall-distance
/// `b`: polar coordinates inside the wall give `2 pi Integral sinh(r) k drho`.
fn wall_integral_d3(ctx: &KernelContext, b: f64) -> f64 {
    let rho_c = tail_radius(3);
    let (sb, cb) = (b.sinh(), b.cosh());
    if cb >= rho_c.cosh() {
        return 0.0;
    }
    let r_max = (rho_c.cosh() / cb).acosh();
    let f = |r: f64| {
        let dist = wall_point_distance(sb, cb, r);
        r.sinh() * kernel_k(ctx, dist).unwrap_or(0.0)
    };
    std::f64::consts::TAU * adaptive_integral(&f, 0.0, r_max, 1.0e-12)
}

/// Formal solution for a measure: atoms contribute `d w k(dist)`, walls the
/// kernel integrated over the wall with uniform density, and the smooth part
/// goes through `solve_smooth`. Evaluation within 1e-6 of an atom is refused
/// for d >= 2 (the kernel is singular there); in d = 1 the kernel is bounded
/// and walls are points, so both reduce to the exponential closed form.
pub fn solve_measure(
    ctx: &KernelContext,
    mu: &MeasureSpec,
    x: &HPoint,
    q: &QuadratureSpec,
) -> Result<f64, ChristoffelError> {
    let d = ctx.dim();
    if x.dim() != d {
        return Err(ChristoffelError::UnsupportedDimension(x.dim()));
    }
    let mut total = 0.0;
    for (y, w) in &mu.atoms {
        let dist = x.distance(y);
        if d == 1 {
            total += -0.5 * w * (-dist).exp();
        } else if dist < 1.0e-6 {
            return Err(ChristoffelError::SingularAtAtom { distance: dist });
        } else {
            total += d as f64 * w * kernel_k(ctx, dist)?;
        }
    }
    for (normal, a) in &mu.walls {
        let b = normal.wall_distance(x);
        total += match d {
            1 => -0.5 * a * (-b).exp(),
            2 => a * wall_integral_d2(ctx, b),
            _ => a * wall_integral_d3(ctx, b),
        };
    }
    if let Some(density) = &mu.density {
        total += solve_smooth(ctx, density, x, q)?;
    }
    Ok(total)
}

/// Closed form of the wall solution in d = 2 (weight `a`, normal `v`):
/// `(a/pi) [ s arctan(1/s) - 1 ]` with `s = <x, v>`, extended by the limit
/// `-a/pi` at s = 0.
pub fn elementary_closed_form(a: f64, v: &lorentz_core::SpacelikeUnit, x: &HPoint) -> f64 {
    elementary_wall_value(a, v.signed_separation(x))
}

/// Tabulates `solve_measure` on a polar chart about `base` and attaches
/// residual statistics probed at smooth interior points (wave operator of
/// the 1-homogeneous extension against the density part of the measure).
pub fn tabulate_solution(
    ctx: &KernelContext,
    mu: &MeasureSpec,
    base: &HPoint,
    chart_radius: f64,
    n_rho: usize,
    n_theta: usize,
    q: &QuadratureSpec,
) -> Result<SolutionField, ChristoffelError> {
    let d = ctx.dim();
    let field = match d {
        1 => SolutionField::build_d1(base, -chart_radius, chart_radius, n_rho, |p| {
            solve_measure(ctx, mu, p, q).map_err(|_| support_fn::SupportError::NoSample)
        })?,
        2 => SolutionField::build_d2(base, chart_radius, n_rho, n_theta, |p| {
            solve_measure(ctx, mu, p, q).map_err(|_| support_fn::SupportError::NoSample)
        })?,
        other => return Err(ChristoffelError::UnsupportedDimension(other)),
    };

    // Residual probes at interior points away from the singular support.
    let frame = base.orthonormal_frame();
    let mut probes: Vec<HPoint> = Vec::new();
    for f in [0.3, 0.6] {
        let rho = f * chart_radius;
        if d == 1 {
            probes.push(base.polar_to(rho, &frame[0])?);
            probes.push(base.polar_to(rho, &(frame[0] * -1.0))?);
        } else {
            for j in 0..4 {
                let th = std::f64::consts::TAU * (j as f64 + 0.37) / 4.0;
                let dir = frame[0] * th.cos() + frame[1] * th.sin();
                probes.push(base.polar_to(rho, &dir)?);
            }
        }
    }
    let smooth_here = |p: &HPoint| {
        mu.atoms.iter().all(|(y, _)| p.distance(y) > 0.1)
            && mu.walls.iter().all(|(v, _)| v.signed_separation(p).abs() > 0.05)
    };
    let mut max_abs = 0.0f64;
    let mut sum = 0.0;
    let mut count = 0usize;
    for p in probes.iter().filter(|p| smooth_here(p)) {
        let phi = mu.density.as_ref().map_or(0.0, |dens| dens.eval(p));
        let mut h = |y: &HPoint| solve_measure(ctx, mu, y, q);
        let r = residual_wave_fn(&mut h, phi, p, 1.0e-3)?;
        max_abs = max_abs.max(r);
        sum += r;
        count += 1;
    }
    let stats = ResidualStats {
        max_abs,
        mean_abs: if count > 0 { sum / count as f64 } else { 0.0 },
        probes: count,
    };
    Ok(field.with_residual(stats))
}
