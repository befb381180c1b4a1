//! Quadrature building blocks: Gauss-Legendre rules, adaptive 1-d
//! integration, graded radial grids and angular sphere rules.

use crate::ChristoffelError;
use lorentz_core::{AmbientVector, HPoint};

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1],
/// computed by Newton iteration on the Legendre recurrence.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // Legendre P_n(x) and its derivative by upward recurrence.
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1.0e-15 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        weights[i] = w;
        nodes[n - 1 - i] = x;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

fn panel(f: &dyn Fn(f64) -> f64, a: f64, b: f64, nodes: &[f64], weights: &[f64]) -> f64 {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut sum = 0.0;
    for (x, w) in nodes.iter().zip(weights) {
        sum += w * f(mid + half * x);
    }
    sum * half
}

/// Adaptive integration of `f` over [a, b]: each panel compares 7- and
/// 15-point Gauss rules and bisects until the difference meets `tol`
/// (absolute, distributed over subintervals).
pub fn adaptive_integral(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    let (n7, w7) = gauss_legendre(7);
    let (n15, w15) = gauss_legendre(15);
    fn recurse(
        f: &dyn Fn(f64) -> f64,
        a: f64,
        b: f64,
        tol: f64,
        depth: usize,
        rules: &([f64; 7], [f64; 7], [f64; 15], [f64; 15]),
    ) -> f64 {
        let coarse = panel(f, a, b, &rules.0, &rules.1);
        let fine = panel(f, a, b, &rules.2, &rules.3);
        // The acceptance floor tracks machine precision of the panel value;
        // without it the rule difference (which carries ~30 eps of summation
        // roundoff and shrinks with panel width at the same rate as any
        // magnitude-relative bound) races the halving tolerance forever.
        let floor = 64.0 * f64::EPSILON * coarse.abs().max(fine.abs());
        if depth >= 32 || (fine - coarse).abs() <= tol.max(floor) {
            return fine;
        }
        let mid = 0.5 * (a + b);
        recurse(f, a, mid, 0.5 * tol, depth + 1, rules)
            + recurse(f, mid, b, 0.5 * tol, depth + 1, rules)
    }
    let rules = (
        <[f64; 7]>::try_from(n7).unwrap(),
        <[f64; 7]>::try_from(w7).unwrap(),
        <[f64; 15]>::try_from(n15).unwrap(),
        <[f64; 15]>::try_from(w15).unwrap(),
    );
    recurse(f, a, b, tol, 0, &rules)
}

/// Discretization parameters for the polar-coordinate solvers.
#[derive(Clone, Copy, Debug)]
pub struct QuadratureSpec {
    /// Truncation radius of the radial integral.
    pub rho_max: f64,
    /// Number of radial subintervals (forced even for Simpson).
    pub n_radial: usize,
    /// Grading exponent: radial nodes at `rho_max * u^gamma`, clustering
    /// toward rho = 0 where the kernel is singular.
    pub grading: f64,
    /// Angular nodes: points on the circle for d = 2, polar levels for the
    /// product sphere rule for d = 3 (azimuth gets twice as many).
    pub n_angular: usize,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self { rho_max: 40.0, n_radial: 200, grading: 2.0, n_angular: 96 }
    }
}

impl QuadratureSpec {
    pub fn validate(&self) -> Result<(), ChristoffelError> {
        if !(self.rho_max > 0.0) {
            return Err(ChristoffelError::BadQuadrature(format!(
                "rho_max must be positive, got {}",
                self.rho_max
            )));
        }
        if self.n_radial < 8 || self.n_angular < 8 {
            return Err(ChristoffelError::BadQuadrature(format!(
                "node counts must be at least 8, got radial {} angular {}",
                self.n_radial, self.n_angular
            )));
        }
        if !(self.grading >= 1.0) {
            return Err(ChristoffelError::BadQuadrature(format!(
                "grading exponent must be >= 1, got {}",
                self.grading
            )));
        }
        Ok(())
    }
}

/// An angular rule on the unit sphere of a tangent space: directions
/// (as ambient unit tangent vectors at a point) and weights summing to
/// `v_{d-1}`.
pub struct SphereRule {
    pub directions: Vec<AmbientVector>,
    pub weights: Vec<f64>,
}

impl SphereRule {
    /// Builds the rule at `x`: antipodal pair (d=1), uniform circle (d=2,
    /// trapezoid rule, spectrally accurate for periodic integrands), or a
    /// Gauss-Legendre x trapezoid product rule (d=3).
    pub fn at(x: &HPoint, n: usize) -> Self {
        let frame = x.orthonormal_frame();
        let d = x.dim();
        let mut directions = Vec::new();
        let mut weights = Vec::new();
        match d {
            1 => {
                directions.push(frame[0]);
                directions.push(frame[0] * -1.0);
                weights.push(1.0);
                weights.push(1.0);
            }
            2 => {
                let w = std::f64::consts::TAU / n as f64;
                for j in 0..n {
                    let th = w * j as f64;
                    directions.push(frame[0] * th.cos() + frame[1] * th.sin());
                    weights.push(w);
                }
            }
            _ => {
                let (zs, wz) = gauss_legendre(n);
                let m = 2 * n;
                let waz = std::f64::consts::TAU / m as f64;
                for (z, wzi) in zs.iter().zip(&wz) {
                    let r = (1.0 - z * z).sqrt();
                    for j in 0..m {
                        let az = waz * j as f64;
                        directions.push(
                            frame[0] * (r * az.cos()) + frame[1] * (r * az.sin()) + frame[2] * *z,
                        );
                        weights.push(wzi * waz);
                    }
                }
            }
        }
        Self { directions, weights }
    }
}

/// Integrates `g(rho)` over `[0, rho_max]` by composite Simpson on the
/// graded grid `rho = rho_max * u^gamma`; `g(0)` is never evaluated (the
/// transformed integrand vanishes there for gamma > 1 whenever `g` is
/// integrable).
pub fn graded_radial_integral(
    g: &mut dyn FnMut(f64) -> Result<f64, ChristoffelError>,
    rho_max: f64,
    n: usize,
    gamma: f64,
) -> Result<f64, ChristoffelError> {
    let n = if n % 2 == 0 { n } else { n + 1 };
    let h = 1.0 / n as f64;
    let mut sum = 0.0;
    for i in 0..=n {
        let u = h * i as f64;
        let rho = rho_max * u.powf(gamma);
        let jac = rho_max * gamma * u.powf(gamma - 1.0);
        let val = if i == 0 { 0.0 } else { g(rho)? * jac };
        let w = if i == 0 || i == n {
            1.0
        } else if i % 2 == 1 {
            4.0
        } else {
            2.0
        };
        sum += w * val;
    }
    Ok(sum * h / 3.0)
}
