//! Tabulated solution fields on polar charts, with cubic interpolation.
//!
//! A field stores samples of a function on H^d over a uniform polar grid
//! about a base point: a signed geodesic coordinate for d=1, or polar
//! coordinates (rho, theta) for d=2 with theta periodic. Interpolation is
//! Catmull-Rom cubic in each grid direction, which keeps the interpolant C^1
//! so finite differences of interpolated values stay usable.

use crate::SupportError;
use lorentz_core::{minkowski_form, AmbientVector, HPoint};

/// Residual statistics attached to a numerically produced field.
#[derive(Clone, Copy, Debug, Default)]
pub struct ResidualStats {
    pub max_abs: f64,
    pub mean_abs: f64,
    pub probes: usize,
}

/// Samples of a function over a polar chart, d = 1 or 2.
#[derive(Clone, Debug)]
pub struct SolutionField {
    base: HPoint,
    frame: Vec<AmbientVector>,
    /// d=1: signed coordinate grid (uniform, increasing).
    /// d=2: radial grid over [0, rho_max].
    rho: Vec<f64>,
    /// d=2 only: uniform angular grid covering [0, 2 pi).
    theta: Vec<f64>,
    /// Row-major values: index `i_rho * n_theta + i_theta` (d=2) or `i` (d=1).
    values: Vec<f64>,
    residual: Option<ResidualStats>,
}

fn catmull_rom(p0: f64, p1: f64, p2: f64, p3: f64, t: f64) -> f64 {
    let a = 2.0 * p1;
    let b = p2 - p0;
    let c = 2.0 * p0 - 5.0 * p1 + 4.0 * p2 - p3;
    let d = -p0 + 3.0 * p1 - 3.0 * p2 + p3;
    0.5 * (a + b * t + c * t * t + d * t * t * t)
}

fn check_uniform(grid: &[f64], need: usize) -> Result<f64, SupportError> {
    if grid.len() < need {
        return Err(SupportError::BadGrid { need, got: grid.len() });
    }
    let h = grid[1] - grid[0];
    if h <= 0.0 {
        return Err(SupportError::BadGrid { need, got: grid.len() });
    }
    for w in grid.windows(2) {
        if ((w[1] - w[0]) - h).abs() > 1.0e-9 * h.abs() {
            return Err(SupportError::BadGrid { need, got: grid.len() });
        }
    }
    Ok(h)
}

impl SolutionField {
    /// Builds a d=1 field by sampling `f` at `n` uniform nodes of
    /// `[t_min, t_max]`; the chart is `t -> base cosh t + E_1 sinh t`.
    pub fn build_d1(
        base: &HPoint,
        t_min: f64,
        t_max: f64,
        n: usize,
        mut f: impl FnMut(&HPoint) -> Result<f64, SupportError>,
    ) -> Result<Self, SupportError> {
        if base.dim() != 1 {
            return Err(SupportError::UnsupportedDimension(base.dim()));
        }
        if n < 4 || t_max <= t_min {
            return Err(SupportError::BadGrid { need: 4, got: n });
        }
        let frame = base.orthonormal_frame();
        let step = (t_max - t_min) / (n - 1) as f64;
        let mut rho = Vec::with_capacity(n);
        let mut values = Vec::with_capacity(n);
        for i in 0..n {
            let t = t_min + step * i as f64;
            let p = base.polar_to(t.abs(), &(frame[0] * t.signum()))?;
            let p = if t == 0.0 { *base } else { p };
            rho.push(t);
            values.push(f(&p)?);
        }
        Ok(Self { base: *base, frame, rho, theta: Vec::new(), values, residual: None })
    }

    /// Builds a d=2 field by sampling `f` on an `n_rho x n_theta` uniform
    /// polar grid with radius `rho_max` about `base`.
    pub fn build_d2(
        base: &HPoint,
        rho_max: f64,
        n_rho: usize,
        n_theta: usize,
        mut f: impl FnMut(&HPoint) -> Result<f64, SupportError>,
    ) -> Result<Self, SupportError> {
        if base.dim() != 2 {
            return Err(SupportError::UnsupportedDimension(base.dim()));
        }
        if n_rho < 4 || n_theta < 4 || rho_max <= 0.0 {
            return Err(SupportError::BadGrid { need: 4, got: n_rho.min(n_theta) });
        }
        let frame = base.orthonormal_frame();
        let d_rho = rho_max / (n_rho - 1) as f64;
        let d_theta = std::f64::consts::TAU / n_theta as f64;
        let mut rho = Vec::with_capacity(n_rho);
        let mut theta = Vec::with_capacity(n_theta);
        for i in 0..n_rho {
            rho.push(d_rho * i as f64);
        }
        for j in 0..n_theta {
            theta.push(d_theta * j as f64);
        }
        let mut values = Vec::with_capacity(n_rho * n_theta);
        for &r in &rho {
            for &th in &theta {
                let dir = frame[0] * th.cos() + frame[1] * th.sin();
                let p = base.polar_to(r, &dir)?;
                values.push(f(&p)?);
            }
        }
        Ok(Self { base: *base, frame, rho, theta, values, residual: None })
    }

    pub fn with_residual(mut self, stats: ResidualStats) -> Self {
        self.residual = Some(stats);
        self
    }

    pub fn residual_stats(&self) -> Option<ResidualStats> {
        self.residual
    }

    pub fn base(&self) -> &HPoint {
        &self.base
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    pub fn rho_grid(&self) -> &[f64] {
        &self.rho
    }

    pub fn theta_grid(&self) -> &[f64] {
        &self.theta
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Largest chart radius (d=2) or coordinate range (d=1).
    pub fn rho_max(&self) -> f64 {
        *self.rho.last().unwrap()
    }

    fn value_d1(&self, i: isize) -> f64 {
        // Cubic extrapolation ghost nodes keep full order at the ends.
        let n = self.values.len() as isize;
        let v = &self.values;
        if i < 0 {
            4.0 * v[0] - 6.0 * v[1] + 4.0 * v[2] - v[3]
        } else if i >= n {
            let m = (n - 1) as usize;
            4.0 * v[m] - 6.0 * v[m - 1] + 4.0 * v[m - 2] - v[m - 3]
        } else {
            v[i as usize]
        }
    }

    fn value_d2(&self, i: isize, j: isize) -> f64 {
        let n_rho = self.rho.len() as isize;
        let n_theta = self.theta.len() as isize;
        let jj = j.rem_euclid(n_theta);
        if i < 0 {
            // Reflect through the pole: f(-rho, theta) = f(rho, theta + pi).
            let opposite = (jj + n_theta / 2).rem_euclid(n_theta);
            self.value_d2(-i, opposite)
        } else if i >= n_rho {
            let m = n_rho - 1;
            4.0 * self.value_d2(m, jj) - 6.0 * self.value_d2(m - 1, jj)
                + 4.0 * self.value_d2(m - 2, jj)
                - self.value_d2(m - 3, jj)
        } else {
            self.values[(i * n_theta + jj) as usize]
        }
    }

    /// Interpolates at chart coordinates. For d=1 pass `(t, 0.0)`.
    pub fn eval_chart(&self, r: f64, th: f64) -> Result<f64, SupportError> {
        if self.dim() == 1 {
            let h = self.rho[1] - self.rho[0];
            let u = (r - self.rho[0]) / h;
            if !(-(1.0e-9)..=(self.rho.len() - 1) as f64 + 1.0e-9).contains(&u) {
                return Err(SupportError::OutOfChart { rho: r, rho_max: self.rho_max() });
            }
            let i = (u.floor() as isize).clamp(0, self.rho.len() as isize - 2);
            let t = u - i as f64;
            Ok(catmull_rom(
                self.value_d1(i - 1),
                self.value_d1(i),
                self.value_d1(i + 1),
                self.value_d1(i + 2),
                t,
            ))
        } else {
            let h_r = self.rho[1] - self.rho[0];
            let u = r / h_r;
            if !(0.0..=(self.rho.len() - 1) as f64 + 1.0e-9).contains(&u) {
                return Err(SupportError::OutOfChart { rho: r, rho_max: self.rho_max() });
            }
            let i = (u.floor() as isize).clamp(0, self.rho.len() as isize - 2);
            let tr = u - i as f64;
            let h_t = self.theta[1] - self.theta[0];
            let v = (th.rem_euclid(std::f64::consts::TAU)) / h_t;
            let j = v.floor() as isize;
            let tt = v - j as f64;
            let mut rows = [0.0; 4];
            for (k, row) in rows.iter_mut().enumerate() {
                let ii = i - 1 + k as isize;
                *row = catmull_rom(
                    self.value_d2(ii, j - 1),
                    self.value_d2(ii, j),
                    self.value_d2(ii, j + 1),
                    self.value_d2(ii, j + 2),
                    tt,
                );
            }
            Ok(catmull_rom(rows[0], rows[1], rows[2], rows[3], tr))
        }
    }

    /// Chart coordinates of a hyperboloid point.
    pub fn chart_coords(&self, x: &HPoint) -> (f64, f64) {
        if self.dim() == 1 {
            let s = minkowski_form(x.vec(), &self.frame[0]);
            let t = self.base.distance(x) * s.signum();
            (t, 0.0)
        } else {
            let pc = self.base.polar_from(x);
            if pc.degenerate {
                return (0.0, 0.0);
            }
            let a = minkowski_form(&pc.theta, &self.frame[0]);
            let b = minkowski_form(&pc.theta, &self.frame[1]);
            (pc.rho, b.atan2(a))
        }
    }

    /// Interpolated value at a hyperboloid point.
    pub fn eval(&self, x: &HPoint) -> Result<f64, SupportError> {
        let (r, th) = self.chart_coords(x);
        self.eval_chart(r, th)
    }

    /// Validated construction from raw grids and values.
    pub fn from_grid(
        base: HPoint,
        rho: Vec<f64>,
        theta: Vec<f64>,
        values: Vec<f64>,
    ) -> Result<Self, SupportError> {
        let d = base.dim();
        if d == 1 {
            check_uniform(&rho, 4)?;
            if !theta.is_empty() || values.len() != rho.len() {
                return Err(SupportError::BadGrid { need: rho.len(), got: values.len() });
            }
        } else if d == 2 {
            check_uniform(&rho, 4)?;
            let h = check_uniform(&theta, 4)?;
            // The angular grid must tile the full circle.
            if (theta[0]).abs() > 1.0e-12
                || (h * theta.len() as f64 - std::f64::consts::TAU).abs() > 1.0e-9
            {
                return Err(SupportError::BadGrid { need: 4, got: theta.len() });
            }
            if values.len() != rho.len() * theta.len() {
                return Err(SupportError::BadGrid { need: rho.len() * theta.len(), got: values.len() });
            }
        } else {
            return Err(SupportError::UnsupportedDimension(d));
        }
        let frame = base.orthonormal_frame();
        Ok(Self { base, frame, rho, theta, values, residual: None })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn interpolates_smooth_function_d2() {
        let base = HPoint::basepoint(2);
        let f = |p: &HPoint| Ok((-p.vec()[2]).asinh() + 0.3 * p.vec()[0] - 0.1 * p.vec()[1]);
        let field = SolutionField::build_d2(&base, 3.0, 121, 128, f).unwrap();
        for (r, th) in [(0.37f64, 0.9f64), (1.81, 4.2), (2.5, 0.05), (0.0, 0.0)] {
            let dir = base.orthonormal_frame()[0] * th.cos() + base.orthonormal_frame()[1] * th.sin();
            let p = base.polar_to(r, &dir).unwrap();
            let truth = f(&p).unwrap();
            assert_relative_eq!(field.eval(&p).unwrap(), truth, epsilon = 1e-6, max_relative = 1e-6);
        }
    }

    #[test]
    fn interpolates_across_pole_and_seam() {
        let base = HPoint::basepoint(2);
        // cosh of distance to a shifted center: smooth through the pole.
        let center = HPoint::from_coords(&[0.6f64.sinh(), 0.0, 0.6f64.cosh()]).unwrap();
        let f = |p: &HPoint| Ok(center.distance(p).cosh());
        let field = SolutionField::build_d2(&base, 2.0, 81, 96, f).unwrap();
        let frame = base.orthonormal_frame();
        for th in [3.14159, 6.28, 0.001, 3.15] {
            let dir = frame[0] * f64::cos(th) + frame[1] * f64::sin(th);
            let p = base.polar_to(0.013, &dir).unwrap();
            assert_relative_eq!(field.eval(&p).unwrap(), f(&p).unwrap(), epsilon = 1e-7);
        }
    }

    #[test]
    fn d1_field_roundtrip() {
        let base = HPoint::basepoint(1);
        let f = |p: &HPoint| Ok(p.vec()[0] * 0.5 - 1.1 * p.vec()[1]);
        let field = SolutionField::build_d1(&base, -2.0, 2.0, 401, f).unwrap();
        for t in [-1.93f64, -0.4, 0.0, 0.77, 1.99] {
            let p = HPoint::from_coords(&[t.sinh(), t.cosh()]).unwrap();
            assert_relative_eq!(field.eval(&p).unwrap(), f(&p).unwrap(), epsilon = 1e-7);
        }
    }

    #[test]
    fn rejects_out_of_chart() {
        let base = HPoint::basepoint(2);
        let field = SolutionField::build_d2(&base, 1.0, 11, 8, |_| Ok(1.0)).unwrap();
        let far = base.polar_to(1.5, &base.orthonormal_frame()[0]).unwrap();
        assert!(matches!(field.eval(&far), Err(SupportError::OutOfChart { .. })));
    }
}
