//! Shared cubic interpolation helpers for uniformly sampled data.

pub(crate) fn catmull_rom(p0: f64, p1: f64, p2: f64, p3: f64, t: f64) -> f64 {
    let a = 2.0 * p1;
    let b = p2 - p0;
    let c = 2.0 * p0 - 5.0 * p1 + 4.0 * p2 - p3;
    let d = -p0 + 3.0 * p1 - 3.0 * p2 + p3;
    0.5 * (a + b * t + c * t * t + d * t * t * t)
}

/// Uniform samples `values[i]` at `x0 + i * step` with cubic evaluation and
/// cubic-extrapolation ghost nodes at the ends (keeps the interpolation
/// exact for cubics up to the boundary).
#[derive(Clone, Debug)]
pub(crate) struct UniformSamples {
    pub x0: f64,
    pub step: f64,
    pub values: Vec<f64>,
}

impl UniformSamples {
    fn ghost(&self, i: isize) -> f64 {
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

    /// True when `x` lies within the sampled range (tiny slack allowed).
    pub fn contains(&self, x: f64) -> bool {
        let u = (x - self.x0) / self.step;
        (-1.0e-9..=(self.values.len() - 1) as f64 + 1.0e-9).contains(&u)
    }

    pub fn x_max(&self) -> f64 {
        self.x0 + self.step * (self.values.len() - 1) as f64
    }

    /// Cubic interpolation; caller is responsible for range checking.
    pub fn eval(&self, x: f64) -> f64 {
        let u = (x - self.x0) / self.step;
        let i = (u.floor() as isize).clamp(0, self.values.len() as isize - 2);
        let t = u - i as f64;
        catmull_rom(self.ghost(i - 1), self.ghost(i), self.ghost(i + 1), self.ghost(i + 2), t)
    }
}
