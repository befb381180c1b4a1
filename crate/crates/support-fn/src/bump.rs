//! Smooth compactly supported bump densities on H^d.
//!
//! The family is `phi(y) = A (1 - (rho/R)^2)^3` inside the ball of radius R
//! about a center, zero outside; it is C^2 across the boundary, which is all
//! the distributional pairings need.

use lorentz_core::HPoint;

#[derive(Clone, Copy, Debug)]
pub struct Bump {
    pub center: HPoint,
    pub radius: f64,
    pub amplitude: f64,
}

impl Bump {
    pub fn new(center: HPoint, radius: f64, amplitude: f64) -> Self {
        assert!(radius > 0.0, "bump radius must be positive");
        Self { center, radius, amplitude }
    }

    pub fn dim(&self) -> usize {
        self.center.dim()
    }

    /// Value as a function of the distance to the center.
    pub fn value_radial(&self, rho: f64) -> f64 {
        let u = (rho / self.radius).powi(2);
        if u >= 1.0 {
            0.0
        } else {
            self.amplitude * (1.0 - u).powi(3)
        }
    }

    pub fn eval(&self, y: &HPoint) -> f64 {
        self.value_radial(self.center.distance(y))
    }

    /// Radial derivative `f'(rho)`.
    pub fn derivative_radial(&self, rho: f64) -> f64 {
        let r2 = self.radius * self.radius;
        let u = rho * rho / r2;
        if u >= 1.0 {
            0.0
        } else {
            -6.0 * self.amplitude * rho * (1.0 - u).powi(2) / r2
        }
    }

    /// Laplace-Beltrami of the bump on H^d at distance `rho` from the
    /// center: `f'' + (d-1) coth(rho) f'`, evaluated stably through
    /// `f'(rho)/rho` near the pole.
    pub fn laplacian_radial(&self, d: usize, rho: f64) -> f64 {
        let r2 = self.radius * self.radius;
        let u = rho * rho / r2;
        if u >= 1.0 {
            return 0.0;
        }
        let a = self.amplitude;
        let fpp = -6.0 * a * (1.0 - u).powi(2) / r2 + 24.0 * a * rho * rho * (1.0 - u) / (r2 * r2);
        // f'(rho)/rho is smooth: -6A(1-u)^2/R^2.
        let fp_over_rho = -6.0 * a * (1.0 - u).powi(2) / r2;
        let rho_coth = if rho < 1.0e-6 { 1.0 + rho * rho / 3.0 } else { rho / rho.tanh() };
        fpp + (d as f64 - 1.0) * rho_coth * fp_over_rho
    }

    pub fn laplacian(&self, y: &HPoint) -> f64 {
        self.laplacian_radial(y.dim(), self.center.distance(y))
    }
}
