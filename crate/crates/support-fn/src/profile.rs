//! Rotationally invariant support functions given by a sampled radial
//! profile with precomputed derivative and curvature data.
//!
//! For `h(x) = f(dist(base, x))` the reverse second fundamental form splits
//! into a radial eigenvalue `f'' - f' coth(rho)` and a sphere-tangent
//! eigenvalue `f' coth(rho) - f` of multiplicity d-1. The hedgehog
//! decomposition produces profiles whose curvature data is known in closed
//! form from its construction, so the arrays are stored alongside the values
//! rather than re-derived by differencing.

use crate::interp::UniformSamples;
use crate::SupportError;
use lorentz_core::HPoint;

#[derive(Clone, Debug)]
pub struct RadialProfile {
    base: HPoint,
    f: UniformSamples,
    fp: UniformSamples,
    tangential: UniformSamples,
    radial: UniformSamples,
}

impl RadialProfile {
    /// Builds a profile from uniform samples over `[0, step * (n-1)]` of the
    /// value, its derivative, and the two curvature eigenvalues
    /// (`tangential = f' coth - f`, `radial = f'' - f' coth`).
    pub fn new(
        base: HPoint,
        step: f64,
        f: Vec<f64>,
        fp: Vec<f64>,
        tangential: Vec<f64>,
        radial: Vec<f64>,
    ) -> Result<Self, SupportError> {
        let n = f.len();
        if n < 4 || fp.len() != n || tangential.len() != n || radial.len() != n || step <= 0.0 {
            return Err(SupportError::BadGrid { need: 4, got: n });
        }
        let mk = |values: Vec<f64>| UniformSamples { x0: 0.0, step, values };
        Ok(Self { base, f: mk(f), fp: mk(fp), tangential: mk(tangential), radial: mk(radial) })
    }

    pub fn base(&self) -> &HPoint {
        &self.base
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    pub fn rho_max(&self) -> f64 {
        self.f.x_max()
    }

    fn guard(&self, rho: f64) -> Result<(), SupportError> {
        if !self.f.contains(rho) {
            return Err(SupportError::OutOfChart { rho, rho_max: self.rho_max() });
        }
        Ok(())
    }

    pub fn value_at(&self, rho: f64) -> Result<f64, SupportError> {
        self.guard(rho)?;
        Ok(self.f.eval(rho))
    }

    pub fn derivative_at(&self, rho: f64) -> Result<f64, SupportError> {
        self.guard(rho)?;
        Ok(self.fp.eval(rho))
    }

    /// Sphere-tangent curvature eigenvalue `f' coth(rho) - f`.
    pub fn tangential_at(&self, rho: f64) -> Result<f64, SupportError> {
        self.guard(rho)?;
        Ok(self.tangential.eval(rho))
    }

    /// Radial curvature eigenvalue `f'' - f' coth(rho)`.
    pub fn radial_at(&self, rho: f64) -> Result<f64, SupportError> {
        self.guard(rho)?;
        Ok(self.radial.eval(rho))
    }

    pub fn eval(&self, x: &HPoint) -> Result<f64, SupportError> {
        self.value_at(self.base.distance(x))
    }
}
