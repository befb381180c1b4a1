//! Measure data for the Christoffel problem: atoms, geodesic walls and
//! smooth compactly supported densities on H^d.

use lorentz_core::{HPoint, SpacelikeUnit};
use support_fn::Bump;

/// A smooth compactly supported density: `amplitude * (1 - (rho/radius)^2)^3`
/// inside the geodesic ball about `center`, zero outside (C^2 across the
/// boundary).
#[derive(Clone, Copy, Debug)]
pub struct DensitySpec {
    pub center: HPoint,
    pub radius: f64,
    pub amplitude: f64,
}

impl DensitySpec {
    pub fn bump(&self) -> Bump {
        Bump::new(self.center, self.radius, self.amplitude)
    }

    pub fn eval(&self, y: &HPoint) -> f64 {
        self.bump().eval(y)
    }
}

/// A nonnegative measure on H^d made of point masses, uniform densities on
/// totally geodesic walls `{x : <x, normal> = 0}`, and an optional smooth
/// density.
#[derive(Clone, Debug, Default)]
pub struct MeasureSpec {
    /// Point masses (location, weight > 0).
    pub atoms: Vec<(HPoint, f64)>,
    /// Totally geodesic hypersurfaces with uniform weight density a > 0.
    pub walls: Vec<(SpacelikeUnit, f64)>,
    /// Optional smooth compactly supported part.
    pub density: Option<DensitySpec>,
}

impl MeasureSpec {
    pub fn atom(y: HPoint, weight: f64) -> Self {
        Self { atoms: vec![(y, weight)], ..Default::default() }
    }

    pub fn wall(normal: SpacelikeUnit, weight: f64) -> Self {
        Self { walls: vec![(normal, weight)], ..Default::default() }
    }

    pub fn smooth(density: DensitySpec) -> Self {
        Self { density: Some(density), ..Default::default() }
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty() && self.walls.is_empty() && self.density.is_none()
    }

    /// Scales every weight by `lambda`.
    pub fn scaled(&self, lambda: f64) -> Self {
        Self {
            atoms: self.atoms.iter().map(|(y, w)| (*y, w * lambda)).collect(),
            walls: self.walls.iter().map(|(v, a)| (*v, a * lambda)).collect(),
            density: self.density.map(|d| DensitySpec { amplitude: d.amplitude * lambda, ..d }),
        }
    }

    /// Distance from `x` to the farthest piece of the support that matters
    /// (atoms and density support; walls are unbounded and handled by their
    /// own tail truncation).
    pub fn support_reach(&self, x: &HPoint) -> f64 {
        let mut reach = 0.0f64;
        for (y, _) in &self.atoms {
            reach = reach.max(x.distance(y));
        }
        if let Some(dens) = &self.density {
            reach = reach.max(x.distance(&dens.center) + dens.radius);
        }
        reach
    }
}
