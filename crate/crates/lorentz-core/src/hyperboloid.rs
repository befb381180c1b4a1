//! Points on the hyperboloid, unit spacelike directions, geodesics, polar
//! coordinates and orthonormal tangent frames.

use crate::vector::{minkowski_form, AmbientVector};
use crate::CoreError;

/// A point on the future unit hyperboloid H^d: `<x,x> = -1`, `x_{d+1} > 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HPoint {
    v: AmbientVector,
}

/// A unit spacelike vector: `<v,v> = 1`. Its Minkowski-orthogonal complement
/// meets H^d in a totally geodesic wall `{x : <x,v> = 0}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpacelikeUnit {
    v: AmbientVector,
}

/// Geodesic polar coordinates of a point about a base point.
#[derive(Clone, Copy, Debug)]
pub struct PolarCoords {
    /// Hyperbolic distance to the base point.
    pub rho: f64,
    /// Unit tangent direction at the base point. Arbitrary (first frame
    /// vector) when `degenerate` is set.
    pub theta: AmbientVector,
    /// True when the point coincides with the base within roundoff, so the
    /// direction is not determined.
    pub degenerate: bool,
}

fn sinhc(r: f64) -> f64 {
    if r.abs() < 1.0e-6 {
        1.0 + r * r / 6.0
    } else {
        r.sinh() / r
    }
}

impl HPoint {
    /// Validates that `v` lies on the future hyperboloid. The tolerance
    /// scales with the squared Euclidean size of `v` because the Minkowski
    /// norm of a far point cancels to roundoff of that size.
    pub fn new(v: AmbientVector) -> Result<Self, CoreError> {
        let q = v.mnorm_sq();
        if (q + 1.0).abs() > 1.0e-9 * (1.0 + v.euclid_sq()) {
            return Err(CoreError::NotOnHyperboloid(q));
        }
        if v.time() <= 0.0 {
            return Err(CoreError::NotFutureTimelike { form: q, last: v.time() });
        }
        Ok(Self { v })
    }

    /// Accepts a vector whose Minkowski norm is -1 by construction. Rescales
    /// when the computed norm is well resolved; beyond that (far points, where
    /// cancellation swamps the norm) the raw vector is already the best
    /// representation available.
    fn trusted(v: AmbientVector) -> Self {
        let q = v.mnorm_sq();
        if (-1.5..-0.5).contains(&q) {
            Self { v: v.scaled(1.0 / (-q).sqrt()) }
        } else {
            Self { v }
        }
    }

    /// Rescales a future timelike vector onto the hyperboloid.
    pub fn normalize(v: AmbientVector) -> Result<Self, CoreError> {
        let q = v.mnorm_sq();
        if q >= 0.0 || v.time() <= 0.0 {
            return Err(CoreError::NotFutureTimelike { form: q, last: v.time() });
        }
        Ok(Self { v: v.scaled(1.0 / (-q).sqrt()) })
    }

    /// The base point `(0, ..., 0, 1)` of H^d.
    pub fn basepoint(d: usize) -> Self {
        Self { v: AmbientVector::basis(d + 1, d) }
    }

    pub fn from_coords(coords: &[f64]) -> Result<Self, CoreError> {
        Self::new(AmbientVector::new(coords)?)
    }

    pub fn vec(&self) -> &AmbientVector {
        &self.v
    }

    pub fn dim(&self) -> usize {
        self.v.dim()
    }

    /// Hyperbolic distance `acosh(-<x,y>)`.
    pub fn distance(&self, other: &Self) -> f64 {
        let c = -minkowski_form(&self.v, &other.v);
        c.max(1.0).acosh()
    }

    /// Orthogonal projection of an ambient vector onto the tangent space at
    /// this point: `w + <w,x> x`.
    pub fn project_tangent(&self, w: &AmbientVector) -> AmbientVector {
        let s = minkowski_form(w, &self.v);
        *w + self.v * s
    }

    /// Deterministic orthonormal tangent frame (d vectors) at this point,
    /// built by Gram-Schmidt over the coordinate directions.
    pub fn orthonormal_frame(&self) -> Vec<AmbientVector> {
        let d = self.dim();
        let mut frame: Vec<AmbientVector> = Vec::with_capacity(d);
        for i in 0..=d {
            if frame.len() == d {
                break;
            }
            let mut w = self.project_tangent(&AmbientVector::basis(d + 1, i));
            for e in &frame {
                let c = minkowski_form(&w, e);
                w = w - *e * c;
            }
            let q = w.mnorm_sq();
            if q > 1.0e-12 {
                frame.push(w * (1.0 / q.sqrt()));
            }
        }
        debug_assert_eq!(frame.len(), d);
        frame
    }

    /// Exponential map: follows the geodesic from this point with initial
    /// velocity `u` (a tangent vector) for unit time.
    pub fn exp(&self, u: &AmbientVector) -> Result<Self, CoreError> {
        let t = minkowski_form(u, &self.v);
        if t.abs() > 1.0e-8 * (1.0 + u.euclid_sq().sqrt()) {
            return Err(CoreError::NotTangent(t));
        }
        let q = u.mnorm_sq().max(0.0);
        let r = q.sqrt();
        Ok(HPoint::trusted(self.v * r.cosh() + *u * sinhc(r)))
    }

    /// Polar coordinates of `point` about this base point.
    pub fn polar_from(&self, point: &Self) -> PolarCoords {
        let rho = self.distance(point);
        if rho < 1.0e-9 {
            return PolarCoords { rho, theta: self.orthonormal_frame()[0], degenerate: true };
        }
        let theta = (point.v - self.v * rho.cosh()) * (1.0 / rho.sinh());
        PolarCoords { rho, theta, degenerate: false }
    }

    /// Point at polar coordinates `(rho, theta)` about this base point;
    /// `theta` must be a unit tangent vector here.
    pub fn polar_to(&self, rho: f64, theta: &AmbientVector) -> Result<Self, CoreError> {
        let t = minkowski_form(theta, &self.v);
        if t.abs() > 1.0e-8 {
            return Err(CoreError::NotTangent(t));
        }
        Ok(HPoint::trusted(self.v * rho.cosh() + *theta * rho.sinh()))
    }

    /// Point at parameter `t` along the unit-speed geodesic from this point
    /// toward `other` (t in hyperbolic distance units).
    pub fn geodesic_toward(&self, other: &Self, t: f64) -> Result<Self, CoreError> {
        let pc = self.polar_from(other);
        self.polar_to(t, &pc.theta)
    }
}

impl SpacelikeUnit {
    /// Validates `<v,v> = 1` within a tolerance that scales with the squared
    /// Euclidean size of `v` (roundoff in the form grows with it).
    pub fn new(v: AmbientVector) -> Result<Self, CoreError> {
        let q = v.mnorm_sq();
        if (q - 1.0).abs() > 1.0e-9 * (1.0 + v.euclid_sq()) {
            return Err(CoreError::NotSpacelikeUnit(q));
        }
        Ok(Self { v })
    }

    /// Rescales a spacelike vector to unit Minkowski norm.
    pub fn normalize(v: AmbientVector) -> Result<Self, CoreError> {
        let q = v.mnorm_sq();
        if q <= 0.0 {
            return Err(CoreError::NotSpacelike(q));
        }
        Ok(Self { v: v.scaled(1.0 / q.sqrt()) })
    }

    pub fn from_coords(coords: &[f64]) -> Result<Self, CoreError> {
        Self::normalize(AmbientVector::new(coords)?)
    }

    pub fn vec(&self) -> &AmbientVector {
        &self.v
    }

    /// Signed separation `<x,v>` of a point from the wall `{<x,v> = 0}`.
    pub fn signed_separation(&self, x: &HPoint) -> f64 {
        minkowski_form(x.vec(), &self.v)
    }

    /// Hyperbolic distance from a point to the wall: `asinh(|<x,v>|)`.
    pub fn wall_distance(&self, x: &HPoint) -> f64 {
        self.signed_separation(x).abs().asinh()
    }

    /// Foot of the perpendicular from a point onto the wall:
    /// `(x - <x,v> v) / sqrt(1 + <x,v>^2)`.
    pub fn wall_foot(&self, x: &HPoint) -> HPoint {
        let s = self.signed_separation(x);
        HPoint::trusted((*x.vec() - self.v * s).scaled(1.0 / (1.0 + s * s).sqrt()))
    }
}
