//! The catalog of support function specifications and their evaluation.

use crate::field::SolutionField;
use crate::profile::RadialProfile;
use crate::SupportError;
use lorentz_core::{minkowski_form, AmbientVector, CausalClass, HPoint, SpacelikeUnit};

/// Scalar value of the closed-form solution for a single geodesic wall of
/// weight `a`, as a function of the signed separation `s = <x, v>`:
/// `(a/pi) (s atan(1/s) - 1)`, extended by continuity to `-a/pi` at `s = 0`.
pub fn elementary_wall_value(weight: f64, s: f64) -> f64 {
    if s == 0.0 {
        -weight / std::f64::consts::PI
    } else {
        weight / std::f64::consts::PI * (s * (1.0 / s).atan() - 1.0)
    }
}

/// A support function specification on H^d.
///
/// The catalog covers the closed-form families used throughout: constants
/// (hyperbolic balls `B_t` for negative values, the future cone over the
/// origin for zero), translated cones, signed powers of cosh of the distance
/// to an axis, maxima of finitely many linear forms (polyhedral sets), sums
/// and scalings, tabulated numerical solutions, the elementary wall solution,
/// and two structured forms produced by the hedgehog decomposition (radial
/// profiles and differences).
#[derive(Clone, Debug)]
pub enum SupportSpec {
    /// `h = c`. Convex for `c <= 0`: the ball `B_t` with `t = -c` (the cone
    /// over the origin when c = 0).
    Constant(f64),
    /// `h(x) = <p, x>`: the future cone with apex translated to `p`.
    ConeApex(AmbientVector),
    /// `h(x) = sign * cosh(dist(axis, x))^alpha`. Convex for `alpha >= 1`
    /// with positive sign, and for `-1 <= alpha <= 1` with negative sign.
    PowerCosh { alpha: f64, positive: bool, axis: HPoint },
    /// `h(x) = max_i <p_i, x>`: convex polyhedral when the vertex list comes
    /// from a coherent construction.
    PolyhedralMax(Vec<AmbientVector>),
    /// Closed-form solution for a single geodesic wall `{<x,v> = 0}` of
    /// weight `a`: `h = (a/pi)(s atan(1/s) - 1)` with `s = <x, v>`.
    ElementaryWall { weight: f64, normal: SpacelikeUnit },
    Sum(Vec<SupportSpec>),
    Scale(f64, Box<SupportSpec>),
    /// Numerically tabulated solution on a polar chart.
    Tabulated(SolutionField),
    /// Rotationally invariant profile with precomputed curvature data.
    Radial(RadialProfile),
    /// Difference of two specifications (hedgehog).
    Difference(Box<SupportSpec>, Box<SupportSpec>),
}

impl SupportSpec {
    /// Convenience constructor for the elementary wall solution.
    pub fn elementary_wall(weight: f64, normal: SpacelikeUnit) -> Self {
        SupportSpec::ElementaryWall { weight, normal }
    }

    /// The zero-mean-curvature example: the elementary wall with `a = pi`,
    /// whose boundary surface has vanishing mean curvature.
    pub fn zero_mean_surface(normal: SpacelikeUnit) -> Self {
        SupportSpec::ElementaryWall { weight: std::f64::consts::PI, normal }
    }

    /// Hyperbolic dimension the spec is pinned to, if any part fixes one.
    pub fn dim(&self) -> Option<usize> {
        match self {
            SupportSpec::Constant(_) => None,
            SupportSpec::ConeApex(p) => Some(p.dim()),
            SupportSpec::PowerCosh { axis, .. } => Some(axis.dim()),
            SupportSpec::PolyhedralMax(vs) => vs.first().map(|v| v.dim()),
            SupportSpec::ElementaryWall { normal, .. } => Some(normal.vec().dim()),
            SupportSpec::Sum(parts) => parts.iter().find_map(|p| p.dim()),
            SupportSpec::Scale(_, inner) => inner.dim(),
            SupportSpec::Tabulated(f) => Some(f.dim()),
            SupportSpec::Radial(p) => Some(p.dim()),
            SupportSpec::Difference(a, b) => a.dim().or(b.dim()),
        }
    }

    /// Checks internal dimension consistency against an evaluation point.
    fn check_dim(&self, at: &HPoint) -> Result<(), SupportError> {
        match self.dim() {
            Some(d) if d != at.dim() => Err(SupportError::DimensionMismatch(d, at.dim())),
            _ => Ok(()),
        }
    }

    /// Evaluates the restricted support function `h` at a point of H^d.
    pub fn eval(&self, x: &HPoint) -> Result<f64, SupportError> {
        self.check_dim(x)?;
        match self {
            SupportSpec::Constant(c) => Ok(*c),
            SupportSpec::ConeApex(p) => Ok(minkowski_form(p, x.vec())),
            SupportSpec::PowerCosh { alpha, positive, axis } => {
                let c = axis.distance(x).cosh();
                let v = c.powf(*alpha);
                Ok(if *positive { v } else { -v })
            }
            SupportSpec::PolyhedralMax(vs) => {
                if vs.is_empty() {
                    return Err(SupportError::Empty);
                }
                Ok(vs
                    .iter()
                    .map(|p| minkowski_form(p, x.vec()))
                    .fold(f64::NEG_INFINITY, f64::max))
            }
            SupportSpec::ElementaryWall { weight, normal } => {
                Ok(elementary_wall_value(*weight, normal.signed_separation(x)))
            }
            SupportSpec::Sum(parts) => {
                if parts.is_empty() {
                    return Err(SupportError::Empty);
                }
                let mut s = 0.0;
                for p in parts {
                    s += p.eval(x)?;
                }
                Ok(s)
            }
            SupportSpec::Scale(lambda, inner) => Ok(lambda * inner.eval(x)?),
            SupportSpec::Tabulated(field) => field.eval(x),
            SupportSpec::Radial(profile) => profile.eval(x),
            SupportSpec::Difference(a, b) => Ok(a.eval(x)? - b.eval(x)?),
        }
    }

    /// The 1-homogeneous extension `H(x) = |x| h(x/|x|)` for future timelike
    /// ambient vectors.
    pub fn extend(&self, x: &AmbientVector) -> Result<f64, SupportError> {
        if x.causal_class() != CausalClass::FutureTimelike {
            return Err(SupportError::Core(lorentz_core::CoreError::NotFutureTimelike {
                form: x.mnorm_sq(),
                last: x.time(),
            }));
        }
        let r = (-x.mnorm_sq()).sqrt();
        let unit = HPoint::normalize(*x)?;
        Ok(r * self.eval(&unit)?)
    }

    /// Indices of vertices attaining the maximum within a relative 1e-9 tie
    /// tolerance (PolyhedralMax only; empty for other variants).
    pub fn tie_set(&self, x: &HPoint) -> Vec<usize> {
        if let SupportSpec::PolyhedralMax(vs) = self {
            let vals: Vec<f64> = vs.iter().map(|p| minkowski_form(p, x.vec())).collect();
            let best = vals.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
            let tol = 1.0e-9 * (1.0 + best.abs());
            vals.iter()
                .enumerate()
                .filter(|(_, &v)| best - v <= tol)
                .map(|(i, _)| i)
                .collect()
        } else {
            Vec::new()
        }
    }

    /// Minkowski sum of the underlying sets: sum of support functions.
    pub fn minkowski_sum(parts: Vec<SupportSpec>) -> Result<Self, SupportError> {
        if parts.is_empty() {
            return Err(SupportError::Empty);
        }
        Ok(SupportSpec::Sum(parts))
    }

    /// Scaling of the underlying set by a nonnegative factor.
    pub fn scaled(self, lambda: f64) -> Self {
        SupportSpec::Scale(lambda, Box::new(self))
    }
}
