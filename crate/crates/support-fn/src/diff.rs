//! Tangential derivatives and curvature data of support functions.
//!
//! The reverse second fundamental form of `h` at a point of H^d is the
//! symmetric bilinear form `grad^2 h - h g` on the tangent space; its
//! eigenvalues are the radii of curvature of the underlying F-convex set.
//! Every catalog family with a closed form gets analytic derivatives; the
//! generic fallback uses centered finite differences along geodesics
//! (geodesic normal coordinates) with step 1e-4.

use crate::spec::SupportSpec;
use crate::SupportError;
use lorentz_core::{minkowski_form, sym_eigen, AmbientVector, HPoint};

const FD_STEP: f64 = 1.0e-4;

/// Curvature data at a point: the reverse second fundamental form expressed
/// in an orthonormal tangent frame, with its eigenvalues (radii of
/// curvature, ascending) and eigendirections (coefficients in the frame).
#[derive(Clone, Debug)]
pub struct CurvatureData {
    pub point: HPoint,
    pub frame: Vec<AmbientVector>,
    pub reverse_ii: [[f64; 3]; 3],
    pub radii: [f64; 3],
    pub directions: [[f64; 3]; 3],
}

impl CurvatureData {
    /// Smallest radius of curvature.
    pub fn min_radius(&self) -> f64 {
        self.radii[0]
    }

    /// Largest radius of curvature.
    pub fn max_radius(&self) -> f64 {
        self.radii[self.point.dim() - 1]
    }

    /// Eigendirection for the smallest radius, as an ambient vector.
    pub fn min_direction(&self) -> AmbientVector {
        let d = self.point.dim();
        let mut v = AmbientVector::zero(d + 1);
        for i in 0..d {
            v = v + self.frame[i] * self.directions[0][i];
        }
        v
    }
}

/// Ambient representative of the tangential gradient of `h` at `x`.
pub(crate) fn gradient_ambient(
    spec: &SupportSpec,
    x: &HPoint,
) -> Result<AmbientVector, SupportError> {
    let n = x.dim() + 1;
    match spec {
        SupportSpec::Constant(_) => Ok(AmbientVector::zero(n)),
        SupportSpec::ConeApex(p) => Ok(x.project_tangent(p)),
        SupportSpec::PowerCosh { alpha, positive, axis } => {
            let s = -minkowski_form(axis.vec(), x.vec());
            let sigma = if *positive { 1.0 } else { -1.0 };
            let fp = sigma * alpha * s.powf(alpha - 1.0);
            // grad of s = <-axis, x> is the tangential projection of -axis.
            Ok((-*axis.vec() + *x.vec() * s) * fp)
        }
        SupportSpec::PolyhedralMax(_) => {
            let ties = spec.tie_set(x);
            if ties.len() != 1 {
                return Err(SupportError::TieSet(ties));
            }
            if let SupportSpec::PolyhedralMax(vs) = spec {
                Ok(x.project_tangent(&vs[ties[0]]))
            } else {
                unreachable!()
            }
        }
        SupportSpec::ElementaryWall { weight, normal } => {
            let s = normal.signed_separation(x);
            if s.abs() < 1.0e-12 {
                return Err(SupportError::NotDifferentiable(
                    "elementary wall solution has a ridge on the wall".into(),
                ));
            }
            let fp = weight / std::f64::consts::PI * ((1.0 / s).atan() - s / (1.0 + s * s));
            Ok((*normal.vec() + *x.vec() * s) * fp)
        }
        SupportSpec::Sum(parts) => {
            if parts.is_empty() {
                return Err(SupportError::Empty);
            }
            let mut g = AmbientVector::zero(n);
            for p in parts {
                g = g + gradient_ambient(p, x)?;
            }
            Ok(g)
        }
        SupportSpec::Scale(lambda, inner) => Ok(gradient_ambient(inner, x)? * *lambda),
        SupportSpec::Difference(a, b) => Ok(gradient_ambient(a, x)? - gradient_ambient(b, x)?),
        SupportSpec::Radial(profile) => {
            let rho = profile.base().distance(x);
            if rho < 1.0e-9 {
                return Ok(AmbientVector::zero(n));
            }
            // f'/sinh == (tangential + f)/cosh removes the 0/0 at the pole.
            let ratio =
                (profile.tangential_at(rho)? + profile.value_at(rho)?) / rho.cosh();
            Ok((*x.vec() * rho.cosh() - *profile.base().vec()) * ratio)
        }
        SupportSpec::Tabulated(_) => fd_gradient(spec, x),
    }
}

/// Finite-difference tangential gradient (diagnostic and generic fallback).
pub fn fd_gradient(spec: &SupportSpec, x: &HPoint) -> Result<AmbientVector, SupportError> {
    let frame = x.orthonormal_frame();
    let mut g = AmbientVector::zero(x.dim() + 1);
    for e in &frame {
        let hp = spec.eval(&x.exp(&(*e * FD_STEP))?)?;
        let hm = spec.eval(&x.exp(&(*e * -FD_STEP))?)?;
        g = g + *e * ((hp - hm) / (2.0 * FD_STEP));
    }
    Ok(g)
}

/// The reverse second fundamental form in the given orthonormal frame.
pub(crate) fn reverse_ii_in_frame(
    spec: &SupportSpec,
    x: &HPoint,
    frame: &[AmbientVector],
) -> Result<[[f64; 3]; 3], SupportError> {
    let d = x.dim();
    let mut m = [[0.0; 3]; 3];
    match spec {
        SupportSpec::Constant(c) => {
            for (i, row) in m.iter_mut().enumerate().take(d) {
                row[i] = -c;
            }
        }
        SupportSpec::ConeApex(_) => {}
        SupportSpec::PolyhedralMax(_) => {
            let ties = spec.tie_set(x);
            if ties.len() != 1 {
                return Err(SupportError::TieSet(ties));
            }
            // Locally linear: the reverse second fundamental form vanishes.
        }
        SupportSpec::PowerCosh { alpha, positive, axis } => {
            let s = -minkowski_form(axis.vec(), x.vec());
            let sigma = if *positive { 1.0 } else { -1.0 };
            let fpp = sigma * alpha * (alpha - 1.0) * s.powf(alpha - 2.0);
            let tang = sigma * (alpha - 1.0) * s.powf(*alpha);
            let mut w = [0.0; 3];
            for i in 0..d {
                w[i] = -minkowski_form(axis.vec(), &frame[i]);
            }
            for i in 0..d {
                for j in 0..d {
                    m[i][j] = fpp * w[i] * w[j] + if i == j { tang } else { 0.0 };
                }
            }
        }
        SupportSpec::ElementaryWall { weight, normal } => {
            let s = normal.signed_separation(x);
            if s.abs() < 1.0e-12 {
                return Err(SupportError::NotDifferentiable(
                    "elementary wall solution has a ridge on the wall".into(),
                ));
            }
            let a_pi = weight / std::f64::consts::PI;
            let q = 1.0 + s * s;
            let fpp = -2.0 * a_pi / (q * q);
            let tang = a_pi / q;
            let mut w = [0.0; 3];
            for i in 0..d {
                w[i] = minkowski_form(normal.vec(), &frame[i]);
            }
            for i in 0..d {
                for j in 0..d {
                    m[i][j] = fpp * w[i] * w[j] + if i == j { tang } else { 0.0 };
                }
            }
        }
        SupportSpec::Sum(parts) => {
            if parts.is_empty() {
                return Err(SupportError::Empty);
            }
            for p in parts {
                let part = reverse_ii_in_frame(p, x, frame)?;
                for i in 0..d {
                    for j in 0..d {
                        m[i][j] += part[i][j];
                    }
                }
            }
        }
        SupportSpec::Scale(lambda, inner) => {
            let part = reverse_ii_in_frame(inner, x, frame)?;
            for i in 0..d {
                for j in 0..d {
                    m[i][j] = lambda * part[i][j];
                }
            }
        }
        SupportSpec::Difference(a, b) => {
            let ma = reverse_ii_in_frame(a, x, frame)?;
            let mb = reverse_ii_in_frame(b, x, frame)?;
            for i in 0..d {
                for j in 0..d {
                    m[i][j] = ma[i][j] - mb[i][j];
                }
            }
        }
        SupportSpec::Radial(profile) => {
            let rho = profile.base().distance(x);
            let tang = profile.tangential_at(rho)?;
            if rho < 1.0e-8 {
                // At the pole the form is isotropic (the purely radial part
                // f'' - f' coth vanishes for a C^2 profile).
                for (i, row) in m.iter_mut().enumerate().take(d) {
                    row[i] = tang;
                }
            } else {
                let rad = profile.radial_at(rho)?;
                let u_amb = (*x.vec() * rho.cosh() - *profile.base().vec()) * (1.0 / rho.sinh());
                let mut u = [0.0; 3];
                for i in 0..d {
                    u[i] = minkowski_form(&u_amb, &frame[i]);
                }
                for i in 0..d {
                    for j in 0..d {
                        m[i][j] = rad * u[i] * u[j] + if i == j { tang } else { 0.0 };
                    }
                }
            }
        }
        SupportSpec::Tabulated(_) => return fd_reverse_ii(spec, x, frame),
    }
    Ok(m)
}

/// Finite-difference reverse second fundamental form in a frame
/// (diagnostic and generic fallback). Uses second differences along
/// geodesics, which in geodesic normal coordinates converge to the covariant
/// Hessian, then subtracts `h g`.
pub fn fd_reverse_ii(
    spec: &SupportSpec,
    x: &HPoint,
    frame: &[AmbientVector],
) -> Result<[[f64; 3]; 3], SupportError> {
    let d = x.dim();
    let h0 = spec.eval(x)?;
    let dd = FD_STEP;
    let second = |u: &AmbientVector| -> Result<f64, SupportError> {
        let hp = spec.eval(&x.exp(&(*u * dd))?)?;
        let hm = spec.eval(&x.exp(&(*u * -dd))?)?;
        Ok((hp - 2.0 * h0 + hm) / (dd * dd))
    };
    let mut hess = [[0.0; 3]; 3];
    for i in 0..d {
        hess[i][i] = second(&frame[i])?;
    }
    let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
    for i in 0..d {
        for j in i + 1..d {
            let u = (frame[i] + frame[j]) * inv_sqrt2;
            let duu = second(&u)?;
            let hij = duu - 0.5 * (hess[i][i] + hess[j][j]);
            hess[i][j] = hij;
            hess[j][i] = hij;
        }
    }
    for (i, row) in hess.iter_mut().enumerate().take(d) {
        row[i] -= h0;
    }
    Ok(hess)
}

/// Tangential gradient of the support function at `x`, as an ambient vector.
pub fn tangential_gradient(spec: &SupportSpec, x: &HPoint) -> Result<AmbientVector, SupportError> {
    gradient_ambient(spec, x)
}

/// Curvature data (reverse second fundamental form and radii) at `x`.
pub fn curvature(spec: &SupportSpec, x: &HPoint) -> Result<CurvatureData, SupportError> {
    let frame = x.orthonormal_frame();
    let m = reverse_ii_in_frame(spec, x, &frame)?;
    let (radii, directions) = sym_eigen(&m, x.dim());
    Ok(CurvatureData { point: *x, frame, reverse_ii: m, radii, directions })
}

/// Curvature data computed purely by finite differences (diagnostic).
pub fn curvature_fd(spec: &SupportSpec, x: &HPoint) -> Result<CurvatureData, SupportError> {
    let frame = x.orthonormal_frame();
    let m = fd_reverse_ii(spec, x, &frame)?;
    let (radii, directions) = sym_eigen(&m, x.dim());
    Ok(CurvatureData { point: *x, frame, reverse_ii: m, radii, directions })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use lorentz_core::SpacelikeUnit;
    use proptest::prelude::*;

    fn pt(r: f64, th: f64) -> HPoint {
        HPoint::from_coords(&[r.sinh() * th.cos(), r.sinh() * th.sin(), r.cosh()]).unwrap()
    }

    #[test]
    fn ball_radii_are_constant() {
        let spec = SupportSpec::Constant(-1.7);
        let c = curvature(&spec, &pt(0.9, 2.2)).unwrap();
        assert_relative_eq!(c.radii[0], 1.7, epsilon = 1e-12);
        assert_relative_eq!(c.radii[1], 1.7, epsilon = 1e-12);
    }

    #[test]
    fn cone_radii_vanish() {
        let spec = SupportSpec::ConeApex(AmbientVector::new(&[0.2, -0.1, 0.6]).unwrap());
        let c = curvature(&spec, &pt(1.4, 0.7)).unwrap();
        assert!(c.radii[0].abs() < 1e-12 && c.radii[1].abs() < 1e-12);
    }

    #[test]
    fn power_cosh_radii_match_closed_form() {
        let alpha = 1.2;
        let spec =
            SupportSpec::PowerCosh { alpha, positive: true, axis: HPoint::basepoint(2) };
        let rho = 0.8f64;
        let c = curvature(&spec, &pt(rho, 0.3)).unwrap();
        let tang = (alpha - 1.0) * rho.cosh().powf(alpha);
        let rad = tang + alpha * (alpha - 1.0) * rho.cosh().powf(alpha - 2.0) * rho.sinh().powi(2);
        assert_relative_eq!(c.radii[0], tang, epsilon = 1e-10);
        assert_relative_eq!(c.radii[1], rad, epsilon = 1e-10);
    }

    #[test]
    fn elementary_wall_is_trace_free() {
        let spec = SupportSpec::zero_mean_surface(
            SpacelikeUnit::from_coords(&[1.0, 0.0, 0.0]).unwrap(),
        );
        let c = curvature(&spec, &pt(1.1, 0.9)).unwrap();
        assert!((c.radii[0] + c.radii[1]).abs() < 1e-12, "mean curvature must vanish");
    }

    #[test]
    fn wall_ridge_is_not_differentiable() {
        let spec = SupportSpec::elementary_wall(
            1.0,
            SpacelikeUnit::from_coords(&[1.0, 0.0, 0.0]).unwrap(),
        );
        let on_wall = HPoint::from_coords(&[0.0, 0.5f64.sinh(), 0.5f64.cosh()]).unwrap();
        assert!(curvature(&spec, &on_wall).is_err());
    }

    proptest! {
        // Finite differences agree with the analytic forms within 1e-5.
        #[test]
        fn fd_matches_analytic(r in 0.1f64..2.0, th in 0.0f64..6.28, alpha in 1.05f64..2.0) {
            let x = pt(r, th);
            let specs = vec![
                SupportSpec::PowerCosh { alpha, positive: true, axis: HPoint::basepoint(2) },
                SupportSpec::Sum(vec![
                    SupportSpec::Constant(-1.0),
                    SupportSpec::ConeApex(AmbientVector::new(&[0.1, 0.2, 0.35]).unwrap()),
                ]),
            ];
            for spec in &specs {
                let frame = x.orthonormal_frame();
                let exact = reverse_ii_in_frame(spec, &x, &frame).unwrap();
                let fd = fd_reverse_ii(spec, &x, &frame).unwrap();
                for i in 0..2 {
                    for j in 0..2 {
                        prop_assert!((exact[i][j] - fd[i][j]).abs() < 1e-5 * (1.0 + exact[i][j].abs()),
                            "entry ({},{}): {} vs {}", i, j, exact[i][j], fd[i][j]);
                    }
                }
                let g_exact = gradient_ambient(spec, &x).unwrap();
                let g_fd = fd_gradient(spec, &x).unwrap();
                let scale = 1.0 + g_exact.euclid_sq().sqrt();
                prop_assert!((g_exact - g_fd).euclid_sq().sqrt() < 1e-6 * scale);
            }
        }

        // Wall solution: FD agrees away from the ridge.
        #[test]
        fn fd_matches_wall(r in 0.3f64..1.8, th in 0.2f64..1.2) {
            let x = pt(r, th);
            let spec = SupportSpec::elementary_wall(
                2.0,
                SpacelikeUnit::from_coords(&[1.0, 0.0, 0.0]).unwrap(),
            );
            let s = minkowski_form(x.vec(), &AmbientVector::new(&[1.0, 0.0, 0.0]).unwrap());
            prop_assume!(s.abs() > 0.05);
            let frame = x.orthonormal_frame();
            let exact = reverse_ii_in_frame(&spec, &x, &frame).unwrap();
            let fd = fd_reverse_ii(&spec, &x, &frame).unwrap();
            for i in 0..2 {
                for j in 0..2 {
                    prop_assert!((exact[i][j] - fd[i][j]).abs() < 1e-4);
                }
            }
        }
    }
}
