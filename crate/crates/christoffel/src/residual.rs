//! Residual verification through the ambient wave operator.
//!
//! For the 1-homogeneous extension `H(x) = |x| h(x/|x|)` of a support
//! function, the wave operator of Minkowski space satisfies
//! `Box H = Delta h - d h` on H^d, so `(1/d) Box H = phi` characterizes a
//! solution of the Christoffel equation. The wave operator needs only
//! straight-line central differences in the ambient coordinates, which keeps
//! the check chart-free.

use crate::ChristoffelError;
use lorentz_core::{AmbientVector, HPoint};
use support_fn::SupportSpec;

fn wave_fd(
    big_h: &mut dyn FnMut(&AmbientVector) -> Result<f64, ChristoffelError>,
    x: &HPoint,
    step: f64,
) -> Result<f64, ChristoffelError> {
    if !(step > 0.0) || step > 0.5 {
        return Err(ChristoffelError::BadStep { step });
    }
    let d = x.dim();
    let center = big_h(x.vec())?;
    let mut wave = 0.0;
    for i in 0..=d {
        let e = AmbientVector::basis(d + 1, i);
        // Fourth-order central stencil: a second-order one cannot reach the
        // 1e-8 verification budget at any step once roundoff amplification
        // by 1/step^2 is accounted for.
        let p1 = big_h(&(*x.vec() + e * step))?;
        let m1 = big_h(&(*x.vec() - e * step))?;
        let p2 = big_h(&(*x.vec() + e * (2.0 * step)))?;
        let m2 = big_h(&(*x.vec() - e * (2.0 * step)))?;
        let second =
            (-p2 + 16.0 * p1 - 30.0 * center + 16.0 * m1 - m2) / (12.0 * step * step);
        // Spatial coordinates add, the time coordinate subtracts.
        wave += if i < d { second } else { -second };
    }
    Ok(wave)
}

/// `|(1/d) Box H(x) - phi(x)|` for the extension of an arbitrary pointwise
/// solver `h` on H^d. Evaluation failures at a stencil point are reported as
/// a bad step.
pub fn residual_wave_fn(
    h: &mut dyn FnMut(&HPoint) -> Result<f64, ChristoffelError>,
    phi_at_x: f64,
    x: &HPoint,
    step: f64,
) -> Result<f64, ChristoffelError> {
    let d = x.dim() as f64;
    let mut big_h = |w: &AmbientVector| -> Result<f64, ChristoffelError> {
        let q = w.mnorm_sq();
        if q >= 0.0 || w.time() <= 0.0 {
            return Err(ChristoffelError::NotFutureTimelike(q));
        }
        let norm = (-q).sqrt();
        Ok(norm * h(&HPoint::normalize(*w)?)?)
    };
    let wave = wave_fd(&mut big_h, x, step)?;
    Ok((wave / d - phi_at_x).abs())
}

/// `|(1/d) Box H(x) - phi(x)|` for a support specification (uses its
/// 1-homogeneous extension).
pub fn residual_wave(
    spec: &SupportSpec,
    phi_at_x: f64,
    x: &HPoint,
    step: f64,
) -> Result<f64, ChristoffelError> {
    let d = x.dim() as f64;
    let mut big_h = |w: &AmbientVector| {
        spec.extend(w).map_err(|_| ChristoffelError::BadStep { step })
    };
    let wave = wave_fd(&mut big_h, x, step)?;
    Ok((wave / d - phi_at_x).abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use lorentz_core::AmbientVector;

    fn pt2(r: f64, th: f64) -> HPoint {
        HPoint::from_coords(&[r.sinh() * th.cos(), r.sinh() * th.sin(), r.cosh()]).unwrap()
    }

    #[test]
    fn constant_support_solves_constant_density() {
        // h = -1 solves (1/d) Delta h - h = 1.
        let spec = SupportSpec::Constant(-1.0);
        for x in [HPoint::basepoint(2), pt2(1.2, 0.7)] {
            let r = residual_wave(&spec, 1.0, &x, 3.0e-3).unwrap();
            assert!(r < 1e-8, "residual {r}");
        }
    }

    #[test]
    fn cone_support_is_harmonic() {
        // H linear: Box H = 0, phi = 0.
        let spec = SupportSpec::ConeApex(AmbientVector::new(&[0.2, -0.4, 0.9]).unwrap());
        let r = residual_wave(&spec, 0.0, &pt2(0.8, 2.0), 3.0e-3).unwrap();
        assert!(r < 1e-8, "residual {r}");
    }

    #[test]
    fn rejects_bad_steps() {
        let spec = SupportSpec::Constant(-1.0);
        let x = HPoint::basepoint(2);
        assert!(residual_wave(&spec, 1.0, &x, 0.0).is_err());
        assert!(residual_wave(&spec, 1.0, &x, 0.9).is_err());
    }
}
