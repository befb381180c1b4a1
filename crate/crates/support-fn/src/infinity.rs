//! Support values at infinity: the limit of `h(exp_base(rho Theta))/cosh rho`
//! along a geodesic ray, which is the total support function evaluated at
//! the lightlike direction `base + Theta`.

use crate::spec::SupportSpec;
use crate::SupportError;
use lorentz_core::{AmbientVector, HPoint};

#[derive(Clone, Copy, Debug)]
pub struct InfinityValue {
    /// Extrapolated limit; meaningless when `is_infinite` is set.
    pub value: f64,
    pub is_infinite: bool,
    /// Raw samples of h/cosh at rho = 5, 10, 20.
    pub samples: [f64; 3],
}

/// Richardson-style sampling of `h/cosh rho` at rho in {5, 10, 20} along the
/// ray from `base` with unit tangent `theta`. Declares divergence when the
/// magnitude at rho = 20 exceeds 1e6.
pub fn support_at_infinity(
    spec: &SupportSpec,
    base: &HPoint,
    theta: &AmbientVector,
) -> Result<InfinityValue, SupportError> {
    let mut samples = [0.0; 3];
    for (i, rho) in [5.0, 10.0, 20.0].into_iter().enumerate() {
        let p = base.polar_to(rho, theta)?;
        samples[i] = spec.eval(&p)? / rho.cosh();
    }
    let is_infinite = samples[2].abs() > 1.0e6;
    // Corrections decay at least like e^{-rho}; one extrapolation step on
    // the gap between rho = 10 and rho = 20 removes the leading term.
    let value = samples[2] + (samples[2] - samples[1]) / (10.0f64.exp() - 1.0);
    Ok(InfinityValue { value, is_infinite, samples })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use lorentz_core::minkowski_form;

    #[test]
    fn cone_limit_is_support_of_lightlike_direction() {
        let apex = AmbientVector::new(&[0.3, -0.4, 0.2]).unwrap();
        let spec = SupportSpec::ConeApex(apex);
        let base = HPoint::basepoint(2);
        for th in [0.0f64, 1.0, 2.5, 4.0] {
            let frame = base.orthonormal_frame();
            let theta = frame[0] * th.cos() + frame[1] * th.sin();
            let out = support_at_infinity(&spec, &base, &theta).unwrap();
            assert!(!out.is_infinite);
            let ell = *base.vec() + theta;
            assert_relative_eq!(out.value, minkowski_form(&apex, &ell), epsilon = 1e-8);
        }
    }

    #[test]
    fn ball_limit_vanishes() {
        // h = -t constant: h/cosh -> 0.
        let spec = SupportSpec::Constant(-2.0);
        let base = HPoint::basepoint(2);
        let theta = base.orthonormal_frame()[0];
        let out = support_at_infinity(&spec, &base, &theta).unwrap();
        assert!(!out.is_infinite);
        assert!(out.value.abs() < 1e-8);
    }

    #[test]
    fn growing_spec_diverges() {
        let spec = SupportSpec::PowerCosh {
            alpha: 2.5,
            positive: true,
            axis: HPoint::basepoint(2),
        };
        let base = HPoint::basepoint(2);
        let theta = base.orthonormal_frame()[0];
        let out = support_at_infinity(&spec, &base, &theta).unwrap();
        assert!(out.is_infinite);
    }
}
