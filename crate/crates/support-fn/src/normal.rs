//! Normal representation: the boundary point of the F-convex set whose
//! support plane has the given normal.
//!
//! For a support function `h` differentiable at `eta` in H^d, the contact
//! point is `chi(eta) = grad h(eta) - h(eta) eta`. It satisfies the Euler
//! identity `<chi(eta), eta> = h(eta)` and, for smooth strictly convex sets,
//! parametrizes the boundary.

use crate::diff::gradient_ambient;
use crate::spec::SupportSpec;
use crate::SupportError;
use lorentz_core::{AmbientVector, HPoint};

/// The contact point `chi(eta) = grad h - h eta` of the support plane with
/// normal `eta`. For `PolyhedralMax` this is exactly the maximizing vertex;
/// a tie (normal on the dual wall complex) is reported as an error.
pub fn normal_representation(
    spec: &SupportSpec,
    eta: &HPoint,
) -> Result<AmbientVector, SupportError> {
    if let SupportSpec::PolyhedralMax(vs) = spec {
        let ties = spec.tie_set(eta);
        if ties.len() != 1 {
            return Err(SupportError::TieSet(ties));
        }
        return Ok(vs[ties[0]]);
    }
    let g = gradient_ambient(spec, eta)?;
    let h = spec.eval(eta)?;
    Ok(g - *eta.vec() * h)
}
