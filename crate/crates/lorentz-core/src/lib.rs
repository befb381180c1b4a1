//! Minkowski linear algebra and the hyperboloid model of hyperbolic space.
//!
//! Ambient space is R^{d+1} with the bilinear form
//! `<x,y> = x_1 y_1 + ... + x_d y_d - x_{d+1} y_{d+1}`
//! for d in {1, 2, 3}. Hyperbolic space H^d is realized as the future sheet
//! `{x : <x,x> = -1, x_{d+1} > 0}`, and the future cone, spacelike unit
//! vectors, Lorentz isometries, polar coordinates and tangent frames are all
//! expressed through that form.
//!
//! Everything here is small and fixed size (ambient dimension at most 4), so
//! vectors and matrices are stack arrays and the solvers are hand rolled.

mod hyperboloid;
mod isometry;
mod matrix;
mod vector;

pub use hyperboloid::{HPoint, PolarCoords, SpacelikeUnit};
pub use isometry::{cocycle_check, coboundary_solve_d1, CocycleReport, LorentzIsometry};
pub use matrix::{solve_small, sym_eigen};
pub use vector::{minkowski_form, AmbientVector, CausalClass};

/// Errors for constructions that fail geometric validation.
#[derive(Debug, thiserror::Error)]
pub enum CoreError {
    #[error("ambient dimension must be 2, 3, or 4, got {0}")]
    BadDimension(usize),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("vector is not future timelike (form value {form:.3e}, last coordinate {last:.3e})")]
    NotFutureTimelike { form: f64, last: f64 },
    #[error("point is not on the hyperboloid: <x,x> = {0:.6e}")]
    NotOnHyperboloid(f64),
    #[error("vector is not a unit spacelike vector: <v,v> = {0:.6e}")]
    NotSpacelikeUnit(f64),
    #[error("vector is not spacelike: <v,v> = {0:.6e}")]
    NotSpacelike(f64),
    #[error("matrix does not preserve the Minkowski form (max defect {0:.3e})")]
    NotLorentz(f64),
    #[error("matrix reverses the time orientation")]
    NotOrthochronous,
    #[error("linear system is singular or near singular (pivot {0:.3e})")]
    SingularSystem(f64),
    #[error("vector is not tangent at the given point (<u,x> = {0:.3e})")]
    NotTangent(f64),
    #[error("coboundary equation is degenerate: the linear part has 1 as an eigenvalue")]
    DegenerateCoboundary,
}
