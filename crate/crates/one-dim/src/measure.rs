//! Measures on the d = 1 hyperboloid and the bump family used to pair with
//! them distributionally.

use crate::quad::integrate;
use crate::OneDimError;
use std::fmt;
use std::sync::Arc;

/// Shared continuous profile on the hyperbola coordinate.
pub type Profile1D = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// A continuous density with compact support `[lower, upper]`; compactness is
/// the stated growth bound making the measure integrable against e^{-|t|}.
#[derive(Clone)]
pub struct Density1D {
    func: Profile1D,
    lower: f64,
    upper: f64,
}

impl Density1D {
    pub fn new(func: Profile1D, lower: f64, upper: f64) -> Result<Self, OneDimError> {
        if !lower.is_finite() || !upper.is_finite() || !(lower < upper) {
            return Err(OneDimError::BadDensity(format!(
                "support must be a bounded interval, got [{lower}, {upper}]"
            )));
        }
        Ok(Density1D { func, lower, upper })
    }

    pub fn eval(&self, t: f64) -> f64 {
        if t < self.lower || t > self.upper {
            0.0
        } else {
            (self.func)(t)
        }
    }

    pub fn bounds(&self) -> (f64, f64) {
        (self.lower, self.upper)
    }

    /// Integrates `g` weighted by the density over its support, splitting at
    /// the optional interior kink location `split`.
    pub(crate) fn weighted_integral(&self, g: &dyn Fn(f64) -> f64, split: Option<f64>) -> f64 {
        let f = |s: f64| g(s) * self.eval(s);
        match split {
            Some(c) if c > self.lower && c < self.upper => {
                integrate(&f, self.lower, c, 0.5e-12) + integrate(&f, c, self.upper, 0.5e-12)
            }
            _ => integrate(&f, self.lower, self.upper, 1.0e-12),
        }
    }
}

impl fmt::Debug for Density1D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Density1D")
            .field("lower", &self.lower)
            .field("upper", &self.upper)
            .finish_non_exhaustive()
    }
}

/// Atoms plus an optional continuous density; atoms are kept sorted by
/// position and must carry positive weight.
#[derive(Clone, Debug, Default)]
pub struct OneDimMeasure {
    atoms: Vec<(f64, f64)>,
    density: Option<Density1D>,
}

impl OneDimMeasure {
    pub fn new(
        mut atoms: Vec<(f64, f64)>,
        density: Option<Density1D>,
    ) -> Result<Self, OneDimError> {
        for &(t, w) in &atoms {
            if !t.is_finite() || !w.is_finite() || !(w > 0.0) {
                return Err(OneDimError::BadAtom(w));
            }
        }
        atoms.sort_by(|a, b| a.0.total_cmp(&b.0));
        Ok(OneDimMeasure { atoms, density })
    }

    pub fn dirac(t: f64, w: f64) -> Result<Self, OneDimError> {
        Self::new(vec![(t, w)], None)
    }

    pub fn empty() -> Self {
        OneDimMeasure::default()
    }

    pub fn atoms(&self) -> &[(f64, f64)] {
        &self.atoms
    }

    pub fn density(&self) -> Option<&Density1D> {
        self.density.as_ref()
    }

    /// The pairing `integral of f d(mu)`: atom weights at the atom positions
    /// plus the density integral.
    pub fn pair_with(&self, f: &dyn Fn(f64) -> f64) -> f64 {
        let mut total: f64 = self.atoms.iter().map(|&(t, w)| w * f(t)).sum();
        if let Some(d) = &self.density {
            total += d.weighted_integral(f, None);
        }
        total
    }
}

/// Compactly supported C^2 bump `(1 - u^2)^3` with `u = (t - center)/radius`,
/// with a closed-form second derivative for distributional pairings.
#[derive(Clone, Copy, Debug)]
pub struct Bump1D {
    pub center: f64,
    pub radius: f64,
}

impl Bump1D {
    pub fn new(center: f64, radius: f64) -> Self {
        assert!(radius > 0.0, "bump radius must be positive");
        Bump1D { center, radius }
    }

    pub fn eval(&self, t: f64) -> f64 {
        let u = (t - self.center) / self.radius;
        if u.abs() >= 1.0 {
            0.0
        } else {
            let q = 1.0 - u * u;
            q * q * q
        }
    }

    pub fn second_derivative(&self, t: f64) -> f64 {
        let u = (t - self.center) / self.radius;
        if u.abs() >= 1.0 {
            0.0
        } else {
            let q = 1.0 - u * u;
            6.0 * q * (5.0 * u * u - 1.0) / (self.radius * self.radius)
        }
    }

    pub fn support(&self) -> (f64, f64) {
        (self.center - self.radius, self.center + self.radius)
    }
}
