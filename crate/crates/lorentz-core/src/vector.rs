//! Ambient Minkowski vectors of dimension 2, 3, or 4.

use crate::CoreError;

/// A vector in Minkowski space R^{d,1} with d in {1,2,3}.
///
/// Coordinates are `(x_1, ..., x_d, x_{d+1})` where the last coordinate is
/// the time direction. Stored in a fixed `[f64; 4]` with the active length
/// tracked, so the type is `Copy` for all supported dimensions.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AmbientVector {
    n: usize,
    c: [f64; 4],
}

/// Causal class of a vector under the Minkowski form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CausalClass {
    FutureTimelike,
    PastTimelike,
    Spacelike,
    Lightlike,
}

/// The Minkowski bilinear form `sum_{i<=d} x_i y_i - x_{d+1} y_{d+1}`.
pub fn minkowski_form(x: &AmbientVector, y: &AmbientVector) -> f64 {
    assert_eq!(x.n, y.n, "minkowski_form: dimension mismatch");
    let mut s = 0.0;
    for i in 0..x.n - 1 {
        s += x.c[i] * y.c[i];
    }
    s - x.c[x.n - 1] * y.c[y.n - 1]
}

impl AmbientVector {
    /// Builds a vector from its coordinates; the slice length is the ambient
    /// dimension d+1 and must be 2, 3, or 4.
    pub fn new(coords: &[f64]) -> Result<Self, CoreError> {
        if !(2..=4).contains(&coords.len()) {
            return Err(CoreError::BadDimension(coords.len()));
        }
        let mut c = [0.0; 4];
        c[..coords.len()].copy_from_slice(coords);
        Ok(Self { n: coords.len(), c })
    }

    /// Zero vector of ambient dimension `n`.
    pub fn zero(n: usize) -> Self {
        assert!((2..=4).contains(&n), "ambient dimension must be 2..=4");
        Self { n, c: [0.0; 4] }
    }

    /// Standard basis vector `e_i` (0-based) of ambient dimension `n`.
    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = Self::zero(n);
        assert!(i < n, "basis index out of range");
        v.c[i] = 1.0;
        v
    }

    /// Ambient dimension d+1.
    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    /// Hyperbolic dimension d.
    pub fn dim(&self) -> usize {
        self.n - 1
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.c[..self.n]
    }

    /// Minkowski form against another vector.
    pub fn mdot(&self, other: &Self) -> f64 {
        minkowski_form(self, other)
    }

    /// Minkowski square `<x,x>`.
    pub fn mnorm_sq(&self) -> f64 {
        minkowski_form(self, self)
    }

    /// Euclidean square, used only for tolerance scales.
    pub fn euclid_sq(&self) -> f64 {
        self.as_slice().iter().map(|v| v * v).sum()
    }

    /// Causal class with a relative tolerance of 1e-12 on the form value.
    pub fn causal_class(&self) -> CausalClass {
        let q = self.mnorm_sq();
        let scale = self.euclid_sq().max(1.0e-300);
        if q.abs() <= 1.0e-12 * scale {
            CausalClass::Lightlike
        } else if q < 0.0 {
            if self.c[self.n - 1] > 0.0 {
                CausalClass::FutureTimelike
            } else {
                CausalClass::PastTimelike
            }
        } else {
            CausalClass::Spacelike
        }
    }

    /// Time coordinate `x_{d+1}`.
    pub fn time(&self) -> f64 {
        self.c[self.n - 1]
    }

    pub fn scaled(&self, s: f64) -> Self {
        let mut r = *self;
        for i in 0..r.n {
            r.c[i] *= s;
        }
        r
    }
}

impl std::ops::Index<usize> for AmbientVector {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        assert!(i < self.n, "coordinate index out of range");
        &self.c[i]
    }
}

impl std::ops::IndexMut<usize> for AmbientVector {
    fn index_mut(&mut self, i: usize) -> &mut f64 {
        assert!(i < self.n, "coordinate index out of range");
        &mut self.c[i]
    }
}

impl std::ops::Add for AmbientVector {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        assert_eq!(self.n, rhs.n, "add: dimension mismatch");
        let mut r = self;
        for i in 0..r.n {
            r.c[i] += rhs.c[i];
        }
        r
    }
}

impl std::ops::Sub for AmbientVector {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        assert_eq!(self.n, rhs.n, "sub: dimension mismatch");
        let mut r = self;
        for i in 0..r.n {
            r.c[i] -= rhs.c[i];
        }
        r
    }
}

impl std::ops::Neg for AmbientVector {
    type Output = Self;
    fn neg(self) -> Self {
        self.scaled(-1.0)
    }
}

impl std::ops::Mul<f64> for AmbientVector {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        self.scaled(s)
    }
}

impl std::fmt::Display for AmbientVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.as_slice().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn form_has_signature_d_1() {
        let x = AmbientVector::new(&[1.0, 2.0, 3.0]).unwrap();
        let y = AmbientVector::new(&[-1.0, 0.5, 2.0]).unwrap();
        assert_eq!(minkowski_form(&x, &y), 1.0 * -1.0 + 2.0 * 0.5 - 3.0 * 2.0);
    }

    #[test]
    fn causal_classification() {
        let t = AmbientVector::new(&[0.0, 0.0, 1.0]).unwrap();
        assert_eq!(t.causal_class(), CausalClass::FutureTimelike);
        assert_eq!((-t).causal_class(), CausalClass::PastTimelike);
        let s = AmbientVector::new(&[1.0, 0.0, 0.0]).unwrap();
        assert_eq!(s.causal_class(), CausalClass::Spacelike);
        let l = AmbientVector::new(&[1.0, 0.0, 1.0]).unwrap();
        assert_eq!(l.causal_class(), CausalClass::Lightlike);
    }

    #[test]
    fn dimension_validation() {
        assert!(AmbientVector::new(&[1.0]).is_err());
        assert!(AmbientVector::new(&[1.0; 5]).is_err());
        assert!(AmbientVector::new(&[1.0; 4]).is_ok());
    }

    proptest! {
        // Bilinearity and symmetry of the form.
        #[test]
        fn form_is_symmetric_bilinear(
            a in proptest::array::uniform3(-10.0f64..10.0),
            b in proptest::array::uniform3(-10.0f64..10.0),
            s in -5.0f64..5.0,
        ) {
            let x = AmbientVector::new(&a).unwrap();
            let y = AmbientVector::new(&b).unwrap();
            prop_assert!((minkowski_form(&x, &y) - minkowski_form(&y, &x)).abs() < 1e-12);
            let lhs = minkowski_form(&(x * s), &y);
            let rhs = s * minkowski_form(&x, &y);
            prop_assert!((lhs - rhs).abs() < 1e-9 * (1.0 + rhs.abs()));
        }
    }
}
