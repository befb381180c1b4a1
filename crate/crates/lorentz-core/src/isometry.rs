//! Affine isometries of Minkowski space whose linear part preserves the
//! form and the future cone, plus cocycle utilities for group actions.

use crate::matrix::solve_small;
use crate::vector::AmbientVector;
use crate::{CoreError, HPoint};

/// An affine isometry `x -> L x + tau` with `L` in O(d,1) preserving the
/// future cone (orthochronous).
#[derive(Clone, Copy, Debug)]
pub struct LorentzIsometry {
    n: usize,
    linear: [[f64; 4]; 4],
    translation: AmbientVector,
}

impl LorentzIsometry {
    /// Validates `L^T J L = J` within 1e-10 per entry and that `L` preserves
    /// the future cone.
    pub fn new(linear: &[Vec<f64>], translation: AmbientVector) -> Result<Self, CoreError> {
        let n = translation.ambient_dim();
        if linear.len() != n || linear.iter().any(|r| r.len() != n) {
            return Err(CoreError::DimensionMismatch(linear.len(), n));
        }
        let mut l = [[0.0; 4]; 4];
        for (i, row) in linear.iter().enumerate() {
            l[i][..n].copy_from_slice(row);
        }
        let iso = Self { n, linear: l, translation };
        iso.validate()?;
        Ok(iso)
    }

    fn validate(&self) -> Result<(), CoreError> {
        let n = self.n;
        // L^T J L = J entrywise.
        let mut defect = 0.0f64;
        for a in 0..n {
            for b in 0..n {
                let mut s = 0.0;
                for k in 0..n {
                    let jk = if k == n - 1 { -1.0 } else { 1.0 };
                    s += self.linear[k][a] * jk * self.linear[k][b];
                }
                let target = if a != b {
                    0.0
                } else if a == n - 1 {
                    -1.0
                } else {
                    1.0
                };
                defect = defect.max((s - target).abs());
            }
        }
        if defect > 1.0e-10 {
            return Err(CoreError::NotLorentz(defect));
        }
        if self.linear[n - 1][n - 1] <= 0.0 {
            return Err(CoreError::NotOrthochronous);
        }
        Ok(())
    }

    pub fn identity(d: usize) -> Self {
        let n = d + 1;
        let mut l = [[0.0; 4]; 4];
        for (i, row) in l.iter_mut().enumerate().take(n) {
            row[i] = 1.0;
        }
        Self { n, linear: l, translation: AmbientVector::zero(n) }
    }

    /// Hyperbolic translation (boost) with rapidity `t` in the plane spanned
    /// by spatial axis `axis` (0-based) and the time axis.
    pub fn boost(d: usize, axis: usize, t: f64) -> Self {
        assert!(axis < d, "boost axis out of range");
        let n = d + 1;
        let mut iso = Self::identity(d);
        iso.linear[axis][axis] = t.cosh();
        iso.linear[axis][n - 1] = t.sinh();
        iso.linear[n - 1][axis] = t.sinh();
        iso.linear[n - 1][n - 1] = t.cosh();
        iso
    }

    /// The d=1 boost `[[cosh t, sinh t], [sinh t, cosh t]]`.
    pub fn boost_d1(t: f64) -> Self {
        Self::boost(1, 0, t)
    }

    /// Rotation by `angle` in the spatial plane (i, j), both 0-based.
    pub fn rotation(d: usize, i: usize, j: usize, angle: f64) -> Self {
        assert!(i < d && j < d && i != j, "rotation axes out of range");
        let mut iso = Self::identity(d);
        iso.linear[i][i] = angle.cos();
        iso.linear[i][j] = -angle.sin();
        iso.linear[j][i] = angle.sin();
        iso.linear[j][j] = angle.cos();
        iso
    }

    /// Replaces the translation part.
    pub fn with_translation(mut self, tau: AmbientVector) -> Self {
        assert_eq!(tau.ambient_dim(), self.n, "translation dimension mismatch");
        self.translation = tau;
        self
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn translation(&self) -> AmbientVector {
        self.translation
    }

    /// Applies only the linear part.
    pub fn apply_linear(&self, v: &AmbientVector) -> AmbientVector {
        assert_eq!(v.ambient_dim(), self.n, "apply_linear dimension mismatch");
        let mut out = AmbientVector::zero(self.n);
        for r in 0..self.n {
            let mut s = 0.0;
            for c in 0..self.n {
                s += self.linear[r][c] * v[c];
            }
            out[r] = s;
        }
        out
    }

    /// Applies the affine map `L v + tau` to an ambient point.
    pub fn apply_ambient(&self, v: &AmbientVector) -> AmbientVector {
        self.apply_linear(v) + self.translation
    }

    /// Applies the linear part to a hyperboloid point (the translation acts
    /// on Minkowski space, not on H^d) and renormalizes roundoff.
    pub fn apply_hyperboloid(&self, x: &HPoint) -> HPoint {
        HPoint::normalize(self.apply_linear(x.vec())).expect("Lorentz image stays on the sheet")
    }

    /// Composition `self . other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "compose dimension mismatch");
        let mut l = [[0.0; 4]; 4];
        for r in 0..self.n {
            for c in 0..self.n {
                let mut s = 0.0;
                for k in 0..self.n {
                    s += self.linear[r][k] * other.linear[k][c];
                }
                l[r][c] = s;
            }
        }
        let tau = self.apply_linear(&other.translation) + self.translation;
        Self { n: self.n, linear: l, translation: tau }
    }

    /// Inverse isometry; uses `L^{-1} = J L^T J`.
    pub fn inverse(&self) -> Self {
        let n = self.n;
        let mut l = [[0.0; 4]; 4];
        for r in 0..n {
            for c in 0..n {
                let jr = if r == n - 1 { -1.0 } else { 1.0 };
                let jc = if c == n - 1 { -1.0 } else { 1.0 };
                l[r][c] = jr * jc * self.linear[c][r];
            }
        }
        let inv = Self { n, linear: l, translation: AmbientVector::zero(n) };
        let tau = -inv.apply_linear(&self.translation);
        Self { translation: tau, ..inv }
    }

    fn linear_distance(&self, other: &Self) -> f64 {
        let mut m = 0.0f64;
        for r in 0..self.n {
            for c in 0..self.n {
                m = m.max((self.linear[r][c] - other.linear[r][c]).abs());
            }
        }
        m
    }

    fn translation_distance(&self, other: &Self) -> f64 {
        let mut m = 0.0f64;
        for i in 0..self.n {
            m = m.max((self.translation[i] - other.translation[i]).abs());
        }
        m
    }
}

/// Outcome of a cocycle consistency check.
#[derive(Clone, Debug)]
pub struct CocycleReport {
    pub consistent: bool,
    /// Largest translation mismatch among word pairs with equal linear parts.
    pub worst_mismatch: f64,
    /// Indices into the word list of the first failing pair.
    pub failing_pair: Option<(usize, usize)>,
}

/// Checks that the translation parts form a cocycle over the supplied words.
///
/// Each word is a sequence of generator indices and is composed left to
/// right, which makes `tau_{gamma mu} = tau_gamma + gamma_0 tau_mu` hold
/// along the word by construction. The real content is consistency of the
/// assignment: whenever two composed words evaluate to the same linear part,
/// their translation parts must agree within 1e-9. Single-index words stand
/// for the generators themselves, so relations like "word [0,0] must equal
/// the element supplied as generator 1" are expressed as the pair of words
/// [0,0] and [1].
pub fn cocycle_check(generators: &[LorentzIsometry], words: &[Vec<usize>]) -> CocycleReport {
    let mut items: Vec<LorentzIsometry> = Vec::with_capacity(words.len());
    for word in words {
        if word.is_empty() {
            continue;
        }
        let mut g = generators[word[0]];
        for &idx in &word[1..] {
            g = g.compose(&generators[idx]);
        }
        items.push(g);
    }
    let mut worst = 0.0f64;
    let mut failing = None;
    for i in 0..items.len() {
        for j in i + 1..items.len() {
            if items[i].linear_distance(&items[j]) < 1.0e-8 {
                let d = items[i].translation_distance(&items[j]);
                if d > worst {
                    worst = d;
                    if d > 1.0e-9 {
                        failing.get_or_insert((i, j));
                    }
                }
            }
        }
    }
    CocycleReport { consistent: failing.is_none(), worst_mismatch: worst, failing_pair: failing }
}

/// Solves the coboundary equation `(Id - gamma_0) v = tau` for the affine
/// isometry `gamma`, i.e. finds the fixed ambient vector `v` with
/// `gamma_0 (x - v) + v = gamma_0 x + tau`. Fails when 1 is an eigenvalue of
/// the linear part (e.g. parabolic or identity).
pub fn coboundary_solve_d1(gamma: &LorentzIsometry) -> Result<AmbientVector, CoreError> {
    let n = gamma.ambient_dim();
    let mut a = [[0.0; 4]; 4];
    for r in 0..n {
        for c in 0..n {
            a[r][c] = (if r == c { 1.0 } else { 0.0 }) - gamma.linear[r][c];
        }
    }
    let mut b = [0.0; 4];
    for i in 0..n {
        b[i] = gamma.translation[i];
    }
    let x = solve_small(&mut a, &mut b, n).map_err(|_| CoreError::DegenerateCoboundary)?;
    let mut v = AmbientVector::zero(n);
    for i in 0..n {
        v[i] = x[i];
    }
    // Residual guard: (Id - gamma_0) v should reproduce tau.
    let resid = v - gamma.apply_linear(&v) - gamma.translation;
    if resid.euclid_sq().sqrt() > 1.0e-9 * (1.0 + gamma.translation.euclid_sq().sqrt()) {
        return Err(CoreError::DegenerateCoboundary);
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vector::minkowski_form;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    #[test]
    fn boost_moves_basepoint_along_geodesic() {
        let g = LorentzIsometry::boost_d1(0.8);
        let b = HPoint::basepoint(1);
        let img = g.apply_hyperboloid(&b);
        assert_relative_eq!(img.vec()[0], 0.8f64.sinh(), epsilon = 1e-12);
        assert_relative_eq!(img.vec()[1], 0.8f64.cosh(), epsilon = 1e-12);
    }

    #[test]
    fn rejects_non_lorentz_matrix() {
        let bad = vec![vec![1.0, 0.1], vec![0.0, 1.0]];
        assert!(LorentzIsometry::new(&bad, AmbientVector::zero(2)).is_err());
    }

    #[test]
    fn rejects_time_reversal() {
        let bad = vec![vec![1.0, 0.0], vec![0.0, -1.0]];
        assert!(LorentzIsometry::new(&bad, AmbientVector::zero(2)).is_err());
    }

    #[test]
    fn single_generator_cocycle_is_vacuous() {
        let tau = AmbientVector::new(&[2.0, -1.0]).unwrap();
        let g = LorentzIsometry::boost_d1(0.5).with_translation(tau);
        let rep = cocycle_check(&[g], &[vec![0, 0], vec![0, 0, 0]]);
        assert!(rep.consistent);
    }

    #[test]
    fn translation_group_words_commute() {
        let a = LorentzIsometry::identity(2)
            .with_translation(AmbientVector::new(&[1.0, 0.0, 0.0]).unwrap());
        let b = LorentzIsometry::identity(2)
            .with_translation(AmbientVector::new(&[0.0, 2.0, 0.5]).unwrap());
        let rep = cocycle_check(&[a, b], &[vec![0, 1], vec![1, 0]]);
        assert!(rep.consistent);
    }

    #[test]
    fn corrupted_square_is_flagged() {
        let tau = AmbientVector::new(&[1.0, 0.0]).unwrap();
        let g = LorentzIsometry::boost_d1(0.5).with_translation(tau);
        let honest = g.compose(&g);
        let corrupted = honest.with_translation(honest.translation() + AmbientVector::new(&[0.1, 0.0]).unwrap());
        let rep = cocycle_check(&[g, corrupted], &[vec![1], vec![0, 0]]);
        assert!(!rep.consistent);
        assert!(rep.worst_mismatch > 0.05);
    }

    proptest! {
        #[test]
        fn distance_is_isometry_invariant(
            t in -2.0f64..2.0, th in 0.0f64..6.28, tb in -1.5f64..1.5,
            r1 in 0.0f64..3.0, a1 in 0.0f64..6.28, r2 in 0.0f64..3.0, a2 in 0.0f64..6.28,
        ) {
            let g = LorentzIsometry::boost(2, 0, t)
                .compose(&LorentzIsometry::rotation(2, 0, 1, th))
                .compose(&LorentzIsometry::boost(2, 1, tb));
            let p = HPoint::from_coords(&[r1.sinh() * a1.cos(), r1.sinh() * a1.sin(), r1.cosh()]).unwrap();
            let q = HPoint::from_coords(&[r2.sinh() * a2.cos(), r2.sinh() * a2.sin(), r2.cosh()]).unwrap();
            let d0 = p.distance(&q);
            let d1 = g.apply_hyperboloid(&p).distance(&g.apply_hyperboloid(&q));
            prop_assert!((d0 - d1).abs() < 1e-9 * (1.0 + d0));
        }

        #[test]
        fn compose_inverse_is_identity(t in -2.0f64..2.0, x in -3.0f64..3.0, y in -3.0f64..3.0) {
            let g = LorentzIsometry::boost_d1(t)
                .with_translation(AmbientVector::new(&[x, y]).unwrap());
            let e = g.compose(&g.inverse());
            let probe = AmbientVector::new(&[0.3, 1.7]).unwrap();
            let img = e.apply_ambient(&probe);
            prop_assert!((img - probe).euclid_sq().sqrt() < 1e-9);
        }

        #[test]
        fn coboundary_roundtrip(t0 in 0.1f64..3.0, vx in -5.0f64..5.0, vy in -5.0f64..5.0) {
            // tau = (Id - gamma_0) v must be recovered as the coboundary of v.
            let v = AmbientVector::new(&[vx, vy]).unwrap();
            let g0 = LorentzIsometry::boost_d1(t0);
            let tau = v - g0.apply_linear(&v);
            let g = g0.with_translation(tau);
            let sol = coboundary_solve_d1(&g).unwrap();
            prop_assert!((sol - v).euclid_sq().sqrt() < 1e-9 * (1.0 + v.euclid_sq().sqrt()));
        }

        #[test]
        fn minkowski_form_preserved(t in -2.0f64..2.0, th in 0.0f64..6.28,
                                    a in proptest::array::uniform3(-3.0f64..3.0),
                                    b in proptest::array::uniform3(-3.0f64..3.0)) {
            let g = LorentzIsometry::boost(2, 0, t).compose(&LorentzIsometry::rotation(2, 0, 1, th));
            let x = AmbientVector::new(&a).unwrap();
            let y = AmbientVector::new(&b).unwrap();
            let before = minkowski_form(&x, &y);
            let after = minkowski_form(&g.apply_linear(&x), &g.apply_linear(&y));
            prop_assert!((before - after).abs() < 1e-9 * (1.0 + before.abs()));
        }
    }
}
