//! Convexity verification for support function specifications.
//!
//! Two complementary checks: a pointwise spectral check (all radii of
//! curvature nonnegative where the spec is twice differentiable) and a
//! geodesic midpoint check `h(gamma(a)) + h(gamma(-a)) >= 2 cosh(a)
//! h(gamma(0))`, which follows from sublinearity of the extension through
//! the identity `gamma(a) + gamma(-a) = 2 cosh(a) gamma(0)` and stays
//! meaningful for non-smooth (e.g. polyhedral) specifications.

use crate::diff::curvature;
use crate::optimize::sphere_directions;
use crate::spec::SupportSpec;
use crate::SupportError;
use lorentz_core::HPoint;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConvexityVerdict {
    /// No violation found on any sample; convexity is certified only at the
    /// sampled points and scales.
    CertifiedOnSamples,
    Violated,
    /// Too many sample points were skipped (non-differentiable or out of
    /// chart) for the sample sweep to mean much.
    Inconclusive,
}

#[derive(Clone, Debug)]
pub struct ConvexityWitness {
    pub point: HPoint,
    pub margin: f64,
    pub note: String,
}

#[derive(Clone, Debug)]
pub struct ConvexityReport {
    pub verdict: ConvexityVerdict,
    /// Smallest certified margin: minimal radius of curvature for the
    /// spectral check, minimal geodesic midpoint defect for the other.
    pub min_margin: f64,
    pub witnesses: Vec<ConvexityWitness>,
    pub samples: usize,
    pub skipped: usize,
}

/// Where and how densely to sample.
#[derive(Clone, Debug)]
pub struct SamplingPlan {
    pub base: HPoint,
    pub rho_max: f64,
    pub n_rho: usize,
    pub n_dir: usize,
    /// Geodesic half-lengths for the midpoint check.
    pub alphas: Vec<f64>,
}

impl SamplingPlan {
    pub fn dense(base: HPoint) -> Self {
        Self { base, rho_max: 2.5, n_rho: 14, n_dir: 28, alphas: vec![0.05, 0.1, 0.2, 0.4] }
    }

    pub fn with_radius(mut self, rho_max: f64) -> Self {
        self.rho_max = rho_max;
        self
    }

    fn points(&self) -> Vec<HPoint> {
        let frame = self.base.orthonormal_frame();
        let dirs = sphere_directions(&frame, self.n_dir);
        let mut pts = vec![self.base];
        for i in 1..=self.n_rho {
            let rho = self.rho_max * i as f64 / self.n_rho as f64;
            for dir in &dirs {
                if let Ok(p) = self.base.polar_to(rho, dir) {
                    pts.push(p);
                }
            }
        }
        pts
    }
}

const MARGIN_TOL: f64 = 1.0e-8;

fn finalize(
    mut witnesses: Vec<ConvexityWitness>,
    min_margin: f64,
    samples: usize,
    skipped: usize,
) -> ConvexityReport {
    witnesses.sort_by(|a, b| a.margin.partial_cmp(&b.margin).unwrap());
    witnesses.truncate(8);
    let verdict = if min_margin < -MARGIN_TOL {
        ConvexityVerdict::Violated
    } else if skipped > samples / 2 {
        ConvexityVerdict::Inconclusive
    } else {
        ConvexityVerdict::CertifiedOnSamples
    };
    if verdict != ConvexityVerdict::Violated {
        witnesses.clear();
    }
    ConvexityReport { verdict, min_margin, witnesses, samples, skipped }
}

/// Pointwise spectral check: minimal radius of curvature over the sample
/// ball. Non-differentiable points are skipped and counted.
pub fn check_convexity_smooth(
    spec: &SupportSpec,
    plan: &SamplingPlan,
) -> Result<ConvexityReport, SupportError> {
    let mut min_margin = f64::INFINITY;
    let mut witnesses = Vec::new();
    let mut samples = 0usize;
    let mut skipped = 0usize;
    for p in plan.points() {
        samples += 1;
        match curvature(spec, &p) {
            Ok(data) => {
                let m = data.min_radius();
                min_margin = min_margin.min(m);
                if m < -MARGIN_TOL {
                    witnesses.push(ConvexityWitness {
                        point: p,
                        margin: m,
                        note: "negative radius of curvature".into(),
                    });
                }
            }
            Err(
                SupportError::TieSet(_)
                | SupportError::NotDifferentiable(_)
                | SupportError::OutOfChart { .. },
            ) => skipped += 1,
            Err(e) => return Err(e),
        }
    }
    if !min_margin.is_finite() {
        return Ok(ConvexityReport {
            verdict: ConvexityVerdict::Inconclusive,
            min_margin: f64::NAN,
            witnesses: Vec::new(),
            samples,
            skipped,
        });
    }
    Ok(finalize(witnesses, min_margin, samples, skipped))
}

/// Geodesic midpoint check; works for non-smooth specifications.
pub fn check_convexity_geodesic(
    spec: &SupportSpec,
    plan: &SamplingPlan,
) -> Result<ConvexityReport, SupportError> {
    let mut min_margin = f64::INFINITY;
    let mut witnesses = Vec::new();
    let mut samples = 0usize;
    let mut skipped = 0usize;
    for p in plan.points() {
        let frame = p.orthonormal_frame();
        let dirs = sphere_directions(&frame, (plan.n_dir / 2).max(2));
        for dir in dirs {
            for &a in &plan.alphas {
                samples += 1;
                let trial = (|| -> Result<f64, SupportError> {
                    let hp = spec.eval(&p.exp(&(dir * a))?)?;
                    let hm = spec.eval(&p.exp(&(dir * -a))?)?;
                    let h0 = spec.eval(&p)?;
                    Ok(hp + hm - 2.0 * a.cosh() * h0)
                })();
                match trial {
                    Ok(defect) => {
                        min_margin = min_margin.min(defect);
                        if defect < -MARGIN_TOL {
                            witnesses.push(ConvexityWitness {
                                point: p,
                                margin: defect,
                                note: format!("midpoint defect at half-length {a}"),
                            });
                        }
                    }
                    Err(SupportError::OutOfChart { .. }) => skipped += 1,
                    Err(e) => return Err(e),
                }
            }
        }
    }
    Ok(finalize(witnesses, min_margin, samples, skipped))
}
