//! Cell enumeration for wall arrangements by sign vectors.
//!
//! A point off every wall determines the sign vector `sigma_i = sign <x, v_i>`,
//! and each realized sign vector is one open cell (an intersection of open
//! half-spaces, hence geodesically convex and connected). Cells are collected
//! by classifying a deterministic seeded cloud of sample points: structured
//! seeds around every wall, every pairwise (and, for d = 3, triple) wall
//! intersection, a global random cloud, and a geodesic trace pass that walks
//! from the first cell to every other and registers the cells crossed on the
//! way. Completeness is guaranteed only at desk scale (few walls, moderate
//! weights); d = 1 is enumerated exactly as intervals.
//!
//! Two nonempty cells whose sign vectors differ at exactly one wall always
//! share a facet: along the geodesic between witnesses the separation from
//! any wall is `A cosh t + B sinh t`, which either keeps its sign or crosses
//! zero exactly once, so the crossing of the flipped wall stays strictly
//! inside every other half-space. The crossing point doubles as a facet
//! witness.

use std::collections::BTreeMap;

use lorentz_core::{minkowski_form, sym_eigen, AmbientVector, HPoint};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cellulation::Wall;
use crate::PolyError;

/// Points closer to a wall than this (in `|<x, v>|`) are ambiguous and are
/// not used as cell witnesses.
const SIGN_MARGIN: f64 = 1.0e-7;

/// Witnesses kept per cell, best interior margin first.
const MAX_WITNESSES: usize = 6;

#[derive(Clone, Debug)]
pub(crate) struct EnumCell {
    pub signs: Vec<i8>,
    /// Interior points sorted by decreasing distance to the nearest wall.
    pub witnesses: Vec<HPoint>,
    pub margins: Vec<f64>,
}

#[derive(Clone, Debug)]
pub(crate) struct EnumFacet {
    /// Indices of the two cells, lower id first.
    pub a: usize,
    pub b: usize,
    pub wall: usize,
    pub witness: HPoint,
}

#[derive(Clone, Debug)]
pub(crate) struct CellComplex {
    pub cells: Vec<EnumCell>,
    pub facets: Vec<EnumFacet>,
}

/// Enumerates the cells and facets of a wall arrangement. Cell ids are
/// canonical: lexicographic in the sign vector with -1 before +1.
pub(crate) fn enumerate_cells(
    dim: usize,
    walls: &[Wall],
    seed: u64,
) -> Result<CellComplex, PolyError> {
    if walls.is_empty() {
        return Ok(CellComplex {
            cells: vec![EnumCell {
                signs: Vec::new(),
                witnesses: vec![HPoint::basepoint(dim)],
                margins: vec![f64::INFINITY],
            }],
            facets: Vec::new(),
        });
    }
    if dim == 1 {
        return Ok(enumerate_intervals(walls));
    }

    let mut acc = Accumulator::new(walls);
    for p in seed_points(dim, walls, seed) {
        acc.insert(&p);
    }
    // Geodesic trace: walk from the first discovered cell to every other,
    // registering the cells crossed in between. Newly found cells are traced
    // in turn, so the pass also repairs gaps in the random cloud.
    let mut traced = 0;
    while traced < acc.cells.len() {
        let target = acc.cells[traced].witnesses[0];
        let origin = acc.cells[0].witnesses[0];
        for p in chord_samples(&origin, &target, walls) {
            acc.insert(&p);
        }
        traced += 1;
    }
    acc.finish()
}

struct Accumulator<'a> {
    walls: &'a [Wall],
    index: BTreeMap<Vec<i8>, usize>,
    cells: Vec<EnumCell>,
}

impl<'a> Accumulator<'a> {
    fn new(walls: &'a [Wall]) -> Self {
        Self { walls, index: BTreeMap::new(), cells: Vec::new() }
    }

    fn classify(&self, x: &HPoint) -> Option<(Vec<i8>, f64)> {
        let mut signs = Vec::with_capacity(self.walls.len());
        let mut margin = f64::INFINITY;
        for w in self.walls {
            let s = w.normal.signed_separation(x);
            if s.abs() < SIGN_MARGIN {
                return None;
            }
            signs.push(if s > 0.0 { 1 } else { -1 });
            margin = margin.min(s.abs().asinh());
        }
        Some((signs, margin))
    }

    fn insert(&mut self, x: &HPoint) {
        let Some((signs, margin)) = self.classify(x) else { return };
        let id = *self.index.entry(signs.clone()).or_insert_with(|| {
            self.cells.push(EnumCell { signs, witnesses: Vec::new(), margins: Vec::new() });
            self.cells.len() - 1
        });
        let cell = &mut self.cells[id];
        let pos = cell.margins.partition_point(|&m| m >= margin);
        if pos < MAX_WITNESSES {
            cell.witnesses.insert(pos, *x);
            cell.margins.insert(pos, margin);
            cell.witnesses.truncate(MAX_WITNESSES);
            cell.margins.truncate(MAX_WITNESSES);
        }
    }

    /// Reorders cells canonically and derives the facet list.
    fn finish(self) -> Result<CellComplex, PolyError> {
        let order: Vec<usize> = self.index.values().copied().collect();
        // BTreeMap iterates keys lexicographically; `order[k]` is the old id
        // of the k-th canonical cell.
        let mut rank = vec![0usize; self.cells.len()];
        for (new, &old) in order.iter().enumerate() {
            rank[old] = new;
        }
        let mut cells: Vec<EnumCell> = Vec::with_capacity(self.cells.len());
        for &old in &order {
            cells.push(self.cells[old].clone());
        }

        let mut facets = Vec::new();
        for a in 0..cells.len() {
            for (wi, _) in self.walls.iter().enumerate() {
                let mut flipped = cells[a].signs.clone();
                flipped[wi] = -flipped[wi];
                let Some(&old_b) = self.index.get(&flipped) else { continue };
                let b = rank[old_b];
                if b <= a {
                    continue;
                }
                let witness = facet_witness(&cells[a], &cells[b], self.walls, wi)?;
                facets.push(EnumFacet { a, b, wall: wi, witness });
            }
        }
        Ok(CellComplex { cells, facets })
    }
}

/// Crossing of the flipped wall along the chord between two cell witnesses.
/// The chord scales to the geodesic, so the sign pattern at the crossing is
/// the shared pattern of the two cells; witness pairs are retried only to
/// dodge roundoff when the crossing grazes a second wall.
fn facet_witness(
    a: &EnumCell,
    b: &EnumCell,
    walls: &[Wall],
    wall: usize,
) -> Result<HPoint, PolyError> {
    let mut best: Option<(f64, HPoint)> = None;
    for x in &a.witnesses {
        for y in &b.witnesses {
            let sx = walls[wall].normal.signed_separation(x);
            let sy = walls[wall].normal.signed_separation(y);
            if sx * sy >= 0.0 {
                continue;
            }
            let lambda = sx / (sx - sy);
            let Ok(z) = HPoint::normalize(*x.vec() * (1.0 - lambda) + *y.vec() * lambda) else {
                continue;
            };
            let mut margin = f64::INFINITY;
            for (wi, w) in walls.iter().enumerate() {
                if wi == wall {
                    continue;
                }
                let s = w.normal.signed_separation(&z);
                let expect = a.signs[wi] as f64;
                if s * expect <= 0.0 {
                    margin = -1.0;
                    break;
                }
                margin = margin.min(s.abs());
            }
            if margin > best.as_ref().map_or(-2.0, |(m, _)| *m) {
                best = Some((margin, z));
            }
        }
    }
    match best {
        Some((m, z)) if m > 0.0 => Ok(z),
        _ => Err(PolyError::FacetProbeFailed { wall }),
    }
}

/// Sample points along the chord from `x` to `y`: midpoints between
/// consecutive wall crossings, catching every cell the geodesic traverses.
fn chord_samples(x: &HPoint, y: &HPoint, walls: &[Wall]) -> Vec<HPoint> {
    let mut cuts = vec![0.0, 1.0];
    for w in walls {
        let sx = w.normal.signed_separation(x);
        let sy = w.normal.signed_separation(y);
        if sx * sy < 0.0 {
            cuts.push(sx / (sx - sy));
        }
    }
    cuts.sort_by(|p, q| p.partial_cmp(q).unwrap());
    let mut out = Vec::with_capacity(cuts.len());
    for k in 0..cuts.len() - 1 {
        let lambda = 0.5 * (cuts[k] + cuts[k + 1]);
        if let Ok(z) = HPoint::normalize(*x.vec() * (1.0 - lambda) + *y.vec() * lambda) {
            out.push(z);
        }
    }
    out
}

/// d = 1: walls are points `t_i = atanh(v_2 / v_1)` of the hyperbola and the
/// cells are the open intervals between them, enumerated exactly.
fn enumerate_intervals(walls: &[Wall]) -> CellComplex {
    let mut ts: Vec<(f64, usize)> = walls
        .iter()
        .enumerate()
        .map(|(i, w)| ((w.normal.vec()[1] / w.normal.vec()[0]).atanh(), i))
        .collect();
    ts.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());

    let h1 = |t: f64| HPoint::from_coords(&[t.sinh(), t.cosh()]).expect("hyperbola point");
    let classify = |u: f64| -> Vec<i8> {
        walls
            .iter()
            .map(|w| {
                let s = w.normal.signed_separation(&h1(u));
                if s > 0.0 {
                    1
                } else {
                    -1
                }
            })
            .collect()
    };

    // Interval k lies between sorted walls k-1 and k.
    let n = ts.len();
    let mut reps = Vec::with_capacity(n + 1);
    reps.push(ts[0].0 - 1.5);
    for k in 1..n {
        reps.push(0.5 * (ts[k - 1].0 + ts[k].0));
    }
    reps.push(ts[n - 1].0 + 1.5);

    let mut keyed: Vec<(Vec<i8>, usize)> =
        reps.iter().enumerate().map(|(k, &u)| (classify(u), k)).collect();
    keyed.sort();
    let mut rank = vec![0usize; n + 1];
    let mut cells = Vec::with_capacity(n + 1);
    for (new, (signs, interval)) in keyed.into_iter().enumerate() {
        rank[interval] = new;
        let u = reps[interval];
        let margin = ts
            .iter()
            .map(|&(t, _)| (u - t).abs())
            .fold(f64::INFINITY, f64::min);
        cells.push(EnumCell { signs, witnesses: vec![h1(u)], margins: vec![margin] });
    }
    let facets = (0..n)
        .map(|k| {
            let (a, b) = (rank[k], rank[k + 1]);
            EnumFacet {
                a: a.min(b),
                b: a.max(b),
                wall: ts[k].1,
                witness: h1(ts[k].0),
            }
        })
        .collect();
    CellComplex { cells, facets }
}

/// Deterministic candidate cloud: basepoint, pushes off both sides of every
/// wall (swept along the wall), quadrant samples around every pairwise and
/// triple wall intersection, and a seeded random cloud out to radius 9.
fn seed_points(dim: usize, walls: &[Wall], seed: u64) -> Vec<HPoint> {
    let base = HPoint::basepoint(dim);
    let mut pts = vec![base];
    let radii = [1.0e-3, 0.05, 0.3, 1.0, 2.5];
    let sweeps: &[f64] = if dim == 2 { &[-2.0, -0.7, 0.0, 0.7, 2.0] } else { &[-1.5, 0.0, 1.5] };

    for w in walls {
        let foot = w.normal.wall_foot(&base);
        // The unit normal field of a wall is the constant ambient vector v:
        // <v, y> = 0 and <v, v> = 1 at every wall point y.
        let v = *w.normal.vec();
        let mut along_dirs = vec![];
        for e in foot.orthonormal_frame() {
            let c = minkowski_form(&e, &v);
            let t = e - v * c;
            let q = t.mnorm_sq();
            if q > 1.0e-12 {
                along_dirs.push(t * (1.0 / q.sqrt()));
            }
        }
        for &s1 in sweeps {
            for &s2 in if dim == 3 { sweeps } else { &[0.0][..] } {
                let mut y = foot;
                if let Some(d1) = along_dirs.first() {
                    if let Ok(m) = y.exp(&(*d1 * s1)) {
                        y = m;
                    }
                }
                if let Some(d2) = along_dirs.get(1) {
                    if let Ok(m) = y.exp(&(*d2 * s2)) {
                        y = m;
                    }
                }
                let vn = y.project_tangent(&v);
                let q = vn.mnorm_sq();
                if q < 1.0e-12 {
                    continue;
                }
                let vn = vn * (1.0 / q.sqrt());
                for &r in &radii {
                    for sgn in [-1.0, 1.0] {
                        if let Ok(p) = y.exp(&(vn * (sgn * r))) {
                            pts.push(p);
                        }
                    }
                }
            }
        }
    }

    for i in 0..walls.len() {
        for j in i + 1..walls.len() {
            if let Some(eta) = pair_intersection(dim, &walls[i], &walls[j]) {
                quadrant_samples(&eta, walls[i].normal.vec(), walls[j].normal.vec(), &mut pts);
            }
            if dim == 3 {
                for k in j + 1..walls.len() {
                    if let Some(eta) = triple_intersection(&walls[i], &walls[j], &walls[k]) {
                        corner_samples(&eta, &mut pts);
                    }
                }
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n_random = 3000 * (walls.len() + 1);
    for _ in 0..n_random {
        let rho = 9.0 * rng.gen::<f64>();
        let dir = random_direction(dim, &mut rng);
        if let Ok(p) = base.polar_to(rho, &dir) {
            pts.push(p);
        }
    }
    pts
}

fn random_direction(dim: usize, rng: &mut ChaCha8Rng) -> AmbientVector {
    let mut v = AmbientVector::zero(dim + 1);
    if dim == 2 {
        let phi = std::f64::consts::TAU * rng.gen::<f64>();
        v[0] = phi.cos();
        v[1] = phi.sin();
    } else {
        let z = 2.0 * rng.gen::<f64>() - 1.0;
        let phi = std::f64::consts::TAU * rng.gen::<f64>();
        let s = (1.0 - z * z).max(0.0).sqrt();
        v[0] = s * phi.cos();
        v[1] = s * phi.sin();
        v[2] = z;
    }
    v
}

/// A point on the codim-2 intersection of two walls, when the geodesics
/// cross: the Minkowski-orthogonal complement of the two normals must
/// contain a timelike direction.
fn pair_intersection(dim: usize, wa: &Wall, wb: &Wall) -> Option<HPoint> {
    let basis = euclid_null_basis(dim + 1, &[*wa.normal.vec(), *wb.normal.vec()]);
    timelike_in_span(&basis)
}

fn triple_intersection(wa: &Wall, wb: &Wall, wc: &Wall) -> Option<HPoint> {
    let basis =
        euclid_null_basis(4, &[*wa.normal.vec(), *wb.normal.vec(), *wc.normal.vec()]);
    timelike_in_span(&basis)
}

/// Orthonormal (Euclidean) basis of `{x : <x, v> = 0 for all given v}`.
/// The Minkowski pairing against `v` equals the Euclidean pairing against
/// `J v`, so the constraint rows are the time-flipped normals.
fn euclid_null_basis(n: usize, normals: &[AmbientVector]) -> Vec<AmbientVector> {
    let mut rows: Vec<AmbientVector> = Vec::new();
    for v in normals {
        let mut r = *v;
        r[n - 1] = -r[n - 1];
        for prev in &rows {
            let c = edot(&r, prev);
            r = r - *prev * c;
        }
        let q = r.euclid_sq();
        if q > 1.0e-18 {
            rows.push(r * (1.0 / q.sqrt()));
        }
    }
    let mut basis: Vec<AmbientVector> = Vec::new();
    for i in 0..n {
        let mut b = AmbientVector::basis(n, i);
        for r in &rows {
            let c = edot(&b, r);
            b = b - *r * c;
        }
        for prev in &basis {
            let c = edot(&b, prev);
            b = b - *prev * c;
        }
        let q = b.euclid_sq();
        if q > 1.0e-12 {
            basis.push(b * (1.0 / q.sqrt()));
        }
    }
    basis
}

fn edot(a: &AmbientVector, b: &AmbientVector) -> f64 {
    a.as_slice().iter().zip(b.as_slice()).map(|(x, y)| x * y).sum()
}

/// Searches the span for a timelike vector via the Minkowski Gram matrix and
/// returns it normalized onto H^d.
fn timelike_in_span(basis: &[AmbientVector]) -> Option<HPoint> {
    if basis.is_empty() || basis.len() > 3 {
        return None;
    }
    let mut g = [[0.0; 3]; 3];
    for (i, a) in basis.iter().enumerate() {
        for (j, b) in basis.iter().enumerate() {
            g[i][j] = minkowski_form(a, b);
        }
    }
    let (vals, vecs) = sym_eigen(&g, basis.len());
    if vals[0] >= -1.0e-9 {
        return None;
    }
    let mut w = AmbientVector::zero(basis[0].ambient_dim());
    for (k, b) in basis.iter().enumerate() {
        w = w + *b * vecs[0][k];
    }
    if w.time() < 0.0 {
        w = w * -1.0;
    }
    HPoint::normalize(w).ok()
}

/// Samples the four local quadrants (and, for d = 3, a sweep along the face)
/// around a codim-2 intersection point.
fn quadrant_samples(eta: &HPoint, va: &AmbientVector, vb: &AmbientVector, out: &mut Vec<HPoint>) {
    // Both normals are unit tangents at eta (<v, eta> = 0); orthonormalize.
    let c = minkowski_form(va, vb);
    if c.abs() >= 1.0 - 1.0e-9 {
        return;
    }
    let vb_perp = (*vb - *va * c) * (1.0 / (1.0 - c * c).sqrt());
    let mut face_dirs: Vec<AmbientVector> = Vec::new();
    for e in eta.orthonormal_frame() {
        let mut t = e;
        for u in [va, &vb_perp] {
            let cc = minkowski_form(&t, u);
            t = t - *u * cc;
        }
        let q = t.mnorm_sq();
        if q > 1.0e-10 {
            face_dirs.push(t * (1.0 / q.sqrt()));
        }
    }
    let slides: &[f64] = if face_dirs.is_empty() { &[0.0] } else { &[-1.2, 0.0, 1.2] };
    for &slide in slides {
        for k in 0..8 {
            let phi = std::f64::consts::FRAC_PI_4 * (k as f64 + 0.5);
            for r in [0.02, 0.2, 0.8] {
                let mut u = (*va * phi.cos() + vb_perp * phi.sin()) * r;
                if let Some(f) = face_dirs.first() {
                    u = u + *f * slide;
                }
                if let Ok(p) = eta.exp(&u) {
                    out.push(p);
                }
            }
        }
    }
}

/// Samples a spread of directions around a codim-3 corner point (d = 3).
fn corner_samples(eta: &HPoint, out: &mut Vec<HPoint>) {
    let frame = eta.orthonormal_frame();
    for sx in [-1.0, 0.0, 1.0] {
        for sy in [-1.0, 0.0, 1.0] {
            for sz in [-1.0f64, 0.0, 1.0] {
                let norm = (sx * sx + sy * sy + sz * sz).sqrt();
                if norm == 0.0 {
                    continue;
                }
                for r in [0.03, 0.25, 0.9] {
                    let u = (frame[0] * sx + frame[1] * sy + frame[2] * sz) * (r / norm);
                    if let Ok(p) = eta.exp(&u) {
                        out.push(p);
                    }
                }
            }
        }
    }
}
