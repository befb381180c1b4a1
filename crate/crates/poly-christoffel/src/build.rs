//! Path construction of the polyhedral solution and its verifications.
//!
//! Given an admissible cellulation, pick a base cell and set `X(base) = 0`;
//! crossing a facet of weight `lambda` and unit normal `v` (oriented toward
//! the side being entered) adds `lambda v`. The closure condition makes the
//! result path independent, and the vertex set `{X(xi)}` defines the support
//! function `h(eta) = max_xi <eta, X(xi)>` of a polyhedral F-convex set whose
//! Gauss image decomposition is the input cellulation and whose first area
//! measure returns the input weights as facet edge lengths.

use lorentz_core::{minkowski_form, AmbientVector, HPoint, SpacelikeUnit};
use rand::{seq::SliceRandom, Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use support_fn::SupportSpec;

use crate::arrangement::enumerate_cells;
use crate::cellulation::{check_closure, Cellulation, WEIGHT_FLOOR};
use crate::PolyError;

/// One cell of the built polyhedron.
#[derive(Clone, Debug)]
pub struct PolyCell {
    /// Vertex `X(xi)` of the polyhedral set assigned to this cell.
    pub vertex: AmbientVector,
    /// Sign vector over the walls (arrangements only).
    pub signs: Option<Vec<i8>>,
    /// Interior points, best margin first (may be empty for explicit input).
    pub witnesses: Vec<HPoint>,
}

/// One facet of the built polyhedron, oriented so that
/// `X(cells.0) - X(cells.1) = weight * normal`.
#[derive(Clone, Debug)]
pub struct PolyFacet {
    pub cells: (usize, usize),
    /// Index of the originating wall (arrangements only).
    pub wall: Option<usize>,
    pub weight: f64,
    pub normal: SpacelikeUnit,
    /// A point in the open facet, when the construction produced one.
    pub witness: Option<HPoint>,
}

/// A polyhedral F-convex set built from a cellulation: the vertex map
/// `cell -> X(cell)`, the facet graph, and the induced support function.
#[derive(Clone, Debug)]
pub struct PolyhedralFConvex {
    dim: usize,
    pub base_cell: usize,
    cells: Vec<PolyCell>,
    facets: Vec<PolyFacet>,
    /// `max <eta, X>` over the distinct vertices.
    pub spec: SupportSpec,
    /// Cell id -> index of its vertex in the spec's vertex list.
    spec_index: Vec<usize>,
    /// Wall indices whose weight sits below the admissibility floor.
    pub small_weight_walls: Vec<usize>,
}

impl PolyhedralFConvex {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    pub fn cells(&self) -> &[PolyCell] {
        &self.cells
    }

    pub fn facets(&self) -> &[PolyFacet] {
        &self.facets
    }

    pub fn vertex(&self, cell: usize) -> AmbientVector {
        self.cells[cell].vertex
    }

    /// Index of the spec vertex assigned to a cell (vertices shared by
    /// several cells are stored once).
    pub fn spec_vertex(&self, cell: usize) -> usize {
        self.spec_index[cell]
    }

    /// The support function `max_xi <x, X(xi)>` at a point of H^d.
    pub fn support(&self, x: &HPoint) -> Result<f64, PolyError> {
        Ok(self.spec.eval(x)?)
    }

    /// The cell whose open half-space pattern contains `x` (arrangements
    /// only; `None` when `x` lies on a wall or the pattern was not realized).
    pub fn cell_containing(&self, x: &HPoint) -> Option<usize> {
        self.cells.iter().position(|c| {
            c.signs.as_ref().is_some_and(|signs| {
                signs.iter().enumerate().all(|(wi, &s)| {
                    let sep = self.facet_wall_normal(wi).map(|v| minkowski_form(x.vec(), &v));
                    sep.is_some_and(|sep| sep * s as f64 > 0.0)
                })
            })
        })
    }

    fn facet_wall_normal(&self, wall: usize) -> Option<AmbientVector> {
        self.facets
            .iter()
            .find(|f| f.wall == Some(wall))
            .map(|f| *f.normal.vec())
    }

    /// The same polyhedron with the base moved: every vertex is translated
    /// by `-X(new_base)`, which changes the set by a global translation.
    pub fn rebased(&self, new_base: usize) -> Result<Self, PolyError> {
        if new_base >= self.cells.len() {
            return Err(PolyError::BadBaseCell(new_base, self.cells.len()));
        }
        let shift = self.cells[new_base].vertex;
        let mut out = self.clone();
        for c in &mut out.cells {
            c.vertex = c.vertex - shift;
        }
        out.base_cell = new_base;
        out.spec = spec_from_vertices(out.dim, &out.cells, &out.spec_index);
        Ok(out)
    }
}

fn spec_from_vertices(dim: usize, cells: &[PolyCell], spec_index: &[usize]) -> SupportSpec {
    let count = spec_index.iter().copied().max().map_or(0, |m| m + 1);
    let mut vertices = vec![AmbientVector::zero(dim + 1); count];
    for (cell, &si) in spec_index.iter().enumerate() {
        vertices[si] = cells[cell].vertex;
    }
    SupportSpec::PolyhedralMax(vertices)
}

/// Builds the polyhedral solution over a cellulation from the given base
/// cell. Closure is checked first; the vertex of every cell is realized by
/// summing facet jumps along a BFS tree, and for arrangements the direct
/// separating-wall sum is cross-checked against the tree realization.
pub fn build_polyhedron(
    c: &Cellulation,
    base_cell: usize,
    seed: u64,
) -> Result<PolyhedralFConvex, PolyError> {
    let closure = check_closure(c)?;
    if !closure.passed {
        let (face, defect) = closure
            .face_defects
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.partial_cmp(b.1).unwrap())
            .map(|(i, &d)| (i, d))
            .unwrap_or((0, closure.worst_defect));
        return Err(PolyError::ClosureViolated { face, defect });
    }

    let dim = c.dim();
    let n_ambient = dim + 1;
    let (mut cells, mut facets, small) = match c {
        Cellulation::Arrangement { dim, walls } => {
            let complex = enumerate_cells(*dim, walls, seed)?;
            let cells: Vec<PolyCell> = complex
                .cells
                .into_iter()
                .map(|cell| PolyCell {
                    vertex: AmbientVector::zero(n_ambient),
                    signs: Some(cell.signs),
                    witnesses: cell.witnesses,
                })
                .collect();
            let facets: Vec<PolyFacet> = complex
                .facets
                .into_iter()
                .map(|f| {
                    // Orient toward the cell where the wall sign is positive;
                    // list that cell first so X(first) - X(second) = w * v.
                    let sign_a = cells[f.a].signs.as_ref().unwrap()[f.wall];
                    let (into, from) = if sign_a > 0 { (f.a, f.b) } else { (f.b, f.a) };
                    PolyFacet {
                        cells: (into, from),
                        wall: Some(f.wall),
                        weight: walls[f.wall].weight,
                        normal: walls[f.wall].normal,
                        witness: Some(f.witness),
                    }
                })
                .collect();
            let small = walls
                .iter()
                .enumerate()
                .filter(|(_, w)| w.weight < WEIGHT_FLOOR)
                .map(|(i, _)| i)
                .collect();
            (cells, facets, small)
        }
        Cellulation::Explicit(complex) => {
            let cells: Vec<PolyCell> = (0..complex.n_cells)
                .map(|i| PolyCell {
                    vertex: AmbientVector::zero(n_ambient),
                    signs: None,
                    witnesses: complex.witnesses.get(i).cloned().unwrap_or_default(),
                })
                .collect();
            let facets: Vec<PolyFacet> = complex
                .facets
                .iter()
                .map(|f| PolyFacet {
                    cells: (f.front, f.back),
                    wall: None,
                    weight: f.weight,
                    normal: f.normal,
                    witness: None,
                })
                .collect();
            let small = complex
                .facets
                .iter()
                .enumerate()
                .filter(|(_, f)| f.weight < WEIGHT_FLOOR)
                .map(|(i, _)| i)
                .collect();
            (cells, facets, small)
        }
    };

    if base_cell >= cells.len() {
        return Err(PolyError::BadBaseCell(base_cell, cells.len()));
    }

    // BFS realization of X over the facet graph.
    let adjacency = adjacency_list(cells.len(), &facets);
    let mut seen = vec![false; cells.len()];
    let mut queue = std::collections::VecDeque::new();
    seen[base_cell] = true;
    cells[base_cell].vertex = AmbientVector::zero(n_ambient);
    queue.push_back(base_cell);
    while let Some(cur) = queue.pop_front() {
        for &(next, ref jump) in &adjacency[cur] {
            if !seen[next] {
                seen[next] = true;
                cells[next].vertex = cells[cur].vertex + *jump;
                queue.push_back(next);
            }
        }
    }
    if let Some(unreached) = seen.iter().position(|&s| !s) {
        return Err(PolyError::DisconnectedComplex(unreached));
    }

    // Arrangement shortcut cross-check: X(xi) must equal the sum of
    // weighted oriented normals over the walls separating xi from the base.
    if let Cellulation::Arrangement { walls, .. } = c {
        let base_signs = cells[base_cell].signs.clone().unwrap();
        let mut worst = 0.0f64;
        for cell in &cells {
            let signs = cell.signs.as_ref().unwrap();
            let mut x = AmbientVector::zero(n_ambient);
            for (wi, w) in walls.iter().enumerate() {
                if signs[wi] != base_signs[wi] {
                    x = x + *w.normal.vec() * (w.weight * signs[wi] as f64);
                }
            }
            worst = worst.max((x - cell.vertex).euclid_sq().sqrt());
        }
        if worst > 1.0e-10 {
            return Err(PolyError::PathRealizationMismatch(worst));
        }
    }

    // Deduplicate coinciding vertices for the induced support function.
    let mut spec_index = vec![usize::MAX; cells.len()];
    let mut reps: Vec<AmbientVector> = Vec::new();
    for (ci, cell) in cells.iter().enumerate() {
        let found = reps
            .iter()
            .position(|r| (*r - cell.vertex).euclid_sq().sqrt() < 1.0e-12);
        spec_index[ci] = found.unwrap_or_else(|| {
            reps.push(cell.vertex);
            reps.len() - 1
        });
    }

    // Reorder facets so the oriented pair is (into, from) for explicit
    // complexes as well; already true by construction above.
    facets.shrink_to_fit();

    let spec = SupportSpec::PolyhedralMax(reps);
    Ok(PolyhedralFConvex {
        dim,
        base_cell,
        cells,
        facets,
        spec,
        spec_index,
        small_weight_walls: small,
    })
}

/// Neighbor list with the oriented vertex jump `X(next) - X(cur)` attached.
fn adjacency_list(
    n_cells: usize,
    facets: &[PolyFacet],
) -> Vec<Vec<(usize, AmbientVector)>> {
    let mut adj = vec![Vec::new(); n_cells];
    for f in facets {
        let jump = *f.normal.vec() * f.weight;
        let (into, from) = f.cells;
        adj[from].push((into, jump));
        adj[into].push((from, jump * -1.0));
    }
    adj
}

/// Realizes random cells through random paths (bounded random walks with a
/// randomized-DFS fallback, so loops are exercised too) and returns the
/// largest deviation from the tree realization.
pub fn verify_path_independence(
    c: &Cellulation,
    base_cell: usize,
    n_random_paths: usize,
    seed: u64,
) -> Result<f64, PolyError> {
    let poly = build_polyhedron(c, base_cell, seed)?;
    let adjacency = adjacency_list(poly.cell_count(), &poly.facets);
    let n = poly.cell_count();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let mut worst = 0.0f64;
    for _ in 0..n_random_paths {
        let target = rng.gen_range(0..n);
        let acc = random_path_sum(&adjacency, poly.base_cell, target, poly.dim + 1, &mut rng);
        worst = worst.max((acc - poly.vertex(target)).euclid_sq().sqrt());
    }
    Ok(worst)
}

fn random_path_sum(
    adjacency: &[Vec<(usize, AmbientVector)>],
    base: usize,
    target: usize,
    n_ambient: usize,
    rng: &mut ChaCha8Rng,
) -> AmbientVector {
    let mut acc = AmbientVector::zero(n_ambient);
    if base == target {
        return acc;
    }
    let cap = 60 + 40 * adjacency.len();
    let mut cur = base;
    for _ in 0..cap {
        let &(next, jump) = adjacency[cur].choose(rng).expect("connected graph");
        acc = acc + jump;
        cur = next;
        if cur == target {
            return acc;
        }
    }
    // Fallback: a shuffled depth-first simple path always reaches the target.
    let mut stack = vec![(base, AmbientVector::zero(n_ambient))];
    let mut visited = vec![false; adjacency.len()];
    visited[base] = true;
    let mut trail: Vec<(usize, AmbientVector)> = Vec::new();
    while let Some((cell, sum)) = stack.pop() {
        while let Some(&(last, _)) = trail.last() {
            if adjacency[last].iter().any(|&(nb, _)| nb == cell) {
                break;
            }
            trail.pop();
        }
        trail.push((cell, sum));
        if cell == target {
            return sum;
        }
        let mut nbs: Vec<(usize, AmbientVector)> = adjacency[cell].clone();
        nbs.shuffle(rng);
        for (nb, jump) in nbs {
            if !visited[nb] {
                visited[nb] = true;
                stack.push((nb, sum + jump));
            }
        }
    }
    acc
}

/// Outcome of the Gauss image verification.
#[derive(Clone, Debug)]
pub struct GaussReport {
    pub passed: bool,
    pub cells_checked: usize,
    pub samples: usize,
    /// Draws rejected for falling on (or too close to) a facet.
    pub resampled: usize,
    /// Smallest relative gap between the cell's vertex value and the best
    /// competing distinct vertex over all accepted samples.
    pub worst_margin: f64,
    /// Cells with a sample where the cell's vertex did not win uniquely.
    pub failing_cells: Vec<usize>,
}

/// Samples the interior of every cell and verifies that the support maximum
/// `argmax_i <eta, X(xi_i)>` is attained by that cell's own vertex, uniquely
/// within a relative 1e-9.
pub fn verify_gauss_decomposition(
    poly: &PolyhedralFConvex,
    samples_per_cell: usize,
    seed: u64,
) -> Result<GaussReport, PolyError> {
    let SupportSpec::PolyhedralMax(vertices) = &poly.spec else {
        unreachable!("built polyhedra carry a polyhedral spec");
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = GaussReport {
        passed: true,
        cells_checked: 0,
        samples: 0,
        resampled: 0,
        worst_margin: f64::INFINITY,
        failing_cells: Vec::new(),
    };
    for (ci, cell) in poly.cells.iter().enumerate() {
        if cell.witnesses.is_empty() {
            return Err(PolyError::NoCellWitness(ci));
        }
        report.cells_checked += 1;
        let mut cell_ok = true;
        for _ in 0..samples_per_cell {
            let mut accepted = false;
            for _attempt in 0..40 {
                let eta = sample_in_cell(poly, ci, &mut rng);
                let own = poly.spec_index[ci];
                let val = minkowski_form(eta.vec(), &vertices[own]);
                let mut best_other = f64::NEG_INFINITY;
                for (vi, v) in vertices.iter().enumerate() {
                    if vi != own {
                        best_other = best_other.max(minkowski_form(eta.vec(), v));
                    }
                }
                let margin = (val - best_other) / (1.0 + val.abs());
                if margin <= 1.0e-9 {
                    // On (or numerically on) a facet: resample.
                    report.resampled += 1;
                    continue;
                }
                report.samples += 1;
                report.worst_margin = report.worst_margin.min(margin);
                accepted = true;
                break;
            }
            if !accepted {
                cell_ok = false;
            }
        }
        if !cell_ok {
            report.passed = false;
            report.failing_cells.push(ci);
        }
    }
    Ok(report)
}

/// Draws a point in the interior of the given cell: a witness pushed a
/// random fraction of its own wall margin in a random tangent direction
/// (the push is 1-Lipschitz in every wall distance, so signs are kept).
fn sample_in_cell(poly: &PolyhedralFConvex, cell: usize, rng: &mut ChaCha8Rng) -> HPoint {
    let c = &poly.cells[cell];
    let pick = rng.gen_range(0..c.witnesses.len());
    let w = c.witnesses[pick];
    if c.signs.is_none() {
        // Explicit cells carry no half-space data to validate a perturbation
        // against, so their declared witnesses are used as-is.
        return w;
    }
    let margin = poly
        .facets
        .iter()
        .filter_map(|f| f.wall.map(|_| f.normal.wall_distance(&w)))
        .fold(f64::INFINITY, f64::min);
    if !margin.is_finite() || margin <= 0.0 {
        return w;
    }
    let frame = w.orthonormal_frame();
    let mut dir = AmbientVector::zero(poly.dim + 1);
    let mut norm = 0.0;
    for e in &frame {
        let c = 2.0 * rng.gen::<f64>() - 1.0;
        dir = dir + *e * c;
        norm += c * c;
    }
    if norm < 1.0e-12 {
        return w;
    }
    let r = 0.75 * margin * rng.gen::<f64>();
    w.exp(&(dir * (r / norm.sqrt()))).unwrap_or(w)
}

/// One row of the first-area-measure round trip: a facet's input weight
/// against the realized edge length.
#[derive(Clone, Debug)]
pub struct S1Row {
    pub facet: usize,
    pub wall: Option<usize>,
    pub weight: f64,
    /// Intrinsic (Minkowski) length of the spacelike edge `X(xi) - X(xi')`.
    pub edge_length: f64,
    pub spacelike: bool,
}

#[derive(Clone, Debug)]
pub struct S1Report {
    pub rows: Vec<S1Row>,
    pub worst_deviation: f64,
    pub all_spacelike: bool,
}

/// Recomputes the first area measure of the built polyhedron: for every
/// facet the edge between the two adjacent vertices must be spacelike with
/// intrinsic length equal to the facet weight.
pub fn recompute_s1(poly: &PolyhedralFConvex) -> S1Report {
    let mut rows = Vec::with_capacity(poly.facets.len());
    let mut worst = 0.0f64;
    let mut all_spacelike = true;
    for (fi, f) in poly.facets.iter().enumerate() {
        let edge = poly.vertex(f.cells.0) - poly.vertex(f.cells.1);
        let q = edge.mnorm_sq();
        let spacelike = q > 0.0;
        all_spacelike &= spacelike;
        let len = q.max(0.0).sqrt();
        worst = worst.max((len - f.weight).abs());
        rows.push(S1Row {
            facet: fi,
            wall: f.wall,
            weight: f.weight,
            edge_length: len,
            spacelike,
        });
    }
    S1Report { rows, worst_deviation: worst, all_spacelike }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cellulation::Wall;

    fn wall(coords: &[f64], weight: f64) -> Wall {
        Wall::new(SpacelikeUnit::from_coords(coords).unwrap(), weight)
    }

    #[test]
    fn elementary_one_wall_vertices() {
        let a = 1.7;
        let c = Cellulation::arrangement(2, vec![wall(&[1.0, 0.0, 0.0], a)]);
        // Base cell 0 is the all-minus cell: the far side of the normal.
        let poly = build_polyhedron(&c, 0, 5).unwrap();
        assert_eq!(poly.cell_count(), 2);
        assert_eq!(poly.vertex(0), AmbientVector::zero(3));
        let x1 = poly.vertex(1);
        assert!((x1[0] - a).abs() < 1e-12 && x1[1].abs() < 1e-12 && x1[2].abs() < 1e-12);
    }

    #[test]
    fn zero_walls_build_the_cone_over_the_origin() {
        let c = Cellulation::arrangement(2, vec![]);
        let poly = build_polyhedron(&c, 0, 0).unwrap();
        assert_eq!(poly.cell_count(), 1);
        assert_eq!(poly.vertex(0), AmbientVector::zero(3));
        // h == 0 on all of H^d: the future cone over the origin.
        let x = HPoint::from_coords(&[0.9f64.sinh(), 0.0, 0.9f64.cosh()]).unwrap();
        assert_eq!(poly.support(&x).unwrap(), 0.0);
    }

    #[test]
    fn two_crossing_walls_vertices() {
        let (a, b) = (1.3, 0.6);
        let c = Cellulation::arrangement(
            2,
            vec![wall(&[1.0, 0.0, 0.0], a), wall(&[0.0, 1.0, 0.0], b)],
        );
        let poly = build_polyhedron(&c, 0, 5).unwrap();
        assert_eq!(poly.cell_count(), 4);
        // Canonical cells: (-,-), (-,+), (+,-), (+,+).
        let expect = [
            [0.0, 0.0, 0.0],
            [0.0, b, 0.0],
            [a, 0.0, 0.0],
            [a, b, 0.0],
        ];
        for (ci, row) in expect.iter().enumerate() {
            let x = poly.vertex(ci);
            for (k, &want) in row.iter().enumerate() {
                assert!((x[k] - want).abs() < 1e-12, "cell {ci} coord {k}: {x:?}");
            }
        }
    }

    #[test]
    fn rebasing_translates_all_vertices() {
        let c = Cellulation::arrangement(
            2,
            vec![wall(&[1.0, 0.0, 0.0], 1.3), wall(&[0.0, 1.0, 0.0], 0.6)],
        );
        let poly = build_polyhedron(&c, 0, 5).unwrap();
        let moved = poly.rebased(3).unwrap();
        assert_eq!(moved.vertex(3), AmbientVector::zero(3));
        for ci in 0..poly.cell_count() {
            let d = (moved.vertex(ci) - (poly.vertex(ci) - poly.vertex(3))).euclid_sq();
            assert!(d < 1e-24);
        }
        // Rebuilding from the other base gives the same translated set.
        let rebuilt = build_polyhedron(&c, 3, 5).unwrap();
        for ci in 0..poly.cell_count() {
            let d = (rebuilt.vertex(ci) - moved.vertex(ci)).euclid_sq();
            assert!(d < 1e-24);
        }
    }

    #[test]
    fn path_independence_on_the_build_examples() {
        let configs = vec![
            Cellulation::arrangement(2, vec![wall(&[1.0, 0.0, 0.0], 1.7)]),
            Cellulation::arrangement(
                2,
                vec![wall(&[1.0, 0.0, 0.0], 1.3), wall(&[0.0, 1.0, 0.0], 0.6)],
            ),
            Cellulation::arrangement(2, vec![]),
        ];
        for c in &configs {
            let dev = verify_path_independence(c, 0, 100, 13).unwrap();
            assert!(dev < 1e-9, "deviation {dev}");
        }
    }

    #[test]
    fn gauss_decomposition_on_the_build_examples() {
        let configs = vec![
            Cellulation::arrangement(2, vec![wall(&[1.0, 0.0, 0.0], 1.7)]),
            Cellulation::arrangement(
                2,
                vec![wall(&[1.0, 0.0, 0.0], 1.3), wall(&[0.0, 1.0, 0.0], 0.6)],
            ),
            Cellulation::arrangement(2, vec![]),
        ];
        for c in &configs {
            let poly = build_polyhedron(c, 0, 5).unwrap();
            let rep = verify_gauss_decomposition(&poly, 25, 17).unwrap();
            assert!(rep.passed, "failing cells {:?}", rep.failing_cells);
            assert!(rep.worst_margin > 1e-9);
        }
    }

    #[test]
    fn s1_round_trip_recovers_the_weights() {
        let (a, b) = (1.3, 0.6);
        let c = Cellulation::arrangement(
            2,
            vec![wall(&[1.0, 0.0, 0.0], a), wall(&[0.0, 1.0, 0.0], b)],
        );
        let poly = build_polyhedron(&c, 0, 5).unwrap();
        let rep = recompute_s1(&poly);
        assert!(rep.all_spacelike);
        assert!(rep.worst_deviation < 1e-12);
        let mut recovered: Vec<f64> = rep.rows.iter().map(|r| r.edge_length).collect();
        recovered.sort_by(|x, y| x.partial_cmp(y).unwrap());
        assert_eq!(recovered.len(), 4);
        assert!((recovered[0] - b).abs() < 1e-12 && (recovered[3] - a).abs() < 1e-12);
    }

    #[test]
    fn explicit_complex_builds_by_bfs() {
        // The matched crossing from the closure tests, with witnesses.
        let v1 = SpacelikeUnit::from_coords(&[1.0, 0.0, 0.0]).unwrap();
        let v2 = SpacelikeUnit::from_coords(&[0.0, 1.0, 0.0]).unwrap();
        let p = |x: f64, y: f64| {
            HPoint::normalize(AmbientVector::new(&[x, y, (1.0 + x * x + y * y).sqrt()]).unwrap())
                .unwrap()
        };
        let complex = crate::cellulation::ExplicitComplex {
            dim: 2,
            n_cells: 4,
            facets: vec![
                crate::cellulation::ExplicitFacet { weight: 1.2, normal: v1, back: 1, front: 0 },
                crate::cellulation::ExplicitFacet { weight: 0.5, normal: v2, back: 3, front: 0 },
                crate::cellulation::ExplicitFacet { weight: 1.2, normal: v1, back: 2, front: 3 },
                crate::cellulation::ExplicitFacet { weight: 0.5, normal: v2, back: 2, front: 1 },
            ],
            codim2: vec![crate::cellulation::Codim2Face {
                incident: vec![
                    (0, AmbientVector::new(&[0.0, 1.0, 0.0]).unwrap()),
                    (1, AmbientVector::new(&[1.0, 0.0, 0.0]).unwrap()),
                    (2, AmbientVector::new(&[0.0, -1.0, 0.0]).unwrap()),
                    (3, AmbientVector::new(&[-1.0, 0.0, 0.0]).unwrap()),
                ],
            }],
            witnesses: vec![
                vec![p(0.8, 0.8)],
                vec![p(-0.8, 0.8)],
                vec![p(-0.8, -0.8)],
                vec![p(0.8, -0.8)],
            ],
        };
        let poly = build_polyhedron(&Cellulation::Explicit(complex), 2, 0).unwrap();
        // Cell 2 is the (-,-) quadrant; cell 0 the (+,+) quadrant.
        let x0 = poly.vertex(0);
        assert!((x0[0] - 1.2).abs() < 1e-12 && (x0[1] - 0.5).abs() < 1e-12);
        let rep = recompute_s1(&poly);
        assert!(rep.worst_deviation < 1e-12 && rep.all_spacelike);
        let gauss = verify_gauss_decomposition(&poly, 3, 2).unwrap();
        assert!(gauss.passed);
    }

    #[test]
    fn closure_violation_blocks_the_build() {
        let v1 = SpacelikeUnit::from_coords(&[1.0, 0.0, 0.0]).unwrap();
        let v2 = SpacelikeUnit::from_coords(&[0.0, 1.0, 0.0]).unwrap();
        let complex = crate::cellulation::ExplicitComplex {
            dim: 2,
            n_cells: 4,
            facets: vec![
                crate::cellulation::ExplicitFacet { weight: 1.2, normal: v1, back: 1, front: 0 },
                crate::cellulation::ExplicitFacet { weight: 0.5, normal: v2, back: 3, front: 0 },
                crate::cellulation::ExplicitFacet { weight: 1.0, normal: v1, back: 2, front: 3 },
                crate::cellulation::ExplicitFacet { weight: 0.5, normal: v2, back: 2, front: 1 },
            ],
            codim2: vec![crate::cellulation::Codim2Face {
                incident: vec![
                    (0, AmbientVector::new(&[0.0, 1.0, 0.0]).unwrap()),
                    (1, AmbientVector::new(&[1.0, 0.0, 0.0]).unwrap()),
                    (2, AmbientVector::new(&[0.0, -1.0, 0.0]).unwrap()),
                    (3, AmbientVector::new(&[-1.0, 0.0, 0.0]).unwrap()),
                ],
            }],
            witnesses: Vec::new(),
        };
        assert!(matches!(
            build_polyhedron(&Cellulation::Explicit(complex), 0, 0),
            Err(PolyError::ClosureViolated { .. })
        ));
    }
}
