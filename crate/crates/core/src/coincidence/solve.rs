use rayon::prelude::*;

use super::problem::*;
use crate::exactgeom::Point;
use crate::linalg::{feasible_point, solve_square, Bounds, SquareSolve};
use crate::scalar::Scalar;

/// Outcome of the exact emptiness check of [`verify_empty`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EmptinessOutcome<S: Scalar> {
    /// No cell tuple admits a solution over the closed cells.
    Certificate { tuples_examined: u64 },
    /// The first feasible tuple in canonical order, with a feasible point.
    Violation {
        cells: Vec<usize>,
        barycentric: Vec<Vec<S>>,
        aux: Vec<S>,
        /// Image of the first constraint's left factor at the feasible point.
        point: Point<S>,
    },
}

impl<S: Scalar> EmptinessOutcome<S> {
    pub fn is_certificate(&self) -> bool {
        matches!(self, EmptinessOutcome::Certificate { .. })
    }
}

/// Signed count of interior solutions over all admissible cell tuples.
///
/// For every tuple the square affine system is assembled in chart coordinates
/// (barycentric coordinates `1..d` per factor plus the auxiliary scalars) and
/// solved exactly. A nonsingular system whose solution is strictly interior
/// to all cells and auxiliary intervals contributes a witness with
/// `sign = sign(det)` in the canonical chart/equation order. The result is
/// independent of tuple enumeration order and of the parallel schedule.
pub fn signed_count<S: Scalar>(
    problem: &CoincidenceProblem<S>,
) -> Result<SignedCountResult<S>, EngineError> {
    problem.validate_square()?;
    let n0 = problem.factors[0].map.domain.cells.len();

    let branches: Vec<BranchOutcome<S>> = (0..n0)
        .into_par_iter()
        .map(|c0| count_branch(problem, c0))
        .collect();

    let mut total: i64 = 0;
    let mut witnesses: Vec<Witness<S>> = Vec::new();
    let mut examined: u64 = 0;
    for b in branches {
        match b {
            BranchOutcome::Ok { total: t, witnesses: w, examined: e } => {
                total += t;
                witnesses.extend(w);
                examined += e;
            }
            BranchOutcome::Degenerate(report) => {
                return Err(EngineError::Degenerate(report));
            }
        }
    }
    witnesses.sort_by(|a, b| {
        a.cells
            .cmp(&b.cells)
            .then_with(|| a.barycentric.cmp(&b.barycentric))
            .then_with(|| a.aux.cmp(&b.aux))
    });
    Ok(SignedCountResult { total, witnesses, tuples_examined: examined, generic: true })
}

enum BranchOutcome<S: Scalar> {
    Ok { total: i64, witnesses: Vec<Witness<S>>, examined: u64 },
    Degenerate(DegeneracyReport),
}

fn count_branch<S: Scalar>(problem: &CoincidenceProblem<S>, c0: usize) -> BranchOutcome<S> {
    let nf = problem.factors.len();
    let mut cells = vec![0usize; nf];
    cells[0] = c0;
    let mut total = 0i64;
    let mut witnesses = Vec::new();
    let mut examined = 0u64;

    // Depth-first assignment over factors 1..nf in cell-index order; the
    // whole branch enumerates tuples in lexicographic order.
    fn rec<S: Scalar>(
        problem: &CoincidenceProblem<S>,
        cells: &mut Vec<usize>,
        depth: usize,
        total: &mut i64,
        witnesses: &mut Vec<Witness<S>>,
        examined: &mut u64,
    ) -> Result<(), DegeneracyReport> {
        let nf = problem.factors.len();
        if depth == nf {
            *examined += 1;
            return handle_tuple(problem, cells, total, witnesses);
        }
        let ncells = problem.factors[depth].map.domain.cells.len();
        'next: for c in 0..ncells {
            cells[depth] = c;
            if !admissible_prefix(problem, cells, depth) {
                continue 'next;
            }
            rec(problem, cells, depth + 1, total, witnesses, examined)?;
        }
        Ok(())
    }

    if !admissible_prefix(problem, &cells, 0) {
        return BranchOutcome::Ok { total, witnesses, examined };
    }
    match rec(problem, &mut cells, 1, &mut total, &mut witnesses, &mut examined) {
        Ok(()) => BranchOutcome::Ok { total, witnesses, examined },
        Err(report) => BranchOutcome::Degenerate(report),
    }
}

/// Prefilters applicable once factors `0..=depth` have assigned cells:
/// exclusion rule plus exact bounding-box rejection per constraint.
fn admissible_prefix<S: Scalar>(
    problem: &CoincidenceProblem<S>,
    cells: &[usize],
    depth: usize,
) -> bool {
    if let Some(rule) = &problem.exclusion {
        let (i, j) = match rule {
            ExclusionRule::IdenticalCells { i, j } => (*i, *j),
            ExclusionRule::SharedFace { i, j } => (*i, *j),
        };
        if i <= depth && j <= depth && problem.excluded(cells) {
            return false;
        }
    }
    for c in &problem.constraints {
        let (i, j) = c.factors();
        if i > depth || j > depth {
            continue;
        }
        // Only re-test constraints that become fully assigned at this depth.
        if i != depth && j != depth {
            continue;
        }
        if !constraint_bbox_feasible(problem, c, cells) {
            return false;
        }
    }
    true
}

fn constraint_bbox_feasible<S: Scalar>(
    problem: &CoincidenceProblem<S>,
    constraint: &Constraint<S>,
    cells: &[usize],
) -> bool {
    let d = problem.ambient_dim();
    let (i, j) = constraint.factors();
    let bi = problem.factors[i].map.cell_bbox(cells[i]);
    let bj = problem.factors[j].map.cell_bbox(cells[j]);
    match constraint {
        Constraint::Coincide { .. } => (0..d).all(|k| bi[k].0 <= bj[k].1 && bj[k].0 <= bi[k].1),
        Constraint::RayDiff { direction, aux, .. } => {
            let bound = &problem.aux[*aux];
            (0..d).all(|k| {
                // Interval of alpha * direction_k over the closed aux hull.
                let dk = &direction.coords[k];
                let (add_lo, add_hi): (Option<S>, Option<S>) = if dk.is_zero() {
                    (Some(S::zero()), Some(S::zero()))
                } else if dk.is_positive() {
                    (
                        bound.lo.clone().map(|l| l * dk.clone()),
                        bound.hi.clone().map(|h| h * dk.clone()),
                    )
                } else {
                    (
                        bound.hi.clone().map(|h| h * dk.clone()),
                        bound.lo.clone().map(|l| l * dk.clone()),
                    )
                };
                // g_i(x_i) must meet bbox_j + [add_lo, add_hi] in coordinate k.
                let lo_ok = match &add_hi {
                    None => true,
                    Some(ah) => bi[k].0 <= bj[k].1.clone() + ah.clone(),
                };
                let hi_ok = match &add_lo {
                    None => true,
                    Some(al) => bi[k].1 >= bj[k].0.clone() + al.clone(),
                };
                lo_ok && hi_ok
            })
        }
    }
}

fn handle_tuple<S: Scalar>(
    problem: &CoincidenceProblem<S>,
    cells: &[usize],
    total: &mut i64,
    witnesses: &mut Vec<Witness<S>>,
) -> Result<(), DegeneracyReport> {
    let (a, b) = assemble_chart_system(problem, cells);
    match solve_square(a, b) {
        SquareSolve::Unique { solution, det_sign } => {
            classify_solution(problem, cells, &solution, det_sign, total, witnesses)
        }
        SquareSolve::Singular => {
            // Exact feasibility over the closed cells decides whether the
            // affine solution set meets them.
            if closed_tuple_feasible(problem, cells).is_some() {
                Err(DegeneracyReport {
                    cells: cells.to_vec(),
                    kind: DegeneracyKind::SingularConsistent,
                })
            } else {
                Ok(())
            }
        }
    }
}

/// Chart unknowns: for each factor the barycentric coordinates `1..d` of its
/// cell tuple, then the auxiliary scalars; equations: constraints in order,
/// each contributing the `D` ambient coordinates in order.
fn assemble_chart_system<S: Scalar>(
    problem: &CoincidenceProblem<S>,
    cells: &[usize],
) -> (Vec<Vec<S>>, Vec<S>) {
    let d = problem.ambient_dim();
    let mut offsets = Vec::with_capacity(problem.factors.len());
    let mut off = 0usize;
    for f in &problem.factors {
        offsets.push(off);
        off += f.map.domain.dim;
    }
    let aux_off = off;
    let n = off + problem.aux.len();
    let mut a = vec![vec![S::zero(); n]; n];
    let mut b = vec![S::zero(); n];

    for (ci, c) in problem.constraints.iter().enumerate() {
        let (fi, fj) = c.factors();
        let map_i = &problem.factors[fi].map;
        let map_j = &problem.factors[fj].map;
        let tuple_i = &map_i.domain.cells[cells[fi]];
        let tuple_j = &map_j.domain.cells[cells[fj]];
        for coord in 0..d {
            let r = ci * d + coord;
            let base_i = &map_i.images[tuple_i[0]].coords[coord];
            let base_j = &map_j.images[tuple_j[0]].coords[coord];
            for (k, &v) in tuple_i.iter().enumerate().skip(1) {
                let col = offsets[fi] + k - 1;
                a[r][col] = a[r][col].clone()
                    + (map_i.images[v].coords[coord].clone() - base_i.clone());
            }
            for (k, &v) in tuple_j.iter().enumerate().skip(1) {
                let col = offsets[fj] + k - 1;
                a[r][col] = a[r][col].clone()
                    - (map_j.images[v].coords[coord].clone() - base_j.clone());
            }
            if let Constraint::RayDiff { direction, aux, .. } = c {
                let col = aux_off + *aux;
                a[r][col] = a[r][col].clone() - direction.coords[coord].clone();
            }
            b[r] = b[r].clone() + base_j.clone() - base_i.clone();
        }
    }
    (a, b)
}

fn classify_solution<S: Scalar>(
    problem: &CoincidenceProblem<S>,
    cells: &[usize],
    solution: &[S],
    det_sign: i8,
    total: &mut i64,
    witnesses: &mut Vec<Witness<S>>,
) -> Result<(), DegeneracyReport> {
    let mut barycentric: Vec<Vec<S>> = Vec::with_capacity(problem.factors.len());
    let mut on_boundary = false;
    let mut off = 0usize;
    for (f, factor) in problem.factors.iter().enumerate() {
        let dim = factor.map.domain.dim;
        let chart = &solution[off..off + dim];
        off += dim;
        let mut lambda0 = S::one();
        for l in chart {
            lambda0 = lambda0 - l.clone();
        }
        let mut bary = Vec::with_capacity(dim + 1);
        bary.push(lambda0);
        bary.extend(chart.iter().cloned());
        for l in &bary {
            if l.is_negative() {
                return Ok(()); // strictly outside the closed cell
            }
            if l.is_zero() {
                on_boundary = true;
            }
        }
        let _ = cells[f];
        barycentric.push(bary);
    }
    let aux_values: Vec<S> = solution[off..].to_vec();
    let mut aux_on_boundary = false;
    for (v, bound) in aux_values.iter().zip(&problem.aux) {
        if let Some(lo) = &bound.lo {
            if v < lo {
                return Ok(());
            }
            if v == lo {
                aux_on_boundary = true;
            }
        }
        if let Some(hi) = &bound.hi {
            if v > hi {
                return Ok(());
            }
            if v == hi {
                aux_on_boundary = true;
            }
        }
    }
    if on_boundary {
        return Err(DegeneracyReport {
            cells: cells.to_vec(),
            kind: DegeneracyKind::SolutionOnCellBoundary,
        });
    }
    if aux_on_boundary {
        return Err(DegeneracyReport {
            cells: cells.to_vec(),
            kind: DegeneracyKind::SolutionOnAuxBoundary,
        });
    }
    *total += det_sign as i64;
    witnesses.push(Witness { cells: cells.to_vec(), barycentric, aux: aux_values, sign: det_sign });
    Ok(())
}

/// Feasibility of the constraint system over the closed product polytope of
/// one cell tuple: full barycentric coordinates with simplex rows, auxiliary
/// scalars over their closed hulls.
fn closed_tuple_feasible<S: Scalar>(
    problem: &CoincidenceProblem<S>,
    cells: &[usize],
) -> Option<(Vec<Vec<S>>, Vec<S>)> {
    let d = problem.ambient_dim();
    let mut offsets = Vec::with_capacity(problem.factors.len());
    let mut off = 0usize;
    for f in &problem.factors {
        offsets.push(off);
        off += f.map.domain.dim + 1;
    }
    let aux_off = off;
    let n = off + problem.aux.len();
    let rows_n = problem.constraints.len() * d + problem.factors.len();
    let mut a = vec![vec![S::zero(); n]; rows_n];
    let mut b = vec![S::zero(); rows_n];

    for (ci, c) in problem.constraints.iter().enumerate() {
        let (fi, fj) = c.factors();
        let map_i = &problem.factors[fi].map;
        let map_j = &problem.factors[fj].map;
        let tuple_i = &map_i.domain.cells[cells[fi]];
        let tuple_j = &map_j.domain.cells[cells[fj]];
        for coord in 0..d {
            let r = ci * d + coord;
            for (k, &v) in tuple_i.iter().enumerate() {
                let col = offsets[fi] + k;
                a[r][col] = a[r][col].clone() + map_i.images[v].coords[coord].clone();
            }
            for (k, &v) in tuple_j.iter().enumerate() {
                let col = offsets[fj] + k;
                a[r][col] = a[r][col].clone() - map_j.images[v].coords[coord].clone();
            }
            if let Constraint::RayDiff { direction, aux, .. } = c {
                let col = aux_off + *aux;
                a[r][col] = a[r][col].clone() - direction.coords[coord].clone();
            }
        }
    }
    for (f, factor) in problem.factors.iter().enumerate() {
        let r = problem.constraints.len() * d + f;
        for k in 0..=factor.map.domain.dim {
            a[r][offsets[f] + k] = S::one();
        }
        b[r] = S::one();
    }

    let mut bounds: Vec<Bounds<S>> = Vec::with_capacity(n);
    for factor in &problem.factors {
        for _ in 0..=factor.map.domain.dim {
            bounds.push((Some(S::zero()), None));
        }
    }
    for bound in &problem.aux {
        bounds.push((bound.lo.clone(), bound.hi.clone()));
    }

    let x = feasible_point(&a, &b, &bounds)?;
    // Split the feasible point back into barycentric blocks and aux values.
    let mut barys = Vec::with_capacity(problem.factors.len());
    for (f, factor) in problem.factors.iter().enumerate() {
        barys.push(x[offsets[f]..offsets[f] + factor.map.domain.dim + 1].to_vec());
    }
    Some((barys, x[aux_off..].to_vec()))
}

/// Exact emptiness check: the constraint system may be under-, exactly-, or
/// over-determined, and feasibility is tested over the closed cells and the
/// closed auxiliary hulls. Returns a certificate or the first feasible tuple
/// in canonical (lexicographic) order with a feasible point.
pub fn verify_empty<S: Scalar>(
    problem: &CoincidenceProblem<S>,
) -> Result<EmptinessOutcome<S>, EngineError> {
    problem.validate_shape()?;
    let n0 = problem.factors[0].map.domain.cells.len();

    let branches: Vec<(u64, Option<(Vec<usize>, Vec<Vec<S>>, Vec<S>)>)> = (0..n0)
        .into_par_iter()
        .map(|c0| empty_branch(problem, c0))
        .collect();

    let mut examined = 0u64;
    for (count, found) in branches {
        examined += count;
        if let Some((cells, barycentric, aux)) = found {
            let (fi, _) = problem.constraints[0].factors();
            let point = problem.factors[fi]
                .map
                .evaluate(cells[fi], &barycentric[fi])
                .expect("feasible barycentric coordinates evaluate");
            return Ok(EmptinessOutcome::Violation { cells, barycentric, aux, point });
        }
    }
    Ok(EmptinessOutcome::Certificate { tuples_examined: examined })
}

type BranchFind<S> = (u64, Option<(Vec<usize>, Vec<Vec<S>>, Vec<S>)>);

fn empty_branch<S: Scalar>(problem: &CoincidenceProblem<S>, c0: usize) -> BranchFind<S> {
    let nf = problem.factors.len();
    let mut cells = vec![0usize; nf];
    cells[0] = c0;
    let mut examined = 0u64;

    fn rec<S: Scalar>(
        problem: &CoincidenceProblem<S>,
        cells: &mut Vec<usize>,
        depth: usize,
        examined: &mut u64,
    ) -> Option<(Vec<usize>, Vec<Vec<S>>, Vec<S>)> {
        let nf = problem.factors.len();
        if depth == nf {
            *examined += 1;
            if let Some((barys, aux)) = closed_tuple_feasible(problem, cells) {
                return Some((cells.clone(), barys, aux));
            }
            return None;
        }
        let ncells = problem.factors[depth].map.domain.cells.len();
        for c in 0..ncells {
            cells[depth] = c;
            if !admissible_prefix(problem, cells, depth) {
                continue;
            }
            if let Some(found) = rec(problem, cells, depth + 1, examined) {
                return Some(found);
            }
        }
        None
    }

    if !admissible_prefix(problem, &cells, 0) {
        return (examined, None);
    }
    let found = rec(problem, &mut cells, 1, &mut examined);
    (examined, found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::{shapes, Complex, ComplexKind, PLMap};
    use crate::scalar::{int, rat, Rat};

    fn pt(coords: &[Rat]) -> Point<Rat> {
        Point::new(coords.to_vec())
    }

    fn segment_map(a: &[Rat], b: &[Rat]) -> PLMap<Rat> {
        PLMap::new(shapes::segment(), a.len(), vec![pt(a), pt(b)])
    }

    #[test]
    fn crossing_segments_count_one() {
        // (0,0)-(2,2) and (0,2)-(2,0) cross at (1,1).
        let m1 = segment_map(&[int(0), int(0)], &[int(2), int(2)]);
        let m2 = segment_map(&[int(0), int(2)], &[int(2), int(0)]);
        let p = CoincidenceProblem::new(
            vec![Factor::new(m1.clone()), Factor::new(m2.clone())],
            vec![Constraint::Coincide { i: 0, j: 1 }],
            vec![],
        );
        let r = signed_count(&p).unwrap();
        assert_eq!(r.total.abs(), 1);
        assert_eq!(r.witnesses.len(), 1);
        let w = &r.witnesses[0];
        let img = m1.evaluate(w.cells[0], &w.barycentric[0]).unwrap();
        assert_eq!(img, pt(&[int(1), int(1)]));

        // Reversing the second segment's orientation negates the total.
        let p2 = CoincidenceProblem::new(
            vec![Factor::new(m1), Factor::new(m2.orientation_reversed())],
            vec![Constraint::Coincide { i: 0, j: 1 }],
            vec![],
        );
        let r2 = signed_count(&p2).unwrap();
        assert_eq!(r2.total, -r.total);
    }

    #[test]
    fn disjoint_segments_count_zero() {
        let m1 = segment_map(&[int(0), int(0)], &[int(1), int(0)]);
        let m2 = segment_map(&[int(0), int(5)], &[int(1), int(5)]);
        let p = CoincidenceProblem::new(
            vec![Factor::new(m1), Factor::new(m2)],
            vec![Constraint::Coincide { i: 0, j: 1 }],
            vec![],
        );
        let r = signed_count(&p).unwrap();
        assert_eq!(r.total, 0);
        assert!(r.witnesses.is_empty());
    }

    #[test]
    fn endpoint_touch_is_degenerate() {
        // Segments meeting exactly at a shared endpoint image.
        let m1 = segment_map(&[int(0), int(0)], &[int(1), int(1)]);
        let m2 = segment_map(&[int(1), int(1)], &[int(2), int(0)]);
        let p = CoincidenceProblem::new(
            vec![Factor::new(m1), Factor::new(m2)],
            vec![Constraint::Coincide { i: 0, j: 1 }],
            vec![],
        );
        match signed_count(&p) {
            Err(EngineError::Degenerate(rep)) => {
                assert_eq!(rep.kind, DegeneracyKind::SolutionOnCellBoundary);
            }
            other => panic!("expected boundary degeneracy, got {other:?}"),
        }
    }

    #[test]
    fn collinear_overlap_is_singular_consistent() {
        let m1 = segment_map(&[int(0), int(0)], &[int(2), int(0)]);
        let m2 = segment_map(&[int(1), int(0)], &[int(3), int(0)]);
        let p = CoincidenceProblem::new(
            vec![Factor::new(m1), Factor::new(m2)],
            vec![Constraint::Coincide { i: 0, j: 1 }],
            vec![],
        );
        match signed_count(&p) {
            Err(EngineError::Degenerate(rep)) => {
                assert_eq!(rep.kind, DegeneracyKind::SingularConsistent);
            }
            other => panic!("expected singular degeneracy, got {other:?}"),
        }
    }

    #[test]
    fn ray_constraint_counts_aligned_pair() {
        // Points p of m1 and q of m2 with q - p on the positive x-ray.
        let m1 = segment_map(&[int(0), int(0)], &[int(0), int(2)]);
        let m2 = segment_map(&[int(5), int(2)], &[int(5), int(0)]);
        let p = CoincidenceProblem::new(
            vec![Factor::new(m1), Factor::new(m2)],
            vec![Constraint::RayDiff {
                i: 1,
                j: 0,
                direction: pt(&[int(1), int(0)]),
                aux: 0,
            }],
            vec![AuxBound::positive()],
        );
        // 1 + 1 domain + 1 aux = 3 != 2 equations: not square.
        assert!(matches!(signed_count(&p), Err(EngineError::NotSquare { .. })));
        // As a feasibility problem it must find the aligned pair.
        match verify_empty(&p).unwrap() {
            EmptinessOutcome::Violation { aux, .. } => assert_eq!(aux, vec![int(5)]),
            other => panic!("expected violation, got {other:?}"),
        }
        // With the ray pointing away, emptiness is certified.
        let p2 = CoincidenceProblem::new(
            vec![
                Factor::new(segment_map(&[int(0), int(0)], &[int(0), int(2)])),
                Factor::new(segment_map(&[int(5), int(2)], &[int(5), int(0)])),
            ],
            vec![Constraint::RayDiff {
                i: 0,
                j: 1,
                direction: pt(&[int(1), int(0)]),
                aux: 0,
            }],
            vec![AuxBound::positive()],
        );
        assert!(verify_empty(&p2).unwrap().is_certificate());
    }

    #[test]
    fn verify_empty_examples() {
        // Two triangles with disjoint images.
        let tri = Complex::new(3, 2, vec![vec![0, 1, 2]], ComplexKind::General);
        let t1 = PLMap::new(
            tri.clone(),
            2,
            vec![pt(&[int(0), int(0)]), pt(&[int(1), int(0)]), pt(&[int(0), int(1)])],
        );
        let t2 = PLMap::new(
            tri.clone(),
            2,
            vec![pt(&[int(5), int(0)]), pt(&[int(6), int(0)]), pt(&[int(5), int(1)])],
        );
        let p = CoincidenceProblem::new(
            vec![Factor::new(t1.clone()), Factor::new(t2)],
            vec![Constraint::Coincide { i: 0, j: 1 }],
            vec![],
        );
        assert!(verify_empty(&p).unwrap().is_certificate());

        // Sharing exactly one vertex image: violation at that point.
        let t3 = PLMap::new(
            tri,
            2,
            vec![pt(&[int(1), int(0)]), pt(&[int(2), int(-1)]), pt(&[int(2), int(1)])],
        );
        let p = CoincidenceProblem::new(
            vec![Factor::new(t1), Factor::new(t3)],
            vec![Constraint::Coincide { i: 0, j: 1 }],
            vec![],
        );
        match verify_empty(&p).unwrap() {
            EmptinessOutcome::Violation { point, .. } => {
                assert_eq!(point, pt(&[int(1), int(0)]));
            }
            other => panic!("expected violation, got {other:?}"),
        }
    }

    #[test]
    fn exclusion_rule_skips_identical_cells() {
        let m = segment_map(&[int(0), int(0)], &[int(1), int(1)]);
        let p = CoincidenceProblem::new(
            vec![Factor::new(m.clone()), Factor::new(m)],
            vec![Constraint::Coincide { i: 0, j: 1 }],
            vec![],
        )
        .with_exclusion(ExclusionRule::IdenticalCells { i: 0, j: 1 });
        // The only tuple is the identical pair, which is excluded.
        match verify_empty(&p).unwrap() {
            EmptinessOutcome::Certificate { tuples_examined } => assert_eq!(tuples_examined, 0),
            other => panic!("expected certificate, got {other:?}"),
        }
    }

    #[test]
    fn subdivision_invariance_of_signed_count() {
        use crate::exactgeom::barycentric_subdivide;
        let m1 = segment_map(&[int(0), int(0)], &[int(2), int(2)]);
        let m2 = segment_map(&[rat(1, 3), int(2)], &[int(2), int(0)]);
        let base = CoincidenceProblem::new(
            vec![Factor::new(m1.clone()), Factor::new(m2.clone())],
            vec![Constraint::Coincide { i: 0, j: 1 }],
            vec![],
        );
        let r1 = signed_count(&base).unwrap();
        let subdivided = CoincidenceProblem::new(
            vec![
                Factor::new(barycentric_subdivide(&m1)),
                Factor::new(barycentric_subdivide(&barycentric_subdivide(&m2))),
            ],
            vec![Constraint::Coincide { i: 0, j: 1 }],
            vec![],
        );
        let r2 = signed_count(&subdivided).unwrap();
        assert_eq!(r1.total, r2.total);
        assert_eq!(r1.witnesses.len(), r2.witnesses.len());
    }

    #[test]
    fn surface_curve_crossing_sign_flips_with_surface_orientation() {
        // An oriented triangle in R^3 crossed by a vertical segment: the
        // signed intersection number negates when the triangle (an
        // even-dimensional factor would keep it under cycling, but a genuine
        // orientation reversal flips it).
        let tri = Complex::new(3, 2, vec![vec![0, 1, 2]], ComplexKind::General);
        let surf = PLMap::new(
            tri,
            3,
            vec![
                pt(&[int(0), int(0), int(0)]),
                pt(&[int(4), int(0), int(0)]),
                pt(&[int(0), int(4), int(0)]),
            ],
        );
        let seg = segment_map(&[int(1), int(1), int(-1)], &[int(1), int(1), int(1)]);
        let p = CoincidenceProblem::new(
            vec![Factor::new(surf.clone()), Factor::new(seg.clone())],
            vec![Constraint::Coincide { i: 0, j: 1 }],
            vec![],
        );
        let r = signed_count(&p).unwrap();
        assert_eq!(r.total.abs(), 1);
        let p_rev = CoincidenceProblem::new(
            vec![Factor::new(surf.orientation_reversed()), Factor::new(seg.clone())],
            vec![Constraint::Coincide { i: 0, j: 1 }],
            vec![],
        );
        assert_eq!(signed_count(&p_rev).unwrap().total, -r.total);
        // Cycling the triangle tuple is an even permutation: total unchanged.
        let p_cyc = CoincidenceProblem::new(
            vec![Factor::new(surf.cells_cycled()), Factor::new(seg)],
            vec![Constraint::Coincide { i: 0, j: 1 }],
            vec![],
        );
        assert_eq!(signed_count(&p_cyc).unwrap().total, r.total);
    }
}
