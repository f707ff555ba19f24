//! Builder of boundary-cube families.
//!
//! Each component follows one canonical journey, parametrized by a clock in
//! `[0, 2]` and made of affine phases:
//!
//! * nudge: the two inner vertices move a little along the third axis
//!   (`c in [0, 1/8]`), which pulls the component's plane trace away from
//!   the spots a lifting neighbor must cross;
//! * lift: the whole quad rises by `a + b` along the third axis
//!   (`c in [1/8, 1/4]`), taking it above every stationary ring;
//! * travel: translation by the unit target vector at altitude
//!   (`c in [1/4, 3/4]`);
//! * descend and un-nudge at the target (`c in [3/4, 1]`);
//! * radial shrink to the target point (`c in [1, 2]`).
//!
//! Edges of the parameter cube order these journeys so that a component
//! lifts only when its cyclic successor is nudged, away, or a point; faces
//! interpolate clock fields over fan triangulations refined along the phase
//! keyframes of the two components whose disjointness the face certifies.
//! Nothing here argues correctness of the motions - the emptiness
//! certificate of the hexagonality check is the contract.

use std::collections::HashMap;

use num_traits::{Signed, Zero};

use super::basic::{borromean_component, build_borromean_rings, BuilderError};
use crate::exactgeom::{product_triangulation, Complex, ComplexKind, PLMap, Point};
use crate::invariants::{HexFace, HexFamily, Scene};
use crate::scalar::{int, rat, Rat};

// ---------------------------------------------------------------------------
// Clock paths

/// Piecewise-linear path `tau -> value` on `[0, 1]`, breakpoints sorted.
#[derive(Clone, Debug)]
struct PLPath {
    pts: Vec<(Rat, Rat)>,
}

impl PLPath {
    fn constant(v: Rat) -> Self {
        PLPath { pts: vec![(int(0), v.clone()), (int(1), v)] }
    }

    fn eval(&self, tau: &Rat) -> Rat {
        let pts = &self.pts;
        if *tau <= pts[0].0 {
            return pts[0].1.clone();
        }
        for w in pts.windows(2) {
            if *tau <= w[1].0 {
                let span = w[1].0.clone() - w[0].0.clone();
                if span.is_zero() {
                    return w[1].1.clone();
                }
                let t = (tau.clone() - w[0].0.clone()) / span;
                return w[0].1.clone() + t * (w[1].1.clone() - w[0].1.clone());
            }
        }
        pts.last().expect("nonempty").1.clone()
    }

    /// Parameter kinks plus exact crossings of the given clock values.
    fn breakpoints(&self, keyframes: &[Rat]) -> Vec<Rat> {
        let mut out: Vec<Rat> = self.pts.iter().map(|(t, _)| t.clone()).collect();
        for w in self.pts.windows(2) {
            let (t0, v0) = &w[0];
            let (t1, v1) = &w[1];
            if v0 == v1 {
                continue;
            }
            for k in keyframes {
                let lo = if v0 < v1 { v0 } else { v1 };
                let hi = if v0 < v1 { v1 } else { v0 };
                if k > lo && k < hi {
                    let t = t0.clone()
                        + (t1.clone() - t0.clone()) * (k.clone() - v0.clone())
                            / (v1.clone() - v0.clone());
                    out.push(t);
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }
}

/// Clock paths of the three components along one cube edge.
#[derive(Clone, Debug)]
struct EdgeClocks {
    clocks: [PLPath; 3],
}

fn hold_then(path: &mut Vec<(Rat, Rat)>, tau: Rat, value: Rat) {
    path.push((tau, value));
}

/// Assemble one component's path from `(tau, value)` waypoints.
fn waypoints(points: &[(Rat, Rat)]) -> PLPath {
    PLPath { pts: points.to_vec() }
}

/// Edge from the zero corner to `e_i`. Order: the two movers nudge
/// (successor-first), the dragged component nudges and lifts to its hover
/// state, then the movers complete their journeys one after the other.
fn first_edge(i: usize) -> EdgeClocks {
    let m1 = (i + 1) % 3;
    let m2 = (i + 2) % 3;
    let mut clocks = [
        PLPath::constant(int(0)),
        PLPath::constant(int(0)),
        PLPath::constant(int(0)),
    ];
    clocks[m2] = waypoints(&[
        (int(0), int(0)),
        (rat(1, 10), rat(1, 8)),
        (rat(6, 10), rat(1, 8)),
        (int(1), int(1)),
    ]);
    clocks[m1] = waypoints(&[
        (int(0), int(0)),
        (rat(1, 10), int(0)),
        (rat(2, 10), rat(1, 8)),
        (rat(3, 10), rat(1, 8)),
        (rat(6, 10), int(1)),
        (int(1), int(1)),
    ]);
    clocks[i] = waypoints(&[
        (int(0), int(0)),
        (rat(2, 10), int(0)),
        (rat(3, 10), rat(1, 4)),
        (int(1), rat(1, 4)),
    ]);
    EdgeClocks { clocks }
}

/// Edge from `e_i` to `e_i + e_k`: the third component shrinks to its point;
/// then the hovering component descends home and component `k` journeys
/// back, in the order that keeps every transit protected.
fn second_edge(i: usize, k: usize) -> EdgeClocks {
    let j = 3 - i - k;
    let mut clocks = [
        PLPath::constant(int(0)),
        PLPath::constant(int(0)),
        PLPath::constant(int(0)),
    ];
    clocks[j] = waypoints(&[(int(0), int(1)), (rat(1, 3), int(2)), (int(1), int(2))]);
    let descend_first = k == (i + 1) % 3;
    let mut path_i = vec![(int(0), rat(1, 4))];
    let mut path_k = vec![(int(0), int(1))];
    if descend_first {
        hold_then(&mut path_i, rat(1, 3), rat(1, 4));
        hold_then(&mut path_i, rat(2, 3), int(0));
        hold_then(&mut path_i, int(1), int(0));
        hold_then(&mut path_k, rat(2, 3), int(1));
        hold_then(&mut path_k, int(1), int(0));
    } else {
        hold_then(&mut path_k, rat(1, 3), int(1));
        hold_then(&mut path_k, rat(2, 3), int(0));
        hold_then(&mut path_i, rat(2, 3), rat(1, 4));
        hold_then(&mut path_i, int(1), int(0));
    }
    clocks[i] = waypoints(&path_i);
    clocks[k] = waypoints(&path_k);
    EdgeClocks { clocks }
}

/// Edge from `e_i + e_k` to the ones corner: with `j` the fixed point
/// component, the mover whose successor is `j` goes first.
fn third_edge(i: usize, k: usize) -> EdgeClocks {
    let j = 3 - i - k;
    let m1 = (j + 2) % 3;
    let m2 = (j + 1) % 3;
    let mut clocks = [
        PLPath::constant(int(0)),
        PLPath::constant(int(0)),
        PLPath::constant(int(0)),
    ];
    clocks[j] = PLPath::constant(int(2));
    clocks[m1] = waypoints(&[
        (int(0), int(0)),
        (rat(3, 10), int(1)),
        (rat(4, 10), int(2)),
        (int(1), int(2)),
    ]);
    clocks[m2] = waypoints(&[
        (int(0), int(0)),
        (rat(4, 10), int(0)),
        (rat(7, 10), int(1)),
        (rat(8, 10), int(2)),
        (int(1), int(2)),
    ]);
    EdgeClocks { clocks }
}

// ---------------------------------------------------------------------------
// Journeys

/// A family motion: per component, the configuration at each clock value,
/// affine between consecutive keyframes.
pub(crate) trait FamilyMotion {
    fn scene(&self) -> &Scene<Rat>;
    /// Clock values where some configuration formula has a kink, within
    /// `(0, 2)`.
    fn keyframes(&self) -> Vec<Rat>;
    fn config(&self, component: usize, clock: &Rat) -> Vec<Point<Rat>>;
    /// Center clock triple for the fan fill of face `(axis, level)`.
    fn face_center(&self, axis: usize, level: u8) -> [Rat; 3];
}

fn unit(axis: usize) -> Point<Rat> {
    let mut v = vec![int(0); 3];
    v[axis] = int(1);
    Point::new(v)
}

/// Progress of `clock` through `[lo, hi]`, clamped to `[0, 1]`.
fn phase(clock: &Rat, lo: Rat, hi: Rat) -> Rat {
    if *clock <= lo {
        int(0)
    } else if *clock >= hi {
        int(1)
    } else {
        (clock.clone() - lo.clone()) / (hi - lo)
    }
}

/// The three-ring motion described in the module docs.
struct BorromeanMotion {
    scene: Scene<Rat>,
    a: Rat,
    b: Rat,
}

impl FamilyMotion for BorromeanMotion {
    fn scene(&self) -> &Scene<Rat> {
        &self.scene
    }

    fn keyframes(&self) -> Vec<Rat> {
        vec![rat(1, 8), rat(1, 4), rat(3, 4), rat(7, 8), int(1)]
    }

    fn config(&self, m: usize, clock: &Rat) -> Vec<Point<Rat>> {
        let (a, b) = (&self.a, &self.b);
        let em = unit(m);
        let elift = unit((m + 2) % 3);
        let home = borromean_component(m, a, b).images;
        if *clock <= int(1) {
            let nudge = rat(1, 2) * b.clone()
                * (phase(clock, int(0), rat(1, 8)) - phase(clock, rat(7, 8), int(1)));
            let altitude = (a.clone() + b.clone())
                * (phase(clock, rat(1, 8), rat(1, 4)) - phase(clock, rat(3, 4), rat(7, 8)));
            let travel = phase(clock, rat(1, 4), rat(3, 4));
            let shift = em.scale(&travel).add(&elift.scale(&altitude));
            let nudge_vec = elift.scale(&nudge);
            vec![
                home[0].add(&shift),
                home[1].add(&shift).add(&nudge_vec),
                home[2].add(&shift),
                home[3].add(&shift).add(&nudge_vec),
            ]
        } else {
            let s = int(2) - clock.clone();
            home.iter().map(|v| em.add(&v.scale(&s))).collect()
        }
    }

    fn face_center(&self, axis: usize, level: u8) -> [Rat; 3] {
        // In component order (not cyclic order): the face's required pair is
        // (axis+1, axis+2); the early fill centers at (pair = (0, 1)), the
        // late fill at (pair = (2, 2)).
        let mut c = [int(0), int(0), int(0)];
        if level == 0 {
            c[axis] = int(1);
            c[(axis + 1) % 3] = int(0);
            c[(axis + 2) % 3] = int(1);
        } else {
            c = [int(2), int(2), int(2)];
        }
        c
    }
}

/// Motion of a split scene: each component shrinks in place to its centroid,
/// then the point travels to a high standard target along a straight line.
struct SplitMotion {
    scene: Scene<Rat>,
    centroids: Vec<Point<Rat>>,
    targets: Vec<Point<Rat>>,
}

impl SplitMotion {
    fn new(scene: Scene<Rat>) -> Self {
        let centroids = scene
            .components
            .iter()
            .map(|c| {
                let n = int(c.map.images.len() as i64);
                let mut acc = Point::zero(3);
                for p in &c.map.images {
                    acc = acc.add(p);
                }
                acc.scale(&(int(1) / n))
            })
            .collect();
        let targets = (0..scene.components.len())
            .map(|m| Point::new(vec![int(0), int(0), int(50 + 10 * m as i64)]))
            .collect();
        SplitMotion { scene, centroids, targets }
    }
}

impl FamilyMotion for SplitMotion {
    fn scene(&self) -> &Scene<Rat> {
        &self.scene
    }

    fn keyframes(&self) -> Vec<Rat> {
        vec![int(1)]
    }

    fn config(&self, m: usize, clock: &Rat) -> Vec<Point<Rat>> {
        let base = &self.scene.components[m].map.images;
        let centroid = &self.centroids[m];
        if *clock <= int(1) {
            let s = int(1) - clock.clone();
            base.iter()
                .map(|v| centroid.add(&v.sub(centroid).scale(&s)))
                .collect()
        } else {
            let t = clock.clone() - int(1);
            let pos = centroid.lerp(&self.targets[m], &t);
            base.iter().map(|_| pos.clone()).collect()
        }
    }

    fn face_center(&self, _axis: usize, level: u8) -> [Rat; 3] {
        if level == 0 {
            [int(0), int(0), int(0)]
        } else {
            [int(2), int(2), int(2)]
        }
    }
}

// ---------------------------------------------------------------------------
// Face construction

struct FaceBuilder {
    positions: Vec<(Rat, Rat)>,
    clocks: Vec<[Rat; 3]>,
    index: HashMap<(Rat, Rat), usize>,
}

impl FaceBuilder {
    fn new() -> Self {
        FaceBuilder { positions: Vec::new(), clocks: Vec::new(), index: HashMap::new() }
    }

    fn intern(&mut self, pos: (Rat, Rat), clocks: [Rat; 3]) -> usize {
        if let Some(&i) = self.index.get(&pos) {
            debug_assert_eq!(self.clocks[i], clocks, "clock field inconsistent at {pos:?}");
            return i;
        }
        let i = self.positions.len();
        self.positions.push(pos.clone());
        self.clocks.push(clocks);
        self.index.insert(pos, i);
        i
    }
}

/// One side of a face square: the edge clocks, whether the side runs along
/// `u`, the fixed coordinate value, and whether the boundary traversal goes
/// against the edge parameter.
struct Side {
    clocks: EdgeClocks,
    along_u: bool,
    fixed: Rat,
    reversed: bool,
}

fn face_sides(axis: usize, level: u8) -> [Side; 4] {
    let k = axis;
    if level == 0 {
        [
            Side { clocks: first_edge((k + 1) % 3), along_u: true, fixed: int(0), reversed: false },
            Side {
                clocks: second_edge((k + 1) % 3, (k + 2) % 3),
                along_u: false,
                fixed: int(1),
                reversed: false,
            },
            Side {
                clocks: second_edge((k + 2) % 3, (k + 1) % 3),
                along_u: true,
                fixed: int(1),
                reversed: true,
            },
            Side { clocks: first_edge((k + 2) % 3), along_u: false, fixed: int(0), reversed: true },
        ]
    } else {
        [
            Side {
                clocks: second_edge(k, (k + 1) % 3),
                along_u: true,
                fixed: int(0),
                reversed: false,
            },
            Side {
                clocks: third_edge(k, (k + 1) % 3),
                along_u: false,
                fixed: int(1),
                reversed: false,
            },
            Side { clocks: third_edge(k, (k + 2) % 3), along_u: true, fixed: int(1), reversed: true },
            Side {
                clocks: second_edge(k, (k + 2) % 3),
                along_u: false,
                fixed: int(0),
                reversed: true,
            },
        ]
    }
}

/// Build the triangulated face square with its clock field: a fan from the
/// center over the exactly subdivided boundary, refined along the keyframe
/// level lines of the two components whose disjointness the face certifies.
fn build_face_complex(
    motion: &dyn FamilyMotion,
    axis: usize,
    level: u8,
    keyframes: &[Rat],
) -> (Vec<(Rat, Rat)>, Vec<[Rat; 3]>, Complex) {
    let mut fb = FaceBuilder::new();
    let sides = face_sides(axis, level);
    let mut boundary: Vec<usize> = Vec::new();
    for side in &sides {
        let mut taus: Vec<Rat> = Vec::new();
        for path in &side.clocks.clocks {
            taus.extend(path.breakpoints(keyframes));
        }
        taus.sort();
        taus.dedup();
        let ordered: Vec<Rat> = if side.reversed {
            taus.into_iter().rev().collect()
        } else {
            taus
        };
        for (n, tau) in ordered.iter().enumerate() {
            if n == 0 && !boundary.is_empty() {
                continue;
            }
            let pos = if side.along_u {
                (tau.clone(), side.fixed.clone())
            } else {
                (side.fixed.clone(), tau.clone())
            };
            let clocks = [
                side.clocks.clocks[0].eval(tau),
                side.clocks.clocks[1].eval(tau),
                side.clocks.clocks[2].eval(tau),
            ];
            boundary.push(fb.intern(pos, clocks));
        }
    }
    if boundary.last() == boundary.first() {
        boundary.pop();
    }
    let center = fb.intern((rat(1, 2), rat(1, 2)), motion.face_center(axis, level));

    let nb = boundary.len();
    let mut polys: Vec<Vec<usize>> = (0..nb)
        .map(|i| vec![center, boundary[i], boundary[(i + 1) % nb]])
        .collect();

    // Refine along the required pair's keyframe level lines so the pair's
    // maps are exact journey paths on every cell.
    for m in [(axis + 1) % 3, (axis + 2) % 3] {
        for k in keyframes {
            let mut next = Vec::with_capacity(polys.len());
            for poly in polys {
                split_polygon(&mut fb, poly, m, k, &mut next);
            }
            polys = next;
        }
    }

    let mut cells = Vec::new();
    for poly in polys {
        for i in 1..poly.len() - 1 {
            cells.push(vec![poly[0], poly[i], poly[i + 1]]);
        }
    }
    let complex = Complex::new(
        fb.positions.len(),
        2,
        cells,
        ComplexKind::PseudomanifoldWithBoundary,
    );
    (fb.positions, fb.clocks, complex)
}

/// Split a convex CCW polygon along the level line `clock[m] = value`,
/// keeping orientation; no-op when the line does not cross the interior.
fn split_polygon(
    fb: &mut FaceBuilder,
    poly: Vec<usize>,
    m: usize,
    value: &Rat,
    out: &mut Vec<Vec<usize>>,
) {
    let f: Vec<Rat> = poly.iter().map(|&v| fb.clocks[v][m].clone() - value.clone()).collect();
    let has_pos = f.iter().any(|x| x.is_positive());
    let has_neg = f.iter().any(|x| x.is_negative());
    if !(has_pos && has_neg) {
        out.push(poly);
        return;
    }
    let n = poly.len();
    let mut lower: Vec<usize> = Vec::new();
    let mut upper: Vec<usize> = Vec::new();
    for i in 0..n {
        let j = (i + 1) % n;
        if !f[i].is_positive() {
            lower.push(poly[i]);
        }
        if !f[i].is_negative() {
            upper.push(poly[i]);
        }
        if (f[i].is_positive() && f[j].is_negative())
            || (f[i].is_negative() && f[j].is_positive())
        {
            let t = f[i].clone() / (f[i].clone() - f[j].clone());
            let (pa, pb) = (&fb.positions[poly[i]], &fb.positions[poly[j]]);
            let pos = (
                pa.0.clone() + t.clone() * (pb.0.clone() - pa.0.clone()),
                pa.1.clone() + t.clone() * (pb.1.clone() - pa.1.clone()),
            );
            let ca = fb.clocks[poly[i]].clone();
            let cb = fb.clocks[poly[j]].clone();
            let clocks = [
                ca[0].clone() + t.clone() * (cb[0].clone() - ca[0].clone()),
                ca[1].clone() + t.clone() * (cb[1].clone() - ca[1].clone()),
                ca[2].clone() + t.clone() * (cb[2].clone() - ca[2].clone()),
            ];
            let cut = fb.intern(pos, clocks);
            lower.push(cut);
            upper.push(cut);
        }
    }
    for part in [lower, upper] {
        if part.len() >= 3 {
            out.push(part);
        }
    }
}

/// Assemble the full family for a motion.
fn build_family(motion: &dyn FamilyMotion) -> HexFamily<Rat> {
    let keyframes = motion.keyframes();
    let scene = motion.scene().clone();
    let mut faces = Vec::with_capacity(6);
    for axis in 0..3usize {
        for level in 0..2u8 {
            let (params, clocks, complex) = build_face_complex(motion, axis, level, &keyframes);
            debug_assert_eq!(complex.validate(), Ok(()));
            let mut factors = Vec::with_capacity(3);
            for m in 0..3usize {
                let base = &scene.components[m].map;
                let domain = product_triangulation(&base.domain, &complex);
                let mut images = Vec::with_capacity(domain.vertex_count);
                for w in 0..base.domain.vertex_count {
                    for (pidx, (u, v)) in params.iter().enumerate() {
                        let config = motion.config(m, &clocks[pidx][m]);
                        images.push(config[w].extended(&[u.clone(), v.clone()]));
                    }
                }
                factors.push(PLMap::new(domain, 5, images));
            }
            faces.push(HexFace {
                axis,
                level,
                sign: if level == 1 { 1 } else { -1 },
                params: params.clone(),
                complex,
                factors,
            });
        }
    }
    HexFamily { scene, faces }
}

/// The boundary-cube family of the rectangle three-ring link. Requires
/// `a <= 1/4` and `b <= a/4`, the clearances the journey phases were
/// designed with.
pub fn build_borromean_hexagonal_family(a: &Rat, b: &Rat) -> Result<HexFamily<Rat>, BuilderError> {
    if !(b > &int(0) && a > b) {
        return Err(BuilderError::BadParams("need a > b > 0".into()));
    }
    if a > &rat(1, 4) || b.clone() * int(4) > a.clone() {
        return Err(BuilderError::BadParams(
            "the family needs a <= 1/4 and b <= a/4".into(),
        ));
    }
    let scene = build_borromean_rings(a, b)?;
    let motion = BorromeanMotion { scene, a: a.clone(), b: b.clone() };
    Ok(build_family(&motion))
}

/// A family over a split scene: every component shrinks in place and its
/// point travels to a high target, so all pairs stay disjoint over the whole
/// cube boundary.
pub fn build_constant_hex_family(scene: &Scene<Rat>) -> Result<HexFamily<Rat>, BuilderError> {
    if scene.components.len() != 3 || scene.ambient_dim != 3 {
        return Err(BuilderError::BadParams(
            "the split family needs three components in 3-space".into(),
        ));
    }
    let motion = SplitMotion::new(scene.clone());
    Ok(build_family(&motion))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn motion() -> BorromeanMotion {
        BorromeanMotion {
            scene: build_borromean_rings(&rat(1, 4), &rat(1, 16)).unwrap(),
            a: rat(1, 4),
            b: rat(1, 16),
        }
    }

    #[test]
    fn face_complexes_are_valid() {
        let m = motion();
        let kf = m.keyframes();
        for axis in 0..3 {
            for level in 0..2u8 {
                let (params, _clocks, complex) = build_face_complex(&m, axis, level, &kf);
                assert_eq!(complex.validate(), Ok(()), "face t{}={}", axis + 1, level);
                for (u, v) in &params {
                    assert!(*u >= int(0) && *u <= int(1));
                    assert!(*v >= int(0) && *v <= int(1));
                }
            }
        }
    }

    #[test]
    fn journey_returns_home_and_reaches_point() {
        let m = motion();
        for comp in 0..3 {
            let home = m.config(comp, &int(0));
            assert_eq!(home, m.scene.components[comp].map.images);
            let end = m.config(comp, &int(2));
            for v in &end {
                assert_eq!(*v, unit(comp));
            }
            // At clock one the quad sits at its target in home shape.
            let arrived = m.config(comp, &int(1));
            for (h, t) in home.iter().zip(&arrived) {
                assert_eq!(h.add(&unit(comp)), *t);
            }
            // Mid-journey the quad is at altitude.
            let hover = m.config(comp, &rat(1, 4));
            let lift = unit((comp + 2) % 3).scale(&rat(5, 16));
            for (h, t) in home.iter().zip(&hover) {
                assert_eq!(h.add(&lift), *t);
            }
        }
    }

    #[test]
    fn edge_paths_hit_required_corners() {
        for i in 0..3usize {
            let fe = first_edge(i);
            let at = |paths: &EdgeClocks, tau: &Rat| -> [Rat; 3] {
                [
                    paths.clocks[0].eval(tau),
                    paths.clocks[1].eval(tau),
                    paths.clocks[2].eval(tau),
                ]
            };
            let start = at(&fe, &int(0));
            assert_eq!(start, [int(0), int(0), int(0)]);
            let end = at(&fe, &int(1));
            assert_eq!(end[i], rat(1, 4));
            assert_eq!(end[(i + 1) % 3], int(1));
            assert_eq!(end[(i + 2) % 3], int(1));
            for k in [(i + 1) % 3, (i + 2) % 3] {
                let se = second_edge(i, k);
                let s = at(&se, &int(0));
                assert_eq!(s, start_of_second(i, k));
                let e = at(&se, &int(1));
                let j = 3 - i - k;
                assert_eq!(e[j], int(2));
                assert_eq!(e[i], int(0));
                assert_eq!(e[k], int(0));
                let te = third_edge(i, k);
                assert_eq!(at(&te, &int(1)), [int(2), int(2), int(2)]);
            }
        }

        fn start_of_second(i: usize, k: usize) -> [Rat; 3] {
            let j = 3 - i - k;
            let mut s = [int(0), int(0), int(0)];
            s[i] = rat(1, 4);
            s[j] = int(1);
            s[k] = int(1);
            s
        }
    }
}
