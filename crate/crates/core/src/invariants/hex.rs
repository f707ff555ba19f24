use crate::coincidence::{
    signed_count, verify_empty, AuxBound, CoincidenceProblem, Constraint, EmptinessOutcome,
    EngineError, Factor,
};
use crate::exactgeom::{product_triangulation, Complex, ComplexKind, PLMap, Point};
use crate::invariants::report::{InvariantReport, Value};
use crate::invariants::scene::{InvariantError, InvariantResult, Scene, Violation};
use crate::scalar::Scalar;

/// Sign matching the boundary-cube double degree to twice the spanning-track
/// invariant.
pub(crate) const MU_STAR_SIGN: i64 = 1;

/// One face of the parameter cube's boundary, carrying the three component
/// maps over `circle x face` with the face chart appended to the image.
#[derive(Clone, Debug)]
pub struct HexFace<S: Scalar> {
    /// The fixed parameter axis (0, 1 or 2).
    pub axis: usize,
    /// Value of the fixed coordinate (0 or 1).
    pub level: u8,
    /// Orientation sign of the face chart `(t_{axis+1}, t_{axis+2})` in the
    /// boundary orientation of the cube: `+1` at level one, `-1` at level
    /// zero.
    pub sign: i8,
    /// Parameter positions of the face complex vertices.
    pub params: Vec<(S, S)>,
    /// Triangulation of the face square.
    pub complex: Complex,
    /// Per component: PL map on `product(component domain, face complex)`
    /// into physical space plus the two face chart coordinates.
    pub factors: Vec<PLMap<S>>,
}

/// A boundary-cube family of maps of a three-component scene: six faces
/// agreeing on shared edges, restricting to the input link map at the zero
/// corner and to a constant-per-component map at the opposite corner.
#[derive(Clone, Debug)]
pub struct HexFamily<S: Scalar> {
    /// The corner link map (three curves in 3-space).
    pub scene: Scene<S>,
    pub faces: Vec<HexFace<S>>,
}

impl<S: Scalar> HexFace<S> {
    /// The face chart coordinates of a parameter point of the cube boundary.
    pub fn chart_of(&self, t: &[S; 3]) -> (S, S) {
        (t[(self.axis + 1) % 3].clone(), t[(self.axis + 2) % 3].clone())
    }
}

fn face_index(axis: usize, level: u8) -> usize {
    axis * 2 + level as usize
}

impl<S: Scalar> HexFamily<S> {
    pub fn face(&self, axis: usize, level: u8) -> &HexFace<S> {
        &self.faces[face_index(axis, level)]
    }
}

/// The restriction data of one face factor along one side of the face
/// square: `(edge parameter, component vertex, physical image)`, sorted.
fn side_profile<S: Scalar>(
    face: &HexFace<S>,
    factor: usize,
    side_u: bool,
    side_value: &S,
) -> Vec<(S, usize, Vec<S>)> {
    let map = &face.factors[factor];
    let nv = face.params.len();
    let physical = map.ambient_dim - 2;
    let mut out = Vec::new();
    for (p, (u, v)) in face.params.iter().enumerate() {
        let (fixed, free) = if side_u { (u, v) } else { (v, u) };
        if fixed == side_value {
            for w in 0..map.domain.vertex_count / nv {
                let img = &map.images[w * nv + p];
                out.push((free.clone(), w, img.coords[..physical].to_vec()));
            }
        }
    }
    out.sort();
    out
}

/// Structural and disjointness certification of a boundary-cube family.
///
/// Structure: six faces with consistent product domains, exact agreement of
/// shared-edge restrictions, the zero corner equal to the scene and the
/// all-ones corner constant per component. Disjointness: on every face
/// `t_k in {0, 1}` the two components other than `k` have disjoint images
/// jointly with parameter equality; on every edge `t_i = t_j in {0, 1}` all
/// three components are pairwise disjoint. All checks exact.
pub fn verify_hexagonal<S: Scalar>(family: &HexFamily<S>) -> InvariantResult<(), S> {
    structural_checks(family)?;

    // Face conditions.
    for face in &family.faces {
        let (p, q) = ((face.axis + 1) % 3, (face.axis + 2) % 3);
        let problem = CoincidenceProblem::new(
            vec![
                Factor::new(face.factors[p].clone()),
                Factor::new(face.factors[q].clone()),
            ],
            vec![Constraint::Coincide { i: 0, j: 1 }],
            vec![],
        );
        match verify_empty(&problem).map_err(InvariantError::Engine)? {
            EmptinessOutcome::Certificate { .. } => {}
            EmptinessOutcome::Violation { point, .. } => {
                return Err(InvariantError::HexViolation {
                    place: format!("face t{}={}", face.axis + 1, face.level),
                    pair: (p, q),
                    violation: Violation { components: vec![p, q], point },
                });
            }
        }
    }

    // Edge conditions on the six edges with both fixed coordinates equal.
    for axis in 0..3usize {
        for level in 0..2u8 {
            // Edge { t_axis = level, t_{axis+1} = level }: lies on the face
            // (axis, level) along its side u = level.
            let face = family.face(axis, level);
            let maps: Vec<PLMap<S>> = (0..3)
                .map(|m| {
                    edge_restriction(
                        face,
                        m,
                        &family.scene.components[m].map.domain,
                        true,
                        &S::from_int(level as i64),
                    )
                })
                .collect::<Result<_, _>>()?;
            for a in 0..3usize {
                for b in a + 1..3 {
                    let problem = CoincidenceProblem::new(
                        vec![Factor::new(maps[a].clone()), Factor::new(maps[b].clone())],
                        vec![Constraint::Coincide { i: 0, j: 1 }],
                        vec![],
                    );
                    match verify_empty(&problem).map_err(InvariantError::Engine)? {
                        EmptinessOutcome::Certificate { .. } => {}
                        EmptinessOutcome::Violation { point, .. } => {
                            return Err(InvariantError::HexViolation {
                                place: format!(
                                    "edge t{}=t{}={}",
                                    axis + 1,
                                    (axis + 1) % 3 + 1,
                                    level
                                ),
                                pair: (a, b),
                                violation: Violation { components: vec![a, b], point },
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn structural_checks<S: Scalar>(family: &HexFamily<S>) -> InvariantResult<(), S> {
    let bad = |msg: String| Err(InvariantError::BadInput(msg));
    if family.faces.len() != 6 {
        return bad(format!("expected 6 faces, found {}", family.faces.len()));
    }
    for axis in 0..3usize {
        for level in 0..2u8 {
            let face = family.face(axis, level);
            if face.axis != axis || face.level != level {
                return bad("faces are not indexed in (axis, level) order".into());
            }
            let expected_sign = if level == 1 { 1 } else { -1 };
            if face.sign != expected_sign {
                return bad(format!("face t{}={} has wrong orientation sign", axis + 1, level));
            }
            face.complex
                .validate()
                .map_err(|e| InvariantError::BadInput(format!("face complex invalid: {e}")))?;
            if face.factors.len() != 3 {
                return bad("each face needs exactly three factor maps".into());
            }
            for (m, factor) in face.factors.iter().enumerate() {
                let base = &family.scene.components[m].map;
                let product = product_triangulation(&base.domain, &face.complex);
                if factor.domain != product {
                    return bad(format!(
                        "face t{}={} factor {m} is not the product triangulation",
                        axis + 1,
                        level
                    ));
                }
                if factor.ambient_dim != family.scene.ambient_dim + 2 {
                    return bad("face factors must append the two face chart coordinates".into());
                }
                let nv = face.params.len();
                for (idx, img) in factor.images.iter().enumerate() {
                    let (u, v) = &face.params[idx % nv];
                    if &img.coords[factor.ambient_dim - 2] != u
                        || &img.coords[factor.ambient_dim - 1] != v
                    {
                        return bad(format!(
                            "face t{}={} factor {m}: chart coordinates disagree with params",
                            axis + 1,
                            level
                        ));
                    }
                }
            }
        }
    }

    // Corner restrictions: the zero corner is the scene, the one corner is
    // constant per component.
    let zero = S::zero();
    let one = S::one();
    for axis in 0..3usize {
        let face = family.face(axis, 0);
        let corner = face
            .params
            .iter()
            .position(|(u, v)| *u == zero && *v == zero)
            .ok_or_else(|| InvariantError::BadInput("face misses the zero corner vertex".into()))?;
        let nv = face.params.len();
        for (m, factor) in face.factors.iter().enumerate() {
            let base = &family.scene.components[m].map;
            for w in 0..base.domain.vertex_count {
                let img = &factor.images[w * nv + corner];
                if img.coords[..family.scene.ambient_dim] != base.images[w].coords[..] {
                    return Err(InvariantError::BadInput(format!(
                        "zero corner of face t{}=0 does not restrict to the scene (component {m})",
                        axis + 1
                    )));
                }
            }
        }
        let face = family.face(axis, 1);
        let corner = face
            .params
            .iter()
            .position(|(u, v)| *u == one && *v == one)
            .ok_or_else(|| InvariantError::BadInput("face misses the ones corner vertex".into()))?;
        let nv = face.params.len();
        for factor in &face.factors {
            let first = factor.images[corner].coords[..family.scene.ambient_dim].to_vec();
            for w in 0..factor.domain.vertex_count / nv {
                if factor.images[w * nv + corner].coords[..family.scene.ambient_dim] != first[..] {
                    return Err(InvariantError::BadInput(
                        "ones corner is not constant per component".into(),
                    ));
                }
            }
        }
    }

    // Shared-edge agreement: cube edge { t_k = l, t_{k+1} = c } lies on face
    // (k, l) at side u = c and on face (k+1, c) at side v = l; the free
    // parameter is t_{k+2} on both.
    for k in 0..3usize {
        for l in 0..2u8 {
            for c in 0..2u8 {
                let f1 = family.face(k, l);
                let f2 = family.face((k + 1) % 3, c);
                for m in 0..3usize {
                    let p1 = side_profile(f1, m, true, &S::from_int(c as i64));
                    let p2 = side_profile(f2, m, false, &S::from_int(l as i64));
                    if p1 != p2 {
                        return Err(InvariantError::BadInput(format!(
                            "faces t{}={} and t{}={} disagree on their shared edge (component {})",
                            k + 1,
                            l,
                            (k + 1) % 3 + 1,
                            c,
                            m
                        )));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Restriction of a face factor to one side of the face square, as a PL map
/// on `product(component domain, side chain)` into physical space plus the
/// single free edge parameter.
fn edge_restriction<S: Scalar>(
    face: &HexFace<S>,
    factor: usize,
    base: &Complex,
    side_u: bool,
    side_value: &S,
) -> InvariantResult<PLMap<S>, S> {
    let map = &face.factors[factor];
    let nv = face.params.len();
    let physical = map.ambient_dim - 2;
    // Face vertices on the side, sorted by the free parameter.
    let mut side: Vec<(S, usize)> = face
        .params
        .iter()
        .enumerate()
        .filter(|(_, (u, v))| (if side_u { u } else { v }) == side_value)
        .map(|(p, (u, v))| ((if side_u { v } else { u }).clone(), p))
        .collect();
    side.sort();
    if side.len() < 2 {
        return Err(InvariantError::BadInput("face side has no subdivision".into()));
    }
    let chain = Complex::new(
        side.len(),
        1,
        (0..side.len() - 1).map(|i| vec![i, i + 1]).collect(),
        ComplexKind::PseudomanifoldWithBoundary,
    );
    let domain = product_triangulation(base, &chain);
    let mut images = Vec::with_capacity(domain.vertex_count);
    for w in 0..base.vertex_count {
        for (free, p) in &side {
            let img = &map.images[w * nv + *p];
            let mut coords = img.coords[..physical].to_vec();
            coords.push(free.clone());
            images.push(Point::new(coords));
        }
    }
    Ok(PLMap::new(domain, physical + 1, images))
}

/// Direction triples for the boundary-cube degree, summing to zero.
pub fn mu_star_direction_sets<S: Scalar>() -> Vec<[Point<S>; 3]> {
    let mk = |x: i64, y: i64, z: i64| {
        Point::new(vec![S::from_int(x), S::from_int(y), S::from_int(z)])
    };
    vec![
        [mk(5, 1, 2), mk(-2, 3, 1), mk(-3, -4, -3)],
        [mk(7, -2, 1), mk(-1, 5, 2), mk(-6, -3, -3)],
        [mk(1, 9, 4), mk(4, -3, 1), mk(-5, -6, -5)],
        [mk(11, 2, -1), mk(-7, 3, 2), mk(-4, -5, -1)],
    ]
}

/// The boundary-cube double degree: a face-by-face signed ray count with the
/// face chart coordinates constrained to agree across the three factors (the
/// ray direction has zero chart components), summed with the stored face
/// orientation signs.
pub fn mu_star<S: Scalar>(
    family: &HexFamily<S>,
    w: &[Point<S>; 3],
) -> InvariantResult<InvariantReport<S>, S> {
    verify_hexagonal(family)?;
    if w.iter().fold(Point::zero(3), |acc, p| acc.add(p)) != Point::zero(3) {
        return Err(InvariantError::BadInput("direction triple must sum to zero".into()));
    }
    if w[0].is_zero() && w[1].is_zero() {
        return Err(InvariantError::BadInput("direction triple must be nonzero".into()));
    }
    let pad = [S::zero(), S::zero()];
    let d12 = w[0].sub(&w[1]).extended(&pad);
    let d23 = w[1].sub(&w[2]).extended(&pad);
    let mut total = 0i64;
    let mut witnesses = Vec::new();
    let mut examined = 0u64;
    for face in &family.faces {
        let problem = CoincidenceProblem::new(
            vec![
                Factor::new(face.factors[0].clone()),
                Factor::new(face.factors[1].clone()),
                Factor::new(face.factors[2].clone()),
            ],
            vec![
                Constraint::RayDiff { i: 0, j: 1, direction: d12.clone(), aux: 0 },
                Constraint::RayDiff { i: 1, j: 2, direction: d23.clone(), aux: 0 },
            ],
            vec![AuxBound::positive()],
        );
        let result = match signed_count(&problem) {
            Ok(r) => r,
            Err(EngineError::Degenerate(rep)) => return Err(InvariantError::Degenerate(rep)),
            Err(e) => return Err(InvariantError::Engine(e)),
        };
        total += face.sign as i64 * result.total;
        witnesses.extend(result.witnesses);
        examined += result.tuples_examined;
    }
    let mut report = InvariantReport::new("mu-star", Value::Int(MU_STAR_SIGN * total))
        .with_witnesses(witnesses, examined);
    report.certificates.validations.push("hexagonal".into());
    report.certificates.directions.extend(w.iter().map(|d| format!("{d:?}")));
    Ok(report)
}

/// `mu_star` with the documented deterministic fallback directions.
pub fn mu_star_with_fallbacks<S: Scalar>(
    family: &HexFamily<S>,
) -> InvariantResult<InvariantReport<S>, S> {
    let sets = mu_star_direction_sets::<S>();
    super::linking::with_fallbacks(&sets, |w| mu_star(family, w))
}
