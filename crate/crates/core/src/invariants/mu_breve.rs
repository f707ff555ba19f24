use crate::coincidence::{
    signed_count, AuxBound, CoincidenceProblem, Constraint, EngineError, Factor,
};
use crate::constructions::translation_homotopy;
use crate::exactgeom::Point;
use crate::invariants::report::{InvariantReport, Value};
use crate::invariants::scene::{
    ensure_curves, validate_ornament, InvariantError, InvariantResult, Scene,
};
use crate::scalar::Scalar;

/// Global sign normalization for the planar triple-point invariant: the
/// engine total is multiplied by these constants, fixed once so that the
/// reference three-loop arrangement evaluates to +1 under the degree
/// algorithm, with the homotopy algorithm matching it.
pub(crate) const MU_BREVE_DEGREE_SIGN: i64 = -1;
pub(crate) const MU_BREVE_HOMOTOPY_SIGN: i64 = 1;

/// Deterministic displacement direction triples (before scaling), primary
/// first, used by the homotopy-track algorithm.
pub fn mu_breve_displacement_sets<S: Scalar>() -> Vec<[Point<S>; 3]> {
    let mk = |x: i64, y: i64| Point::new(vec![S::from_int(x), S::from_int(y)]);
    vec![
        [mk(1, 0), mk(-1, 1), mk(-1, -1)],
        [mk(2, 1), mk(-3, 1), mk(0, -2)],
        [mk(1, 2), mk(1, -3), mk(-2, 0)],
        [mk(3, -1), mk(-1, 3), mk(-3, -3)],
    ]
}

/// Deterministic regular-value triples `(w1, w2, w3)` with `w1+w2+w3 = 0`,
/// primary first, used by the direct ray-degree algorithm.
pub fn mu_breve_direction_sets<S: Scalar>() -> Vec<[Point<S>; 3]> {
    let mk = |x: i64, y: i64| Point::new(vec![S::from_int(x), S::from_int(y)]);
    vec![
        [mk(5, 1), mk(-2, 3), mk(-3, -4)],
        [mk(7, -2), mk(-1, 5), mk(-6, -3)],
        [mk(1, 9), mk(4, -3), mk(-5, -6)],
        [mk(11, 2), mk(-7, 3), mk(-4, -5)],
    ]
}

/// Scale displacement directions so the translated component boxes are
/// pairwise disjoint at time one.
pub fn scale_displacements<S: Scalar>(
    scene: &Scene<S>,
    directions: &[Point<S>; 3],
) -> InvariantResult<[Point<S>; 3], S> {
    // A crude exact size bound: total coordinate spread of the scene.
    let mut spread = S::one();
    for c in &scene.components {
        for (lo, hi) in c.map.bbox() {
            spread = spread + (hi - lo);
        }
    }
    let mut scale = spread.clone() + S::one();
    for _ in 0..64 {
        let displaced: Vec<Point<S>> =
            directions.iter().map(|d| d.scale(&scale)).collect();
        let mut ok = true;
        'pairs: for i in 0..3 {
            for j in i + 1..3 {
                let bi = boxes_translated(scene, i, &displaced[i]);
                let bj = boxes_translated(scene, j, &displaced[j]);
                if boxes_intersect(&bi, &bj) {
                    ok = false;
                    break 'pairs;
                }
            }
        }
        if ok {
            return Ok([
                displaced[0].clone(),
                displaced[1].clone(),
                displaced[2].clone(),
            ]);
        }
        scale = scale * S::from_int(2);
    }
    Err(InvariantError::BadInput(
        "could not separate components with the given displacement directions".into(),
    ))
}

fn boxes_translated<S: Scalar>(scene: &Scene<S>, idx: usize, d: &Point<S>) -> Vec<(S, S)> {
    scene.components[idx]
        .map
        .bbox()
        .into_iter()
        .zip(&d.coords)
        .map(|((lo, hi), dc)| (lo + dc.clone(), hi + dc.clone()))
        .collect()
}

fn boxes_intersect<S: Scalar>(a: &[(S, S)], b: &[(S, S)]) -> bool {
    a.iter().zip(b).all(|((alo, ahi), (blo, bhi))| alo <= bhi && blo <= ahi)
}

/// The planar triple-point invariant as a homotopy-track count: signed
/// triple points between the prisms of the straight-line translations that
/// carry the three loops pairwise far apart.
pub fn doodle_mu_breve_homotopy<S: Scalar>(
    scene: &Scene<S>,
    displacements: &[Point<S>; 3],
) -> InvariantResult<InvariantReport<S>, S> {
    ensure_curves(scene, 2)?;
    validate_ornament(scene)?;
    // The displacement separation requirement: time-one boxes disjoint.
    for i in 0..3 {
        for j in i + 1..3 {
            let bi = boxes_translated(scene, i, &displacements[i]);
            let bj = boxes_translated(scene, j, &displacements[j]);
            if boxes_intersect(&bi, &bj) {
                return Err(InvariantError::BadInput(
                    "displacements do not separate the components at time one".into(),
                ));
            }
        }
    }
    let maps = scene.maps();
    let prisms = translation_homotopy(&maps, displacements);
    let problem = CoincidenceProblem::new(
        prisms.into_iter().map(Factor::new).collect(),
        vec![Constraint::Coincide { i: 0, j: 1 }, Constraint::Coincide { i: 1, j: 2 }],
        vec![],
    );
    let result = match signed_count(&problem) {
        Ok(r) => r,
        Err(EngineError::Degenerate(rep)) => return Err(InvariantError::Degenerate(rep)),
        Err(e) => return Err(InvariantError::Engine(e)),
    };
    let mut report =
        InvariantReport::new("mu-breve", Value::Int(MU_BREVE_HOMOTOPY_SIGN * result.total))
            .with_witnesses(result.witnesses, result.tuples_examined);
    report.certificates.validations.push("ornament".into());
    report
        .certificates
        .directions
        .extend(displacements.iter().map(|d| format!("{d:?}")));
    Ok(report)
}

/// The planar triple-point invariant as a direct configuration-ray degree:
/// signed count of triples `(x, y, z)` with
/// `f1(x) - f2(y) = alpha (w1 - w2)` and `f2(y) - f3(z) = alpha (w2 - w3)`
/// for a single `alpha > 0`.
pub fn doodle_mu_breve_degree<S: Scalar>(
    scene: &Scene<S>,
    w: &[Point<S>; 3],
) -> InvariantResult<InvariantReport<S>, S> {
    ensure_curves(scene, 2)?;
    if w.iter().fold(Point::zero(2), |acc, p| acc.add(p)) != Point::zero(2) {
        return Err(InvariantError::BadInput("regular-value triple must sum to zero".into()));
    }
    if w[0].is_zero() && w[1].is_zero() {
        return Err(InvariantError::BadInput("regular-value triple must be nonzero".into()));
    }
    validate_ornament(scene)?;
    let maps = scene.maps();
    let problem = CoincidenceProblem::new(
        maps.iter().map(|m| Factor::new((*m).clone())).collect(),
        vec![
            Constraint::RayDiff { i: 0, j: 1, direction: w[0].sub(&w[1]), aux: 0 },
            Constraint::RayDiff { i: 1, j: 2, direction: w[1].sub(&w[2]), aux: 0 },
        ],
        vec![AuxBound::positive()],
    );
    let result = match signed_count(&problem) {
        Ok(r) => r,
        Err(EngineError::Degenerate(rep)) => return Err(InvariantError::Degenerate(rep)),
        Err(e) => return Err(InvariantError::Engine(e)),
    };
    let mut report =
        InvariantReport::new("mu-breve", Value::Int(MU_BREVE_DEGREE_SIGN * result.total))
            .with_witnesses(result.witnesses, result.tuples_examined);
    report.certificates.validations.push("ornament".into());
    report.certificates.directions.extend(w.iter().map(|d| format!("{d:?}")));
    Ok(report)
}

/// Homotopy-track algorithm with the documented deterministic fallbacks.
pub fn mu_breve_homotopy_with_fallbacks<S: Scalar>(
    scene: &Scene<S>,
) -> InvariantResult<InvariantReport<S>, S> {
    let sets = mu_breve_displacement_sets::<S>();
    super::linking::with_fallbacks(&sets, |dirs| {
        let scaled = scale_displacements(scene, dirs)?;
        doodle_mu_breve_homotopy(scene, &scaled)
    })
}

/// Ray-degree algorithm with the documented deterministic fallbacks.
pub fn mu_breve_degree_with_fallbacks<S: Scalar>(
    scene: &Scene<S>,
) -> InvariantResult<InvariantReport<S>, S> {
    let sets = mu_breve_direction_sets::<S>();
    super::linking::with_fallbacks(&sets, |w| doodle_mu_breve_degree(scene, w))
}
