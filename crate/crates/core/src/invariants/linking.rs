use crate::coincidence::{
    signed_count, AuxBound, CoincidenceProblem, Constraint, EngineError, Factor,
};
use crate::exactgeom::{PLMap, Point};
use crate::invariants::report::{InvariantReport, Value};
use crate::invariants::scene::{validate_link_map, InvariantError, InvariantResult, Scene};
use crate::invariants::Role;
use crate::scalar::Scalar;

/// Default ray direction and three deterministic fallbacks for the linking
/// number and other spatial ray counts.
pub fn lk_directions<S: Scalar>() -> Vec<Point<S>> {
    let mk = |a: i64, b: i64, c: i64| {
        Point::new(vec![S::from_int(a), S::from_int(b), S::from_int(c)])
    };
    vec![mk(0, 0, 1), mk(1, 3, 9), mk(2, -5, 7), mk(-3, 1, 11)]
}

/// The linking number of two oriented closed curves in 3-space as a signed
/// ray count: solutions are pairs `(x, y)` with `c2(y) - c1(x)` on the
/// positive `v`-ray.
pub fn linking_number<S: Scalar>(
    c1: &PLMap<S>,
    c2: &PLMap<S>,
    v: &Point<S>,
) -> InvariantResult<InvariantReport<S>, S> {
    if v.is_zero() {
        return Err(InvariantError::BadInput("direction must be nonzero".into()));
    }
    let scene = Scene::new(
        3,
        vec![
            super::scene::Component { name: "c1".into(), role: Role::LinkComponent, map: c1.clone() },
            super::scene::Component { name: "c2".into(), role: Role::LinkComponent, map: c2.clone() },
        ],
    );
    super::scene::ensure_curves(&scene, 3)?;
    validate_link_map(&scene)?;
    let problem = CoincidenceProblem::new(
        vec![Factor::new(c1.clone()), Factor::new(c2.clone())],
        vec![Constraint::RayDiff { i: 1, j: 0, direction: v.clone(), aux: 0 }],
        vec![AuxBound::positive()],
    );
    let result = match signed_count(&problem) {
        Ok(r) => r,
        Err(EngineError::Degenerate(rep)) => return Err(InvariantError::Degenerate(rep)),
        Err(e) => return Err(InvariantError::Engine(e)),
    };
    let mut report = InvariantReport::new("lk", Value::Int(result.total))
        .with_witnesses(result.witnesses, result.tuples_examined);
    report.certificates.validations.push("link-map".into());
    report.certificates.directions.push(format!("{v:?}"));
    Ok(report)
}

/// Run an invariant against a deterministic fallback list of auxiliary
/// choices, retrying on degeneracy only. At most `choices.len()` attempts.
pub fn with_fallbacks<S: Scalar, T, A>(
    choices: &[A],
    mut run: impl FnMut(&A) -> InvariantResult<T, S>,
) -> InvariantResult<T, S> {
    let mut last: Option<InvariantError<S>> = None;
    for (attempt, choice) in choices.iter().enumerate() {
        match run(choice) {
            Ok(v) => return Ok(v),
            Err(InvariantError::Degenerate(rep)) => {
                last = Some(InvariantError::Degenerate(rep));
                let _ = attempt;
            }
            Err(e) => return Err(e),
        }
    }
    Err(last.unwrap_or_else(|| InvariantError::BadInput("no auxiliary choices supplied".into())))
}
