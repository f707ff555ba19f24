use crate::coincidence::{
    signed_count, AuxBound, CoincidenceProblem, Constraint, EngineError, ExclusionRule, Factor,
};
use crate::constructions::cone_null_homotopy;
use crate::exactgeom::Point;
use crate::invariants::report::{InvariantReport, Value};
use crate::invariants::scene::{
    ensure_spheres_in_r4, validate_link_map, validate_pm_ne_0, InvariantError, InvariantResult,
    Scene,
};
use crate::scalar::Scalar;

/// Sign matching the cone-track algorithm to the ray-degree algorithm.
pub(crate) const BETA_HAT_HOM_SIGN: i64 = 1;

/// Deterministic `(u, w)` ray-direction pairs in 4-space, primary first.
pub fn beta_direction_pairs<S: Scalar>() -> Vec<(Point<S>, Point<S>)> {
    let mk = |a: i64, b: i64, c: i64, d: i64| {
        Point::new(vec![S::from_int(a), S::from_int(b), S::from_int(c), S::from_int(d)])
    };
    vec![
        (mk(1, 2, 5, 11), mk(-3, 7, 1, 2)),
        (mk(2, -1, 3, 7), mk(5, 1, -2, 3)),
        (mk(-1, 4, 1, 9), mk(2, 3, -5, 1)),
        (mk(3, 1, -7, 2), mk(1, -2, 4, 5)),
    ]
}

/// Deterministic apex pairs for cone-track computations, primary first.
pub fn beta_apex_pairs<S: Scalar>() -> Vec<(Point<S>, Point<S>)> {
    let mk = |a: i64, b: i64, c: i64, d: i64| {
        Point::new(vec![
            S::from_ratio(a, 1),
            S::from_ratio(b, 1),
            S::from_ratio(c, 7),
            S::from_ratio(d, 1),
        ])
    };
    vec![
        (mk(0, 0, 1, 9), mk(1, 0, -2, -9)),
        (mk(1, 1, 3, 11), mk(-1, 0, 2, -11)),
        (mk(0, 1, -1, 13), mk(1, -1, 1, -13)),
        (mk(2, -1, 2, 10), mk(-2, 1, -3, -10)),
    ]
}

/// Deterministic single apexes for the double-point-manifold parity.
pub fn beta_single_apexes<S: Scalar>() -> Vec<Point<S>> {
    beta_apex_pairs::<S>().into_iter().map(|(a, _)| a).collect()
}

fn not_positive_multiples<S: Scalar>(u: &Point<S>, w: &Point<S>) -> bool {
    // u = lambda w with lambda > 0 would make the two rays coincide.
    // Exact test: all 2x2 minors vanish and the aligned signs agree.
    let d = u.dim();
    for i in 0..d {
        for j in i + 1..d {
            let m = u.coords[i].clone() * w.coords[j].clone()
                - u.coords[j].clone() * w.coords[i].clone();
            if !m.is_zero() {
                return true;
            }
        }
    }
    // Parallel; positive multiple iff some matching coordinate pair has the
    // same strict sign.
    !(0..d).any(|i| {
        (u.coords[i].is_positive() && w.coords[i].is_positive())
            || (u.coords[i].is_negative() && w.coords[i].is_negative())
    })
}

/// The obstruction of a +/-/0 map of 2-spheres in 4-space as a ray-degree:
/// signed count of `(x, y, z)` with `f_+(x) - f_0(z)` on the positive
/// `u`-ray and `f_-(y) - f_0(z)` on the positive `w`-ray.
pub fn beta_hat_rays<S: Scalar>(
    scene: &Scene<S>,
    u: &Point<S>,
    w: &Point<S>,
) -> InvariantResult<InvariantReport<S>, S> {
    ensure_spheres_in_r4(scene)?;
    if u.is_zero() || w.is_zero() || !not_positive_multiples(u, w) {
        return Err(InvariantError::BadInput(
            "ray directions must be nonzero and not positive multiples of each other".into(),
        ));
    }
    validate_pm_ne_0(scene)?;
    let maps = scene.maps();
    let problem = CoincidenceProblem::new(
        vec![
            Factor::new(maps[0].clone()),
            Factor::new(maps[1].clone()),
            Factor::new(maps[2].clone()),
        ],
        vec![
            Constraint::RayDiff { i: 0, j: 2, direction: u.clone(), aux: 0 },
            Constraint::RayDiff { i: 1, j: 2, direction: w.clone(), aux: 1 },
        ],
        vec![AuxBound::positive(), AuxBound::positive()],
    );
    let result = match signed_count(&problem) {
        Ok(r) => r,
        Err(EngineError::Degenerate(rep)) => return Err(InvariantError::Degenerate(rep)),
        Err(e) => return Err(InvariantError::Engine(e)),
    };
    let mut report = InvariantReport::new("beta-hat", Value::Int(result.total))
        .with_witnesses(result.witnesses, result.tuples_examined);
    report.certificates.validations.push("pm-ne-0".into());
    report.certificates.directions.push(format!("{u:?}"));
    report.certificates.directions.push(format!("{w:?}"));
    Ok(report)
}

/// The same obstruction as a triple-point count between the cone tracks of
/// the + and - components and the 0 component.
pub fn beta_hat_homotopy<S: Scalar>(
    scene: &Scene<S>,
    apex_plus: &Point<S>,
    apex_minus: &Point<S>,
) -> InvariantResult<InvariantReport<S>, S> {
    ensure_spheres_in_r4(scene)?;
    validate_pm_ne_0(scene)?;
    let maps = scene.maps();
    let h_plus = cone_null_homotopy(maps[0], apex_plus)
        .map_err(|_| InvariantError::BadInput("apex lies on the + image".into()))?;
    let h_minus = cone_null_homotopy(maps[1], apex_minus)
        .map_err(|_| InvariantError::BadInput("apex lies on the - image".into()))?;
    let problem = CoincidenceProblem::new(
        vec![Factor::new(h_plus), Factor::new(h_minus), Factor::new(maps[2].clone())],
        vec![Constraint::Coincide { i: 0, j: 1 }, Constraint::Coincide { i: 1, j: 2 }],
        vec![],
    );
    let result = match signed_count(&problem) {
        Ok(r) => r,
        Err(EngineError::Degenerate(rep)) => return Err(InvariantError::Degenerate(rep)),
        Err(e) => return Err(InvariantError::Engine(e)),
    };
    let mut report =
        InvariantReport::new("beta-hat", Value::Int(BETA_HAT_HOM_SIGN * result.total))
            .with_witnesses(result.witnesses, result.tuples_examined);
    report.certificates.validations.push("pm-ne-0".into());
    report.certificates.directions.push(format!("{apex_plus:?}"));
    report.certificates.directions.push(format!("{apex_minus:?}"));
    Ok(report)
}

/// The parity invariant of a two-component link map of 2-spheres: a generic
/// null-homotopy track of the first component (a stellar-refined cone with
/// displaced interior) is intersected with itself and with the second
/// component, counting ordered double points; the value is half the ordered
/// witness count, mod 2.
pub fn beta_parity<S: Scalar>(
    scene: &Scene<S>,
    apex: &Point<S>,
) -> InvariantResult<InvariantReport<S>, S> {
    ensure_spheres_in_r4(scene)?;
    if scene.components.len() != 2 {
        return Err(InvariantError::BadInput("expected a two-component link map".into()));
    }
    validate_link_map(scene)?;
    let maps = scene.maps();
    let h = crate::constructions::generic_cone_track(maps[0], apex, 0x5eed)
        .map_err(|_| InvariantError::BadInput("apex lies on the first image".into()))?;
    if crate::constructions::point_on_image(maps[1], apex) {
        return Err(InvariantError::BadInput("apex lies on the second image".into()));
    }
    let problem = CoincidenceProblem::new(
        vec![Factor::new(h.clone()), Factor::new(h), Factor::new(maps[1].clone())],
        vec![Constraint::Coincide { i: 0, j: 1 }, Constraint::Coincide { i: 0, j: 2 }],
        vec![],
    )
    .with_exclusion(ExclusionRule::SharedFace { i: 0, j: 1 });
    let result = match signed_count(&problem) {
        Ok(r) => r,
        Err(EngineError::Degenerate(rep)) => return Err(InvariantError::Degenerate(rep)),
        Err(e) => return Err(InvariantError::Engine(e)),
    };
    let ordered = result.witnesses.len() as u64;
    if ordered % 2 != 0 {
        return Err(InvariantError::BadInput(format!(
            "ordered double-point count {ordered} is odd; configuration cannot be generic"
        )));
    }
    let parity = ((ordered / 2) % 2) as u8;
    let mut report = InvariantReport::new("beta", Value::Parity(parity))
        .with_witnesses(result.witnesses, result.tuples_examined);
    report.certificates.validations.push("link-map".into());
    report.certificates.directions.push(format!("{apex:?}"));
    Ok(report)
}

/// The Gauss-style parity: unsigned witness-count parity of the two-ray
/// system with the second component appearing as both ray targets.
pub fn beta_star<S: Scalar>(
    scene: &Scene<S>,
    u: &Point<S>,
    w: &Point<S>,
) -> InvariantResult<InvariantReport<S>, S> {
    ensure_spheres_in_r4(scene)?;
    if scene.components.len() != 2 {
        return Err(InvariantError::BadInput("expected a two-component link map".into()));
    }
    if u.is_zero() || w.is_zero() || !not_positive_multiples(u, w) {
        return Err(InvariantError::BadInput(
            "ray directions must be nonzero and not positive multiples of each other".into(),
        ));
    }
    validate_link_map(scene)?;
    let maps = scene.maps();
    let problem = CoincidenceProblem::new(
        vec![
            Factor::new(maps[0].clone()),
            Factor::new(maps[1].clone()),
            Factor::new(maps[1].clone()),
        ],
        vec![
            Constraint::RayDiff { i: 1, j: 0, direction: u.clone(), aux: 0 },
            Constraint::RayDiff { i: 2, j: 0, direction: w.clone(), aux: 1 },
        ],
        vec![AuxBound::positive(), AuxBound::positive()],
    );
    let result = match signed_count(&problem) {
        Ok(r) => r,
        Err(EngineError::Degenerate(rep)) => return Err(InvariantError::Degenerate(rep)),
        Err(e) => return Err(InvariantError::Engine(e)),
    };
    let parity = (result.witnesses.len() % 2) as u8;
    let mut report = InvariantReport::new("beta-star", Value::Parity(parity))
        .with_witnesses(result.witnesses, result.tuples_examined);
    report.certificates.validations.push("link-map".into());
    report.certificates.directions.push(format!("{u:?}"));
    report.certificates.directions.push(format!("{w:?}"));
    Ok(report)
}
