use std::collections::BTreeMap;

use crate::coincidence::{
    signed_count, verify_empty, CoincidenceProblem, Constraint, EmptinessOutcome, EngineError,
    Factor,
};
use crate::exactgeom::PLMap;
use crate::invariants::report::{InvariantReport, Value};
use crate::invariants::scene::{InvariantError, InvariantResult, Violation};
use crate::scalar::Scalar;

/// Normalization of the triple-point count of spanning-system tracks, fixed
/// so that the invariant of a lifted planar arrangement matches its planar
/// value.
pub(crate) const MILNOR_SIGN: i64 = 1;

fn oriented_boundary_images<S: Scalar>(map: &PLMap<S>) -> BTreeMap<(Vec<S>, Vec<S>), usize> {
    let b = map.domain.boundary();
    let mut out: BTreeMap<(Vec<S>, Vec<S>), usize> = BTreeMap::new();
    for cell in &b.cells {
        let key = (map.images[cell[0]].coords.clone(), map.images[cell[1]].coords.clone());
        *out.entry(key).or_insert(0) += 1;
    }
    out
}

fn oriented_curve_images<S: Scalar>(map: &PLMap<S>) -> BTreeMap<(Vec<S>, Vec<S>), usize> {
    let mut out: BTreeMap<(Vec<S>, Vec<S>), usize> = BTreeMap::new();
    for cell in &map.domain.cells {
        let key = (map.images[cell[0]].coords.clone(), map.images[cell[1]].coords.clone());
        *out.entry(key).or_insert(0) += 1;
    }
    out
}

/// The triple invariant of a three-component link map from spanning-system
/// data: the algebraic number of triple points between the three spanning
/// tracks, valid when each track avoids the cyclically next curve.
///
/// `curves[i]` must be the oriented combinatorial boundary of `surfaces[i]`
/// (same images, same orientation), and the side condition
/// `surface_i` disjoint from `curve_{i+1 mod 3}` is certified exactly before
/// counting.
pub fn milnor_mu<S: Scalar>(
    curves: [&PLMap<S>; 3],
    surfaces: [&PLMap<S>; 3],
) -> InvariantResult<InvariantReport<S>, S> {
    for i in 0..3 {
        if curves[i].domain.dim != 1 || surfaces[i].domain.dim != 2 {
            return Err(InvariantError::BadInput(
                "spanning data must be curves bounded by surfaces".into(),
            ));
        }
        if oriented_boundary_images(surfaces[i]) != oriented_curve_images(curves[i]) {
            return Err(InvariantError::BadInput(format!(
                "boundary of surface {i} does not match curve {i} (oriented images)"
            )));
        }
    }
    // Pairwise disjointness of the curves (link map discipline).
    for i in 0..3 {
        for j in i + 1..3 {
            let p = CoincidenceProblem::new(
                vec![Factor::new(curves[i].clone()), Factor::new(curves[j].clone())],
                vec![Constraint::Coincide { i: 0, j: 1 }],
                vec![],
            );
            if let EmptinessOutcome::Violation { point, .. } =
                verify_empty(&p).map_err(InvariantError::Engine)?
            {
                return Err(InvariantError::Validation(Violation {
                    components: vec![i, j],
                    point,
                }));
            }
        }
    }
    // The cyclic side condition: track i avoids curve i+1.
    for i in 0..3 {
        let p = CoincidenceProblem::new(
            vec![
                Factor::new(surfaces[i].clone()),
                Factor::new(curves[(i + 1) % 3].clone()),
            ],
            vec![Constraint::Coincide { i: 0, j: 1 }],
            vec![],
        );
        if let EmptinessOutcome::Violation { point, .. } =
            verify_empty(&p).map_err(InvariantError::Engine)?
        {
            return Err(InvariantError::Validation(Violation {
                components: vec![i, (i + 1) % 3],
                point,
            }));
        }
    }
    let problem = CoincidenceProblem::new(
        vec![
            Factor::new(surfaces[0].clone()),
            Factor::new(surfaces[1].clone()),
            Factor::new(surfaces[2].clone()),
        ],
        vec![Constraint::Coincide { i: 0, j: 1 }, Constraint::Coincide { i: 1, j: 2 }],
        vec![],
    );
    let result = match signed_count(&problem) {
        Ok(r) => r,
        Err(EngineError::Degenerate(rep)) => return Err(InvariantError::Degenerate(rep)),
        Err(e) => return Err(InvariantError::Engine(e)),
    };
    let mut report = InvariantReport::new("mu", Value::Int(MILNOR_SIGN * result.total))
        .with_witnesses(result.witnesses, result.tuples_examined);
    report.certificates.validations.push("boundary-match".into());
    report.certificates.validations.push("link-map".into());
    report.certificates.validations.push("cyclic-side-condition".into());
    Ok(report)
}
