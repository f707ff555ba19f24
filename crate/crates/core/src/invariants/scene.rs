use thiserror::Error;

use crate::coincidence::{
    verify_empty, CoincidenceProblem, Constraint, DegeneracyReport, EmptinessOutcome, EngineError,
    Factor,
};
use crate::exactgeom::{PLMap, Point};
use crate::scalar::Scalar;

/// What a component is for; operations check role/dimension discipline.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Role {
    LinkComponent,
    OrnamentComponent,
    SpanningSurface,
    NullHomotopy,
    FamilyFace,
}

impl Role {
    pub fn as_str(&self) -> &'static str {
        match self {
            Role::LinkComponent => "link-component",
            Role::OrnamentComponent => "ornament-component",
            Role::SpanningSurface => "spanning-surface",
            Role::NullHomotopy => "null-homotopy",
            Role::FamilyFace => "family-face",
        }
    }

    pub fn parse(s: &str) -> Option<Role> {
        Some(match s {
            "link-component" => Role::LinkComponent,
            "ornament-component" => Role::OrnamentComponent,
            "spanning-surface" => Role::SpanningSurface,
            "null-homotopy" => Role::NullHomotopy,
            "family-face" => Role::FamilyFace,
            _ => return None,
        })
    }
}

#[derive(Clone, Debug)]
pub struct Component<S: Scalar> {
    pub name: String,
    pub role: Role,
    pub map: PLMap<S>,
}

/// Named, role-tagged components sharing one ambient dimension.
#[derive(Clone, Debug)]
pub struct Scene<S: Scalar> {
    pub ambient_dim: usize,
    pub components: Vec<Component<S>>,
}

impl<S: Scalar> Scene<S> {
    pub fn new(ambient_dim: usize, components: Vec<Component<S>>) -> Self {
        Scene { ambient_dim, components }
    }

    pub fn component(&self, idx: usize) -> &PLMap<S> {
        &self.components[idx].map
    }

    pub fn maps(&self) -> Vec<&PLMap<S>> {
        self.components.iter().map(|c| &c.map).collect()
    }
}

/// A failed disjointness validation: the components meeting at a common
/// point, with exact coordinates.
#[derive(Clone, Debug)]
pub struct Violation<S: Scalar> {
    pub components: Vec<usize>,
    pub point: Point<S>,
}

#[derive(Clone, Debug, Error)]
pub enum InvariantError<S: Scalar> {
    #[error("validation violation: components {:?} meet at {:?}", .0.components, .0.point)]
    Validation(Violation<S>),
    #[error("hexagonality violation on {place}: components {pair:?} meet at {:?}", violation.point)]
    HexViolation { place: String, pair: (usize, usize), violation: Violation<S> },
    #[error("degenerate configuration: {0}; retry with different auxiliary data")]
    Degenerate(DegeneracyReport),
    #[error("engine error: {0}")]
    Engine(#[from] EngineError),
    #[error("bad input: {0}")]
    BadInput(String),
}

pub type InvariantResult<T, S> = Result<T, InvariantError<S>>;

fn ensure<S: Scalar>(cond: bool, msg: &str) -> InvariantResult<(), S> {
    if cond {
        Ok(())
    } else {
        Err(InvariantError::BadInput(msg.to_string()))
    }
}

fn pair_disjoint<S: Scalar>(
    a: &PLMap<S>,
    b: &PLMap<S>,
) -> Result<Option<Point<S>>, EngineError> {
    let p = CoincidenceProblem::new(
        vec![Factor::new(a.clone()), Factor::new(b.clone())],
        vec![Constraint::Coincide { i: 0, j: 1 }],
        vec![],
    );
    Ok(match verify_empty(&p)? {
        EmptinessOutcome::Certificate { .. } => None,
        EmptinessOutcome::Violation { point, .. } => Some(point),
    })
}

/// A link map has pairwise disjoint component images (self-intersections
/// allowed). Checks every pair over closed cells, exactly.
pub fn validate_link_map<S: Scalar>(scene: &Scene<S>) -> InvariantResult<(), S> {
    let maps = scene.maps();
    for i in 0..maps.len() {
        for j in i + 1..maps.len() {
            if let Some(point) = pair_disjoint(maps[i], maps[j])? {
                return Err(InvariantError::Validation(Violation {
                    components: vec![i, j],
                    point,
                }));
            }
        }
    }
    Ok(())
}

/// An ornament has no point common to all three components; pairwise
/// intersections are allowed.
pub fn validate_ornament<S: Scalar>(scene: &Scene<S>) -> InvariantResult<(), S> {
    ensure::<S>(scene.components.len() == 3, "an ornament has exactly 3 components")?;
    let maps = scene.maps();
    let p = CoincidenceProblem::new(
        vec![
            Factor::new(maps[0].clone()),
            Factor::new(maps[1].clone()),
            Factor::new(maps[2].clone()),
        ],
        vec![Constraint::Coincide { i: 0, j: 1 }, Constraint::Coincide { i: 1, j: 2 }],
        vec![],
    );
    match verify_empty(&p)? {
        EmptinessOutcome::Certificate { .. } => Ok(()),
        EmptinessOutcome::Violation { point, .. } => Err(InvariantError::Validation(Violation {
            components: vec![0, 1, 2],
            point,
        })),
    }
}

/// A +/-/0 map: component 0 (index 2) is disjoint from components + and -
/// (indices 0 and 1); + and - may intersect.
pub fn validate_pm_ne_0<S: Scalar>(scene: &Scene<S>) -> InvariantResult<(), S> {
    ensure::<S>(scene.components.len() == 3, "a +/-!=0 map has exactly 3 components")?;
    let maps = scene.maps();
    for (idx, m) in [(0usize, maps[0]), (1, maps[1])] {
        if let Some(point) = pair_disjoint(m, maps[2])? {
            return Err(InvariantError::Validation(Violation {
                components: vec![idx, 2],
                point,
            }));
        }
    }
    Ok(())
}

/// Role/dimension discipline for the supported computation dimensions:
/// curves (`d = 1`) for the planar and spatial operations, spheres (`d = 2`)
/// in ambient dimension 4 for the beta family.
pub fn ensure_curves<S: Scalar>(scene: &Scene<S>, ambient: usize) -> InvariantResult<(), S> {
    ensure::<S>(
        scene.ambient_dim == ambient,
        &format!("operation requires ambient dimension {ambient}"),
    )?;
    for c in &scene.components {
        ensure::<S>(c.map.domain.dim == 1, "operation requires curve components")?;
        ensure::<S>(c.map.ambient_dim == ambient, "component ambient dimension mismatch")?;
    }
    Ok(())
}

pub fn ensure_spheres_in_r4<S: Scalar>(scene: &Scene<S>) -> InvariantResult<(), S> {
    ensure::<S>(scene.ambient_dim == 4, "operation requires ambient dimension 4")?;
    for c in &scene.components {
        ensure::<S>(c.map.domain.dim == 2, "operation requires surface components")?;
        ensure::<S>(c.map.ambient_dim == 4, "component ambient dimension mismatch")?;
    }
    Ok(())
}
