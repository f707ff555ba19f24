use thiserror::Error;

use crate::exactgeom::{PLMap, Point};
use crate::scalar::Scalar;

/// One factor of a coincidence problem: a PL map and its role position.
#[derive(Clone, Debug)]
pub struct Factor<S: Scalar> {
    pub map: PLMap<S>,
}

impl<S: Scalar> Factor<S> {
    pub fn new(map: PLMap<S>) -> Self {
        Factor { map }
    }
}

/// A block of `D` scalar equations relating two factors.
#[derive(Clone, Debug)]
pub enum Constraint<S: Scalar> {
    /// `g_i(x_i) - g_j(x_j) = 0`.
    Coincide { i: usize, j: usize },
    /// `g_i(x_i) - g_j(x_j) - alpha * direction = 0` with auxiliary scalar
    /// `alpha` referenced by index into the problem's aux list. Several ray
    /// constraints may share one auxiliary scalar.
    RayDiff { i: usize, j: usize, direction: Point<S>, aux: usize },
}

impl<S: Scalar> Constraint<S> {
    pub fn factors(&self) -> (usize, usize) {
        match self {
            Constraint::Coincide { i, j } | Constraint::RayDiff { i, j, .. } => (*i, *j),
        }
    }
}

/// Open interval bound for one auxiliary scalar; the closed hull is used for
/// feasibility checks, the open interval for witness interiority.
#[derive(Clone, Debug)]
pub struct AuxBound<S: Scalar> {
    pub lo: Option<S>,
    pub hi: Option<S>,
}

impl<S: Scalar> AuxBound<S> {
    pub fn positive() -> Self {
        AuxBound { lo: Some(S::zero()), hi: None }
    }
    pub fn unit_interval() -> Self {
        AuxBound { lo: Some(S::zero()), hi: Some(S::one()) }
    }
}

/// Optional rule skipping cell tuples of two factors that carry the same
/// underlying map, used by self-intersection problems.
#[derive(Clone, Debug)]
pub enum ExclusionRule {
    /// Skip tuples where factors `i` and `j` use the identical cell.
    IdenticalCells { i: usize, j: usize },
    /// Skip tuples where the cells of factors `i` and `j` are identical or
    /// share a codimension-one face. Self-coincidence problems on cones need
    /// this: face-sharing pairs carry only the diagonal of the shared face,
    /// never genuine double points, and the diagonal would otherwise be
    /// flagged as a boundary solution.
    SharedFace { i: usize, j: usize },
}

/// A square system of coincidence/ray constraints over a tuple of PL maps.
#[derive(Clone, Debug)]
pub struct CoincidenceProblem<S: Scalar> {
    pub factors: Vec<Factor<S>>,
    pub constraints: Vec<Constraint<S>>,
    pub aux: Vec<AuxBound<S>>,
    pub exclusion: Option<ExclusionRule>,
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum EngineError {
    #[error(
        "not a square system: domain dimensions {domain} + aux {aux} != equations {equations}"
    )]
    NotSquare { domain: usize, aux: usize, equations: usize },
    #[error("factor ambient dimensions disagree")]
    AmbientMismatch,
    #[error("ray constraint with zero direction")]
    ZeroDirection,
    #[error("constraint references factor {0} out of range")]
    BadFactor(usize),
    #[error("constraint references auxiliary {0} out of range")]
    BadAux(usize),
    #[error("degenerate tuple: {0}")]
    Degenerate(DegeneracyReport),
}

/// Exact description of a degeneracy met during counting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegeneracyReport {
    /// One cell index per factor.
    pub cells: Vec<usize>,
    pub kind: DegeneracyKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegeneracyKind {
    /// Singular system whose solution set meets the closed cells.
    SingularConsistent,
    /// Unique solution lying on the boundary of some cell.
    SolutionOnCellBoundary,
    /// Unique solution hitting the boundary of an auxiliary interval.
    SolutionOnAuxBoundary,
}

impl std::fmt::Display for DegeneracyReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?} at cell tuple {:?}", self.kind, self.cells)
    }
}

/// An isolated interior solution with its orientation sign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness<S: Scalar> {
    /// One cell index per factor.
    pub cells: Vec<usize>,
    /// Full barycentric coordinates per factor, each summing to one and
    /// strictly positive.
    pub barycentric: Vec<Vec<S>>,
    /// Exact auxiliary values, strictly inside their intervals.
    pub aux: Vec<S>,
    pub sign: i8,
}

/// The signed count over all admissible tuples, with witnesses sorted
/// canonically; independent of enumeration order and parallel schedule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedCountResult<S: Scalar> {
    pub total: i64,
    pub witnesses: Vec<Witness<S>>,
    pub tuples_examined: u64,
    /// True when no degeneracy was met (always true on the `Ok` path).
    pub generic: bool,
}

impl<S: Scalar> CoincidenceProblem<S> {
    pub fn new(
        factors: Vec<Factor<S>>,
        constraints: Vec<Constraint<S>>,
        aux: Vec<AuxBound<S>>,
    ) -> Self {
        CoincidenceProblem { factors, constraints, aux, exclusion: None }
    }

    pub fn with_exclusion(mut self, rule: ExclusionRule) -> Self {
        self.exclusion = Some(rule);
        self
    }

    pub fn ambient_dim(&self) -> usize {
        self.factors[0].map.ambient_dim
    }

    pub fn domain_dims(&self) -> usize {
        self.factors.iter().map(|f| f.map.domain.dim).sum()
    }

    pub fn equations(&self) -> usize {
        self.constraints.len() * self.ambient_dim()
    }

    /// Structural validity shared by counting and feasibility.
    pub fn validate_shape(&self) -> Result<(), EngineError> {
        let d = self.ambient_dim();
        for f in &self.factors {
            if f.map.ambient_dim != d {
                return Err(EngineError::AmbientMismatch);
            }
        }
        for c in &self.constraints {
            let (i, j) = c.factors();
            if i >= self.factors.len() || j >= self.factors.len() {
                return Err(EngineError::BadFactor(i.max(j)));
            }
            if let Constraint::RayDiff { direction, aux, .. } = c {
                if direction.is_zero() {
                    return Err(EngineError::ZeroDirection);
                }
                if *aux >= self.aux.len() {
                    return Err(EngineError::BadAux(*aux));
                }
            }
        }
        Ok(())
    }

    /// Square-system check required by signed counting.
    pub fn validate_square(&self) -> Result<(), EngineError> {
        self.validate_shape()?;
        let domain = self.domain_dims();
        let aux = self.aux.len();
        let equations = self.equations();
        if domain + aux != equations {
            return Err(EngineError::NotSquare { domain, aux, equations });
        }
        Ok(())
    }

    /// True when the tuple is suppressed by the exclusion rule.
    pub fn excluded(&self, cells: &[usize]) -> bool {
        match &self.exclusion {
            None => false,
            Some(ExclusionRule::IdenticalCells { i, j }) => cells[*i] == cells[*j],
            Some(ExclusionRule::SharedFace { i, j }) => {
                if cells[*i] == cells[*j] {
                    return true;
                }
                let a = &self.factors[*i].map.domain.cells[cells[*i]];
                let b = &self.factors[*j].map.domain.cells[cells[*j]];
                let mut shared = 0usize;
                for v in a {
                    if b.contains(v) {
                        shared += 1;
                    }
                }
                // A shared codimension-one face means all but one vertex in
                // common.
                shared + 1 >= a.len()
            }
        }
    }
}
