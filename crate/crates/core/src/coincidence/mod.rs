//! The generic signed-count engine.
//!
//! A [`CoincidenceProblem`] is a tuple of PL maps into a common ambient space
//! together with a square system of coincidence/ray constraints. For every
//! admissible cell tuple the engine assembles the affine system in chart
//! coordinates, solves it exactly, and records a signed witness when the
//! unique solution is strictly interior to every cell and every auxiliary
//! interval. The signed total is the computational meaning of "degree" for
//! every invariant in this crate.
//!
//! Solutions on cell boundaries, singular-but-consistent systems meeting the
//! closed cells, and auxiliary-boundary hits are hard errors, never silently
//! resolved: exact arithmetic makes them detectable, and the caller decides
//! whether to retry with different auxiliary data.

mod perturb;
mod problem;
mod solve;

pub use perturb::perturb;
pub use problem::{
    AuxBound, CoincidenceProblem, Constraint, DegeneracyKind, DegeneracyReport, EngineError,
    ExclusionRule, Factor, SignedCountResult, Witness,
};
pub use solve::{signed_count, verify_empty, EmptinessOutcome};
