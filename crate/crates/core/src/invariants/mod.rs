//! The invariants: pairwise linking, the planar triple-point invariant (two
//! algorithms), the triple invariant of link maps from spanning-system data,
//! its boundary-cube double-degree form, and the beta family for 2-spheres
//! in 4-space. All sign normalizations live here.

mod beta;
mod hex;
mod linking;
mod milnor;
mod mu_breve;
mod report;
mod scene;

pub use beta::{
    beta_apex_pairs, beta_direction_pairs, beta_hat_homotopy, beta_hat_rays, beta_parity,
    beta_single_apexes, beta_star,
};
pub use hex::{mu_star, mu_star_with_fallbacks, verify_hexagonal, HexFace, HexFamily};
pub use linking::{linking_number, lk_directions, with_fallbacks};
pub use milnor::milnor_mu;
pub use mu_breve::{
    doodle_mu_breve_degree, doodle_mu_breve_homotopy, mu_breve_degree_with_fallbacks,
    mu_breve_direction_sets, mu_breve_displacement_sets, mu_breve_homotopy_with_fallbacks,
    scale_displacements,
};
pub use report::{Certificates, InvariantReport, Value};
pub use scene::{
    ensure_curves, ensure_spheres_in_r4, validate_link_map, validate_ornament, validate_pm_ne_0,
    Component, InvariantError, InvariantResult, Role, Scene, Violation,
};
