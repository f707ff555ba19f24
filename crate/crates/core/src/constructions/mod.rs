//! Builders for the canonical example scenes: the rectangle three-ring link
//! and its flat spanning disks, the planar three-loop arrangement, Hopf and
//! split links, overpass lifting, doubling, cone null-homotopies, translation
//! homotopies, the boundary-cube family of the three-ring link, and seeded
//! random scenes for property tests.

mod basic;
mod cor33;
mod hexfamily;
mod homotopy;
mod lift;
mod planar;
mod random;

pub use basic::{
    build_borromean_disks, build_borromean_disks_alt, build_borromean_disks_through_origin,
    build_borromean_doodle, build_borromean_rings, build_hopf_link, build_split,
    octahedron_sphere_r4, BuilderError,
};
pub use cor33::build_cor33_linkmap;
pub use hexfamily::{build_borromean_hexagonal_family, build_constant_hex_family};
pub use homotopy::{
    cone_null_homotopy, generic_cone_track, point_on_image, stellar_refine, stellar_refine_seeded,
    translation_homotopy, translation_prism,
};
pub use lift::{lift_doodle, lift_spanning_system};
pub use planar::{planar_crossings, Crossing, CrossingError};
pub use random::{double_link_map, random_scene, RandomKind};
