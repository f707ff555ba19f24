//! Exact rational points, oriented simplicial complexes, piecewise-affine
//! maps, and the combinatorial constructions (products, cones, boundaries,
//! subdivisions) every other module consumes.
//!
//! Complexes are stored purely combinatorially; geometry lives only in the
//! vertex images of a [`PLMap`]. All types are immutable values after
//! construction and all operations are pure.

mod complex;
mod plmap;
mod point;

pub use complex::{
    canonical_cell, product_triangulation, shapes, Complex, ComplexError, ComplexKind,
};
pub use plmap::{barycentric_subdivide, cone, PLMap, PLMapError};
pub use point::{affine_combination, Point};
