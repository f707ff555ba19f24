use super::basic::octahedron_sphere_r4;
use crate::coincidence::perturb;
use crate::exactgeom::{Complex, ComplexKind, PLMap, Point};
use crate::invariants::{validate_link_map, Component, Role, Scene};
use crate::scalar::{int, rat, Rat};

/// A triangulated 2-sphere shaped like an accordion over a hexagonal
/// profile: two poles and five hexagonal rings. Mapping ring `j` to the
/// `j`-th vertex of a hexagonal circle collapses the sphere onto the circle
/// with every triangle landing inside a single edge.
fn accordion_sphere() -> Complex {
    let ring = |j: usize, i: usize| 1 + 6 * (j - 1) + (i % 6);
    let mut cells: Vec<Vec<usize>> = Vec::with_capacity(60);
    // South fan, reversed for coherence with the bands.
    for i in 0..6 {
        cells.push(vec![0, ring(1, i + 1), ring(1, i)]);
    }
    for j in 1..5 {
        for i in 0..6 {
            cells.push(vec![ring(j, i), ring(j, i + 1), ring(j + 1, i + 1)]);
            cells.push(vec![ring(j, i), ring(j + 1, i + 1), ring(j + 1, i)]);
        }
    }
    for i in 0..6 {
        cells.push(vec![31, ring(5, i), ring(5, i + 1)]);
    }
    Complex::new(32, 2, cells, ComplexKind::ClosedPseudomanifold)
}

/// The hexagonal circle in the plane of the first and fourth coordinates,
/// crossing the hyperplane `w = 0` once inside and once outside the standard
/// octahedral sphere, so the circle links it.
fn hexagon_circle_points() -> Vec<Point<Rat>> {
    let mk = |x: Rat, w: Rat| Point::new(vec![x, int(0), int(0), w]);
    vec![
        mk(int(0), int(1)),
        mk(int(2), rat(1, 2)),
        mk(int(2), rat(-1, 2)),
        mk(int(0), int(-1)),
        mk(rat(1, 2), rat(-1, 2)),
        mk(rat(1, 2), rat(1, 2)),
    ]
}

/// A two-component link map of 2-spheres in 4-space whose first component
/// factors through a circle linking the second: the accordion sphere is
/// collapsed onto the hexagonal circle and then displaced by a tiny certified
/// perturbation so downstream counts are generic. The second component is the
/// standard octahedral sphere.
pub fn build_cor33_linkmap() -> Scene<Rat> {
    let hex = hexagon_circle_points();
    let domain = accordion_sphere();
    let mut images = Vec::with_capacity(32);
    images.push(hex[0].clone()); // south pole
    for j in 1..=5usize {
        for _ in 0..6 {
            images.push(hex[j % 6].clone());
        }
    }
    images.push(hex[0].clone()); // north pole wraps around
    let collapsed = PLMap::new(domain, 4, images);
    let zero = octahedron_sphere_r4(&Point::new(vec![int(0); 4]), &int(1));

    // Deterministic certified perturbation: first seed whose output is still
    // a link map wins.
    for seed in 0u64..32 {
        let star = perturb(&collapsed, &rat(1, 100), 1000 + seed);
        let scene = Scene::new(
            4,
            vec![
                Component { name: "star".into(), role: Role::LinkComponent, map: star },
                Component { name: "zero".into(), role: Role::LinkComponent, map: zero.clone() },
            ],
        );
        if validate_link_map(&scene).is_ok() {
            return scene;
        }
    }
    unreachable!("a 1/100 perturbation cannot bridge the gap to the octahedron");
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accordion_is_a_valid_closed_sphere() {
        let c = accordion_sphere();
        assert_eq!(c.validate(), Ok(()));
        assert!(c.boundary().is_empty());
        assert_eq!(c.cells.len(), 60);
    }

    #[test]
    fn collapsed_triangles_land_in_single_edges() {
        let hex = hexagon_circle_points();
        let domain = accordion_sphere();
        let mut images = Vec::with_capacity(32);
        images.push(hex[0].clone());
        for j in 1..=5usize {
            for _ in 0..6 {
                images.push(hex[j % 6].clone());
            }
        }
        images.push(hex[0].clone());
        // Each triangle's image points take at most two distinct values.
        for cell in &domain.cells {
            let mut pts: Vec<_> = cell.iter().map(|&v| images[v].clone()).collect();
            pts.sort();
            pts.dedup();
            assert!(pts.len() <= 2);
        }
    }

    #[test]
    fn cor33_validates() {
        let s = build_cor33_linkmap();
        assert!(validate_link_map(&s).is_ok());
        for c in &s.components {
            assert_eq!(c.map.domain.validate(), Ok(()));
        }
    }
}
