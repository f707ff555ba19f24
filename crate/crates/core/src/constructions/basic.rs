use crate::exactgeom::{shapes, Complex, ComplexKind, PLMap, Point};
use crate::invariants::{Component, Role, Scene};
use crate::scalar::{int, rat, Rat};
use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum BuilderError {
    #[error("bad builder parameters: {0}")]
    BadParams(String),
}

pub(crate) fn pt(coords: &[Rat]) -> Point<Rat> {
    Point::new(coords.to_vec())
}

pub(crate) fn pt3(x: Rat, y: Rat, z: Rat) -> Point<Rat> {
    Point::new(vec![x, y, z])
}

/// A Hopf link: two oriented triangles in 3-space, one threading the other.
/// The first lies in the plane `z = 0` around the origin; the second crosses
/// that plane once inside the first triangle and once outside.
pub fn build_hopf_link() -> Scene<Rat> {
    let tri = Complex::new(3, 1, vec![vec![0, 1], vec![1, 2], vec![2, 0]], ComplexKind::ClosedPseudomanifold);
    let a = PLMap::new(
        tri.clone(),
        3,
        vec![
            pt3(int(2), int(0), int(0)),
            pt3(int(-1), int(2), int(0)),
            pt3(int(-1), int(-2), int(0)),
        ],
    );
    let b = PLMap::new(
        tri,
        3,
        vec![
            pt3(int(0), int(0), int(1)),
            pt3(int(2), int(1), int(-1)),
            pt3(int(6), int(-1), int(1)),
        ],
    );
    Scene::new(
        3,
        vec![
            Component { name: "a".into(), role: Role::LinkComponent, map: a },
            Component { name: "b".into(), role: Role::LinkComponent, map: b },
        ],
    )
}

/// `n` components in pairwise disjoint slabs: curves for ambient dimension 2
/// or 3, octahedral spheres for ambient dimension 4.
pub fn build_split(n: usize, ambient_dim: usize) -> Result<Scene<Rat>, BuilderError> {
    if n == 0 {
        return Err(BuilderError::BadParams("need at least one component".into()));
    }
    let mut components = Vec::with_capacity(n);
    for k in 0..n {
        let off = int(10 * k as i64);
        let map = match ambient_dim {
            2 => PLMap::new(
                shapes::cycle(4),
                2,
                vec![
                    pt(&[off.clone() + int(1), int(0)]),
                    pt(&[off.clone(), int(1)]),
                    pt(&[off.clone() - int(1), int(0)]),
                    pt(&[off.clone(), int(-1)]),
                ],
            ),
            3 => PLMap::new(
                shapes::cycle(4),
                3,
                vec![
                    pt3(off.clone() + int(1), int(0), int(0)),
                    pt3(off.clone(), int(1), int(0)),
                    pt3(off.clone() - int(1), int(0), int(0)),
                    pt3(off.clone(), int(-1), int(0)),
                ],
            ),
            4 => octahedron_sphere_r4(&pt(&[off, int(0), int(0), int(0)]), &int(1)),
            d => {
                return Err(BuilderError::BadParams(format!(
                    "unsupported ambient dimension {d}"
                )))
            }
        };
        let role = if ambient_dim == 2 { Role::OrnamentComponent } else { Role::LinkComponent };
        components.push(Component { name: format!("c{}", k + 1), role, map });
    }
    Ok(Scene::new(ambient_dim, components))
}

/// The standard octahedral 2-sphere of the given radius centered at a point
/// of 4-space (lying in the hyperplane spanned by the first three axes
/// through that center).
pub fn octahedron_sphere_r4(center: &Point<Rat>, radius: &Rat) -> PLMap<Rat> {
    let c = &center.coords;
    let mut images = Vec::with_capacity(6);
    for (axis, sign) in [(0usize, 1i64), (0, -1), (1, 1), (1, -1), (2, 1), (2, -1)] {
        let mut v = c.clone();
        v[axis] = v[axis].clone() + radius.clone() * int(sign);
        images.push(Point::new(v));
    }
    PLMap::new(shapes::octahedron(), 4, images)
}

/// Three oriented quadrilaterals in the coordinate planes: component `m`
/// spans `+-a` along axis `m` and `+-b` along axis `m+1` (cyclically). For
/// `a > b > 0` this is the rectangle form of the Borromean rings.
pub fn build_borromean_rings(a: &Rat, b: &Rat) -> Result<Scene<Rat>, BuilderError> {
    if !(a > b && b > &int(0)) {
        return Err(BuilderError::BadParams("need a > b > 0".into()));
    }
    let mut components = Vec::with_capacity(3);
    for m in 0..3usize {
        components.push(Component {
            name: format!("ring{}", m + 1),
            role: Role::LinkComponent,
            map: borromean_component(m, a, b),
        });
    }
    Ok(Scene::new(3, components))
}

/// One ring: vertices `+a e_m, +b e_{m+1}, -a e_m, -b e_{m+1}`.
pub(crate) fn borromean_component(m: usize, a: &Rat, b: &Rat) -> PLMap<Rat> {
    let axis_a = m % 3;
    let axis_b = (m + 1) % 3;
    let mk = |axis: usize, val: Rat| {
        let mut v = vec![int(0); 3];
        v[axis] = val;
        Point::new(v)
    };
    PLMap::new(
        shapes::cycle(4),
        3,
        vec![
            mk(axis_a, a.clone()),
            mk(axis_b, b.clone()),
            mk(axis_a, -a.clone()),
            mk(axis_b, -b.clone()),
        ],
    )
}

/// The three flat disks spanning the Borromean rings: each quadrilateral is
/// filled by a fan of four triangles from an off-axis interior vertex, so
/// that the unique triple point of the three disk images (the origin) lies in
/// open 2-cells of all three. Boundary matches `build_borromean_rings`.
pub fn build_borromean_disks(a: &Rat, b: &Rat) -> Result<Vec<PLMap<Rat>>, BuilderError> {
    build_borromean_disks_fanned(a, b, &rat(1, 5), &rat(1, 5))
}

/// An independently triangulated second spanning system: fans from the
/// antipodal interior points. Same images, different complexes and witnesses.
pub fn build_borromean_disks_alt(a: &Rat, b: &Rat) -> Result<Vec<PLMap<Rat>>, BuilderError> {
    build_borromean_disks_fanned(a, b, &rat(-1, 7), &rat(-2, 9))
}

fn build_borromean_disks_fanned(
    a: &Rat,
    b: &Rat,
    fa: &Rat,
    fb: &Rat,
) -> Result<Vec<PLMap<Rat>>, BuilderError> {
    if !(a > b && b > &int(0)) {
        return Err(BuilderError::BadParams("need a > b > 0".into()));
    }
    // Fan center (fa*a, fb*b) in the ring's plane; off both axes so the
    // origin stays strictly interior to one fan triangle.
    if fa.clone() * fa.clone() == int(0) || fb.clone() * fb.clone() == int(0) {
        return Err(BuilderError::BadParams("fan point must be off the axes".into()));
    }
    let fan = Complex::new(
        5,
        2,
        vec![vec![4, 0, 1], vec![4, 1, 2], vec![4, 2, 3], vec![4, 3, 0]],
        ComplexKind::PseudomanifoldWithBoundary,
    );
    let mut disks = Vec::with_capacity(3);
    for m in 0..3usize {
        let ring = borromean_component(m, a, b);
        let axis_a = m % 3;
        let axis_b = (m + 1) % 3;
        let mut center = vec![int(0); 3];
        center[axis_a] = fa.clone() * a.clone();
        center[axis_b] = fb.clone() * b.clone();
        let mut images = ring.images.clone();
        images.push(Point::new(center));
        disks.push(PLMap::new(fan.clone(), 3, images));
    }
    Ok(disks)
}

/// A degenerate spanning system used by the degeneracy-detection tests: fans
/// through the origin put the unique triple point on internal fan edges.
pub fn build_borromean_disks_through_origin(
    a: &Rat,
    b: &Rat,
) -> Result<Vec<PLMap<Rat>>, BuilderError> {
    if !(a > b && b > &int(0)) {
        return Err(BuilderError::BadParams("need a > b > 0".into()));
    }
    let fan = Complex::new(
        5,
        2,
        vec![vec![4, 0, 1], vec![4, 1, 2], vec![4, 2, 3], vec![4, 3, 0]],
        ComplexKind::PseudomanifoldWithBoundary,
    );
    let mut disks = Vec::with_capacity(3);
    for m in 0..3usize {
        let ring = borromean_component(m, a, b);
        let mut images = ring.images.clone();
        images.push(Point::new(vec![int(0); 3]));
        disks.push(PLMap::new(fan.clone(), 3, images));
    }
    Ok(disks)
}

/// The planar three-loop arrangement with every pair of loops crossing in
/// exactly two points and no point on all three. Hexagonal loops centered at
/// the corners of a rational triangle.
pub fn build_borromean_doodle() -> Scene<Rat> {
    // Hexagon template scaled by 3/2, centers spaced 4 apart.
    let hex = |cx: Rat, cy: Rat| -> PLMap<Rat> {
        let s = rat(3, 2);
        let shape: [(i64, i64); 6] = [(2, 0), (1, 2), (-1, 2), (-2, 0), (-1, -2), (1, -2)];
        let images = shape
            .iter()
            .map(|(x, y)| {
                pt(&[cx.clone() + s.clone() * int(*x), cy.clone() + s.clone() * int(*y)])
            })
            .collect();
        PLMap::new(shapes::cycle(6), 2, images)
    };
    let loops = [
        hex(int(0), int(0)),
        hex(int(4), int(0)),
        hex(int(2), rat(7, 2)),
    ];
    Scene::new(
        2,
        loops
            .into_iter()
            .enumerate()
            .map(|(i, map)| Component {
                name: format!("loop{}", i + 1),
                role: Role::OrnamentComponent,
                map,
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{validate_link_map, validate_ornament};

    #[test]
    fn hopf_is_a_link_map() {
        let s = build_hopf_link();
        for c in &s.components {
            assert_eq!(c.map.domain.validate(), Ok(()));
        }
        assert!(validate_link_map(&s).is_ok());
    }

    #[test]
    fn split_scenes_validate() {
        for d in [2usize, 3, 4] {
            let s = build_split(3, d).unwrap();
            assert!(validate_link_map(&s).is_ok());
            for c in &s.components {
                assert_eq!(c.map.domain.validate(), Ok(()));
            }
        }
    }

    #[test]
    fn borromean_rings_validate() {
        let s = build_borromean_rings(&int(2), &int(1)).unwrap();
        assert!(validate_link_map(&s).is_ok());
        for c in &s.components {
            assert_eq!(c.map.domain.validate(), Ok(()));
        }
    }

    #[test]
    fn borromean_disks_boundaries_match_rings() {
        let a = int(2);
        let b = int(1);
        let rings = build_borromean_rings(&a, &b).unwrap();
        for (disk, ring) in build_borromean_disks(&a, &b).unwrap().iter().zip(&rings.components) {
            assert_eq!(disk.domain.validate(), Ok(()));
            let boundary = disk.domain.boundary();
            assert!(boundary.same_oriented_cells(&ring.map.domain));
            // Boundary vertices carry the ring images.
            for (i, img) in ring.map.images.iter().enumerate() {
                assert_eq!(&disk.images[i], img);
            }
        }
    }

    #[test]
    fn doodle_is_an_ornament_with_two_crossings_per_pair() {
        let s = build_borromean_doodle();
        assert!(validate_ornament(&s).is_ok());
        // Count pairwise transversal crossings exactly.
        for i in 0..3 {
            for j in i + 1..3 {
                let c = crate::constructions::planar_crossings(&s.components[i].map, &s.components[j].map)
                    .expect("generic crossings");
                assert_eq!(c.len(), 2, "pair ({i},{j})");
            }
        }
    }
}
