use crate::exactgeom::{cone, product_triangulation, shapes, PLMap, PLMapError, Point};
use crate::linalg::feasible_point;
use crate::scalar::Scalar;

/// Prism map of the straight-line translation homotopy: on the staircase
/// triangulation of `domain x I`, the vertex `(v, t)` maps to
/// `(f(v) + t * displacement, t)` with the homotopy time appended as an
/// extra image coordinate.
pub fn translation_prism<S: Scalar>(map: &PLMap<S>, displacement: &Point<S>) -> PLMap<S> {
    let seg = shapes::segment();
    let domain = product_triangulation(&map.domain, &seg);
    let mut images = Vec::with_capacity(domain.vertex_count);
    for v in 0..map.domain.vertex_count {
        for t in 0..2usize {
            let time = S::from_int(t as i64);
            let base = if t == 0 {
                map.images[v].clone()
            } else {
                map.images[v].add(displacement)
            };
            images.push(base.extended(&[time]));
        }
    }
    PLMap::new(domain, map.ambient_dim + 1, images)
}

/// Per-component prism maps for a family of displacements.
pub fn translation_homotopy<S: Scalar>(
    maps: &[&PLMap<S>],
    displacements: &[Point<S>],
) -> Vec<PLMap<S>> {
    maps.iter()
        .zip(displacements)
        .map(|(m, d)| translation_prism(m, d))
        .collect()
}

/// Exact test whether a point lies on the image of a PL map.
pub fn point_on_image<S: Scalar>(map: &PLMap<S>, point: &Point<S>) -> bool {
    let d = map.ambient_dim;
    for cell in &map.domain.cells {
        // Sum_k lambda_k img_k = point, lambda >= 0, sum lambda = 1.
        let n = cell.len();
        let mut a = vec![vec![S::zero(); n]; d + 1];
        let mut b = Vec::with_capacity(d + 1);
        for coord in 0..d {
            for (k, &v) in cell.iter().enumerate() {
                a[coord][k] = map.images[v].coords[coord].clone();
            }
            b.push(point.coords[coord].clone());
        }
        for k in 0..n {
            a[d][k] = S::one();
        }
        b.push(S::one());
        let bounds = vec![(Some(S::zero()), None); n];
        if feasible_point(&a, &b, &bounds).is_some() {
            return true;
        }
    }
    false
}

/// The straight-line cone null-homotopy of a closed component; the apex must
/// avoid the image.
pub fn cone_null_homotopy<S: Scalar>(
    map: &PLMap<S>,
    apex: &Point<S>,
) -> Result<PLMap<S>, PLMapError> {
    if point_on_image(map, apex) {
        return Err(PLMapError::ApexOnImage);
    }
    cone(map, apex)
}

/// A generic track of a cone null-homotopy: the cone is stellar-refined with
/// one seeded interior point per cell. The new point is a random strictly
/// positive convex combination of the cell's vertices, so the four children
/// of every cell tile it exactly and never fold over each other, while the
/// boundary restriction stays exactly the base map. The plain cone of a
/// nearly degenerate sphere is too special for double-point counting; this
/// realizes a generic null-homotopy with the same boundary.
pub fn generic_cone_track<S: Scalar>(
    map: &PLMap<S>,
    apex: &Point<S>,
    seed: u64,
) -> Result<PLMap<S>, PLMapError> {
    let plain = cone_null_homotopy(map, apex)?;
    Ok(stellar_refine_seeded(&plain, seed))
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Stellar subdivision with seeded interior points: each top cell is
/// replaced by the cone from a strictly interior point (a seeded convex
/// combination of its vertices) over its boundary. Seed zero reproduces the
/// plain barycentric choice.
pub fn stellar_refine_seeded<S: Scalar>(map: &PLMap<S>, seed: u64) -> PLMap<S> {
    use crate::exactgeom::affine_combination;
    let c = &map.domain;
    let mut state = seed ^ 0x1b87_3f25_9e00_4d31;
    let mut images = map.images.clone();
    let mut cells = Vec::with_capacity(c.cells.len() * (c.dim + 1));
    for cell in &c.cells {
        let weights: Vec<S> = if seed == 0 {
            let n = S::from_int(cell.len() as i64);
            vec![S::one() / n; cell.len()]
        } else {
            let raw: Vec<i64> =
                cell.iter().map(|_| 24 + (splitmix64(&mut state) % 17) as i64).collect();
            let total: i64 = raw.iter().sum();
            raw.into_iter().map(|r| S::from_ratio(r, total)).collect()
        };
        let pts: Vec<&Point<S>> = cell.iter().map(|&v| &map.images[v]).collect();
        let b = images.len();
        images.push(affine_combination(&pts, &weights));
        for i in 0..cell.len() {
            let mut t = cell.clone();
            t[i] = b;
            cells.push(t);
        }
    }
    let domain = crate::exactgeom::Complex::new(images.len(), c.dim, cells, c.kind);
    PLMap::new(domain, map.ambient_dim, images)
}

/// Stellar subdivision at the plain barycenters.
pub fn stellar_refine<S: Scalar>(map: &PLMap<S>) -> PLMap<S> {
    stellar_refine_seeded(map, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, Rat};

    #[test]
    fn prism_restricts_to_input_and_translate() {
        let m = PLMap::new(
            shapes::cycle(3),
            2,
            vec![
                Point::new(vec![int(0), int(0)]),
                Point::new(vec![int(1), int(0)]),
                Point::new(vec![int(0), int(1)]),
            ],
        );
        let d = Point::new(vec![int(5), int(0)]);
        let p = translation_prism(&m, &d);
        assert_eq!(p.domain.cells.len(), 6); // 3 edges x C(2,1)
        assert_eq!(p.domain.validate(), Ok(()));
        // Vertex (v, 0) carries (f(v), 0); vertex (v, 1) carries (f(v)+d, 1).
        for v in 0..3 {
            assert_eq!(p.images[2 * v].coords[..2], m.images[v].coords[..]);
            assert_eq!(p.images[2 * v].coords[2], int(0));
            assert_eq!(p.images[2 * v + 1].coords[0], m.images[v].coords[0].clone() + int(5));
            assert_eq!(p.images[2 * v + 1].coords[2], int(1));
        }
    }

    #[test]
    fn apex_on_image_rejected() {
        let m: PLMap<Rat> = PLMap::new(
            shapes::cycle(3),
            2,
            vec![
                Point::new(vec![int(0), int(0)]),
                Point::new(vec![int(2), int(0)]),
                Point::new(vec![int(0), int(2)]),
            ],
        );
        assert!(cone_null_homotopy(&m, &Point::new(vec![int(1), int(0)])).is_err());
        assert!(cone_null_homotopy(&m, &Point::new(vec![int(5), int(5)])).is_ok());
    }
}
