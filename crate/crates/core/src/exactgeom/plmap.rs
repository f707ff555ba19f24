use std::collections::HashMap;

use thiserror::Error;

use super::complex::{Complex, ComplexKind};
use super::point::{affine_combination, Point};
use crate::scalar::Scalar;

/// A piecewise-affine map: a combinatorial domain plus one image point per
/// vertex. Evaluation at `(cell, barycentric coordinates)` is the affine
/// combination of the vertex images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PLMap<S: Scalar> {
    pub domain: Complex,
    pub ambient_dim: usize,
    pub images: Vec<Point<S>>,
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum PLMapError {
    #[error("barycentric coordinates must be nonnegative and sum to one")]
    BadBarycentric,
    #[error("map has {images} images for {vertices} vertices")]
    ImageCountMismatch { images: usize, vertices: usize },
    #[error("image {index} has dimension {got}, expected {expected}")]
    ImageDimMismatch { index: usize, got: usize, expected: usize },
    #[error("cone apex lies on the image of the base map")]
    ApexOnImage,
}

impl<S: Scalar> PLMap<S> {
    pub fn new(domain: Complex, ambient_dim: usize, images: Vec<Point<S>>) -> Self {
        PLMap { domain, ambient_dim, images }
    }

    pub fn validate(&self) -> Result<(), PLMapError> {
        if self.images.len() != self.domain.vertex_count {
            return Err(PLMapError::ImageCountMismatch {
                images: self.images.len(),
                vertices: self.domain.vertex_count,
            });
        }
        for (i, p) in self.images.iter().enumerate() {
            if p.dim() != self.ambient_dim {
                return Err(PLMapError::ImageDimMismatch {
                    index: i,
                    got: p.dim(),
                    expected: self.ambient_dim,
                });
            }
        }
        Ok(())
    }

    /// Exact evaluation at a cell and barycentric coordinates.
    pub fn evaluate(&self, cell: usize, bary: &[S]) -> Result<Point<S>, PLMapError> {
        let tuple = &self.domain.cells[cell];
        if bary.len() != tuple.len()
            || bary.iter().any(|b| b.is_negative())
            || bary.iter().fold(S::zero(), |acc, b| acc + b.clone()) != S::one()
        {
            return Err(PLMapError::BadBarycentric);
        }
        let points: Vec<&Point<S>> = tuple.iter().map(|&v| &self.images[v]).collect();
        Ok(affine_combination(&points, bary))
    }

    /// Componentwise bounding box of one cell's image.
    pub fn cell_bbox(&self, cell: usize) -> Vec<(S, S)> {
        let tuple = &self.domain.cells[cell];
        let first = &self.images[tuple[0]];
        let mut bbox: Vec<(S, S)> =
            first.coords.iter().map(|c| (c.clone(), c.clone())).collect();
        for &v in &tuple[1..] {
            for (k, c) in self.images[v].coords.iter().enumerate() {
                if *c < bbox[k].0 {
                    bbox[k].0 = c.clone();
                }
                if *c > bbox[k].1 {
                    bbox[k].1 = c.clone();
                }
            }
        }
        bbox
    }

    /// Bounding box of the whole image.
    pub fn bbox(&self) -> Vec<(S, S)> {
        let mut bbox: Vec<(S, S)> = self.images[0]
            .coords
            .iter()
            .map(|c| (c.clone(), c.clone()))
            .collect();
        for p in &self.images[1..] {
            for (k, c) in p.coords.iter().enumerate() {
                if *c < bbox[k].0 {
                    bbox[k].0 = c.clone();
                }
                if *c > bbox[k].1 {
                    bbox[k].1 = c.clone();
                }
            }
        }
        bbox
    }

    /// Translate every vertex image by `offset`.
    pub fn translated(&self, offset: &Point<S>) -> Self {
        PLMap::new(
            self.domain.clone(),
            self.ambient_dim,
            self.images.iter().map(|p| p.add(offset)).collect(),
        )
    }

    /// The same map with the domain orientation of every cell negated.
    pub fn orientation_reversed(&self) -> Self {
        PLMap::new(self.domain.orientation_reversed(), self.ambient_dim, self.images.clone())
    }

    /// The same map with every cell tuple cyclically shifted, which preserves
    /// the orientation in even dimensions and negates it in odd ones.
    pub fn cells_cycled(&self) -> Self {
        let mut domain = self.domain.clone();
        for cell in &mut domain.cells {
            cell.rotate_left(1);
        }
        PLMap::new(domain, self.ambient_dim, self.images.clone())
    }
}

/// The straight-line cone: a new apex vertex joined to every cell of a closed
/// base. The cone cell `[apex, v0..vd]` induces the base cell `[v0..vd]` with
/// positive sign, so the boundary of the cone is the base.
pub fn cone<S: Scalar>(base: &PLMap<S>, apex: &Point<S>) -> Result<PLMap<S>, PLMapError> {
    let c = &base.domain;
    let apex_idx = c.vertex_count;
    let cells = c
        .cells
        .iter()
        .map(|cell| {
            let mut t = Vec::with_capacity(cell.len() + 1);
            t.push(apex_idx);
            t.extend_from_slice(cell);
            t
        })
        .collect();
    let domain = Complex::new(
        c.vertex_count + 1,
        c.dim + 1,
        cells,
        ComplexKind::PseudomanifoldWithBoundary,
    );
    let mut images = base.images.clone();
    images.push(apex.clone());
    Ok(PLMap::new(domain, base.ambient_dim, images))
}

/// Barycentric subdivision: the domain is replaced by its flag complex, new
/// vertices map to the affine images of the cell barycenters, and the
/// underlying set map is unchanged.
pub fn barycentric_subdivide<S: Scalar>(map: &PLMap<S>) -> PLMap<S> {
    let c = &map.domain;
    let mut vertex_of_subset: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut images: Vec<Point<S>> = Vec::new();

    // Keep the original vertices first so restriction arguments stay simple.
    for v in 0..c.vertex_count {
        vertex_of_subset.insert(vec![v], v);
        images.push(map.images[v].clone());
    }

    let mut intern = |subset: &mut Vec<usize>, images: &mut Vec<Point<S>>| -> usize {
        subset.sort_unstable();
        if let Some(&idx) = vertex_of_subset.get(subset) {
            return idx;
        }
        let n = S::from_int(subset.len() as i64);
        let weights = vec![S::one() / n; subset.len()];
        let pts: Vec<&Point<S>> = subset.iter().map(|&v| &map.images[v]).collect();
        let img = affine_combination(&pts, &weights);
        let idx = images.len();
        images.push(img);
        vertex_of_subset.insert(subset.clone(), idx);
        idx
    };

    let d = c.dim;
    let mut cells = Vec::new();
    let mut perm: Vec<usize> = (0..=d).collect();
    loop {
        // Parity of `perm`.
        let even = super::complex::sort_parity(&perm);
        for cell in &c.cells {
            let mut tuple = Vec::with_capacity(d + 1);
            let mut prefix: Vec<usize> = Vec::with_capacity(d + 1);
            for &k in &perm {
                prefix.push(cell[k]);
                let mut subset = prefix.clone();
                tuple.push(intern(&mut subset, &mut images));
            }
            if !even && tuple.len() >= 2 {
                tuple.swap(0, 1);
            }
            cells.push(tuple);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    let domain = Complex::new(images.len(), d, cells, c.kind);
    PLMap::new(domain, map.ambient_dim, images)
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::super::complex::shapes;
    use super::*;
    use crate::scalar::{int, rat, Rat};

    fn pt(coords: &[Rat]) -> Point<Rat> {
        Point::new(coords.to_vec())
    }

    #[test]
    fn evaluate_segment_midpoint() {
        let m = PLMap::new(
            shapes::segment(),
            2,
            vec![pt(&[int(0), int(0)]), pt(&[int(2), int(4)])],
        );
        let mid = m.evaluate(0, &[rat(1, 2), rat(1, 2)]).unwrap();
        assert_eq!(mid, pt(&[int(1), int(2)]));
        let v1 = m.evaluate(0, &[int(0), int(1)]).unwrap();
        assert_eq!(v1, pt(&[int(2), int(4)]));
    }

    #[test]
    fn evaluate_triangle_centroid() {
        let tri = Complex::new(3, 2, vec![vec![0, 1, 2]], ComplexKind::General);
        let m = PLMap::new(
            tri,
            2,
            vec![pt(&[int(0), int(0)]), pt(&[int(3), int(0)]), pt(&[int(0), int(3)])],
        );
        let c = m.evaluate(0, &[rat(1, 3), rat(1, 3), rat(1, 3)]).unwrap();
        assert_eq!(c, pt(&[int(1), int(1)]));
    }

    #[test]
    fn bad_barycentric_rejected() {
        let m = PLMap::new(shapes::segment(), 1, vec![pt(&[int(0)]), pt(&[int(1)])]);
        assert!(m.evaluate(0, &[rat(3, 2), rat(-1, 2)]).is_err());
        assert!(m.evaluate(0, &[rat(1, 2)]).is_err());
        assert!(m.evaluate(0, &[rat(1, 2), rat(1, 4)]).is_err());
    }

    #[test]
    fn cone_of_octahedron() {
        let base = PLMap::new(
            shapes::octahedron(),
            3,
            vec![
                pt(&[int(1), int(0), int(0)]),
                pt(&[int(-1), int(0), int(0)]),
                pt(&[int(0), int(1), int(0)]),
                pt(&[int(0), int(-1), int(0)]),
                pt(&[int(0), int(0), int(1)]),
                pt(&[int(0), int(0), int(-1)]),
            ],
        );
        let c = cone(&base, &pt(&[int(0), int(0), int(5)])).unwrap();
        assert_eq!(c.domain.cells.len(), 8);
        assert_eq!(c.domain.vertex_count, 7);
        assert_eq!(c.domain.validate(), Ok(()));
        // Boundary of the cone is the base with its orientation.
        assert!(c.domain.boundary().same_oriented_cells(&base.domain));
    }

    #[test]
    fn subdivision_counts_and_agreement() {
        let m = PLMap::new(
            shapes::cycle(3),
            2,
            vec![pt(&[int(0), int(0)]), pt(&[int(2), int(0)]), pt(&[int(0), int(2)])],
        );
        let s = barycentric_subdivide(&m);
        assert_eq!(s.domain.cells.len(), 6);
        assert_eq!(s.domain.validate(), Ok(()));
        // The subdivided halves of edge [0,1] evaluate onto the original edge.
        let tri = Complex::new(3, 2, vec![vec![0, 1, 2]], ComplexKind::PseudomanifoldWithBoundary);
        let mt = PLMap::new(
            tri,
            2,
            vec![pt(&[int(0), int(0)]), pt(&[int(6), int(0)]), pt(&[int(0), int(6)])],
        );
        let st = barycentric_subdivide(&mt);
        assert_eq!(st.domain.cells.len(), 6);
        assert_eq!(st.domain.validate(), Ok(()));
        // Subdivision preserves the underlying map: the barycenter image of
        // the whole triangle appears among the new vertices.
        assert!(st.images.iter().any(|p| *p == pt(&[int(2), int(2)])));
    }
}
