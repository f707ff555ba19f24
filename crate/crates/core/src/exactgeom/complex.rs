use std::collections::HashMap;

use thiserror::Error;

/// How a complex is allowed to behave along codimension-one faces.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComplexKind {
    /// Every (d-1)-face lies in exactly two cells, with opposite induced
    /// orientations.
    ClosedPseudomanifold,
    /// Every (d-1)-face lies in one or two cells; orientations coherent.
    PseudomanifoldWithBoundary,
    /// No face discipline beyond index validity.
    General,
}

/// An oriented simplicial complex, stored purely combinatorially. Geometry
/// lives in the [`PLMap`](super::PLMap) that carries one image point per
/// vertex; the same domain is reused under many maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complex {
    pub vertex_count: usize,
    /// Dimension of the top cells.
    pub dim: usize,
    /// Each cell is an ordered tuple of `dim + 1` distinct vertex indices;
    /// the tuple order is the cell's orientation.
    pub cells: Vec<Vec<usize>>,
    pub kind: ComplexKind,
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ComplexError {
    #[error("cell {cell} has a bad vertex index or a repeated vertex")]
    BadIndex { cell: usize },
    #[error("cell {cell} has {len} vertices, expected {expected}")]
    BadArity { cell: usize, len: usize, expected: usize },
    #[error("face {face:?} lies in {count} cells")]
    NonManifoldFace { face: Vec<usize>, count: usize },
    #[error("face {face:?} has incoherent induced orientations in cells {cells:?}")]
    OrientationIncoherent { face: Vec<usize>, cells: Vec<usize> },
    #[error("complex declared closed but face {face:?} lies in a single cell")]
    NotClosed { face: Vec<usize> },
}

/// Parity of the permutation sorting `tuple`; `true` for even.
pub(crate) fn sort_parity(tuple: &[usize]) -> bool {
    let mut v = tuple.to_vec();
    let mut even = true;
    for i in 0..v.len() {
        let (min_idx, _) = v[i..]
            .iter()
            .enumerate()
            .min_by_key(|(_, val)| **val)
            .expect("nonempty");
        if min_idx != 0 {
            v.swap(i, i + min_idx);
            even = !even;
        }
    }
    even
}

/// Canonical form of an oriented cell: sorted vertex tuple plus the parity
/// relating the stored order to the sorted order. Two oriented cells are
/// equal as oriented simplices iff their canonical forms agree.
pub fn canonical_cell(cell: &[usize]) -> (Vec<usize>, bool) {
    let mut sorted = cell.to_vec();
    sorted.sort_unstable();
    (sorted, sort_parity(cell))
}

/// The boundary faces of one cell with their induced orientation signs:
/// removing position `i` contributes the face with coefficient `(-1)^i`.
pub(crate) fn cell_faces(cell: &[usize]) -> Vec<(Vec<usize>, bool)> {
    (0..cell.len())
        .map(|i| {
            let mut face: Vec<usize> = cell.to_vec();
            face.remove(i);
            (face, i % 2 == 0)
        })
        .collect()
}

impl Complex {
    pub fn new(vertex_count: usize, dim: usize, cells: Vec<Vec<usize>>, kind: ComplexKind) -> Self {
        Complex { vertex_count, dim, cells, kind }
    }

    /// Confirms the structural invariants: index validity, face discipline
    /// for pseudomanifold kinds, orientation coherence, and emptiness of the
    /// boundary for closed complexes.
    pub fn validate(&self) -> Result<(), ComplexError> {
        for (ci, cell) in self.cells.iter().enumerate() {
            if cell.len() != self.dim + 1 {
                return Err(ComplexError::BadArity {
                    cell: ci,
                    len: cell.len(),
                    expected: self.dim + 1,
                });
            }
            let mut seen = cell.clone();
            seen.sort_unstable();
            seen.dedup();
            if seen.len() != cell.len() || cell.iter().any(|&v| v >= self.vertex_count) {
                return Err(ComplexError::BadIndex { cell: ci });
            }
        }
        if self.kind == ComplexKind::General || self.dim == 0 {
            return Ok(());
        }
        // Face incidence: key = sorted face, value = (cell, canonical sign).
        let mut incidence: HashMap<Vec<usize>, Vec<(usize, bool)>> = HashMap::new();
        for (ci, cell) in self.cells.iter().enumerate() {
            for (face, pos_sign) in cell_faces(cell) {
                let (sorted, parity) = canonical_cell(&face);
                // Sign of the face in canonical vertex order.
                let canon_sign = pos_sign == parity;
                incidence.entry(sorted).or_default().push((ci, canon_sign));
            }
        }
        let mut faces: Vec<_> = incidence.into_iter().collect();
        faces.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        for (face, hits) in faces {
            match hits.len() {
                1 => {
                    if self.kind == ComplexKind::ClosedPseudomanifold {
                        return Err(ComplexError::NotClosed { face });
                    }
                }
                2 => {
                    if hits[0].1 == hits[1].1 {
                        return Err(ComplexError::OrientationIncoherent {
                            face,
                            cells: vec![hits[0].0, hits[1].0],
                        });
                    }
                }
                n => return Err(ComplexError::NonManifoldFace { face, count: n }),
            }
        }
        Ok(())
    }

    /// The (d-1)-complex of faces lying in exactly one cell, each with its
    /// induced orientation. Empty for closed complexes.
    pub fn boundary(&self) -> Complex {
        assert!(self.dim >= 1, "boundary needs positive dimension");
        let mut incidence: HashMap<Vec<usize>, Vec<(Vec<usize>, bool)>> = HashMap::new();
        for cell in &self.cells {
            for (face, pos_sign) in cell_faces(cell) {
                let (sorted, _) = canonical_cell(&face);
                incidence.entry(sorted).or_default().push((face, pos_sign));
            }
        }
        let mut boundary_cells: Vec<Vec<usize>> = Vec::new();
        for (_, hits) in incidence {
            if hits.len() == 1 {
                let (mut face, sign) = hits.into_iter().next().expect("one hit");
                if !sign {
                    if face.len() >= 2 {
                        face.swap(0, 1);
                    }
                    // A 0-dimensional boundary point with negative sign is
                    // not representable; callers working with d = 1 only ask
                    // whether the boundary is empty.
                }
                boundary_cells.push(face);
            }
        }
        boundary_cells.sort_unstable();
        Complex::new(
            self.vertex_count,
            self.dim - 1,
            boundary_cells,
            if self.dim - 1 == 0 { ComplexKind::General } else { ComplexKind::ClosedPseudomanifold },
        )
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Same oriented cells up to even permutation, in any order.
    pub fn same_oriented_cells(&self, other: &Complex) -> bool {
        if self.dim != other.dim || self.cells.len() != other.cells.len() {
            return false;
        }
        let mut a: Vec<_> = self.cells.iter().map(|c| canonical_cell(c)).collect();
        let mut b: Vec<_> = other.cells.iter().map(|c| canonical_cell(c)).collect();
        a.sort_unstable();
        b.sort_unstable();
        a == b
    }

    /// Same oriented cells after relabeling this complex's vertices.
    pub fn same_oriented_cells_under(
        &self,
        other: &Complex,
        relabel: impl Fn(usize) -> usize,
    ) -> bool {
        if self.dim != other.dim || self.cells.len() != other.cells.len() {
            return false;
        }
        let mut a: Vec<_> = self
            .cells
            .iter()
            .map(|c| {
                let relabeled: Vec<usize> = c.iter().map(|&v| relabel(v)).collect();
                canonical_cell(&relabeled)
            })
            .collect();
        let mut b: Vec<_> = other.cells.iter().map(|c| canonical_cell(c)).collect();
        a.sort_unstable();
        b.sort_unstable();
        a == b
    }

    /// Every cell's orientation negated (first two vertices swapped).
    pub fn orientation_reversed(&self) -> Complex {
        let mut out = self.clone();
        for cell in &mut out.cells {
            if cell.len() >= 2 {
                cell.swap(0, 1);
            }
        }
        out
    }
}

/// Staircase triangulation of `|a| x |b|`.
///
/// Vertex `(i, j)` of the product gets index `i * b.vertex_count + j`; each
/// `p`-cell x `q`-cell pair yields `C(p+q, p)` simplices, one per monotone
/// lattice path, oriented by the shuffle sign so that the product orientation
/// is `a` first.
pub fn product_triangulation(a: &Complex, b: &Complex) -> Complex {
    let bv = b.vertex_count;
    let mut cells = Vec::new();
    for ca in &a.cells {
        for cb in &b.cells {
            let p = ca.len() - 1;
            let q = cb.len() - 1;
            for path in monotone_paths(p, q) {
                // Path = sequence of moves; false = step in a, true = step in b.
                let mut inversions = 0usize;
                for i in 0..path.len() {
                    for j in i + 1..path.len() {
                        if path[i] && !path[j] {
                            inversions += 1;
                        }
                    }
                }
                let mut tuple = Vec::with_capacity(p + q + 1);
                let (mut r, mut s) = (0usize, 0usize);
                tuple.push(ca[r] * bv + cb[s]);
                for &mv in &path {
                    if mv {
                        s += 1;
                    } else {
                        r += 1;
                    }
                    tuple.push(ca[r] * bv + cb[s]);
                }
                if inversions % 2 == 1 {
                    tuple.swap(0, 1);
                }
                cells.push(tuple);
            }
        }
    }
    let kind = match (a.kind, b.kind) {
        (ComplexKind::ClosedPseudomanifold, ComplexKind::ClosedPseudomanifold) => {
            ComplexKind::ClosedPseudomanifold
        }
        (ComplexKind::General, _) | (_, ComplexKind::General) => ComplexKind::General,
        _ => ComplexKind::PseudomanifoldWithBoundary,
    };
    Complex::new(a.vertex_count * bv, a.dim + b.dim, cells, kind)
}

fn monotone_paths(p: usize, q: usize) -> Vec<Vec<bool>> {
    fn rec(p_left: usize, q_left: usize, acc: &mut Vec<bool>, out: &mut Vec<Vec<bool>>) {
        if p_left == 0 && q_left == 0 {
            out.push(acc.clone());
            return;
        }
        if p_left > 0 {
            acc.push(false);
            rec(p_left - 1, q_left, acc, out);
            acc.pop();
        }
        if q_left > 0 {
            acc.push(true);
            rec(p_left, q_left - 1, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(p, q, &mut Vec::new(), &mut out);
    out
}

/// Standard complexes used throughout the builders and tests.
pub mod shapes {
    use super::*;

    /// Oriented cycle on `n` vertices: edges `[0,1], [1,2], ..., [n-1,0]`.
    pub fn cycle(n: usize) -> Complex {
        let cells = (0..n).map(|i| vec![i, (i + 1) % n]).collect();
        Complex::new(n, 1, cells, ComplexKind::ClosedPseudomanifold)
    }

    /// Single oriented segment `[0, 1]`.
    pub fn segment() -> Complex {
        Complex::new(2, 1, vec![vec![0, 1]], ComplexKind::PseudomanifoldWithBoundary)
    }

    /// The octahedron sphere: vertices 0..5 as +x,-x,+y,-y,+z,-z with eight
    /// coherently oriented triangles.
    pub fn octahedron() -> Complex {
        let cells = vec![
            vec![0, 2, 4],
            vec![2, 1, 4],
            vec![1, 3, 4],
            vec![3, 0, 4],
            vec![2, 0, 5],
            vec![1, 2, 5],
            vec![3, 1, 5],
            vec![0, 3, 5],
        ];
        Complex::new(6, 2, cells, ComplexKind::ClosedPseudomanifold)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn octahedron_is_valid_closed() {
        let c = shapes::octahedron();
        assert_eq!(c.validate(), Ok(()));
        assert!(c.boundary().is_empty());
    }

    #[test]
    fn incoherent_orientation_detected() {
        // Two triangles sharing edge {1,2} with the same induced orientation.
        let c = Complex::new(
            4,
            2,
            vec![vec![0, 1, 2], vec![3, 1, 2]],
            ComplexKind::PseudomanifoldWithBoundary,
        );
        assert!(matches!(c.validate(), Err(ComplexError::OrientationIncoherent { .. })));
        let good = Complex::new(
            4,
            2,
            vec![vec![0, 1, 2], vec![3, 2, 1]],
            ComplexKind::PseudomanifoldWithBoundary,
        );
        assert_eq!(good.validate(), Ok(()));
    }

    #[test]
    fn cycle_is_closed_1_pseudomanifold() {
        let c = shapes::cycle(3);
        assert_eq!(c.validate(), Ok(()));
    }

    #[test]
    fn non_manifold_face_detected() {
        let c = Complex::new(
            5,
            2,
            vec![vec![0, 1, 2], vec![3, 2, 1], vec![4, 1, 2]],
            ComplexKind::PseudomanifoldWithBoundary,
        );
        assert!(matches!(c.validate(), Err(ComplexError::NonManifoldFace { count: 3, .. })));
    }

    #[test]
    fn bad_index_detected() {
        let c = Complex::new(2, 1, vec![vec![0, 2]], ComplexKind::General);
        assert!(matches!(c.validate(), Err(ComplexError::BadIndex { .. })));
        let c = Complex::new(3, 1, vec![vec![1, 1]], ComplexKind::General);
        assert!(matches!(c.validate(), Err(ComplexError::BadIndex { .. })));
    }

    #[test]
    fn product_cell_counts() {
        let e = shapes::segment();
        let sq = product_triangulation(&e, &e);
        assert_eq!(sq.cells.len(), 2);
        assert_eq!(sq.validate(), Ok(()));
        let tri = Complex::new(3, 2, vec![vec![0, 1, 2]], ComplexKind::PseudomanifoldWithBoundary);
        let prism = product_triangulation(&tri, &e);
        assert_eq!(prism.cells.len(), 3);
        assert_eq!(prism.validate(), Ok(()));
        let hex_band = product_triangulation(&shapes::cycle(6), &e);
        assert_eq!(hex_band.cells.len(), 12);
        assert_eq!(hex_band.validate(), Ok(()));
    }

    #[test]
    fn product_square_boundary_is_coherent_4_cycle() {
        let e = shapes::segment();
        let sq = product_triangulation(&e, &e);
        let b = sq.boundary();
        assert_eq!(b.cells.len(), 4);
        assert_eq!(b.validate(), Ok(()));
        // Coherent circle: every vertex appears once as head, once as tail.
        let mut heads: Vec<usize> = b.cells.iter().map(|c| c[1]).collect();
        let mut tails: Vec<usize> = b.cells.iter().map(|c| c[0]).collect();
        heads.sort_unstable();
        tails.sort_unstable();
        assert_eq!(heads, tails);
    }

    #[test]
    fn product_of_closed_is_closed() {
        let t = product_triangulation(&shapes::cycle(3), &shapes::cycle(4));
        assert_eq!(t.kind, ComplexKind::ClosedPseudomanifold);
        assert_eq!(t.validate(), Ok(()));
        assert!(t.boundary().is_empty());
    }

    #[test]
    fn reversing_a_cell_flips_its_induced_faces() {
        let tri = Complex::new(3, 2, vec![vec![0, 1, 2]], ComplexKind::PseudomanifoldWithBoundary);
        let b1 = tri.boundary();
        let rev = tri.orientation_reversed();
        let b2 = rev.boundary();
        let mut c1: Vec<_> = b1.cells.iter().map(|c| canonical_cell(c)).collect();
        let mut c2: Vec<_> = b2.cells.iter().map(|c| canonical_cell(c)).collect();
        c1.sort_unstable();
        c2.sort_unstable();
        assert_eq!(c1.len(), 3);
        for ((s1, p1), (s2, p2)) in c1.iter().zip(&c2) {
            assert_eq!(s1, s2);
            assert_ne!(p1, p2);
        }
    }

    #[test]
    fn triangle_boundary_is_3_cycle() {
        let tri = Complex::new(3, 2, vec![vec![0, 1, 2]], ComplexKind::PseudomanifoldWithBoundary);
        let b = tri.boundary();
        assert!(b.same_oriented_cells(&shapes::cycle(3)));
    }
}
