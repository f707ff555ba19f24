use thiserror::Error;

use crate::exactgeom::{PLMap, Point};
use crate::linalg::{solve_square, SquareSolve};
use crate::scalar::Scalar;

/// A transversal crossing of two planar PL curves, strictly interior to both
/// edges.
#[derive(Clone, Debug)]
pub struct Crossing<S: Scalar> {
    pub cell_a: usize,
    pub cell_b: usize,
    /// Edge parameters in `(0, 1)`.
    pub s: S,
    pub t: S,
    pub point: Point<S>,
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum CrossingError {
    #[error("non-generic crossing between cells {cell_a} and {cell_b} (vertex hit or overlap)")]
    NonGeneric { cell_a: usize, cell_b: usize },
}

/// All transversal crossings between two planar curves, exactly. A crossing
/// at an edge endpoint or a collinear overlap is a [`CrossingError`].
pub fn planar_crossings<S: Scalar>(
    a: &PLMap<S>,
    b: &PLMap<S>,
) -> Result<Vec<Crossing<S>>, CrossingError> {
    assert_eq!(a.ambient_dim, 2);
    assert_eq!(b.ambient_dim, 2);
    let mut out = Vec::new();
    for (ca, ta) in a.domain.cells.iter().enumerate() {
        let a0 = &a.images[ta[0]];
        let a1 = &a.images[ta[1]];
        for (cb, tb) in b.domain.cells.iter().enumerate() {
            let b0 = &b.images[tb[0]];
            let b1 = &b.images[tb[1]];
            // a0 + s (a1-a0) = b0 + t (b1-b0)
            let da = a1.sub(a0);
            let db = b1.sub(b0);
            let rhs = b0.sub(a0);
            let m = vec![
                vec![da.coords[0].clone(), S::zero() - db.coords[0].clone()],
                vec![da.coords[1].clone(), S::zero() - db.coords[1].clone()],
            ];
            match solve_square(m, rhs.coords.clone()) {
                SquareSolve::Unique { solution, .. } => {
                    let (s, t) = (&solution[0], &solution[1]);
                    let zero = S::zero();
                    let one = S::one();
                    let inside =
                        s > &zero && s < &one && t > &zero && t < &one;
                    let outside =
                        s < &zero || s > &one || t < &zero || t > &one;
                    if inside {
                        let point = a0.lerp(a1, s);
                        out.push(Crossing {
                            cell_a: ca,
                            cell_b: cb,
                            s: s.clone(),
                            t: t.clone(),
                            point,
                        });
                    } else if !outside {
                        // On a boundary of one of the parameter intervals.
                        return Err(CrossingError::NonGeneric { cell_a: ca, cell_b: cb });
                    }
                }
                SquareSolve::Singular => {
                    // Parallel or collinear. Collinear closed overlap is
                    // non-generic; disjoint parallels are fine.
                    if segments_share_point(a0, a1, b0, b1) {
                        return Err(CrossingError::NonGeneric { cell_a: ca, cell_b: cb });
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Exact closed-segment intersection test used only in the singular branch.
fn segments_share_point<S: Scalar>(
    a0: &Point<S>,
    a1: &Point<S>,
    b0: &Point<S>,
    b1: &Point<S>,
) -> bool {
    use crate::linalg::feasible_point;
    // a0 + s (a1-a0) - b0 - t (b1-b0) = 0, s,t in [0,1].
    let da = a1.sub(a0);
    let db = b1.sub(b0);
    let rhs = b0.sub(a0);
    let a = vec![
        vec![da.coords[0].clone(), S::zero() - db.coords[0].clone()],
        vec![da.coords[1].clone(), S::zero() - db.coords[1].clone()],
    ];
    let bounds = vec![
        (Some(S::zero()), Some(S::one())),
        (Some(S::zero()), Some(S::one())),
    ];
    feasible_point(&a, &rhs.coords, &bounds).is_some()
}
