use std::fmt;

use crate::scalar::Scalar;

/// A point of the ambient space with exact coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point<S: Scalar> {
    pub coords: Vec<S>,
}

impl<S: Scalar> Point<S> {
    pub fn new(coords: Vec<S>) -> Self {
        Point { coords }
    }

    pub fn zero(dim: usize) -> Self {
        Point { coords: vec![S::zero(); dim] }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        Point::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        Point::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        )
    }

    pub fn scale(&self, factor: &S) -> Self {
        Point::new(self.coords.iter().map(|a| a.clone() * factor.clone()).collect())
    }

    /// `self + t * (other - self)`, the exact affine interpolation.
    pub fn lerp(&self, other: &Self, t: &S) -> Self {
        self.add(&other.sub(self).scale(t))
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// Append extra coordinates (used to adjoin time or parameter charts).
    pub fn extended(&self, extra: &[S]) -> Self {
        let mut coords = self.coords.clone();
        coords.extend_from_slice(extra);
        Point::new(coords)
    }
}

impl<S: Scalar> fmt::Debug for Point<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Exact affine combination of points with the given weights.
pub fn affine_combination<S: Scalar>(points: &[&Point<S>], weights: &[S]) -> Point<S> {
    debug_assert_eq!(points.len(), weights.len());
    let dim = points[0].dim();
    let mut out = Point::zero(dim);
    for (p, w) in points.iter().zip(weights) {
        out = out.add(&p.scale(w));
    }
    out
}
