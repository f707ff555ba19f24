//! Exact dense linear algebra for the coincidence engine: square solves with
//! determinant sign, and linear feasibility over boxes via a phase-1 simplex
//! with Bland's rule. Everything is rational; there are no tolerances.

use crate::scalar::Scalar;

/// Outcome of solving a square system `A x = b` exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SquareSolve<S: Scalar> {
    /// Nonsingular matrix: the unique solution and the sign of `det A`.
    Unique { solution: Vec<S>, det_sign: i8 },
    /// Singular matrix. Whether the system is consistent over a region is
    /// decided separately by [`feasible_point`].
    Singular,
}

/// Gaussian elimination with exact pivoting (first nonzero entry).
pub fn solve_square<S: Scalar>(mut a: Vec<Vec<S>>, mut b: Vec<S>) -> SquareSolve<S> {
    let n = b.len();
    debug_assert!(a.iter().all(|row| row.len() == n));
    let mut swaps = 0usize;
    for col in 0..n {
        let pivot_row = match (col..n).find(|&r| !a[r][col].is_zero()) {
            Some(r) => r,
            None => return SquareSolve::Singular,
        };
        if pivot_row != col {
            a.swap(pivot_row, col);
            b.swap(pivot_row, col);
            swaps += 1;
        }
        let pivot = a[col][col].clone();
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone() / pivot.clone();
            for c in col..n {
                let delta = factor.clone() * a[col][c].clone();
                a[r][c] = a[r][c].clone() - delta;
            }
            let delta = factor * b[col].clone();
            b[r] = b[r].clone() - delta;
        }
    }
    let mut det_sign: i8 = if swaps % 2 == 0 { 1 } else { -1 };
    for (i, row) in a.iter().enumerate() {
        if row[i].is_negative() {
            det_sign = -det_sign;
        }
    }
    // Back substitution.
    let mut x = vec![S::zero(); n];
    for i in (0..n).rev() {
        let mut acc = b[i].clone();
        for j in i + 1..n {
            acc = acc - a[i][j].clone() * x[j].clone();
        }
        x[i] = acc / a[i][i].clone();
    }
    SquareSolve::Unique { solution: x, det_sign }
}

/// Closed variable bounds; `None` means unbounded on that side.
pub type Bounds<S> = (Option<S>, Option<S>);

/// Exact feasibility of `A x = b` subject to closed componentwise bounds.
/// Returns a feasible point when one exists. Deterministic (Bland's rule).
pub fn feasible_point<S: Scalar>(
    a: &[Vec<S>],
    b: &[S],
    bounds: &[Bounds<S>],
) -> Option<Vec<S>> {
    let n = bounds.len();
    debug_assert!(a.iter().all(|row| row.len() == n));

    // Rewrite each variable as a nonnegative combination:
    //   x_j = shift_j + y_p           (finite lower bound)
    //   x_j = -(shift_j + y_p)        (finite upper bound only, negated)
    //   x_j = y_p - y_q               (free)
    // Finite two-sided bounds additionally get a slack row y_p + y_s = hi-lo.
    struct VarMap<S> {
        shift: S,
        terms: Vec<(usize, S)>,
    }
    let mut maps: Vec<VarMap<S>> = Vec::with_capacity(n);
    let mut ny = 0usize;
    let mut ub_rows: Vec<(usize, S)> = Vec::new(); // (y column, upper range)
    for (lo, hi) in bounds {
        match (lo, hi) {
            (Some(l), Some(h)) => {
                if h < l {
                    return None;
                }
                let col = ny;
                ny += 1;
                maps.push(VarMap { shift: l.clone(), terms: vec![(col, S::one())] });
                ub_rows.push((col, h.clone() - l.clone()));
            }
            (Some(l), None) => {
                let col = ny;
                ny += 1;
                maps.push(VarMap { shift: l.clone(), terms: vec![(col, S::one())] });
            }
            (None, Some(h)) => {
                let col = ny;
                ny += 1;
                maps.push(VarMap {
                    shift: h.clone(),
                    terms: vec![(col, S::zero() - S::one())],
                });
            }
            (None, None) => {
                let (p, q) = (ny, ny + 1);
                ny += 2;
                maps.push(VarMap {
                    shift: S::zero(),
                    terms: vec![(p, S::one()), (q, S::zero() - S::one())],
                });
            }
        }
    }
    let m = a.len() + ub_rows.len();

    // rows: coefficients over y, plus rhs.
    let mut rows: Vec<Vec<S>> = vec![vec![S::zero(); ny]; m];
    let mut rhs: Vec<S> = vec![S::zero(); m];
    for (i, arow) in a.iter().enumerate() {
        let mut r = b[i].clone();
        for (j, coeff) in arow.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            r = r - coeff.clone() * maps[j].shift.clone();
            for (col, t) in &maps[j].terms {
                rows[i][*col] = rows[i][*col].clone() + coeff.clone() * t.clone();
            }
        }
        rhs[i] = r;
    }
    for (k, (col, range)) in ub_rows.iter().enumerate() {
        let i = a.len() + k;
        rows[i][*col] = S::one();
        rhs[i] = range.clone();
    }
    // Append slack columns for the upper-bound rows.
    let n_slack = ub_rows.len();
    for row in rows.iter_mut() {
        row.resize(ny + n_slack, S::zero());
    }
    for (k, _) in ub_rows.iter().enumerate() {
        rows[a.len() + k][ny + k] = S::one();
    }
    let n_struct = ny + n_slack;

    // Make rhs nonnegative, then add one artificial per row.
    for i in 0..m {
        if rhs[i].is_negative() {
            for v in rows[i].iter_mut() {
                *v = S::zero() - v.clone();
            }
            rhs[i] = S::zero() - rhs[i].clone();
        }
    }
    let n_total = n_struct + m;
    for (i, row) in rows.iter_mut().enumerate() {
        row.resize(n_total, S::zero());
        row[n_struct + i] = S::one();
    }
    let mut basis: Vec<usize> = (n_struct..n_total).collect();

    // Phase-1 objective: minimize the sum of artificials.
    let mut obj: Vec<S> = vec![S::zero(); n_total];
    for j in 0..n_struct {
        let mut s = S::zero();
        for row in rows.iter() {
            s = s + row[j].clone();
        }
        obj[j] = S::zero() - s;
    }
    let mut zval: S = rhs.iter().fold(S::zero(), |acc, r| acc + r.clone());

    loop {
        let entering = (0..n_total).find(|&j| obj[j].is_negative());
        let e = match entering {
            Some(e) => e,
            None => break,
        };
        // Ratio test with Bland tie-breaking on the leaving basis index.
        let mut best: Option<(S, usize)> = None;
        for i in 0..m {
            if rows[i][e].is_positive() {
                let ratio = rhs[i].clone() / rows[i][e].clone();
                match &best {
                    None => best = Some((ratio, i)),
                    Some((r, bi)) => {
                        if ratio < *r || (ratio == *r && basis[i] < basis[*bi]) {
                            best = Some((ratio, i));
                        }
                    }
                }
            }
        }
        let (_, r) = best?; // unbounded phase-1 cannot occur, but stay safe
        // Normalize pivot row.
        let pivot = rows[r][e].clone();
        for v in rows[r].iter_mut() {
            *v = v.clone() / pivot.clone();
        }
        rhs[r] = rhs[r].clone() / pivot;
        // Eliminate the entering column elsewhere.
        for i in 0..m {
            if i == r || rows[i][e].is_zero() {
                continue;
            }
            let f = rows[i][e].clone();
            for j in 0..n_total {
                let delta = f.clone() * rows[r][j].clone();
                rows[i][j] = rows[i][j].clone() - delta;
            }
            let delta = f * rhs[r].clone();
            rhs[i] = rhs[i].clone() - delta;
        }
        let f = obj[e].clone();
        for j in 0..n_total {
            let delta = f.clone() * rows[r][j].clone();
            obj[j] = obj[j].clone() - delta;
        }
        // The entering variable steps to the normalized rhs, changing the
        // objective by its (negative) reduced cost times that step.
        zval = zval + f * rhs[r].clone();
        basis[r] = e;
    }

    if !zval.is_zero() {
        return None;
    }
    // Read off the structural solution.
    let mut y = vec![S::zero(); n_struct];
    for (i, &bj) in basis.iter().enumerate() {
        if bj < n_struct {
            y[bj] = rhs[i].clone();
        }
    }
    let mut x = Vec::with_capacity(n);
    for map in &maps {
        let mut v = map.shift.clone();
        for (col, t) in &map.terms {
            v = v + t.clone() * y[*col].clone();
        }
        x.push(v);
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};
    use num_traits::Signed;

    #[test]
    fn unique_solution_and_det_sign() {
        let a = vec![vec![int(2), int(0)], vec![int(0), int(3)]];
        let b = vec![int(4), int(9)];
        match solve_square(a, b) {
            SquareSolve::Unique { solution, det_sign } => {
                assert_eq!(solution, vec![int(2), int(3)]);
                assert_eq!(det_sign, 1);
            }
            _ => panic!("expected unique"),
        }
        let a = vec![vec![int(0), int(1)], vec![int(1), int(0)]];
        match solve_square(a, vec![int(5), int(7)]) {
            SquareSolve::Unique { solution, det_sign } => {
                assert_eq!(solution, vec![int(7), int(5)]);
                assert_eq!(det_sign, -1);
            }
            _ => panic!("expected unique"),
        }
    }

    #[test]
    fn singular_detected() {
        let a = vec![vec![int(1), int(2)], vec![int(2), int(4)]];
        assert_eq!(solve_square(a, vec![int(3), int(6)]), SquareSolve::Singular);
    }

    #[test]
    fn feasibility_simplex() {
        // x + y = 1, x,y in [0,1]: feasible.
        let a = vec![vec![int(1), int(1)]];
        let b = vec![int(1)];
        let bounds = vec![(Some(int(0)), Some(int(1))), (Some(int(0)), Some(int(1)))];
        let x = feasible_point(&a, &b, &bounds).expect("feasible");
        assert_eq!(x[0].clone() + x[1].clone(), int(1));
        assert!(!x[0].is_negative() && !x[1].is_negative());

        // x + y = 3 with the same bounds: infeasible.
        assert!(feasible_point(&a, &vec![int(3)], &bounds).is_none());

        // Free variable: x - z = 5, z >= 0, x unbounded.
        let a = vec![vec![int(1), int(-1)]];
        let bounds = vec![(None, None), (Some(int(0)), None)];
        let x = feasible_point(&a, &vec![int(5)], &bounds).expect("feasible");
        assert_eq!(x[0].clone() - x[1].clone(), int(5));

        // Upper-bound-only variable.
        let a = vec![vec![int(1)]];
        let bounds = vec![(None, Some(rat(-1, 2)))];
        assert!(feasible_point(&a, &vec![int(0)], &bounds).is_none());
        let x = feasible_point(&a, &vec![int(-1)], &bounds).expect("feasible");
        assert_eq!(x[0], int(-1));
    }

    #[test]
    fn degenerate_feasibility_terminates() {
        // Redundant rows exercising Bland's rule.
        let a = vec![
            vec![int(1), int(1), int(0)],
            vec![int(2), int(2), int(0)],
            vec![int(0), int(0), int(1)],
        ];
        let b = vec![int(1), int(2), int(0)];
        let bounds = vec![
            (Some(int(0)), None),
            (Some(int(0)), None),
            (Some(int(0)), Some(int(0))),
        ];
        let x = feasible_point(&a, &b, &bounds).expect("feasible");
        assert_eq!(x[0].clone() + x[1].clone(), int(1));
        assert_eq!(x[2], int(0));
    }

    #[test]
    fn rational_solution_values() {
        let a = vec![vec![int(3), int(1)], vec![int(1), int(2)]];
        let b = vec![int(1), int(1)];
        match solve_square(a, b) {
            SquareSolve::Unique { solution, det_sign } => {
                assert_eq!(solution, vec![rat(1, 5), rat(2, 5)]);
                assert_eq!(det_sign, 1);
            }
            _ => panic!(),
        }
    }
}
