//! Exact rational phase-1 simplex with a Farkas certificate on infeasibility.
//!
//! Solves `find u >= 0 with B u = c` over the rationals. On success the
//! witness `u` is returned; otherwise a dual vector `y` with `yᵀB <= 0`
//! (componentwise over the columns) and `yᵀc > 0`, which proves that no
//! nonnegative solution exists. Bland's rule keeps the pivoting finite.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::matrix::RatMatrix;

pub enum Feasibility {
    /// A nonnegative rational solution of `B u = c`.
    Feasible(Vec<BigRational>),
    /// Farkas certificate: `yᵀ B <= 0` on every column and `yᵀ c > 0`.
    Infeasible(Vec<BigRational>),
}

pub fn nonnegative_solution(b: &RatMatrix, c: &[BigRational]) -> Feasibility {
    let m = b.rows();
    let n = b.cols();
    assert_eq!(c.len(), m, "right-hand side length");

    // Flip rows so the RHS is nonnegative, remembering the signs.
    let mut signs = vec![false; m];
    // Tableau: n structural columns, m artificial columns, 1 RHS column.
    let width = n + m + 1;
    let mut t = vec![vec![BigRational::zero(); width]; m];
    for r in 0..m {
        signs[r] = c[r].is_negative();
        let s = if signs[r] {
            -BigRational::one()
        } else {
            BigRational::one()
        };
        for j in 0..n {
            t[r][j] = &s * &b[(r, j)];
        }
        t[r][n + r] = BigRational::one();
        t[r][width - 1] = &s * &c[r];
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    // Phase-1 objective row: minimize the sum of artificials. Stored as
    // reduced costs; artificial columns start at zero, structural columns at
    // minus the column sums, the RHS cell holds minus the objective value.
    let mut obj = vec![BigRational::zero(); width];
    for j in (0..n).chain([width - 1]) {
        let mut s = BigRational::zero();
        for row in t.iter() {
            s += &row[j];
        }
        obj[j] = -s;
    }

    // Bland: entering column = smallest index with negative reduced cost.
    while let Some(enter) = (0..n + m).find(|&j| obj[j].is_negative()) {
        // Ratio test; ties broken by smallest basis variable (Bland).
        let mut leave: Option<(usize, BigRational)> = None;
        for (r, row) in t.iter().enumerate() {
            if row[enter].is_positive() {
                let ratio = &row[width - 1] / &row[enter];
                let better = match &leave {
                    None => true,
                    Some((lr, lratio)) => {
                        ratio < *lratio || (ratio == *lratio && basis[r] < basis[*lr])
                    }
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
        }
        let Some((lr, _)) = leave else {
            // The phase-1 objective is bounded below by 0, so an unbounded
            // ray cannot occur.
            unreachable!("phase-1 simplex cannot be unbounded");
        };
        pivot(&mut t, &mut obj, lr, enter);
        basis[lr] = enter;
    }

    let objective = -obj[width - 1].clone();
    if objective.is_zero() {
        let mut u = vec![BigRational::zero(); n];
        for (r, &bv) in basis.iter().enumerate() {
            if bv < n {
                u[bv] = t[r][width - 1].clone();
            }
        }
        Feasibility::Feasible(u)
    } else {
        // Reduced cost of artificial j is 1 - y_j, so y_j = 1 - obj[n+j];
        // undo the row sign flips.
        let y: Vec<BigRational> = (0..m)
            .map(|j| {
                let yj = BigRational::one() - &obj[n + j];
                if signs[j] {
                    -yj
                } else {
                    yj
                }
            })
            .collect();
        Feasibility::Infeasible(y)
    }
}

fn pivot(t: &mut [Vec<BigRational>], obj: &mut [BigRational], r: usize, c: usize) {
    let p = t[r][c].clone();
    for x in t[r].iter_mut() {
        *x /= &p;
    }
    let pivot_row = t[r].clone();
    for (rr, row) in t.iter_mut().enumerate() {
        if rr != r && !row[c].is_zero() {
            let f = row[c].clone();
            for (x, pv) in row.iter_mut().zip(&pivot_row) {
                *x -= &f * pv;
            }
        }
    }
    if !obj[c].is_zero() {
        let f = obj[c].clone();
        for (x, pv) in obj.iter_mut().zip(&pivot_row) {
            *x -= &f * pv;
        }
    }
}
