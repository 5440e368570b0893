//! Exact dense linear solves over a field.
//!
//! Used for the small spectral systems (recovering the dual K-matrix from its
//! trace relation needs a 4x4 solve over the field of rational functions).

use num_traits::Zero;

use super::matrix::{Mat, Ring};
use super::ratfunc::RatFunc;
use super::scalar::Rat;
use crate::error::ExactError;

/// A ring where every nonzero element is invertible.
pub trait Field: Ring {
    fn try_inv(&self) -> Option<Self>;
}

impl Field for Rat {
    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl Field for RatFunc {
    fn try_inv(&self) -> Option<Self> {
        self.inv().ok()
    }
}

/// General solution of `a x = b`: one particular solution (free variables
/// set to zero) plus a basis of the kernel of `a`.
#[derive(Debug, Clone)]
pub struct LinearSolution<F> {
    pub particular: Vec<F>,
    pub null_basis: Vec<Vec<F>>,
}

/// Solve `a x = b` by exact Gaussian elimination, allowing a singular `a` as
/// long as the system is consistent.
pub fn solve_general<F: Field>(
    a: &Mat<F>,
    b: &[F],
) -> Result<LinearSolution<F>, ExactError> {
    let m = a.nrows();
    let n = a.ncols();
    if b.len() != m {
        return Err(ExactError::Dimension(format!(
            "solve {m}x{n} with rhs of length {}",
            b.len()
        )));
    }
    let mut rows: Vec<Vec<F>> = (0..m).map(|i| a.row(i).to_vec()).collect();
    let mut rhs = b.to_vec();

    // Forward elimination with full row reduction per pivot column.
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut next_row = 0usize;
    for col in 0..n {
        let Some(p) = (next_row..m).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next_row, p);
        rhs.swap(next_row, p);
        let inv = rows[next_row][col]
            .try_inv()
            .ok_or(ExactError::SingularSystem)?;
        for c in col..n {
            let v = rows[next_row][c].clone() * inv.clone();
            rows[next_row][c] = v;
        }
        let v = rhs[next_row].clone() * inv;
        rhs[next_row] = v;
        for r in 0..m {
            if r == next_row || rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].clone();
            for c in col..n {
                let upd = rows[r][c].clone() - factor.clone() * rows[next_row][c].clone();
                rows[r][c] = upd;
            }
            let upd = rhs[r].clone() - factor * rhs[next_row].clone();
            rhs[r] = upd;
        }
        pivot_cols.push(col);
        next_row += 1;
        if next_row == m {
            break;
        }
    }
    // Consistency: zero rows must have zero right-hand side.
    for r in next_row..m {
        if !rhs[r].is_zero() {
            return Err(ExactError::SingularSystem);
        }
    }

    let is_pivot: Vec<bool> = {
        let mut v = vec![false; n];
        for &c in &pivot_cols {
            v[c] = true;
        }
        v
    };
    let mut particular = vec![F::zero(); n];
    for (r, &c) in pivot_cols.iter().enumerate() {
        particular[c] = rhs[r].clone();
    }
    let mut null_basis = Vec::new();
    for free in (0..n).filter(|&c| !is_pivot[c]) {
        let mut v = vec![F::zero(); n];
        v[free] = F::one();
        for (r, &c) in pivot_cols.iter().enumerate() {
            v[c] = -rows[r][free].clone();
        }
        null_basis.push(v);
    }
    Ok(LinearSolution {
        particular,
        null_basis,
    })
}

/// Solve `a x = b` for square `a` by Gaussian elimination with exact
/// arithmetic. Errors if `a` is singular or shapes disagree.
pub fn solve_square<F: Field>(a: &Mat<F>, b: &[F]) -> Result<Vec<F>, ExactError> {
    let n = a.nrows();
    if a.ncols() != n || b.len() != n {
        return Err(ExactError::Dimension(format!(
            "solve {}x{} with rhs of length {}",
            a.nrows(),
            a.ncols(),
            b.len()
        )));
    }
    let mut rows: Vec<Vec<F>> = (0..n).map(|i| a.row(i).to_vec()).collect();
    let mut rhs = b.to_vec();

    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !rows[r][col].is_zero())
            .ok_or(ExactError::SingularSystem)?;
        rows.swap(col, pivot);
        rhs.swap(col, pivot);
        let inv = rows[col][col].try_inv().ok_or(ExactError::SingularSystem)?;
        for r in col + 1..n {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].clone() * inv.clone();
            for c in col..n {
                let upd = rows[r][c].clone() - factor.clone() * rows[col][c].clone();
                rows[r][c] = upd;
            }
            let upd = rhs[r].clone() - factor * rhs[col].clone();
            rhs[r] = upd;
        }
    }

    let mut x = vec![F::zero(); n];
    for col in (0..n).rev() {
        let mut acc = rhs[col].clone();
        for c in col + 1..n {
            acc = acc - rows[col][c].clone() * x[c].clone();
        }
        let inv = rows[col][col].try_inv().ok_or(ExactError::SingularSystem)?;
        x[col] = acc * inv;
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::{rat, rat_int};

    #[test]
    fn solves_rational_system() {
        let a = Mat::from_rows(vec![
            vec![rat_int(2), rat_int(1)],
            vec![rat_int(1), rat_int(3)],
        ])
        .unwrap();
        let b = vec![rat_int(5), rat_int(10)];
        let x = solve_square(&a, &b).unwrap();
        assert_eq!(x, vec![rat_int(1), rat_int(3)]);
    }

    #[test]
    fn rejects_singular() {
        let a = Mat::from_rows(vec![
            vec![rat_int(1), rat_int(2)],
            vec![rat_int(2), rat_int(4)],
        ])
        .unwrap();
        let b = vec![rat_int(1), rat_int(2)];
        assert_eq!(solve_square(&a, &b), Err(ExactError::SingularSystem));
    }

    #[test]
    fn general_solver_handles_underdetermined() {
        // x + y = 3 has a one-dimensional solution family.
        let a = Mat::from_rows(vec![vec![rat_int(1), rat_int(1)]]).unwrap();
        let sol = solve_general(&a, &[rat_int(3)]).unwrap();
        assert_eq!(sol.particular, vec![rat_int(3), rat_int(0)]);
        assert_eq!(sol.null_basis, vec![vec![rat_int(-1), rat_int(1)]]);
        // Inconsistent systems are rejected.
        let a = Mat::from_rows(vec![
            vec![rat_int(1), rat_int(1)],
            vec![rat_int(2), rat_int(2)],
        ])
        .unwrap();
        assert!(solve_general(&a, &[rat_int(1), rat_int(3)]).is_err());
    }

    #[test]
    fn solves_over_rational_functions() {
        use crate::exact::poly::Poly;
        let x = RatFunc::x();
        let one = RatFunc::from_rat(rat_int(1));
        // [[x, 1], [1, x]] * v = [x^2 + 1, 2x]  ->  v = [x, 1]
        let a = Mat::from_rows(vec![
            vec![x.clone(), one.clone()],
            vec![one.clone(), x.clone()],
        ])
        .unwrap();
        let b = vec![
            RatFunc::from_poly(Poly::from_coeffs(vec![rat_int(1), rat_int(0), rat_int(1)])),
            RatFunc::from_poly(Poly::from_coeffs(vec![rat_int(0), rat_int(2)])),
        ];
        let v = solve_square(&a, &b).unwrap();
        assert_eq!(v, vec![x, one]);
        let _ = rat(1, 2);
    }
}
