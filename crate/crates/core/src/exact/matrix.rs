//! Dense matrices over an exact coefficient ring.
//!
//! The spectral matrices are tiny (at most 9x9, 81x81 for tensor squares), so
//! a dense row-major grid is the right representation here; only the global
//! Markov generator is stored sparsely (see the model module).

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::ExactError;

/// Coefficient ring for exact matrices: rationals, polynomials, rational
/// functions and Laurent polynomials all qualify.
pub trait Ring:
    Clone
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Add<Output = Self>
    + Mul<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Neg<Output = T>
        + Sub<Output = T>
        + Add<Output = T>
        + Mul<Output = T>
{
}

#[derive(Debug, Clone, PartialEq)]
pub struct Mat<T> {
    nrows: usize,
    ncols: usize,
    data: Vec<T>,
}

impl<T: Ring> Mat<T> {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Mat {
            nrows,
            ncols,
            data: vec![T::zero(); nrows * ncols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    /// Rows must all have the same length.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, ExactError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(ExactError::Dimension("ragged rows".into()));
        }
        Ok(Mat {
            nrows,
            ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.ncols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.ncols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.ncols..(i + 1) * self.ncols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.nrows == self.ncols
            && (0..self.nrows).all(|i| {
                (0..self.ncols).all(|j| {
                    if i == j {
                        self.get(i, j).is_one()
                    } else {
                        self.get(i, j).is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Mat<T> {
        let mut out = Mat::zeros(self.ncols, self.nrows);
        for i in 0..self.nrows {
            for j in 0..self.ncols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn add(&self, other: &Mat<T>) -> Result<Mat<T>, ExactError> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Mat<T>) -> Result<Mat<T>, ExactError> {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(
        &self,
        other: &Mat<T>,
        f: impl Fn(T, T) -> T,
    ) -> Result<Mat<T>, ExactError> {
        if self.nrows != other.nrows || self.ncols != other.ncols {
            return Err(ExactError::Dimension(format!(
                "{}x{} vs {}x{}",
                self.nrows, self.ncols, other.nrows, other.ncols
            )));
        }
        Ok(Mat {
            nrows: self.nrows,
            ncols: self.ncols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| f(a.clone(), b.clone()))
                .collect(),
        })
    }

    pub fn neg(&self) -> Mat<T> {
        self.map(|v| -v.clone())
    }

    pub fn scale(&self, c: &T) -> Mat<T> {
        self.map(|v| v.clone() * c.clone())
    }

    /// Exact matrix product; shape mismatch is a dimension error.
    pub fn mul(&self, other: &Mat<T>) -> Result<Mat<T>, ExactError> {
        if self.ncols != other.nrows {
            return Err(ExactError::Dimension(format!(
                "{}x{} * {}x{}",
                self.nrows, self.ncols, other.nrows, other.ncols
            )));
        }
        let mut out: Mat<T> = Mat::zeros(self.nrows, other.ncols);
        for i in 0..self.nrows {
            for k in 0..self.ncols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.ncols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let upd = out.get(i, j).clone() + a.clone() * b.clone();
                    out.set(i, j, upd);
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product with row-major index flattening
    /// `(i1, i2) -> i1 * n2 + i2`.
    pub fn tensor(&self, other: &Mat<T>) -> Mat<T> {
        let mut out = Mat::zeros(self.nrows * other.nrows, self.ncols * other.ncols);
        for i1 in 0..self.nrows {
            for j1 in 0..self.ncols {
                let a = self.get(i1, j1);
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..other.nrows {
                    for j2 in 0..other.ncols {
                        let b = other.get(i2, j2);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(
                            i1 * other.nrows + i2,
                            j1 * other.ncols + j2,
                            a.clone() * b.clone(),
                        );
                    }
                }
            }
        }
        out
    }

    /// Trace over one factor of a bipartite space `C^da (x) C^db`.
    ///
    /// `factor = 0` traces the first factor (result `db x db`), `factor = 1`
    /// the second (result `da x da`).
    pub fn partial_trace(
        &self,
        da: usize,
        db: usize,
        factor: usize,
    ) -> Result<Mat<T>, ExactError> {
        if self.nrows != da * db || self.ncols != da * db {
            return Err(ExactError::Dimension(format!(
                "partial trace of {}x{} as {da}x{db} tensor",
                self.nrows, self.ncols
            )));
        }
        match factor {
            0 => {
                let mut out = Mat::zeros(db, db);
                for a in 0..db {
                    for b in 0..db {
                        let mut acc = T::zero();
                        for c in 0..da {
                            acc = acc + self.get(c * db + a, c * db + b).clone();
                        }
                        out.set(a, b, acc);
                    }
                }
                Ok(out)
            }
            1 => {
                let mut out = Mat::zeros(da, da);
                for a in 0..da {
                    for b in 0..da {
                        let mut acc = T::zero();
                        for c in 0..db {
                            acc = acc + self.get(a * db + c, b * db + c).clone();
                        }
                        out.set(a, b, acc);
                    }
                }
                Ok(out)
            }
            _ => Err(ExactError::Dimension("factor must be 0 or 1".into())),
        }
    }

    pub fn trace(&self) -> Result<T, ExactError> {
        if self.nrows != self.ncols {
            return Err(ExactError::Dimension("trace of non-square matrix".into()));
        }
        let mut acc = T::zero();
        for i in 0..self.nrows {
            acc = acc + self.get(i, i).clone();
        }
        Ok(acc)
    }
}

impl<T> Mat<T> {
    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Mat<U> {
        Mat {
            nrows: self.nrows,
            ncols: self.ncols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_map<U, E>(&self, f: impl Fn(&T) -> Result<U, E>) -> Result<Mat<U>, E> {
        Ok(Mat {
            nrows: self.nrows,
            ncols: self.ncols,
            data: self.data.iter().map(f).collect::<Result<_, E>>()?,
        })
    }
}

/// Embed a one-site operator at position `pos` of `n` local spaces of
/// dimension `d` (positions count from 0).
pub fn embed_single<T: Ring>(op: &Mat<T>, pos: usize, n: usize, d: usize) -> Mat<T> {
    assert!(op.nrows == d && op.ncols == d && pos < n);
    let dim = d.pow(n as u32);
    let stride = d.pow((n - 1 - pos) as u32);
    let mut out = Mat::zeros(dim, dim);
    for idx in 0..dim {
        let digit = (idx / stride) % d;
        let base = idx - digit * stride;
        for target in 0..d {
            let v = op.get(target, digit);
            if v.is_zero() {
                continue;
            }
            out.set(base + target * stride, idx, v.clone());
        }
    }
    out
}

/// Embed a two-site operator acting on the ordered pair of positions
/// `(pos_a, pos_b)` of `n` local spaces of dimension `d`.
///
/// The operator indexes its own space as `ia * d + ib` where `ia` is the
/// digit at `pos_a`; `pos_a != pos_b` but they need not be adjacent or
/// ordered, which is what the `R_{0l}` / `R_{l0}` factors of the transfer
/// matrix require.
pub fn embed_pair<T: Ring>(
    op: &Mat<T>,
    pos_a: usize,
    pos_b: usize,
    n: usize,
    d: usize,
) -> Mat<T> {
    assert!(op.nrows == d * d && op.ncols == d * d);
    assert!(pos_a < n && pos_b < n && pos_a != pos_b);
    let dim = d.pow(n as u32);
    let stride_a = d.pow((n - 1 - pos_a) as u32);
    let stride_b = d.pow((n - 1 - pos_b) as u32);
    let mut out = Mat::zeros(dim, dim);
    for idx in 0..dim {
        let da = (idx / stride_a) % d;
        let db = (idx / stride_b) % d;
        let base = idx - da * stride_a - db * stride_b;
        let col = da * d + db;
        for ta in 0..d {
            for tb in 0..d {
                let v = op.get(ta * d + tb, col);
                if v.is_zero() {
                    continue;
                }
                out.set(base + ta * stride_a + tb * stride_b, idx, v.clone());
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::{rat_int, Rat};

    fn m(rows: &[&[i64]]) -> Mat<Rat> {
        Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| rat_int(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    /// 4x4 permutation matrix swapping the two C^2 factors.
    fn perm() -> Mat<Rat> {
        m(&[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]])
    }

    #[test]
    fn identity_tensor_identity() {
        let i2: Mat<Rat> = Mat::identity(2);
        assert_eq!(i2.tensor(&i2), Mat::identity(4));
    }

    #[test]
    fn permutation_squares_to_identity() {
        let p = perm();
        assert!(p.mul(&p).unwrap().is_identity());
    }

    #[test]
    fn partial_trace_of_permutation() {
        // tr_0 P = I_2 and tr_1 P = I_2 (brute-force index summation oracle:
        // P[(c,a),(c,b)] = [a=c][b=c] summed over c gives [a=b]).
        let p = perm();
        assert_eq!(p.partial_trace(2, 2, 0).unwrap(), Mat::identity(2));
        assert_eq!(p.partial_trace(2, 2, 1).unwrap(), Mat::identity(2));
    }

    #[test]
    fn mixed_product_identity() {
        // (A (x) B)(C (x) D) = (AC) (x) (BD)
        let a = m(&[&[1, 2], &[3, 4]]);
        let b = m(&[&[0, 1], &[1, 1]]);
        let c = m(&[&[2, 0], &[1, 1]]);
        let d = m(&[&[1, -1], &[0, 2]]);
        let lhs = a.tensor(&b).mul(&c.tensor(&d)).unwrap();
        let rhs = a.mul(&c).unwrap().tensor(&b.mul(&d).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn tensor_flattening_is_associative() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let b = m(&[&[5, 6], &[7, 8]]);
        let c = m(&[&[9, 1], &[2, 3]]);
        assert_eq!(a.tensor(&b).tensor(&c), a.tensor(&b.tensor(&c)));
    }

    #[test]
    fn shape_mismatch_is_an_error() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let b = m(&[&[1, 2, 3]]);
        assert!(a.mul(&b).is_err());
        assert!(a.add(&b).is_err());
    }

    #[test]
    fn embeddings_agree_with_kronecker() {
        let op = m(&[&[1, 2], &[3, 4]]);
        let i2: Mat<Rat> = Mat::identity(2);
        assert_eq!(embed_single(&op, 0, 3, 2), op.tensor(&i2).tensor(&i2));
        assert_eq!(embed_single(&op, 1, 3, 2), i2.tensor(&op).tensor(&i2));

        let two = m(&[
            &[1, 0, 0, 2],
            &[0, 3, 0, 0],
            &[0, 0, 4, 0],
            &[5, 0, 0, 6],
        ]);
        assert_eq!(embed_pair(&two, 0, 1, 3, 2), two.tensor(&i2));
        assert_eq!(embed_pair(&two, 1, 2, 3, 2), i2.tensor(&two));
        // Swapped positions match conjugation by the factor swap.
        let p = perm();
        let swapped = p.mul(&two).unwrap().mul(&p).unwrap();
        assert_eq!(embed_pair(&two, 1, 0, 2, 2), swapped);
    }
}
