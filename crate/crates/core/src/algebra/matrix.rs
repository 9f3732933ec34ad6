use std::fmt;

use num_traits::{One, Zero};

use super::linalg;
use super::scalar::{rat, Rational};
use crate::error::AlgebraError;

/// Dense rational matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, AlgebraError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().position(|r| r.len() != ncols) {
            return Err(AlgebraError::RaggedMatrix { row: bad });
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Shape-explicit constructor, so that 0 x n and n x 0 matrices exist.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<Rational>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Matrix { rows, cols, data }
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
            .expect("ragged integer matrix")
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    pub fn diagonal(entries: &[i64]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, &e) in entries.iter().enumerate() {
            m.data[i * n + i] = rat(e);
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix, AlgebraError> {
        if self.cols != rhs.rows {
            return Err(AlgebraError::ShapeMismatch {
                expected: format!("{} rows", self.cols),
                found: format!("{}x{}", rhs.rows, rhs.cols),
            });
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Matrix {
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul(self).expect("square");
        }
        acc
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        // Row-reduce [A | I].
        let aug: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
                r
            })
            .collect();
        let e = linalg::rref(&aug, 2 * n);
        if e.rank() < n || e.pivots.iter().any(|&p| p >= n) {
            return None;
        }
        Some(Matrix::from_vec(
            n,
            n,
            e.rows.into_iter().flat_map(|r| r[n..].to_vec()).collect(),
        ))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && linalg::rank(&self.to_rows(), self.cols) == self.rows
    }

    /// Coefficients of det(x I - A), lowest degree first (Faddeev-LeVerrier).
    pub fn char_poly(&self) -> Vec<Rational> {
        assert!(self.is_square());
        let n = self.rows;
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = Rational::one();
        let mut m = Matrix::zeros(n, n);
        for k in 1..=n {
            // M_k = A M_{k-1} + c_{n-k+1} I
            let mut next = self.mul(&m).expect("square");
            for i in 0..n {
                next.data[i * n + i] += &coeffs[n - k + 1];
            }
            m = next;
            let am = self.mul(&m).expect("square");
            let trace: Rational = (0..n).map(|i| am.get(i, i).clone()).sum();
            coeffs[n - k] = -trace / rat(k as i64);
        }
        coeffs
    }

    pub fn det(&self) -> Rational {
        let cp = self.char_poly();
        if self.rows.is_multiple_of(2) {
            cp[0].clone()
        } else {
            -cp[0].clone()
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::frac;

    #[test]
    fn inverse_and_det() {
        let m = Matrix::from_ints(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(2));
        assert_eq!(m.det(), rat(1));
        let s = Matrix::from_ints(&[&[1, 2], &[2, 4]]);
        assert!(s.inverse().is_none());
        assert!(!s.is_invertible());
        assert_eq!(s.det(), rat(0));
    }

    #[test]
    fn char_poly_of_rotation() {
        // order-3 rotation in the sum-zero plane: x^2 + x + 1
        let r = Matrix::from_ints(&[&[0, 1], &[-1, -1]]);
        assert_eq!(r.char_poly(), vec![rat(1), rat(1), rat(1)]);
        let d = Matrix::from_rows(vec![vec![frac(1, 2), rat(0)], vec![rat(0), rat(3)]]).unwrap();
        assert_eq!(d.det(), frac(3, 2));
    }

    #[test]
    fn empty_shapes() {
        let e = Matrix::from_vec(0, 2, vec![]);
        assert_eq!(e.transpose().nrows(), 2);
        assert_eq!(e.transpose().ncols(), 0);
        assert_eq!(Matrix::identity(0).det(), rat(1));
    }

    #[test]
    fn ragged_rejected() {
        assert!(Matrix::from_rows(vec![vec![rat(1)], vec![rat(1), rat(2)]]).is_err());
    }
}
