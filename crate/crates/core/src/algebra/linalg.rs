//! Dense exact row reduction over any coefficient field.
//!
//! Vectors are plain `Vec<F>`; a matrix is a list of row vectors. Column
//! order is the caller's basis order, so the pivot of a row is its leading
//! entry in that order.

use super::scalar::Coeff;

/// Reduced row echelon form of a row space.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
    /// Nonzero rows, each with pivot entry 1 and zeros in other pivot columns.
    pub rows: Vec<Vec<F>>,
    /// Pivot column of each row, strictly increasing.
    pub pivots: Vec<usize>,
    pub width: usize,
}

impl<F: Coeff> Echelon<F> {
    pub fn empty(width: usize) -> Self {
        Echelon {
            rows: Vec::new(),
            pivots: Vec::new(),
            width,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the row space. The result is zero in every pivot
    /// column, and zero overall iff `v` lies in the row space.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut out = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if out[p].is_zero_elem() {
                continue;
            }
            let c = out[p].clone();
            axpy(&mut out, &c.neg_ref(), row);
        }
        out
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).iter().all(Coeff::is_zero_elem)
    }

    /// Insert a vector; returns true if the rank grew.
    pub fn insert(&mut self, v: &[F]) -> bool {
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|c| !c.is_zero_elem()) else {
            return false;
        };
        let inv = r[p].inv().expect("nonzero pivot");
        scale(&mut r, &inv);
        for row in self.rows.iter_mut() {
            if !row[p].is_zero_elem() {
                let c = row[p].neg_ref();
                axpy(row, &c, &r);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, r);
        true
    }
}

/// v += c * w
pub fn axpy<F: Coeff>(v: &mut [F], c: &F, w: &[F]) {
    for (a, b) in v.iter_mut().zip(w) {
        if !b.is_zero_elem() {
            *a = a.add_ref(&c.mul_ref(b));
        }
    }
}

pub fn scale<F: Coeff>(v: &mut [F], c: &F) {
    for a in v.iter_mut() {
        if !a.is_zero_elem() {
            *a = a.mul_ref(c);
        }
    }
}

/// Reduced row echelon form of the span of `rows`.
pub fn rref<F: Coeff>(rows: &[Vec<F>], width: usize) -> Echelon<F> {
    let mut e = Echelon::empty(width);
    for r in rows {
        debug_assert_eq!(r.len(), width);
        e.insert(r);
    }
    e
}

pub fn rank<F: Coeff>(rows: &[Vec<F>], width: usize) -> usize {
    rref(rows, width).rank()
}

/// Basis (in reduced echelon form) of the coefficient vectors `c` with
/// `sum_i c_i * vectors[i] = 0`.
///
/// `zero` supplies the field context when every vector is empty.
pub fn left_kernel<F: Coeff>(vectors: &[Vec<F>], width: usize, zero: &F) -> Vec<Vec<F>> {
    let n = vectors.len();
    let one = zero.one_like();
    // Augment each vector with the unit vector tagging it: [v_i | e_i].
    let aug: Vec<Vec<F>> = vectors
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let mut row = v.clone();
            row.extend((0..n).map(|j| if i == j { one.clone() } else { zero.clone() }));
            row
        })
        .collect();
    let e = rref(&aug, width + n);
    let kernel: Vec<Vec<F>> = e
        .rows
        .iter()
        .zip(&e.pivots)
        .filter(|(_, &p)| p >= width)
        .map(|(row, _)| row[width..].to_vec())
        .collect();
    rref(&kernel, n).rows
}

/// Solve the square system `m x = b`; `None` if `m` is singular.
pub fn solve<F: Coeff>(m: &[Vec<F>], b: &[F]) -> Option<Vec<F>> {
    let n = m.len();
    let aug: Vec<Vec<F>> = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let e = rref(&aug, n + 1);
    if e.rank() != n || e.pivots.contains(&n) {
        return None;
    }
    Some(e.rows.iter().map(|r| r[n].clone()).collect())
}
