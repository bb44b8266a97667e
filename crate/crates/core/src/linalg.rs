//! Exact dense matrices over a [`Field`].
//!
//! Matrices are row-major. Module code uses the row-vector convention
//! (a vector `v` is mapped by `v * A`), so most helpers come in a column
//! flavour (`kernel_basis`, `solve_linear`) and a row flavour
//! (`left_kernel`, `solve_left`).

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Clone, PartialEq, Eq)]
pub struct Mat<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> fmt::Debug for Mat<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat{}x{}[", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
        }
        write!(f, "]")
    }
}

impl<F: Field> Mat<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Self { field: field.clone(), rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_vec(field: &F, rows: usize, cols: usize, data: Vec<F::Elem>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!("{} entries for a {rows}x{cols} matrix", data.len())));
        }
        Ok(Self { field: field.clone(), rows, cols, data })
    }

    /// Builds a matrix from rows; `cols` is needed for the zero-row case.
    pub fn from_rows(field: &F, cols: usize, rows: Vec<Vec<F::Elem>>) -> Self {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged rows");
            data.extend(row);
        }
        Self { field: field.clone(), rows: r, cols, data }
    }

    pub fn from_i64(field: &F, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(field, cols, rows.iter().map(|r| r.iter().map(|&v| field.from_i64(v)).collect()).collect())
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn entries(&self) -> &[F::Elem] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> &F::Elem {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F::Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vec(&self, r: usize) -> Vec<F::Elem> {
        self.row(r).to_vec()
    }

    pub fn col_vec(&self, c: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| self.field.is_zero(e))
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if f.is_zero(b) {
                        continue;
                    }
                    let idx = i * other.cols + j;
                    out.data[idx] = f.add(&out.data[idx], &f.mul(a, b));
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.shape(), other.shape(), "shape mismatch in sum");
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.add(a, b)).collect();
        Self { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.shape(), other.shape(), "shape mismatch in difference");
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.sub(a, b)).collect();
        Self { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &F::Elem) -> Self {
        let f = &self.field;
        let data = self.data.iter().map(|a| f.mul(a, s)).collect();
        Self { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    /// `self + s * other`.
    pub fn add_scaled(&self, other: &Self, s: &F::Elem) -> Self {
        self.add(&other.scale(s))
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(v.len(), self.rows, "vector length mismatch");
        let f = &self.field;
        let mut out = vec![f.zero(); self.cols];
        for (k, a) in v.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                let b = self.get(k, j);
                if !f.is_zero(b) {
                    *o = f.add(o, &f.mul(a, b));
                }
            }
        }
        out
    }

    pub fn pow(&self, e: usize) -> Self {
        assert!(self.is_square());
        let mut acc = Self::identity(&self.field, self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        let mut out = Self::zeros(&self.field, self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.get(r, c).clone());
            }
        }
        out
    }

    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Self { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut out = Self::zeros(&self.field, self.rows + other.rows, self.cols + other.cols);
        out.set_block(0, 0, self);
        out.set_block(self.rows, self.cols, other);
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Self) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(r0 + r, c0 + c, block.get(r, c).clone());
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        let mut out = Self::zeros(&self.field, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                out.set(r, c, self.get(r0 + r, c0 + c).clone());
            }
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        Self::from_rows(&self.field, self.cols, idx.iter().map(|&i| self.row_vec(i)).collect())
    }

    pub fn select_cols(&self, idx: &[usize]) -> Self {
        self.transpose().select_rows(idx).transpose()
    }

    /// Reduced row echelon form with its pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pr = 0;
        for c in 0..m.cols {
            if pr == m.rows {
                break;
            }
            let Some(sel) = (pr..m.rows).find(|&r| !f.is_zero(m.get(r, c))) else {
                continue;
            };
            if sel != pr {
                for j in 0..m.cols {
                    m.data.swap(sel * m.cols + j, pr * m.cols + j);
                }
            }
            let inv = f.inv(m.get(pr, c)).expect("pivot is nonzero");
            for j in c..m.cols {
                let v = f.mul(m.get(pr, j), &inv);
                m.set(pr, j, v);
            }
            for r in 0..m.rows {
                if r == pr || f.is_zero(m.get(r, c)) {
                    continue;
                }
                let factor = m.get(r, c).clone();
                for j in c..m.cols {
                    let v = f.sub(m.get(r, j), &f.mul(&factor, m.get(pr, j)));
                    m.set(r, j, v);
                }
            }
            pivots.push(c);
            pr += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Columns span the null space `{x : self * x = 0}`.
    pub fn kernel_basis(&self) -> Self {
        let f = &self.field;
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Self::zeros(f, self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            out.set(fc, k, f.one());
            for (i, &pc) in pivots.iter().enumerate() {
                out.set(pc, k, f.neg(r.get(i, fc)));
            }
        }
        out
    }

    /// Rows span `{x : x * self = 0}`.
    pub fn left_kernel(&self) -> Self {
        self.transpose().kernel_basis().transpose()
    }

    /// A basis of the row space, as rows in reduced echelon form.
    pub fn row_basis(&self) -> Self {
        let (r, pivots) = self.rref();
        r.select_rows(&(0..pivots.len()).collect::<Vec<_>>())
    }

    /// Standard basis rows completing the row space of `self` to the full space.
    pub fn complement_rows(&self) -> Self {
        let f = &self.field;
        let (_, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Self::zeros(f, free.len(), self.cols);
        for (i, &c) in free.iter().enumerate() {
            out.set(i, c, f.one());
        }
        out
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Self::identity(&self.field, n));
        let (r, pivots) = aug.rref();
        if pivots.len() < n || (n > 0 && pivots[n - 1] != n - 1) {
            return None;
        }
        Some(r.block(0, n, n, n))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }
}

/// Solves `a * x = b`; `Ok(None)` when the system is inconsistent.
pub fn solve_linear<F: Field>(a: &Mat<F>, b: &Mat<F>) -> Result<Option<Mat<F>>> {
    if a.rows != b.rows {
        return Err(Error::DimensionMismatch(format!("solve_linear: {} rows against {} rows", a.rows, b.rows)));
    }
    let f = a.field.clone();
    let n = a.cols;
    let (r, pivots) = a.hstack(b).rref();
    if pivots.iter().any(|&p| p >= n) {
        return Ok(None);
    }
    let mut x = Mat::zeros(&f, n, b.cols);
    for (i, &pc) in pivots.iter().enumerate() {
        for j in 0..b.cols {
            x.set(pc, j, r.get(i, n + j).clone());
        }
    }
    Ok(Some(x))
}

/// Solves `x * a = b` (row convention).
pub fn solve_left<F: Field>(a: &Mat<F>, b: &Mat<F>) -> Result<Option<Mat<F>>> {
    if a.cols != b.cols {
        return Err(Error::DimensionMismatch(format!("solve_left: {} cols against {} cols", a.cols, b.cols)));
    }
    Ok(solve_linear(&a.transpose(), &b.transpose())?.map(|x| x.transpose()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn f101() -> PrimeField {
        PrimeField::new(101).unwrap()
    }

    #[test]
    fn rref_identity_and_zero() {
        let f = f101();
        let id = Mat::identity(&f, 2);
        assert_eq!(id.rref(), (id.clone(), vec![0, 1]));
        let z = Mat::zeros(&f, 3, 2);
        assert_eq!(z.rref(), (z.clone(), vec![]));
    }

    #[test]
    fn rref_rank_one() {
        let f = f101();
        let m = Mat::from_i64(&f, &[&[1, 2], &[2, 4]]);
        let (r, p) = m.rref();
        assert_eq!(r, Mat::from_i64(&f, &[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn kernel_examples() {
        let f = f101();
        assert_eq!(Mat::identity(&f, 3).kernel_basis().cols(), 0);
        assert_eq!(Mat::zeros(&f, 2, 3).kernel_basis().cols(), 3);
        let k = Mat::from_i64(&f, &[&[1, 1]]).kernel_basis();
        assert_eq!(k.cols(), 1);
        assert_eq!(k.col_vec(0), vec![100, 1]);
    }

    #[test]
    fn solve_examples() {
        let f = f101();
        let b = Mat::from_i64(&f, &[&[3, 4], &[5, 6]]);
        assert_eq!(solve_linear(&Mat::identity(&f, 2), &b).unwrap(), Some(b.clone()));
        assert_eq!(solve_linear(&Mat::zeros(&f, 2, 2), &b).unwrap(), None);
        let x = solve_linear(&Mat::from_i64(&f, &[&[2]]), &Mat::from_i64(&f, &[&[1]])).unwrap();
        assert_eq!(x, Some(Mat::from_i64(&f, &[&[51]])));
        assert!(solve_linear(&Mat::identity(&f, 2), &Mat::zeros(&f, 3, 1)).is_err());
    }

    #[test]
    fn rationals_inverse() {
        let q = Rationals;
        let m = Mat::from_i64(&q, &[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Mat::identity(&q, 2));
        assert!(Mat::from_i64(&q, &[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn left_kernel_annihilates() {
        let f = f101();
        let m = Mat::from_i64(&f, &[&[1, 2], &[2, 4], &[0, 1]]);
        let lk = m.left_kernel();
        assert_eq!(lk.rows(), 1);
        assert!(lk.mul(&m).is_zero());
    }
}
