//! Dense matrices and subspaces over a [`Field`].
//!
//! Vectors are rows. A matrix acts on the right: `v -> v * M`.

mod charpoly;
mod echelon;
mod subspace;
mod text;

use std::ops::{Index, IndexMut};

use thiserror::Error;

use crate::gfq::{Elem, Field};

pub use charpoly::char_poly_leibniz;
pub use echelon::Echelon;
pub use subspace::Subspace;
pub use text::{format_matrix, format_vector, parse_matrix, parse_vector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("ShapeMismatch: {0}")]
    ShapeMismatch(String),
    #[error("FieldMismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("NotSquare: {0}x{1}")]
    NotSquare(usize, usize),
    #[error("Singular matrix")]
    Singular,
    #[error("ParseError: {0}")]
    Parse(String),
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} over {:?}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|&e| self.field.format_elem(e)).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// Result of a reduced row echelon computation.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![Elem::ZERO; rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = Elem::ONE;
        }
        m
    }

    pub fn scalar(field: &Field, n: usize, c: Elem) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = c;
        }
        m
    }

    pub fn from_rows(field: &Field, cols: usize, rows: &[Vec<Elem>]) -> Result<Matrix, LinalgError> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(LinalgError::ShapeMismatch(format!(
                    "row of length {} in a {cols}-column matrix",
                    r.len()
                )));
            }
            data.extend_from_slice(r);
        }
        Ok(Matrix {
            field: field.clone(),
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn from_data(field: &Field, rows: usize, cols: usize, data: Vec<Elem>) -> Matrix {
        assert_eq!(data.len(), rows * cols, "matrix data length");
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data,
        }
    }

    /// The permutation matrix with `e_i * M = e_{perm[i]}`.
    pub fn permutation(field: &Field, images: &[usize]) -> Matrix {
        let n = images.len();
        let mut m = Matrix::zeros(field, n, n);
        for (i, &j) in images.iter().enumerate() {
            m[(i, j)] = Elem::ONE;
        }
        m
    }

    #[inline]
    pub fn field(&self) -> &Field {
        &self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[Elem] {
        &self.data
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    #[inline]
    pub fn row_mut(&mut self, i: usize) -> &mut [Elem] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn push_row(&mut self, row: &[Elem]) {
        assert_eq!(row.len(), self.cols, "row length");
        self.data.extend_from_slice(row);
        self.rows += 1;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| self[(i, j)] == if i == j { Elem::ONE } else { Elem::ZERO })
            })
    }

    fn check_field(&self, other: &Matrix) -> Result<(), LinalgError> {
        if self.field != other.field {
            return Err(LinalgError::FieldMismatch(
                self.field.to_string(),
                other.field.to_string(),
            ));
        }
        Ok(())
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(LinalgError::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(&self.field, self.rows, other.cols);
        for i in 0..self.rows {
            let (a, o) = (self.row(i), i * other.cols);
            let dst = &mut out.data[o..o + other.cols];
            for (k, &c) in a.iter().enumerate() {
                self.field.axpy(dst, c, other.row(k));
            }
        }
        Ok(out)
    }

    /// Matrix product; panics on shape or field mismatch.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        self.try_mul(other).expect("matrix product")
    }

    pub fn try_add(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.check_field(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(LinalgError::ShapeMismatch("matrix sum".into()));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| self.field.add(a, b))
            .collect();
        Ok(Matrix { data, ..self.clone() })
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        self.try_add(other).expect("matrix sum")
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.add(&other.scale(self.field.neg(Elem::ONE)))
    }

    pub fn scale(&self, c: Elem) -> Matrix {
        let data = self.data.iter().map(|&a| self.field.mul(a, c)).collect();
        Matrix { data, ..self.clone() }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: Elem, other: &Matrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.field.axpy(&mut self.data, c, &other.data);
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)];
            }
        }
        out
    }

    /// `v * M`.
    pub fn vec_mul(&self, v: &[Elem]) -> Vec<Elem> {
        assert_eq!(v.len(), self.rows, "vector length");
        let mut out = vec![Elem::ZERO; self.cols];
        for (i, &c) in v.iter().enumerate() {
            self.field.axpy(&mut out, c, self.row(i));
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        assert!(self.is_square());
        let mut acc = Matrix::identity(&self.field, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Evaluates the polynomial `coeffs` (low degree first) at this matrix.
    pub fn eval_poly(&self, coeffs: &[Elem]) -> Matrix {
        assert!(self.is_square());
        let n = self.rows;
        let mut acc = Matrix::zeros(&self.field, n, n);
        for &c in coeffs.iter().rev() {
            acc = acc.mul(self);
            for i in 0..n {
                acc[(i, i)] = self.field.add(acc[(i, i)], c);
            }
        }
        acc
    }

    /// Horizontal concatenation.
    pub fn hconcat(parts: &[&Matrix]) -> Matrix {
        let rows = parts[0].rows;
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Matrix::zeros(&parts[0].field, rows, cols);
        let mut off = 0;
        for m in parts {
            assert_eq!(m.rows, rows);
            for i in 0..rows {
                out.row_mut(i)[off..off + m.cols].copy_from_slice(m.row(i));
            }
            off += m.cols;
        }
        out
    }

    /// Gauss-Jordan elimination.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = f.inv(m[(r, c)]).expect("nonzero pivot");
            f.scale(m.row_mut(r), inv);
            let pivot_row = m.row(r).to_vec();
            for i in 0..m.rows {
                if i != r {
                    let x = m[(i, c)];
                    if !x.is_zero() {
                        let nx = f.neg(x);
                        f.axpy(m.row_mut(i), nx, &pivot_row);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref {
            matrix: m,
            rank: r,
            pivots,
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new(&self.field, self.cols);
        for i in 0..self.rows {
            e.insert(self.row(i).to_vec());
        }
        e.rank()
    }

    pub fn determinant(&self) -> Result<Elem, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare(self.rows, self.cols));
        }
        let f = &self.field;
        let mut m = self.clone();
        let mut det = Elem::ONE;
        for c in 0..m.cols {
            let Some(pr) = (c..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                return Ok(Elem::ZERO);
            };
            if pr != c {
                m.swap_rows(pr, c);
                det = f.neg(det);
            }
            let pv = m[(c, c)];
            det = f.mul(det, pv);
            let inv = f.inv(pv).expect("nonzero pivot");
            let pivot_row = m.row(c).to_vec();
            for i in c + 1..m.rows {
                let x = m[(i, c)];
                if !x.is_zero() {
                    f.axpy(m.row_mut(i), f.neg(f.mul(x, inv)), &pivot_row);
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<Matrix, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare(self.rows, self.cols));
        }
        let n = self.rows;
        let aug = Matrix::hconcat(&[self, &Matrix::identity(&self.field, n)]);
        let r = aug.rref();
        if r.pivots.len() < n || r.pivots[n - 1] != n - 1 {
            return Err(LinalgError::Singular);
        }
        let mut out = Matrix::zeros(&self.field, n, n);
        for i in 0..n {
            out.row_mut(i).copy_from_slice(&r.matrix.row(i)[n..]);
        }
        Ok(out)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Right null space `{ v : M v^T = 0 }`.
    pub fn kernel(&self) -> Subspace {
        let r = self.rref();
        let n = self.cols;
        let f = &self.field;
        let mut is_pivot = vec![None; n];
        for (i, &c) in r.pivots.iter().enumerate() {
            is_pivot[c] = Some(i);
        }
        let mut basis = Vec::new();
        for j in (0..n).filter(|&j| is_pivot[j].is_none()) {
            let mut v = vec![Elem::ZERO; n];
            v[j] = Elem::ONE;
            for (i, &c) in r.pivots.iter().enumerate() {
                v[c] = f.neg(r.matrix[(i, j)]);
            }
            basis.push(v);
        }
        Subspace::from_rows(f, n, basis)
    }

    /// Left null space `{ v : v M = 0 }`.
    pub fn left_kernel(&self) -> Subspace {
        self.transpose().kernel()
    }

    /// Row space.
    pub fn row_space(&self) -> Subspace {
        Subspace::from_rows(&self.field, self.cols, self.row_vecs())
    }

    /// Hessenberg-based characteristic polynomial, monic, low degree first.
    pub fn char_poly(&self) -> Result<Vec<Elem>, LinalgError> {
        charpoly::char_poly_hessenberg(self)
    }

    /// `kernel(M - lambda I)`.
    pub fn eigenspace(&self, lambda: Elem) -> Result<Subspace, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare(self.rows, self.cols));
        }
        Ok(self
            .sub(&Matrix::scalar(&self.field, self.rows, lambda))
            .kernel())
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Elem;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Elem {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Elem {
        &mut self.data[i * self.cols + j]
    }
}

/// `a + c * b` on vectors.
pub fn vec_axpy(f: &Field, a: &[Elem], c: Elem, b: &[Elem]) -> Vec<Elem> {
    let mut out = a.to_vec();
    f.axpy(&mut out, c, b);
    out
}

pub fn dot(f: &Field, a: &[Elem], b: &[Elem]) -> Elem {
    a.iter()
        .zip(b)
        .fold(Elem::ZERO, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
}

pub fn unit_vector(n: usize, i: usize) -> Vec<Elem> {
    let mut v = vec![Elem::ZERO; n];
    v[i] = Elem::ONE;
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(f: &Field, rows: &[&[u32]]) -> Matrix {
        let cols = rows[0].len();
        let rs: Vec<Vec<Elem>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| Elem::from_code(x)).collect())
            .collect();
        Matrix::from_rows(f, cols, &rs).unwrap()
    }

    #[test]
    fn rref_and_rank() {
        let f = Field::new(3, 1).unwrap();
        let a = m(&f, &[&[1, 2, 0], &[2, 1, 0], &[0, 0, 1]]);
        let r = a.rref();
        assert_eq!(r.rank, 2);
        assert_eq!(r.pivots, vec![0, 2]);
        assert_eq!(a.rank(), 2);
    }

    #[test]
    fn inverse_round_trip() {
        let f = Field::new(5, 1).unwrap();
        let a = m(&f, &[&[1, 2, 3], &[0, 1, 4], &[0, 1, 0]]);
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_identity());
        assert_eq!(
            m(&f, &[&[1, 2], &[2, 4]]).inverse().unwrap_err(),
            LinalgError::Singular
        );
    }

    #[test]
    fn kernel_is_annihilated() {
        let f = Field::new(2, 1).unwrap();
        let a = m(&f, &[&[1, 1, 0, 1], &[0, 1, 1, 1]]);
        let k = a.kernel();
        assert_eq!(k.dim(), 2);
        for v in k.basis_rows() {
            assert!(a.vec_mul_right(v).iter().all(|e| e.is_zero()));
        }
    }

    #[test]
    fn mismatched_shapes_are_errors() {
        let f = Field::new(2, 1).unwrap();
        let a = Matrix::zeros(&f, 2, 3);
        assert!(matches!(a.try_mul(&a), Err(LinalgError::ShapeMismatch(_))));
        let g = Field::new(3, 1).unwrap();
        let b = Matrix::zeros(&g, 3, 2);
        assert!(matches!(a.try_mul(&b), Err(LinalgError::FieldMismatch(..))));
    }

    #[test]
    fn determinant_matches_rank() {
        let f = Field::new(7, 1).unwrap();
        let a = m(&f, &[&[2, 3], &[1, 4]]);
        assert_eq!(a.determinant().unwrap(), Elem::from_code(5));
    }

    impl Matrix {
        fn vec_mul_right(&self, v: &[Elem]) -> Vec<Elem> {
            (0..self.rows).map(|i| dot(&self.field, self.row(i), v)).collect()
        }
    }
}
