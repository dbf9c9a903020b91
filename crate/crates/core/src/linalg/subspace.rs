use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

use super::{Echelon, Matrix};
use crate::gfq::{Elem, Field};

/// A subspace of `F^n`, stored by its reduced row echelon basis, which makes
/// the representation canonical.
#[derive(Clone)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    basis: Vec<Vec<Elem>>,
    pivots: Vec<usize>,
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subspace(dim {} in {})", self.dim(), self.ambient)
    }
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.basis == other.basis
    }
}

impl Eq for Subspace {}

impl Hash for Subspace {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ambient.hash(state);
        self.basis.hash(state);
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by dimension, then by canonical basis.
impl Ord for Subspace {
    fn cmp(&self, other: &Self) -> Ordering {
        self.dim()
            .cmp(&other.dim())
            .then_with(|| self.ambient.cmp(&other.ambient))
            .then_with(|| self.basis.cmp(&other.basis))
    }
}

impl Subspace {
    pub fn zero(field: &Field, ambient: usize) -> Subspace {
        Subspace {
            field: field.clone(),
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: &Field, ambient: usize) -> Subspace {
        Subspace::from_rows(
            field,
            ambient,
            (0..ambient).map(|i| super::unit_vector(ambient, i)).collect(),
        )
    }

    /// Span of the given vectors.
    pub fn from_rows(field: &Field, ambient: usize, rows: Vec<Vec<Elem>>) -> Subspace {
        let mut e = Echelon::new(field, ambient);
        for r in rows {
            e.insert(r);
            if e.is_full() {
                break;
            }
        }
        Subspace::from_echelon(&e)
    }

    pub fn from_echelon(e: &Echelon) -> Subspace {
        let field = e.field().clone();
        let n = e.ambient();
        let mut order: Vec<usize> = (0..e.rank()).collect();
        order.sort_by_key(|&i| e.pivots()[i]);
        let mut basis: Vec<Vec<Elem>> = order.iter().map(|&i| e.rows()[i].clone()).collect();
        let pivots: Vec<usize> = order.iter().map(|&i| e.pivots()[i]).collect();
        // back-substitute so each pivot column is a unit column
        for i in (0..basis.len()).rev() {
            let (head, tail) = basis.split_at_mut(i);
            let row = &tail[0];
            for other in head.iter_mut() {
                let c = other[pivots[i]];
                if !c.is_zero() {
                    field.axpy(other, field.neg(c), row);
                }
            }
        }
        Subspace {
            field,
            ambient: n,
            basis,
            pivots,
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn codim(&self) -> usize {
        self.ambient - self.basis.len()
    }

    pub fn basis_rows(&self) -> &[Vec<Elem>] {
        &self.basis
    }

    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_rows(&self.field, self.ambient, &self.basis).expect("basis rows")
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates not used as pivots; these index the quotient `F^n / U`.
    pub fn free_coords(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&j| !is_pivot[j]).collect()
    }

    /// Reduces `v` modulo the subspace, leaving zeros at pivot columns.
    pub fn reduce(&self, v: &mut [Elem]) {
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let c = v[p];
            if !c.is_zero() {
                self.field.axpy(v, self.field.neg(c), row);
            }
        }
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|e| e.is_zero())
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Coordinates of the image of `v` in `F^n / U`, in the basis given by
    /// the free coordinates.
    pub fn quotient_coords(&self, v: &[Elem]) -> Vec<Elem> {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        self.free_coords().into_iter().map(|j| w[j]).collect()
    }

    /// Quotient coordinates with a precomputed free-coordinate list.
    pub fn quotient_coords_with(&self, free: &[usize], v: &[Elem]) -> Vec<Elem> {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        free.iter().map(|&j| w[j]).collect()
    }

    /// Lifts quotient coordinates back to `F^n`, using the free coordinates.
    pub fn lift(&self, coords: &[Elem]) -> Vec<Elem> {
        let mut v = vec![Elem::ZERO; self.ambient];
        for (&j, &c) in self.free_coords().iter().zip(coords) {
            v[j] = c;
        }
        v
    }

    /// Coordinates of `v` with respect to the basis; `None` if `v` is not in the subspace.
    pub fn coords_in(&self, v: &[Elem]) -> Option<Vec<Elem>> {
        let coeffs: Vec<Elem> = self.pivots.iter().map(|&p| v[p]).collect();
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|e| e.is_zero()).then_some(coeffs)
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut e = Echelon::new(&self.field, self.ambient);
        for v in self.basis.iter().chain(&other.basis) {
            e.insert(v.clone());
        }
        Subspace::from_echelon(&e)
    }

    /// Zassenhaus intersection.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        let n = self.ambient;
        let mut rows = Vec::new();
        for v in &self.basis {
            let mut r = v.clone();
            r.extend_from_slice(v);
            rows.push(r);
        }
        for v in &other.basis {
            let mut r = v.clone();
            r.extend(std::iter::repeat_n(Elem::ZERO, n));
            rows.push(r);
        }
        let m = Matrix::from_rows(&self.field, 2 * n, &rows)
            .expect("rows")
            .rref();
        let mut out = Vec::new();
        for i in 0..m.rank {
            if m.pivots[i] >= n {
                out.push(m.matrix.row(i)[n..].to_vec());
            }
        }
        Subspace::from_rows(&self.field, n, out)
    }

    /// Orthogonal complement under the standard bilinear form.
    pub fn perp(&self) -> Subspace {
        if self.basis.is_empty() {
            return Subspace::full(&self.field, self.ambient);
        }
        self.basis_matrix().kernel()
    }

    /// Image under `v -> v * M`.
    pub fn image(&self, m: &Matrix) -> Subspace {
        Subspace::from_rows(
            &self.field,
            m.cols(),
            self.basis.iter().map(|v| m.vec_mul(v)).collect(),
        )
    }

    /// Sort key: dimension followed by the flattened basis.
    pub fn key(&self) -> (usize, Vec<u32>) {
        (
            self.dim(),
            self.basis.iter().flatten().map(|e| e.code()).collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[u32]) -> Vec<Elem> {
        xs.iter().map(|&x| Elem::from_code(x)).collect()
    }

    #[test]
    fn canonical_form() {
        let f = Field::new(3, 1).unwrap();
        let a = Subspace::from_rows(&f, 3, vec![v(&[1, 1, 0]), v(&[0, 1, 1])]);
        let b = Subspace::from_rows(&f, 3, vec![v(&[1, 2, 1]), v(&[2, 0, 1])]);
        assert_eq!(a, b);
        assert_eq!(a.basis_rows(), &[v(&[1, 0, 2]), v(&[0, 1, 1])]);
    }

    #[test]
    fn intersect_and_sum() {
        let f = Field::new(2, 1).unwrap();
        let a = Subspace::from_rows(&f, 4, vec![v(&[1, 0, 0, 0]), v(&[0, 1, 0, 0])]);
        let b = Subspace::from_rows(&f, 4, vec![v(&[0, 1, 0, 0]), v(&[0, 0, 1, 0])]);
        let i = a.intersect(&b);
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&v(&[0, 1, 0, 0])));
        assert_eq!(a.sum(&b).dim(), 3);
    }

    #[test]
    fn perp_and_quotient() {
        let f = Field::new(2, 1).unwrap();
        let ones = Subspace::from_rows(&f, 4, vec![v(&[1, 1, 1, 1])]);
        let p = ones.perp();
        assert_eq!(p.dim(), 3);
        assert!(p.contains(&v(&[1, 1, 0, 0])));
        assert_eq!(ones.quotient_coords(&v(&[1, 0, 0, 0])), v(&[1, 1, 1]));
        assert_eq!(ones.quotient_coords(&v(&[0, 1, 0, 0])), v(&[1, 0, 0]));
    }
}
