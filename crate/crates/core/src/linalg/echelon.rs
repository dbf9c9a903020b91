use crate::gfq::{Elem, Field};

/// Incrementally built semi-echelon basis: each stored row has a 1 at its
/// pivot and zeros at the pivots of all earlier rows.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: Field,
    len: usize,
    rows: Vec<Vec<Elem>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(field: &Field, len: usize) -> Echelon {
        Echelon {
            field: field.clone(),
            len,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.len
    }

    pub fn rows(&self) -> &[Vec<Elem>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Subtracts multiples of stored rows so `v` vanishes at every pivot.
    pub fn reduce(&self, v: &mut [Elem]) {
        let f = &self.field;
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p];
            if !c.is_zero() {
                f.axpy(v, f.neg(c), row);
            }
        }
    }

    /// Like [`reduce`](Self::reduce), also returning the coefficient of each stored row.
    pub fn reduce_with_coeffs(&self, v: &mut [Elem]) -> Vec<Elem> {
        let f = &self.field;
        let mut coeffs = Vec::with_capacity(self.rows.len());
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p];
            coeffs.push(c);
            if !c.is_zero() {
                f.axpy(v, f.neg(c), row);
            }
        }
        coeffs
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|e| e.is_zero())
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vec<Elem>) -> bool {
        assert_eq!(v.len(), self.len, "vector length");
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|e| !e.is_zero()) else {
            return false;
        };
        let inv = self.field.inv(v[p]).expect("nonzero");
        self.field.scale(&mut v, inv);
        self.rows.push(v);
        self.pivots.push(p);
        true
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.len
    }
}
