//! Modules for a group given by generator matrices, with the permutation
//! module of an action as the main source.
//!
//! The convention throughout is the row one: `e_x * M_g = e_{x^g}`.

mod hom;
mod lattice;
mod meataxe;
mod oracle;
mod socle;

use std::sync::Arc;

use thiserror::Error;

use crate::gfq::{Elem, Field};
use crate::linalg::{unit_vector, Echelon, LinalgError, Matrix, Subspace};
use crate::perm::GroupAction;

pub use hom::{hom_space, isomorphic};
pub use lattice::{format_lattice, submodule_lattice, SubmoduleLattice, DEFAULT_CAP};
pub use meataxe::{chop, irreducible_classes, is_irreducible};
pub use oracle::{all_submodules, ORACLE_LIMIT};
pub use socle::{min_dim_ge2_submodule, minimal_submodules, MinimalSubmodules};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModuleError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("NotInvariant: subspace is not invariant under generator {0}")]
    NotInvariant(usize),
    #[error("NotInvertible: generator {0} is singular")]
    NotInvertible(usize),
    #[error("GeneratorMismatch: {0} vs {1} generators")]
    GeneratorMismatch(usize, usize),
    #[error("ChopBudgetExhausted: no split or certificate after {0} random elements")]
    ChopBudgetExhausted(usize),
    #[error("LatticeTooLarge: first level has more than {0} nodes")]
    LatticeTooLarge(usize),
    #[error("TooLargeForOracle: {q}^{dim} exceeds 2^20")]
    TooLargeForOracle { q: u32, dim: usize },
    #[error("MissingProvenance: module does not come from an action")]
    MissingProvenance,
}

/// A finite-dimensional module: one invertible matrix per group generator.
#[derive(Clone, Debug)]
pub struct FGModule {
    field: Field,
    dim: usize,
    gens: Vec<Matrix>,
    action: Option<Arc<GroupAction>>,
}

impl FGModule {
    pub fn new(field: &Field, dim: usize, gens: Vec<Matrix>) -> Result<FGModule, ModuleError> {
        for (i, g) in gens.iter().enumerate() {
            if g.rows() != dim || g.cols() != dim {
                return Err(LinalgError::ShapeMismatch(format!(
                    "generator {i} is {}x{}, module dimension {dim}",
                    g.rows(),
                    g.cols()
                ))
                .into());
            }
            if g.field() != field {
                return Err(LinalgError::FieldMismatch(field.to_string(), g.field().to_string()).into());
            }
            if !g.is_invertible() {
                return Err(ModuleError::NotInvertible(i));
            }
        }
        let gens = if gens.is_empty() {
            vec![Matrix::identity(field, dim)]
        } else {
            gens
        };
        Ok(FGModule {
            field: field.clone(),
            dim,
            gens,
            action: None,
        })
    }

    fn unchecked(field: &Field, dim: usize, gens: Vec<Matrix>) -> FGModule {
        FGModule {
            field: field.clone(),
            dim,
            gens,
            action: None,
        }
    }

    /// The permutation module `F^Omega`.
    pub fn permutation(action: &GroupAction, field: &Field) -> FGModule {
        let gens = action
            .induced_gens()
            .iter()
            .map(|p| Matrix::permutation(field, &p.images()))
            .collect();
        FGModule {
            field: field.clone(),
            dim: action.size(),
            gens,
            action: Some(Arc::new(action.clone())),
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gens(&self) -> &[Matrix] {
        &self.gens
    }

    pub fn action(&self) -> Option<&GroupAction> {
        self.action.as_deref()
    }

    pub fn act(&self, v: &[Elem], gen: usize) -> Vec<Elem> {
        self.gens[gen].vec_mul(v)
    }

    pub fn is_invariant(&self, u: &Subspace) -> bool {
        self.check_invariant(u).is_ok()
    }

    pub fn check_invariant(&self, u: &Subspace) -> Result<(), ModuleError> {
        for (i, g) in self.gens.iter().enumerate() {
            if !u.basis_rows().iter().all(|v| u.contains(&g.vec_mul(v))) {
                return Err(ModuleError::NotInvariant(i));
            }
        }
        Ok(())
    }

    /// Least invariant subspace containing the seeds.
    pub fn spin(&self, seeds: &[Vec<Elem>]) -> Subspace {
        spin_with(&self.field, self.dim, &self.gens, seeds)
    }

    /// Dual-side spin under the transposed generators.
    pub(crate) fn spin_transposed(&self, seeds: &[Vec<Elem>]) -> Subspace {
        let gens: Vec<Matrix> = self.gens.iter().map(Matrix::transpose).collect();
        spin_with(&self.field, self.dim, &gens, seeds)
    }

    /// The action on an invariant subspace, in the coordinates of its canonical basis.
    pub fn submodule(&self, u: &Subspace) -> Result<FGModule, ModuleError> {
        self.check_invariant(u)?;
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let rows: Vec<Vec<Elem>> = u
                    .basis_rows()
                    .iter()
                    .map(|b| u.coords_in(&g.vec_mul(b)).expect("invariant"))
                    .collect();
                Matrix::from_rows(&self.field, u.dim(), &rows).expect("square")
            })
            .collect();
        Ok(FGModule::unchecked(&self.field, u.dim(), gens))
    }

    /// The quotient module `M / U` in the quotient coordinates of `U`.
    pub fn quotient(&self, u: &Subspace) -> Result<(FGModule, Projection), ModuleError> {
        self.check_invariant(u)?;
        let free = u.free_coords();
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let rows: Vec<Vec<Elem>> = free
                    .iter()
                    .map(|&j| u.quotient_coords_with(&free, g.row(j)))
                    .collect();
                Matrix::from_rows(&self.field, free.len(), &rows).expect("square")
            })
            .collect();
        Ok((
            FGModule::unchecked(&self.field, free.len(), gens),
            Projection {
                kernel: u.clone(),
                free,
            },
        ))
    }

    /// Matrix of an arbitrary element given as a matrix on this module's
    /// ambient space, transported to the quotient by `proj`.
    pub fn quotient_matrix(proj: &Projection, m: &Matrix) -> Matrix {
        let rows: Vec<Vec<Elem>> = proj.free.iter().map(|&j| proj.apply(m.row(j))).collect();
        Matrix::from_rows(m.field(), proj.free.len(), &rows).expect("square")
    }

    /// Fixed points of the whole group.
    pub fn fixed_space(&self) -> Subspace {
        let id = Matrix::identity(&self.field, self.dim);
        let diffs: Vec<Matrix> = self.gens.iter().map(|g| g.sub(&id)).collect();
        let refs: Vec<&Matrix> = diffs.iter().collect();
        if self.dim == 0 {
            return Subspace::zero(&self.field, 0);
        }
        Matrix::hconcat(&refs).left_kernel()
    }

    /// Contragredient module: generators replaced by inverse transposes.
    pub fn dual(&self) -> FGModule {
        let gens = self
            .gens
            .iter()
            .map(|g| g.inverse().expect("invertible generator").transpose())
            .collect();
        FGModule::unchecked(&self.field, self.dim, gens)
    }

    /// The module restricted to the subgroup generated by the given words,
    /// each a list of generator indices.
    pub fn restrict_to_words(&self, words: &[Vec<usize>]) -> FGModule {
        let gens = words
            .iter()
            .map(|w| {
                w.iter().fold(Matrix::identity(&self.field, self.dim), |acc, &i| {
                    acc.mul(&self.gens[i])
                })
            })
            .collect();
        FGModule::unchecked(&self.field, self.dim, gens)
    }

    /// Module with the given generator matrices (already validated by the caller).
    pub fn with_gens(&self, gens: Vec<Matrix>) -> FGModule {
        FGModule::unchecked(&self.field, self.dim, gens)
    }

    /// The constant line `C` and its perp, the zero-sum hyperplane.
    pub fn constant_and_zero_sum(&self) -> Result<(Subspace, Subspace), ModuleError> {
        if self.action.is_none() {
            return Err(ModuleError::MissingProvenance);
        }
        let c = Subspace::from_rows(&self.field, self.dim, vec![vec![Elem::ONE; self.dim]]);
        let perp = c.perp();
        Ok((c, perp))
    }

    /// Partition of the domain by `e_a - e_b` lying in `u`.
    pub fn submodule_congruence(&self, u: &Subspace) -> Result<Vec<Vec<usize>>, ModuleError> {
        if self.action.is_none() {
            return Err(ModuleError::MissingProvenance);
        }
        self.check_invariant(u)?;
        let free = u.free_coords();
        let mut classes: Vec<(Vec<Elem>, Vec<usize>)> = Vec::new();
        for x in 0..self.dim {
            let key = u.quotient_coords_with(&free, &unit_vector(self.dim, x));
            match classes.iter_mut().find(|(k, _)| *k == key) {
                Some((_, part)) => part.push(x),
                None => classes.push((key, vec![x])),
            }
        }
        Ok(classes.into_iter().map(|(_, p)| p).collect())
    }
}

/// Projection `F^n -> F^n / U` onto quotient coordinates.
#[derive(Clone, Debug)]
pub struct Projection {
    kernel: Subspace,
    free: Vec<usize>,
}

impl Projection {
    pub fn kernel(&self) -> &Subspace {
        &self.kernel
    }

    pub fn apply(&self, v: &[Elem]) -> Vec<Elem> {
        self.kernel.quotient_coords_with(&self.free, v)
    }

    /// Preimage of a subspace of the quotient.
    pub fn pullback(&self, x: &Subspace) -> Subspace {
        let mut rows: Vec<Vec<Elem>> = self.kernel.basis_rows().to_vec();
        rows.extend(x.basis_rows().iter().map(|c| self.kernel.lift(c)));
        Subspace::from_rows(self.kernel.field(), self.kernel.ambient_dim(), rows)
    }
}

pub(crate) fn spin_with(field: &Field, dim: usize, gens: &[Matrix], seeds: &[Vec<Elem>]) -> Subspace {
    let mut e = Echelon::new(field, dim);
    for s in seeds {
        e.insert(s.clone());
    }
    let mut idx = 0;
    while idx < e.rank() && !e.is_full() {
        let v = e.rows()[idx].clone();
        for g in gens {
            e.insert(g.vec_mul(&v));
            if e.is_full() {
                break;
            }
        }
        idx += 1;
    }
    Subspace::from_echelon(&e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{GroupAction, PermGroup};

    fn nat(n: usize, q: u64) -> FGModule {
        let a = GroupAction::natural(&PermGroup::symmetric(n));
        FGModule::permutation(&a, &Field::with_order(q).unwrap())
    }

    #[test]
    fn spin_examples() {
        let m = nat(3, 3);
        let f = m.field().clone();
        assert_eq!(m.spin(&[vec![Elem::ZERO; 3]]).dim(), 0);
        assert_eq!(m.spin(&[unit_vector(3, 0)]).dim(), 3);
        let d = vec![Elem::ONE, f.neg(Elem::ONE), Elem::ZERO];
        let s = m.spin(&[d]);
        assert_eq!(s.dim(), 2);
        assert_eq!(s, m.constant_and_zero_sum().unwrap().1);
    }

    #[test]
    fn constant_line() {
        let (c, cp) = nat(5, 5).constant_and_zero_sum().unwrap();
        assert!(cp.contains_subspace(&c));
        let (c, cp) = nat(3, 2).constant_and_zero_sum().unwrap();
        assert_eq!(c.intersect(&cp).dim(), 0);
        assert_eq!(c.sum(&cp).dim(), 3);
        let (c, cp) = nat(1, 2).constant_and_zero_sum().unwrap();
        assert_eq!((c.dim(), cp.dim()), (1, 0));
    }

    #[test]
    fn fixed_space_counts_orbits() {
        let g = PermGroup::cyclic(3);
        let a = GroupAction::disjoint_union(&GroupAction::natural(&g), &GroupAction::natural(&g)).unwrap();
        let m = FGModule::permutation(&a, &Field::new(2, 1).unwrap());
        assert_eq!(m.fixed_space().dim(), 2);
        let triv = FGModule::permutation(
            &GroupAction::natural(&PermGroup::trivial(3)),
            &Field::new(2, 1).unwrap(),
        );
        assert_eq!(triv.gens().len(), 1);
        assert_eq!(triv.fixed_space().dim(), 3);
    }

    #[test]
    fn quotient_by_zero_sum() {
        let m = nat(3, 3);
        let (_, cp) = m.constant_and_zero_sum().unwrap();
        let (q, proj) = m.quotient(&cp).unwrap();
        assert_eq!(q.dim(), 1);
        assert!(q.gens().iter().all(Matrix::is_identity));
        let imgs: Vec<_> = (0..3).map(|i| proj.apply(&unit_vector(3, i))).collect();
        assert!(imgs.windows(2).all(|w| w[0] == w[1]));
        let (q0, _) = m.quotient(&Subspace::zero(m.field(), 3)).unwrap();
        assert_eq!(q0.gens(), m.gens());
    }

    #[test]
    fn quotient_rejects_non_invariant() {
        let m = nat(3, 2);
        let u = Subspace::from_rows(m.field(), 3, vec![unit_vector(3, 0)]);
        assert!(matches!(m.quotient(&u), Err(ModuleError::NotInvariant(_))));
    }

    #[test]
    fn congruence_of_c6() {
        let a = GroupAction::regular(&PermGroup::cyclic(6)).unwrap();
        let m = FGModule::permutation(&a, &Field::new(2, 1).unwrap());
        // locate the regular points 0 and 3 through the labels
        let g = &a.induced_gens()[0];
        let three = g.pow(3).apply(0);
        let mut seed = unit_vector(6, 0);
        seed[three] = Elem::ONE;
        let u = m.spin(&[seed]);
        let parts = m.submodule_congruence(&u).unwrap();
        assert_eq!(parts.len(), 3);
        for p in &parts {
            assert_eq!(p.len(), 2);
            assert_eq!(g.pow(3).apply(p[0]), p[1]);
        }
        assert_eq!(m.submodule_congruence(&Subspace::zero(m.field(), 6)).unwrap().len(), 6);
        assert_eq!(m.submodule_congruence(&Subspace::full(m.field(), 6)).unwrap().len(), 1);
    }
}
