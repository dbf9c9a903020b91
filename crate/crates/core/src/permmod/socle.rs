use std::collections::HashSet;

use super::{hom_space, irreducible_classes, FGModule, ModuleError};
use crate::gfq::Elem;
use crate::linalg::Subspace;

/// Largest number of hom-space vectors enumerated when listing images.
pub const ENUMERATION_LIMIT: f64 = 1e5;

#[derive(Clone, Debug)]
pub struct MinimalSubmodules {
    /// Sorted by dimension, then canonical basis.
    pub subs: Vec<Subspace>,
    /// False when some hom space was too large to enumerate.
    pub complete: bool,
}

/// All minimal submodules of `m`.
pub fn minimal_submodules(m: &FGModule, seed: u64) -> Result<MinimalSubmodules, ModuleError> {
    let classes = irreducible_classes(m, seed)?;
    minimal_submodules_with(m, &classes)
}

/// Minimal submodules, given representatives of every irreducible that can occur in `m`.
pub(crate) fn minimal_submodules_with(
    m: &FGModule,
    classes: &[FGModule],
) -> Result<MinimalSubmodules, ModuleError> {
    let f = m.field();
    let q = f.q() as f64;
    let mut out: Vec<Subspace> = Vec::new();
    let mut complete = true;
    for s in classes {
        if s.dim() > m.dim() {
            continue;
        }
        let homs = hom_space(s, m)?;
        let h = homs.len();
        if h == 0 {
            continue;
        }
        if q.powi(h as i32) > ENUMERATION_LIMIT {
            complete = false;
            for x in &homs {
                out.push(x.row_space());
            }
            continue;
        }
        // the image of X is the spin of e_0 X, so vectors already inside a
        // found image need not be spun again
        let firsts: Vec<Vec<Elem>> = homs.iter().map(|x| x.row(0).to_vec()).collect();
        let mut found: Vec<Subspace> = Vec::new();
        let mut coeffs = vec![Elem::ZERO; h];
        for lead in (0..h).rev() {
            coeffs.iter_mut().for_each(|c| *c = Elem::ZERO);
            coeffs[lead] = Elem::ONE;
            loop {
                let mut v = vec![Elem::ZERO; m.dim()];
                for (c, w) in coeffs.iter().zip(&firsts) {
                    f.axpy(&mut v, *c, w);
                }
                if !found.iter().any(|u| u.contains(&v)) {
                    found.push(m.spin(&[v]));
                }
                if !advance(&mut coeffs[lead + 1..], f.q()) {
                    break;
                }
            }
        }
        out.extend(found);
    }
    let mut seen = HashSet::new();
    out.retain(|u| seen.insert(u.clone()));
    out.sort();
    Ok(MinimalSubmodules { subs: out, complete })
}

/// Odometer over coefficient vectors; false after the last one.
fn advance(c: &mut [Elem], q: u32) -> bool {
    for x in c.iter_mut() {
        if x.code() + 1 < q {
            *x = Elem::from_code(x.code() + 1);
            return true;
        }
        *x = Elem::ZERO;
    }
    false
}

/// Least-dimensional invariant subspace of dimension at least 2.
#[derive(Clone, Debug)]
pub struct MinDimGe2 {
    pub dim: usize,
    pub sub: Subspace,
    pub complete: bool,
}

pub fn min_dim_ge2_submodule(m: &FGModule, seed: u64) -> Result<MinDimGe2, ModuleError> {
    let classes = irreducible_classes(m, seed)?;
    min_dim_ge2_with(m, &classes)
}

pub(crate) fn min_dim_ge2_with(m: &FGModule, classes: &[FGModule]) -> Result<MinDimGe2, ModuleError> {
    assert!(m.dim() >= 2, "module dimension must be at least 2");
    let mins = minimal_submodules_with(m, classes)?;
    let mut complete = mins.complete;
    let mut best: Option<Subspace> = None;
    let consider = |w: Subspace, best: &mut Option<Subspace>| {
        if best.as_ref().is_none_or(|b| w < *b) {
            *best = Some(w);
        }
    };
    for u in mins.subs.iter().filter(|u| u.dim() >= 2) {
        consider(u.clone(), &mut best);
    }
    for l in mins.subs.iter().filter(|u| u.dim() == 1) {
        let (quo, proj) = m.quotient(l)?;
        let sub_mins = minimal_submodules_with(&quo, classes)?;
        complete &= sub_mins.complete;
        for x in &sub_mins.subs {
            consider(proj.pullback(x), &mut best);
        }
    }
    let sub = best.unwrap_or_else(|| Subspace::full(m.field(), m.dim()));
    Ok(MinDimGe2 {
        dim: sub.dim(),
        sub,
        complete,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfq::Field;
    use crate::perm::{GroupAction, PermGroup};
    use crate::permmod::is_irreducible;

    fn natural(n: usize, q: u64) -> FGModule {
        FGModule::permutation(
            &GroupAction::natural(&PermGroup::symmetric(n)),
            &Field::with_order(q).unwrap(),
        )
    }

    #[test]
    fn s5_over_gf5_has_one_minimal() {
        let m = natural(5, 5);
        let mins = minimal_submodules(&m, 0).unwrap();
        assert!(mins.complete);
        assert_eq!(mins.subs.len(), 1);
        assert_eq!(mins.subs[0], m.constant_and_zero_sum().unwrap().0);
        let w = min_dim_ge2_submodule(&m, 0).unwrap();
        assert_eq!(w.dim, 4);
        assert_eq!(w.sub, m.constant_and_zero_sum().unwrap().1);
    }

    #[test]
    fn s3_over_gf2() {
        let m = natural(3, 2);
        let (c, cp) = m.constant_and_zero_sum().unwrap();
        let mins = minimal_submodules(&m, 0).unwrap();
        assert_eq!(mins.subs, vec![c, cp.clone()]);
        let w = min_dim_ge2_submodule(&m, 0).unwrap();
        assert_eq!((w.dim, w.sub), (2, cp));
    }

    #[test]
    fn minimal_submodules_are_irreducible() {
        let g = PermGroup::dihedral(5);
        let a = GroupAction::ksubsets(&g, 2).unwrap();
        let m = FGModule::permutation(&a, &Field::new(2, 1).unwrap());
        let mins = minimal_submodules(&m, 0).unwrap();
        for u in &mins.subs {
            assert!(m.is_invariant(u));
            assert!(is_irreducible(&m.submodule(u).unwrap(), 3).unwrap());
        }
    }
}
