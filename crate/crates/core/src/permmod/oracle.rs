use std::collections::HashSet;

use super::{FGModule, ModuleError};
use crate::gfq::Elem;
use crate::linalg::Subspace;

/// Largest `q^dim` accepted by [`all_submodules`].
pub const ORACLE_LIMIT: u64 = 1 << 20;

/// Every invariant subspace, by brute force: spin each projective point to
/// get the cyclic submodules, then close under sums. Sorted.
pub fn all_submodules(m: &FGModule) -> Result<Vec<Subspace>, ModuleError> {
    let f = m.field();
    let n = m.dim();
    let q = f.q() as u64;
    let total = q.checked_pow(n as u32).unwrap_or(u64::MAX);
    if total > ORACLE_LIMIT {
        return Err(ModuleError::TooLargeForOracle { q: f.q(), dim: n });
    }
    let mut cyclic: HashSet<Subspace> = HashSet::new();
    for lead in 0..n {
        let free = n - lead - 1;
        for tail in 0..q.pow(free as u32) {
            let mut v = vec![Elem::ZERO; n];
            v[lead] = Elem::ONE;
            let mut t = tail;
            for x in v.iter_mut().skip(lead + 1) {
                *x = Elem::from_code((t % q) as u32);
                t /= q;
            }
            cyclic.insert(m.spin(&[v]));
        }
    }
    let mut all: HashSet<Subspace> = HashSet::new();
    all.insert(Subspace::zero(f, n));
    let mut cyclic: Vec<Subspace> = cyclic.into_iter().collect();
    cyclic.sort();
    for c in &cyclic {
        let current: Vec<Subspace> = all.iter().cloned().collect();
        for x in current {
            all.insert(x.sum(c));
        }
    }
    let mut out: Vec<Subspace> = all.into_iter().collect();
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfq::Field;
    use crate::perm::{GroupAction, PermGroup};

    #[test]
    fn trivial_group_gives_all_subspaces() {
        let f = Field::new(2, 1).unwrap();
        let m = FGModule::permutation(&GroupAction::natural(&PermGroup::trivial(3)), &f);
        // 1 + 7 + 7 + 1 subspaces of GF(2)^3
        assert_eq!(all_submodules(&m).unwrap().len(), 16);
    }

    #[test]
    fn refuses_large() {
        let f = Field::new(3, 1).unwrap();
        let m = FGModule::permutation(&GroupAction::natural(&PermGroup::symmetric(13)), &f);
        assert!(matches!(
            all_submodules(&m),
            Err(ModuleError::TooLargeForOracle { .. })
        ));
    }
}
