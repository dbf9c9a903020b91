use super::{best_separating, witness_from_kernel, LinDimError, LinDimResult, LinDimValue, Method};
use crate::gfq::Field;
use crate::linalg::Subspace;
use crate::perm::GroupAction;
use crate::permmod::{all_submodules, submodule_lattice, FGModule, ModuleError};

fn one_point(a: &GroupAction, perm: &FGModule, method: Method, seed: u64) -> Result<LinDimResult, LinDimError> {
    let full = Subspace::full(perm.field(), a.size());
    let value = LinDimValue::Exact(0);
    let witness = witness_from_kernel(a, perm, &full, value, method, seed, true)?;
    Ok(LinDimResult {
        value,
        witness: Some(witness),
        method,
        complete: true,
        seed,
    })
}

fn exact_from_nodes(
    a: &GroupAction,
    perm: &FGModule,
    nodes: &[Subspace],
    method: Method,
    seed: u64,
) -> Result<LinDimResult, LinDimError> {
    let best = best_separating(nodes).expect("the zero submodule separates");
    let value = LinDimValue::Exact(a.size() - best.dim());
    let witness = witness_from_kernel(a, perm, best, value, method, seed, true)?;
    Ok(LinDimResult {
        value,
        witness: Some(witness),
        method,
        complete: true,
        seed,
    })
}

/// Lower bound used when the lattice could not be searched completely.
fn structural_lower_bound(a: &GroupAction) -> usize {
    if a.size() <= 1 {
        0
    } else if a.induced_group().is_cyclic() {
        1
    } else {
        2
    }
}

/// `N` minus the largest separating submodule of the permutation module.
/// An incomplete lattice gives an interval.
pub fn lindim_general(
    a: &GroupAction,
    f: &Field,
    cap: usize,
    seed: u64,
) -> Result<LinDimResult, LinDimError> {
    let method = Method::GeneralLattice;
    let perm = FGModule::permutation(a, f);
    let n = a.size();
    if n <= 1 {
        return one_point(a, &perm, method, seed);
    }
    let nodes = match submodule_lattice(&perm, cap, seed) {
        Ok(lattice) if lattice.complete => {
            return exact_from_nodes(a, &perm, &lattice.nodes, method, seed);
        }
        Ok(lattice) => lattice.nodes,
        Err(ModuleError::LatticeTooLarge(_)) => vec![Subspace::zero(f, n)],
        Err(e) => return Err(e.into()),
    };
    let best = best_separating(&nodes).expect("the zero submodule separates");
    let hi = n - best.dim();
    let lo = structural_lower_bound(a).min(hi);
    let value = if lo == hi {
        LinDimValue::Exact(hi)
    } else {
        LinDimValue::Interval { lo, hi }
    };
    let complete = lo == hi;
    let witness = witness_from_kernel(a, &perm, best, value, method, seed, complete)?;
    Ok(LinDimResult {
        value,
        witness: Some(witness),
        method,
        complete,
        seed,
    })
}

/// The same maximization over every invariant subspace, found by brute force.
pub fn lindim_oracle(a: &GroupAction, f: &Field) -> Result<LinDimResult, LinDimError> {
    let method = Method::Oracle;
    let perm = FGModule::permutation(a, f);
    if a.size() <= 1 {
        return one_point(a, &perm, method, 0);
    }
    let nodes = all_submodules(&perm)?;
    exact_from_nodes(a, &perm, &nodes, method, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{PermGroup, Permutation};
    use crate::permmod::DEFAULT_CAP;

    fn gf(q: u64) -> Field {
        Field::with_order(q).unwrap()
    }

    #[test]
    fn trivial_group_on_two_points() {
        // subspaces of GF(2)^2: <e_0> avoids e_0 - e_1, so codimension 1 works
        let a = GroupAction::natural(&PermGroup::trivial(2));
        let r = lindim_oracle(&a, &gf(2)).unwrap();
        assert_eq!(r.value, LinDimValue::Exact(1));
        assert_eq!(lindim_general(&a, &gf(2), DEFAULT_CAP, 0).unwrap().value, LinDimValue::Exact(1));
    }

    #[test]
    fn one_point_is_zero() {
        let a = GroupAction::natural(&PermGroup::trivial(1));
        for r in [
            lindim_oracle(&a, &gf(3)).unwrap(),
            lindim_general(&a, &gf(3), DEFAULT_CAP, 0).unwrap(),
        ] {
            assert_eq!(r.value, LinDimValue::Exact(0));
            assert_eq!(r.witness.unwrap().dim, 0);
        }
    }

    #[test]
    fn c6_regular_gf2() {
        let a = GroupAction::regular(&PermGroup::cyclic(6)).unwrap();
        let r = lindim_general(&a, &gf(2), DEFAULT_CAP, 0).unwrap();
        assert_eq!(r.value, LinDimValue::Exact(4));
        assert!(r.complete);
        assert_eq!(lindim_oracle(&a, &gf(2)).unwrap().value, LinDimValue::Exact(4));
    }

    #[test]
    fn cyclic_prime_order_scalars() {
        // C_5 embeds in GF(11)^* via a primitive 5th root of unity
        let a = GroupAction::natural(&PermGroup::cyclic(5));
        let r = lindim_general(&a, &gf(11), DEFAULT_CAP, 0).unwrap();
        assert_eq!(r.value, LinDimValue::Exact(1));
    }

    #[test]
    fn s4_on_cosets_of_c4() {
        let s4 = PermGroup::symmetric(4);
        let c4 = Permutation::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap();
        let a = GroupAction::cosets(&s4, &[c4]).unwrap();
        assert_eq!(a.size(), 6);
        let r3 = lindim_general(&a, &gf(3), DEFAULT_CAP, 0).unwrap();
        assert_eq!(r3.value, LinDimValue::Exact(3));
        let r2 = lindim_general(&a, &gf(2), DEFAULT_CAP, 0).unwrap();
        assert_eq!(r2.value, LinDimValue::Exact(4));
    }

    #[test]
    fn tiny_cap_gives_interval() {
        let a = GroupAction::natural(&PermGroup::trivial(4));
        let r = lindim_general(&a, &gf(2), 3, 0).unwrap();
        assert!(!r.complete);
        let LinDimValue::Interval { lo, hi } = r.value else {
            panic!("expected an interval, got {}", r.value);
        };
        assert!(lo <= 2 && hi <= 4 && lo < hi);
        assert!(r.witness.is_some());
    }
}
