use super::{witness_from_kernel, LinDimError, LinDimResult, LinDimValue, Method};
use crate::gfq::Field;
use crate::perm::GroupAction;
use crate::permmod::{min_dim_ge2_submodule, FGModule};

/// For a primitive action with non-cyclic induced group: the least dimension
/// of a submodule of dimension at least 2, witnessed by the quotient by its perp.
pub fn lindim_primitive(a: &GroupAction, f: &Field, seed: u64) -> Result<LinDimResult, LinDimError> {
    if !a.is_transitive() || !a.is_primitive() {
        return Err(LinDimError::NotPrimitive);
    }
    if a.induced_group().is_cyclic() {
        return Err(LinDimError::UseGeneralPath);
    }
    let method = Method::PrimitiveFastPath;
    let perm = FGModule::permutation(a, f);
    let found = min_dim_ge2_submodule(&perm, seed)?;
    let value = if found.complete {
        LinDimValue::Exact(found.dim)
    } else {
        LinDimValue::Interval { lo: 2, hi: found.dim }
    };
    let kernel = found.sub.perp();
    let witness = witness_from_kernel(a, &perm, &kernel, value, method, seed, found.complete)?;
    Ok(LinDimResult {
        value,
        witness: Some(witness),
        method,
        complete: found.complete,
        seed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{catalog, PermGroup};

    #[test]
    fn s5_natural_gf5() {
        let a = GroupAction::natural(&PermGroup::symmetric(5));
        let r = lindim_primitive(&a, &Field::new(5, 1).unwrap(), 0).unwrap();
        assert_eq!(r.value, LinDimValue::Exact(4));
        assert_eq!(r.method, Method::PrimitiveFastPath);
    }

    #[test]
    fn psl32_on_seven_points_gf2() {
        let g = catalog::get("PSL32").unwrap();
        let a = GroupAction::natural(&g);
        let r = lindim_primitive(&a, &Field::new(2, 1).unwrap(), 0).unwrap();
        assert_eq!(r.value, LinDimValue::Exact(3));
    }

    #[test]
    fn preconditions() {
        let f = Field::new(2, 1).unwrap();
        let c5 = GroupAction::natural(&PermGroup::cyclic(5));
        assert_eq!(lindim_primitive(&c5, &f, 0).unwrap_err(), LinDimError::UseGeneralPath);
        let c6 = GroupAction::natural(&PermGroup::cyclic(6));
        assert_eq!(lindim_primitive(&c6, &f, 0).unwrap_err(), LinDimError::NotPrimitive);
    }
}
