use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{isomorphic, FGModule, ModuleError};
use crate::gfq::{poly, Elem};
use crate::linalg::{Matrix, Subspace};

/// Random elements tried per splitting attempt before giving up.
pub const CHOP_BUDGET: usize = 200;

fn random_algebra_element<R: Rng>(m: &FGModule, rng: &mut R) -> Matrix {
    let f = m.field();
    let gens = m.gens();
    let mut a = Matrix::zeros(f, m.dim(), m.dim());
    let terms = rng.gen_range(1..=3);
    for _ in 0..terms {
        let len = rng.gen_range(1..=3);
        let mut w = gens[rng.gen_range(0..gens.len())].clone();
        for _ in 1..len {
            w = w.mul(&gens[rng.gen_range(0..gens.len())]);
        }
        let c = Elem::from_code(rng.gen_range(1..f.q()));
        a.add_scaled(c, &w);
    }
    a
}

/// A proper nonzero submodule, or `None` when the module is certified irreducible.
fn find_split<R: Rng>(m: &FGModule, rng: &mut R) -> Result<Option<Subspace>, ModuleError> {
    let n = m.dim();
    if n <= 1 {
        return Ok(None);
    }
    let f = m.field();
    for _ in 0..CHOP_BUDGET {
        let a = random_algebra_element(m, rng);
        let cp = a.char_poly()?;
        for (g, _) in poly::factor(f, &cp, rng) {
            let deg = g.len() - 1;
            let ga = a.eval_poly(&g);
            let null = ga.left_kernel();
            let v = null.basis_rows()[0].clone();
            let s = m.spin(&[v]);
            if s.dim() < n {
                return Ok(Some(s));
            }
            if null.dim() == deg {
                let right = ga.kernel();
                let w = right.basis_rows()[0].clone();
                let t = m.spin_transposed(&[w]);
                if t.dim() < n {
                    return Ok(Some(t.perp()));
                }
                return Ok(None);
            }
        }
    }
    Err(ModuleError::ChopBudgetExhausted(CHOP_BUDGET))
}

fn chop_into<R: Rng>(m: &FGModule, rng: &mut R, out: &mut Vec<FGModule>) -> Result<(), ModuleError> {
    match find_split(m, rng)? {
        None => out.push(m.clone()),
        Some(u) => {
            chop_into(&m.submodule(&u)?, rng, out)?;
            chop_into(&m.quotient(&u)?.0, rng, out)?;
        }
    }
    Ok(())
}

/// Composition factors of one composition series, bottom first.
pub fn chop(m: &FGModule, seed: u64) -> Result<Vec<FGModule>, ModuleError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    if m.dim() > 0 {
        chop_into(m, &mut rng, &mut out)?;
    }
    Ok(out)
}

pub fn is_irreducible(m: &FGModule, seed: u64) -> Result<bool, ModuleError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(m.dim() > 0 && find_split(m, &mut rng)?.is_none())
}

/// One representative per isomorphism class of composition factors.
pub fn irreducible_classes(m: &FGModule, seed: u64) -> Result<Vec<FGModule>, ModuleError> {
    let mut classes: Vec<FGModule> = Vec::new();
    for s in chop(m, seed)? {
        let mut known = false;
        for c in &classes {
            if c.dim() == s.dim() && isomorphic(c, &s)? {
                known = true;
                break;
            }
        }
        if !known {
            classes.push(s);
        }
    }
    Ok(classes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfq::Field;
    use crate::perm::{GroupAction, PermGroup};

    fn dims(m: &FGModule, seed: u64) -> Vec<usize> {
        chop(m, seed).unwrap().iter().map(FGModule::dim).collect()
    }

    #[test]
    fn s3_natural_factors() {
        let a = GroupAction::natural(&PermGroup::symmetric(3));
        let m2 = FGModule::permutation(&a, &Field::new(2, 1).unwrap());
        let mut d = dims(&m2, 0);
        d.sort();
        assert_eq!(d, vec![1, 2]);
        let m3 = FGModule::permutation(&a, &Field::new(3, 1).unwrap());
        assert_eq!(dims(&m3, 0), vec![1, 1, 1]);
    }

    #[test]
    fn factors_are_irreducible_and_sum_up() {
        for (g, q) in [
            (PermGroup::symmetric(5), 2u64),
            (PermGroup::alternating(5), 5),
            (PermGroup::cyclic(7), 2),
            (PermGroup::dihedral(6), 3),
            (PermGroup::symmetric(6), 4),
        ] {
            let a = GroupAction::ksubsets(&g, 2).unwrap();
            let m = FGModule::permutation(&a, &Field::with_order(q).unwrap());
            for seed in [0, 1] {
                let fs = chop(&m, seed).unwrap();
                assert_eq!(fs.iter().map(FGModule::dim).sum::<usize>(), m.dim());
                for s in &fs {
                    assert!(is_irreducible(s, seed + 10).unwrap());
                }
            }
        }
    }

    #[test]
    fn one_dimensional_is_irreducible() {
        let f = Field::new(5, 1).unwrap();
        let m = FGModule::new(&f, 1, vec![Matrix::scalar(&f, 1, Elem::from_code(2))]).unwrap();
        assert_eq!(chop(&m, 0).unwrap().len(), 1);
    }
}
