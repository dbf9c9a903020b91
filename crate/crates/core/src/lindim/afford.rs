use std::collections::HashMap;

use super::LinDimError;
use crate::gfq::Elem;
use crate::perm::{actions_equivalent, GroupAction, PointLabel, Permutation};
use crate::permmod::FGModule;

/// Point images `phi` making `m` afford `a`, read off the orbit of `v`:
/// the orbit must be as large as the domain and carry an equivalent action.
pub fn afford_from_vector(
    m: &FGModule,
    v: &[Elem],
    a: &GroupAction,
) -> Result<Vec<Vec<Elem>>, LinDimError> {
    let n = a.size();
    if m.gens().len() != a.induced_gens().len() {
        return Err(LinDimError::BadParameter(format!(
            "module has {} generators, action has {}",
            m.gens().len(),
            a.induced_gens().len()
        )));
    }
    let mut orbit: Vec<Vec<Elem>> = vec![v.to_vec()];
    let mut index: HashMap<Vec<Elem>, usize> = HashMap::new();
    index.insert(v.to_vec(), 0);
    let ng = m.gens().len();
    let mut images: Vec<Vec<usize>> = vec![Vec::new(); ng];
    let mut head = 0;
    while head < orbit.len() {
        for (g, img) in images.iter_mut().enumerate() {
            let w = m.act(&orbit[head], g);
            let j = match index.get(&w) {
                Some(&j) => j,
                None => {
                    if orbit.len() >= n {
                        return Err(LinDimError::OrbitTooLong(n));
                    }
                    index.insert(w.clone(), orbit.len());
                    orbit.push(w);
                    orbit.len() - 1
                }
            };
            img.push(j);
        }
        head += 1;
    }
    if orbit.len() != n {
        return Err(LinDimError::NoEquivalence);
    }
    let induced = images
        .into_iter()
        .map(Permutation::from_images)
        .collect::<Result<Vec<_>, _>>()?;
    let labels = (0..n).map(PointLabel::Point).collect();
    let on_orbit = GroupAction::from_induced(a.group().clone(), labels, induced)?;
    let map = actions_equivalent(a, &on_orbit)?.ok_or(LinDimError::NoEquivalence)?;
    Ok((0..n).map(|x| orbit[map.apply(x)].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfq::Field;
    use crate::linalg::unit_vector;
    use crate::perm::PermGroup;

    #[test]
    fn standard_basis_from_e0() {
        let f = Field::new(3, 1).unwrap();
        let a = GroupAction::natural(&PermGroup::symmetric(4));
        let m = FGModule::permutation(&a, &f);
        let phi = afford_from_vector(&m, &unit_vector(4, 0), &a).unwrap();
        assert_eq!(phi, (0..4).map(|x| unit_vector(4, x)).collect::<Vec<_>>());
    }

    #[test]
    fn fixed_vector_has_no_equivalence() {
        let f = Field::new(2, 1).unwrap();
        let a = GroupAction::natural(&PermGroup::symmetric(3));
        let m = FGModule::permutation(&a, &f);
        let err = afford_from_vector(&m, &[Elem::ONE; 3], &a).unwrap_err();
        assert_eq!(err, LinDimError::NoEquivalence);
    }

    #[test]
    fn orbit_too_long() {
        // e_0 has three images, the sign action only two points
        let f = Field::new(5, 1).unwrap();
        let g = PermGroup::symmetric(3);
        let a = GroupAction::natural(&g);
        let m = FGModule::permutation(&a, &f);
        let two = GroupAction::from_induced(
            g.clone(),
            vec![PointLabel::Point(0), PointLabel::Point(1)],
            g.gens()
                .iter()
                .map(|p| {
                    let odd = p.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 1;
                    Permutation::from_images(if odd { vec![1, 0] } else { vec![0, 1] }).unwrap()
                })
                .collect(),
        )
        .unwrap();
        let err = afford_from_vector(&m, &unit_vector(3, 0), &two).unwrap_err();
        assert_eq!(err, LinDimError::OrbitTooLong(2));
    }
}
