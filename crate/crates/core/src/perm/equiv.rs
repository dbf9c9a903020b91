use super::{GroupAction, PermError, Permutation};

/// Looks for a bijection `phi` between the domains with
/// `phi(x^g) = phi(x)^g` for every generator, comparing the actions
/// generator by generator.
pub fn actions_equivalent(
    a: &GroupAction,
    b: &GroupAction,
) -> Result<Option<Permutation>, PermError> {
    let (ga, gb) = (a.induced_gens(), b.induced_gens());
    if ga.len() != gb.len() {
        return Err(PermError::BadParameter(
            "actions have different numbers of generators".into(),
        ));
    }
    let n = a.size();
    if n != b.size() {
        return Ok(None);
    }
    let mut phi: Vec<Option<usize>> = vec![None; n];
    let mut used = vec![false; n];
    for orbit in a.induced_group().orbits() {
        let start = orbit[0];
        let mut matched = false;
        for target in 0..n {
            if used[target] {
                continue;
            }
            if let Some(map) = try_match(ga, gb, start, target, &used) {
                for (x, y) in map {
                    phi[x] = Some(y);
                    used[y] = true;
                }
                matched = true;
                break;
            }
        }
        if !matched {
            return Ok(None);
        }
    }
    Ok(Some(Permutation::from_images(
        phi.into_iter().map(Option::unwrap).collect(),
    )?))
}

fn try_match(
    ga: &[Permutation],
    gb: &[Permutation],
    start: usize,
    target: usize,
    used: &[bool],
) -> Option<Vec<(usize, usize)>> {
    let n = used.len();
    let mut phi: Vec<Option<usize>> = vec![None; n];
    let mut taken = vec![false; n];
    phi[start] = Some(target);
    taken[target] = true;
    let mut order = vec![start];
    let mut i = 0;
    while i < order.len() {
        let x = order[i];
        let y = phi[x].unwrap();
        for (g, h) in ga.iter().zip(gb) {
            let (xg, yh) = (g.apply(x), h.apply(y));
            match phi[xg] {
                Some(z) if z != yh => return None,
                Some(_) => {}
                None => {
                    if taken[yh] || used[yh] {
                        return None;
                    }
                    phi[xg] = Some(yh);
                    taken[yh] = true;
                    order.push(xg);
                }
            }
        }
        i += 1;
    }
    Some(order.into_iter().map(|x| (x, phi[x].unwrap())).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::PermGroup;

    #[test]
    fn regular_equals_coset_of_trivial() {
        let g = PermGroup::cyclic(5);
        let nat = GroupAction::natural(&g);
        let reg = GroupAction::regular(&g).unwrap();
        assert!(actions_equivalent(&nat, &reg).unwrap().is_some());
    }

    #[test]
    fn points_versus_complements() {
        let s4 = PermGroup::symmetric(4);
        let nat = GroupAction::natural(&s4);
        let triples = GroupAction::ksubsets(&s4, 3).unwrap();
        let pairs = GroupAction::ksubsets(&s4, 2).unwrap();
        assert!(actions_equivalent(&nat, &triples).unwrap().is_some());
        assert!(actions_equivalent(&nat, &pairs).unwrap().is_none());
    }

    #[test]
    fn inequivalent_same_size() {
        // S3 on 3 points twice versus S3 regular: sizes agree, actions differ
        let s3 = PermGroup::symmetric(3);
        let nat = GroupAction::natural(&s3);
        let two = GroupAction::disjoint_union(&nat, &nat).unwrap();
        let reg = GroupAction::regular(&s3).unwrap();
        assert!(actions_equivalent(&two, &reg).unwrap().is_none());
    }
}
