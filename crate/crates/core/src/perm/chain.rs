use rand::Rng;

use super::Permutation;

#[derive(Clone, Debug)]
struct Level {
    base: usize,
    gens: Vec<Permutation>,
    orbit: Vec<usize>,
    trans: Vec<Option<Permutation>>,
    trans_inv: Vec<Option<Permutation>>,
}

impl Level {
    fn new(degree: usize, base: usize) -> Level {
        let mut trans = vec![None; degree];
        let mut trans_inv = vec![None; degree];
        trans[base] = Some(Permutation::identity(degree));
        trans_inv[base] = Some(Permutation::identity(degree));
        Level {
            base,
            gens: Vec::new(),
            orbit: vec![base],
            trans,
            trans_inv,
        }
    }
}

/// Base and strong generating set built by the Schreier-Sims algorithm.
#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    prefix: Vec<usize>,
    levels: Vec<Level>,
}

impl StabChain {
    /// Builds a chain whose base starts with `prefix`; prefix points fixed by
    /// the group give levels with trivial orbits.
    pub fn build(degree: usize, gens: &[Permutation], prefix: &[usize]) -> StabChain {
        let mut c = StabChain {
            degree,
            prefix: prefix.to_vec(),
            levels: Vec::new(),
        };
        for g in gens {
            if !g.is_identity() && !c.sift(g, 0).0.is_identity() {
                c.add_gen(0, g.clone());
            }
        }
        c
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    pub fn orbit(&self, level: usize) -> &[usize] {
        &self.levels[level].orbit
    }

    pub fn level_gens(&self, level: usize) -> &[Permutation] {
        self.levels.get(level).map_or(&[], |l| &l.gens)
    }

    /// Transversal element taking the level's base point to `point`.
    pub fn transversal(&self, level: usize, point: usize) -> Option<&Permutation> {
        self.levels[level].trans[point].as_ref()
    }

    /// The chain of the stabiliser of the first `k` base points.
    pub fn tail(&self, k: usize) -> StabChain {
        StabChain {
            degree: self.degree,
            prefix: self.prefix.iter().skip(k).copied().collect(),
            levels: self.levels.iter().skip(k).cloned().collect(),
        }
    }

    pub fn order(&self) -> u128 {
        self.levels
            .iter()
            .fold(1u128, |acc, l| acc * l.orbit.len() as u128)
    }

    /// Strips `g` through the levels from `start`; returns the residue and
    /// the level where stripping stopped.
    pub fn sift(&self, g: &Permutation, start: usize) -> (Permutation, usize) {
        let mut g = g.clone();
        for (i, level) in self.levels.iter().enumerate().skip(start) {
            let beta = g.apply(level.base);
            match &level.trans_inv[beta] {
                None => return (g, i),
                Some(u) => g = g.mul(u),
            }
        }
        (g, self.levels.len())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.sift(g, 0).0.is_identity()
    }

    fn add_gen(&mut self, i: usize, g: Permutation) {
        if i == self.levels.len() {
            let base = match self.prefix.get(i) {
                Some(&b) => b,
                None => g.least_moved_point().expect("non-identity generator"),
            };
            self.levels.push(Level::new(self.degree, base));
        }
        let level = &mut self.levels[i];
        level.gens.push(g);
        let new_gen = level.gens.len() - 1;
        let old_len = level.orbit.len();
        for idx in 0..old_len {
            let beta = level.orbit[idx];
            extend(level, beta, new_gen);
        }
        let mut idx = old_len;
        while idx < level.orbit.len() {
            let beta = level.orbit[idx];
            for s in 0..level.gens.len() {
                extend(level, beta, s);
            }
            idx += 1;
        }
        let mut pairs: Vec<(usize, usize)> = level.orbit.iter().map(|&b| (b, new_gen)).collect();
        for &b in &level.orbit[old_len..] {
            pairs.extend((0..new_gen).map(|s| (b, s)));
        }
        for (beta, s) in pairs {
            let level = &self.levels[i];
            let gen = &level.gens[s];
            let target = gen.apply(beta);
            let h = level.trans[beta]
                .as_ref()
                .unwrap()
                .mul(gen)
                .mul(level.trans_inv[target].as_ref().unwrap());
            if h.is_identity() {
                continue;
            }
            let (r, _) = self.sift(&h, i + 1);
            if !r.is_identity() {
                self.add_gen(i + 1, r);
            }
        }
    }

    pub fn elements(&self) -> Vec<Permutation> {
        let mut out = vec![Permutation::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * level.orbit.len());
            for x in &out {
                for &b in &level.orbit {
                    next.push(x.mul(level.trans[b].as_ref().unwrap()));
                }
            }
            out = next;
        }
        out
    }

    pub fn random_element<R: Rng>(&self, rng: &mut R) -> Permutation {
        let mut g = Permutation::identity(self.degree);
        for level in self.levels.iter().rev() {
            let b = level.orbit[rng.gen_range(0..level.orbit.len())];
            g = g.mul(level.trans[b].as_ref().unwrap());
        }
        g
    }

    /// Lexicographically least sequence of base images `(b_i)^(h x)` over
    /// `h` in this group, where `base` is a base of a group containing both.
    /// This chain must have been built with `base` as its prefix.
    pub fn min_coset_image(&self, x: &Permutation, base: &[usize]) -> Vec<usize> {
        let mut y = x.clone();
        let mut key = Vec::with_capacity(base.len());
        for (i, &b) in base.iter().enumerate() {
            match self.levels.get(i) {
                Some(level) if level.orbit.len() > 1 => {
                    debug_assert_eq!(level.base, b);
                    let gamma = *level
                        .orbit
                        .iter()
                        .min_by_key(|&&g| y.apply(g))
                        .unwrap();
                    key.push(y.apply(gamma));
                    y = level.trans[gamma].as_ref().unwrap().mul(&y);
                }
                _ => key.push(y.apply(b)),
            }
        }
        key
    }
}

fn extend(level: &mut Level, beta: usize, s: usize) {
    let gen = &level.gens[s];
    let gamma = gen.apply(beta);
    if level.trans[gamma].is_none() {
        let u = level.trans[beta].as_ref().unwrap().mul(gen);
        level.trans_inv[gamma] = Some(u.inverse());
        level.trans[gamma] = Some(u);
        level.orbit.push(gamma);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::PermGroup;

    #[test]
    fn elements_are_distinct_members() {
        let g = PermGroup::dihedral(6);
        let els = g.elements();
        assert_eq!(els.len(), 12);
        let mut sorted = els.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 12);
        assert!(els.iter().all(|e| g.contains(e)));
    }

    #[test]
    fn prefix_with_fixed_points() {
        let g = PermGroup::cyclic(3);
        let big: Vec<Permutation> = g.gens().iter().map(|p| p.extend(5)).collect();
        let c = StabChain::build(5, &big, &[4, 3, 0]);
        assert_eq!(c.order(), 3);
        assert_eq!(c.base()[..2], [4, 3]);
    }

    #[test]
    fn rejects_non_members() {
        let a5 = PermGroup::alternating(5);
        let t = Permutation::from_cycles(5, &[vec![0, 1]]).unwrap();
        assert!(!a5.contains(&t));
        assert!(a5.contains(&t.mul(&Permutation::from_cycles(5, &[vec![2, 3]]).unwrap())));
    }
}
