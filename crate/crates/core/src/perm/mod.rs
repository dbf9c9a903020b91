//! Permutation groups and their actions.
//!
//! Points are `0..n` internally and `1..=n` in text. Permutations act on the
//! right: the image of `x` under `gh` is the image under `h` of the image under `g`.

mod action;
mod blocks;
pub mod catalog;
mod chain;
mod equiv;
mod text;

use std::fmt;
use std::sync::OnceLock;

use rand::Rng;
use thiserror::Error;

pub use action::{ActionDomain, GroupAction, PointLabel};
pub use blocks::minimal_block;
pub use chain::StabChain;
pub use equiv::actions_equivalent;
pub use text::{format_cycles, parse_cycles, parse_group_file, write_group_file};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("NotAPermutation: {0}")]
    NotAPermutation(String),
    #[error("DegreeMismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("ParseError at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("NotASubgroup: generator {0} is outside the group")]
    NotASubgroup(usize),
    #[error("IndexTooLarge: index {0} exceeds 100000")]
    IndexTooLarge(u128),
    #[error("DomainTooLarge: {0} points")]
    DomainTooLarge(u128),
    #[error("BadParameter: {0}")]
    BadParameter(String),
    #[error("UnknownGroup: {0}")]
    UnknownGroup(String),
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_cycles(self))
    }
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation {
            images: (0..n as u32).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Permutation, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(PermError::NotAPermutation(format!("{images:?}")));
            }
            seen[x] = true;
        }
        Ok(Permutation {
            images: images.into_iter().map(|x| x as u32).collect(),
        })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Permutation {
        Permutation { images }
    }

    /// Builds a permutation of `0..n` from disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Permutation, PermError> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for c in cycles {
            for (i, &x) in c.iter().enumerate() {
                if x >= n || touched[x] {
                    return Err(PermError::NotAPermutation(format!("cycle {c:?}")));
                }
                touched[x] = true;
                images[x] = c[(i + 1) % c.len()];
            }
        }
        Permutation::from_images(images)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize).collect()
    }

    pub(crate) fn raw(&self) -> &[u32] {
        &self.images
    }

    /// `self` followed by `other`.
    pub fn mul(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    pub fn pow(&self, e: i64) -> Permutation {
        let mut base = if e < 0 { self.inverse() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn least_moved_point(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &x)| i as u32 != x)
            .map(|(i, _)| i)
    }

    /// Non-trivial cycles, each starting at its least point, in order of that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] || self.apply(s) == s {
                continue;
            }
            let mut c = vec![s];
            seen[s] = true;
            let mut x = self.apply(s);
            while x != s {
                seen[x] = true;
                c.push(x);
                x = self.apply(x);
            }
            out.push(c);
        }
        out
    }

    pub fn order(&self) -> u128 {
        self.cycles()
            .iter()
            .fold(1u128, |acc, c| lcm(acc, c.len() as u128))
    }

    /// Extends to a larger degree by fixing the new points.
    pub fn extend(&self, n: usize) -> Permutation {
        let mut images = self.images.clone();
        images.extend(self.degree() as u32..n as u32);
        Permutation { images }
    }

    /// Conjugates by relabelling: point `x` becomes `shift + x` in a domain of size `n`.
    pub fn shifted(&self, shift: usize, n: usize) -> Permutation {
        let mut images: Vec<u32> = (0..n as u32).collect();
        for (i, &x) in self.images.iter().enumerate() {
            images[shift + i] = shift as u32 + x;
        }
        Permutation { images }
    }
}

pub(crate) fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u128, b: u128) -> u128 {
    a / gcd(a, b) * b
}

/// A permutation group given by generators, with a lazily built stabiliser chain.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    gens: Vec<Permutation>,
    chain: OnceLock<StabChain>,
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PermGroup(degree {}, gens {:?})", self.degree, self.gens)
    }
}

impl PermGroup {
    pub fn new(degree: usize, gens: Vec<Permutation>) -> Result<PermGroup, PermError> {
        for g in &gens {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch {
                    expected: degree,
                    got: g.degree(),
                });
            }
        }
        Ok(PermGroup {
            degree,
            gens,
            chain: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup::new(degree, Vec::new()).unwrap()
    }

    pub fn symmetric(n: usize) -> PermGroup {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Permutation::from_cycles(n, &[(0..n).collect()]).unwrap());
            if n > 2 {
                gens.push(Permutation::from_cycles(n, &[vec![0, 1]]).unwrap());
            }
        }
        PermGroup::new(n, gens).unwrap()
    }

    pub fn alternating(n: usize) -> PermGroup {
        let gens = (2..n)
            .map(|k| Permutation::from_cycles(n, &[vec![0, 1, k]]).unwrap())
            .collect();
        PermGroup::new(n, gens).unwrap()
    }

    pub fn cyclic(n: usize) -> PermGroup {
        let gens = if n >= 2 {
            vec![Permutation::from_cycles(n, &[(0..n).collect()]).unwrap()]
        } else {
            Vec::new()
        };
        PermGroup::new(n, gens).unwrap()
    }

    /// Dihedral group of order `2n` on `n` points.
    pub fn dihedral(n: usize) -> PermGroup {
        let mut g = PermGroup::cyclic(n).gens;
        if n >= 3 {
            let refl: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
            g.push(Permutation::from_images(refl).unwrap());
        }
        PermGroup::new(n, g).unwrap()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn gens(&self) -> &[Permutation] {
        &self.gens
    }

    pub fn chain(&self) -> &StabChain {
        self.chain
            .get_or_init(|| StabChain::build(self.degree, &self.gens, &[]))
    }

    pub fn order(&self) -> u128 {
        self.chain().order()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.chain().contains(g)
    }

    pub fn is_trivial(&self) -> bool {
        self.gens.iter().all(Permutation::is_identity)
    }

    pub fn orbit(&self, x: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        let mut orbit = vec![x];
        seen[x] = true;
        let mut i = 0;
        while i < orbit.len() {
            let y = orbit[i];
            for g in &self.gens {
                let z = g.apply(y);
                if !seen[z] {
                    seen[z] = true;
                    orbit.push(z);
                }
            }
            i += 1;
        }
        orbit
    }

    /// Orbits, each sorted, in order of their least point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for x in 0..self.degree {
            if !seen[x] {
                let mut o = self.orbit(x);
                for &y in &o {
                    seen[y] = true;
                }
                o.sort_unstable();
                out.push(o);
            }
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1 || self.orbit(0).len() == self.degree
    }

    /// Transitive with no non-trivial block system.
    pub fn is_primitive(&self) -> bool {
        if !self.is_transitive() {
            return false;
        }
        if self.degree <= 2 {
            return true;
        }
        (1..self.degree).all(|b| minimal_block(self, 0, b).len() == self.degree)
    }

    pub fn is_abelian(&self) -> bool {
        self.gens.iter().enumerate().all(|(i, a)| {
            self.gens[i + 1..]
                .iter()
                .all(|b| a.mul(b) == b.mul(a))
        })
    }

    /// Exact test: an abelian group is cyclic exactly when the lcm of its
    /// generators' orders equals the group order.
    pub fn is_cyclic(&self) -> bool {
        if !self.is_abelian() {
            return false;
        }
        let exponent = self.gens.iter().fold(1u128, |acc, g| lcm(acc, g.order()));
        exponent == self.order()
    }

    /// Point stabiliser, generated by the strong generators fixing `x`.
    pub fn stabilizer(&self, x: usize) -> PermGroup {
        let chain = StabChain::build(self.degree, &self.gens, &[x]);
        let gens = chain.level_gens(1).to_vec();
        let out = PermGroup::new(self.degree, gens).unwrap();
        let _ = out.chain.set(chain.tail(1));
        out
    }

    /// All elements; intended for small groups only.
    pub fn elements(&self) -> Vec<Permutation> {
        assert!(self.order() <= 10_000_000, "group too large to enumerate");
        self.chain().elements()
    }

    pub fn random_element<R: Rng>(&self, rng: &mut R) -> Permutation {
        self.chain().random_element(rng)
    }

    /// Subgroup generated by the given elements, which must lie in this group.
    pub fn subgroup(&self, gens: Vec<Permutation>) -> Result<PermGroup, PermError> {
        for (i, g) in gens.iter().enumerate() {
            if !self.contains(g) {
                return Err(PermError::NotASubgroup(i + 1));
            }
        }
        PermGroup::new(self.degree, gens)
    }

    /// Generators, substituting the identity when there are none.
    pub fn gens_or_identity(&self) -> Vec<Permutation> {
        if self.gens.is_empty() {
            vec![Permutation::identity(self.degree)]
        } else {
            self.gens.clone()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn right_action_composition() {
        let g = Permutation::from_cycles(3, &[vec![0, 1]]).unwrap();
        let h = Permutation::from_cycles(3, &[vec![1, 2]]).unwrap();
        let gh = g.mul(&h);
        for x in 0..3 {
            assert_eq!(gh.apply(x), h.apply(g.apply(x)));
        }
        assert!(g.mul(&g.inverse()).is_identity());
    }

    #[test]
    fn family_orders() {
        assert_eq!(PermGroup::symmetric(6).order(), 720);
        assert_eq!(PermGroup::alternating(6).order(), 360);
        assert_eq!(PermGroup::cyclic(7).order(), 7);
        assert_eq!(PermGroup::dihedral(5).order(), 10);
        assert_eq!(PermGroup::symmetric(10).order(), 3_628_800);
        assert_eq!(PermGroup::trivial(4).order(), 1);
    }

    #[test]
    fn cyclic_detection() {
        assert!(PermGroup::cyclic(6).is_cyclic());
        let v4 = PermGroup::new(
            4,
            vec![
                Permutation::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap(),
                Permutation::from_cycles(4, &[vec![0, 2], vec![1, 3]]).unwrap(),
            ],
        )
        .unwrap();
        assert!(v4.is_abelian() && !v4.is_cyclic());
        // C2 x C3 given by separate generators is still cyclic
        let c6 = PermGroup::new(
            5,
            vec![
                Permutation::from_cycles(5, &[vec![0, 1]]).unwrap(),
                Permutation::from_cycles(5, &[vec![2, 3, 4]]).unwrap(),
            ],
        )
        .unwrap();
        assert!(c6.is_cyclic());
        assert!(!PermGroup::symmetric(3).is_cyclic());
    }

    #[test]
    fn primitivity() {
        assert!(PermGroup::symmetric(5).is_primitive());
        assert!(!PermGroup::dihedral(4).is_primitive());
        assert!(PermGroup::cyclic(5).is_primitive());
        assert!(!PermGroup::cyclic(6).is_primitive());
    }

    #[test]
    fn stabilizer_order() {
        let s5 = PermGroup::symmetric(5);
        let st = s5.stabilizer(3);
        assert_eq!(st.order(), 24);
        assert!(st.gens().iter().all(|g| g.apply(3) == 3));
    }
}
