use std::collections::HashMap;

use super::socle::minimal_submodules_with;
use super::{irreducible_classes, FGModule, ModuleError};
use crate::linalg::{format_vector, Subspace};

/// Default node budget for lattice construction.
pub const DEFAULT_CAP: usize = 100_000;

#[derive(Clone, Debug)]
pub struct SubmoduleLattice {
    /// Sorted by dimension, then canonical basis.
    pub nodes: Vec<Subspace>,
    /// Covering pairs `(lower, upper)` by node index.
    pub covers: Vec<(usize, usize)>,
    pub complete: bool,
    pub cap: usize,
}

impl SubmoduleLattice {
    pub fn index_of(&self, u: &Subspace) -> Option<usize> {
        self.nodes.binary_search(u).ok()
    }
}

/// Breadth-first lattice search: the covers of `U` are the pullbacks of the
/// minimal submodules of `M / U`.
pub fn submodule_lattice(m: &FGModule, cap: usize, seed: u64) -> Result<SubmoduleLattice, ModuleError> {
    let f = m.field();
    let n = m.dim();
    let classes = irreducible_classes(m, seed)?;
    let zero = Subspace::zero(f, n);
    let mut nodes = vec![zero.clone()];
    let mut index: HashMap<Subspace, usize> = HashMap::new();
    index.insert(zero, 0);
    let mut covers = Vec::new();
    let mut complete = true;
    let mut head = 0;
    while head < nodes.len() {
        let u = nodes[head].clone();
        if u.dim() < n {
            let (quo, proj) = m.quotient(&u)?;
            let mins = minimal_submodules_with(&quo, &classes)?;
            complete &= mins.complete;
            for x in &mins.subs {
                let w = proj.pullback(x);
                let j = match index.get(&w) {
                    Some(&j) => j,
                    None => {
                        if nodes.len() >= cap {
                            if head == 0 {
                                return Err(ModuleError::LatticeTooLarge(cap));
                            }
                            complete = false;
                            continue;
                        }
                        index.insert(w.clone(), nodes.len());
                        nodes.push(w);
                        nodes.len() - 1
                    }
                };
                covers.push((head, j));
            }
        }
        head += 1;
    }
    let mut order: Vec<usize> = (0..nodes.len()).collect();
    order.sort_by(|&a, &b| nodes[a].cmp(&nodes[b]));
    let mut position = vec![0; nodes.len()];
    for (pos, &old) in order.iter().enumerate() {
        position[old] = pos;
    }
    let mut covers: Vec<(usize, usize)> = covers
        .into_iter()
        .map(|(a, b)| (position[a], position[b]))
        .collect();
    covers.sort_unstable();
    covers.dedup();
    let nodes = order.into_iter().map(|i| nodes[i].clone()).collect();
    Ok(SubmoduleLattice {
        nodes,
        covers,
        complete,
        cap,
    })
}

/// Text dump: `dim=<d> basis=<rows separated by ';'>` per node, then `cover <i> <j>`.
pub fn format_lattice(l: &SubmoduleLattice) -> String {
    let mut out = String::new();
    for u in &l.nodes {
        let rows: Vec<String> = u
            .basis_rows()
            .iter()
            .map(|r| format_vector(u.field(), r))
            .collect();
        out.push_str(&format!("dim={} basis={}\n", u.dim(), rows.join(";")));
    }
    for (a, b) in &l.covers {
        out.push_str(&format!("cover {a} {b}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfq::Field;
    use crate::linalg::Matrix;
    use crate::perm::{GroupAction, PermGroup};

    fn natural(n: usize, q: u64) -> FGModule {
        FGModule::permutation(
            &GroupAction::natural(&PermGroup::symmetric(n)),
            &Field::with_order(q).unwrap(),
        )
    }

    #[test]
    fn s5_gf5_chain() {
        let m = natural(5, 5);
        let l = submodule_lattice(&m, DEFAULT_CAP, 0).unwrap();
        let dims: Vec<usize> = l.nodes.iter().map(Subspace::dim).collect();
        assert_eq!(dims, vec![0, 1, 4, 5]);
        assert_eq!(l.covers, vec![(0, 1), (1, 2), (2, 3)]);
        assert!(l.complete);
    }

    #[test]
    fn s3_gf2_diamond() {
        let l = submodule_lattice(&natural(3, 2), DEFAULT_CAP, 0).unwrap();
        let dims: Vec<usize> = l.nodes.iter().map(Subspace::dim).collect();
        assert_eq!(dims, vec![0, 1, 2, 3]);
        assert_eq!(l.covers, vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn one_dimensional() {
        let f = Field::new(3, 1).unwrap();
        let m = FGModule::new(&f, 1, vec![Matrix::identity(&f, 1)]).unwrap();
        let l = submodule_lattice(&m, DEFAULT_CAP, 0).unwrap();
        assert_eq!(l.nodes.len(), 2);
    }

    #[test]
    fn cap_marks_incomplete() {
        let f = Field::new(2, 1).unwrap();
        let m = FGModule::permutation(&GroupAction::natural(&PermGroup::trivial(4)), &f);
        assert!(matches!(
            submodule_lattice(&m, 5, 0),
            Err(ModuleError::LatticeTooLarge(5))
        ));
        let l = submodule_lattice(&m, 40, 0).unwrap();
        assert!(!l.complete);
        assert_eq!(l.nodes.len(), 40);
    }

    #[test]
    fn dump_format() {
        let l = submodule_lattice(&natural(3, 2), DEFAULT_CAP, 0).unwrap();
        let text = format_lattice(&l);
        assert!(text.starts_with("dim=0 basis=\ndim=1 basis=1 1 1\n"));
        assert!(text.contains("cover 2 3"));
    }
}
