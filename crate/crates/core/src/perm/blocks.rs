use super::PermGroup;

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// The smallest block of imprimitivity containing `a` and `b`, sorted.
pub fn minimal_block(group: &PermGroup, a: usize, b: usize) -> Vec<usize> {
    let n = group.degree();
    let mut parent: Vec<usize> = (0..n).collect();
    let mut queue = Vec::new();
    let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
    if ra != rb {
        parent[rb] = ra;
        queue.push((a, b));
    }
    while let Some((x, y)) = queue.pop() {
        for g in group.gens() {
            let (u, v) = (g.apply(x), g.apply(y));
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru != rv {
                parent[rv] = ru;
                queue.push((u, v));
            }
        }
    }
    let root = find(&mut parent, a);
    (0..n).filter(|&x| find(&mut parent, x) == root).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    #[test]
    fn dihedral_square_blocks() {
        let d4 = PermGroup::dihedral(4);
        assert_eq!(minimal_block(&d4, 0, 2), vec![0, 2]);
        // 0 and 1 are adjacent on the square: the only block is everything
        assert_eq!(minimal_block(&d4, 0, 1).len(), 4);
    }

    #[test]
    fn wreath_blocks() {
        let g = PermGroup::new(
            6,
            vec![
                Permutation::from_cycles(6, &[vec![0, 1, 2]]).unwrap(),
                Permutation::from_cycles(6, &[vec![0, 3], vec![1, 4], vec![2, 5]]).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(minimal_block(&g, 0, 1), vec![0, 1, 2]);
    }
}
