use super::{FGModule, ModuleError};
use crate::gfq::Elem;
use crate::linalg::{unit_vector, Echelon, LinalgError, Matrix};

/// Basis of `Hom_G(S, M)`: matrices `X` with `S_g X = X M_g` for every generator.
///
/// `S` is spanned from a few seed vectors; a hom is determined by the seed
/// images, so the unknowns are those images and each non-tree edge
/// of the spinning closure contributes one block of linear equations.
pub fn hom_space(s: &FGModule, m: &FGModule) -> Result<Vec<Matrix>, ModuleError> {
    if s.field() != m.field() {
        return Err(LinalgError::FieldMismatch(s.field().to_string(), m.field().to_string()).into());
    }
    if s.gens().len() != m.gens().len() {
        return Err(ModuleError::GeneratorMismatch(s.gens().len(), m.gens().len()));
    }
    let f = s.field();
    let (a, b) = (s.dim(), m.dim());
    if a == 0 || b == 0 {
        return Ok(Vec::new());
    }
    let ng = s.gens().len();

    // spinning basis of S: vectors, their seed, and the matrix W_i with theta(b_i) = x_seed * W_i
    let mut vecs: Vec<Vec<Elem>> = Vec::new();
    let mut seed_of: Vec<usize> = Vec::new();
    let mut walk: Vec<Matrix> = Vec::new();
    let mut tree_edge: Vec<Vec<bool>> = Vec::new();
    let mut ech = Echelon::new(f, a);
    let mut seeds = 0;
    for e in 0..a {
        if ech.is_full() {
            break;
        }
        let u = unit_vector(a, e);
        if !ech.insert(u.clone()) {
            continue;
        }
        let start = vecs.len();
        vecs.push(u);
        seed_of.push(seeds);
        walk.push(Matrix::identity(f, b));
        tree_edge.push(vec![false; ng]);
        seeds += 1;
        let mut idx = start;
        while idx < vecs.len() {
            for g in 0..ng {
                let w = s.gens()[g].vec_mul(&vecs[idx]);
                if ech.insert(w.clone()) {
                    tree_edge[idx][g] = true;
                    seed_of.push(seed_of[idx]);
                    walk.push(walk[idx].mul(&m.gens()[g]));
                    tree_edge.push(vec![false; ng]);
                    vecs.push(w);
                }
            }
            idx += 1;
        }
    }
    let basis = Matrix::from_rows(f, a, &vecs)?;
    let basis_inv = basis.inverse()?;
    let unknowns = seeds * b;

    // each equation is a linear form in the seed images x_0, ..., x_{seeds-1}
    let mut eqs = Echelon::new(f, unknowns);
    for i in 0..vecs.len() {
        for g in 0..ng {
            if tree_edge[i][g] {
                continue;
            }
            let coords = basis_inv.vec_mul(&s.gens()[g].vec_mul(&vecs[i]));
            // x_{seed(i)} W_i M_g - sum_k c_k x_{seed(k)} W_k = 0, one block per seed
            let mut blocks: Vec<Matrix> = (0..seeds).map(|_| Matrix::zeros(f, b, b)).collect();
            blocks[seed_of[i]].add_scaled(Elem::ONE, &walk[i].mul(&m.gens()[g]));
            for (k, &c) in coords.iter().enumerate() {
                if !c.is_zero() {
                    blocks[seed_of[k]].add_scaled(f.neg(c), &walk[k]);
                }
            }
            // column `col` of the stacked blocks is one equation
            for col in 0..b {
                let mut row = vec![Elem::ZERO; unknowns];
                for (j, blk) in blocks.iter().enumerate() {
                    for r in 0..b {
                        row[j * b + r] = blk[(r, col)];
                    }
                }
                eqs.insert(row);
                if eqs.is_full() {
                    return Ok(Vec::new());
                }
            }
        }
    }
    let system = Matrix::from_rows(f, unknowns, eqs.rows())?;
    let solutions = if eqs.rank() == 0 {
        crate::linalg::Subspace::full(f, unknowns)
    } else {
        system.kernel()
    };
    let homs = solutions
        .basis_rows()
        .iter()
        .map(|x| {
            let rows: Vec<Vec<Elem>> = (0..vecs.len())
                .map(|i| {
                    let j = seed_of[i];
                    walk[i].vec_mul(&x[j * b..(j + 1) * b])
                })
                .collect();
            let theta = Matrix::from_rows(f, b, &rows).expect("rows");
            basis_inv.mul(&theta)
        })
        .collect();
    Ok(homs)
}

/// Whether two modules are isomorphic, probing the hom space for an
/// invertible element. Exact when one of them is irreducible.
pub fn isomorphic(s: &FGModule, t: &FGModule) -> Result<bool, ModuleError> {
    if s.dim() != t.dim() {
        return Ok(false);
    }
    Ok(hom_space(s, t)?.iter().any(Matrix::is_invertible))
}
