use super::{LinalgError, Matrix};
use crate::gfq::{poly, Elem};

pub(super) fn char_poly_hessenberg(a: &Matrix) -> Result<Vec<Elem>, LinalgError> {
    if !a.is_square() {
        return Err(LinalgError::NotSquare(a.rows(), a.cols()));
    }
    let f = a.field().clone();
    let n = a.rows();
    let mut h = a.clone();
    for m in 1..n.saturating_sub(1) {
        let Some(i) = (m..n).find(|&i| !h[(i, m - 1)].is_zero()) else {
            continue;
        };
        if i != m {
            h.swap_rows(i, m);
            for r in 0..n {
                let (x, y) = (h[(r, i)], h[(r, m)]);
                h[(r, i)] = y;
                h[(r, m)] = x;
            }
        }
        let inv = f.inv(h[(m, m - 1)]).expect("nonzero pivot");
        for i in m + 1..n {
            let u = f.mul(h[(i, m - 1)], inv);
            if u.is_zero() {
                continue;
            }
            let row_m = h.row(m).to_vec();
            f.axpy(h.row_mut(i), f.neg(u), &row_m);
            for r in 0..n {
                let add = f.mul(u, h[(r, i)]);
                h[(r, m)] = f.add(h[(r, m)], add);
            }
        }
    }
    // p_k = (x - h_kk) p_{k-1} - sum_i h_{k-i,k} (prod h_{j,j-1}) p_{k-i-1}, 1-based
    let mut ps: Vec<Vec<Elem>> = vec![poly::one()];
    for k in 1..=n {
        let diag = h[(k - 1, k - 1)];
        let mut pk = poly::mul(&f, &[f.neg(diag), Elem::ONE], &ps[k - 1]);
        let mut prod = Elem::ONE;
        for i in 1..k {
            prod = f.mul(prod, h[(k - i, k - i - 1)]);
            let c = f.mul(h[(k - i - 1, k - 1)], prod);
            if !c.is_zero() {
                pk = poly::sub(&f, &pk, &poly::scale(&f, &ps[k - i - 1], c));
            }
        }
        ps.push(pk);
    }
    Ok(ps.pop().unwrap())
}

/// Characteristic polynomial `det(xI - A)` by Leibniz expansion, for small
/// matrices.
pub fn char_poly_leibniz(a: &Matrix) -> Vec<Elem> {
    let f = a.field().clone();
    let n = a.rows();
    assert!(a.is_square() && n <= 7, "Leibniz expansion limited to n <= 7");
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total: Vec<Elem> = Vec::new();
    loop {
        let mut term = poly::one();
        for (i, &j) in perm.iter().enumerate() {
            let entry = if i == j {
                vec![f.neg(a[(i, j)]), Elem::ONE]
            } else {
                vec![f.neg(a[(i, j)])]
            };
            term = poly::mul(&f, &term, &entry);
        }
        let inversions = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| perm[i] > perm[j])
            .count();
        total = if inversions % 2 == 0 {
            poly::add(&f, &total, &term)
        } else {
            poly::sub(&f, &total, &term)
        };
        if !next_permutation(&mut perm) {
            break;
        }
    }
    total
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| p[i] < p[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).unwrap();
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfq::Field;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn hessenberg_matches_leibniz() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for q in [2u64, 3, 4, 5, 7, 9] {
            let f = Field::with_order(q).unwrap();
            for n in 0..=5 {
                for _ in 0..10 {
                    let data = (0..n * n).map(|_| Elem::from_code(rng.gen_range(0..f.q()))).collect();
                    let a = Matrix::from_data(&f, n, n, data);
                    assert_eq!(a.char_poly().unwrap(), char_poly_leibniz(&a), "q={q} {a:?}");
                }
            }
        }
    }

    #[test]
    fn cayley_hamilton() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let f = Field::new(3, 1).unwrap();
        for n in [6, 10, 17] {
            let data = (0..n * n).map(|_| Elem::from_code(rng.gen_range(0..3))).collect();
            let a = Matrix::from_data(&f, n, n, data);
            assert!(a.eval_poly(&a.char_poly().unwrap()).is_zero());
        }
    }
}
