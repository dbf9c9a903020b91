use proptest::prelude::*;

use lindim_core::gfq::{Elem, Field};
use lindim_core::linalg::{unit_vector, Matrix, Subspace};
use lindim_core::lindim::{
    format_witness, lindim_general, lindim_oracle, lindim_primitive, parse_witness, separating,
    witness_verify, LinDimValue,
};
use lindim_core::perm::{GroupAction, PermGroup, Permutation};
use lindim_core::permmod::{all_submodules, submodule_lattice, FGModule, DEFAULT_CAP};

fn gf(q: u64) -> Field {
    Field::with_order(q).unwrap()
}

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

/// A group on `n` points from one to three random generators.
fn group() -> impl Strategy<Value = PermGroup> {
    (1usize..=6).prop_flat_map(|n| {
        prop::collection::vec(permutation(n), 1..=3).prop_map(move |g| PermGroup::new(n, g).unwrap())
    })
}

fn vector(q: u64, n: usize) -> impl Strategy<Value = Vec<Elem>> {
    prop::collection::vec((0..q as u32).prop_map(Elem::from_code), n)
}

fn exact(a: &GroupAction, f: &Field) -> usize {
    lindim_general(a, f, DEFAULT_CAP, 0).unwrap().value.exact().unwrap()
}

#[test]
fn two_fixed_points_exceed_the_orbit_sum() {
    let g = PermGroup::new(2, vec![Permutation::identity(2)]).unwrap();
    let a = GroupAction::natural(&g);
    let f = gf(3);
    for o in g.orbits() {
        assert_eq!(exact(&a.on_orbit(&o).unwrap(), &f), 0);
    }
    assert_eq!(exact(&a, &f), 1);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn general_matches_oracle(g in group(), q in prop::sample::select(vec![2u64, 3])) {
        let a = GroupAction::natural(&g);
        let f = gf(q);
        let general = lindim_general(&a, &f, DEFAULT_CAP, 0).unwrap();
        let oracle = lindim_oracle(&a, &f).unwrap();
        prop_assert_eq!(general.value, oracle.value);
        prop_assert!(general.complete);
        let w = general.witness.unwrap();
        prop_assert_eq!(witness_verify(&w, &a), Ok(()));
        prop_assert_eq!(&w.kernel, &oracle.witness.unwrap().kernel);
    }

    #[test]
    fn subgroups_do_not_increase(g in group(), pick in prop::collection::vec(any::<bool>(), 3)) {
        let gens: Vec<Permutation> = g.gens().iter().zip(&pick).filter(|(_, &k)| k).map(|(p, _)| p.clone()).collect();
        let h = g.subgroup(gens).unwrap();
        let a = GroupAction::natural(&g);
        let b = a.restrict(&h).unwrap();
        let f = gf(2);
        prop_assert!(exact(&b, &f) <= exact(&a, &f));
    }

    #[test]
    fn extension_sandwich(g in group()) {
        let a = GroupAction::natural(&g);
        let (l2, l4) = (exact(&a, &gf(2)), exact(&a, &gf(4)));
        prop_assert!(l4 <= l2 && l2 <= 2 * l4);
    }

    #[test]
    fn lindim_one_means_cyclic(g in group(), q in prop::sample::select(vec![3u64, 4, 5, 7])) {
        let a = GroupAction::natural(&g);
        if exact(&a, &gf(q)) == 1 {
            prop_assert!(a.induced_group().is_cyclic());
        }
    }

    #[test]
    fn orbits_bound_the_whole(g in group()) {
        let a = GroupAction::natural(&g);
        let f = gf(3);
        let parts: Vec<usize> = g
            .orbits()
            .iter()
            .map(|o| exact(&a.on_orbit(o).unwrap(), &f))
            .collect();
        let whole = exact(&a, &f);
        prop_assert!(*parts.iter().max().unwrap() <= whole);
        // two fixed points both land on zero in the direct sum
        if g.orbits().iter().filter(|o| o.len() == 1).count() <= 1 {
            prop_assert!(whole <= parts.iter().sum::<usize>());
        }
    }

    #[test]
    fn witness_text_round_trips(g in group(), q in prop::sample::select(vec![2u64, 4, 5])) {
        let a = GroupAction::natural(&g);
        let w = lindim_general(&a, &gf(q), DEFAULT_CAP, 7).unwrap().witness.unwrap();
        let text = format_witness(&w, &a);
        let back = parse_witness(&text).unwrap();
        prop_assert_eq!(&back, &w);
        prop_assert_eq!(format_witness(&back, &a), text);
    }

    #[test]
    fn separating_means_no_difference_inside(
        rows in prop::collection::vec(vector(3, 5), 0..4),
    ) {
        let f = gf(3);
        let u = Subspace::from_rows(&f, 5, rows);
        let by_pairs = (0..5).all(|a| (a + 1..5).all(|b| {
            let mut d = unit_vector(5, a);
            d[b] = f.neg(Elem::ONE);
            !u.contains(&d)
        }));
        prop_assert_eq!(separating(&u), by_pairs);
    }

    #[test]
    fn lattice_is_closed_under_perp_and_matches_brute_force(g in group()) {
        let f = gf(2);
        let m = FGModule::permutation(&GroupAction::natural(&g), &f);
        let lat = submodule_lattice(&m, DEFAULT_CAP, 0).unwrap();
        prop_assert!(lat.complete);
        prop_assert_eq!(&lat.nodes, &all_submodules(&m).unwrap());
        for u in &lat.nodes {
            prop_assert!(lat.index_of(&u.perp()).is_some());
        }
    }

    #[test]
    fn fast_path_agrees_on_primitive_groups(g in group(), q in prop::sample::select(vec![2u64, 3, 4])) {
        let a = GroupAction::natural(&g);
        if a.is_transitive() && a.is_primitive() && !g.is_cyclic() {
            let f = gf(q);
            let fast = lindim_primitive(&a, &f, 0).unwrap();
            prop_assert_eq!(fast.value, LinDimValue::Exact(exact(&a, &f)));
            let w = fast.witness.unwrap();
            prop_assert_eq!(witness_verify(&w, &a), Ok(()));
            if !a.is_regular() {
                let fixed = FGModule::new(&f, w.dim, w.rho.clone()).unwrap().fixed_space();
                prop_assert_eq!(fixed.dim(), 0);
            }
        }
    }

    #[test]
    fn unfaithful_actions_reduce_to_the_image(g in group()) {
        // the action of g x <extra> on g's points only is unfaithful
        let n = g.degree();
        let mut gens: Vec<Permutation> = g.gens().iter().map(|p| p.extend(n + 2)).collect();
        gens.push(Permutation::from_cycles(n + 2, &[vec![n, n + 1]]).unwrap());
        let big = PermGroup::new(n + 2, gens).unwrap();
        let a = GroupAction::natural(&big);
        let orbit: Vec<usize> = (0..n).collect();
        let unfaithful = a.on_orbit(&orbit).unwrap();
        let faithful = GroupAction::natural(unfaithful.induced_group());
        let f = gf(3);
        prop_assert_eq!(exact(&unfaithful, &f), exact(&faithful, &f));
    }

    #[test]
    fn subspace_dimension_formula(
        a in prop::collection::vec(vector(5, 4), 0..4),
        b in prop::collection::vec(vector(5, 4), 0..4),
    ) {
        let f = gf(5);
        let (u, w) = (Subspace::from_rows(&f, 4, a), Subspace::from_rows(&f, 4, b));
        prop_assert_eq!(u.sum(&w).dim() + u.intersect(&w).dim(), u.dim() + w.dim());
        prop_assert_eq!(u.perp().dim(), 4 - u.dim());
        prop_assert_eq!(u.perp().perp(), u);
    }

    #[test]
    fn inverse_and_kernel(rows in prop::collection::vec(vector(4, 4), 4)) {
        let f = gf(4);
        let m = Matrix::from_rows(&f, 4, &rows).unwrap();
        let k = m.kernel();
        prop_assert_eq!(k.dim() + m.rank(), 4);
        for v in k.basis_rows() {
            let col = Matrix::from_rows(&f, 4, std::slice::from_ref(v)).unwrap().transpose();
            prop_assert!(m.mul(&col).is_zero());
        }
        if let Ok(inv) = m.inverse() {
            prop_assert!(m.mul(&inv).is_identity());
        } else {
            prop_assert!(m.rank() < 4);
        }
    }

    #[test]
    fn chain_order_matches_closure(g in group()) {
        // closure of the generators by breadth-first multiplication
        let mut seen = std::collections::HashSet::new();
        let id = Permutation::identity(g.degree());
        let mut queue = vec![id.clone()];
        seen.insert(id);
        while let Some(x) = queue.pop() {
            for s in g.gens() {
                let y = x.mul(s);
                if seen.insert(y.clone()) {
                    queue.push(y);
                }
            }
        }
        prop_assert_eq!(g.order(), seen.len() as u128);
        for x in &seen {
            prop_assert!(g.contains(x));
        }
    }
}
