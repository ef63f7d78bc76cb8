mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use unionsep::separation::{is_proper_coloring, is_valid_assignment};
use unionsep::solver::solve;
use unionsep::{ColorSet, Graph, ListAssignment, SeparationParams};

use common::{oracle_colorable, random_graph, random_lists, random_perm, to_assignment};

fn instance() -> impl Strategy<Value = (Graph, Vec<Vec<usize>>, usize)> {
    (1usize..=5, 0.0f64..1.0, 1usize..=6, any::<u64>()).prop_map(|(n, p, universe, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(&mut rng, n, p);
        let lists = random_lists(&mut rng, n, 3, universe);
        (g, lists, universe)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn verdict_matches_product_space((g, raw, universe) in instance()) {
        let lists = to_assignment(&raw, universe);
        let r = solve(&g, &lists);
        prop_assert_eq!(r.is_sat(), oracle_colorable(&g, &raw));
        if let Some(c) = &r.witness {
            prop_assert_eq!(is_proper_coloring(&g, &lists, c), Ok(()));
        }
    }

    #[test]
    fn verdict_ignores_vertex_names((g, raw, universe) in instance(), seed in any::<u64>()) {
        let lists = to_assignment(&raw, universe);
        let perm = random_perm(&mut ChaCha8Rng::seed_from_u64(seed), g.n());
        let moved = solve(&g.relabel(&perm), &lists.relabel(&perm));
        prop_assert_eq!(solve(&g, &lists).verdict, moved.verdict);
    }

    #[test]
    fn validity_is_orientation_free(a in 0u128..64, b in 0u128..64, k in 1usize..4, t in 0usize..7) {
        let p = SeparationParams::new(k, t).unwrap();
        let sets = [ColorSet::from_bits(a), ColorSet::from_bits(b)];
        let fwd = ListAssignment::from_sets(sets.to_vec(), Some(6));
        let rev = ListAssignment::from_sets(vec![sets[1], sets[0]], Some(6));
        if let (Ok(fwd), Ok(rev)) = (fwd, rev) {
            let g = Graph::complete(2);
            prop_assert_eq!(
                is_valid_assignment(&g, &fwd, p).is_ok(),
                is_valid_assignment(&g, &rev, p).is_ok()
            );
        }
    }

    #[test]
    fn union_validity_survives_added_colors(
        (g, raw, _) in instance(), k in 1usize..3, extra in 0usize..3, v in 0usize..5, c in 0usize..8,
    ) {
        let t = k + 1 + extra;
        let lists = to_assignment(&raw, 8);
        let p = SeparationParams::new(k, t).unwrap();
        if is_valid_assignment(&g, &lists, p).is_ok() {
            let v = v % g.n();
            let bigger = lists.with_list(v, lists.list(v).with(c)).unwrap();
            prop_assert!(is_valid_assignment(&g, &bigger, p).is_ok());
        }
    }

    #[test]
    fn intersection_validity_survives_removed_colors(
        (g, raw, _) in instance(), k in 1usize..3, t in 0usize..3, v in 0usize..5, pick in 0usize..3,
    ) {
        let t = t.min(k);
        let lists = to_assignment(&raw, 8);
        let p = SeparationParams::new(k, t).unwrap();
        let v = v % g.n();
        let list = lists.list(v);
        if is_valid_assignment(&g, &lists, p).is_ok() && list.len() > k {
            let c = list.iter().nth(pick % list.len()).unwrap();
            let smaller = lists.with_list(v, list.without(c)).unwrap();
            prop_assert!(is_valid_assignment(&g, &smaller, p).is_ok());
        }
    }
}
