//! Property tests for the serialization and canonical-form invariants.

use forcelab::graph::Graph;
use forcelab::{canonical_form, contains_induced, parse_graph6, to_graph6};
use proptest::prelude::*;

fn arb_graph(max_order: usize) -> impl Strategy<Value = Graph> {
    (0..=max_order)
        .prop_flat_map(|n| {
            let pairs = n * n.saturating_sub(1) / 2;
            (Just(n), proptest::collection::vec(any::<bool>(), pairs))
        })
        .prop_map(|(n, bits)| {
            let mut g = Graph::new(n).unwrap();
            let mut idx = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[idx] {
                        g.add_edge(u, v).unwrap();
                    }
                    idx += 1;
                }
            }
            g
        })
}

fn graph_with_permutation(max_order: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    arb_graph(max_order).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
    })
}

proptest! {
    #[test]
    fn graph6_round_trips(g in arb_graph(12)) {
        let code = to_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(&code).unwrap(), g);
    }

    #[test]
    fn canonical_form_is_relabeling_invariant((g, perm) in graph_with_permutation(7)) {
        let h = g.permuted(&perm);
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
    }

    #[test]
    fn graphs_contain_themselves_induced(g in arb_graph(7)) {
        prop_assert!(contains_induced(&g, &g).is_some());
    }
}
