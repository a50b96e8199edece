use minorfree::oracle::{classify_connectivity, has_minor, Minor, SmallGraph};
use proptest::prelude::*;

fn graph() -> impl Strategy<Value = SmallGraph> {
    (6usize..=8)
        .prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            (Just(n), 0u64..1 << pairs)
        })
        .prop_map(|(n, idx)| SmallGraph::from_index(n, idx).unwrap())
}

fn graph_and_permutation() -> impl Strategy<Value = (SmallGraph, Vec<usize>)> {
    graph().prop_flat_map(|g| {
        let perm = Just((0..g.n()).collect::<Vec<_>>()).prop_shuffle();
        (Just(g), perm)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn adding_an_edge_keeps_a_minor(g in graph()) {
        for minor in [Minor::K33, Minor::K33Plus] {
            if has_minor(&g, minor) {
                for (i, j) in g.non_edges() {
                    prop_assert!(has_minor(&g.with_edge(i, j), minor));
                }
            }
        }
    }

    #[test]
    fn relabelling_changes_nothing((g, perm) in graph_and_permutation()) {
        let h = g.relabelled(&perm);
        prop_assert_eq!(h.edge_count(), g.edge_count());
        for minor in [Minor::K33, Minor::K33Plus] {
            prop_assert_eq!(has_minor(&h, minor), has_minor(&g, minor));
        }
        prop_assert_eq!(classify_connectivity(&h), classify_connectivity(&g));
    }

    #[test]
    fn k33_plus_minor_implies_k33_minor(g in graph()) {
        if has_minor(&g, Minor::K33Plus) {
            prop_assert!(has_minor(&g, Minor::K33));
        }
    }
}

#[test]
fn five_vertices_never_have_the_minors() {
    for idx in 0..1u64 << 10 {
        let g = SmallGraph::from_index(5, idx).unwrap();
        assert!(!has_minor(&g, Minor::K33) && !has_minor(&g, Minor::K33Plus));
    }
}
