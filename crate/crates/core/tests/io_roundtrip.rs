mod common;

use assort_bounds::io::{
    parse_edge_list, parse_metadata, read_edge_list, read_metadata, same_labeled_graph,
    write_edge_list, write_metadata, EdgeListOptions,
};
use assort_bounds::prelude::*;
use proptest::prelude::*;

fn labeled_graph() -> impl Strategy<Value = (Graph, MetadataAssignment)> {
    (2usize..14)
        .prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .collect();
            (
                Just(n),
                proptest::sample::subsequence(pairs.clone(), 0..=pairs.len()),
                proptest::collection::vec(0u8..2, n),
            )
        })
        .prop_map(|(n, edges, labels)| {
            let names = (0..n).map(|i| format!("v{}", (i * 7) % 97)).collect();
            let g = Graph::from_edges(n, &edges)
                .unwrap()
                .with_node_labels(names)
                .unwrap();
            (g, MetadataAssignment::new(labels).unwrap())
        })
}

proptest! {
    #[test]
    fn parse_serialize_parse((g, a) in labeled_graph()) {
        let opts = EdgeListOptions::default();
        let g1 = parse_edge_list(&write_edge_list(&g), "edges", opts).unwrap();
        let (g1, a1) = parse_metadata(&write_metadata(&g, &a).unwrap(), "meta", &g1).unwrap();
        prop_assert!(same_labeled_graph((&g, &a), (&g1, &a1)));

        // indices may be renumbered, statistics may not change
        prop_assert_eq!(edge_counts(&g, &a).unwrap(), edge_counts(&g1, &a1).unwrap());
        prop_assert_eq!(degree_sequence(&g), degree_sequence(&g1));
    }
}

#[test]
fn fixtures_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    for stem in common::SMALL_FIXTURES {
        let (g, a) = common::load_fixture(stem);
        let edges = dir.path().join(format!("{stem}.edges"));
        let meta = dir.path().join(format!("{stem}.meta"));
        std::fs::write(&edges, write_edge_list(&g)).unwrap();
        std::fs::write(&meta, write_metadata(&g, &a).unwrap()).unwrap();
        let g2 = read_edge_list(&edges, EdgeListOptions::default()).unwrap();
        let (g2, a2) = read_metadata(&meta, &g2).unwrap();
        assert!(same_labeled_graph((&g, &a), (&g2, &a2)), "{stem}");
        assert_eq!(
            assortativity(&g, &a).unwrap(),
            assortativity(&g2, &a2).unwrap()
        );
    }
}

#[test]
fn wolf_fixture_shape() {
    let (g, a) = common::load_fixture("wolf");
    assert_eq!((g.node_count(), g.edge_count(), a.n1()), (16, 111, 9));
    let c = edge_counts(&g, &a).unwrap();
    assert_eq!((c.m11, c.m10, c.m00), (31, 63, 17));
}
