//! The explorer's enumeration against the oracle's independent one.

mod common;

use assort_bounds::oracle::metadata_space_truth;
use assort_bounds::prelude::*;
use common::*;

#[test]
fn enumeration_extrema_match_the_oracle() {
    for stem in SMALL_FIXTURES {
        let (g, a) = load_fixture(stem);
        for n1 in 1..g.node_count() {
            if stem == "wolf" && n1 != a.n1() {
                continue;
            }
            let truth = metadata_space_truth(&g, n1).unwrap();
            let rep = enumerate_metadata_space(&g, n1, 1_000_000, 100).unwrap();
            assert_eq!(
                rep.sample_count + rep.undefined_count,
                truth.states as u64,
                "{stem} n1={n1}"
            );
            assert_eq!(
                rep.undefined_count, truth.undefined as u64,
                "{stem} n1={n1}"
            );
            for (mine, theirs) in [
                (rep.r_min_observed, truth.r_min),
                (rep.r_max_observed, truth.r_max),
            ] {
                match (mine, theirs) {
                    (Some(x), Some(y)) => {
                        assert!((x - y).abs() < 1e-12, "{stem} n1={n1}: {x} vs {y}")
                    }
                    (x, y) => assert_eq!(x, y),
                }
            }
        }
    }
}

#[test]
fn enumeration_witnesses_attain_the_extrema() {
    let (g, a) = load_fixture("wolf");
    let rep = enumerate_metadata_space(&g, a.n1(), 1_000_000, 100).unwrap();
    for (witness, r) in [
        (&rep.min_witness, rep.r_min_observed),
        (&rep.max_witness, rep.r_max_observed),
    ] {
        let labels =
            MetadataAssignment::from_ones(g.node_count(), witness.as_ref().unwrap()).unwrap();
        assert_eq!(Some(assortativity(&g, &labels).unwrap()), r);
    }
}

#[test]
fn oracle_reference_values() {
    use assort_bounds::oracle::{ensemble_truth_gs, ensemble_truth_mgs, enumerate_labeled_graphs};
    assert_eq!(
        enumerate_labeled_graphs(&[2, 1, 1], false).unwrap().len(),
        1
    );
    assert_eq!(
        enumerate_labeled_graphs(&[3, 3, 3, 3], false)
            .unwrap()
            .len(),
        1
    );
    assert_eq!(enumerate_labeled_graphs(&[2; 6], false).unwrap().len(), 70);
    assert_eq!(enumerate_labeled_graphs(&[2; 6], true).unwrap().len(), 60);

    let k4 = ensemble_truth_mgs(&[3, 3, 3, 3], 2, false).unwrap();
    assert!((k4.r_min.unwrap() + 1.0 / 3.0).abs() < 1e-12);
    assert!((k4.r_max.unwrap() + 1.0 / 3.0).abs() < 1e-12);

    let c6 = ensemble_truth_mgs(&[2; 6], 3, true).unwrap();
    assert_eq!(c6.r_min, Some(-1.0));
    assert!((c6.r_max.unwrap() - 1.0 / 3.0).abs() < 1e-12);

    let p3 = ensemble_truth_gs(&[2, 1, 1], &[0, 1, 0], false).unwrap();
    assert!((p3.r_min.unwrap() + 1.0 / 3.0).abs() < 1e-12);
    assert_eq!(p3.r_min, p3.r_max);
}
