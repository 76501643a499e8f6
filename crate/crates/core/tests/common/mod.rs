#![allow(dead_code)]

use std::path::PathBuf;

use assort_bounds::bounds::{
    edge_count_bounds, range_from_bounds, AssortativityRange, DegreePartition,
};
use assort_bounds::io::{read_edge_list, read_metadata, EdgeListOptions};
use assort_bounds::oracle::{erdos_gallai, for_each_realization};
use assort_bounds::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

/// Graph and assignment of a bundled `<stem>.edges` / `<stem>.meta` pair.
pub fn load_fixture(stem: &str) -> (Graph, MetadataAssignment) {
    let g = read_edge_list(
        fixture(&format!("{stem}.edges")),
        EdgeListOptions::default(),
    )
    .unwrap();
    read_metadata(fixture(&format!("{stem}.meta")), &g).unwrap()
}

pub const SMALL_FIXTURES: [&str; 4] = ["p3", "k4", "c6", "wolf"];

pub fn has_connected_realization(d: &[usize]) -> bool {
    let mut found = false;
    let _ = for_each_realization(d, true, |_| found = true);
    found
}

/// Distinct non-increasing graphical sequences on 3..=max_n nodes that
/// have at least one connected realization.
pub fn graphical_corpus(count: usize, max_n: usize, seed: u64) -> Vec<Vec<usize>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut tries = 0;
    while out.len() < count {
        tries += 1;
        assert!(tries < 1_000_000, "corpus generation stalled");
        let n = rng.random_range(3..=max_n);
        let mut d: Vec<usize> = (0..n).map(|_| rng.random_range(1..n)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        if out.contains(&d) || !erdos_gallai(&d) || !has_connected_realization(&d) {
            continue;
        }
        out.push(d);
    }
    out
}

/// Every 0/1 labeling of `n` slots with `n1` ones.
pub fn slot_labelings(n: usize, n1: usize) -> Vec<Vec<u8>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == n1)
        .map(|m| (0..n).map(|i| ((m >> i) & 1) as u8).collect())
        .collect()
}

pub fn mgs_range(d: &[usize], n1: usize, variant: BoundVariant) -> Result<AssortativityRange> {
    let seq = DegreeSequence::new(d.to_vec());
    range_from_bounds(edge_count_bounds(&seq, n1, Space::Mgs, None, variant)?)
}

pub fn gs_range(d: &[usize], labels: &[u8], variant: BoundVariant) -> Result<AssortativityRange> {
    let seq = DegreeSequence::new(d.to_vec());
    let pick = |c: u8| {
        d.iter()
            .zip(labels)
            .filter(|(_, &l)| l == c)
            .map(|(&k, _)| k)
            .collect::<Vec<_>>()
    };
    let partition = DegreePartition::new(pick(1), pick(0));
    let n1 = labels.iter().filter(|&&l| l == 1).count();
    range_from_bounds(edge_count_bounds(
        &seq,
        n1,
        Space::Gs,
        Some(&partition),
        variant,
    )?)
}
