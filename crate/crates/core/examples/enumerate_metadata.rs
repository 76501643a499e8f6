// Every way of choosing the 9 males among the 16 wolves.

use assort_bounds::explore::{DEFAULT_BINS, DEFAULT_ENUMERATION_CAP};
use assort_bounds::io::{read_edge_list, EdgeListOptions};
use assort_bounds::prelude::*;

const EDGES: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/wolf.edges");

fn main() -> Result<()> {
    let g = read_edge_list(EDGES, EdgeListOptions::default())?;
    let rep = enumerate_metadata_space(&g, 9, DEFAULT_ENUMERATION_CAP, DEFAULT_BINS)?;
    println!(
        "{} assignments: min {:.4}, max {:.4}, mean {:.4}",
        rep.sample_count,
        rep.r_min_observed.unwrap_or(f64::NAN),
        rep.r_max_observed.unwrap_or(f64::NAN),
        rep.mean_r.unwrap_or(f64::NAN)
    );
    let name = |ids: &Vec<usize>| {
        ids.iter()
            .map(|&i| g.node_name(i))
            .collect::<Vec<_>>()
            .join(" ")
    };
    if let (Some(lo), Some(hi)) = (&rep.min_witness, &rep.max_witness) {
        println!("minimum with males {}", name(lo));
        println!("maximum with males {}", name(hi));
    }

    match enumerate_metadata_space(&g, 8, 1000, DEFAULT_BINS) {
        Err(e) => println!("with a cap of 1000: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
