// Label-swap search for the extremes of the metadata space, checked
// against full enumeration.

use assort_bounds::explore::{DEFAULT_BINS, DEFAULT_ENUMERATION_CAP};
use assort_bounds::io::{read_edge_list, EdgeListOptions};
use assort_bounds::prelude::*;

const EDGES: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/wolf.edges");

fn main() -> Result<()> {
    let g = read_edge_list(EDGES, EdgeListOptions::default())?;
    let exact = enumerate_metadata_space(&g, 9, DEFAULT_ENUMERATION_CAP, DEFAULT_BINS)?;
    for objective in [Objective::Min, Objective::Max] {
        for seed in [1, 2, 3] {
            let cfg = HeuristicConfig::new(objective, seed);
            let rep = swap_heuristic(&g, 9, &cfg, DEFAULT_BINS)?;
            let best = rep.heuristic.and_then(|h| h.best_r).unwrap_or(f64::NAN);
            let target = match objective {
                Objective::Min => exact.r_min_observed,
                Objective::Max => exact.r_max_observed,
            };
            println!(
                "{objective:?} seed {seed}: best {best:.4} (enumeration {:.4})",
                target.unwrap_or(f64::NAN)
            );
        }
    }
    Ok(())
}
