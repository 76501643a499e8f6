// Brute-force check of the bounds on a small degree sequence.
//
// The bounds assume a connected graph (at least one edge joins the two
// classes), so the ensembles are restricted to connected realizations.

use assort_bounds::bounds::range_from_bounds;
use assort_bounds::graph::DegreeSequence;
use assort_bounds::oracle::{ensemble_truth_gs, ensemble_truth_mgs, enumerate_labeled_graphs};
use assort_bounds::prelude::*;

fn main() -> Result<()> {
    let d = [3, 3, 2, 2, 1, 1];
    let graphs = enumerate_labeled_graphs(&d, false)?;
    let connected = graphs.iter().filter(|g| g.is_connected()).count();
    println!(
        "{d:?}: {} labeled realizations, {connected} connected",
        graphs.len()
    );

    let seq = DegreeSequence::new(d.to_vec());
    for n1 in 1..d.len() {
        let truth = ensemble_truth_mgs(&d, n1, true)?;
        let range = range_from_bounds(edge_count_bounds(
            &seq,
            n1,
            Space::Mgs,
            None,
            BoundVariant::Improved,
        )?)?;
        println!(
            "n1 {n1}: true r in [{:.4}, {:.4}], bounds [{:.4}, {:.4}]",
            truth.r_min.unwrap_or(f64::NAN),
            truth.r_max.unwrap_or(f64::NAN),
            range.r_lower,
            range.r_upper
        );
    }

    // graph space: the two degree-3 slots carry label 1
    let labels = [1, 1, 0, 0, 0, 0];
    let truth = ensemble_truth_gs(&d, &labels, true)?;
    let partition = DegreePartition::new(vec![3, 3], vec![2, 2, 1, 1]);
    let range = range_from_bounds(edge_count_bounds(
        &seq,
        2,
        Space::Gs,
        Some(&partition),
        BoundVariant::Improved,
    )?)?;
    println!(
        "gs: true r in [{:.4}, {:.4}], bounds [{:.4}, {:.4}]",
        truth.r_min.unwrap_or(f64::NAN),
        truth.r_max.unwrap_or(f64::NAN),
        range.r_lower,
        range.r_upper
    );
    Ok(())
}
