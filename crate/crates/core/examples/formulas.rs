// Binary assortativity from edge counts, and its equivalent forms.
//
// Run with `cargo run --example formulas`.

use assort_bounds::graph::EdgeCounts;
use assort_bounds::mixing::{
    assortativity_from_contingency, assortativity_from_counts, assortativity_long_form,
    contingency_from_counts, phi_bounds, phi_coefficient,
};

fn main() -> assort_bounds::Result<()> {
    let networks = [
        ("wolves", EdgeCounts::new(31, 63, 17)),
        ("Smith", EdgeCounts::new(25, 1404, 75830)),
        ("Wellesley", EdgeCounts::new(122, 729, 78002)),
    ];
    println!("{:<10} {:>7} {:>9} {:>9}", "network", "m", "r", "long form");
    for (name, counts) in networks {
        let r = assortativity_from_counts(&counts)?;
        let long = assortativity_long_form(&counts)?;
        println!("{name:<10} {:>7} {r:>9.4} {long:>9.4}", counts.m);
    }

    let table = contingency_from_counts(&EdgeCounts::new(31, 63, 17))?;
    println!(
        "wolves contingency: e11 {:.4} e10 {:.4} e00 {:.4}; r {:.4}, phi {:.4}",
        table.e11,
        table.e10,
        table.e00,
        assortativity_from_contingency(&table)?,
        phi_coefficient(&table)?
    );

    let (lo, hi) = phi_bounds(0.7, 0.3, 0.6, 0.4)?;
    println!("phi range for marginals (0.7, 0.3) x (0.6, 0.4): [{lo:.4}, {hi:.4}]");
    Ok(())
}
