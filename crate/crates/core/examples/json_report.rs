// Building, writing and re-reading an analysis report.

use assort_bounds::io::{
    parse_edge_list, parse_metadata, write_edge_list, write_metadata, EdgeListOptions,
};
use assort_bounds::prelude::*;
use assort_bounds::report::{analyze, parse_report_strict};

fn main() -> Result<()> {
    let g = parse_edge_list(
        "a b\nb c\nc d\nd a\na c\n",
        "inline",
        EdgeListOptions::default(),
    )?;
    let (g, a) = parse_metadata("a\t1\nb\t1\nc\t0\nd\t0\ne\t1\n", "inline", &g)?;
    println!(
        "{} nodes after metadata ({} isolated)",
        g.node_count(),
        g.degrees().iter().filter(|&&k| k == 0).count()
    );

    let report = analyze(
        &g,
        a.n1(),
        Some(&a),
        &[Space::Mgs, Space::Gs],
        BoundVariant::Improved,
    )?;
    let json = report.to_json();
    assert_eq!(parse_report_strict(&json)?, report);
    println!("{}", json.lines().take(12).collect::<Vec<_>>().join("\n"));
    println!("... {} lines in total", json.lines().count());

    print!("{}", write_edge_list(&g));
    print!("{}", write_metadata(&g, &a)?);
    Ok(())
}
