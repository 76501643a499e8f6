// Attainable assortativity for the wolf dominance fixture.
//
// The metadata-graph space (mgs) keeps only the degree sequence and the
// number of males; the graph space (gs) also keeps who is male.

use assort_bounds::io::{read_edge_list, read_metadata, EdgeListOptions};
use assort_bounds::prelude::*;

const EDGES: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/wolf.edges");
const META: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/wolf.meta");

fn main() -> Result<()> {
    let g = read_edge_list(EDGES, EdgeListOptions::default())?;
    let (g, a) = read_metadata(META, &g)?;
    let counts = edge_counts(&g, &a)?;
    let r = assortativity(&g, &a)?;
    println!(
        "n {} m {} n1 {}: m11 {} m10 {} m00 {}, r = {r:.4}",
        g.node_count(),
        g.edge_count(),
        a.n1(),
        counts.m11,
        counts.m10,
        counts.m00
    );

    for space in [Space::Mgs, Space::Gs] {
        for variant in [BoundVariant::Improved, BoundVariant::Original] {
            let range = assortativity_range(&g, a.n1(), space, Some(&a), variant)?;
            let b = &range.edge_count_bounds;
            println!(
                "{space} {variant:?}: r in [{:.4}, {:.4}]  m11 {}..{}  m10 {}..{}  m00 {}..{}",
                range.r_lower,
                range.r_upper,
                b.m11.lower,
                b.m11.upper,
                b.m10.lower,
                b.m10.upper,
                b.m00.lower,
                b.m00.upper
            );
            if variant == BoundVariant::Improved {
                println!(
                    "    normalised r = {:.4}",
                    normalize_assortativity(r, &range)?
                );
            }
        }
    }
    Ok(())
}
