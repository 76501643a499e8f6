// Freeman segregation next to assortativity on a few small graphs.

use assort_bounds::prelude::*;

fn main() -> Result<()> {
    let path = Graph::from_edges(3, &[(0, 1), (1, 2)])?;
    let two_triangles =
        Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])?;
    let cases = [
        (
            "path, end labeled",
            &path,
            MetadataAssignment::new(vec![1, 0, 0])?,
        ),
        (
            "path, middle labeled",
            &path,
            MetadataAssignment::new(vec![0, 1, 0])?,
        ),
        (
            "bridged triangles",
            &two_triangles,
            MetadataAssignment::new(vec![1, 1, 1, 0, 0, 0])?,
        ),
    ];
    for (name, g, a) in cases {
        let s = freeman_segregation(g, &a)?;
        println!(
            "{name:<22} r {:>7.4}  expected cross {:.3}  observed cross {}  S {:.3}",
            assortativity(g, &a)?,
            s.expected_cross,
            s.observed_cross,
            s.segregation
        );
    }
    Ok(())
}
