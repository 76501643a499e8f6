//! Attainable ranges of the binary assortativity coefficient.
//!
//! Given an undirected simple graph and a 0/1 label per node, the crate
//! computes
//!
//! * the observed edge counts and assortativity ([`graph`], [`mixing`]),
//! * combinatorial bounds on assortativity over all graphs with the same
//!   degree sequence, with the label counts fixed or with the assignment
//!   fixed ([`bounds`]),
//! * the empirical range over relabelings of the fixed graph, by complete
//!   enumeration, random permutations or a swap heuristic, plus
//!   degree-preserving rewiring and permutation p-values ([`explore`]),
//! * brute-force ground truth for small instances ([`oracle`]),
//! * file ingestion, JSON reports and the `assort` command line ([`io`],
//!   [`report`], [`cli`]).
//!
//! ```
//! use assort_bounds::prelude::*;
//!
//! let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
//! let labels = MetadataAssignment::new(vec![1, 1, 0, 0]).unwrap();
//! let r = assortativity(&g, &labels).unwrap();
//! let range = assortativity_range(&g, 2, Space::Mgs, None, BoundVariant::Improved).unwrap();
//! assert!((r + 1.0 / 3.0).abs() < 1e-12);
//! assert!((range.r_upper - r).abs() < 1e-12);
//! ```

pub mod bounds;
pub mod cli;
pub mod error;
pub mod explore;
pub mod graph;
pub mod io;
pub mod mixing;
pub mod oracle;
pub mod report;

pub use error::{Error, Result};

pub mod prelude {
    pub use crate::bounds::{
        assortativity_range, edge_count_bounds, normalize_assortativity, AssortativityRange,
        BoundVariant, DegreePartition, EdgeCountBounds, Space,
    };
    pub use crate::error::{Error, Result};
    pub use crate::explore::{
        enumerate_metadata_space, permutation_pvalue, rewire_graph_space, sample_permutations,
        swap_heuristic, ExplorationReport, HeuristicConfig, Objective, RewireConfig, Side,
    };
    pub use crate::graph::{
        degree_sequence, edge_counts, DegreeSequence, EdgeCounts, Graph, MetadataAssignment,
    };
    pub use crate::mixing::{assortativity, assortativity_from_counts, freeman_segregation};
}
