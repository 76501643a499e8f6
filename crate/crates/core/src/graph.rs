//! Simple undirected graphs, binary node metadata and the edge-count
//! statistics that binary assortativity is built from.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Undirected simple graph on dense node indices `0..n`.
///
/// Edges are stored canonically as `(i, j)` with `i < j`, sorted. The
/// optional `node_labels` keep the external identifier of every node so
/// results can be traced back to the input files.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    node_labels: Option<Vec<String>>,
}

/// How [`validate_graph`] treats a repeated edge.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EdgePolicy {
    /// Collapse repeated edges instead of failing.
    pub dedupe: bool,
}

/// Builds a [`Graph`] from raw index pairs, enforcing the simple-graph
/// assumptions (no self-loops, no repeated edges unless `policy.dedupe`).
pub fn validate_graph(raw_edges: &[(usize, usize)], n: usize, policy: EdgePolicy) -> Result<Graph> {
    let mut seen = HashSet::with_capacity(raw_edges.len());
    let mut edges = Vec::with_capacity(raw_edges.len());
    for &(a, b) in raw_edges {
        for index in [a, b] {
            if index >= n {
                return Err(Error::IndexOutOfRange { index, n });
            }
        }
        if a == b {
            return Err(Error::SelfLoop(a));
        }
        let e = (a.min(b), a.max(b));
        if !seen.insert(e) {
            if policy.dedupe {
                continue;
            }
            return Err(Error::DuplicateEdge(e.0, e.1));
        }
        edges.push(e);
    }
    edges.sort_unstable();
    let mut adjacency = vec![Vec::new(); n];
    for &(a, b) in &edges {
        adjacency[a].push(b);
        adjacency[b].push(a);
    }
    for list in &mut adjacency {
        list.sort_unstable();
    }
    Ok(Graph {
        n,
        edges,
        adjacency,
        node_labels: None,
    })
}

impl Graph {
    /// Strict construction: duplicates are an error.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        validate_graph(edges, n, EdgePolicy::default())
    }

    /// Attaches external identifiers; `labels[i]` names node `i`.
    pub fn with_node_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::LengthMismatch {
                labels: labels.len(),
                nodes: self.n,
            });
        }
        self.node_labels = Some(labels);
        Ok(self)
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, node: usize) -> &[usize] {
        &self.adjacency[node]
    }

    pub fn degree(&self, node: usize) -> usize {
        self.adjacency[node].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && self.adjacency[a].binary_search(&b).is_ok()
    }

    pub fn node_labels(&self) -> Option<&[String]> {
        self.node_labels.as_deref()
    }

    /// External identifier of a node, falling back to its index.
    pub fn node_name(&self, node: usize) -> String {
        match &self.node_labels {
            Some(labels) => labels[node].clone(),
            None => node.to_string(),
        }
    }

    /// True when every node is reachable from node 0. Graphs with fewer
    /// than two nodes count as connected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adjacency[u] {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    stack.push(v);
                }
            }
        }
        reached == self.n
    }
}

/// Binary label per node.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MetadataAssignment {
    labels: Vec<u8>,
    n1: usize,
}

impl MetadataAssignment {
    pub fn new(labels: Vec<u8>) -> Result<Self> {
        if let Some(&bad) = labels.iter().find(|&&c| c > 1) {
            return Err(Error::InvalidLabel(bad));
        }
        let n1 = labels.iter().filter(|&&c| c == 1).count();
        Ok(Self { labels, n1 })
    }

    /// Assignment on `n` nodes where exactly the listed nodes carry label 1.
    pub fn from_ones(n: usize, ones: &[usize]) -> Result<Self> {
        let mut labels = vec![0u8; n];
        for &i in ones {
            if i >= n {
                return Err(Error::IndexOutOfRange { index: i, n });
            }
            labels[i] = 1;
        }
        Self::new(labels)
    }

    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn n1(&self) -> usize {
        self.n1
    }

    pub fn n0(&self) -> usize {
        self.labels.len() - self.n1
    }

    /// Label of `node`.
    pub fn get(&self, node: usize) -> u8 {
        self.labels[node]
    }

    /// Same nodes, labels flipped.
    pub fn complement(&self) -> Self {
        Self {
            labels: self.labels.iter().map(|&c| 1 - c).collect(),
            n1: self.labels.len() - self.n1,
        }
    }
}

/// Degrees sorted in non-increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DegreeSequence {
    degrees: Vec<usize>,
}

impl DegreeSequence {
    pub fn new(mut degrees: Vec<usize>) -> Self {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        Self { degrees }
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.degrees.iter().sum()
    }

    /// The `k` largest degrees. Panics if `k > len()`.
    pub fn head(&self, k: usize) -> &[usize] {
        &self.degrees[..k]
    }

    /// The `k` smallest degrees. Panics if `k > len()`.
    pub fn tail(&self, k: usize) -> &[usize] {
        &self.degrees[self.degrees.len() - k..]
    }
}

pub fn degree_sequence(g: &Graph) -> DegreeSequence {
    DegreeSequence::new(g.degrees())
}

/// Sum of the `k` largest and of the `k` smallest degrees.
pub fn partition_degree_sums(d: &DegreeSequence, k: usize) -> Result<(usize, usize)> {
    if k > d.len() {
        return Err(Error::OutOfRange { k, n: d.len() });
    }
    Ok((d.head(k).iter().sum(), d.tail(k).iter().sum()))
}

/// Edges split by the labels of their endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeCounts {
    pub m11: u64,
    pub m10: u64,
    pub m00: u64,
    pub m: u64,
}

impl EdgeCounts {
    pub fn new(m11: u64, m10: u64, m00: u64) -> Self {
        Self {
            m11,
            m10,
            m00,
            m: m11 + m10 + m00,
        }
    }
}

pub fn edge_counts(g: &Graph, a: &MetadataAssignment) -> Result<EdgeCounts> {
    if a.len() != g.node_count() {
        return Err(Error::LengthMismatch {
            labels: a.len(),
            nodes: g.node_count(),
        });
    }
    let labels = a.labels();
    let (mut m11, mut m10, mut m00) = (0, 0, 0);
    for &(i, j) in g.edges() {
        match labels[i] + labels[j] {
            2 => m11 += 1,
            1 => m10 += 1,
            _ => m00 += 1,
        }
    }
    Ok(EdgeCounts::new(m11, m10, m00))
}
