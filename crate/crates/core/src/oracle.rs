//! Brute-force ground truth for small inputs.
//!
//! Every simple graph realizing a degree sequence is enumerated on labeled
//! slots, and assortativity is computed here as the Pearson correlation of
//! endpoint labels over both orientations of every edge, independently of
//! the count-based formulas used elsewhere in the crate.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeCounts, Graph};

/// Largest node count accepted by the enumerators.
pub const MAX_ORACLE_NODES: usize = 10;

/// Erdős–Gallai test. Order of `d` does not matter.
pub fn erdos_gallai(d: &[usize]) -> bool {
    let mut d = d.to_vec();
    d.sort_unstable_by(|a, b| b.cmp(a));
    let total: usize = d.iter().sum();
    if total % 2 == 1 {
        return false;
    }
    let n = d.len();
    let mut head = 0;
    for k in 1..=n {
        head += d[k - 1];
        let tail: usize = d[k..].iter().map(|&x| x.min(k)).sum();
        if head > k * (k - 1) + tail {
            return false;
        }
    }
    true
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_ORACLE_NODES {
        return Err(Error::TooLarge {
            n,
            max: MAX_ORACLE_NODES,
        });
    }
    Ok(())
}

/// Calls `visit` once per simple graph whose node `i` has degree `d[i]`.
pub fn for_each_realization(
    d: &[usize],
    connected_only: bool,
    mut visit: impl FnMut(&Graph),
) -> Result<()> {
    check_size(d.len())?;
    if !erdos_gallai(d) {
        return Err(Error::NotGraphical);
    }
    let mut residual = d.to_vec();
    let mut edges = Vec::new();
    let mut emit = |edges: &[(usize, usize)]| -> Result<()> {
        let g = Graph::from_edges(d.len(), edges)?;
        if !connected_only || g.is_connected() {
            visit(&g);
        }
        Ok(())
    };
    realize(&mut residual, 0, &mut edges, &mut emit)
}

fn realize(
    residual: &mut [usize],
    node: usize,
    edges: &mut Vec<(usize, usize)>,
    emit: &mut impl FnMut(&[(usize, usize)]) -> Result<()>,
) -> Result<()> {
    let n = residual.len();
    if node == n {
        return emit(edges);
    }
    let need = residual[node];
    let open: Vec<usize> = (node + 1..n).filter(|&j| residual[j] > 0).collect();
    if open.len() < need {
        return Ok(());
    }
    let mut pick: Vec<usize> = (0..need).collect();
    loop {
        for &p in &pick {
            residual[open[p]] -= 1;
            edges.push((node, open[p]));
        }
        residual[node] = 0;
        realize(residual, node + 1, edges, emit)?;
        residual[node] = need;
        for &p in &pick {
            residual[open[p]] += 1;
            edges.pop();
        }
        // next `need`-subset of positions into `open`
        let k = pick.len();
        let Some(i) = (0..k).rev().find(|&i| pick[i] < open.len() - k + i) else {
            return Ok(());
        };
        pick[i] += 1;
        for j in i + 1..k {
            pick[j] = pick[j - 1] + 1;
        }
    }
}

/// All realizations of `d` on labeled slots.
pub fn enumerate_labeled_graphs(d: &[usize], connected_only: bool) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for_each_realization(d, connected_only, |g| out.push(g.clone()))?;
    Ok(out)
}

/// Assortativity as the correlation of endpoint labels. `None` when
/// either endpoint variable is constant.
pub fn pearson_assortativity(g: &Graph, labels: &[u8]) -> Option<f64> {
    let pairs = 2.0 * g.edge_count() as f64;
    if pairs == 0.0 {
        return None;
    }
    // symmetric: both endpoint variables share their mean and variance
    let (mut sum, mut sum_sq, mut cross) = (0.0, 0.0, 0.0);
    for &(i, j) in g.edges() {
        let (x, y) = (labels[i] as f64, labels[j] as f64);
        sum += x + y;
        sum_sq += x * x + y * y;
        cross += 2.0 * x * y;
    }
    let mean = sum / pairs;
    let var = sum_sq / pairs - mean * mean;
    if var <= 1e-15 {
        return None;
    }
    Some((cross / pairs - mean * mean) / var)
}

fn count_edges(g: &Graph, labels: &[u8]) -> EdgeCounts {
    let (mut m11, mut m10, mut m00) = (0, 0, 0);
    for &(i, j) in g.edges() {
        match (labels[i], labels[j]) {
            (1, 1) => m11 += 1,
            (0, 0) => m00 += 1,
            _ => m10 += 1,
        }
    }
    EdgeCounts::new(m11, m10, m00)
}

/// One distinct `(m11, m10, m00)` outcome seen in an ensemble.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RealizedCounts {
    pub m11: u64,
    pub m10: u64,
    pub m00: u64,
    pub r: Option<f64>,
}

/// Exhaustive extremes over an ensemble.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct EnsembleTruth {
    pub degrees: Vec<usize>,
    pub n1: usize,
    /// Slot labels for graph-space ensembles.
    pub assignment: Option<Vec<u8>>,
    pub connected_only: bool,
    pub realizations: usize,
    pub states: usize,
    pub undefined: usize,
    /// Distinct count triples, sorted.
    pub outcomes: Vec<RealizedCounts>,
    pub r_min: Option<f64>,
    pub r_max: Option<f64>,
    /// `(min, max)` of each count over every state, defined or not.
    pub m11: Option<(u64, u64)>,
    pub m10: Option<(u64, u64)>,
    pub m00: Option<(u64, u64)>,
}

impl EnsembleTruth {
    fn empty(
        degrees: Vec<usize>,
        n1: usize,
        assignment: Option<Vec<u8>>,
        connected_only: bool,
    ) -> Self {
        Self {
            degrees,
            n1,
            assignment,
            connected_only,
            ..Default::default()
        }
    }

    fn observe(&mut self, g: &Graph, labels: &[u8], seen: &mut BTreeSet<(u64, u64, u64)>) {
        self.states += 1;
        let c = count_edges(g, labels);
        for (slot, v) in [
            (&mut self.m11, c.m11),
            (&mut self.m10, c.m10),
            (&mut self.m00, c.m00),
        ] {
            *slot = Some(match *slot {
                None => (v, v),
                Some((lo, hi)) => (lo.min(v), hi.max(v)),
            });
        }
        let r = pearson_assortativity(g, labels);
        if seen.insert((c.m11, c.m10, c.m00)) {
            self.outcomes.push(RealizedCounts {
                m11: c.m11,
                m10: c.m10,
                m00: c.m00,
                r,
            });
        }
        match r {
            None => self.undefined += 1,
            Some(r) => {
                self.r_min = Some(self.r_min.map_or(r, |x| x.min(r)));
                self.r_max = Some(self.r_max.map_or(r, |x| x.max(r)));
            }
        }
    }

    fn finish(mut self) -> Self {
        self.outcomes.sort_by_key(|o| (o.m11, o.m10, o.m00));
        self
    }
}

fn assignments(n: usize, n1: usize) -> Vec<Vec<u8>> {
    (0u32..1 << n)
        .filter(|mask| mask.count_ones() as usize == n1)
        .map(|mask| (0..n).map(|i| ((mask >> i) & 1) as u8).collect())
        .collect()
}

/// Every realization of `d` paired with every assignment of `n1` ones.
pub fn ensemble_truth_mgs(d: &[usize], n1: usize, connected_only: bool) -> Result<EnsembleTruth> {
    check_size(d.len())?;
    if n1 > d.len() {
        return Err(Error::OutOfRange { k: n1, n: d.len() });
    }
    let labelings = assignments(d.len(), n1);
    let mut truth = EnsembleTruth::empty(d.to_vec(), n1, None, connected_only);
    let mut seen = BTreeSet::new();
    for_each_realization(d, connected_only, |g| {
        truth.realizations += 1;
        for labels in &labelings {
            truth.observe(g, labels, &mut seen);
        }
    })?;
    Ok(truth.finish())
}

/// Every realization of `d` under the fixed slot labels `labels`.
pub fn ensemble_truth_gs(
    d: &[usize],
    labels: &[u8],
    connected_only: bool,
) -> Result<EnsembleTruth> {
    if labels.len() != d.len() {
        return Err(Error::LengthMismatch {
            labels: labels.len(),
            nodes: d.len(),
        });
    }
    let n1 = labels.iter().filter(|&&c| c == 1).count();
    let mut truth = EnsembleTruth::empty(d.to_vec(), n1, Some(labels.to_vec()), connected_only);
    let mut seen = BTreeSet::new();
    for_each_realization(d, connected_only, |g| {
        truth.realizations += 1;
        truth.observe(g, labels, &mut seen);
    })?;
    Ok(truth.finish())
}

/// Extremes of `r` over all relabelings of one graph with `n1` ones.
pub fn metadata_space_truth(g: &Graph, n1: usize) -> Result<EnsembleTruth> {
    let n = g.node_count();
    if n > 20 {
        return Err(Error::TooLarge { n, max: 20 });
    }
    if n1 > n {
        return Err(Error::OutOfRange { k: n1, n });
    }
    let mut truth = EnsembleTruth::empty(g.degrees(), n1, None, false);
    truth.realizations = 1;
    let mut seen = BTreeSet::new();
    for labels in assignments(n, n1) {
        truth.observe(g, &labels, &mut seen);
    }
    Ok(truth.finish())
}
