//! Empirical exploration of the metadata space (all relabelings of a fixed
//! graph with fixed label counts) and of the graph space (degree-preserving
//! rewirings under a fixed assignment).
//!
//! Randomised explorers draw from ChaCha8 streams derived from
//! `(seed, work item)`, where work items are fixed-size chunks of samples or
//! single restarts. Results are merged in work-item order, so a report
//! depends only on its inputs and seed, never on the number of threads.

use std::collections::HashSet;

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{edge_counts, EdgeCounts, Graph, MetadataAssignment};
use crate::mixing::assortativity_from_counts;

pub const DEFAULT_BINS: usize = 100;
pub const DEFAULT_ENUMERATION_CAP: u128 = 5_000_000;
const CHUNK: u64 = 4096;
const TIE_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExploredSpace {
    /// Relabelings of one fixed graph.
    Ms,
    /// Rewirings of the graph under one fixed assignment.
    Gs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Enumeration,
    Permutation,
    Heuristic,
    Rewiring,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Objective {
    Min,
    Max,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Upper,
    Lower,
}

/// Equal-width histogram over `[-1, 1]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Histogram {
    pub bin_edges: Vec<f64>,
    pub counts: Vec<u64>,
}

impl Histogram {
    pub fn new(bins: usize) -> Result<Self> {
        if bins == 0 {
            return Err(Error::InvalidConfig(
                "histogram needs at least one bin".into(),
            ));
        }
        let bin_edges = (0..=bins)
            .map(|k| -1.0 + 2.0 * k as f64 / bins as f64)
            .collect();
        Ok(Self {
            bin_edges,
            counts: vec![0; bins],
        })
    }

    pub fn bins(&self) -> usize {
        self.counts.len()
    }

    pub fn add(&mut self, r: f64) {
        let bins = self.bins();
        let position = ((r + 1.0) / 2.0 * bins as f64).floor();
        let index = (position.max(0.0) as usize).min(bins - 1);
        self.counts[index] += 1;
    }

    fn merge(&mut self, other: &Histogram) {
        for (a, b) in self.counts.iter_mut().zip(&other.counts) {
            *a += b;
        }
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// `bin_left,bin_right,count` rows with a header line.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("bin_left,bin_right,count\n");
        for (k, count) in self.counts.iter().enumerate() {
            out.push_str(&format!(
                "{},{},{}\n",
                self.bin_edges[k],
                self.bin_edges[k + 1],
                count
            ));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HeuristicSummary {
    pub objective: Objective,
    pub iterations: usize,
    pub restarts: usize,
    pub p_accept: f64,
    pub best_r: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RewiringSummary {
    pub swaps_per_sample: usize,
    pub keep_connected: bool,
    pub accepted_swaps: u64,
    pub attempted_swaps: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExplorationReport {
    pub space: ExploredSpace,
    pub method: Method,
    pub n1: usize,
    /// Samples with a defined assortativity; equals the histogram total.
    pub sample_count: u64,
    /// Samples whose assortativity is undefined (single-class edge set).
    pub undefined_count: u64,
    pub r_min_observed: Option<f64>,
    pub r_max_observed: Option<f64>,
    pub mean_r: Option<f64>,
    /// Nodes labeled 1 in a sample attaining the minimum / maximum.
    pub min_witness: Option<Vec<usize>>,
    pub max_witness: Option<Vec<usize>>,
    pub histogram: Histogram,
    pub seed: Option<u64>,
    pub heuristic: Option<HeuristicSummary>,
    pub rewiring: Option<RewiringSummary>,
}

/// Running summary of evaluated samples.
#[derive(Debug, Clone)]
struct Tally {
    histogram: Histogram,
    defined: u64,
    undefined: u64,
    sum: f64,
    min: Option<(f64, Vec<usize>)>,
    max: Option<(f64, Vec<usize>)>,
    track_witness: bool,
}

impl Tally {
    fn new(bins: usize, track_witness: bool) -> Result<Self> {
        Ok(Self {
            histogram: Histogram::new(bins)?,
            defined: 0,
            undefined: 0,
            sum: 0.0,
            min: None,
            max: None,
            track_witness,
        })
    }

    fn record(&mut self, r: Option<f64>, labels: &[u8]) {
        let Some(r) = r else {
            self.undefined += 1;
            return;
        };
        self.defined += 1;
        self.sum += r;
        self.histogram.add(r);
        let witness = |labels: &[u8], track: bool| {
            if track {
                ones_of(labels)
            } else {
                Vec::new()
            }
        };
        if self.min.as_ref().is_none_or(|(best, _)| r < *best) {
            self.min = Some((r, witness(labels, self.track_witness)));
        }
        if self.max.as_ref().is_none_or(|(best, _)| r > *best) {
            self.max = Some((r, witness(labels, self.track_witness)));
        }
    }

    /// Appends `other`, which must come later in work-item order.
    fn merge(&mut self, other: Tally) {
        self.histogram.merge(&other.histogram);
        self.defined += other.defined;
        self.undefined += other.undefined;
        self.sum += other.sum;
        if let Some((r, w)) = other.min {
            if self.min.as_ref().is_none_or(|(best, _)| r < *best) {
                self.min = Some((r, w));
            }
        }
        if let Some((r, w)) = other.max {
            if self.max.as_ref().is_none_or(|(best, _)| r > *best) {
                self.max = Some((r, w));
            }
        }
    }

    fn into_report(
        self,
        space: ExploredSpace,
        method: Method,
        n1: usize,
        seed: Option<u64>,
    ) -> ExplorationReport {
        let r_min = self.min.as_ref().map(|m| m.0);
        let r_max = self.max.as_ref().map(|m| m.0);
        let mean_r = match (r_min, r_max) {
            // rounding in the sum must not push the mean outside the range
            (Some(lo), Some(hi)) => Some((self.sum / self.defined as f64).clamp(lo, hi)),
            _ => None,
        };
        let keep = self.track_witness;
        ExplorationReport {
            space,
            method,
            n1,
            sample_count: self.defined,
            undefined_count: self.undefined,
            r_min_observed: r_min,
            r_max_observed: r_max,
            mean_r,
            min_witness: self.min.filter(|_| keep).map(|m| m.1),
            max_witness: self.max.filter(|_| keep).map(|m| m.1),
            histogram: self.histogram,
            seed,
            heuristic: None,
            rewiring: None,
        }
    }
}

fn ones_of(labels: &[u8]) -> Vec<usize> {
    labels
        .iter()
        .enumerate()
        .filter(|(_, &c)| c == 1)
        .map(|(i, _)| i)
        .collect()
}

fn counts_for(g: &Graph, labels: &[u8]) -> EdgeCounts {
    let (mut m11, mut m10, mut m00) = (0, 0, 0);
    for &(i, j) in g.edges() {
        match labels[i] + labels[j] {
            2 => m11 += 1,
            1 => m10 += 1,
            _ => m00 += 1,
        }
    }
    EdgeCounts::new(m11, m10, m00)
}

fn r_of(counts: &EdgeCounts) -> Option<f64> {
    assortativity_from_counts(counts).ok()
}

/// Independent ChaCha8 stream for one work item.
pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Runs `f` on a dedicated pool of `threads` workers, or on the global pool
/// when `threads` is `None`.
pub fn with_threads<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match threads {
        None => Ok(f()),
        Some(0) => Err(Error::InvalidConfig("thread count must be positive".into())),
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map(|pool| pool.install(f))
            .map_err(|e| Error::InvalidConfig(e.to_string())),
    }
}

fn check_partition(g: &Graph, n1: usize) -> Result<()> {
    let n = g.node_count();
    if n1 == 0 || n1 >= n {
        return Err(Error::DegeneratePartition { n1, n });
    }
    Ok(())
}

/// `C(n, k)`, saturating at `u128::MAX`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step
        match acc.checked_mul((n - i) as u128) {
            Some(v) => acc = v / (i as u128 + 1),
            None => return u128::MAX,
        }
    }
    acc
}

/// Lexicographic `rank`-th `k`-subset of `0..n`.
fn unrank_combination(n: usize, k: usize, mut rank: u128) -> Vec<usize> {
    let mut out = Vec::with_capacity(k);
    let mut x = 0;
    for i in 0..k {
        loop {
            let below = binomial(n - x - 1, k - i - 1);
            if below <= rank {
                rank -= below;
                x += 1;
            } else {
                break;
            }
        }
        out.push(x);
        x += 1;
    }
    out
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let Some(i) = (0..k).rev().find(|&i| c[i] < n - k + i) else {
        return false;
    };
    c[i] += 1;
    for j in i + 1..k {
        c[j] = c[j - 1] + 1;
    }
    true
}

/// Evaluates `r` for every assignment with `n1` ones.
pub fn enumerate_metadata_space(
    g: &Graph,
    n1: usize,
    cap: u128,
    bins: usize,
) -> Result<ExplorationReport> {
    check_partition(g, n1)?;
    let n = g.node_count();
    let total = binomial(n, n1);
    if total > cap {
        return Err(Error::TooManyCombinations {
            n,
            k: n1,
            combinations: total,
            cap,
        });
    }
    let chunks = total.div_ceil(CHUNK as u128);
    let tallies: Vec<Result<Tally>> = (0..chunks)
        .into_par_iter()
        .map(|chunk| {
            let mut tally = Tally::new(bins, true)?;
            let start = chunk * CHUNK as u128;
            let len = (total - start).min(CHUNK as u128);
            let mut combo = unrank_combination(n, n1, start);
            let mut labels = vec![0u8; n];
            for step in 0..len {
                if step > 0 {
                    next_combination(&mut combo, n);
                }
                labels.fill(0);
                for &i in &combo {
                    labels[i] = 1;
                }
                tally.record(r_of(&counts_for(g, &labels)), &labels);
            }
            Ok(tally)
        })
        .collect();
    let tally = merge_all(tallies, bins, true)?;
    Ok(tally.into_report(ExploredSpace::Ms, Method::Enumeration, n1, None))
}

fn merge_all(tallies: Vec<Result<Tally>>, bins: usize, track: bool) -> Result<Tally> {
    let mut total = Tally::new(bins, track)?;
    for t in tallies {
        total.merge(t?);
    }
    Ok(total)
}

/// Draws `samples` uniform assignments with `n1` ones; when `observed` is
/// given, also counts samples at least as extreme on that side.
fn permutation_tally(
    g: &Graph,
    n1: usize,
    samples: u64,
    seed: u64,
    bins: usize,
    observed: Option<(f64, Side)>,
) -> Result<(Tally, u64)> {
    let n = g.node_count();
    let chunks = samples.div_ceil(CHUNK);
    let parts: Vec<Result<(Tally, u64)>> = (0..chunks)
        .into_par_iter()
        .map(|chunk| {
            let mut rng = stream_rng(seed, chunk);
            let mut tally = Tally::new(bins, true)?;
            let mut extreme = 0u64;
            let mut labels = vec![0u8; n];
            let len = (samples - chunk * CHUNK).min(CHUNK);
            for _ in 0..len {
                labels.fill(0);
                for i in index::sample(&mut rng, n, n1) {
                    labels[i] = 1;
                }
                let r = r_of(&counts_for(g, &labels));
                if let (Some(r), Some((obs, side))) = (r, observed) {
                    let hit = match side {
                        Side::Upper => r >= obs - TIE_TOLERANCE,
                        Side::Lower => r <= obs + TIE_TOLERANCE,
                    };
                    extreme += u64::from(hit);
                }
                tally.record(r, &labels);
            }
            Ok((tally, extreme))
        })
        .collect();
    let mut total = Tally::new(bins, true)?;
    let mut extreme = 0;
    for part in parts {
        let (t, e) = part?;
        total.merge(t);
        extreme += e;
    }
    Ok((total, extreme))
}

/// Uniformly random relabelings with `n1` ones.
pub fn sample_permutations(
    g: &Graph,
    n1: usize,
    samples: u64,
    seed: u64,
    bins: usize,
) -> Result<ExplorationReport> {
    check_partition(g, n1)?;
    if samples == 0 {
        return Err(Error::InvalidConfig("samples must be at least 1".into()));
    }
    let (tally, _) = permutation_tally(g, n1, samples, seed, bins, None)?;
    Ok(tally.into_report(ExploredSpace::Ms, Method::Permutation, n1, Some(seed)))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PermutationTest {
    pub observed_r: f64,
    pub side: Side,
    /// Sampled values at least as extreme as the observed one (ties count).
    pub extreme_count: u64,
    /// `(1 + extreme_count) / (sample_count + 1)`.
    pub p_value: f64,
    pub report: ExplorationReport,
}

/// One-sided permutation test of the observed assortativity against
/// uniform relabelings that keep `n1` fixed.
pub fn permutation_pvalue(
    g: &Graph,
    a: &MetadataAssignment,
    samples: u64,
    seed: u64,
    side: Side,
    bins: usize,
) -> Result<PermutationTest> {
    check_partition(g, a.n1())?;
    if samples == 0 {
        return Err(Error::InvalidConfig("samples must be at least 1".into()));
    }
    let observed_r =
        assortativity_from_counts(&edge_counts(g, a)?).map_err(|_| Error::UndefinedObserved)?;
    let (tally, extreme) =
        permutation_tally(g, a.n1(), samples, seed, bins, Some((observed_r, side)))?;
    let report = tally.into_report(ExploredSpace::Ms, Method::Permutation, a.n1(), Some(seed));
    let p_value = (1 + extreme) as f64 / (report.sample_count + 1) as f64;
    Ok(PermutationTest {
        observed_r,
        side,
        extreme_count: extreme,
        p_value,
        report,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct HeuristicConfig {
    pub objective: Objective,
    /// Swap proposals per restart.
    pub iterations: usize,
    pub restarts: usize,
    /// Probability of accepting a non-improving swap.
    pub p_accept: f64,
    pub seed: u64,
    /// Start every restart here instead of at a random assignment.
    pub initial: Option<MetadataAssignment>,
}

impl HeuristicConfig {
    pub fn new(objective: Objective, seed: u64) -> Self {
        Self {
            objective,
            iterations: 10_000,
            restarts: 10,
            p_accept: 0.001,
            seed,
            initial: None,
        }
    }

    fn validate(&self, g: &Graph, n1: usize) -> Result<()> {
        if !(0.0..=1.0).contains(&self.p_accept) {
            return Err(Error::InvalidConfig(format!(
                "acceptance probability {} outside [0, 1]",
                self.p_accept
            )));
        }
        if self.iterations == 0 || self.restarts == 0 {
            return Err(Error::InvalidConfig(
                "iterations and restarts must be at least 1".into(),
            ));
        }
        if let Some(a) = &self.initial {
            if a.len() != g.node_count() || a.n1() != n1 {
                return Err(Error::InvalidConfig(
                    "initial assignment does not match the graph and n1".into(),
                ));
            }
        }
        Ok(())
    }
}

/// Edge counts after exchanging the labels of `one` (labeled 1) and
/// `zero` (labeled 0).
fn counts_after_swap(
    g: &Graph,
    labels: &[u8],
    one: usize,
    zero: usize,
    c: EdgeCounts,
) -> EdgeCounts {
    let (mut m11, mut m10, mut m00) = (c.m11 as i64, c.m10 as i64, c.m00 as i64);
    for &k in g.neighbors(one) {
        if k == zero {
            continue;
        }
        if labels[k] == 1 {
            m11 -= 1;
            m10 += 1;
        } else {
            m10 -= 1;
            m00 += 1;
        }
    }
    for &k in g.neighbors(zero) {
        if k == one {
            continue;
        }
        if labels[k] == 1 {
            m10 -= 1;
            m11 += 1;
        } else {
            m00 -= 1;
            m10 += 1;
        }
    }
    EdgeCounts::new(m11 as u64, m10 as u64, m00 as u64)
}

fn improves(objective: Objective, candidate: f64, current: Option<f64>) -> bool {
    match (objective, current) {
        (_, None) => true,
        (Objective::Max, Some(c)) => candidate > c,
        (Objective::Min, Some(c)) => candidate < c,
    }
}

fn run_restart(
    g: &Graph,
    n1: usize,
    cfg: &HeuristicConfig,
    restart: u64,
    bins: usize,
) -> Result<Tally> {
    let n = g.node_count();
    let mut rng = stream_rng(cfg.seed, restart);
    let mut labels = match &cfg.initial {
        Some(a) => a.labels().to_vec(),
        None => {
            let mut labels = vec![0u8; n];
            for i in index::sample(&mut rng, n, n1) {
                labels[i] = 1;
            }
            labels
        }
    };
    let mut ones: Vec<usize> = (0..n).filter(|&i| labels[i] == 1).collect();
    let mut zeros: Vec<usize> = (0..n).filter(|&i| labels[i] == 0).collect();
    let mut counts = counts_for(g, &labels);
    let mut current = r_of(&counts);
    let mut tally = Tally::new(bins, true)?;
    tally.record(current, &labels);

    for _ in 0..cfg.iterations {
        let a = rng.random_range(0..ones.len());
        let b = rng.random_range(0..zeros.len());
        let (one, zero) = (ones[a], zeros[b]);
        let proposed = counts_after_swap(g, &labels, one, zero, counts);
        let accept = match r_of(&proposed) {
            None => {
                tally.undefined += 1;
                false
            }
            Some(r) => improves(cfg.objective, r, current) || rng.random_bool(cfg.p_accept),
        };
        if accept {
            labels[one] = 0;
            labels[zero] = 1;
            ones[a] = zero;
            zeros[b] = one;
            counts = proposed;
            current = r_of(&counts);
        }
        tally.record(current, &labels);
    }
    Ok(tally)
}

/// Label-swap local search for the extreme assortativity of the metadata
/// space. Each restart starts from a random assignment (or
/// `cfg.initial`), proposes exchanging a random 1-node with a random
/// 0-node, keeps improving swaps and accepts other swaps with probability
/// `p_accept`. The best value seen over all restarts is reported.
pub fn swap_heuristic(
    g: &Graph,
    n1: usize,
    cfg: &HeuristicConfig,
    bins: usize,
) -> Result<ExplorationReport> {
    check_partition(g, n1)?;
    cfg.validate(g, n1)?;
    let tallies: Vec<Result<Tally>> = (0..cfg.restarts as u64)
        .into_par_iter()
        .map(|restart| run_restart(g, n1, cfg, restart, bins))
        .collect();
    let tally = merge_all(tallies, bins, true)?;
    let mut report = tally.into_report(ExploredSpace::Ms, Method::Heuristic, n1, Some(cfg.seed));
    let best_r = match cfg.objective {
        Objective::Min => report.r_min_observed,
        Objective::Max => report.r_max_observed,
    };
    report.heuristic = Some(HeuristicSummary {
        objective: cfg.objective,
        iterations: cfg.iterations,
        restarts: cfg.restarts,
        p_accept: cfg.p_accept,
        best_r,
    });
    Ok(report)
}

/// Settings for graph-space sampling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewireConfig {
    /// Accepted swaps applied to the observed graph per sample.
    pub swaps_per_sample: usize,
    pub samples: u64,
    pub seed: u64,
    /// Reject swaps that would disconnect a connected input.
    pub keep_connected: bool,
}

impl RewireConfig {
    pub fn new(swaps_per_sample: usize, samples: u64, seed: u64) -> Self {
        Self {
            swaps_per_sample,
            samples,
            seed,
            keep_connected: true,
        }
    }
}

/// Degree-preserving rewiring by double-edge swaps.
struct Rewirer {
    edges: Vec<(usize, usize)>,
    present: HashSet<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    keep_connected: bool,
}

impl Rewirer {
    fn new(g: &Graph, keep_connected: bool) -> Self {
        Self {
            edges: g.edges().to_vec(),
            present: g.edges().iter().copied().collect(),
            adjacency: (0..g.node_count())
                .map(|i| g.neighbors(i).to_vec())
                .collect(),
            keep_connected: keep_connected && g.is_connected(),
        }
    }

    fn key(a: usize, b: usize) -> (usize, usize) {
        (a.min(b), a.max(b))
    }

    fn unlink(&mut self, a: usize, b: usize) {
        for (x, y) in [(a, b), (b, a)] {
            let list = &mut self.adjacency[x];
            let pos = list.iter().position(|&k| k == y).expect("edge present");
            list.swap_remove(pos);
        }
    }

    fn link(&mut self, a: usize, b: usize) {
        self.adjacency[a].push(b);
        self.adjacency[b].push(a);
    }

    fn reachable(&self, from: usize, to: usize) -> bool {
        let mut seen = vec![false; self.adjacency.len()];
        let mut stack = vec![from];
        seen[from] = true;
        while let Some(x) = stack.pop() {
            if x == to {
                return true;
            }
            for &y in &self.adjacency[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        false
    }

    /// Proposes replacing `(a, b), (c, d)` with `(a, d), (c, b)`. Returns
    /// the removed and added edges when the move keeps the graph simple
    /// (and connected, if required).
    fn try_swap<R: Rng>(&mut self, rng: &mut R) -> Option<[(usize, usize); 4]> {
        let m = self.edges.len();
        if m < 2 {
            return None;
        }
        let e1 = rng.random_range(0..m);
        let mut e2 = rng.random_range(0..m - 1);
        if e2 >= e1 {
            e2 += 1;
        }
        let (a, b) = self.edges[e1];
        let (c, d) = if rng.random_bool(0.5) {
            self.edges[e2]
        } else {
            let (x, y) = self.edges[e2];
            (y, x)
        };
        if a == d || c == b {
            return None;
        }
        let (new1, new2) = (Self::key(a, d), Self::key(c, b));
        if self.present.contains(&new1) || self.present.contains(&new2) {
            return None;
        }
        self.unlink(a, b);
        self.unlink(c, d);
        self.link(a, d);
        self.link(c, b);
        // every other path survives if both removed edges are bypassed
        if self.keep_connected && !(self.reachable(a, b) && self.reachable(c, d)) {
            self.unlink(a, d);
            self.unlink(c, b);
            self.link(a, b);
            self.link(c, d);
            return None;
        }
        let (old1, old2) = (self.edges[e1], self.edges[e2]);
        self.present.remove(&old1);
        self.present.remove(&old2);
        self.present.insert(new1);
        self.present.insert(new2);
        self.edges[e1] = new1;
        self.edges[e2] = new2;
        Some([old1, old2, new1, new2])
    }

    /// Runs proposals until `swaps` are accepted or the attempt cap is hit;
    /// `on_accept` sees every accepted move. Returns (accepted, attempted).
    fn run<R: Rng>(
        &mut self,
        swaps: usize,
        rng: &mut R,
        mut on_accept: impl FnMut([(usize, usize); 4]),
    ) -> (u64, u64) {
        let cap = 100 * swaps as u64 + 100;
        let (mut accepted, mut attempts) = (0u64, 0u64);
        while accepted < swaps as u64 && attempts < cap && self.edges.len() >= 2 {
            attempts += 1;
            if let Some(mv) = self.try_swap(rng) {
                accepted += 1;
                on_accept(mv);
            }
        }
        (accepted, attempts)
    }
}

/// Applies up to `swaps` accepted double-edge swaps to a copy of `g`.
/// Returns the rewired graph with the accepted and attempted swap counts.
pub fn double_edge_swap(
    g: &Graph,
    swaps: usize,
    seed: u64,
    stream: u64,
    keep_connected: bool,
) -> Result<(Graph, u64, u64)> {
    let mut rng = stream_rng(seed, stream);
    let mut rewirer = Rewirer::new(g, keep_connected);
    let (accepted, attempts) = rewirer.run(swaps, &mut rng, |_| {});
    let mut rewired = Graph::from_edges(g.node_count(), &rewirer.edges)?;
    if let Some(names) = g.node_labels() {
        rewired = rewired.with_node_labels(names.to_vec())?;
    }
    Ok((rewired, accepted, attempts))
}

/// Samples the graph space: every sample starts from `g`, applies
/// `cfg.swaps_per_sample` accepted double-edge swaps and records `r` under
/// the fixed assignment `a`. A proposal budget of `100 * swaps + 100`
/// attempts per sample keeps nearly rigid graphs from stalling.
pub fn rewire_graph_space(
    g: &Graph,
    a: &MetadataAssignment,
    cfg: &RewireConfig,
    bins: usize,
) -> Result<ExplorationReport> {
    let base = edge_counts(g, a)?;
    let labels = a.labels();
    let parts: Vec<Result<(Tally, u64, u64)>> = (0..cfg.samples)
        .into_par_iter()
        .map(|sample| {
            let mut rng = stream_rng(cfg.seed, sample);
            let mut rewirer = Rewirer::new(g, cfg.keep_connected);
            let (mut m11, mut m10, mut m00) = (base.m11 as i64, base.m10 as i64, base.m00 as i64);
            let (accepted, attempts) = rewirer.run(cfg.swaps_per_sample, &mut rng, |mv| {
                let [old1, old2, new1, new2] = mv;
                for (edge, sign) in [(old1, -1), (old2, -1), (new1, 1), (new2, 1)] {
                    match labels[edge.0] + labels[edge.1] {
                        2 => m11 += sign,
                        1 => m10 += sign,
                        _ => m00 += sign,
                    }
                }
            });
            let counts = EdgeCounts::new(m11 as u64, m10 as u64, m00 as u64);
            let mut tally = Tally::new(bins, false)?;
            tally.record(r_of(&counts), labels);
            Ok((tally, accepted, attempts))
        })
        .collect();
    let mut tally = Tally::new(bins, false)?;
    let (mut accepted, mut attempted) = (0, 0);
    for part in parts {
        let (t, acc, att) = part?;
        tally.merge(t);
        accepted += acc;
        attempted += att;
    }
    let mut report = tally.into_report(ExploredSpace::Gs, Method::Rewiring, a.n1(), Some(cfg.seed));
    report.rewiring = Some(RewiringSummary {
        swaps_per_sample: cfg.swaps_per_sample,
        keep_connected: cfg.keep_connected && g.is_connected(),
        accepted_swaps: accepted,
        attempted_swaps: attempted,
    });
    Ok(report)
}
