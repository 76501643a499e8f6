//! Combinatorial bounds on the edge counts `m11`, `m10`, `m00` and on the
//! assortativity coefficient, for two ensembles:
//!
//! * the metadata-graph space ([`Space::Mgs`]): every graph with a given
//!   degree sequence under every assignment with `n1` ones;
//! * the graph space ([`Space::Gs`]): every graph with the degree sequence
//!   under one fixed assignment, i.e. with a fixed split of the degrees into
//!   a one-part and a zero-part.
//!
//! All edge-count bounds use exact integer arithmetic. Bounds for `m00` are
//! those of `m11` with the roles of the two labels exchanged. The `m10`
//! lower bound of 1 presumes a connected realization.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{degree_sequence, DegreeSequence, EdgeCounts, Graph, MetadataAssignment};
use crate::mixing::assortativity_from_counts;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Space {
    /// Degree sequence and label counts fixed.
    Mgs,
    /// Degree sequence and the assignment fixed.
    Gs,
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Space::Mgs => "mgs",
            Space::Gs => "gs",
        })
    }
}

/// Which family of lower bounds to use. `Original` keeps the first-order
/// bounds (`Σ d` for the opposite part, a single clique residual for `m10`)
/// so the refinement can be compared against them.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundVariant {
    #[default]
    Improved,
    Original,
}

/// Fixed split of a degree multiset into the degrees of 1-labeled and
/// 0-labeled nodes. Both parts are kept sorted non-increasing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreePartition {
    ones: Vec<usize>,
    zeros: Vec<usize>,
}

impl DegreePartition {
    pub fn new(mut ones: Vec<usize>, mut zeros: Vec<usize>) -> Self {
        ones.sort_unstable_by(|a, b| b.cmp(a));
        zeros.sort_unstable_by(|a, b| b.cmp(a));
        Self { ones, zeros }
    }

    pub fn from_assignment(g: &Graph, a: &MetadataAssignment) -> Result<Self> {
        if a.len() != g.node_count() {
            return Err(Error::LengthMismatch {
                labels: a.len(),
                nodes: g.node_count(),
            });
        }
        let (mut ones, mut zeros) = (Vec::new(), Vec::new());
        for (node, &c) in a.labels().iter().enumerate() {
            if c == 1 {
                ones.push(g.degree(node));
            } else {
                zeros.push(g.degree(node));
            }
        }
        Ok(Self::new(ones, zeros))
    }

    pub fn ones(&self) -> &[usize] {
        &self.ones
    }

    pub fn zeros(&self) -> &[usize] {
        &self.zeros
    }

    pub fn flipped(&self) -> Self {
        Self {
            ones: self.zeros.clone(),
            zeros: self.ones.clone(),
        }
    }

    fn check(&self, d: &DegreeSequence, n1: usize) -> Result<()> {
        if self.ones.len() != n1 {
            return Err(Error::InvalidPartition(format!(
                "one-part has {} degrees, expected n1 = {n1}",
                self.ones.len()
            )));
        }
        let mut merged: Vec<usize> = self.ones.iter().chain(&self.zeros).copied().collect();
        merged.sort_unstable_by(|a, b| b.cmp(a));
        if merged != d.as_slice() {
            return Err(Error::InvalidPartition(
                "parts do not form the degree sequence".into(),
            ));
        }
        Ok(())
    }
}

/// Degrees relevant to one bound, already resolved for the space.
struct Parts<'a> {
    n: usize,
    n1: usize,
    n0: usize,
    m: i64,
    d: &'a DegreeSequence,
    partition: Option<&'a DegreePartition>,
}

impl<'a> Parts<'a> {
    fn resolve(
        d: &'a DegreeSequence,
        n1: usize,
        space: Space,
        partition: Option<&'a DegreePartition>,
    ) -> Result<Self> {
        let n = d.len();
        if n1 > n {
            return Err(Error::OutOfRange { k: n1, n });
        }
        let partition = match space {
            Space::Mgs => None,
            Space::Gs => {
                let p = partition.ok_or_else(|| {
                    Error::InvalidPartition("graph-space bounds need a fixed partition".into())
                })?;
                p.check(d, n1)?;
                Some(p)
            }
        };
        Ok(Self {
            n,
            n1,
            n0: n - n1,
            m: (d.sum() / 2) as i64,
            d,
            partition,
        })
    }

    /// Degrees of the 1-part that maximise its degree sum.
    fn ones_high(&self) -> &[usize] {
        self.partition
            .map_or_else(|| self.d.head(self.n1), |p| p.ones())
    }

    /// Degrees of the 1-part that minimise its degree sum.
    fn ones_low(&self) -> &[usize] {
        self.partition
            .map_or_else(|| self.d.tail(self.n1), |p| p.ones())
    }

    fn zeros_high(&self) -> &[usize] {
        self.partition
            .map_or_else(|| self.d.head(self.n0), |p| p.zeros())
    }

    fn zeros_low(&self) -> &[usize] {
        self.partition
            .map_or_else(|| self.d.tail(self.n0), |p| p.zeros())
    }
}

fn sum_capped(degrees: &[usize], cap: usize) -> i64 {
    degrees.iter().map(|&d| d.min(cap) as i64).sum()
}

fn sum_excess(degrees: &[usize], allowance: usize) -> i64 {
    degrees
        .iter()
        .map(|&d| d.saturating_sub(allowance) as i64)
        .sum()
}

fn sum(degrees: &[usize]) -> i64 {
    degrees.iter().map(|&d| d as i64).sum()
}

fn pairs(k: usize) -> i64 {
    (k * k.saturating_sub(1) / 2) as i64
}

/// Upper bound on `m11`: no more than `m` edges, than a clique on the `n1`
/// nodes, or than half the degree the 1-part can spend internally.
pub fn m11_upper(
    d: &DegreeSequence,
    n1: usize,
    space: Space,
    partition: Option<&DegreePartition>,
) -> Result<u64> {
    let p = Parts::resolve(d, n1, space, partition)?;
    let internal = sum_capped(p.ones_high(), n1.saturating_sub(1));
    let half = (internal + 1) / 2;
    Ok(p.m.min(pairs(n1)).min(half) as u64)
}

/// Upper bound on `m10`: no more than `m`, than `n1 n0`, or than the
/// cross-degree either part can offer.
pub fn m10_upper(
    d: &DegreeSequence,
    n1: usize,
    space: Space,
    partition: Option<&DegreePartition>,
) -> Result<u64> {
    let p = Parts::resolve(d, n1, space, partition)?;
    let from_ones = sum_capped(p.ones_high(), p.n0);
    let from_zeros = sum_capped(p.zeros_high(), p.n1);
    let bipartite = (p.n1 * p.n0) as i64;
    Ok(p.m.min(bipartite).min(from_ones.min(from_zeros)) as u64)
}

/// Lower bound on `m11`: the 1-part's degree that cannot be absorbed by
/// cross edges, each 0-node taking at most `n1` of them.
pub fn m11_lower(
    d: &DegreeSequence,
    n1: usize,
    space: Space,
    partition: Option<&DegreePartition>,
) -> Result<u64> {
    let p = Parts::resolve(d, n1, space, partition)?;
    let residual = sum(p.ones_low()) - sum_capped(p.zeros_high(), p.n1);
    Ok(residual.div_euclid(2).max(0) as u64)
}

/// First-order `m11` lower bound that charges the full degree of the
/// opposite part.
pub fn m11_lower_original(
    d: &DegreeSequence,
    n1: usize,
    space: Space,
    partition: Option<&DegreePartition>,
) -> Result<u64> {
    let p = Parts::resolve(d, n1, space, partition)?;
    let residual = sum(p.ones_low()) - sum(p.zeros_high());
    Ok(residual.div_euclid(2).max(0) as u64)
}

/// Lower bound on `m10` for connected realizations.
///
/// Every node has at most `n_c - 1` neighbours in its own class, so the rest
/// of its degree crosses. In the metadata-graph space the same excess is also
/// bounded over all nodes using the larger class size.
pub fn m10_lower(
    d: &DegreeSequence,
    n1: usize,
    space: Space,
    partition: Option<&DegreePartition>,
) -> Result<u64> {
    let p = Parts::resolve(d, n1, space, partition)?;
    if p.n1 == 0 || p.n1 == p.n {
        return Ok(0);
    }
    let ones = sum_excess(p.ones_low(), p.n1 - 1);
    let zeros = sum_excess(p.zeros_low(), p.n0 - 1);
    let mut bound = 1.max(ones).max(zeros);
    if space == Space::Mgs {
        let global = sum_excess(d.as_slice(), p.n1.max(p.n0) - 1) / 2;
        bound = bound.max(global);
    }
    Ok(bound as u64)
}

/// First-order `m10` lower bound: the 1-part's degree beyond a clique.
pub fn m10_lower_original(
    d: &DegreeSequence,
    n1: usize,
    space: Space,
    partition: Option<&DegreePartition>,
) -> Result<u64> {
    let p = Parts::resolve(d, n1, space, partition)?;
    if p.n1 == 0 || p.n1 == p.n {
        return Ok(0);
    }
    let excess = sum(p.ones_low()) - (p.n1 * (p.n1 - 1)) as i64;
    Ok(excess.max(1) as u64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountInterval {
    pub lower: u64,
    pub upper: u64,
}

/// Lower and upper bounds for each edge count in one space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeCountBounds {
    pub space: Space,
    pub variant: BoundVariant,
    pub n1: usize,
    pub n0: usize,
    pub m: u64,
    pub m11: CountInterval,
    pub m10: CountInterval,
    pub m00: CountInterval,
}

/// All six edge-count bounds for `n1` ones.
pub fn edge_count_bounds(
    d: &DegreeSequence,
    n1: usize,
    space: Space,
    partition: Option<&DegreePartition>,
    variant: BoundVariant,
) -> Result<EdgeCountBounds> {
    if n1 > d.len() {
        return Err(Error::OutOfRange { k: n1, n: d.len() });
    }
    let n0 = d.len() - n1;
    let flipped = partition.map(DegreePartition::flipped);
    let flipped = flipped.as_ref();
    let (m11_low, m00_low, m10_low) = match variant {
        BoundVariant::Improved => (
            m11_lower(d, n1, space, partition)?,
            m11_lower(d, n0, space, flipped)?,
            m10_lower(d, n1, space, partition)?,
        ),
        BoundVariant::Original => (
            m11_lower_original(d, n1, space, partition)?,
            m11_lower_original(d, n0, space, flipped)?,
            m10_lower_original(d, n1, space, partition)?,
        ),
    };
    Ok(EdgeCountBounds {
        space,
        variant,
        n1,
        n0,
        m: (d.sum() / 2) as u64,
        m11: CountInterval {
            lower: m11_low,
            upper: m11_upper(d, n1, space, partition)?,
        },
        m10: CountInterval {
            lower: m10_low,
            upper: m10_upper(d, n1, space, partition)?,
        },
        m00: CountInterval {
            lower: m00_low,
            upper: m11_upper(d, n0, space, flipped)?,
        },
    })
}

/// Upper assortativity bound and the balanced split that realises it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UpperBound {
    pub r: f64,
    /// `m11 = m00 = (m - m10_lower) / 2`; two integer splits when odd.
    pub splits: Vec<EdgeCounts>,
}

/// `r_upper = 1 - 2 m10_lower / m`.
pub fn assortativity_upper(ecb: &EdgeCountBounds) -> Result<UpperBound> {
    let m = ecb.m;
    if m == 0 {
        return Err(Error::EmptyGraph);
    }
    let m10 = ecb.m10.lower;
    let rest = m.saturating_sub(m10);
    let (low, high) = (rest / 2, rest - rest / 2);
    let mut splits = vec![EdgeCounts::new(low, m10, high)];
    if low != high {
        splits.push(EdgeCounts::new(high, m10, low));
    }
    Ok(UpperBound {
        r: 1.0 - 2.0 * m10 as f64 / m as f64,
        splits,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LowerCase {
    /// Both same-label counts at their lower bounds.
    SameAtLower,
    /// `m10` at its upper bound and `m11` at its lower bound.
    CrossUpperOnesLower,
    /// `m10` at its upper bound and `m00` at its lower bound.
    CrossUpperZerosLower,
}

/// One evaluated lower-bound candidate; counts may be negative when the
/// candidate is infeasible.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LowerCandidate {
    pub case: LowerCase,
    pub m11: i64,
    pub m10: i64,
    pub m00: i64,
    /// Guard applied before the candidate is admitted.
    pub guard: Option<bool>,
    /// For the third case, the `m10_upper + m11_lower <= m` guard as it is
    /// often stated, kept for comparison with the applied guard.
    pub alternate_guard: Option<bool>,
    pub feasible: bool,
    pub r: Option<f64>,
    pub reason: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LowerBound {
    pub r: f64,
    pub counts: EdgeCounts,
    pub case: LowerCase,
    pub candidates: Vec<LowerCandidate>,
}

fn evaluate_candidate(
    case: LowerCase,
    (m11, m10, m00): (i64, i64, i64),
    guard: Option<bool>,
    alternate_guard: Option<bool>,
) -> LowerCandidate {
    let mut candidate = LowerCandidate {
        case,
        m11,
        m10,
        m00,
        guard,
        alternate_guard,
        feasible: false,
        r: None,
        reason: None,
    };
    if guard == Some(false) {
        candidate.reason = Some("guard fails".into());
    } else if m11 < 0 || m10 < 0 || m00 < 0 {
        candidate.reason = Some("negative count".into());
    } else {
        let counts = EdgeCounts::new(m11 as u64, m10 as u64, m00 as u64);
        match assortativity_from_counts(&counts) {
            Ok(r) => {
                candidate.feasible = true;
                candidate.r = Some(r);
            }
            Err(e) => candidate.reason = Some(e.to_string()),
        }
    }
    candidate
}

/// Lower assortativity bound: the smallest `r` among the three extreme
/// count configurations that survive the feasibility checks.
pub fn assortativity_lower(ecb: &EdgeCountBounds) -> Result<LowerBound> {
    if ecb.m == 0 {
        return Err(Error::EmptyGraph);
    }
    let m = ecb.m as i64;
    let m11l = ecb.m11.lower as i64;
    let m00l = ecb.m00.lower as i64;
    let m10u = ecb.m10.upper as i64;

    let candidates = vec![
        evaluate_candidate(
            LowerCase::SameAtLower,
            (m11l, m - m11l - m00l, m00l),
            None,
            None,
        ),
        evaluate_candidate(
            LowerCase::CrossUpperOnesLower,
            (m11l, m10u, m - m10u - m11l),
            Some(m10u + m11l <= m),
            None,
        ),
        evaluate_candidate(
            LowerCase::CrossUpperZerosLower,
            (m - m10u - m00l, m10u, m00l),
            Some(m10u + m00l <= m),
            Some(m10u + m11l <= m),
        ),
    ];

    let best = candidates
        .iter()
        .filter_map(|c| c.r.map(|r| (r, c)))
        .min_by(|a, b| a.0.total_cmp(&b.0));
    match best {
        Some((r, c)) => Ok(LowerBound {
            r,
            counts: EdgeCounts::new(c.m11 as u64, c.m10 as u64, c.m00 as u64),
            case: c.case,
            candidates: candidates.clone(),
        }),
        None => Err(Error::NoFeasibleCandidate),
    }
}

/// Attainable range of assortativity in one space.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AssortativityRange {
    pub space: Space,
    pub r_lower: f64,
    pub r_upper: f64,
    pub lower_counts: EdgeCounts,
    pub lower_case: LowerCase,
    pub upper_counts: Vec<EdgeCounts>,
    pub candidate_log: Vec<LowerCandidate>,
    pub edge_count_bounds: EdgeCountBounds,
}

pub fn range_from_bounds(ecb: EdgeCountBounds) -> Result<AssortativityRange> {
    let upper = assortativity_upper(&ecb)?;
    let lower = assortativity_lower(&ecb)?;
    Ok(AssortativityRange {
        space: ecb.space,
        r_lower: lower.r,
        r_upper: upper.r,
        lower_counts: lower.counts,
        lower_case: lower.case,
        upper_counts: upper.splits,
        candidate_log: lower.candidates,
        edge_count_bounds: ecb,
    })
}

/// Bounds on `r` for `g`'s degree sequence with `n1` ones (metadata-graph
/// space) or with the degrees split by `assignment` (graph space).
pub fn assortativity_range(
    g: &Graph,
    n1: usize,
    space: Space,
    assignment: Option<&MetadataAssignment>,
    variant: BoundVariant,
) -> Result<AssortativityRange> {
    let n = g.node_count();
    if n1 == 0 || n1 >= n {
        return Err(Error::DegeneratePartition { n1, n });
    }
    let d = degree_sequence(g);
    let partition = match space {
        Space::Mgs => None,
        Space::Gs => {
            let a = assignment.ok_or_else(|| {
                Error::InvalidPartition("graph-space bounds need a fixed assignment".into())
            })?;
            if a.n1() != n1 {
                return Err(Error::InvalidPartition(format!(
                    "assignment has n1 = {}, requested {n1}",
                    a.n1()
                )));
            }
            Some(DegreePartition::from_assignment(g, a)?)
        }
    };
    range_from_bounds(edge_count_bounds(
        &d,
        n1,
        space,
        partition.as_ref(),
        variant,
    )?)
}

/// `r / r_upper` for positive `r`, `r / r_lower` otherwise.
pub fn normalize_assortativity(r: f64, range: &AssortativityRange) -> Result<f64> {
    let bound = if r > 0.0 {
        range.r_upper
    } else {
        range.r_lower
    };
    if bound == 0.0 {
        return Err(Error::ZeroBound);
    }
    Ok(r / bound)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(d: &[usize]) -> DegreeSequence {
        DegreeSequence::new(d.to_vec())
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn m11_upper_examples() {
        assert_eq!(m11_upper(&seq(&[3, 3, 3, 3]), 2, Space::Mgs, None), Ok(1));
        assert_eq!(m11_upper(&seq(&[2; 6]), 3, Space::Mgs, None), Ok(3));
        assert_eq!(m11_upper(&seq(&[3, 1, 1, 1]), 2, Space::Mgs, None), Ok(1));
    }

    #[test]
    fn m10_upper_examples() {
        assert_eq!(m10_upper(&seq(&[3, 3, 3, 3]), 2, Space::Mgs, None), Ok(4));
        assert_eq!(m10_upper(&seq(&[2; 6]), 3, Space::Mgs, None), Ok(6));
        assert_eq!(m10_upper(&seq(&[3, 1, 1, 1]), 1, Space::Mgs, None), Ok(3));
    }

    #[test]
    fn m11_lower_examples() {
        assert_eq!(m11_lower(&seq(&[3, 3, 3, 3]), 2, Space::Mgs, None), Ok(1));
        assert_eq!(m11_lower(&seq(&[2; 6]), 3, Space::Mgs, None), Ok(0));
        // P3 with a leaf labeled 1: the zero-part {2, 1} must hold an edge
        let p = DegreePartition::new(vec![1], vec![2, 1]);
        let m00 = m11_lower(&seq(&[2, 1, 1]), 2, Space::Gs, Some(&p.flipped()));
        assert_eq!(m00, Ok(1));
    }

    #[test]
    fn m10_lower_examples() {
        assert_eq!(m10_lower(&seq(&[3, 3, 3, 3]), 2, Space::Mgs, None), Ok(4));
        assert_eq!(m10_lower(&seq(&[2; 6]), 3, Space::Mgs, None), Ok(1));
        assert_eq!(m10_lower(&seq(&[3, 1, 1, 1]), 1, Space::Mgs, None), Ok(1));
        assert_eq!(m10_lower(&seq(&[3, 1, 1, 1]), 0, Space::Mgs, None), Ok(0));
        assert_eq!(m10_lower(&seq(&[3, 1, 1, 1]), 4, Space::Mgs, None), Ok(0));
    }

    #[test]
    fn partition_is_validated() {
        let d = seq(&[2, 1, 1]);
        let wrong_size = DegreePartition::new(vec![1, 1], vec![2]);
        assert!(matches!(
            m11_upper(&d, 1, Space::Gs, Some(&wrong_size)),
            Err(Error::InvalidPartition(_))
        ));
        let wrong_multiset = DegreePartition::new(vec![2], vec![2, 1]);
        assert!(matches!(
            m10_upper(&d, 1, Space::Gs, Some(&wrong_multiset)),
            Err(Error::InvalidPartition(_))
        ));
        assert!(matches!(
            m10_lower(&d, 1, Space::Gs, None),
            Err(Error::InvalidPartition(_))
        ));
        assert_eq!(
            m11_upper(&d, 4, Space::Mgs, None),
            Err(Error::OutOfRange { k: 4, n: 3 })
        );
    }

    fn bounds(d: &[usize], n1: usize) -> EdgeCountBounds {
        edge_count_bounds(&seq(d), n1, Space::Mgs, None, BoundVariant::Improved).unwrap()
    }

    #[test]
    fn upper_examples() {
        let k4 = assortativity_upper(&bounds(&[3, 3, 3, 3], 2)).unwrap();
        assert!(close(k4.r, -1.0 / 3.0, 1e-12));
        let c6 = assortativity_upper(&bounds(&[2; 6], 3)).unwrap();
        assert!(close(c6.r, 2.0 / 3.0, 1e-12));
        // m - m10_lower = 5 is odd: both integer splits are reported
        assert_eq!(
            c6.splits,
            vec![EdgeCounts::new(2, 1, 3), EdgeCounts::new(3, 1, 2)]
        );
        assert_eq!(k4.splits, vec![EdgeCounts::new(1, 4, 1)]);
    }

    #[test]
    fn lower_examples() {
        let k4 = assortativity_lower(&bounds(&[3, 3, 3, 3], 2)).unwrap();
        assert!(close(k4.r, -1.0 / 3.0, 1e-12));
        assert!(k4
            .candidates
            .iter()
            .all(|c| c.r.is_some_and(|r| close(r, -1.0 / 3.0, 1e-12))));

        let c6 = bounds(&[2; 6], 3);
        assert_eq!((c6.m11.lower, c6.m00.lower, c6.m10.upper), (0, 0, 6));
        let lower = assortativity_lower(&c6).unwrap();
        assert_eq!(lower.r, -1.0);
        assert_eq!(lower.counts, EdgeCounts::new(0, 6, 0));
    }

    #[test]
    fn infeasible_candidates_are_logged() {
        let ecb = EdgeCountBounds {
            space: Space::Mgs,
            variant: BoundVariant::Improved,
            n1: 2,
            n0: 2,
            m: 4,
            m11: CountInterval { lower: 2, upper: 2 },
            m10: CountInterval { lower: 1, upper: 3 },
            m00: CountInterval { lower: 0, upper: 2 },
        };
        let lower = assortativity_lower(&ecb).unwrap();
        let third = &lower.candidates[2];
        // applied guard m10u + m00l = 3 <= 4 holds; m10u + m11l = 5 does not
        assert_eq!(third.guard, Some(true));
        assert_eq!(third.alternate_guard, Some(false));
        let second = &lower.candidates[1];
        assert_eq!(second.guard, Some(false));
        assert!(!second.feasible);
        assert_eq!(second.m00, -1);
    }

    #[test]
    fn no_feasible_candidate() {
        let ecb = EdgeCountBounds {
            space: Space::Mgs,
            variant: BoundVariant::Improved,
            n1: 1,
            n0: 1,
            m: 1,
            m11: CountInterval { lower: 1, upper: 1 },
            m10: CountInterval { lower: 0, upper: 1 },
            m00: CountInterval { lower: 1, upper: 1 },
        };
        assert_eq!(assortativity_lower(&ecb), Err(Error::NoFeasibleCandidate));
    }

    #[test]
    fn path_graph_space() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let a = MetadataAssignment::new(vec![1, 0, 0]).unwrap();
        let range =
            assortativity_range(&g, 1, Space::Gs, Some(&a), BoundVariant::Improved).unwrap();
        assert!(close(range.r_lower, -1.0 / 3.0, 1e-12));
        // 1 - 2 * m10_lower / m with m10_lower = 1, m = 2
        assert_eq!(range.r_upper, 0.0);
        let b = range.edge_count_bounds;
        assert_eq!(b.m00, CountInterval { lower: 1, upper: 1 });
        assert_eq!(b.m11, CountInterval { lower: 0, upper: 0 });
        assert_eq!(b.m10, CountInterval { lower: 1, upper: 1 });
    }

    #[test]
    fn range_requires_assignment_in_graph_space() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(matches!(
            assortativity_range(&g, 1, Space::Gs, None, BoundVariant::Improved),
            Err(Error::InvalidPartition(_))
        ));
        assert_eq!(
            assortativity_range(&g, 0, Space::Mgs, None, BoundVariant::Improved),
            Err(Error::DegeneratePartition { n1: 0, n: 3 })
        );
    }

    #[test]
    fn original_variant_is_never_tighter() {
        for (d, n1) in [
            (&[3usize, 3, 3, 3][..], 2),
            (&[4, 3, 3, 2, 2, 1, 1][..], 3),
            (&[5, 1, 1, 1, 1, 1][..], 2),
        ] {
            let improved = bounds(d, n1);
            let original =
                edge_count_bounds(&seq(d), n1, Space::Mgs, None, BoundVariant::Original).unwrap();
            assert!(improved.m11.lower >= original.m11.lower);
            assert!(improved.m00.lower >= original.m00.lower);
            assert!(improved.m10.lower >= original.m10.lower);
        }
    }

    #[test]
    fn normalization_examples() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let a = MetadataAssignment::new(vec![1, 0, 0]).unwrap();
        let mut range =
            assortativity_range(&g, 1, Space::Gs, Some(&a), BoundVariant::Improved).unwrap();
        range.r_upper = 0.976;
        range.r_lower = -0.5;
        assert!(close(
            normalize_assortativity(0.025, &range).unwrap(),
            0.0256,
            1e-4
        ));
        assert!(close(
            normalize_assortativity(0.976, &range).unwrap(),
            1.0,
            1e-15
        ));
        assert!(close(
            normalize_assortativity(-0.1, &range).unwrap(),
            0.2,
            1e-15
        ));
        range.r_lower = 0.0;
        assert_eq!(normalize_assortativity(-0.1, &range), Err(Error::ZeroBound));
    }

    #[test]
    fn upper_bound_decreases_with_m10_lower() {
        let mut ecb = bounds(&[2; 6], 3);
        let mut previous = f64::INFINITY;
        for m10 in 0..=6 {
            ecb.m10.lower = m10;
            let r = assortativity_upper(&ecb).unwrap().r;
            assert!(r < previous);
            assert!(close(previous - r, 2.0 / 6.0, 1e-12) || previous.is_infinite());
            previous = r;
        }
    }
}
