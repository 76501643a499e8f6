//! Scalar mixing statistics for binary metadata: the φ coefficient and its
//! marginal bounds, binary assortativity in its equivalent forms, the naive
//! Newman minimum and Freeman's segregation index.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{edge_counts, EdgeCounts, Graph, MetadataAssignment};

const TABLE_SUM_TOLERANCE: f64 = 1e-12;

/// 2×2 table of joint proportions; row index is `x`, column index is `y`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ContingencyTable {
    pub e11: f64,
    pub e10: f64,
    pub e01: f64,
    pub e00: f64,
}

impl ContingencyTable {
    pub fn new(e11: f64, e10: f64, e01: f64, e00: f64) -> Result<Self> {
        let entries = [e11, e10, e01, e00];
        if entries.iter().any(|e| !e.is_finite() || *e < 0.0) {
            return Err(Error::InvalidTable(
                "entries must be finite and non-negative".into(),
            ));
        }
        let total: f64 = entries.iter().sum();
        if (total - 1.0).abs() > TABLE_SUM_TOLERANCE {
            return Err(Error::InvalidTable(format!("entries sum to {total}")));
        }
        Ok(Self { e11, e10, e01, e00 })
    }

    /// Row marginal for `x = 0`.
    pub fn a0(&self) -> f64 {
        self.e00 + self.e01
    }

    pub fn a1(&self) -> f64 {
        self.e10 + self.e11
    }

    /// Column marginal for `y = 0`.
    pub fn b0(&self) -> f64 {
        self.e00 + self.e10
    }

    pub fn b1(&self) -> f64 {
        self.e01 + self.e11
    }
}

/// Symmetric table of an undirected edge set: `e11 = m11/m`,
/// `e00 = m00/m`, and each off-diagonal cell holds `m10/(2m)`.
pub fn contingency_from_counts(ec: &EdgeCounts) -> Result<ContingencyTable> {
    if ec.m == 0 {
        return Err(Error::EmptyGraph);
    }
    let m = ec.m as f64;
    let off = ec.m10 as f64 / (2.0 * m);
    Ok(ContingencyTable {
        e11: ec.m11 as f64 / m,
        e10: off,
        e01: off,
        e00: ec.m00 as f64 / m,
    })
}

fn marginal_product(t: &ContingencyTable) -> Result<f64> {
    let product = t.a1() * t.a0() * t.b1() * t.b0();
    if product <= 0.0 {
        return Err(Error::DegenerateMarginal);
    }
    Ok(product.sqrt())
}

/// Pearson correlation of two binary variables, `(e11 - a1 b1) / sqrt(a1 a0 b1 b0)`.
pub fn phi_coefficient(t: &ContingencyTable) -> Result<f64> {
    let scale = marginal_product(t)?;
    Ok((t.e11 - t.a1() * t.b1()) / scale)
}

/// The same coefficient via the determinant numerator `e11 e00 - e01 e10`.
pub fn phi_determinant_form(t: &ContingencyTable) -> Result<f64> {
    let scale = marginal_product(t)?;
    Ok((t.e11 * t.e00 - t.e01 * t.e10) / scale)
}

/// Smallest and largest φ over all tables with the given marginals.
///
/// Labels are first swapped so that `a0 <= a1`. With `x` and `y` fixed at
/// their marginals, φ is linear in `e11`, which ranges over
/// `[max(0, a1 + b1 - 1), min(a1, b1)]`; the extremes are read off the ends.
/// Whenever `b1 <= a1` and `a1 + b1 >= 1` (in particular for the symmetric
/// tables of undirected networks) this is
/// `(-sqrt(a0 b0 / (a1 b1)), sqrt(a0 b1 / (a1 b0)))`.
pub fn phi_bounds(a0: f64, a1: f64, b0: f64, b1: f64) -> Result<(f64, f64)> {
    if [a0, a1, b0, b1].iter().any(|v| !v.is_finite() || *v <= 0.0) {
        return Err(Error::DegenerateMarginal);
    }
    if (a0 + a1 - 1.0).abs() > TABLE_SUM_TOLERANCE || (b0 + b1 - 1.0).abs() > TABLE_SUM_TOLERANCE {
        return Err(Error::InvalidTable("marginals must sum to 1".into()));
    }
    let (a0, a1, b0, b1) = if a0 > a1 {
        (a1, a0, b1, b0)
    } else {
        (a0, a1, b0, b1)
    };
    let scale = (a0 * a1 * b0 * b1).sqrt();
    let low = (a1 + b1 - 1.0).max(0.0);
    let high = a1.min(b1);
    Ok(((low - a1 * b1) / scale, (high - a1 * b1) / scale))
}

/// Newman's assortativity, `(Σ e_ii - Σ a_i b_i) / (1 - Σ a_i b_i)`.
pub fn assortativity_from_contingency(t: &ContingencyTable) -> Result<f64> {
    let expected = t.a0() * t.b0() + t.a1() * t.b1();
    let denominator = 1.0 - expected;
    if denominator.abs() < f64::EPSILON {
        return Err(Error::DegenerateDenominator);
    }
    Ok((t.e00 + t.e11 - expected) / denominator)
}

/// `r = 1 - 2 m10 m / (m² - (m00 - m11)²)`, denominator in exact integers.
pub fn assortativity_from_counts(ec: &EdgeCounts) -> Result<f64> {
    if ec.m == 0 {
        return Err(Error::EmptyGraph);
    }
    let m = i128::from(ec.m);
    let delta = i128::from(ec.m00) - i128::from(ec.m11);
    let denominator = m * m - delta * delta;
    if denominator == 0 {
        return Err(Error::DegenerateDenominator);
    }
    let numerator = 2 * i128::from(ec.m10) * m;
    Ok(1.0 - numerator as f64 / denominator as f64)
}

/// Expanded count form, with the half-weighted cross edges added to each
/// class's end count.
pub fn assortativity_long_form(ec: &EdgeCounts) -> Result<f64> {
    if ec.m == 0 {
        return Err(Error::EmptyGraph);
    }
    let m = ec.m as f64;
    let ends0 = ec.m00 as f64 + ec.m10 as f64 / 2.0;
    let ends1 = ec.m11 as f64 + ec.m10 as f64 / 2.0;
    let squares = ends0 * ends0 + ends1 * ends1;
    let denominator = m * m - squares;
    if denominator == 0.0 {
        return Err(Error::DegenerateDenominator);
    }
    Ok(((ec.m00 + ec.m11) as f64 * m - squares) / denominator)
}

/// Assortativity of an assignment on a graph.
pub fn assortativity(g: &Graph, a: &MetadataAssignment) -> Result<f64> {
    assortativity_from_counts(&edge_counts(g, a)?)
}

/// `-Σ a_i² / (1 - Σ a_i²)`: the minimum when no edge joins equal labels,
/// whether or not such a configuration exists.
pub fn newman_naive_min(proportions: &[f64]) -> Result<f64> {
    let s: f64 = proportions.iter().map(|a| a * a).sum();
    if s <= 0.0 || s >= 1.0 {
        return Err(Error::DegenerateDenominator);
    }
    Ok(-s / (1.0 - s))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SegregationResult {
    /// Mean of `m10` over uniform relabelings with the same `n1`.
    pub expected_cross: f64,
    pub observed_cross: u64,
    /// Relative shortfall of cross-class edges, clamped to `[0, 1]`.
    pub segregation: f64,
}

/// Freeman's segregation index against the permutation expectation
/// `E[m10] = m · 2 n1 n0 / (n (n - 1))`.
pub fn freeman_segregation(g: &Graph, a: &MetadataAssignment) -> Result<SegregationResult> {
    let ec = edge_counts(g, a)?;
    let n = g.node_count();
    if a.n1() == 0 || a.n1() == n {
        return Err(Error::DegeneratePartition { n1: a.n1(), n });
    }
    if ec.m == 0 {
        return Err(Error::EmptyGraph);
    }
    let (n, n1, n0) = (n as f64, a.n1() as f64, a.n0() as f64);
    let expected_cross = ec.m as f64 * 2.0 * n1 * n0 / (n * (n - 1.0));
    let observed = ec.m10 as f64;
    let segregation = if observed >= expected_cross {
        0.0
    } else {
        (expected_cross - observed) / expected_cross
    };
    Ok(SegregationResult {
        expected_cross,
        observed_cross: ec.m10,
        segregation,
    })
}
