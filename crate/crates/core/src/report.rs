//! Versioned JSON reports.

use serde::{Deserialize, Serialize};

use crate::bounds::{
    assortativity_range, normalize_assortativity, AssortativityRange, BoundVariant, Space,
};
use crate::error::{Error, Result};
use crate::explore::{ExplorationReport, PermutationTest};
use crate::graph::{edge_counts, EdgeCounts, Graph, MetadataAssignment};
use crate::mixing::{assortativity_from_counts, freeman_segregation, SegregationResult};

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDigest {
    pub nodes: usize,
    pub edges: usize,
    pub n1: usize,
    pub n0: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NormalizedValue {
    pub space: Space,
    /// `None` when the relevant bound is zero.
    pub value: Option<f64>,
}

/// Statistics of the observed assignment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ObservedStats {
    pub counts: EdgeCounts,
    pub r: f64,
    pub segregation: Option<SegregationResult>,
    pub normalized: Vec<NormalizedValue>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub tool_version: String,
    pub input: InputDigest,
    pub variant: BoundVariant,
    pub observed: Option<ObservedStats>,
    pub ranges: Vec<AssortativityRange>,
    pub exploration: Vec<ExplorationReport>,
    pub permutation_test: Option<PermutationTest>,
    pub seed: Option<u64>,
}

impl AnalysisReport {
    pub fn empty(g: &Graph, n1: usize, variant: BoundVariant) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            tool_version: TOOL_VERSION.to_string(),
            input: InputDigest {
                nodes: g.node_count(),
                edges: g.edge_count(),
                n1,
                n0: g.node_count().saturating_sub(n1),
            },
            variant,
            observed: None,
            ranges: Vec::new(),
            exploration: Vec::new(),
            permutation_test: None,
            seed: None,
        }
    }

    /// Pretty JSON with fields in declaration order and a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// Bounds in the requested spaces plus, when `assignment` is given, the
/// observed statistics and their normalisation by each range.
pub fn analyze(
    g: &Graph,
    n1: usize,
    assignment: Option<&MetadataAssignment>,
    spaces: &[Space],
    variant: BoundVariant,
) -> Result<AnalysisReport> {
    let mut report = AnalysisReport::empty(g, n1, variant);
    for &space in spaces {
        report
            .ranges
            .push(assortativity_range(g, n1, space, assignment, variant)?);
    }
    if let Some(a) = assignment {
        let counts = edge_counts(g, a)?;
        let r = assortativity_from_counts(&counts).map_err(|_| Error::UndefinedObserved)?;
        let normalized = report
            .ranges
            .iter()
            .map(|range| NormalizedValue {
                space: range.space,
                value: normalize_assortativity(r, range).ok(),
            })
            .collect();
        report.observed = Some(ObservedStats {
            counts,
            r,
            segregation: freeman_segregation(g, a).ok(),
            normalized,
        });
    }
    Ok(report)
}

/// Lenient parse: fields must match the schema, values are not re-checked.
pub fn parse_report(json: &str) -> Result<AnalysisReport> {
    serde_json::from_str(json).map_err(|e| Error::Schema(e.to_string()))
}

/// Strict parse: additionally rejects unknown or missing fields at any
/// depth and schema versions other than the current one.
pub fn parse_report_strict(json: &str) -> Result<AnalysisReport> {
    let raw: serde_json::Value =
        serde_json::from_str(json).map_err(|e| Error::Schema(e.to_string()))?;
    let report: AnalysisReport =
        serde_json::from_value(raw.clone()).map_err(|e| Error::Schema(e.to_string()))?;
    if report.schema_version != SCHEMA_VERSION {
        return Err(Error::Schema(format!(
            "schema version {} is not supported (expected {SCHEMA_VERSION})",
            report.schema_version
        )));
    }
    let back = serde_json::to_value(&report).map_err(|e| Error::Schema(e.to_string()))?;
    if back != raw {
        return Err(Error::Schema(
            "document has fields outside the schema".into(),
        ));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4_report() -> AnalysisReport {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let a = MetadataAssignment::new(vec![1, 1, 0, 0]).unwrap();
        analyze(
            &g,
            2,
            Some(&a),
            &[Space::Mgs, Space::Gs],
            BoundVariant::Improved,
        )
        .unwrap()
    }

    #[test]
    fn json_round_trip() {
        let report = k4_report();
        let json = report.to_json();
        assert_eq!(parse_report_strict(&json).unwrap(), report);
        assert_eq!(parse_report(&json).unwrap().to_json(), json);
        assert!(json.find("\"schema_version\"").unwrap() < json.find("\"tool_version\"").unwrap());
    }

    #[test]
    fn strict_mode_rejects_extras() {
        let json = k4_report().to_json();
        let top = json.replacen('{', "{\n  \"extra\": 1,", 1);
        assert!(matches!(parse_report(&top), Err(Error::Schema(_))));

        let nested = json.replacen("\"m11\": {", "\"m11\": {\"note\": 0, ", 1);
        assert!(matches!(
            parse_report_strict(&nested),
            Err(Error::Schema(_))
        ));

        let old = json.replacen("\"schema_version\": 1", "\"schema_version\": 0", 1);
        assert!(matches!(parse_report_strict(&old), Err(Error::Schema(_))));
    }

    #[test]
    fn observed_normalisation() {
        let report = k4_report();
        let observed = report.observed.unwrap();
        assert!((observed.r + 1.0 / 3.0).abs() < 1e-12);
        assert_eq!(observed.normalized.len(), 2);
    }
}
