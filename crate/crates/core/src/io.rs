//! Plain-text graph and metadata files.
//!
//! Edge lists hold one whitespace-separated pair of node identifiers per
//! line. Metadata files hold `node<TAB>label` lines with labels `0` or `1`.
//! In both, blank lines and lines starting with `#` are skipped. Node
//! identifiers are arbitrary strings, mapped to dense indices in order of
//! first appearance in the edge list.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::{Graph, MetadataAssignment};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EdgeListOptions {
    /// Collapse repeated edges instead of failing.
    pub dedupe: bool,
    /// Treat `b a` after `a b` as the same undirected edge (directed input).
    pub symmetrize: bool,
}

fn parse_error(path: &str, line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        path: path.to_string(),
        line,
        message: message.into(),
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

/// Parses an edge list. `path` is only used in error messages.
pub fn parse_edge_list(text: &str, path: &str, opts: EdgeListOptions) -> Result<Graph> {
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut names: Vec<String> = Vec::new();
    let mut seen: HashSet<(usize, usize)> = HashSet::new();
    let mut directed: HashSet<(usize, usize)> = HashSet::new();
    let mut edges = Vec::new();
    for (line, content) in content_lines(text) {
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(parse_error(
                path,
                line,
                format!("expected two node ids, found {} fields", tokens.len()),
            ));
        }
        let mut ids = [0; 2];
        for (slot, token) in ids.iter_mut().zip(&tokens) {
            *slot = *index.entry(token.to_string()).or_insert_with(|| {
                names.push(token.to_string());
                names.len() - 1
            });
        }
        let [a, b] = ids;
        if a == b {
            return Err(parse_error(
                path,
                line,
                format!("self-loop on node '{}'", tokens[0]),
            ));
        }
        let key = (a.min(b), a.max(b));
        if !seen.insert(key) {
            let reverse_only = opts.symmetrize && !directed.contains(&(a, b));
            directed.insert((a, b));
            if opts.dedupe || reverse_only {
                continue;
            }
            return Err(parse_error(
                path,
                line,
                format!("duplicate edge '{}' '{}'", tokens[0], tokens[1]),
            ));
        }
        directed.insert((a, b));
        edges.push(key);
    }
    Graph::from_edges(names.len(), &edges)?.with_node_labels(names)
}

pub fn read_edge_list(path: impl AsRef<Path>, opts: EdgeListOptions) -> Result<Graph> {
    let path = path.as_ref();
    parse_edge_list(&read(path)?, &path.display().to_string(), opts)
}

/// Parses metadata for `g`. Nodes named only in the metadata are appended
/// to the graph as isolated nodes; graph nodes without a label are an
/// error. Returns the possibly extended graph with its assignment.
pub fn parse_metadata(text: &str, path: &str, g: &Graph) -> Result<(Graph, MetadataAssignment)> {
    let mut names: Vec<String> = (0..g.node_count()).map(|i| g.node_name(i)).collect();
    let mut index: HashMap<String, usize> = names
        .iter()
        .enumerate()
        .map(|(i, s)| (s.clone(), i))
        .collect();
    let mut labels: Vec<Option<u8>> = vec![None; names.len()];
    for (line, content) in content_lines(text) {
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(parse_error(
                path,
                line,
                format!("expected 'node<TAB>label', found {} fields", tokens.len()),
            ));
        }
        let label = match tokens[1] {
            "0" => 0,
            "1" => 1,
            other => {
                return Err(parse_error(
                    path,
                    line,
                    format!("label '{other}' for node '{}' is not 0 or 1", tokens[0]),
                ))
            }
        };
        let node = *index.entry(tokens[0].to_string()).or_insert_with(|| {
            names.push(tokens[0].to_string());
            labels.push(None);
            names.len() - 1
        });
        if labels[node].replace(label).is_some() {
            return Err(parse_error(
                path,
                line,
                format!("node '{}' labeled twice", tokens[0]),
            ));
        }
    }
    let labels: Vec<u8> = labels
        .iter()
        .enumerate()
        .map(|(i, l)| {
            l.ok_or_else(|| parse_error(path, 0, format!("node '{}' has no label", names[i])))
        })
        .collect::<Result<_>>()?;
    let graph = if names.len() > g.node_count() {
        Graph::from_edges(names.len(), g.edges())?.with_node_labels(names)?
    } else {
        g.clone()
    };
    Ok((graph, MetadataAssignment::new(labels)?))
}

pub fn read_metadata(path: impl AsRef<Path>, g: &Graph) -> Result<(Graph, MetadataAssignment)> {
    let path = path.as_ref();
    parse_metadata(&read(path)?, &path.display().to_string(), g)
}

/// One `a b` line per edge, using external ids.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for &(i, j) in g.edges() {
        out.push_str(&format!("{} {}\n", g.node_name(i), g.node_name(j)));
    }
    out
}

/// One `node<TAB>label` line per node, isolated nodes included.
pub fn write_metadata(g: &Graph, a: &MetadataAssignment) -> Result<String> {
    if a.len() != g.node_count() {
        return Err(Error::LengthMismatch {
            labels: a.len(),
            nodes: g.node_count(),
        });
    }
    let mut out = String::new();
    for i in 0..g.node_count() {
        out.push_str(&format!("{}\t{}\n", g.node_name(i), a.get(i)));
    }
    Ok(out)
}

fn named_edges(g: &Graph) -> BTreeSet<(String, String)> {
    g.edges()
        .iter()
        .map(|&(i, j)| {
            let (a, b) = (g.node_name(i), g.node_name(j));
            if a <= b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect()
}

/// Equality up to re-indexing: same node ids, same edges between ids.
pub fn same_graph(a: &Graph, b: &Graph) -> bool {
    let ids = |g: &Graph| {
        (0..g.node_count())
            .map(|i| g.node_name(i))
            .collect::<BTreeSet<_>>()
    };
    a.node_count() == b.node_count() && ids(a) == ids(b) && named_edges(a) == named_edges(b)
}

/// Equality up to re-indexing of labeled graphs.
pub fn same_labeled_graph(
    (ga, aa): (&Graph, &MetadataAssignment),
    (gb, ab): (&Graph, &MetadataAssignment),
) -> bool {
    let by_id = |g: &Graph, a: &MetadataAssignment| {
        (0..g.node_count())
            .map(|i| (g.node_name(i), a.get(i)))
            .collect::<BTreeSet<_>>()
    };
    same_graph(ga, gb)
        && aa.len() == ga.node_count()
        && ab.len() == gb.node_count()
        && by_id(ga, aa) == by_id(gb, ab)
}
