//! Text and JSON formats for graphs and labelings.
//!
//! Graphs use a plain edge list: a header line `n m` followed by `m` lines
//! `u v` with 0-based ids. Labelings are whitespace-separated integers in
//! vertex-id order, or a JSON object `{"k": .., "labels": [..]}`.

use std::collections::HashSet;
use std::fmt::Write as _;

use ksrd_core::{Graph, GraphError, Labeling, LabelingError};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("empty input")]
    Empty,
    #[error("header declares {declared} edges but {found} were given")]
    EdgeCount { declared: usize, found: usize },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error(transparent)]
    Labeling(#[from] LabelingError),
    #[error("invalid labeling JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("labeling JSON has k = {json}, but k = {given} was requested")]
    KMismatch { json: usize, given: usize },
    #[error("no k given: pass --k or use the JSON labeling format")]
    MissingK,
}

fn malformed(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Malformed { line, message: message.into() }
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize), FormatError> {
    let mut fields = text.split_whitespace();
    let (Some(a), Some(b), None) = (fields.next(), fields.next(), fields.next()) else {
        return Err(malformed(line, format!("expected two integers, got {text:?}")));
    };
    let parse = |s: &str| s.parse::<usize>().map_err(|_| malformed(line, format!("not a vertex id: {s:?}")));
    Ok((parse(a)?, parse(b)?))
}

/// Parses the edge-list format. Blank lines are ignored.
pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());
    let (header_line, header) = lines.next().ok_or(FormatError::Empty)?;
    let (n, m) = parse_pair(header_line, header)?;
    let mut edges = Vec::with_capacity(m);
    let mut seen = HashSet::with_capacity(m);
    for (line, text) in lines {
        let (u, v) = parse_pair(line, text)?;
        let source = if u >= n || v >= n {
            Some(GraphError::VertexOutOfRange { vertex: u.max(v), n })
        } else if u == v {
            Some(GraphError::SelfLoop(u))
        } else if !seen.insert((u.min(v), u.max(v))) {
            Some(GraphError::DuplicateEdge(u.min(v), u.max(v)))
        } else {
            None
        };
        if let Some(source) = source {
            return Err(FormatError::Graph { line, source });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(FormatError::EdgeCount { declared: m, found: edges.len() });
    }
    Ok(Graph::from_edges(n, edges).expect("edges validated above"))
}

/// Writes the edge-list format, edges in stored order, LF-terminated.
pub fn write_graph(graph: &Graph) -> String {
    let mut out = format!("{} {}\n", graph.vertex_count(), graph.edge_count());
    for &(u, v) in graph.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// Parses whitespace-separated labels for `graph` and `k`.
pub fn parse_labeling(text: &str, graph: &Graph, k: usize) -> Result<Labeling, FormatError> {
    let labels = text
        .split_whitespace()
        .enumerate()
        .map(|(i, s)| {
            s.parse::<u32>().map_err(|_| malformed(1, format!("label {i} is not a non-negative integer: {s:?}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Labeling::new(graph, k, labels)?)
}

pub fn write_labeling(labeling: &Labeling) -> String {
    let mut out = labeling.labels().iter().map(u32::to_string).collect::<Vec<_>>().join(" ");
    out.push('\n');
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelingJson {
    pub k: usize,
    pub labels: Vec<u32>,
}

impl From<&Labeling> for LabelingJson {
    fn from(f: &Labeling) -> Self {
        LabelingJson { k: f.k(), labels: f.labels().to_vec() }
    }
}

/// Parses either format: JSON when the text starts with `{`, plain text
/// otherwise. For JSON, `k` is optional and must agree with the file.
pub fn parse_labeling_any(text: &str, graph: &Graph, k: Option<usize>) -> Result<Labeling, FormatError> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        let json: LabelingJson = serde_json::from_str(trimmed)?;
        if let Some(given) = k.filter(|&g| g != json.k) {
            return Err(FormatError::KMismatch { json: json.k, given });
        }
        return Ok(Labeling::new(graph, json.k, json.labels)?);
    }
    parse_labeling(text, graph, k.ok_or(FormatError::MissingK)?)
}
