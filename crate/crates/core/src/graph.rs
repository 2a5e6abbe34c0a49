//! Simple undirected graphs with 0-based vertex ids.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::GraphError;

/// Vertex identifier.
pub type Vertex = usize;

/// An immutable simple undirected graph.
///
/// Edges are stored normalized (`u < v`) in insertion order, which is the
/// order they are serialized in; adjacency lists are sorted by id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<Vertex>>,
    names: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, out-of-range endpoints and
    /// duplicate edges (in either orientation).
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj: Vec<Vec<Vertex>> = (0..n).map(|_| Vec::new()).collect();
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u.max(v), n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            list.push((a, b));
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut sorted = list.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        for nb in &mut adj {
            nb.sort_unstable();
        }
        Ok(Graph { n, edges: list, adj, names: None })
    }

    /// Attaches display names (one per vertex).
    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.n, "one name per vertex");
        self.names = Some(names);
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    /// Maximum degree; 0 for the empty graph.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// True iff every vertex has degree exactly 3.
    pub fn is_cubic(&self) -> bool {
        self.n > 0 && self.adj.iter().all(|nb| nb.len() == 3)
    }

    pub fn name(&self, v: Vertex) -> Option<&str> {
        self.names.as_ref().map(|names| names[v].as_str())
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Returns a copy with one extra edge (names are kept).
    pub fn with_edge(&self, u: Vertex, v: Vertex) -> Result<Self, GraphError> {
        let g = Graph::from_edges(self.n, self.edges.iter().copied().chain([(u, v)]))?;
        Ok(match &self.names {
            Some(names) => g.with_names(names.clone()),
            None => g,
        })
    }

    /// Pairs of distinct vertices that are not adjacent, sorted.
    pub fn non_edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Whether every vertex can reach every other one.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = alloc::vec![false; self.n];
        let mut stack = alloc::vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }
}
