//! Simple undirected graphs with string labels, hop distances, and the
//! metric invariants the span solvers build on.
//!
//! Vertices are dense indices `0..n`; labels exist only at the boundary
//! (parsing, serialization, reports). All algorithms work on indices.

use std::collections::HashMap;
use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, ParseError, Result};

/// A hop distance that may be infinite (unreachable pair).
///
/// A dedicated marker keeps unreachable pairs out of arithmetic by
/// construction; there is no magic sentinel value to misuse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Distance {
    Finite(u32),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<u32> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Distance::Finite(_))
    }

    /// True when the distance is at least `d`; infinity dominates everything.
    pub fn at_least(self, d: u32) -> bool {
        match self {
            Distance::Finite(x) => x >= d,
            Distance::Infinite => true,
        }
    }
}

impl PartialOrd for Distance {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Distance {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use Distance::*;
        match (self, other) {
            (Finite(a), Finite(b)) => a.cmp(b),
            (Finite(_), Infinite) => std::cmp::Ordering::Less,
            (Infinite, Finite(_)) => std::cmp::Ordering::Greater,
            (Infinite, Infinite) => std::cmp::Ordering::Equal,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => write!(f, "inf"),
        }
    }
}

/// A simple undirected graph: distinct string labels, sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    label_index: HashMap<String, usize>,
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from explicit labels and index edges.
    ///
    /// Rejects duplicate, empty, or whitespace-bearing labels (the
    /// edge-list format could not serialize them), self-loops, duplicate
    /// edges, and out-of-range endpoints.
    pub fn new(labels: Vec<String>, edges: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let mut label_index = HashMap::with_capacity(n);
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty() || label.chars().any(char::is_whitespace) {
                return Err(Error::InvalidLabel {
                    label: label.clone(),
                });
            }
            if label_index.insert(label.clone(), i).is_some() {
                return Err(Error::DuplicateLabel {
                    label: label.clone(),
                });
            }
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { index: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { index: v, n });
            }
            if u == v {
                return Err(Error::SelfLoopEdge { index: u });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(pair) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateIndexEdge { u, v: pair[0] });
            }
        }
        Ok(Graph {
            labels,
            label_index,
            adj,
            edge_count: edges.len(),
        })
    }

    /// Convenience constructor with generated labels `v0..v{n-1}`.
    pub fn from_index_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let labels = (0..n).map(|i| format!("v{i}")).collect();
        Self::new(labels, edges)
    }

    /// Parses the edge-list text format: one edge per line as
    /// `<label> <label>`, blank lines and lines starting with `#` ignored.
    ///
    /// Labels are indexed in order of first appearance.
    pub fn parse_edge_list(text: &str) -> std::result::Result<Self, ParseError> {
        let mut labels: Vec<String> = Vec::new();
        let mut label_index: HashMap<String, usize> = HashMap::new();
        let mut edges: Vec<(usize, usize)> = Vec::new();
        let mut seen: std::collections::HashSet<(usize, usize)> = std::collections::HashSet::new();

        let intern = |label: &str, labels: &mut Vec<String>, idx: &mut HashMap<String, usize>| {
            *idx.entry(label.to_string()).or_insert_with(|| {
                labels.push(label.to_string());
                labels.len() - 1
            })
        };

        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = trimmed.split_whitespace().collect();
            if fields.len() != 2 {
                return Err(ParseError::MalformedLine {
                    line,
                    found: fields.len(),
                });
            }
            if fields[0] == fields[1] {
                return Err(ParseError::SelfLoop {
                    line,
                    label: fields[0].to_string(),
                });
            }
            let u = intern(fields[0], &mut labels, &mut label_index);
            let v = intern(fields[1], &mut labels, &mut label_index);
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(ParseError::DuplicateEdge {
                    line,
                    a: fields[0].to_string(),
                    b: fields[1].to_string(),
                });
            }
            edges.push((u, v));
        }

        Ok(Graph::new(labels, &edges).expect("parser enforces the simple-graph invariants"))
    }

    /// Serializes back to edge-list text, one edge per line in canonical
    /// (sorted index) order. A line must not begin with `#`, so when the
    /// lower-index endpoint's label does and the other's does not, the
    /// endpoints are swapped. Isolated vertices have no representation in
    /// this format, and neither do edges between two `#`-prefixed labels
    /// (which the parser cannot produce).
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (u, v) in self.edges() {
            let (a, b) = (&self.labels[u], &self.labels[v]);
            if a.starts_with('#') && !b.starts_with('#') {
                out.push_str(&format!("{b} {a}\n"));
            } else {
                out.push_str(&format!("{a} {b}\n"));
            }
        }
        out
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.label_index.get(label).copied()
    }

    /// Edges in canonical order: `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.adj.len() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Single-source hop distances via breadth-first traversal.
    pub fn bfs_distances(&self, source: usize) -> Vec<Distance> {
        let n = self.vertex_count();
        let mut dist = vec![Distance::Infinite; n];
        let mut queue = VecDeque::new();
        dist[source] = Distance::Finite(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = match dist[u] {
                Distance::Finite(d) => d,
                Distance::Infinite => unreachable!("queued vertices have finite distance"),
            };
            for &v in &self.adj[u] {
                if dist[v] == Distance::Infinite {
                    dist[v] = Distance::Finite(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Exact all-pairs hop distances, one breadth-first pass per source.
    pub fn all_pairs_distances(&self) -> DistanceMatrix {
        let n = self.vertex_count();
        let mut data = Vec::with_capacity(n * n);
        for source in 0..n {
            data.extend(self.bfs_distances(source));
        }
        DistanceMatrix { n, data }
    }

    /// Component ids per vertex; ids ordered by each component's
    /// lowest-index vertex, so they are stable across calls.
    pub fn connected_components(&self) -> Partition {
        let n = self.vertex_count();
        let mut component_of = vec![usize::MAX; n];
        let mut count = 0;
        for start in 0..n {
            if component_of[start] != usize::MAX {
                continue;
            }
            let id = count;
            count += 1;
            let mut queue = VecDeque::new();
            component_of[start] = id;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if component_of[v] == usize::MAX {
                        component_of[v] = id;
                        queue.push_back(v);
                    }
                }
            }
        }
        Partition {
            component_of,
            count,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() > 0 && self.connected_components().count == 1
    }

    /// The subgraph induced by `subset`, plus the map from new indices back
    /// to the original ones.
    pub fn induced_subgraph(&self, subset: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let n = self.vertex_count();
        let mut new_index = vec![usize::MAX; n];
        for (i, &v) in subset.iter().enumerate() {
            if v >= n {
                return Err(Error::VertexOutOfRange { index: v, n });
            }
            if new_index[v] != usize::MAX {
                return Err(Error::DuplicateVertex { index: v });
            }
            new_index[v] = i;
        }
        let labels: Vec<String> = subset.iter().map(|&v| self.labels[v].clone()).collect();
        let mut edges = Vec::new();
        for (i, &v) in subset.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = new_index[w];
                if j != usize::MAX && i < j {
                    edges.push((i, j));
                }
            }
        }
        let graph = Graph::new(labels, &edges).expect("induced subgraph of a simple graph is simple");
        Ok((graph, subset.to_vec()))
    }

    pub fn eccentricity(&self, v: usize) -> Result<u32> {
        let n = self.vertex_count();
        if v >= n {
            return Err(Error::VertexOutOfRange { index: v, n });
        }
        self.all_pairs_distances().eccentricity(v).finite().ok_or(Error::Disconnected)
    }

    pub fn radius(&self) -> Result<u32> {
        self.all_pairs_distances().radius()
    }

    pub fn diameter(&self) -> Result<u32> {
        self.all_pairs_distances().diameter()
    }

    /// Whether every neighbor of one endpoint of a distance-`n` pair can be
    /// matched by a neighbor of the other endpoint at distance `n` again
    /// (and the graph is wide enough to have such pairs at all).
    pub fn is_n_friendly(&self, n: u32) -> Result<bool> {
        if n < 1 {
            return Err(Error::NonPositiveN);
        }
        let dm = self.all_pairs_distances();
        let diam = dm.diameter()?;
        if diam < n {
            return Ok(false);
        }
        let count = self.vertex_count();
        for u in 0..count {
            for v in 0..count {
                if dm.get(u, v) != Distance::Finite(n) {
                    continue;
                }
                for &w in &self.adj[u] {
                    let matched = self
                        .adj[v]
                        .iter()
                        .any(|&z| dm.get(w, z) == Distance::Finite(n));
                    if !matched {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }
}

/// Dense table of pairwise hop distances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<Distance>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> Distance {
        self.data[u * self.n + v]
    }

    /// Maximum distance from `v`; infinite when the graph is disconnected.
    pub fn eccentricity(&self, v: usize) -> Distance {
        (0..self.n)
            .map(|u| self.get(v, u))
            .max()
            .unwrap_or(Distance::Infinite)
    }

    pub fn radius(&self) -> Result<u32> {
        if self.n == 0 {
            return Err(Error::EmptyGraph);
        }
        (0..self.n)
            .map(|v| self.eccentricity(v))
            .min()
            .expect("n > 0")
            .finite()
            .ok_or(Error::Disconnected)
    }

    pub fn diameter(&self) -> Result<u32> {
        if self.n == 0 {
            return Err(Error::EmptyGraph);
        }
        (0..self.n)
            .map(|v| self.eccentricity(v))
            .max()
            .expect("n > 0")
            .finite()
            .ok_or(Error::Disconnected)
    }
}

/// Assignment of vertices to connected components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    component_of: Vec<usize>,
    count: usize,
}

impl Partition {
    pub fn component_of(&self, v: usize) -> usize {
        self.component_of[v]
    }

    pub fn count(&self) -> usize {
        self.count
    }

    /// Vertices grouped by component id; within a group indices ascend.
    pub fn groups(&self) -> Vec<Vec<usize>> {
        let mut groups = vec![Vec::new(); self.count];
        for (v, &id) in self.component_of.iter().enumerate() {
            groups[id].push(v);
        }
        groups
    }
}

/// Canonical sorted edge list with constant-time-ish lookup of edge ids.
///
/// The solver's edge-coverage bookkeeping and the oracle's edge masks index
/// into this same list, so their results compare like for like.
#[derive(Debug, Clone)]
pub struct EdgeList {
    edges: Vec<(usize, usize)>,
    index: HashMap<(usize, usize), usize>,
}

impl EdgeList {
    pub fn new(g: &Graph) -> Self {
        let edges = g.edges();
        let index = edges
            .iter()
            .enumerate()
            .map(|(i, &e)| (e, i))
            .collect();
        EdgeList { edges, index }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Id of the edge `{u, v}`, in either endpoint order.
    pub fn index_of(&self, u: usize, v: usize) -> Option<usize> {
        self.index.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }
}
