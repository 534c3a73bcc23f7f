//! Graph representation, edge-partition (matching) construction, and
//! edge-list ingestion.
//!
//! Edge order is canonical throughout the crate: the greedy matching scans
//! edges in stored order, so the ingested or constructed order decides the
//! partition and must be reproducible.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("edge ({s}, {t}) is a self-loop{}", at_line(*.line))]
    SelfLoop { s: usize, t: usize, line: Option<usize> },
    #[error("edge ({s}, {t}) duplicates an earlier edge{}", at_line(*.line))]
    DuplicateEdge { s: usize, t: usize, line: Option<usize> },
    #[error("line {line}: expected two integer vertex ids, got {text:?}")]
    Parse { line: usize, text: String },
    #[error("edge list is empty")]
    EmptyEdgeList,
    #[error("edge index {index} out of range ({edges} edges)")]
    EdgeIndexOutOfRange { index: usize, edges: usize },
    #[error("edges {a} and {b} share a vertex; e0 is not a matching")]
    NotAMatching { a: usize, b: usize },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn at_line(line: Option<usize>) -> String {
    let mut s = String::new();
    if let Some(l) = line {
        let _ = write!(s, " (line {l})");
    }
    s
}

/// An undirected graph with ordered edges and per-vertex incidence lists.
///
/// Edges keep their insertion orientation `(s, t)`; orientation matters to
/// the solvers (it fixes the sign of the difference variables) but not to
/// the graph structure itself.
#[derive(Debug, Clone)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph over vertices `0..n` from an ordered edge list.
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        let mut seen: HashMap<(usize, usize), usize> = HashMap::new();
        let mut adjacency = vec![Vec::new(); n];
        for (idx, &(s, t)) in edges.iter().enumerate() {
            assert!(s < n && t < n, "edge ({s}, {t}) references a vertex >= {n}");
            if s == t {
                return Err(GraphError::SelfLoop { s, t, line: None });
            }
            let key = (s.min(t), s.max(t));
            if seen.insert(key, idx).is_some() {
                return Err(GraphError::DuplicateEdge { s, t, line: None });
            }
            adjacency[s].push(idx);
            adjacency[t].push(idx);
        }
        Ok(Graph { n, edges, adjacency })
    }

    /// Chain graph on `n` vertices with edges `(i, i+1)` in path order.
    pub fn chain(n: usize) -> Self {
        let edges = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        Graph::new(n, edges).expect("chain edges are valid")
    }

    /// 4-neighbor grid graph on `rows x cols` vertices in row-major order.
    ///
    /// Edges are emitted vertex by vertex in row-major order: first the
    /// edge to the right neighbor, then the edge to the neighbor below.
    pub fn grid(rows: usize, cols: usize) -> Self {
        assert!(rows >= 1 && cols >= 1);
        let mut edges = Vec::with_capacity(2 * rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                let v = r * cols + c;
                if c + 1 < cols {
                    edges.push((v, v + 1));
                }
                if r + 1 < rows {
                    edges.push((v, v + cols));
                }
            }
        }
        Graph::new(rows * cols, edges).expect("grid edges are valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, idx: usize) -> (usize, usize) {
        self.edges[idx]
    }

    /// Indices of the edges incident to vertex `v`.
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }
}

/// A partition of the edge set into a matching `e0` and the remainder `e1`,
/// together with the per-vertex degrees in the remainder subgraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgePartition {
    /// Edge indices forming the matching (no two share a vertex).
    pub e0: Vec<usize>,
    /// The remaining edge indices, in stored order.
    pub e1: Vec<usize>,
    /// `d[i]` = number of `e1` edges incident to vertex `i`.
    pub d: Vec<usize>,
    /// Set for partitions supplied by the caller, whose matching property
    /// is validated but whose maximality is not enforced.
    pub user_supplied: bool,
}

impl EdgePartition {
    /// The all-remainder partition (`e0` empty); this is the partition
    /// under which the decomposed formulation degenerates to the
    /// network-lasso one.
    pub fn empty(graph: &Graph) -> Self {
        EdgePartition {
            e0: Vec::new(),
            e1: (0..graph.edge_count()).collect(),
            d: (0..graph.vertex_count()).map(|v| graph.degree(v)).collect(),
            user_supplied: true,
        }
    }

    /// Builds a partition from caller-chosen matching edges. The matching
    /// invariant is validated; maximality is not.
    pub fn from_matching(graph: &Graph, e0: Vec<usize>) -> Result<Self, GraphError> {
        let mut used = vec![usize::MAX; graph.vertex_count()];
        let mut in_e0 = vec![false; graph.edge_count()];
        for &idx in &e0 {
            if idx >= graph.edge_count() {
                return Err(GraphError::EdgeIndexOutOfRange {
                    index: idx,
                    edges: graph.edge_count(),
                });
            }
            let (s, t) = graph.edge(idx);
            for v in [s, t] {
                if used[v] != usize::MAX {
                    return Err(GraphError::NotAMatching { a: used[v], b: idx });
                }
                used[v] = idx;
            }
            in_e0[idx] = true;
        }
        let e1: Vec<usize> = (0..graph.edge_count()).filter(|&i| !in_e0[i]).collect();
        let d = remainder_degrees(graph, &e1);
        Ok(EdgePartition { e0, e1, d, user_supplied: true })
    }

    /// Checks every structural invariant against `graph`. Maximality is
    /// only required for partitions not flagged as user-supplied.
    pub fn validate(&self, graph: &Graph) -> Result<(), String> {
        let m = graph.edge_count();
        let mut seen = vec![0u8; m];
        for &i in &self.e0 {
            seen.get_mut(i).map(|s| *s += 1).ok_or(format!("e0 index {i} out of range"))?;
        }
        for &i in &self.e1 {
            seen.get_mut(i).map(|s| *s += 1).ok_or(format!("e1 index {i} out of range"))?;
        }
        if seen.iter().any(|&s| s != 1) {
            return Err("e0 and e1 are not a disjoint cover of the edges".into());
        }
        let mut matched = vec![false; graph.vertex_count()];
        for &i in &self.e0 {
            let (s, t) = graph.edge(i);
            if matched[s] || matched[t] {
                return Err(format!("e0 edge {i} shares a vertex with another e0 edge"));
            }
            matched[s] = true;
            matched[t] = true;
        }
        if !self.user_supplied {
            for &i in &self.e1 {
                let (s, t) = graph.edge(i);
                if !matched[s] && !matched[t] {
                    return Err(format!("e1 edge {i} touches no e0 edge; matching not maximal"));
                }
            }
        }
        let expect = remainder_degrees(graph, &self.e1);
        if self.d != expect {
            return Err("remainder degrees d are inconsistent with e1".into());
        }
        Ok(())
    }
}

fn remainder_degrees(graph: &Graph, e1: &[usize]) -> Vec<usize> {
    let mut d = vec![0usize; graph.vertex_count()];
    for &idx in e1 {
        let (s, t) = graph.edge(idx);
        d[s] += 1;
        d[t] += 1;
    }
    d
}

/// Greedy maximal matching: cycle once through the edges in stored order
/// and take every edge not sharing a vertex with an already taken one.
pub fn greedy_matching(graph: &Graph) -> EdgePartition {
    let mut matched = vec![false; graph.vertex_count()];
    let mut e0 = Vec::new();
    let mut e1 = Vec::new();
    for (idx, &(s, t)) in graph.edges().iter().enumerate() {
        if !matched[s] && !matched[t] {
            matched[s] = true;
            matched[t] = true;
            e0.push(idx);
        } else {
            e1.push(idx);
        }
    }
    let d = remainder_degrees(graph, &e1);
    EdgePartition { e0, e1, d, user_supplied: false }
}

/// Builds the `rows x cols` grid graph together with its natural matching:
/// in every row the horizontal edges `(2k, 2k+1)`, and, when the column
/// count is odd, the vertical edges `(2k, 2k+1)` of the last column. The
/// result is a maximal (for even side lengths perfect) matching.
pub fn grid_partition(rows: usize, cols: usize) -> (Graph, EdgePartition) {
    assert!(rows >= 1 && cols >= 1);
    let graph = Graph::grid(rows, cols);
    let index: HashMap<(usize, usize), usize> = graph
        .edges()
        .iter()
        .enumerate()
        .map(|(i, &(s, t))| ((s, t), i))
        .collect();
    let mut e0 = Vec::new();
    for r in 0..rows {
        for k in 0..cols / 2 {
            let v = r * cols + 2 * k;
            e0.push(index[&(v, v + 1)]);
        }
    }
    if cols % 2 == 1 {
        for k in 0..rows / 2 {
            let v = 2 * k * cols + (cols - 1);
            e0.push(index[&(v, v + cols)]);
        }
    }
    e0.sort_unstable();
    let mut part = EdgePartition::from_matching(&graph, e0).expect("pattern is a matching");
    part.user_supplied = false;
    debug_assert!(part.validate(&graph).is_ok());
    (graph, part)
}

/// Reads an edge list: one edge per line, two non-negative integer vertex
/// ids separated by a comma or whitespace; `#` starts a comment line.
/// Vertex ids are compacted to `0..n-1` preserving numeric order.
pub fn load_edge_list(path: impl AsRef<Path>) -> Result<Graph, GraphError> {
    let text = std::fs::read_to_string(path)?;
    parse_edge_list(&text)
}

/// Parses edge-list text; see [`load_edge_list`] for the format.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut raw: Vec<(u64, u64, usize)> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed
            .split(|ch: char| ch == ',' || ch.is_whitespace())
            .filter(|f| !f.is_empty())
            .collect();
        let parsed: Option<(u64, u64)> = match fields.as_slice() {
            [a, b] => a.parse().ok().zip(b.parse().ok()),
            _ => None,
        };
        let (a, b) = parsed.ok_or_else(|| GraphError::Parse {
            line: line_no,
            text: trimmed.to_string(),
        })?;
        raw.push((a, b, line_no));
    }
    if raw.is_empty() {
        return Err(GraphError::EmptyEdgeList);
    }

    let mut ids: Vec<u64> = raw.iter().flat_map(|&(a, b, _)| [a, b]).collect();
    ids.sort_unstable();
    ids.dedup();
    let rank: HashMap<u64, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();

    let n = ids.len();
    let mut seen: HashMap<(usize, usize), usize> = HashMap::new();
    let mut edges = Vec::with_capacity(raw.len());
    for &(a, b, line_no) in &raw {
        let (s, t) = (rank[&a], rank[&b]);
        if s == t {
            return Err(GraphError::SelfLoop { s, t, line: Some(line_no) });
        }
        if seen.insert((s.min(t), s.max(t)), line_no).is_some() {
            return Err(GraphError::DuplicateEdge { s, t, line: Some(line_no) });
        }
        edges.push((s, t));
    }
    Graph::new(n, edges)
}

/// Writes the graph back out in the edge-list format accepted by
/// [`parse_edge_list`].
pub fn edge_list_string(graph: &Graph) -> String {
    let mut out = String::new();
    for &(s, t) in graph.edges() {
        let _ = writeln!(out, "{s},{t}");
    }
    out
}
