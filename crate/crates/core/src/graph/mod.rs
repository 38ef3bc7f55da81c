//! Simple undirected graphs with string-labeled vertices.
//!
//! Vertices are indexed densely in order of first appearance; every matrix
//! and certificate produced by this crate uses that order.

mod bipartite;
mod distance;
mod regular;

pub use bipartite::{is_bipartite, Bipartition};
pub use distance::{bfs_distances, DistanceMatrix};
pub use regular::{is_distance_regular, IntersectionNumbers, RegularityWitness};

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Immutable simple graph. Adjacency lists are sorted by vertex index.
///
/// Equality compares vertex order and adjacency, not edge insertion order.
#[derive(Debug, Clone)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    adjacency: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.adjacency == other.adjacency
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph from an explicit vertex list and label pairs.
    ///
    /// Duplicate edges are collapsed; edges keep the order of their first
    /// occurrence and are stored with the smaller index first.
    pub fn new<S, I, E>(vertices: I, edges: E) -> Result<Self>
    where
        S: AsRef<str>,
        I: IntoIterator<Item = S>,
        E: IntoIterator<Item = (S, S)>,
    {
        let mut builder = GraphBuilder::default();
        for v in vertices {
            let label = v.as_ref();
            if builder.index.contains_key(label) {
                return Err(Error::InvalidArgument(format!(
                    "duplicate vertex label '{label}'"
                )));
            }
            builder.vertex(label);
        }
        for (u, v) in edges {
            let (u, v) = (u.as_ref(), v.as_ref());
            let a = *builder
                .index
                .get(u)
                .ok_or_else(|| Error::UnknownVertex(u.to_string()))?;
            let b = *builder
                .index
                .get(v)
                .ok_or_else(|| Error::UnknownVertex(v.to_string()))?;
            if a == b {
                return Err(Error::SelfLoop {
                    line: 0,
                    vertex: u.to_string(),
                });
            }
            builder.edge(a, b);
        }
        builder.finish()
    }

    /// Builds a graph on vertices `0..labels.len()` from index pairs.
    pub fn from_indices(labels: Vec<String>, edges: &[(usize, usize)]) -> Result<Self> {
        let mut builder = GraphBuilder::default();
        for label in &labels {
            if builder.index.contains_key(label) {
                return Err(Error::InvalidArgument(format!(
                    "duplicate vertex label '{label}'"
                )));
            }
            builder.vertex(label);
        }
        let n = labels.len();
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::UnknownVertex(a.max(b).to_string()));
            }
            if a == b {
                return Err(Error::SelfLoop {
                    line: 0,
                    vertex: labels[a].clone(),
                });
            }
            builder.edge(a, b);
        }
        builder.finish()
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn resolve(&self, label: &str) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in first-insertion order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn is_singleton(&self) -> bool {
        self.labels.len() == 1
    }

    /// Returns a copy whose vertex order is `order` (a permutation of the
    /// current indices). Used to check relabeling invariance.
    pub fn permuted(&self, order: &[usize]) -> Result<Self> {
        let n = self.vertex_count();
        if order.len() != n {
            return Err(Error::InvalidArgument("permutation length mismatch".into()));
        }
        let mut position = vec![usize::MAX; n];
        for (new, &old) in order.iter().enumerate() {
            if old >= n || position[old] != usize::MAX {
                return Err(Error::InvalidArgument("not a permutation".into()));
            }
            position[old] = new;
        }
        let labels = order.iter().map(|&v| self.labels[v].clone()).collect();
        let edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(a, b)| (position[a], position[b]))
            .collect();
        Graph::from_indices(labels, &edges)
    }

    /// Serializes to the edge-list text format. A single-vertex graph is
    /// written as one declaration line.
    ///
    /// Edges are ordered so that parsing the text back yields the same vertex
    /// order whenever the format can express it: each vertex is introduced
    /// by an edge to an earlier vertex, or else together with its successor
    /// when the two are adjacent. Otherwise (e.g. `K_{2,3}` labeled
    /// `a1 a2 b1 b2 b3`) the parsed order differs.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        if self.edges.is_empty() {
            for label in &self.labels {
                let _ = writeln!(out, "{label}");
            }
            return out;
        }
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut lines = Vec::with_capacity(self.edges.len());
        for k in 0..n {
            if seen[k] {
                continue;
            }
            let nbrs = &self.adjacency[k];
            if let Some(&u) = nbrs.iter().find(|&&u| seen[u]) {
                lines.push((u, k));
            } else if k + 1 < n && !seen[k + 1] && self.is_adjacent(k, k + 1) {
                lines.push((k, k + 1));
                seen[k + 1] = true;
            } else if let Some(&w) = nbrs.first() {
                lines.push((k, w));
                seen[w] = true;
            }
            seen[k] = true;
        }
        let written: HashSet<_> = lines.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        lines.extend(self.edges.iter().filter(|e| !written.contains(e)));
        for (a, b) in lines {
            let _ = writeln!(out, "{} {}", self.labels[a], self.labels[b]);
        }
        out
    }
}

#[derive(Default)]
struct GraphBuilder {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    edges: Vec<(usize, usize)>,
    seen: HashSet<(usize, usize)>,
}

impl GraphBuilder {
    fn vertex(&mut self, label: &str) -> usize {
        if let Some(&i) = self.index.get(label) {
            return i;
        }
        let i = self.labels.len();
        self.labels.push(label.to_string());
        self.index.insert(label.to_string(), i);
        i
    }

    fn edge(&mut self, a: usize, b: usize) {
        let key = (a.min(b), a.max(b));
        if self.seen.insert(key) {
            self.edges.push(key);
        }
    }

    fn finish(self) -> Result<Graph> {
        if self.labels.is_empty() {
            return Err(Error::Empty);
        }
        let mut adjacency = vec![Vec::new(); self.labels.len()];
        for &(a, b) in &self.edges {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph {
            labels: self.labels,
            index: self.index,
            adjacency,
            edges: self.edges,
        })
    }
}

/// Parses the edge-list format.
///
/// `#` starts a comment, blank lines are skipped, two tokens make an edge and
/// a single token declares an isolated vertex (only when it is the sole
/// vertex of the graph).
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut builder = GraphBuilder::default();
    let mut declaration: Option<usize> = None;
    let mut edge_line: Option<usize> = None;

    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens.as_slice() {
            [] => {}
            [v] => {
                builder.vertex(v);
                declaration.get_or_insert(line);
            }
            [u, v] => {
                if u == v {
                    return Err(Error::SelfLoop {
                        line,
                        vertex: u.to_string(),
                    });
                }
                let a = builder.vertex(u);
                let b = builder.vertex(v);
                builder.edge(a, b);
                edge_line.get_or_insert(line);
            }
            _ => {
                return Err(Error::Malformed {
                    line,
                    reason: format!("expected 1 or 2 tokens, found {}", tokens.len()),
                })
            }
        }
    }

    if let Some(line) = declaration {
        if edge_line.is_some() || builder.labels.len() > 1 {
            return Err(Error::Malformed {
                line,
                reason: "isolated vertex declarations are only allowed for a single-vertex graph"
                    .into(),
            });
        }
    }
    builder.finish()
}
