//! Simple undirected graphs with dense integer vertex ids.
//!
//! Every other module works on [`Graph`]: edges are stored as sorted `(u, v)`
//! pairs with `u < v`, so edge indices are stable and double as line-graph
//! vertex ids (see [`line_graph`]).

mod blocks;
mod distance;
mod io;
mod line;
mod spanning;

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};

pub use blocks::{blocks_and_cut_vertices, BlockDecomposition};
pub use distance::{bfs_all_pairs, bfs_from, DistanceMatrix};
pub use io::{parse_graph, write_graph};
pub use line::{line_graph, LineGraphMap};
pub use spanning::spanning_tree_upper;

/// A sorted, duplicate-free list of vertex ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    /// Sorts and deduplicates `ids`.
    pub fn from_unsorted(mut ids: Vec<usize>) -> Self {
        ids.sort_unstable();
        ids.dedup();
        VertexSet(ids)
    }

    /// Builds a set from ids that are already strictly ascending.
    pub fn from_sorted(ids: Vec<usize>) -> Self {
        debug_assert!(ids.windows(2).all(|w| w[0] < w[1]));
        VertexSet(ids)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.iter().all(|&v| other.contains(v))
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut ids = self.0.clone();
        ids.extend_from_slice(&other.0);
        VertexSet::from_unsorted(ids)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.iter().copied().filter(|&v| !other.contains(v)).collect())
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.iter().copied().filter(|&v| other.contains(v)).collect())
    }

    /// Largest id plus one, or zero for the empty set.
    pub(crate) fn bound(&self) -> usize {
        self.0.last().map_or(0, |&v| v + 1)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_unsorted(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a usize;
    type IntoIter = std::slice::Iter<'a, usize>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// A finite simple undirected graph on vertices `0..n`.
///
/// Labels are presentation only; an unlabeled vertex displays as its
/// decimal id. Connectivity is not an invariant of the type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    labels: BTreeMap<usize, String>,
}

impl Graph {
    /// Builds a graph from an edge list. Pairs may be given in either
    /// orientation; self-loops, duplicates and out-of-range ids are errors.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph("graph needs at least one vertex".into()));
        }
        let mut list = Vec::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({a}, {b}) has a vertex id out of range 0..{n}"
                )));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {a}")));
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!("duplicate edge ({}, {})", w[0].0, w[0].1)));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &list {
            adj[u].push(v);
            adj[v].push(u);
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: list,
            adj,
            labels: BTreeMap::new(),
        })
    }

    /// Attaches labels; every label must be non-empty, whitespace-free and
    /// distinct from every other effective label.
    pub fn with_labels(mut self, labels: impl IntoIterator<Item = (usize, String)>) -> Result<Self> {
        for (v, label) in labels {
            if v >= self.n {
                return Err(Error::InvalidGraph(format!("label for vertex {v} out of range")));
            }
            if label.is_empty() || label.chars().any(char::is_whitespace) {
                return Err(Error::InvalidGraph(format!(
                    "label {label:?} must be non-empty and free of whitespace"
                )));
            }
            self.labels.insert(v, label);
        }
        let mut seen = HashSet::with_capacity(self.n);
        for v in 0..self.n {
            let label = self.label(v);
            if !seen.insert(label.clone()) {
                return Err(Error::InvalidGraph(format!("label {label:?} is not unique")));
            }
        }
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in ascending order; the position of an edge is its edge id.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Id of the edge `{u, v}`, if present.
    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    /// Display label of `v`.
    pub fn label(&self, v: usize) -> String {
        self.labels.get(&v).cloned().unwrap_or_else(|| v.to_string())
    }

    /// Explicitly assigned labels.
    pub fn explicit_labels(&self) -> &BTreeMap<usize, String> {
        &self.labels
    }

    /// Vertex carrying the given label (explicit or default).
    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        if let Some((&v, _)) = self.labels.iter().find(|(_, l)| l.as_str() == label) {
            return Some(v);
        }
        label
            .parse::<usize>()
            .ok()
            .filter(|&v| v < self.n && !self.labels.contains_key(&v))
    }

    /// Maximum degree, Δ(G).
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        self.find_unreachable().is_none()
    }

    /// A vertex not reachable from vertex 0, if any.
    pub(crate) fn find_unreachable(&self) -> Option<usize> {
        let dist = bfs_from(self, 0);
        dist.iter().position(|&d| d == u32::MAX)
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        match self.find_unreachable() {
            Some(v) => Err(Error::Disconnected(0, v)),
            None => Ok(()),
        }
    }

    /// True iff the graph is connected and has exactly `n - 1` edges.
    pub fn is_tree(&self) -> bool {
        self.edges.len() + 1 == self.n && self.is_connected()
    }

    /// Whether every pair of distinct vertices is adjacent.
    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * (self.n - 1) / 2
    }

    /// Subgraph induced by `vertices`, renumbered in ascending order.
    pub fn induced_subgraph(&self, vertices: &VertexSet) -> Graph {
        let ids = vertices.as_slice();
        let local = |v: usize| ids.binary_search(&v).ok();
        let edges = ids.iter().enumerate().flat_map(|(i, &u)| {
            self.adj[u]
                .iter()
                .filter_map(move |&w| local(w).filter(|&j| j > i).map(|j| (i, j)))
        });
        let edges: Vec<_> = edges.collect();
        let labels = ids
            .iter()
            .enumerate()
            .filter_map(|(i, v)| self.labels.get(v).map(|l| (i, l.clone())));
        let mut sub = Graph::new(ids.len().max(1), edges).expect("induced subgraph of a simple graph is simple");
        sub.labels = labels.collect();
        sub
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&write_graph(self))
    }
}

/// Maximum degree, Δ(G).
pub fn max_degree(g: &Graph) -> usize {
    g.max_degree()
}

/// True iff `g` is connected with `n - 1` edges.
pub fn is_tree(g: &Graph) -> bool {
    g.is_tree()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|v| (v - 1, v))).unwrap()
    }

    #[test]
    fn max_degree_of_small_graphs() {
        assert_eq!(max_degree(&path(4)), 2);
        let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(max_degree(&star), 3);
    }

    #[test]
    fn tree_detection() {
        assert!(is_tree(&path(5)));
        let k3 = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(!is_tree(&k3));
        let forest = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!is_tree(&forest));
        assert!(is_tree(&Graph::new(1, []).unwrap()));
    }

    #[test]
    fn rejects_malformed_edges() {
        assert!(Graph::new(3, [(0, 0)]).is_err());
        assert!(Graph::new(3, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(3, [(0, 3)]).is_err());
        assert!(Graph::new(0, []).is_err());
    }

    #[test]
    fn labels_must_be_unique() {
        let g = Graph::new(2, [(0, 1)]).unwrap();
        assert!(g.clone().with_labels([(0, "1".to_string())]).is_err());
        let g = g.with_labels([(0, "x".to_string())]).unwrap();
        assert_eq!(g.label(0), "x");
        assert_eq!(g.label(1), "1");
        assert_eq!(g.vertex_by_label("x"), Some(0));
        assert_eq!(g.vertex_by_label("0"), None);
        assert_eq!(g.vertex_by_label("1"), Some(1));
    }

    #[test]
    fn induced_subgraph_renumbers() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3), (1, 3)]).unwrap();
        let sub = g.induced_subgraph(&VertexSet::from_unsorted(vec![3, 1, 2]));
        assert_eq!(sub.vertex_count(), 3);
        assert_eq!(sub.edges(), &[(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn vertex_set_ops() {
        let a: VertexSet = [3, 1, 2, 3].into_iter().collect();
        let b = VertexSet::from_unsorted(vec![2, 5]);
        assert_eq!(a.as_slice(), &[1, 2, 3]);
        assert_eq!(a.union(&b).as_slice(), &[1, 2, 3, 5]);
        assert_eq!(a.difference(&b).as_slice(), &[1, 3]);
        assert_eq!(a.intersection(&b).as_slice(), &[2]);
        assert!(!b.is_subset(&a));
    }
}
