use std::collections::VecDeque;

use super::Graph;
use crate::error::{Error, Result};

/// All-pairs hop distances of a connected graph, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    #[inline]
    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    /// Largest entry.
    pub fn diameter(&self) -> u32 {
        self.d.iter().copied().max().unwrap_or(0)
    }
}

/// Single-source BFS; unreachable vertices get `u32::MAX`.
pub fn bfs_from(g: &Graph, source: usize) -> Vec<u32> {
    let mut dist = vec![u32::MAX; g.vertex_count()];
    let mut queue = VecDeque::new();
    dist[source] = 0;
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let next = dist[u] + 1;
        for &w in g.neighbors(u) {
            if dist[w] == u32::MAX {
                dist[w] = next;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Exact hop distances between every pair of vertices, one BFS per source.
pub fn bfs_all_pairs(g: &Graph) -> Result<DistanceMatrix> {
    let n = g.vertex_count();
    let mut d = Vec::with_capacity(n * n);
    for s in 0..n {
        let row = bfs_from(g, s);
        if let Some(v) = row.iter().position(|&x| x == u32::MAX) {
            return Err(Error::Disconnected(s, v));
        }
        d.extend_from_slice(&row);
    }
    Ok(DistanceMatrix { n, d })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_and_clique() {
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let dm = bfs_all_pairs(&p3).unwrap();
        assert_eq!(dm.get(0, 2), 2);
        assert_eq!(dm.get(2, 0), 2);
        assert_eq!(dm.diameter(), 2);

        let k3 = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let dm = bfs_all_pairs(&k3).unwrap();
        for u in 0..3 {
            for v in 0..3 {
                assert_eq!(dm.get(u, v), u32::from(u != v));
            }
        }
    }

    #[test]
    fn disconnected_names_vertices() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(bfs_all_pairs(&g), Err(Error::Disconnected(0, 2)));
    }

    #[test]
    fn metric_axioms_on_petersen() {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        let g = Graph::new(10, outer.chain(spokes).chain(inner)).unwrap();
        let dm = bfs_all_pairs(&g).unwrap();
        for u in 0..10 {
            assert_eq!(dm.get(u, u), 0);
            for v in 0..10 {
                assert_eq!(dm.get(u, v), dm.get(v, u));
                assert_eq!(dm.get(u, v) == 1, g.has_edge(u, v));
                for w in 0..10 {
                    assert!(dm.get(u, w) <= dm.get(u, v) + dm.get(v, w));
                }
            }
        }
        assert_eq!(dm.diameter(), 2);
    }
}
