use super::{Graph, VertexSet};
use crate::error::{Error, Result};

/// Correspondence between line-graph vertices and root edges.
///
/// Line vertex `i` is root edge `i`, so the endpoint list is sorted and the
/// inverse lookup is a binary search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineGraphMap {
    endpoints: Vec<(usize, usize)>,
}

impl LineGraphMap {
    /// Root edge `(u, v)`, `u < v`, represented by line vertex `x`.
    pub fn edge(&self, x: usize) -> (usize, usize) {
        self.endpoints[x]
    }

    /// Line vertex of the root edge `{u, v}`.
    pub fn line_vertex(&self, u: usize, v: usize) -> Option<usize> {
        self.endpoints.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn len(&self) -> usize {
        self.endpoints.len()
    }

    pub fn is_empty(&self) -> bool {
        self.endpoints.is_empty()
    }

    /// Maps a set of root edge ids to line vertices (the identity on ids).
    pub fn edges_to_line(&self, edge_ids: &VertexSet) -> VertexSet {
        debug_assert!(edge_ids.bound() <= self.endpoints.len());
        edge_ids.clone()
    }
}

/// Builds L(g). Line vertex labels are `a_b` from the root labels.
pub fn line_graph(g: &Graph) -> Result<(Graph, LineGraphMap)> {
    let m = g.edge_count();
    if m == 0 {
        return Err(Error::InvalidGraph("line graph of an edgeless graph is empty".into()));
    }
    let mut line_edges = Vec::new();
    for v in 0..g.vertex_count() {
        let incident: Vec<usize> = g
            .neighbors(v)
            .iter()
            .map(|&w| g.edge_id(v, w).expect("adjacency and edge list agree"))
            .collect();
        for (i, &a) in incident.iter().enumerate() {
            for &b in &incident[i + 1..] {
                line_edges.push((a, b));
            }
        }
    }
    let labels = g
        .edges()
        .iter()
        .enumerate()
        .map(|(i, &(u, v))| (i, format!("{}_{}", g.label(u), g.label(v))));
    let lg = Graph::new(m, line_edges)?.with_labels(labels)?;
    Ok((
        lg,
        LineGraphMap {
            endpoints: g.edges().to_vec(),
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_three_gives_an_edge() {
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let (lg, map) = line_graph(&p3).unwrap();
        assert_eq!(lg.vertex_count(), 2);
        assert_eq!(lg.edges(), &[(0, 1)]);
        assert_eq!(lg.label(0), "0_1");
        assert_eq!(map.edge(1), (1, 2));
        assert_eq!(map.line_vertex(2, 1), Some(1));
    }

    #[test]
    fn star_gives_clique() {
        for n in 2..7 {
            let star = Graph::new(n + 1, (1..=n).map(|v| (0, v))).unwrap();
            let (lg, _) = line_graph(&star).unwrap();
            assert_eq!(lg.vertex_count(), n);
            assert!(lg.is_complete());
        }
    }

    #[test]
    fn degree_identity() {
        let g = Graph::new(5, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        let (lg, map) = line_graph(&g).unwrap();
        for x in 0..lg.vertex_count() {
            let (u, v) = map.edge(x);
            assert_eq!(lg.degree(x), g.degree(u) + g.degree(v) - 2);
        }
    }

    #[test]
    fn edgeless_rejected() {
        assert!(line_graph(&Graph::new(3, []).unwrap()).is_err());
    }
}
