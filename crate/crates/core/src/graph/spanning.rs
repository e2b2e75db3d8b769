use std::collections::VecDeque;

use super::{Graph, VertexSet};
use crate::error::{invalid, Result};

/// Spanning tree used by the `|V| - 1` upper bound, as a set of edge ids.
///
/// On four vertices with at least five edges (K4 or K4 minus an edge) the
/// tree is the star at the lowest-id vertex of degree 3, never a P4.
/// Otherwise it is the BFS tree from vertex 0 with neighbors taken in
/// ascending order.
pub fn spanning_tree_upper(g: &Graph) -> Result<VertexSet> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(invalid("spanning tree needs at least two vertices"));
    }
    g.require_connected()?;

    if n == 4 && g.edge_count() >= 5 {
        let center = (0..4).find(|&v| g.degree(v) == 3).expect("K4- has a degree-3 vertex");
        return Ok(g
            .neighbors(center)
            .iter()
            .map(|&w| g.edge_id(center, w).unwrap())
            .collect());
    }

    let mut seen = vec![false; n];
    let mut tree = Vec::with_capacity(n - 1);
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                tree.push(g.edge_id(u, w).unwrap());
                queue.push_back(w);
            }
        }
    }
    Ok(VertexSet::from_unsorted(tree))
}
