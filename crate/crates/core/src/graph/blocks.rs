use super::{Graph, VertexSet};
use crate::error::Result;

/// Blocks (maximal 2-connected subgraphs or bridges) and cut vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Vertex sets of the blocks, sorted lexicographically.
    pub blocks: Vec<VertexSet>,
    pub cut_vertices: VertexSet,
}

impl BlockDecomposition {
    /// Cut vertices lying in block `i`.
    pub fn cut_vertices_in(&self, i: usize) -> VertexSet {
        self.blocks[i].intersection(&self.cut_vertices)
    }
}

const UNSEEN: usize = usize::MAX;

/// Hopcroft–Tarjan block decomposition, iterative, O(n + |E|).
pub fn blocks_and_cut_vertices(g: &Graph) -> Result<BlockDecomposition> {
    g.require_connected()?;
    let n = g.vertex_count();
    if n == 1 {
        return Ok(BlockDecomposition {
            blocks: vec![VertexSet::from_sorted(vec![0])],
            cut_vertices: VertexSet::new(),
        });
    }

    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks = Vec::new();
    let mut time = 0usize;

    // (vertex, parent, next neighbor index)
    let mut stack: Vec<(usize, usize, usize)> = vec![(0, UNSEEN, 0)];
    disc[0] = time;
    low[0] = time;
    time += 1;
    let mut root_children = 0usize;

    while let Some(&mut (v, parent, ref mut next)) = stack.last_mut() {
        if let Some(&w) = g.neighbors(v).get(*next) {
            *next += 1;
            if disc[w] == UNSEEN {
                edge_stack.push((v, w));
                disc[w] = time;
                low[w] = time;
                time += 1;
                if v == 0 {
                    root_children += 1;
                }
                stack.push((w, v, 0));
            } else if w != parent && disc[w] < disc[v] {
                edge_stack.push((v, w));
                low[v] = low[v].min(disc[w]);
            }
            continue;
        }
        stack.pop();
        if parent == UNSEEN {
            continue;
        }
        low[parent] = low[parent].min(low[v]);
        if low[v] >= disc[parent] {
            if parent != 0 {
                is_cut[parent] = true;
            }
            let mut members = Vec::new();
            while let Some((a, b)) = edge_stack.pop() {
                members.push(a);
                members.push(b);
                if (a, b) == (parent, v) {
                    break;
                }
            }
            blocks.push(VertexSet::from_unsorted(members));
        }
    }
    if root_children > 1 {
        is_cut[0] = true;
    }
    blocks.sort();
    Ok(BlockDecomposition {
        blocks,
        cut_vertices: (0..n).filter(|&v| is_cut[v]).collect(),
    })
}
