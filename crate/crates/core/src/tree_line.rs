//! Doubly resolving sets of line graphs: the `⌈log2(1+Δ)⌉ ≤ Ψ(L(G)) ≤ |V|-1`
//! bounds, and the exact value `Ψ(L(T)) = σ(T) - ex'(T)` for trees with its
//! linear-time construction.

use crate::error::{invalid, Error, Result};
use crate::graph::{bfs_all_pairs, line_graph, spanning_tree_upper, Graph, VertexSet};
use crate::resolving::is_drs_fast;

/// Leaf and major-vertex structure of a tree.
///
/// A major vertex has degree at least 3. A leaf is a terminal vertex of the
/// major vertex strictly closest to it; majors with a terminal vertex are
/// exterior, and majors with a leaf neighbor are strong exterior.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeStats {
    pub n: usize,
    pub leaves: VertexSet,
    pub majors: VertexSet,
    pub exterior_majors: VertexSet,
    pub strong_exterior_majors: VertexSet,
    /// `(leaf, major)` for every leaf that is a terminal vertex, by leaf.
    pub terminal_of: Vec<(usize, usize)>,
    pub sigma: usize,
    pub ex: usize,
    pub ex_prime: usize,
}

impl TreeStats {
    pub fn is_path(&self) -> bool {
        self.majors.is_empty()
    }

    pub fn terminal_major(&self, leaf: usize) -> Option<usize> {
        self.terminal_of
            .binary_search_by_key(&leaf, |&(l, _)| l)
            .ok()
            .map(|i| self.terminal_of[i].1)
    }
}

fn require_tree(t: &Graph) -> Result<()> {
    if t.is_tree() {
        Ok(())
    } else {
        Err(Error::NotATree)
    }
}

/// Computes σ, ex and ex' in O(n).
pub fn tree_stats(t: &Graph) -> Result<TreeStats> {
    require_tree(t)?;
    let n = t.vertex_count();
    if n < 2 {
        return Err(invalid("tree statistics need at least two vertices"));
    }
    let deg = |v: usize| t.degree(v);
    let leaves: VertexSet = (0..n).filter(|&v| deg(v) == 1).collect();
    let majors: VertexSet = (0..n).filter(|&v| deg(v) >= 3).collect();
    let strong: VertexSet = majors
        .iter()
        .filter(|&v| t.neighbors(v).iter().any(|&w| deg(w) == 1))
        .collect();

    // Walk inward from each leaf along degree-2 vertices; the pendant paths
    // are vertex-disjoint so the walks total O(n).
    let mut terminal_of = Vec::new();
    for leaf in leaves.iter() {
        let (mut prev, mut cur) = (leaf, t.neighbors(leaf)[0]);
        while deg(cur) == 2 {
            let next = t.neighbors(cur).iter().copied().find(|&w| w != prev).unwrap();
            prev = cur;
            cur = next;
        }
        if deg(cur) >= 3 {
            terminal_of.push((leaf, cur));
        }
    }
    let exterior: VertexSet = terminal_of.iter().map(|&(_, m)| m).collect();

    Ok(TreeStats {
        n,
        sigma: leaves.len(),
        ex: exterior.len(),
        ex_prime: strong.len(),
        leaves,
        majors,
        exterior_majors: exterior,
        strong_exterior_majors: strong,
        terminal_of,
    })
}

/// Ψ(L(T)) = σ(T) - ex'(T).
pub fn psi_line_tree_formula(stats: &TreeStats) -> Result<usize> {
    if stats.n < 3 {
        return Err(invalid(
            "the line graph of a tree with fewer than three vertices has one vertex",
        ));
    }
    Ok(stats.sigma - stats.ex_prime)
}

/// μ(T): 1 for a path, σ(T) - ex(T) otherwise.
pub fn mu_tree_formula(stats: &TreeStats) -> usize {
    if stats.is_path() {
        1
    } else {
        stats.sigma - stats.ex
    }
}

/// Minimum DRS of L(T) as edge ids of `t`, in O(n) without distances.
///
/// Takes every leaf edge, then for each strong exterior major vertex drops
/// the leaf edge to its smallest-id leaf neighbor.
pub fn construct_min_drs_line_tree(t: &Graph) -> Result<VertexSet> {
    require_tree(t)?;
    let n = t.vertex_count();
    if n < 3 {
        return Err(invalid("minimum DRS of L(T) needs a tree with at least three vertices"));
    }
    // per vertex: edge id of the leaf edge to be dropped
    let mut dropped: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut keep = vec![false; t.edge_count()];
    for (id, &(a, b)) in t.edges().iter().enumerate() {
        let (leaf, parent) = match (t.degree(a), t.degree(b)) {
            (1, _) => (a, b),
            (_, 1) => (b, a),
            _ => continue,
        };
        keep[id] = true;
        if t.degree(parent) >= 3 {
            let slot = &mut dropped[parent];
            if slot.map_or(true, |(l, _)| leaf < l) {
                *slot = Some((leaf, id));
            }
        }
    }
    for (_, id) in dropped.into_iter().flatten() {
        keep[id] = false;
    }
    Ok(VertexSet::from_sorted(
        keep.iter().enumerate().filter(|(_, &k)| k).map(|(i, _)| i).collect(),
    ))
}

fn require_line_host(g: &Graph) -> Result<()> {
    if g.vertex_count() < 3 {
        return Err(invalid("line-graph bounds need a graph with at least three vertices"));
    }
    g.require_connected()
}

/// `⌈log2(1 + Δ(g))⌉` in integer arithmetic.
pub fn lower_bound_line(g: &Graph) -> Result<usize> {
    require_line_host(g)?;
    Ok(ceil_log2(1 + g.max_degree()))
}

/// Smallest m with 2^m ≥ x.
pub(crate) fn ceil_log2(x: usize) -> usize {
    let mut m = 0;
    while (1usize << m) < x {
        m += 1;
    }
    m
}

/// The edges of a spanning tree of `g`, as line vertices of L(g), verified
/// to be a DRS of L(g). Size `|V(g)| - 1`.
pub fn upper_bound_drs_line(g: &Graph) -> Result<VertexSet> {
    require_line_host(g)?;
    let tree = spanning_tree_upper(g)?;
    let (lg, map) = line_graph(g)?;
    let set = map.edges_to_line(&tree);
    let dm = bfs_all_pairs(&lg)?;
    if set.len() != g.vertex_count() - 1 || !is_drs_fast(&dm, &set) {
        return Err(Error::Verification(
            "spanning-tree edge set is not a DRS of the line graph".into(),
        ));
    }
    Ok(set)
}
