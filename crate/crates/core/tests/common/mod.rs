#![allow(dead_code)]

use std::collections::HashSet;

use drs_core::families::SplitMix64;
use drs_core::graph::{bfs_all_pairs, line_graph, DistanceMatrix, Graph};
use drs_core::reduction::ThreeDMInstance;

/// The 13-vertex example tree: v1..v13 as ids 0..12.
pub fn tree13() -> Graph {
    let e = [
        (1, 2),
        (1, 3),
        (1, 4),
        (2, 5),
        (2, 6),
        (3, 7),
        (3, 8),
        (4, 9),
        (4, 10),
        (8, 11),
        (9, 12),
        (10, 13),
    ];
    let labels = (0..13).map(|v| (v, format!("v{}", v + 1)));
    Graph::new(13, e.iter().map(|&(a, b)| (a - 1, b - 1)))
        .unwrap()
        .with_labels(labels)
        .unwrap()
}

/// The seven-triple instance with n = 3, 0-based.
pub fn seven_triples() -> ThreeDMInstance {
    let t = [
        (1, 1, 1),
        (1, 2, 3),
        (1, 3, 2),
        (2, 1, 2),
        (2, 2, 3),
        (3, 3, 1),
        (3, 3, 2),
    ];
    ThreeDMInstance::new(3, t.iter().map(|&(a, b, c)| (a - 1, b - 1, c - 1)).collect()).unwrap()
}

pub fn dm(g: &Graph) -> DistanceMatrix {
    bfs_all_pairs(g).unwrap()
}

pub fn line(g: &Graph) -> Graph {
    line_graph(g).unwrap().0
}

/// Every connected labeled graph on `n` vertices (edge-subset enumeration
/// filtered by connectivity).
pub fn all_connected_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u32..1 << pairs.len())
        .filter_map(|mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, e)| *e);
            let g = Graph::new(n, edges).unwrap();
            g.is_connected().then_some(g)
        })
        .collect()
}

/// AHU encoding of `t` rooted at `root`.
fn rooted_code(t: &Graph, root: usize, parent: Option<usize>) -> String {
    let mut kids: Vec<String> = t
        .neighbors(root)
        .iter()
        .filter(|&&w| Some(w) != parent)
        .map(|&w| rooted_code(t, w, Some(root)))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

/// Isomorphism-invariant code of a tree: minimum AHU code over its centers.
pub fn tree_code(t: &Graph) -> String {
    let n = t.vertex_count();
    let mut deg: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in t.neighbors(v) {
                if deg[w] > 1 {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        next.push(w);
                    }
                }
            }
            deg[v] = 0;
        }
        layer = next;
    }
    layer.iter().map(|&c| rooted_code(t, c, None)).min().unwrap()
}

/// One representative per isomorphism class of trees on `n >= 2` vertices.
pub fn all_free_trees(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::new(2, [(0, 1)]).unwrap()];
    for size in 3..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for t in &level {
            for v in 0..size - 1 {
                let edges = t.edges().iter().copied().chain(std::iter::once((v, size - 1)));
                let g = Graph::new(size, edges).unwrap();
                if seen.insert(tree_code(&g)) {
                    next.push(g);
                }
            }
        }
        level = next;
    }
    level
}

/// Seeded random instance with `n` elements and `t` distinct triples; when
/// `plant` is set the triples include a random perfect matching.
pub fn random_3dm(n: usize, t: usize, plant: bool, seed: u64) -> ThreeDMInstance {
    let mut rng = SplitMix64::new(seed);
    let mut triples: Vec<(usize, usize, usize)> = Vec::new();
    if plant {
        let mut perm_b: Vec<usize> = (0..n).collect();
        let mut perm_c: Vec<usize> = (0..n).collect();
        for perm in [&mut perm_b, &mut perm_c] {
            for i in (1..n).rev() {
                let j = rng.below(i as u64 + 1) as usize;
                perm.swap(i, j);
            }
        }
        triples.extend((0..n).map(|a| (a, perm_b[a], perm_c[a])));
    }
    while triples.len() < t {
        let nn = n as u64;
        let tr = (rng.below(nn) as usize, rng.below(nn) as usize, rng.below(nn) as usize);
        if !triples.contains(&tr) {
            triples.push(tr);
        }
    }
    for i in (1..triples.len()).rev() {
        let j = rng.below(i as u64 + 1) as usize;
        triples.swap(i, j);
    }
    ThreeDMInstance::new(n, triples).unwrap()
}
