//! Graph families: paths, cycles, stars, cliques, the lower-bound family
//! A_k, the upper-bound family T_k, and seeded random trees and connected
//! graphs.

use crate::error::{invalid, Result};
use crate::graph::Graph;
use crate::tree_line::ceil_log2;

/// splitmix64, with rejection sampling for bounded draws.
///
/// Fixed so that generated corpora are reproducible from the seed alone.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform draw from `0..bound`; draws at or above the largest multiple
    /// of `bound` are rejected.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0);
        let zone = u64::MAX - u64::MAX % bound;
        loop {
            let x = self.next_u64();
            if x < zone {
                return x % bound;
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasicKind {
    Path,
    Cycle,
    Star,
    Complete,
}

/// A family name plus its integer parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilySpec {
    Basic(BasicKind, usize),
    Ak(usize),
    Tk(usize),
    RandomTree { n: usize, seed: u64 },
    RandomConnected { n: usize, extra: usize, seed: u64 },
}

impl FamilySpec {
    pub fn generate(self) -> Result<Graph> {
        match self {
            FamilySpec::Basic(kind, n) => gen_basic(kind, n),
            FamilySpec::Ak(k) => gen_ak(k),
            FamilySpec::Tk(k) => gen_tk(k),
            FamilySpec::RandomTree { n, seed } => gen_random_tree(n, seed),
            FamilySpec::RandomConnected { n, extra, seed } => gen_random_connected(n, extra, seed),
        }
    }
}

/// Path, cycle, star (center 0, `n` vertices in total) or clique on `n`
/// vertices.
pub fn gen_basic(kind: BasicKind, n: usize) -> Result<Graph> {
    let min = if kind == BasicKind::Cycle { 3 } else { 2 };
    if n < min {
        return Err(invalid(format!("{kind:?} needs at least {min} vertices")));
    }
    let edges: Vec<(usize, usize)> = match kind {
        BasicKind::Path => (1..n).map(|v| (v - 1, v)).collect(),
        BasicKind::Cycle => (0..n).map(|v| (v, (v + 1) % n)).collect(),
        BasicKind::Star => (1..n).map(|v| (0, v)).collect(),
        BasicKind::Complete => (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect(),
    };
    Graph::new(n, edges)
}

/// Vertex ids inside A_k.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AkLayout {
    pub k: usize,
    pub m: usize,
}

impl AkLayout {
    pub fn new(k: usize) -> Result<Self> {
        if k < 2 {
            return Err(invalid("A_k needs k >= 2"));
        }
        Ok(AkLayout { k, m: ceil_log2(1 + k) })
    }

    pub fn u(&self) -> usize {
        0
    }

    /// `v_j` for `1 <= j <= k`.
    pub fn v(&self, j: usize) -> usize {
        debug_assert!((1..=self.k).contains(&j));
        j
    }

    pub fn w(&self, i: usize) -> usize {
        self.k + 1 + i
    }

    pub fn w_prime(&self, i: usize) -> usize {
        self.k + 1 + self.m + i
    }

    pub fn vertex_count(&self) -> usize {
        1 + self.k + 2 * self.m
    }

    /// `v_j w_i` is an edge iff bit `i` of `j` is 0.
    pub fn vw_adjacent(&self, j: usize, i: usize) -> bool {
        (j >> i) & 1 == 0
    }

    /// Root vertices of an edge descriptor.
    pub fn endpoints(&self, e: AkEdge) -> (usize, usize) {
        match e {
            AkEdge::WW(i) => (self.w(i), self.w_prime(i)),
            AkEdge::WV(i, j) => (self.v(j), self.w(i)),
            AkEdge::UV(j) => (self.u(), self.v(j)),
        }
    }

    /// Whether some `v_j` is adjacent to both `w_i` and `w_i2`.
    fn common_v(&self, i: usize, i2: usize) -> bool {
        (1..=self.k).any(|j| self.vw_adjacent(j, i) && self.vw_adjacent(j, i2))
    }
}

/// A_k: `u` joined to `v_1..v_k`, `v_j w_i` when bit `i` of `j` is 0, and
/// pendant edges `w_i w'_i`, with `m = ⌈log2(1+k)⌉`.
pub fn gen_ak(k: usize) -> Result<Graph> {
    let lay = AkLayout::new(k)?;
    let mut edges = Vec::new();
    for j in 1..=k {
        edges.push((lay.u(), lay.v(j)));
        for i in 0..lay.m {
            if lay.vw_adjacent(j, i) {
                edges.push((lay.v(j), lay.w(i)));
            }
        }
    }
    for i in 0..lay.m {
        edges.push((lay.w(i), lay.w_prime(i)));
    }
    let mut labels = vec![(lay.u(), "u".to_string())];
    labels.extend((1..=k).map(|j| (lay.v(j), format!("v{j}"))));
    labels.extend((0..lay.m).map(|i| (lay.w(i), format!("w{i}"))));
    labels.extend((0..lay.m).map(|i| (lay.w_prime(i), format!("w'{i}"))));
    Graph::new(lay.vertex_count(), edges)?.with_labels(labels)
}

/// T_k: k triangles `u x_i y_i` glued at `u`. Ids: `u = 0`, `x_i = 2i-1`,
/// `y_i = 2i`.
pub fn gen_tk(k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(invalid("T_k needs k >= 1"));
    }
    let edges = (1..=k).flat_map(|i| [(0, 2 * i - 1), (0, 2 * i), (2 * i - 1, 2 * i)]);
    let labels = std::iter::once((0, "u".to_string()))
        .chain((1..=k).flat_map(|i| [(2 * i - 1, format!("x{i}")), (2 * i, format!("y{i}"))]));
    Graph::new(2 * k + 1, edges)?.with_labels(labels)
}

/// Linear-time Prüfer decoding; equivalent to repeatedly removing the
/// smallest leaf.
fn prufer_decode(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    debug_assert_eq!(seq.len() + 2, n);
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut ptr = degree.iter().position(|&d| d == 1).unwrap();
    let mut leaf = ptr;
    for &x in seq {
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 && x < ptr {
            leaf = x;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    edges
}

fn random_tree_edges(n: usize, rng: &mut SplitMix64) -> Vec<(usize, usize)> {
    if n == 2 {
        return vec![(0, 1)];
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.below(n as u64) as usize).collect();
    prufer_decode(n, &seq)
}

/// Uniform labeled tree from a seeded Prüfer sequence.
pub fn gen_random_tree(n: usize, seed: u64) -> Result<Graph> {
    if n < 2 {
        return Err(invalid("random tree needs n >= 2"));
    }
    let mut rng = SplitMix64::new(seed);
    Graph::new(n, random_tree_edges(n, &mut rng))
}

/// Random tree plus `extra` distinct non-tree edges, drawn without
/// replacement from the same generator.
pub fn gen_random_connected(n: usize, extra: usize, seed: u64) -> Result<Graph> {
    if n < 2 {
        return Err(invalid("random connected graph needs n >= 2"));
    }
    let max_extra = n * (n - 1) / 2 - (n - 1);
    if extra > max_extra {
        return Err(invalid(format!("extra must be at most {max_extra} for n = {n}")));
    }
    let mut rng = SplitMix64::new(seed);
    let mut edges = random_tree_edges(n, &mut rng);
    let tree = Graph::new(n, edges.iter().copied())?;
    let mut pool: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !tree.has_edge(u, v))
        .collect();
    for i in 0..extra {
        let j = i + rng.below((pool.len() - i) as u64) as usize;
        pool.swap(i, j);
        edges.push(pool[i]);
    }
    Graph::new(n, edges)
}

/// Edge of A_k, by role.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AkEdge {
    /// `w_i w'_i`
    WW(usize),
    /// `w_i v_j`
    WV(usize, usize),
    /// `u v_j`
    UV(usize),
}

/// Closed-form distance in L(A_k) from `w_i w'_i` to another edge.
pub fn ak_predicted_distance(k: usize, from: AkEdge, to: AkEdge) -> Result<u32> {
    let lay = AkLayout::new(k)?;
    let AkEdge::WW(i) = from else {
        return Err(invalid("left descriptor must be of the form w_i w'_i"));
    };
    let check_i = |i: usize| {
        if i < lay.m {
            Ok(())
        } else {
            Err(invalid(format!("w index {i} out of range 0..{}", lay.m)))
        }
    };
    let check_j = |j: usize| {
        if (1..=k).contains(&j) {
            Ok(())
        } else {
            Err(invalid(format!("v index {j} out of range 1..={k}")))
        }
    };
    check_i(i)?;
    Ok(match to {
        AkEdge::WW(i2) => {
            check_i(i2)?;
            if i == i2 {
                0
            } else if lay.common_v(i, i2) {
                3
            } else {
                5
            }
        }
        AkEdge::WV(i2, j) => {
            check_i(i2)?;
            check_j(j)?;
            if !lay.vw_adjacent(j, i2) {
                return Err(invalid(format!("w{i2} v{j} is not an edge of A_{k}")));
            }
            if i == i2 {
                1
            } else if lay.vw_adjacent(j, i) {
                2
            } else if lay.common_v(i, i2) {
                3
            } else {
                4
            }
        }
        AkEdge::UV(j) => {
            check_j(j)?;
            if lay.vw_adjacent(j, i) {
                2
            } else {
                3
            }
        }
    })
}
