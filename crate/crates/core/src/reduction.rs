//! The bipartite gadget reducing 3-dimensional matching to minimum DRS on
//! line graphs.
//!
//! From an instance `(A, B, C, S)` with `|A| = |B| = |C| = n`, `N` copies
//! of the elements and triples are made (`τ = N|S|` triples in total) and
//! joined to selector vertices `s_A, s_B, s_C, s_D`, their pendant partners
//! `s'_X`, a pendant `s'_j` per triple, and `λ = ⌈log2 τ⌉` bit vertices
//! `d_i` (with pendants `d'_i`) where `d_i ~ s_j` iff bit `i` of `j` is 1.
//! A perfect matching yields a DRS of the line graph of size
//! `K = n + λ + 4`.

use std::fmt;

use crate::error::{invalid, Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::tree_line::ceil_log2;

/// A 3-dimensional matching instance with 0-based element indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreeDMInstance {
    n: usize,
    triples: Vec<(usize, usize, usize)>,
}

impl ThreeDMInstance {
    pub fn new(n: usize, triples: Vec<(usize, usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(invalid("3DM instance needs n >= 1"));
        }
        if triples.is_empty() {
            return Err(invalid("3DM instance needs at least one triple"));
        }
        for (i, &(a, b, c)) in triples.iter().enumerate() {
            if a >= n || b >= n || c >= n {
                return Err(invalid(format!("triple {i} ({a} {b} {c}) has an index >= n = {n}")));
            }
            if triples[..i].contains(&(a, b, c)) {
                return Err(invalid(format!("duplicate triple ({a} {b} {c})")));
            }
        }
        Ok(ThreeDMInstance { n, triples })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn triples(&self) -> &[(usize, usize, usize)] {
        &self.triples
    }

    /// Whether `chosen` (triple indices) covers every element exactly once.
    pub fn is_perfect_matching(&self, chosen: &[usize]) -> bool {
        if chosen.len() != self.n {
            return false;
        }
        let mut used = vec![[false; 3]; self.n];
        for &t in chosen {
            let Some(&(a, b, c)) = self.triples.get(t) else {
                return false;
            };
            for (dim, x) in [a, b, c].into_iter().enumerate() {
                if std::mem::replace(&mut used[x][dim], true) {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Display for ThreeDMInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "3dm {} {}", self.n, self.triples.len())?;
        for (a, b, c) in &self.triples {
            writeln!(f, "{a} {b} {c}")?;
        }
        Ok(())
    }
}

/// Parses `3dm <n> <t>` followed by `t` lines `<a> <b> <c>`.
pub fn parse_3dm(text: &str) -> Result<ThreeDMInstance> {
    let err = |line: usize, msg: String| Error::Parse { line, msg };
    let mut header = None;
    let mut triples = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        let nums = |toks: &[&str]| -> Result<Vec<usize>> {
            toks.iter()
                .map(|t| {
                    t.parse()
                        .map_err(|_| err(lineno, format!("expected an integer, found {t:?}")))
                })
                .collect()
        };
        match header {
            None => {
                if toks.len() != 3 || toks[0] != "3dm" {
                    return Err(err(lineno, "malformed header, expected `3dm <n> <t>`".into()));
                }
                let v = nums(&toks[1..])?;
                header = Some((v[0], v[1]));
            }
            Some((n, _)) => {
                if toks.len() != 3 {
                    return Err(err(lineno, "malformed triple, expected `<a> <b> <c>`".into()));
                }
                let v = nums(&toks)?;
                if v.iter().any(|&x| x >= n) {
                    return Err(err(lineno, format!("index out of range 0..{n}")));
                }
                let t = (v[0], v[1], v[2]);
                if triples.contains(&t) {
                    return Err(err(lineno, format!("duplicate triple {} {} {}", t.0, t.1, t.2)));
                }
                triples.push(t);
            }
        }
    }
    let (n, t) = header.ok_or_else(|| err(0, "missing header `3dm <n> <t>`".into()))?;
    if triples.len() != t {
        return Err(err(
            0,
            format!("header declares {t} triples but {} were given", triples.len()),
        ));
    }
    ThreeDMInstance::new(n, triples).map_err(|e| err(0, e.to_string()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Dim {
    A,
    B,
    C,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Selector {
    A,
    B,
    C,
    D,
}

const SELECTORS: [Selector; 4] = [Selector::A, Selector::B, Selector::C, Selector::D];

impl Selector {
    fn name(self) -> &'static str {
        match self {
            Selector::A => "A",
            Selector::B => "B",
            Selector::C => "C",
            Selector::D => "D",
        }
    }

    fn of(dim: Dim) -> Selector {
        match dim {
            Dim::A => Selector::A,
            Dim::B => Selector::B,
            Dim::C => Selector::C,
        }
    }
}

/// What a vertex of the gadget stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    /// Element `index` of A, B or C in copy `copy`.
    Element {
        dim: Dim,
        index: usize,
        copy: usize,
    },
    /// Triple `s_j`, global index over all copies.
    Triple(usize),
    TriplePrime(usize),
    Sel(Selector),
    SelPrime(Selector),
    /// Bit vertex `d_i` (J side).
    Bit(usize),
    /// Its pendant `d'_i` (I side).
    BitPrime(usize),
}

/// The gadget graph with its roles and parameters.
#[derive(Debug, Clone)]
pub struct ReductionGraph {
    pub graph: Graph,
    pub roles: Vec<Role>,
    pub instance: ThreeDMInstance,
    /// Replication count N.
    pub copies: usize,
    /// τ = N · |triples|.
    pub tau: usize,
    /// λ = ⌈log2 τ⌉.
    pub lambda: usize,
    /// K = n + λ + 4.
    pub k: usize,
    /// n' = n N; part of the construction's notation, not used by it.
    pub n_prime: usize,
    /// Vertices `0..i_side` form I; the rest form J.
    pub i_side: usize,
}

impl ReductionGraph {
    fn j0(&self) -> usize {
        self.i_side
    }

    pub fn triple(&self, j: usize) -> usize {
        j
    }

    pub fn selector(&self, s: Selector) -> usize {
        self.tau + s as usize
    }

    pub fn bit_prime(&self, i: usize) -> usize {
        self.tau + 4 + i
    }

    pub fn element(&self, dim: Dim, copy: usize, index: usize) -> usize {
        let n = self.instance.n;
        self.j0() + dim as usize * n * self.copies + copy * n + index
    }

    pub fn triple_prime(&self, j: usize) -> usize {
        self.j0() + 3 * self.instance.n * self.copies + j
    }

    pub fn selector_prime(&self, s: Selector) -> usize {
        self.triple_prime(self.tau) + s as usize
    }

    pub fn bit(&self, i: usize) -> usize {
        self.selector_prime(Selector::A) + 4 + i
    }

    fn line_vertex(&self, a: usize, b: usize) -> usize {
        self.graph.edge_id(a, b).expect("gadget edge exists")
    }

    /// Line vertex `s_D s'_D`.
    pub fn sd_pair(&self) -> usize {
        self.line_vertex(self.selector(Selector::D), self.selector_prime(Selector::D))
    }

    /// `{s_A s'_A, s_B s'_B, s_C s'_C} ∪ {d_i d'_i}` as line vertices.
    pub fn r_prime(&self) -> VertexSet {
        let sels = [Selector::A, Selector::B, Selector::C]
            .into_iter()
            .map(|s| self.line_vertex(self.selector(s), self.selector_prime(s)));
        let bits = (0..self.lambda).map(|i| self.line_vertex(self.bit(i), self.bit_prime(i)));
        sels.chain(bits).collect()
    }
}

/// Builds the gadget with `copies` replicas of the instance.
pub fn build_reduction(inst: &ThreeDMInstance, copies: usize) -> Result<ReductionGraph> {
    if copies < 1 {
        return Err(invalid("replication count N must be at least 1"));
    }
    let n = inst.n;
    let t = inst.triples.len();
    let tau = copies * t;
    let lambda = ceil_log2(tau);
    let i_side = tau + 4 + lambda;
    let j_side = 3 * n * copies + tau + 4 + lambda;

    let mut rg = ReductionGraph {
        graph: Graph::new(1, [])?,
        roles: Vec::with_capacity(i_side + j_side),
        instance: inst.clone(),
        copies,
        tau,
        lambda,
        k: k_threshold(inst, copies),
        n_prime: n * copies,
        i_side,
    };

    let roles = &mut rg.roles;
    roles.extend((0..tau).map(Role::Triple));
    roles.extend(SELECTORS.map(Role::Sel));
    roles.extend((0..lambda).map(Role::BitPrime));
    for dim in [Dim::A, Dim::B, Dim::C] {
        for copy in 0..copies {
            roles.extend((0..n).map(|index| Role::Element { dim, index, copy }));
        }
    }
    roles.extend((0..tau).map(Role::TriplePrime));
    roles.extend(SELECTORS.map(Role::SelPrime));
    roles.extend((0..lambda).map(Role::Bit));
    debug_assert_eq!(roles.len(), i_side + j_side);

    let mut edges = Vec::new();
    let sd = rg.selector(Selector::D);
    for dim in [Dim::A, Dim::B, Dim::C] {
        for copy in 0..copies {
            for index in 0..n {
                let e = rg.element(dim, copy, index);
                edges.push((e, rg.selector(Selector::of(dim)))); // (1)-(3)
                edges.push((e, sd)); // (4)
            }
        }
    }
    for copy in 0..copies {
        for (local, &(a, b, c)) in inst.triples.iter().enumerate() {
            let s = rg.triple(copy * t + local);
            edges.push((rg.element(Dim::A, copy, a), s)); // (5)
            edges.push((rg.element(Dim::B, copy, b), s));
            edges.push((rg.element(Dim::C, copy, c), s));
        }
    }
    for i in 0..lambda {
        let d = rg.bit(i);
        for j in (0..tau).filter(|j| (j >> i) & 1 == 1) {
            edges.push((d, rg.triple(j))); // (6)
        }
        edges.push((d, sd)); // (7)
        edges.push((d, rg.bit_prime(i))); // (13)
    }
    for j in 0..tau {
        edges.push((rg.triple_prime(j), rg.triple(j))); // (8)
    }
    for s in SELECTORS {
        edges.push((rg.selector_prime(s), rg.selector(s))); // (9)-(12)
    }

    let labels: Vec<(usize, String)> = rg
        .roles
        .iter()
        .enumerate()
        .map(|(v, role)| {
            let label = match *role {
                Role::Element { dim, index, copy } => {
                    let p = match dim {
                        Dim::A => 'a',
                        Dim::B => 'b',
                        Dim::C => 'c',
                    };
                    format!("{p}{index}.{copy}")
                }
                Role::Triple(j) => format!("s{j}"),
                Role::TriplePrime(j) => format!("s'{j}"),
                Role::Sel(s) => format!("s{}", s.name()),
                Role::SelPrime(s) => format!("s'{}", s.name()),
                Role::Bit(i) => format!("d{i}"),
                Role::BitPrime(i) => format!("d'{i}"),
            };
            (v, label)
        })
        .collect();
    rg.graph = Graph::new(i_side + j_side, edges)?.with_labels(labels)?;
    Ok(rg)
}

/// K = n + ⌈log2(N · |triples|)⌉ + 4.
pub fn k_threshold(inst: &ThreeDMInstance, copies: usize) -> usize {
    inst.n + ceil_log2(copies * inst.triples.len()) + 4
}

/// The certificate DRS of L(G) built from a perfect matching, using the
/// matching's triples in copy 0.
pub fn drs_from_matching(rg: &ReductionGraph, matching: &[usize]) -> Result<VertexSet> {
    if !rg.instance.is_perfect_matching(matching) {
        return Err(invalid("triples do not form a perfect 3-dimensional matching"));
    }
    let triples = matching
        .iter()
        .map(|&j| rg.line_vertex(rg.triple(j), rg.triple_prime(j)));
    let r: VertexSet = triples
        .chain(std::iter::once(rg.sd_pair()))
        .collect::<VertexSet>()
        .union(&rg.r_prime());
    debug_assert_eq!(r.len(), rg.k);
    Ok(r)
}

/// Distance in L(G) from edge `{u, v}` to `s_D s'_D`, read off the roles.
pub fn edge_distance_class(rg: &ReductionGraph, u: usize, v: usize) -> Result<u32> {
    if !rg.graph.has_edge(u, v) {
        return Err(invalid(format!("{u} {v} is not an edge of the gadget")));
    }
    use Role::*;
    let (a, b) = (rg.roles[u], rg.roles[v]);
    let class = |x: Role, y: Role| -> Option<u32> {
        match (x, y) {
            (Sel(Selector::D), SelPrime(Selector::D)) => Some(0),
            (Sel(Selector::D), Element { .. } | Bit(_)) => Some(1),
            (Sel(s), Element { dim, .. }) if s == Selector::of(dim) => Some(2),
            (Element { .. }, Triple(_)) | (Bit(_), BitPrime(_)) | (Bit(_), Triple(_)) => Some(2),
            (Sel(s), SelPrime(t)) if s == t => Some(3),
            (Triple(i), TriplePrime(j)) if i == j => Some(3),
            _ => None,
        }
    };
    class(a, b)
        .or_else(|| class(b, a))
        .ok_or_else(|| Error::Verification(format!("edge {u} {v} matches no construction case")))
}

/// Lexicographically first perfect matching, by exhaustive search over
/// `n`-subsets of the triples.
pub fn solve_3dm_exhaustive(inst: &ThreeDMInstance, work_limit: u64) -> Result<Option<Vec<usize>>> {
    let (n, t) = (inst.n, inst.triples.len());
    if n > t {
        return Ok(None);
    }
    let mut idx: Vec<usize> = (0..n).collect();
    let mut checks = 0u64;
    loop {
        checks += 1;
        if checks > work_limit {
            return Err(Error::WorkLimit {
                limit: work_limit,
                cardinality: n,
            });
        }
        if inst.is_perfect_matching(&idx) {
            return Ok(Some(idx));
        }
        let Some(i) = (0..n).rev().find(|&i| idx[i] < t - n + i) else {
            return Ok(None);
        };
        idx[i] += 1;
        for j in i + 1..n {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
