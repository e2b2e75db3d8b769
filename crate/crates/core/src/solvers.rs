//! Exact minimum-DRS solvers.
//!
//! The exhaustive searches enumerate candidate sets cardinality by
//! cardinality and lexicographically within a cardinality, so the returned
//! witness is the lexicographically least minimum set. Large cardinality
//! levels are split by their first element and searched in parallel; the
//! first hit in lexicographic order wins regardless of scheduling.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::Duration;

use rayon::prelude::*;

use crate::error::{invalid, Error, Result};
use crate::graph::{bfs_all_pairs, blocks_and_cut_vertices, DistanceMatrix, Graph, VertexSet};
use crate::resolving::{is_d_drs, is_drs_fast, is_drs_slice, is_resolving_slice};

/// Default budget of subset checks per solve.
pub const DEFAULT_WORK_LIMIT: u64 = 1_000_000_000;

/// Levels with fewer candidate subsets than this run sequentially.
const PARALLEL_THRESHOLD: u128 = 20_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Exhaustive,
    Decomposition,
    TreeFormula,
    CliqueFormula,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Exhaustive => "exhaustive",
            Method::Decomposition => "decomposition",
            Method::TreeFormula => "tree_formula",
            Method::CliqueFormula => "clique_formula",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    /// Ψ, Ψ_D or μ depending on the solver.
    pub psi: usize,
    pub witness: VertexSet,
    pub method: Method,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    /// Maximum number of subset checks before giving up.
    pub work_limit: u64,
    /// Worker threads; 0 uses the global pool, 1 is strictly sequential.
    pub threads: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            work_limit: DEFAULT_WORK_LIMIT,
            threads: 0,
        }
    }
}

impl SolverConfig {
    pub fn sequential() -> Self {
        SolverConfig {
            threads: 1,
            ..Self::default()
        }
    }
}

struct Stopwatch {
    #[cfg(not(target_arch = "wasm32"))]
    start: std::time::Instant,
}

impl Stopwatch {
    fn start() -> Self {
        Stopwatch {
            #[cfg(not(target_arch = "wasm32"))]
            start: std::time::Instant::now(),
        }
    }

    fn elapsed(&self) -> Duration {
        #[cfg(not(target_arch = "wasm32"))]
        return self.start.elapsed();
        #[cfg(target_arch = "wasm32")]
        Duration::ZERO
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Shared state of one search: the candidate pool, the forced members and
/// the work budget.
struct Search<'a, F> {
    pool: &'a [usize],
    required: &'a [usize],
    check: F,
    limit: u64,
    used: AtomicU64,
    exhausted: AtomicBool,
}

impl<'a, F> Search<'a, F>
where
    F: Fn(&[usize], &mut Vec<u64>) -> bool + Sync,
{
    fn new(pool: &'a [usize], required: &'a [usize], limit: u64, check: F) -> Self {
        Search {
            pool,
            required,
            check,
            limit,
            used: AtomicU64::new(0),
            exhausted: AtomicBool::new(false),
        }
    }

    /// Sets `required ∪ pool[idx]` into `buf`, sorted.
    fn materialize(&self, idx: &[usize], buf: &mut Vec<usize>) {
        buf.clear();
        buf.extend_from_slice(self.required);
        buf.extend(idx.iter().map(|&i| self.pool[i]));
        if !self.required.is_empty() {
            buf.sort_unstable();
        }
    }

    fn charge(&self) -> bool {
        if self.used.fetch_add(1, Ordering::Relaxed) >= self.limit {
            self.exhausted.store(true, Ordering::Relaxed);
            return false;
        }
        true
    }

    /// Lexicographically first size-`t` index combination whose first index
    /// is `first` and that passes the check.
    fn scan_branch(&self, first: usize, t: usize) -> Option<Vec<usize>> {
        let m = self.pool.len();
        let mut idx: Vec<usize> = (0..t).map(|i| first + i).collect();
        let mut buf = Vec::with_capacity(t + self.required.len());
        let mut keys = Vec::new();
        loop {
            if self.exhausted.load(Ordering::Relaxed) || !self.charge() {
                return None;
            }
            self.materialize(&idx, &mut buf);
            if (self.check)(&buf, &mut keys) {
                return Some(buf);
            }
            // advance positions 1..t, keeping idx[0] == first
            let mut i = t;
            loop {
                if i <= 1 {
                    return None;
                }
                i -= 1;
                if idx[i] < m - t + i {
                    break;
                }
            }
            idx[i] += 1;
            for j in i + 1..t {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }

    fn scan_level(&self, t: usize, parallel: bool) -> Option<Vec<usize>> {
        let m = self.pool.len();
        if t == 0 {
            let mut buf = Vec::new();
            self.materialize(&[], &mut buf);
            if !self.charge() {
                return None;
            }
            return (self.check)(&buf, &mut Vec::new()).then_some(buf);
        }
        if t > m {
            return None;
        }
        let firsts = 0..=(m - t);
        if parallel && binomial(m, t) >= PARALLEL_THRESHOLD {
            firsts.into_par_iter().find_map_first(|f| self.scan_branch(f, t))
        } else {
            firsts.into_iter().find_map(|f| self.scan_branch(f, t))
        }
    }

    /// Runs levels `from..=to` and returns the first level with a hit.
    fn run(&self, from: usize, to: usize, parallel: bool) -> Result<Option<(usize, Vec<usize>)>> {
        for t in from..=to {
            let hit = self.scan_level(t, parallel);
            if self.exhausted.load(Ordering::Relaxed) {
                return Err(Error::WorkLimit {
                    limit: self.limit,
                    cardinality: t + self.required.len(),
                });
            }
            if let Some(set) = hit {
                return Ok(Some((t, set)));
            }
        }
        Ok(None)
    }
}

fn with_pool<T: Send>(cfg: &SolverConfig, job: impl FnOnce(bool) -> T + Send) -> T {
    match cfg.threads {
        1 => job(false),
        0 => job(true),
        k => match rayon::ThreadPoolBuilder::new().num_threads(k).build() {
            Ok(pool) => pool.install(|| job(true)),
            Err(_) => job(false),
        },
    }
}

/// Ψ(G) by exhaustive search, starting at `max(2, lower_hint)`.
///
/// `lower_hint` must be a proven lower bound on Ψ, e.g. the line-graph
/// bound `⌈log2(1 + Δ)⌉` when `dm` belongs to a line graph.
pub fn min_drs_exhaustive(dm: &DistanceMatrix, lower_hint: Option<usize>, cfg: &SolverConfig) -> Result<SolveResult> {
    let n = dm.len();
    if n < 2 {
        return Err(invalid("minimum DRS needs at least two vertices"));
    }
    let clock = Stopwatch::start();
    let pool: Vec<usize> = (0..n).collect();
    let start = lower_hint.unwrap_or(2).clamp(2, n);
    let search = Search::new(&pool, &[], cfg.work_limit, |s: &[usize], keys: &mut Vec<u64>| {
        is_drs_slice(dm, s, keys)
    });
    let (psi, set) = with_pool(cfg, |par| search.run(start, n, par))?
        .ok_or_else(|| Error::Verification("no DRS found; lower hint exceeds Ψ".into()))?;
    let witness = VertexSet::from_sorted(set);
    debug_assert!(is_drs_fast(dm, &witness));
    Ok(SolveResult {
        psi,
        witness,
        method: Method::Exhaustive,
        elapsed: clock.elapsed(),
    })
}

/// Ψ_D(G) = min |S| - |D| over DRSs S ⊇ D, by exhaustive search over the
/// vertices outside `d`.
pub fn min_d_drs_exhaustive(dm: &DistanceMatrix, d: &VertexSet, cfg: &SolverConfig) -> Result<SolveResult> {
    let n = dm.len();
    if n < 2 {
        return Err(invalid("minimum D-DRS needs at least two vertices"));
    }
    if d.bound() > n {
        return Err(invalid(format!("D contains a vertex outside 0..{n}")));
    }
    let clock = Stopwatch::start();
    let pool: Vec<usize> = (0..n).filter(|&v| !d.contains(v)).collect();
    let search = Search::new(
        &pool,
        d.as_slice(),
        cfg.work_limit,
        |s: &[usize], keys: &mut Vec<u64>| is_drs_slice(dm, s, keys),
    );
    let (psi, set) = with_pool(cfg, |par| search.run(0, pool.len(), par))?.expect("V(G) is always a DRS");
    let witness = VertexSet::from_sorted(set);
    debug_assert!(is_d_drs(dm, &witness, d));
    Ok(SolveResult {
        psi,
        witness,
        method: Method::Exhaustive,
        elapsed: clock.elapsed(),
    })
}

/// Closed form for Ψ_D(K_n) with |D| = d.
pub fn psi_d_clique(n: usize, d: usize) -> Result<usize> {
    if n < 2 || d > n {
        return Err(invalid(format!(
            "psi_d_clique needs n >= 2 and 0 <= d <= n, got n={n}, d={d}"
        )));
    }
    Ok(if n == 2 || d == n { n - d } else { n - 1 - d })
}

/// Minimum D-DRS of a clique block: D plus the lowest-id remaining vertices.
fn clique_witness(vertices: &VertexSet, d: &VertexSet) -> Result<VertexSet> {
    let psi = psi_d_clique(vertices.len(), d.len())?;
    let extra = vertices.difference(d).iter().take(psi).collect::<VertexSet>();
    Ok(d.union(&extra))
}

/// Ψ(G) through the block decomposition: the sum over blocks of
/// Ψ_{R_i}(G_i), where R_i are the cut vertices inside block i.
///
/// Clique blocks use [`psi_d_clique`]; other blocks are solved exhaustively
/// on their own distance matrix. The assembled witness is re-verified on
/// the whole graph before it is returned.
pub fn min_drs_decomposed(g: &Graph, cfg: &SolverConfig) -> Result<SolveResult> {
    if g.vertex_count() < 2 {
        return Err(invalid("minimum DRS needs at least two vertices"));
    }
    let clock = Stopwatch::start();
    let decomposition = blocks_and_cut_vertices(g)?;
    let dm = bfs_all_pairs(g)?;
    if decomposition.blocks.len() == 1 {
        let mut res = if g.is_complete() {
            let all: VertexSet = (0..g.vertex_count()).collect();
            let witness = clique_witness(&all, &VertexSet::new())?;
            SolveResult {
                psi: witness.len(),
                witness,
                method: Method::CliqueFormula,
                elapsed: Duration::ZERO,
            }
        } else {
            min_drs_exhaustive(&dm, None, cfg)?
        };
        if !is_drs_fast(&dm, &res.witness) {
            return Err(Error::Verification("single-block witness is not a DRS".into()));
        }
        res.elapsed = clock.elapsed();
        return Ok(res);
    }

    let mut psi = 0;
    let mut members = Vec::new();
    for (i, block) in decomposition.blocks.iter().enumerate() {
        let cuts = decomposition.cut_vertices_in(i);
        let sub = g.induced_subgraph(block);
        let local = if sub.is_complete() {
            let ids: VertexSet = (0..block.len()).collect();
            let local_cuts: VertexSet = cuts
                .iter()
                .map(|v| block.as_slice().binary_search(&v).unwrap())
                .collect();
            let w = clique_witness(&ids, &local_cuts)?;
            (w.len() - local_cuts.len(), w)
        } else {
            let local_cuts: VertexSet = cuts
                .iter()
                .map(|v| block.as_slice().binary_search(&v).unwrap())
                .collect();
            let block_dm = bfs_all_pairs(&sub)?;
            let r = min_d_drs_exhaustive(&block_dm, &local_cuts, cfg)?;
            (r.psi, r.witness)
        };
        psi += local.0;
        members.extend(
            local
                .1
                .iter()
                .map(|v| block.as_slice()[v])
                .filter(|&v| !cuts.contains(v)),
        );
    }
    let witness = VertexSet::from_unsorted(members);
    if witness.len() != psi || !is_drs_fast(&dm, &witness) {
        return Err(Error::Verification(format!(
            "assembled block witness of size {} (expected {psi}) is not a DRS of the whole graph",
            witness.len()
        )));
    }
    Ok(SolveResult {
        psi,
        witness,
        method: Method::Decomposition,
        elapsed: clock.elapsed(),
    })
}

/// μ(G): smallest resolving set, same enumeration order from cardinality 1.
pub fn metric_dimension_exhaustive(dm: &DistanceMatrix, cfg: &SolverConfig) -> Result<SolveResult> {
    let n = dm.len();
    if n < 2 {
        return Err(invalid("metric dimension needs at least two vertices"));
    }
    let clock = Stopwatch::start();
    let pool: Vec<usize> = (0..n).collect();
    let search = Search::new(&pool, &[], cfg.work_limit, |s: &[usize], keys: &mut Vec<u64>| {
        is_resolving_slice(dm, s, keys)
    });
    let (mu, set) = with_pool(cfg, |par| search.run(1, n, par))?.expect("V(G) always resolves G");
    Ok(SolveResult {
        psi: mu,
        witness: VertexSet::from_sorted(set),
        method: Method::Exhaustive,
        elapsed: clock.elapsed(),
    })
}
