mod report;

use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use drs_core::families::{gen_ak, gen_basic, gen_random_connected, gen_random_tree, gen_tk, BasicKind};
use drs_core::graph::{bfs_all_pairs, blocks_and_cut_vertices, line_graph, parse_graph, write_graph};
use drs_core::reduction::{build_reduction, drs_from_matching, parse_3dm, solve_3dm_exhaustive, ThreeDMInstance};
use drs_core::resolving::{is_d_drs, is_drs_fast, is_resolving_set};
use drs_core::solvers::{
    min_d_drs_exhaustive, min_drs_decomposed, min_drs_exhaustive, SolverConfig, DEFAULT_WORK_LIMIT,
};
use drs_core::tree_line::{
    construct_min_drs_line_tree, lower_bound_line, mu_tree_formula, psi_line_tree_formula, tree_stats,
    upper_bound_drs_line,
};
use drs_core::{Error, Graph, VertexSet};
use report::{Bounds, Report, TreeCounts};

/// Line graphs above this size are not verified in full (n² distance matrix).
const VERIFY_LIMIT: usize = 20_000;

#[derive(Parser)]
#[command(name = "drs", version, about = "Doubly resolving sets of graphs and line graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Emit one JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Solver threads; 0 uses every core, 1 is strictly sequential.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    /// Maximum subset checks for exhaustive search [env: DRS_WORK_LIMIT].
    #[arg(long, global = true)]
    work_limit: Option<u64>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a graph family.
    Gen(GenArgs),
    /// Write the line graph of a graph.
    Linegraph {
        file: PathBuf,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Size, degree and (for trees) leaf statistics.
    Stats { file: PathBuf },
    /// Check whether a set is a doubly resolving set.
    Verify {
        file: PathBuf,
        /// Comma-separated vertex labels, e.g. `0_1,2_3` with --line.
        #[arg(long)]
        set: String,
        /// Verify on L(G) instead of G.
        #[arg(long)]
        line: bool,
        /// Labels the set must contain.
        #[arg(long)]
        d: Option<String>,
    },
    /// Minimum doubly resolving set.
    Solve(SolveArgs),
    /// Tree statistics, formulas and the linear-time construction for L(T).
    Tree(TreeArgs),
    /// Lower and upper bounds on Ψ(L(G)) with the spanning-tree witness.
    Bounds { file: PathBuf },
    /// Blocks and cut vertices.
    Decompose {
        file: PathBuf,
        #[arg(long)]
        line: bool,
    },
    /// Build the 3-dimensional matching gadget.
    Reduce(ReduceArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Path,
    Cycle,
    Star,
    Complete,
    Ak,
    Tk,
    RandomTree,
    RandomConnected,
}

#[derive(Args)]
struct GenArgs {
    family: Family,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Non-tree edges for random-connected.
    #[arg(long, default_value_t = 0)]
    extra: usize,
    #[arg(short)]
    o: Option<PathBuf>,
}

#[derive(Args)]
#[command(group(ArgGroup::new("mode").required(true).args(["exact", "decompose"])))]
struct SolveArgs {
    file: PathBuf,
    #[arg(long)]
    exact: bool,
    #[arg(long)]
    decompose: bool,
    #[arg(long)]
    line: bool,
    /// Solve for Ψ_D with these labels forced into the set (exact only).
    #[arg(long, conflicts_with = "decompose")]
    d: Option<String>,
}

#[derive(Args)]
#[command(group(ArgGroup::new("what").required(true).args(["stats", "construct", "psi"])))]
struct TreeArgs {
    file: PathBuf,
    #[arg(long)]
    stats: bool,
    #[arg(long)]
    construct: bool,
    #[arg(long)]
    psi: bool,
}

#[derive(Args)]
struct ReduceArgs {
    #[arg(long, conflicts_with_all = ["n", "triples"])]
    file: Option<PathBuf>,
    #[arg(long, requires = "triples")]
    n: Option<usize>,
    /// Semicolon-separated triples, e.g. `0,0,0;1,1,1`.
    #[arg(long, requires = "n")]
    triples: Option<String>,
    /// Replication count N.
    #[arg(long = "N", default_value_t = 1)]
    copies: usize,
    /// Solve the instance and print the certificate DRS of the line graph.
    #[arg(long)]
    with_matching: bool,
    #[arg(short)]
    o: Option<PathBuf>,
}

/// Outcome of a verb: the report plus whether the checked property holds.
struct Done {
    report: Report,
    holds: bool,
}

impl From<Report> for Done {
    fn from(report: Report) -> Self {
        Done { report, holds: true }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let json = cli.json;
    match run(cli) {
        Ok(done) => {
            if json {
                println!("{}", done.report.to_json());
            } else if let Some(serde_json::Value::String(graph)) = done.report.extra.get("graph") {
                // plain graph file, so the output can be piped to another verb
                print!("{graph}");
            } else {
                print!("{}", done.report.to_text());
            }
            ExitCode::from(if done.holds { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            let limit = e
                .downcast_ref::<Error>()
                .is_some_and(|e| matches!(e, Error::WorkLimit { .. }));
            ExitCode::from(if limit { 3 } else { 2 })
        }
    }
}

fn config(cli: &Cli) -> anyhow::Result<SolverConfig> {
    let work_limit = match cli.work_limit {
        Some(w) => w,
        None => match std::env::var("DRS_WORK_LIMIT") {
            Ok(v) => v
                .trim()
                .parse()
                .with_context(|| format!("DRS_WORK_LIMIT={v:?} is not an integer"))?,
            Err(_) => DEFAULT_WORK_LIMIT,
        },
    };
    Ok(SolverConfig {
        work_limit,
        threads: cli.threads,
    })
}

fn read_input(path: &Path) -> anyhow::Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
    }
}

fn load(path: &Path) -> anyhow::Result<Graph> {
    let g = parse_graph(&read_input(path)?).with_context(|| format!("in {}", path.display()))?;
    if g.vertex_count() == 1 {
        eprintln!("warning: single-vertex graph; every set is trivially doubly resolving");
    }
    Ok(g)
}

/// `g` itself, or its line graph when `line` is set.
fn target(g: Graph, line: bool) -> anyhow::Result<Graph> {
    if !line {
        return Ok(g);
    }
    let lg = line_graph(&g)?.0;
    if lg.vertex_count() == 1 {
        eprintln!("warning: the line graph has a single vertex");
    }
    Ok(lg)
}

fn emit_graph(g: &Graph, out: Option<&Path>, report: &mut Report) -> anyhow::Result<()> {
    let text = write_graph(g);
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("cannot write {}", p.display()))?,
        None => {
            report.put("graph", text);
        }
    }
    Ok(())
}

/// Looks up `a_b` labels; for line vertices `b_a` is accepted too.
fn resolve_labels(g: &Graph, spec: &str) -> anyhow::Result<VertexSet> {
    let mut ids = Vec::new();
    for tok in spec.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let swapped = tok.split_once('_').map(|(a, b)| format!("{b}_{a}"));
        let v = g
            .vertex_by_label(tok)
            .or_else(|| swapped.and_then(|s| g.vertex_by_label(&s)))
            .ok_or_else(|| anyhow!("unknown vertex label {tok:?}"))?;
        ids.push(v);
    }
    Ok(VertexSet::from_unsorted(ids))
}

fn labels(g: &Graph, s: &VertexSet) -> Vec<String> {
    s.iter().map(|v| g.label(v)).collect()
}

fn tree_counts(t: &Graph) -> anyhow::Result<TreeCounts> {
    let st = tree_stats(t)?;
    Ok(TreeCounts {
        sigma: st.sigma,
        ex: st.ex,
        ex_prime: st.ex_prime,
    })
}

fn run(cli: Cli) -> anyhow::Result<Done> {
    let cfg = config(&cli)?;
    match cli.cmd {
        Cmd::Gen(a) => gen(a),
        Cmd::Linegraph { file, o } => {
            let g = load(&file)?;
            let lg = target(g, true)?;
            let mut r = Report::new("linegraph");
            r.put("vertices", lg.vertex_count()).put("edges", lg.edge_count());
            emit_graph(&lg, o.as_deref(), &mut r)?;
            Ok(r.into())
        }
        Cmd::Stats { file } => {
            let g = load(&file)?;
            let mut r = Report::new("stats");
            r.put("vertices", g.vertex_count())
                .put("edges", g.edge_count())
                .put("max_degree", g.max_degree())
                .put("connected", g.is_connected())
                .put("tree", g.is_tree());
            if g.is_tree() && g.vertex_count() >= 2 {
                r.stats = Some(tree_counts(&g)?);
            }
            Ok(r.into())
        }
        Cmd::Verify { file, set, line, d } => {
            let g = target(load(&file)?, line)?;
            let s = resolve_labels(&g, &set)?;
            let dm = bfs_all_pairs(&g)?;
            let ok = match &d {
                Some(d) => is_d_drs(&dm, &s, &resolve_labels(&g, d)?),
                None => is_drs_fast(&dm, &s),
            };
            let mut r = Report::new("verify");
            r.set = Some(labels(&g, &s));
            r.verified = Some(ok);
            r.put("resolving", is_resolving_set(&dm, &s));
            Ok(Done { report: r, holds: ok })
        }
        Cmd::Solve(a) => solve(a, &cfg),
        Cmd::Tree(a) => tree(a),
        Cmd::Bounds { file } => {
            let g = load(&file)?;
            let lower = lower_bound_line(&g)?;
            let witness = upper_bound_drs_line(&g)?;
            let lg = line_graph(&g)?.0;
            let mut r = Report::new("bounds");
            r.set = Some(labels(&lg, &witness));
            r.verified = Some(true);
            r.bounds = Some(Bounds {
                lower,
                upper: g.vertex_count() - 1,
            });
            Ok(r.into())
        }
        Cmd::Decompose { file, line } => {
            let g = target(load(&file)?, line)?;
            let bd = blocks_and_cut_vertices(&g)?;
            let mut r = Report::new("decompose");
            let blocks: Vec<Vec<String>> = bd.blocks.iter().map(|b| labels(&g, b)).collect();
            r.put("blocks", serde_json::to_value(&blocks)?)
                .put("cut_vertices", labels(&g, &bd.cut_vertices));
            if !cli.json {
                let text: Vec<String> = blocks.iter().map(|b| format!("{{{}}}", b.join(","))).collect();
                r.put("blocks", text);
            }
            Ok(r.into())
        }
        Cmd::Reduce(a) => reduce(a, &cfg),
    }
}

fn gen(a: GenArgs) -> anyhow::Result<Done> {
    let need = |v: Option<usize>, name: &str| v.ok_or_else(|| anyhow!("this family needs --{name}"));
    let g = match a.family {
        Family::Path => gen_basic(BasicKind::Path, need(a.n, "n")?)?,
        Family::Cycle => gen_basic(BasicKind::Cycle, need(a.n, "n")?)?,
        Family::Star => gen_basic(BasicKind::Star, need(a.n, "n")?)?,
        Family::Complete => gen_basic(BasicKind::Complete, need(a.n, "n")?)?,
        Family::Ak => gen_ak(need(a.k, "k")?)?,
        Family::Tk => gen_tk(need(a.k, "k")?)?,
        Family::RandomTree => gen_random_tree(need(a.n, "n")?, a.seed)?,
        Family::RandomConnected => gen_random_connected(need(a.n, "n")?, a.extra, a.seed)?,
    };
    let mut r = Report::new("gen");
    r.put("vertices", g.vertex_count()).put("edges", g.edge_count());
    emit_graph(&g, a.o.as_deref(), &mut r)?;
    Ok(r.into())
}

fn solve(a: SolveArgs, cfg: &SolverConfig) -> anyhow::Result<Done> {
    let host = load(&a.file)?;
    let hint = if a.line { Some(lower_bound_line(&host)?) } else { None };
    let g = target(host, a.line)?;
    let dm = bfs_all_pairs(&g)?;
    let mut r = Report::new("solve");
    let res = if a.decompose {
        min_drs_decomposed(&g, cfg)?
    } else if let Some(d) = &a.d {
        let dset = resolve_labels(&g, d)?;
        let res = min_d_drs_exhaustive(&dm, &dset, cfg)?;
        if !is_d_drs(&dm, &res.witness, &dset) {
            bail!(Error::Verification("solver witness is not a D-DRS".into()));
        }
        r.put("d", labels(&g, &dset));
        res
    } else {
        min_drs_exhaustive(&dm, hint, cfg)?
    };
    if !is_drs_fast(&dm, &res.witness) {
        bail!(Error::Verification("solver witness is not a DRS".into()));
    }
    r.psi = Some(res.psi);
    r.set = Some(labels(&g, &res.witness));
    r.verified = Some(true);
    r.put("method", res.method.as_str())
        .put("elapsed_ms", (res.elapsed.as_secs_f64() * 1e6).round() / 1e3);
    Ok(r.into())
}

fn tree(a: TreeArgs) -> anyhow::Result<Done> {
    let t = load(&a.file)?;
    let st = tree_stats(&t)?;
    let mut r = Report::new("tree");
    r.stats = Some(tree_counts(&t)?);
    if a.stats {
        r.put("vertices", st.n)
            .put("leaves", labels(&t, &st.leaves))
            .put("exterior_majors", labels(&t, &st.exterior_majors))
            .put("strong_exterior_majors", labels(&t, &st.strong_exterior_majors));
    } else if a.psi {
        r.psi = Some(psi_line_tree_formula(&st)?);
        r.put("mu", mu_tree_formula(&st)).put("psi_tree", st.sigma);
    } else {
        let s = construct_min_drs_line_tree(&t)?;
        r.psi = Some(s.len());
        if t.edge_count() <= VERIFY_LIMIT {
            let lg = line_graph(&t)?.0;
            if !is_drs_fast(&bfs_all_pairs(&lg)?, &s) {
                bail!(Error::Verification("constructed set is not a DRS".into()));
            }
            r.set = Some(labels(&lg, &s));
            r.verified = Some(true);
        } else {
            eprintln!(
                "note: line graph has more than {VERIFY_LIMIT} vertices; the set is withheld because it was not verified"
            );
            r.verified = Some(false);
        }
    }
    Ok(r.into())
}

fn parse_triples(n: usize, spec: &str) -> anyhow::Result<ThreeDMInstance> {
    let mut triples = Vec::new();
    for tok in spec.split(';').map(str::trim).filter(|t| !t.is_empty()) {
        let v: Vec<usize> = tok
            .split(',')
            .map(|x| x.trim().parse::<usize>())
            .collect::<Result<_, _>>()
            .with_context(|| format!("malformed triple {tok:?}"))?;
        let [a, b, c] = v[..] else {
            bail!("triple {tok:?} does not have three entries");
        };
        triples.push((a, b, c));
    }
    Ok(ThreeDMInstance::new(n, triples)?)
}

fn reduce(a: ReduceArgs, cfg: &SolverConfig) -> anyhow::Result<Done> {
    let inst = match (&a.file, a.n, &a.triples) {
        (Some(f), _, _) => parse_3dm(&read_input(f)?).with_context(|| format!("in {}", f.display()))?,
        (None, Some(n), Some(t)) => parse_triples(n, t)?,
        _ => bail!("give either --file or both --n and --triples"),
    };
    let rg = build_reduction(&inst, a.copies)?;
    let mut r = Report::new("reduce");
    r.put("vertices", rg.graph.vertex_count())
        .put("edges", rg.graph.edge_count())
        .put("tau", rg.tau)
        .put("lambda", rg.lambda)
        .put("k", rg.k);
    let mut holds = true;
    if a.with_matching {
        match solve_3dm_exhaustive(&inst, cfg.work_limit)? {
            Some(m) => {
                let cert = drs_from_matching(&rg, &m)?;
                let lg = line_graph(&rg.graph)?.0;
                let ok = is_drs_fast(&bfs_all_pairs(&lg)?, &cert);
                r.psi = Some(cert.len());
                r.set = Some(labels(&lg, &cert));
                r.verified = Some(ok);
                r.put("matching", m);
                holds = ok;
            }
            None => {
                r.put("matching", serde_json::Value::Null);
                holds = false;
            }
        }
    }
    if let Some(o) = &a.o {
        emit_graph(&rg.graph, Some(o), &mut r)?;
    }
    Ok(Done { report: r, holds })
}
