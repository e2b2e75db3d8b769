//! Browser bindings. Each exported function takes plain arguments and
//! returns a JSON string; errors come back as `{"error": "..."}`.
//!
//! Line vertices are edges of the drawn graph, so every set is reported as
//! edge indices into `edges` for highlighting.

use drs_core::families::{gen_ak, gen_basic, gen_random_connected, gen_random_tree, gen_tk, BasicKind};
use drs_core::graph::{bfs_all_pairs, line_graph, parse_graph};
use drs_core::resolving::{f_vector, is_drs_fast};
use drs_core::solvers::{min_drs_exhaustive, SolverConfig};
use drs_core::tree_line::{construct_min_drs_line_tree, lower_bound_line, tree_stats, upper_bound_drs_line};
use drs_core::{Graph, VertexSet};
use serde::Serialize;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Exact search is attempted only on line graphs up to this many vertices.
const EXACT_MAX_LINE_VERTICES: usize = 24;
const EXACT_WORK_LIMIT: u64 = 5_000_000;
const MAX_TREE: usize = 2000;

#[derive(Serialize)]
struct Drawing {
    n: usize,
    labels: Vec<String>,
    edges: Vec<(usize, usize)>,
}

fn drawing(g: &Graph) -> Drawing {
    Drawing {
        n: g.vertex_count(),
        labels: (0..g.vertex_count()).map(|v| g.label(v)).collect(),
        edges: g.edges().to_vec(),
    }
}

fn family(name: &str, param: usize, seed: u64) -> drs_core::Result<Graph> {
    match name {
        "ak" => gen_ak(param),
        "tk" => gen_tk(param),
        "path" => gen_basic(BasicKind::Path, param),
        "cycle" => gen_basic(BasicKind::Cycle, param),
        "star" => gen_basic(BasicKind::Star, param),
        "complete" => gen_basic(BasicKind::Complete, param),
        "random-tree" => gen_random_tree(param, seed),
        "random-connected" => gen_random_connected(param, param / 2, seed),
        other => Err(drs_core::Error::InvalidArgument(format!("unknown family {other:?}"))),
    }
}

fn wrap(r: Result<Value, String>) -> String {
    r.unwrap_or_else(|e| json!({ "error": e })).to_string()
}

/// A family member with its line-graph bounds, the spanning-tree witness and,
/// when small enough, the exact Ψ(L(G)) with a minimum witness.
pub fn explore(name: &str, param: usize, seed: u64) -> Result<Value, String> {
    let g = family(name, param, seed).map_err(|e| e.to_string())?;
    if g.vertex_count() > 200 {
        return Err("keep the graph at 200 vertices or fewer for drawing".into());
    }
    let lower = lower_bound_line(&g).map_err(|e| e.to_string())?;
    let upper = upper_bound_drs_line(&g).map_err(|e| e.to_string())?;
    let mut out = json!({
        "graph": drawing(&g),
        "lower": lower,
        "upper": g.vertex_count() - 1,
        "upper_set": upper.as_slice(),
    });
    let (lg, _) = line_graph(&g).map_err(|e| e.to_string())?;
    if lg.vertex_count() <= EXACT_MAX_LINE_VERTICES && lg.vertex_count() >= 2 {
        let dm = bfs_all_pairs(&lg).map_err(|e| e.to_string())?;
        let cfg = SolverConfig {
            work_limit: EXACT_WORK_LIMIT,
            threads: 1,
        };
        match min_drs_exhaustive(&dm, Some(lower), &cfg) {
            Ok(res) if is_drs_fast(&dm, &res.witness) => {
                out["psi"] = json!(res.psi);
                out["psi_set"] = json!(res.witness.as_slice());
            }
            Ok(_) => return Err("solver witness failed verification".into()),
            Err(e) => out["psi_note"] = json!(e.to_string()),
        }
    } else {
        out["psi_note"] = json!(format!("exact search skipped above {EXACT_MAX_LINE_VERTICES} edges"));
    }
    Ok(out)
}

/// Random tree with the linear-time minimum DRS of its line graph.
pub fn tree_witness(n: usize, seed: u64) -> Result<Value, String> {
    if !(3..=MAX_TREE).contains(&n) {
        return Err(format!("n must be between 3 and {MAX_TREE}"));
    }
    let t = gen_random_tree(n, seed).map_err(|e| e.to_string())?;
    let st = tree_stats(&t).map_err(|e| e.to_string())?;
    let s = construct_min_drs_line_tree(&t).map_err(|e| e.to_string())?;
    let (lg, _) = line_graph(&t).map_err(|e| e.to_string())?;
    let dm = bfs_all_pairs(&lg).map_err(|e| e.to_string())?;
    if !is_drs_fast(&dm, &s) {
        return Err("construction failed verification".into());
    }
    Ok(json!({
        "graph": drawing(&t),
        "sigma": st.sigma,
        "ex": st.ex,
        "ex_prime": st.ex_prime,
        "psi": s.len(),
        "set": s.as_slice(),
        "verified": true,
    }))
}

/// Checks a set of edges (given as `a_b` labels or edge indices) as a DRS of
/// the line graph, with the F-vector of every line vertex.
pub fn verify_line_set(graph_text: &str, set: &str) -> Result<Value, String> {
    let g = parse_graph(graph_text).map_err(|e| e.to_string())?;
    let (lg, _) = line_graph(&g).map_err(|e| e.to_string())?;
    let mut ids = Vec::new();
    for tok in set.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let swapped = tok.split_once('_').map(|(a, b)| format!("{b}_{a}"));
        let v = lg
            .vertex_by_label(tok)
            .or_else(|| swapped.and_then(|s| lg.vertex_by_label(&s)))
            .ok_or_else(|| format!("unknown edge {tok:?}"))?;
        ids.push(v);
    }
    let s = VertexSet::from_unsorted(ids);
    if s.is_empty() {
        return Err("the set is empty".into());
    }
    let dm = bfs_all_pairs(&lg).map_err(|e| e.to_string())?;
    let rows: Vec<Value> = (0..lg.vertex_count())
        .map(|x| json!({ "edge": lg.label(x), "f": f_vector(&dm, &s, x).deltas }))
        .collect();
    Ok(json!({
        "graph": drawing(&g),
        "set": s.as_slice(),
        "anchor": lg.label(s.as_slice()[0]),
        "verified": is_drs_fast(&dm, &s),
        "fvectors": rows,
    }))
}

#[wasm_bindgen(js_name = explore)]
pub fn explore_js(name: &str, param: usize, seed: u32) -> String {
    wrap(explore(name, param, u64::from(seed)))
}

#[wasm_bindgen(js_name = treeWitness)]
pub fn tree_witness_js(n: usize, seed: u32) -> String {
    wrap(tree_witness(n, u64::from(seed)))
}

#[wasm_bindgen(js_name = verifyLineSet)]
pub fn verify_line_set_js(graph_text: &str, set: &str) -> String {
    wrap(verify_line_set(graph_text, set))
}
