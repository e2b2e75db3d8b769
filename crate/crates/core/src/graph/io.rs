//! The plain-text graph format.
//!
//! ```text
//! # comment lines allowed anywhere
//! g <n> <m>
//! <u> <v>          (m lines, 0 <= u < v < n)
//! l <v> <label>    (optional, any count)
//! ```

use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn parse_num(tok: &str, line: usize, what: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| parse_err(line, format!("expected {what}, found {tok:?}")))
}

/// Parses the graph file format. Errors carry 1-based line numbers.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let mut labels = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks[0] {
            "g" => {
                if header.is_some() {
                    return Err(parse_err(lineno, "duplicate header"));
                }
                if toks.len() != 3 {
                    return Err(parse_err(lineno, "malformed header, expected `g <n> <m>`"));
                }
                let n = parse_num(toks[1], lineno, "vertex count")?;
                let m = parse_num(toks[2], lineno, "edge count")?;
                if n == 0 {
                    return Err(parse_err(lineno, "malformed header, vertex count must be at least 1"));
                }
                header = Some((n, m));
            }
            "l" => {
                let (n, _) = header.ok_or_else(|| parse_err(lineno, "label before header"))?;
                if toks.len() != 3 {
                    return Err(parse_err(lineno, "malformed label line, expected `l <v> <label>`"));
                }
                let v = parse_num(toks[1], lineno, "vertex id")?;
                if v >= n {
                    return Err(parse_err(lineno, format!("vertex id {v} out of range 0..{n}")));
                }
                labels.push((v, toks[2].to_string(), lineno));
            }
            _ => {
                let (n, _) = header.ok_or_else(|| parse_err(lineno, "edge before header"))?;
                if toks.len() != 2 {
                    return Err(parse_err(lineno, "malformed edge line, expected `<u> <v>`"));
                }
                let u = parse_num(toks[0], lineno, "vertex id")?;
                let v = parse_num(toks[1], lineno, "vertex id")?;
                if u >= n || v >= n {
                    return Err(parse_err(lineno, format!("vertex id {} out of range 0..{n}", u.max(v))));
                }
                if u == v {
                    return Err(parse_err(lineno, format!("self-loop at vertex {u}")));
                }
                let e = (u.min(v), u.max(v));
                if !seen.insert(e) {
                    return Err(parse_err(lineno, format!("duplicate edge {} {}", e.0, e.1)));
                }
                edges.push(e);
            }
        }
    }

    let (n, m) = header.ok_or_else(|| parse_err(0, "missing header `g <n> <m>`"))?;
    if edges.len() != m {
        return Err(parse_err(
            0,
            format!("header declares {m} edges but {} were given", edges.len()),
        ));
    }
    let g = Graph::new(n, edges)?;
    let mut by_label = std::collections::HashMap::new();
    for (v, label, lineno) in &labels {
        if let Some(prev) = by_label.insert(label.as_str(), *v) {
            if prev != *v {
                return Err(parse_err(*lineno, format!("label {label:?} is not unique")));
            }
        }
    }
    let last_line = labels.last().map_or(0, |l| l.2);
    g.with_labels(labels.into_iter().map(|(v, l, _)| (v, l)))
        .map_err(|e| parse_err(last_line, e.to_string()))
}

/// Serializes `g`; explicit labels are written as `l` lines.
pub fn write_graph(g: &Graph) -> String {
    let mut out = String::with_capacity(16 + 12 * g.edge_count());
    let _ = writeln!(out, "g {} {}", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    for (v, label) in g.explicit_labels() {
        let _ = writeln!(out, "l {v} {label}");
    }
    out
}
