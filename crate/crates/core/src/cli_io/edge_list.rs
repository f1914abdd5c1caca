use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graphgen::{Graph, GraphModel};

/// `"n m"` followed by one `"u v"` line per edge, `u < v`, sorted.
pub fn format_edge_list(g: &Graph) -> String {
    let mut out = String::with_capacity(12 * (g.edge_count() + 1));
    let _ = writeln!(out, "{} {}", g.n(), g.edge_count());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn write_edge_list(g: &Graph, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    std::fs::write(path, format_edge_list(g)).map_err(|e| Error::io(path, e))
}

pub fn read_edge_list(path: impl AsRef<Path>) -> Result<Graph> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_edge_list(&text, path)
}

/// Parses the edge-list format; `path` only labels errors. Edges may be given
/// in either orientation but loops and repeats are rejected.
pub fn parse_edge_list(text: &str, path: impl AsRef<Path>) -> Result<Graph> {
    let path = path.as_ref();
    let fail = |line: usize, message: String| Error::Parse {
        path: path.to_path_buf(),
        line,
        message,
    };
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (_, header) = lines.next().ok_or_else(|| fail(1, "missing \"n m\" header".into()))?;
    let (n, m) = parse_pair(header).ok_or_else(|| fail(1, format!("expected \"n m\", found {header:?}")))?;

    let mut seen = std::collections::HashSet::with_capacity(m);
    let mut edges = Vec::with_capacity(m);
    for (line, text) in lines {
        if edges.len() == m {
            if text.trim().is_empty() {
                continue;
            }
            return Err(fail(line, format!("more than the {m} edges announced in the header")));
        }
        let (a, b) = parse_pair(text).ok_or_else(|| fail(line, format!("expected \"u v\", found {text:?}")))?;
        if a >= n || b >= n {
            return Err(fail(line, format!("vertex out of range for n = {n}")));
        }
        if a == b {
            return Err(fail(line, format!("self-loop at vertex {a}")));
        }
        let e = (a.min(b), a.max(b));
        if !seen.insert(e) {
            return Err(fail(line, format!("duplicate edge {} {}", e.0, e.1)));
        }
        edges.push(e);
    }
    if edges.len() != m {
        return Err(fail(
            text.lines().count().max(1),
            format!("header announces {m} edges, found {}", edges.len()),
        ));
    }
    Graph::from_edges(n, edges, GraphModel::External)
}

fn parse_pair(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    if it.next().is_some() {
        return None;
    }
    Some((a, b))
}
