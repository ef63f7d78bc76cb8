//! Plain-text graph and list-assignment formats.
//!
//! Graph: a header line `n m`, then `m` lines `u v` with 0-based ids.
//! Lists: one line per vertex, `v: c1 c2 c3 ...`.
//! In both, blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::separation::{ColorSet, ListAssignment, MAX_COLORS};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_err(line: usize, reason: impl Into<String>) -> Error {
    Error::Parse {
        line,
        reason: reason.into(),
    }
}

fn numbers(line: usize, s: &str) -> Result<Vec<usize>> {
    s.split_whitespace()
        .map(|tok| {
            tok.parse()
                .map_err(|_| parse_err(line, format!("'{tok}' is not a nonnegative integer")))
        })
        .collect()
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing 'n m' header"))?;
    let [n, m] = numbers(hline, header)?[..] else {
        return Err(parse_err(hline, "header must be 'n m'"));
    };
    let mut adj = vec![Vec::new(); n];
    let mut edges = Vec::with_capacity(m);
    for (line, body) in lines {
        let [u, v] = numbers(line, body)?[..] else {
            return Err(parse_err(line, "edge line must be 'u v'"));
        };
        if u >= n || v >= n {
            return Err(parse_err(line, format!("vertex {} out of range 0..{n}", u.max(v))));
        }
        if u == v {
            return Err(parse_err(line, format!("self-loop at vertex {u}")));
        }
        if adj[u].contains(&v) {
            return Err(parse_err(line, format!("duplicate edge {u} {v}")));
        }
        adj[u].push(v);
        adj[v].push(u);
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(parse_err(
            hline,
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    Graph::new(n, edges)
}

pub fn emit_graph(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

/// Parses a list file for a graph on `n` vertices. Every vertex must appear
/// exactly once. `universe` overrides the inferred `1 + max color`.
pub fn parse_lists(text: &str, n: usize, universe: Option<usize>) -> Result<ListAssignment> {
    let mut lists: Vec<Option<ColorSet>> = vec![None; n];
    for (line, body) in content_lines(text) {
        let (head, rest) = body
            .split_once(':')
            .ok_or_else(|| parse_err(line, "expected 'v: c1 c2 ...'"))?;
        let v: usize = head
            .trim()
            .parse()
            .map_err(|_| parse_err(line, format!("'{}' is not a vertex id", head.trim())))?;
        if v >= n {
            return Err(parse_err(line, format!("vertex {v} out of range 0..{n}")));
        }
        if lists[v].is_some() {
            return Err(parse_err(line, format!("vertex {v} listed twice")));
        }
        let colors = numbers(line, rest)?;
        if colors.is_empty() {
            return Err(parse_err(line, format!("vertex {v} has an empty list")));
        }
        let limit = universe.unwrap_or(MAX_COLORS).min(MAX_COLORS);
        if let Some(&c) = colors.iter().find(|&&c| c >= limit) {
            return Err(parse_err(line, format!("color {c} outside universe 0..{limit}")));
        }
        let set: ColorSet = colors.iter().copied().collect();
        if set.len() != colors.len() {
            return Err(parse_err(line, format!("vertex {v} repeats a color")));
        }
        lists[v] = Some(set);
    }
    let lists: Vec<ColorSet> = lists
        .into_iter()
        .enumerate()
        .map(|(v, l)| l.ok_or_else(|| parse_err(0, format!("no list for vertex {v}"))))
        .collect::<Result<_>>()?;
    ListAssignment::from_sets(lists, universe)
}

pub fn emit_lists(lists: &ListAssignment) -> String {
    let mut s = String::new();
    for (v, set) in lists.lists().iter().enumerate() {
        let colors: Vec<String> = set.iter().map(|c| c.to_string()).collect();
        let _ = writeln!(s, "{v}: {}", colors.join(" "));
    }
    s
}
