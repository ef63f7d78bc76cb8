//! Exhaustive backtracking search for L-colorings.
//!
//! Branches on the uncolored vertex with the fewest remaining candidates
//! (lowest id on ties), trying colors in increasing order. Coloring a vertex
//! removes its color from uncolored neighbors; a neighbor left with one
//! candidate is colored at once, and an empty candidate set backtracks.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::separation::{ColorSet, Coloring, ListAssignment};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Sat,
    Unsat,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub verdict: Verdict,
    /// Present exactly when `verdict` is `Sat`.
    pub witness: Option<Coloring>,
    pub nodes_explored: u64,
}

impl SolveResult {
    pub fn is_sat(&self) -> bool {
        self.verdict == Verdict::Sat
    }
}

const UNCOLORED: usize = usize::MAX;

struct Search<'a> {
    g: &'a Graph,
    domains: Vec<ColorSet>,
    colors: Vec<usize>,
    queue: Vec<usize>,
    nodes: u64,
}

impl<'a> Search<'a> {
    /// Returns `None` when the initial domains are already contradictory.
    fn new(g: &'a Graph, domains: Vec<ColorSet>) -> Option<Self> {
        let mut s = Search {
            g,
            colors: vec![UNCOLORED; domains.len()],
            domains,
            queue: Vec::new(),
            nodes: 0,
        };
        if s.domains.iter().any(|d| d.is_empty()) {
            return None;
        }
        for v in 0..s.domains.len() {
            if s.domains[v].len() == 1 {
                s.queue.push(v);
            }
        }
        s.propagate().then_some(s)
    }

    /// Colors every queued vertex with its single candidate. Returns false on
    /// a wipe-out.
    fn propagate(&mut self) -> bool {
        while let Some(v) = self.queue.pop() {
            if self.colors[v] != UNCOLORED {
                continue;
            }
            let c = match self.domains[v].first() {
                Some(c) => c,
                None => {
                    self.queue.clear();
                    return false;
                }
            };
            self.colors[v] = c;
            for &w in self.g.neighbors(v) {
                if self.colors[w] != UNCOLORED || !self.domains[w].contains(c) {
                    continue;
                }
                self.domains[w].remove(c);
                match self.domains[w].len() {
                    0 => {
                        self.queue.clear();
                        return false;
                    }
                    1 => self.queue.push(w),
                    _ => {}
                }
            }
        }
        true
    }

    fn pick_vertex(&self) -> Option<usize> {
        let mut best: Option<(usize, usize)> = None;
        for v in 0..self.colors.len() {
            if self.colors[v] != UNCOLORED {
                continue;
            }
            let size = self.domains[v].len();
            if best.is_none_or(|(b, _)| size < b) {
                best = Some((size, v));
                if size <= 2 {
                    break;
                }
            }
        }
        best.map(|(_, v)| v)
    }

    /// Depth-first enumeration of colorings. `visit` returns true to stop.
    fn run(&mut self, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        let v = match self.pick_vertex() {
            None => return visit(&self.colors),
            Some(v) => v,
        };
        let saved_domains = self.domains.clone();
        let saved_colors = self.colors.clone();
        for c in saved_domains[v].iter() {
            self.nodes += 1;
            self.domains[v] = ColorSet::singleton(c);
            self.queue.push(v);
            if self.propagate() && self.run(visit) {
                return true;
            }
            self.domains.copy_from_slice(&saved_domains);
            self.colors.copy_from_slice(&saved_colors);
        }
        false
    }
}

fn search_first(g: &Graph, domains: Vec<ColorSet>) -> SolveResult {
    let Some(mut search) = Search::new(g, domains) else {
        return SolveResult {
            verdict: Verdict::Unsat,
            witness: None,
            nodes_explored: 0,
        };
    };
    let mut witness = None;
    search.run(&mut |colors| {
        witness = Some(Coloring(colors.to_vec()));
        true
    });
    SolveResult {
        verdict: if witness.is_some() {
            Verdict::Sat
        } else {
            Verdict::Unsat
        },
        witness,
        nodes_explored: search.nodes,
    }
}

fn check_cover(g: &Graph, lists: &ListAssignment) -> Result<()> {
    if lists.len() != g.n() {
        return Err(Error::CoverageMismatch {
            lists: lists.len(),
            n: g.n(),
        });
    }
    Ok(())
}

/// Decides whether `g` has an L-coloring.
///
/// Panics if `lists` does not cover every vertex.
pub fn solve(g: &Graph, lists: &ListAssignment) -> SolveResult {
    check_cover(g, lists).expect("list assignment must cover the graph");
    search_first(g, lists.lists().to_vec())
}

/// Like [`solve`], restricted to colorings extending `fixed`.
pub fn solve_with_precolor(
    g: &Graph,
    lists: &ListAssignment,
    fixed: &[Option<usize>],
) -> Result<SolveResult> {
    check_cover(g, lists)?;
    if fixed.len() != g.n() {
        return Err(Error::CoverageMismatch {
            lists: fixed.len(),
            n: g.n(),
        });
    }
    let mut domains = lists.lists().to_vec();
    for (v, f) in fixed.iter().enumerate() {
        if let Some(c) = *f {
            if !domains[v].contains(c) {
                return Err(Error::InvalidParams(format!(
                    "precolor {c} of vertex {v} is not in its list"
                )));
            }
            domains[v] = ColorSet::singleton(c);
        }
    }
    Ok(search_first(g, domains))
}

/// Number of distinct L-colorings, saturating at `cap`.
pub fn count_colorings(g: &Graph, lists: &ListAssignment, cap: u64) -> u64 {
    check_cover(g, lists).expect("list assignment must cover the graph");
    let Some(mut search) = Search::new(g, lists.lists().to_vec()) else {
        return 0;
    };
    let mut count = 0u64;
    search.run(&mut |_| {
        count += 1;
        count >= cap
    });
    count.min(cap)
}
