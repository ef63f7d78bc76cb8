//! Deciding `(k, t)`-choosability of small graphs by enumerating list
//! assignments up to color renaming.
//!
//! Vertices are visited in id order. A vertex's list is a subset of the colors
//! already introduced plus a block of the next unused colors, so every
//! assignment is met in a form where colors appear in first-use order.
//!
//! Bounds used by the enumeration:
//!
//! * Intersection regime (`t <= k`): every list has exactly `k` colors.
//!   Dropping colors never breaks an intersection bound and never helps the
//!   colorer.
//! * Union regime (`t > k`): only inclusion-minimal valid assignments are
//!   visited. A bad assignment stays bad when colors are removed, so a minimal
//!   bad one exists whenever any does. In a minimal assignment a list larger
//!   than `k` has every color pinned by an edge `uv` with
//!   `|L(u) ∪ L(v)| = t` and the color outside `L(u)`; hence
//!   `|L(v)| <= min(t, d(v)·(t-k))`.
//! * Vertices of degree below `k` are peeled first (optional): such a vertex
//!   is always colorable last, and a bad assignment of the rest extends to the
//!   whole graph with private colors on the peeled vertices.
//!
//! The number of distinct colors is at most the total list size, which is the
//! largest number of fresh colors the enumeration can introduce.

use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::reducibility::greedy_kernel;
use crate::separation::{
    is_valid_assignment, ColorSet, ListAssignment, Regime, SeparationParams, MAX_COLORS,
};
use crate::solver::solve;

/// Resource budget for [`decide_choosable`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Upper bound on partial list assignments visited.
    pub max_nodes: Option<u64>,
    pub max_duration: Option<Duration>,
    /// Peel vertices of degree `< k` before enumerating.
    pub kernelize: bool,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_nodes: Some(10_000_000),
            max_duration: None,
            kernelize: true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Choosable,
    NotChoosable,
    ResourceLimit,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChoosabilityVerdict {
    pub status: Status,
    /// A valid `(k, t)`-assignment with no L-coloring; present iff
    /// `status == NotChoosable`.
    pub witness: Option<ListAssignment>,
    /// Complete assignments handed to the solver.
    pub assignments_tested: u64,
    /// Partial assignments visited.
    pub nodes: u64,
}

/// True iff `lists` is a valid `(k, t)`-assignment of `g` with no L-coloring.
pub fn verify_not_choosable(g: &Graph, lists: &ListAssignment, p: SeparationParams) -> bool {
    is_valid_assignment(g, lists, p).is_ok() && !solve(g, lists).is_sat()
}

/// Largest list size the enumeration ever gives a vertex of degree `d`.
fn max_list_size(p: SeparationParams, d: usize) -> usize {
    match p.regime() {
        Regime::Intersection => p.k,
        Regime::Union => p.t.min(p.k.max(d * (p.t - p.k))),
    }
}

/// Decides whether `g` is `(k, t)`-choosable within `limits`.
///
/// Intended for desk-scale inputs (roughly `n <= 8`, `k <= 3`, `t <= 6`).
/// Fails if the color universe the enumeration may need exceeds
/// [`MAX_COLORS`].
pub fn decide_choosable(
    g: &Graph,
    p: SeparationParams,
    limits: Limits,
) -> Result<ChoosabilityVerdict> {
    let (work, kept) = if limits.kernelize {
        let kernel = greedy_kernel(g, p.k);
        let (h, _) = g.induced_subgraph(&kernel.kernel);
        (h, kernel.kernel)
    } else {
        (g.clone(), (0..g.n()).collect())
    };

    let max_sizes: Vec<usize> = work.degrees().map(|d| max_list_size(p, d)).collect();
    let slots: usize = max_sizes.iter().sum();
    if slots > MAX_COLORS {
        return Err(Error::InvalidParams(format!(
            "enumeration may need {slots} colors, limit is {MAX_COLORS}"
        )));
    }

    let mut closes_at: Vec<Vec<usize>> = vec![Vec::new(); work.n()];
    for v in 0..work.n() {
        let last = work.neighbors(v).iter().copied().chain([v]).max().unwrap();
        closes_at[last].push(v);
    }

    let mut en = Enumerator {
        g: &work,
        p,
        max_sizes,
        closes_at,
        lists: vec![ColorSet::EMPTY; work.n()],
        nodes: 0,
        tested: 0,
        limits,
        start: Instant::now(),
        witness: None,
        out_of_budget: false,
    };
    en.extend(0, 0);

    let (nodes, tested) = (en.nodes, en.tested);
    if let Some(lists) = en.witness {
        let witness = lift_witness(g, p, &kept, &lists)?;
        debug_assert!(verify_not_choosable(g, &witness, p));
        return Ok(ChoosabilityVerdict {
            status: Status::NotChoosable,
            witness: Some(witness),
            assignments_tested: tested,
            nodes,
        });
    }
    Ok(ChoosabilityVerdict {
        status: if en.out_of_budget {
            Status::ResourceLimit
        } else {
            Status::Choosable
        },
        witness: None,
        assignments_tested: tested,
        nodes,
    })
}

/// Extends a bad assignment of the kernel to all of `g`, giving each peeled
/// vertex its own block of unused colors.
fn lift_witness(
    g: &Graph,
    p: SeparationParams,
    kept: &[usize],
    kernel_lists: &[ColorSet],
) -> Result<ListAssignment> {
    let mut lists = vec![ColorSet::EMPTY; g.n()];
    let mut next = kernel_lists
        .iter()
        .filter_map(|s| s.last())
        .max()
        .map_or(0, |c| c + 1);
    for (i, &v) in kept.iter().enumerate() {
        lists[v] = kernel_lists[i];
    }
    let private = match p.regime() {
        Regime::Intersection => p.k,
        Regime::Union => p.k.max(p.t - p.k),
    };
    for list in lists.iter_mut().filter(|l| l.is_empty()) {
        if next + private > MAX_COLORS {
            return Err(Error::InvalidParams(
                "witness needs more colors than supported".into(),
            ));
        }
        *list = ColorSet::range(next, next + private);
        next += private;
    }
    ListAssignment::from_sets(lists, None)
}

struct Enumerator<'a> {
    g: &'a Graph,
    p: SeparationParams,
    max_sizes: Vec<usize>,
    /// `closes_at[i]`: vertices whose closed neighborhood is fully listed
    /// once vertex `i` is.
    closes_at: Vec<Vec<usize>>,
    lists: Vec<ColorSet>,
    nodes: u64,
    tested: u64,
    limits: Limits,
    start: Instant,
    witness: Option<Vec<ColorSet>>,
    out_of_budget: bool,
}

impl Enumerator<'_> {
    /// Returns true when the search should stop (witness or budget).
    fn extend(&mut self, v: usize, used: usize) -> bool {
        if v == self.g.n() {
            self.tested += 1;
            let l = ListAssignment::from_sets(self.lists.clone(), Some(used.max(1)))
                .expect("enumerated lists are nonempty");
            if !solve(self.g, &l).is_sat() {
                self.witness = Some(self.lists.clone());
                return true;
            }
            return false;
        }
        for size in self.p.k..=self.max_sizes[v] {
            for fresh in 0..=size {
                let reused = size - fresh;
                if reused > used {
                    continue;
                }
                let block = ColorSet::range(used, used + fresh);
                let mut stop = false;
                for_each_subset(used, reused, &mut |subset| {
                    let list = subset.union(block);
                    if !self.fits(v, list) {
                        return false;
                    }
                    self.nodes += 1;
                    if self.over_budget() {
                        stop = true;
                        return true;
                    }
                    self.lists[v] = list;
                    if self.minimal_at(v) && self.extend(v + 1, used + fresh) {
                        stop = true;
                    }
                    stop
                });
                self.lists[v] = ColorSet::EMPTY;
                if stop {
                    return true;
                }
            }
        }
        false
    }

    fn fits(&self, v: usize, list: ColorSet) -> bool {
        self.g
            .neighbors(v)
            .iter()
            .take_while(|&&w| w < v)
            .all(|&w| self.p.edge_ok(list, self.lists[w]))
    }

    /// Inclusion-minimality of every vertex whose neighborhood was completed
    /// by listing `v`.
    fn minimal_at(&self, v: usize) -> bool {
        if self.p.regime() == Regime::Intersection {
            return true;
        }
        self.closes_at[v].iter().all(|&w| {
            let lw = self.lists[w];
            if lw.len() == self.p.k {
                return true;
            }
            let mut pinned = ColorSet::EMPTY;
            for &u in self.g.neighbors(w) {
                let lu = self.lists[u];
                if lu.union(lw).len() == self.p.t {
                    pinned = pinned.union(lw.difference(lu));
                }
            }
            pinned == lw
        })
    }

    fn over_budget(&mut self) -> bool {
        if self.limits.max_nodes.is_some_and(|max| self.nodes > max) {
            self.out_of_budget = true;
        }
        if self.nodes.is_multiple_of(1024)
            && self
                .limits
                .max_duration
                .is_some_and(|max| self.start.elapsed() > max)
        {
            self.out_of_budget = true;
        }
        self.out_of_budget
    }
}

/// Calls `f` on every `size`-subset of `0..universe` in lexicographic order
/// until it returns true.
fn for_each_subset(universe: usize, size: usize, f: &mut dyn FnMut(ColorSet) -> bool) {
    fn rec(
        start: usize,
        universe: usize,
        left: usize,
        acc: ColorSet,
        f: &mut dyn FnMut(ColorSet) -> bool,
    ) -> bool {
        if left == 0 {
            return f(acc);
        }
        for c in start..=universe - left {
            if rec(c + 1, universe, left - 1, acc.with(c), f) {
                return true;
            }
        }
        false
    }
    if size <= universe {
        rec(0, universe, size, ColorSet::EMPTY, f);
    }
}
