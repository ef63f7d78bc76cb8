//! The light-edge reducible configuration, greedy peeling, and an empirical
//! check of the edge reduction on random instances.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::separation::{
    is_valid_assignment, ColorSet, ListAssignment, Regime, SeparationParams,
};
use crate::solver::solve;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducibleEdge {
    pub u: usize,
    pub v: usize,
    /// Uncapped `|N(u) ∩ N(v)|`.
    pub common: usize,
    /// `min(common, 2)`.
    pub a_capped: usize,
    pub degree_sum: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ReducibleEdgeReport {
    pub edges: Vec<ReducibleEdge>,
}

fn require_union_k3(p: SeparationParams) -> Result<()> {
    if p.k < 3 {
        return Err(Error::InvalidParams(format!(
            "edge reduction needs k >= 3, got k = {}",
            p.k
        )));
    }
    if p.t < p.k {
        return Err(Error::InvalidParams(format!(
            "edge reduction needs t >= k, got {p}"
        )));
    }
    Ok(())
}

fn light_edge(g: &Graph, u: usize, v: usize) -> ReducibleEdge {
    let common = g.common_neighbor_count(u, v).expect("edge endpoints differ");
    let a_capped = common.min(2);
    let degree_sum = g.neighbors(u).len() + g.neighbors(v).len();
    ReducibleEdge {
        u,
        v,
        common,
        a_capped,
        degree_sum,
    }
}

impl ReducibleEdge {
    pub fn is_light(&self, t: usize) -> bool {
        self.degree_sum <= t + self.a_capped
    }
}

/// Every edge `uv` with `d(u) + d(v) <= t + min(|N(u) ∩ N(v)|, 2)`.
pub fn find_reducible_edges(g: &Graph, p: SeparationParams) -> Result<ReducibleEdgeReport> {
    require_union_k3(p)?;
    let edges = g
        .edges()
        .map(|(u, v)| light_edge(g, u, v))
        .filter(|e| e.is_light(p.t))
        .collect();
    Ok(ReducibleEdgeReport { edges })
}

/// Which part of the hypothesis failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HypothesisGap {
    DegreeCondition,
    NoColoringWithoutU,
    NoColoringWithoutV,
    NoColoringWithoutEdge,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LightEdgeOutcome {
    /// Hypothesis met and `G` is L-colorable.
    Pass,
    HypothesisNotMet(HypothesisGap),
    /// Hypothesis met but `G` has no L-coloring. Never expected; signals a
    /// defect in this crate.
    CriticalFault,
}

/// Checks the light-edge reduction on one instance: if `G - u`, `G - v` and
/// `G - uv` are L-colorable and `uv` is light, `G` must be L-colorable.
pub fn check_light_edge(
    g: &Graph,
    u: usize,
    v: usize,
    lists: &ListAssignment,
    p: SeparationParams,
) -> Result<LightEdgeOutcome> {
    require_union_k3(p)?;
    if !g.has_edge(u, v) {
        return Err(Error::MissingEdge(u, v));
    }
    if let Err(violation) = is_valid_assignment(g, lists, p) {
        return Err(Error::InvalidParams(format!(
            "not a {p}-list assignment: {violation}"
        )));
    }
    if !light_edge(g, u, v).is_light(p.t) {
        return Ok(LightEdgeOutcome::HypothesisNotMet(HypothesisGap::DegreeCondition));
    }
    for (x, gap) in [
        (u, HypothesisGap::NoColoringWithoutU),
        (v, HypothesisGap::NoColoringWithoutV),
    ] {
        let (h, map) = g.delete_vertex(x)?;
        if !solve(&h, &lists.restrict(&map)).is_sat() {
            return Ok(LightEdgeOutcome::HypothesisNotMet(gap));
        }
    }
    if !solve(&g.delete_edge(u, v)?, lists).is_sat() {
        return Ok(LightEdgeOutcome::HypothesisNotMet(
            HypothesisGap::NoColoringWithoutEdge,
        ));
    }
    Ok(if solve(g, lists).is_sat() {
        LightEdgeOutcome::Pass
    } else {
        LightEdgeOutcome::CriticalFault
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Kernel {
    /// Surviving vertices (original ids, increasing).
    pub kernel: Vec<usize>,
    /// Removal order (original ids).
    pub order: Vec<usize>,
}

impl Kernel {
    pub fn is_empty(&self) -> bool {
        self.kernel.is_empty()
    }
}

/// Repeatedly deletes the lowest-id vertex of current degree `< k`.
///
/// An empty kernel means every assignment with lists of size `>= k` is
/// colorable by coloring vertices in reverse removal order.
pub fn greedy_kernel(g: &Graph, k: usize) -> Kernel {
    let mut deg: Vec<usize> = g.degrees().collect();
    let mut removed = vec![false; g.n()];
    let mut ready: BTreeSet<usize> = (0..g.n()).filter(|&v| deg[v] < k).collect();
    let mut order = Vec::new();
    while let Some(v) = ready.pop_first() {
        removed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                deg[w] -= 1;
                if deg[w] < k {
                    ready.insert(w);
                }
            }
        }
    }
    let kernel = (0..g.n()).filter(|&v| !removed[v]).collect();
    Kernel { kernel, order }
}

/// Configuration of the randomized light-edge suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Instances with the hypothesis met to collect.
    pub instances: usize,
    pub max_n: usize,
    pub k: usize,
    pub t_min: usize,
    pub t_max: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0x5eed,
            instances: 1000,
            max_n: 7,
            k: 3,
            t_min: 5,
            t_max: 8,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SuiteReport {
    /// Instances generated (hypothesis met or not).
    pub generated: usize,
    pub hypothesis_met: usize,
    pub passes: usize,
    /// Instance indices that produced a critical fault.
    pub critical_faults: Vec<u64>,
    /// Hypothesis-met instances where `|L(u)| <= d(u)`, `|L(v)| <= d(v)` and
    /// the two lists meet, i.e. where no one-line argument applies.
    pub tight: usize,
}

/// A random instance together with a light edge, if one could be drawn.
#[derive(Debug, Clone)]
pub struct SuiteInstance {
    pub graph: Graph,
    pub lists: ListAssignment,
    pub params: SeparationParams,
    pub edge: (usize, usize),
}

/// Draws instance `index` of the suite. Deterministic in `(cfg.seed, index)`.
pub fn suite_instance(cfg: &SuiteConfig, index: u64) -> Option<SuiteInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    let n = rng.gen_range(2..=cfg.max_n);
    let density: f64 = rng.gen_range(0.3..0.9);
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(density))
        .collect();
    let graph = Graph::new(n, edges).expect("generated edges are simple");
    let t = rng.gen_range(cfg.t_min..=cfg.t_max);
    let params = SeparationParams::new(cfg.k, t).ok()?;
    let light: Vec<(usize, usize)> = graph
        .edges()
        .filter(|&(u, v)| light_edge(&graph, u, v).is_light(t))
        .collect();
    let &edge = light.choose(&mut rng)?;

    // Lists start at size k and grow only as far as the union condition
    // demands, so they stay near the smallest valid sizes. A small universe
    // makes adjacent lists overlap, which is where the reduction has work to
    // do.
    let universe = t + rng.gen_range(0..=2);
    let mut lists: Vec<ColorSet> = (0..n)
        .map(|_| {
            let mut colors: Vec<usize> = (0..universe).collect();
            colors.shuffle(&mut rng);
            colors.into_iter().take(cfg.k).collect()
        })
        .collect();
    let mut edges: Vec<(usize, usize)> = graph.edges().collect();
    edges.shuffle(&mut rng);
    for (u, v) in edges {
        while lists[u].union(lists[v]).len() < t {
            let missing: Vec<usize> = (0..universe)
                .filter(|&c| !lists[u].contains(c) && !lists[v].contains(c))
                .collect();
            let c = *missing.choose(&mut rng).expect("universe holds t colors");
            let w = if rng.gen_bool(0.5) { u } else { v };
            lists[w].insert(c);
        }
    }
    let lists = ListAssignment::from_sets(lists, Some(universe)).ok()?;
    debug_assert!(is_valid_assignment(&graph, &lists, params).is_ok());
    Some(SuiteInstance {
        graph,
        lists,
        params,
        edge,
    })
}

fn is_tight(inst: &SuiteInstance) -> bool {
    let (u, v) = inst.edge;
    let (lu, lv) = (inst.lists.list(u), inst.lists.list(v));
    lu.len() <= inst.graph.neighbors(u).len()
        && lv.len() <= inst.graph.neighbors(v).len()
        && !lu.intersection(lv).is_empty()
}

/// Runs [`check_light_edge`] on random instances until `cfg.instances` of them
/// meet the hypothesis. Instances are evaluated in parallel; the report is
/// independent of scheduling.
pub fn light_edge_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    if cfg.k < 3 || cfg.t_min <= cfg.k || cfg.t_min > cfg.t_max || cfg.max_n < 2 {
        return Err(Error::InvalidParams(
            "suite needs k >= 3, k < t_min <= t_max and max_n >= 2".into(),
        ));
    }
    debug_assert_eq!(SeparationParams::new(cfg.k, cfg.t_min)?.regime(), Regime::Union);
    let mut report = SuiteReport::default();
    let batch = 512u64;
    let mut next = 0u64;
    while report.hypothesis_met < cfg.instances {
        if next > 1_000 * cfg.instances as u64 + 10_000 {
            return Err(Error::InvalidParams(
                "suite could not draw enough instances meeting the hypothesis".into(),
            ));
        }
        let outcomes: Vec<(u64, Option<(LightEdgeOutcome, bool)>)> = (next..next + batch)
            .into_par_iter()
            .map(|i| {
                let out = suite_instance(cfg, i).map(|inst| {
                    let (u, v) = inst.edge;
                    let outcome = check_light_edge(&inst.graph, u, v, &inst.lists, inst.params)
                        .expect("suite instances satisfy the preconditions");
                    (outcome, is_tight(&inst))
                });
                (i, out)
            })
            .collect();
        next += batch;
        for (i, out) in outcomes {
            if report.hypothesis_met == cfg.instances {
                break;
            }
            let Some((outcome, tight)) = out else { continue };
            report.generated += 1;
            match outcome {
                LightEdgeOutcome::HypothesisNotMet(_) => continue,
                LightEdgeOutcome::Pass => report.passes += 1,
                LightEdgeOutcome::CriticalFault => report.critical_faults.push(i),
            }
            report.hypothesis_met += 1;
            if tight {
                report.tight += 1;
            }
        }
    }
    Ok(report)
}
