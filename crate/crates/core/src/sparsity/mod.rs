//! Maximum average degree, degeneracy, and the charge algebra behind the
//! `Mad(G) < 2k(1 - k/(t+1))` choosability bound.

mod charges;
pub mod flow;

pub use charges::{verify_mad_charges, ChargeCheck, ChargeReport};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::Rational;
use flow::FlowNetwork;

/// `Mad(G)` with a vertex set whose induced subgraph attains it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MadResult {
    pub value: Rational,
    pub witness: Vec<usize>,
}

/// Edges of `g` with both ends in `set`.
pub fn induced_edge_count(g: &Graph, set: &[usize]) -> usize {
    let mut inside = vec![false; g.n()];
    for &v in set {
        inside[v] = true;
    }
    g.edges().filter(|&(u, v)| inside[u] && inside[v]).count()
}

fn density_value(g: &Graph, set: &[usize]) -> Rational {
    Rational::new(2 * induced_edge_count(g, set) as i64, set.len() as i64)
}

/// A vertex set `S` maximizing `e(S) - guess·|S|`, if that maximum is
/// positive, i.e. if some subgraph has `e/n > guess`.
fn denser_than(g: &Graph, guess: Rational) -> Option<Vec<usize>> {
    let n = g.n();
    let m = g.m() as i64;
    let (p, q) = (*guess.numer(), *guess.denom());
    let (s, t) = (n, n + 1);
    let mut net = FlowNetwork::new(n + 2);
    for v in 0..n {
        let d = g.neighbors(v).len() as i64;
        net.add_arc(s, v, m * q);
        net.add_arc(v, t, m * q + 2 * p - d * q);
        for &w in g.neighbors(v) {
            net.add_arc(v, w, q);
        }
    }
    // cut(S) = m·q·n + 2(p·|S| - q·e(S))
    if net.max_flow(s, t) >= m * q * n as i64 {
        return None;
    }
    let side = net.source_side(s);
    let set: Vec<usize> = (0..n).filter(|&v| side[v]).collect();
    debug_assert!(!set.is_empty());
    Some(set)
}

/// Exact `Mad(G)` by binary search on the densest-subgraph ratio, each step a
/// minimum cut. Two different ratios `e/n` with `n <= |V|` differ by at least
/// `1/(|V|(|V|-1))`, so once the search interval is narrower than that the
/// last subgraph found is optimal.
pub fn mad_exact(g: &Graph) -> Result<MadResult> {
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if g.m() == 0 {
        return Ok(MadResult {
            value: Rational::from(0),
            witness: vec![0],
        });
    }
    // Invariant: optimum ratio in (lo, hi], `best` has ratio in (lo, optimum].
    let mut lo = Rational::from(0);
    let mut hi = Rational::new(n as i64, 2);
    let mut best = denser_than(g, lo).expect("a graph with an edge has positive density");
    let gap = Rational::new(1, (n * (n - 1)) as i64);
    while hi - lo >= gap {
        let mid = (lo + hi) / 2;
        match denser_than(g, mid) {
            Some(set) => {
                lo = mid;
                best = set;
            }
            None => hi = mid,
        }
    }
    Ok(MadResult {
        value: density_value(g, &best),
        witness: best,
    })
}

/// Exact `Mad(G)` by checking every nonempty vertex subset.
pub fn mad_bruteforce(g: &Graph) -> Result<MadResult> {
    const LIMIT: usize = 20;
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > LIMIT {
        return Err(Error::TooLarge { n, limit: LIMIT });
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0, |acc, &w| acc | 1 << w))
        .collect();
    let (mut best_mask, mut best_e, mut best_size) = (1u32, 0u64, 1u64);
    for mask in 1u32..1 << n {
        let size = mask.count_ones() as u64;
        let twice_e: u64 = (0..n)
            .filter(|&v| mask >> v & 1 == 1)
            .map(|v| (adj[v] & mask).count_ones() as u64)
            .sum();
        let e = twice_e / 2;
        if e * best_size > best_e * size {
            (best_mask, best_e, best_size) = (mask, e, size);
        }
    }
    Ok(MadResult {
        value: Rational::new(2 * best_e as i64, best_size as i64),
        witness: (0..n).filter(|&v| best_mask >> v & 1 == 1).collect(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Degeneracy {
    /// Every vertex was removed at degree `< k`, in this order.
    Order(Vec<usize>),
    /// Peeling stopped; every vertex of `core` has degree `>= k` inside it.
    Stuck {
        removed: Vec<usize>,
        core: Vec<usize>,
    },
}

/// Repeatedly removes a minimum-degree vertex (lowest id on ties) while its
/// degree is below `k`.
pub fn degeneracy_order(g: &Graph, k: usize) -> Degeneracy {
    let n = g.n();
    let mut deg: Vec<usize> = g.degrees().collect();
    let mut alive = vec![true; n];
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let v = (0..n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| (deg[v], v))
            .unwrap();
        if deg[v] >= k {
            let core = (0..n).filter(|&v| alive[v]).collect();
            return Degeneracy::Stuck {
                removed: order,
                core,
            };
        }
        alive[v] = false;
        order.push(v);
        for &w in g.neighbors(v) {
            if alive[w] {
                deg[w] -= 1;
            }
        }
    }
    Degeneracy::Order(order)
}

/// The degeneracy: the largest degree seen when peeling minimum-degree
/// vertices.
pub fn degeneracy(g: &Graph) -> usize {
    let mut d = 0;
    while let Degeneracy::Stuck { .. } = degeneracy_order(g, d + 1) {
        d += 1;
    }
    d
}
