#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use unionsep::{Graph, ListAssignment, Rational};

/// Tries every combination of one color per list, nothing clever.
pub fn oracle_colorable(g: &Graph, lists: &[Vec<usize>]) -> bool {
    let n = g.n();
    if lists.iter().any(|l| l.is_empty()) {
        return false;
    }
    let mut idx = vec![0usize; n];
    loop {
        let proper = g
            .edges()
            .all(|(u, v)| lists[u][idx[u]] != lists[v][idx[v]]);
        if proper {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            idx[i] += 1;
            if idx[i] < lists[i].len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}

/// Densest induced subgraph by trying every nonempty vertex subset.
pub fn oracle_mad(g: &Graph) -> Rational {
    let n = g.n();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut best = Rational::from(0);
    for mask in 1u32..(1 << n) {
        let e = edges
            .iter()
            .filter(|&&(u, v)| mask >> u & 1 == 1 && mask >> v & 1 == 1)
            .count();
        let r = Rational::new(2 * e as i64, mask.count_ones() as i64);
        if r > best {
            best = r;
        }
    }
    best
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Every labeled graph on `n` vertices.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e);
            Graph::new(n, edges).unwrap()
        })
        .collect()
}

pub fn random_lists(rng: &mut impl Rng, n: usize, max_size: usize, universe: usize) -> Vec<Vec<usize>> {
    (0..n)
        .map(|_| {
            let size = rng.gen_range(1..=max_size.min(universe));
            let mut colors: Vec<usize> = (0..universe).collect();
            colors.shuffle(rng);
            colors.truncate(size);
            colors.sort_unstable();
            colors
        })
        .collect()
}

pub fn to_assignment(lists: &[Vec<usize>], universe: usize) -> ListAssignment {
    ListAssignment::new(lists.iter().map(|l| l.iter().copied()), Some(universe)).unwrap()
}

pub fn random_perm(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}
