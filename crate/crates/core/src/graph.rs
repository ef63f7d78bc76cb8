//! Immutable simple undirected graphs on dense vertex ids `0..n`.
//!
//! Every mutation-like operation returns a fresh [`Graph`]; the reducibility
//! checks hold `G`, `G - u`, `G - v` and `G - uv` at the same time.

use crate::error::{Error, Result};
use crate::Rational;

/// A simple undirected graph. Neighbor lists are kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops, repeated edges and
    /// out-of-range endpoints.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        let mut m = 0;
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if adj[u].contains(&v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            adj[u].push(v);
            adj[v].push(u);
            m += 1;
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { adj, m })
    }

    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    fn check(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check(v)?;
        Ok(self.adj[v].len())
    }

    /// Sorted neighbors of `v`. Panics if `v` is out of range.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.adj.iter().map(Vec::len)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// `|N(u) ∩ N(v)|`.
    pub fn common_neighbor_count(&self, u: usize, v: usize) -> Result<usize> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(Error::SameVertex(u));
        }
        let (a, b) = (&self.adj[u], &self.adj[v]);
        let (mut i, mut j, mut count) = (0, 0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    count += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        Ok(count)
    }

    /// `G - v`. Vertices above `v` shift down by one; the returned map sends
    /// each old id to its new id (`None` for `v`).
    pub fn delete_vertex(&self, v: usize) -> Result<(Graph, Vec<Option<usize>>)> {
        self.check(v)?;
        let keep: Vec<usize> = (0..self.n()).filter(|&w| w != v).collect();
        Ok(self.induced_subgraph(&keep))
    }

    /// `G - uv`; vertex ids are unchanged.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check(u)?;
        self.check(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::MissingEdge(u, v));
        }
        let mut g = self.clone();
        g.adj[u].retain(|&w| w != v);
        g.adj[v].retain(|&w| w != u);
        g.m -= 1;
        Ok(g)
    }

    /// `G + uv`.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        let mut g = self.clone();
        for (a, b) in [(u, v), (v, u)] {
            let pos = g.adj[a].binary_search(&b).unwrap_err();
            g.adj[a].insert(pos, b);
        }
        g.m += 1;
        Ok(g)
    }

    /// Subgraph induced by `keep` (order preserved: `keep[i]` becomes `i`).
    pub fn induced_subgraph(&self, keep: &[usize]) -> (Graph, Vec<Option<usize>>) {
        let mut map = vec![None; self.n()];
        for (i, &w) in keep.iter().enumerate() {
            map[w] = Some(i);
        }
        let mut adj = vec![Vec::new(); keep.len()];
        let mut m = 0;
        for (i, &w) in keep.iter().enumerate() {
            adj[i] = self.adj[w].iter().filter_map(|&x| map[x]).collect();
            adj[i].sort_unstable();
            m += adj[i].len();
        }
        (Graph { adj, m: m / 2 }, map)
    }

    /// Applies `perm` (old id -> new id), which must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n());
        let edges = self.edges().map(|(u, v)| (perm[u], perm[v]));
        Graph::new(self.n(), edges).expect("relabeling preserves simplicity")
    }

    /// Exact `2m / n`.
    pub fn average_degree(&self) -> Result<Rational> {
        if self.n() == 0 {
            return Err(Error::EmptyGraph);
        }
        Ok(Rational::new(2 * self.m as i64, self.n() as i64))
    }

    /// Two-coloring of the vertices if the graph is bipartite.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut side: Vec<Option<bool>> = vec![None; self.n()];
        for s in 0..self.n() {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                let su = side[u].unwrap();
                for &w in &self.adj[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            stack.push(w);
                        }
                        Some(sw) if sw == su => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(Option::unwrap).collect())
    }

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::new(n, edges).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least 3 vertices");
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    /// `K_{1,leaves}` with center 0.
    pub fn star(leaves: usize) -> Graph {
        Graph::new(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
    }

    /// `K_{a,b}`: sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
        Graph::new(a + b, edges).unwrap()
    }

    pub fn petersen() -> Graph {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Graph::new(10, outer.chain(spokes).chain(inner)).unwrap()
    }

    /// The icosahedron: 12 vertices, 30 edges, 5-regular.
    pub fn icosahedron() -> Graph {
        // 0 = top, 1..=5 upper ring, 6..=10 lower ring, 11 = bottom.
        let mut edges = Vec::with_capacity(30);
        for i in 0..5 {
            let up = 1 + i;
            let up_next = 1 + (i + 1) % 5;
            let low = 6 + i;
            let low_next = 6 + (i + 1) % 5;
            edges.extend([
                (0, up),
                (up, up_next),
                (up, low),
                (up_next, low),
                (low, low_next),
                (low, 11),
            ]);
        }
        Graph::new(12, edges).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrees_of_small_graphs() {
        let k5 = Graph::complete(5);
        assert!((0..5).all(|v| k5.degree(v).unwrap() == 4));
        assert_eq!(Graph::empty(1).degree(0).unwrap(), 0);
        assert!(matches!(
            k5.degree(5),
            Err(Error::VertexOutOfRange { vertex: 5, n: 5 })
        ));
    }

    #[test]
    fn common_neighbors() {
        assert_eq!(Graph::complete(3).common_neighbor_count(0, 1).unwrap(), 1);
        assert_eq!(Graph::cycle(5).common_neighbor_count(0, 1).unwrap(), 0);
        assert_eq!(Graph::complete(4).common_neighbor_count(2, 3).unwrap(), 2);
        assert_eq!(
            Graph::complete(4).common_neighbor_count(2, 2),
            Err(Error::SameVertex(2))
        );
    }

    #[test]
    fn deletions() {
        let k3 = Graph::complete(3);
        let p3 = k3.delete_edge(0, 2).unwrap();
        assert_eq!(p3, Graph::path(3));
        let (k2, map) = k3.delete_vertex(1).unwrap();
        assert_eq!(k2, Graph::complete(2));
        assert_eq!(map, vec![Some(0), None, Some(1)]);
        let (isolated, _) = Graph::star(4).delete_vertex(0).unwrap();
        assert_eq!(isolated, Graph::empty(4));
        assert_eq!(p3.delete_edge(0, 2), Err(Error::MissingEdge(0, 2)));
    }

    #[test]
    fn rejects_malformed_edges() {
        assert_eq!(Graph::new(2, [(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(
            Graph::new(2, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert!(Graph::new(2, [(0, 2)]).is_err());
    }

    #[test]
    fn average_degrees() {
        assert_eq!(Graph::cycle(6).average_degree().unwrap(), Rational::from(2));
        assert_eq!(Graph::complete(5).average_degree().unwrap(), Rational::from(4));
        assert_eq!(Graph::empty(0).average_degree(), Err(Error::EmptyGraph));
    }

    #[test]
    fn named_graph_sizes() {
        let p = Graph::petersen();
        assert_eq!((p.n(), p.m()), (10, 15));
        assert!(p.degrees().all(|d| d == 3));
        let ico = Graph::icosahedron();
        assert_eq!((ico.n(), ico.m()), (12, 30));
        assert!(ico.degrees().all(|d| d == 5));
        assert!(Graph::complete_bipartite(2, 4).bipartition().is_some());
        assert!(Graph::cycle(5).bipartition().is_none());
    }
}
