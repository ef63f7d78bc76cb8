//! Graphs that are not `(k, t)`-choosable, built together with a list
//! assignment that admits no coloring.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::separation::{ListAssignment, SeparationParams};

/// What a vertex is in its construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VertexRole {
    /// Center `u_i` of the book graph (1-based in display).
    Center(usize),
    /// Book vertex `x_A` for the transversal `A`.
    Transversal(Vec<usize>),
    PoleA,
    PoleB,
    /// Interior vertex `v2..=v6` of the gadget copy for colors `(a, b)`.
    Interior { a: usize, b: usize, position: usize },
}

impl fmt::Display for VertexRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Center(i) => write!(f, "u{}", i + 1),
            Self::Transversal(a) => {
                let parts: Vec<String> = a.iter().map(|c| c.to_string()).collect();
                write!(f, "x{{{}}}", parts.join(","))
            }
            Self::PoleA => write!(f, "v_A"),
            Self::PoleB => write!(f, "v_B"),
            Self::Interior { a, b, position } => write!(f, "v{position}[a={a},b={b}]"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ConstructedInstance {
    pub graph: Graph,
    pub lists: ListAssignment,
    pub params: SeparationParams,
    pub labels: Vec<VertexRole>,
    /// Separation the lists were built for. Differs from `params.t` only
    /// when the book construction had to be padded.
    pub built_for_t: usize,
    /// Vertices whose singleton lists stand in for a precoloring.
    pub precolored: Vec<usize>,
}

impl ConstructedInstance {
    pub fn is_padded(&self) -> bool {
        self.built_for_t != self.params.t
    }
}

/// The bipartite book graph: `k` independent centers with disjoint lists of
/// size `t - k + 1`, and one vertex per transversal of those lists, adjacent
/// to every center and listing the transversal's colors.
///
/// For `k <= t < 2k - 1` those center lists would be shorter than `k`; the
/// `t = 2k - 1` instance is built instead, which is also a valid
/// `(k, t)`-assignment, and `built_for_t` records it.
pub fn build_book(k: usize, t: usize) -> Result<ConstructedInstance> {
    if k < 2 {
        return Err(Error::InvalidParams(format!("book graph needs k >= 2, got {k}")));
    }
    if t < k {
        return Err(Error::InvalidParams(format!("book graph needs t >= k, got ({k},{t})")));
    }
    let built = t.max(2 * k - 1);
    let block = built - k + 1;
    let tuples = block
        .checked_pow(k as u32)
        .filter(|&x| x <= 1 << 20)
        .ok_or_else(|| Error::InvalidParams(format!("book graph for ({k},{t}) is too large")))?;
    if k * block > crate::separation::MAX_COLORS {
        return Err(Error::InvalidParams(format!("book graph for ({k},{t}) needs too many colors")));
    }

    let n = k + tuples;
    let mut labels: Vec<VertexRole> = (0..k).map(VertexRole::Center).collect();
    let mut lists: Vec<Vec<usize>> = (0..k).map(|i| (i * block..(i + 1) * block).collect()).collect();
    let mut edges = Vec::with_capacity(k * tuples);
    for index in 0..tuples {
        // digits of `index` in base `block`, first center most significant
        let mut rest = index;
        let mut choice = vec![0; k];
        for i in (0..k).rev() {
            choice[i] = rest % block;
            rest /= block;
        }
        let colors: Vec<usize> = choice.iter().enumerate().map(|(i, &d)| i * block + d).collect();
        let x = k + index;
        edges.extend((0..k).map(|i| (i, x)));
        lists.push(colors.clone());
        labels.push(VertexRole::Transversal(colors));
    }
    let graph = Graph::new(n, edges)?;
    Ok(ConstructedInstance {
        graph,
        lists: ListAssignment::new(lists, Some(k * block))?,
        params: SeparationParams::new(k, t)?,
        labels,
        built_for_t: built,
        precolored: Vec::new(),
    })
}

/// Edges of one gadget copy in local ids: 0 = `v_A`, 1 = `v_B`, and 2..=6
/// the interior vertices `v2..v6` with lists
/// `v2: a b c4 c1`, `v3: a c1 c2`, `v4: a b c2 c3`, `v5: b c3 c4`,
/// `v6: c1 c2 c3 c4` (the center).
const GADGET_EDGES: [(usize, usize); 14] = [
    (0, 2), // v_A - bottom  {a b c4 c1}
    (0, 3), // v_A - left    {a c1 c2}
    (0, 4), // v_A - top     {a b c2 c3}
    (1, 2), // v_B - bottom
    (1, 4), // v_B - top
    (1, 5), // v_B - right   {b c3 c4}
    (2, 3), // bottom - left
    (2, 6), // bottom - center
    (3, 6), // left - center
    (4, 5), // top - right
    (4, 6), // top - center
    (5, 6), // right - center
    (2, 5), // bottom - right
    (3, 4), // left - top
];

fn gadget_lists(a: usize, b: usize, c: [usize; 4]) -> [Vec<usize>; 5] {
    let [c1, c2, c3, c4] = c;
    [
        vec![a, b, c4, c1],
        vec![a, c1, c2],
        vec![a, b, c2, c3],
        vec![b, c3, c4],
        vec![c1, c2, c3, c4],
    ]
}

/// The planar graph on `v_A`, `v_B` and nine gadget copies, one per pair
/// `(a, b)` with `a ∈ A = {0,1,2}` and `b ∈ B = {3,4,5}`; colors 6..=9 are
/// `c1..c4`. 47 vertices, 126 edges, a `(3, 5)`-assignment with no coloring.
pub fn build_gadget35() -> ConstructedInstance {
    let a_colors = [0, 1, 2];
    let b_colors = [3, 4, 5];
    let c = [6, 7, 8, 9];
    let mut labels = vec![VertexRole::PoleA, VertexRole::PoleB];
    let mut lists: Vec<Vec<usize>> = vec![a_colors.to_vec(), b_colors.to_vec()];
    let mut edges = Vec::with_capacity(126);
    for &a in &a_colors {
        for &b in &b_colors {
            let base = lists.len();
            let local = |x: usize| if x < 2 { x } else { base + x - 2 };
            edges.extend(GADGET_EDGES.iter().map(|&(x, y)| (local(x), local(y))));
            for (i, list) in gadget_lists(a, b, c).into_iter().enumerate() {
                lists.push(list);
                labels.push(VertexRole::Interior { a, b, position: i + 2 });
            }
        }
    }
    let graph = Graph::new(lists.len(), edges).expect("gadget edges are simple");
    ConstructedInstance {
        graph,
        lists: ListAssignment::new(lists, Some(10)).expect("gadget lists are nonempty"),
        params: SeparationParams { k: 3, t: 5 },
        labels,
        built_for_t: 5,
        precolored: Vec::new(),
    }
}

/// One gadget copy with `L(v_A) = {a}` and `L(v_B) = {b}` standing in for a
/// precoloring of the poles.
pub fn build_gadget_single(a: usize, b: usize, c: [usize; 4]) -> Result<ConstructedInstance> {
    let all = [a, b, c[0], c[1], c[2], c[3]];
    for (i, x) in all.iter().enumerate() {
        if all[..i].contains(x) {
            return Err(Error::InvalidParams(format!("gadget colors repeat {x}")));
        }
    }
    let mut lists = vec![vec![a], vec![b]];
    lists.extend(gadget_lists(a, b, c));
    let mut labels = vec![VertexRole::PoleA, VertexRole::PoleB];
    labels.extend((2..=6).map(|position| VertexRole::Interior { a, b, position }));
    Ok(ConstructedInstance {
        graph: Graph::new(7, GADGET_EDGES)?,
        lists: ListAssignment::new(lists, None)?,
        params: SeparationParams { k: 3, t: 5 },
        labels,
        built_for_t: 5,
        precolored: vec![0, 1],
    })
}

/// `m <= 3n - 6`, the edge bound every planar graph on `n >= 3` vertices
/// satisfies.
pub fn euler_bound_ok(g: &Graph) -> bool {
    g.n() < 3 || g.m() + 6 <= 3 * g.n()
}
