//! List assignments, separation parameters, colorings, and the validity
//! checks for both separation regimes.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest supported color universe.
pub const MAX_COLORS: usize = 128;

/// A set of colors from `0..MAX_COLORS`, stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorSet(u128);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);

    pub fn from_bits(bits: u128) -> Self {
        ColorSet(bits)
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    pub fn singleton(c: usize) -> Self {
        debug_assert!(c < MAX_COLORS);
        ColorSet(1 << c)
    }

    /// `{0, 1, ..., n-1}`.
    pub fn first_n(n: usize) -> Self {
        debug_assert!(n <= MAX_COLORS);
        if n == MAX_COLORS {
            ColorSet(u128::MAX)
        } else {
            ColorSet((1u128 << n) - 1)
        }
    }

    /// `{lo, ..., hi-1}`.
    pub fn range(lo: usize, hi: usize) -> Self {
        ColorSet(Self::first_n(hi).0 & !Self::first_n(lo).0)
    }

    pub fn insert(&mut self, c: usize) {
        self.0 |= 1 << c;
    }

    pub fn remove(&mut self, c: usize) {
        self.0 &= !(1 << c);
    }

    pub fn with(self, c: usize) -> Self {
        ColorSet(self.0 | 1 << c)
    }

    pub fn without(self, c: usize) -> Self {
        ColorSet(self.0 & !(1 << c))
    }

    pub fn contains(self, c: usize) -> bool {
        c < MAX_COLORS && self.0 >> c & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 | other.0)
    }

    pub fn intersection(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 & other.0)
    }

    pub fn difference(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: ColorSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn last(self) -> Option<usize> {
        (self.0 != 0).then(|| 127 - self.0.leading_zeros() as usize)
    }

    /// Colors in increasing order.
    pub fn iter(self) -> ColorIter {
        ColorIter(self.0)
    }
}

impl FromIterator<usize> for ColorSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ColorSet::EMPTY;
        for c in iter {
            s.insert(c);
        }
        s
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct ColorIter(u128);

impl Iterator for ColorIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let c = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(c)
    }
}

/// A color list for every vertex, over the universe `0..universe`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ListAssignment {
    lists: Vec<ColorSet>,
    universe: usize,
}

impl ListAssignment {
    /// Builds an assignment. When `universe` is `None` it is one more than the
    /// largest color used.
    pub fn new<L, I>(lists: L, universe: Option<usize>) -> Result<Self>
    where
        L: IntoIterator<Item = I>,
        I: IntoIterator<Item = usize>,
    {
        let mut sets = Vec::new();
        let mut max_color = None;
        for list in lists {
            let mut set = ColorSet::EMPTY;
            for c in list {
                if c >= MAX_COLORS {
                    return Err(Error::ColorOutOfRange {
                        color: c,
                        universe: universe.unwrap_or(MAX_COLORS).min(MAX_COLORS),
                    });
                }
                set.insert(c);
                max_color = max_color.max(Some(c));
            }
            sets.push(set);
        }
        Self::from_sets(sets, universe.or(max_color.map(|c| c + 1)))
    }

    pub fn from_sets(lists: Vec<ColorSet>, universe: Option<usize>) -> Result<Self> {
        let inferred = lists
            .iter()
            .filter_map(|s| s.last())
            .max()
            .map_or(0, |c| c + 1);
        let universe = universe.unwrap_or(inferred);
        if universe > MAX_COLORS {
            return Err(Error::ColorOutOfRange {
                color: universe - 1,
                universe: MAX_COLORS,
            });
        }
        for (v, s) in lists.iter().enumerate() {
            if s.is_empty() {
                return Err(Error::EmptyList(v));
            }
            if let Some(c) = s.last().filter(|&c| c >= universe) {
                return Err(Error::ColorOutOfRange { color: c, universe });
            }
        }
        Ok(ListAssignment { lists, universe })
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn list(&self, v: usize) -> ColorSet {
        self.lists[v]
    }

    pub fn lists(&self) -> &[ColorSet] {
        &self.lists
    }

    /// Lists of the vertices that survive a deletion, using the id map
    /// returned by [`Graph::delete_vertex`] or [`Graph::induced_subgraph`].
    pub fn restrict(&self, map: &[Option<usize>]) -> ListAssignment {
        let kept = map.iter().filter(|m| m.is_some()).count();
        let mut lists = vec![ColorSet::EMPTY; kept];
        for (old, new) in map.iter().enumerate() {
            if let Some(new) = new {
                lists[*new] = self.lists[old];
            }
        }
        ListAssignment {
            lists,
            universe: self.universe,
        }
    }

    /// Lists moved along the vertex permutation `perm` (old id -> new id).
    pub fn relabel(&self, perm: &[usize]) -> ListAssignment {
        let mut lists = vec![ColorSet::EMPTY; self.len()];
        for (old, &new) in perm.iter().enumerate() {
            lists[new] = self.lists[old];
        }
        ListAssignment {
            lists,
            universe: self.universe,
        }
    }

    /// Replaces one list, growing the universe if needed.
    pub fn with_list(&self, v: usize, list: ColorSet) -> Result<ListAssignment> {
        let mut lists = self.lists.clone();
        lists[v] = list;
        let universe = list.last().map_or(self.universe, |c| self.universe.max(c + 1));
        Self::from_sets(lists, Some(universe))
    }
}

/// Which edge condition a `(k, t)` pair imposes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// `t <= k`: adjacent lists share at most `t` colors.
    Intersection,
    /// `t > k`: adjacent lists cover at least `t` colors together.
    Union,
}

/// The pair `(k, t)`. At `t = k` both edge conditions hold for every
/// `k`-assignment, so the intersection flag is used without loss.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SeparationParams {
    pub k: usize,
    pub t: usize,
}

impl SeparationParams {
    pub fn new(k: usize, t: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParams("k must be at least 1".into()));
        }
        Ok(SeparationParams { k, t })
    }

    pub fn regime(&self) -> Regime {
        if self.t <= self.k {
            Regime::Intersection
        } else {
            Regime::Union
        }
    }

    /// The separation `s = |t - k|`.
    pub fn s(&self) -> usize {
        self.t.abs_diff(self.k)
    }

    /// Whether an edge with these two lists meets the edge condition.
    pub fn edge_ok(&self, a: ColorSet, b: ColorSet) -> bool {
        match self.regime() {
            Regime::Union => a.union(b).len() >= self.t,
            Regime::Intersection => a.intersection(b).len() <= self.t,
        }
    }
}

impl fmt::Display for SeparationParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.k, self.t)
    }
}

/// First reason a list assignment is not a `(k, t)`-list assignment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AssignmentViolation {
    Coverage { lists: usize, n: usize },
    ListTooSmall { vertex: usize, size: usize },
    /// `measure` is the union size (union regime) or intersection size.
    Edge { u: usize, v: usize, measure: usize },
}

impl fmt::Display for AssignmentViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Coverage { lists, n } => write!(f, "{lists} lists for {n} vertices"),
            Self::ListTooSmall { vertex, size } => write!(f, "vertex {vertex} has list size {size}"),
            Self::Edge { u, v, measure } => write!(f, "edge {u}-{v} has measure {measure}"),
        }
    }
}

/// Checks `|L(v)| >= k` everywhere and the regime's edge condition on every
/// edge, reporting the first failure (vertices first, then edges in order).
pub fn is_valid_assignment(
    g: &Graph,
    lists: &ListAssignment,
    p: SeparationParams,
) -> std::result::Result<(), AssignmentViolation> {
    if lists.len() != g.n() {
        return Err(AssignmentViolation::Coverage {
            lists: lists.len(),
            n: g.n(),
        });
    }
    for v in 0..g.n() {
        let size = lists.list(v).len();
        if size < p.k {
            return Err(AssignmentViolation::ListTooSmall { vertex: v, size });
        }
    }
    for (u, v) in g.edges() {
        let (a, b) = (lists.list(u), lists.list(v));
        if !p.edge_ok(a, b) {
            let measure = match p.regime() {
                Regime::Union => a.union(b).len(),
                Regime::Intersection => a.intersection(b).len(),
            };
            return Err(AssignmentViolation::Edge { u, v, measure });
        }
    }
    Ok(())
}

/// One chosen color per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring(pub Vec<usize>);

impl Coloring {
    pub fn color(&self, v: usize) -> usize {
        self.0[v]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColoringViolation {
    Coverage { colored: usize, n: usize },
    NotInList { vertex: usize, color: usize },
    Conflict { u: usize, v: usize },
}

/// Checks `c(v) ∈ L(v)` for all `v` and `c(u) != c(v)` on every edge.
pub fn is_proper_coloring(
    g: &Graph,
    lists: &ListAssignment,
    c: &Coloring,
) -> std::result::Result<(), ColoringViolation> {
    if c.0.len() != g.n() || lists.len() != g.n() {
        return Err(ColoringViolation::Coverage {
            colored: c.0.len(),
            n: g.n(),
        });
    }
    for (v, &color) in c.0.iter().enumerate() {
        if !lists.list(v).contains(color) {
            return Err(ColoringViolation::NotInList { vertex: v, color });
        }
    }
    match g.edges().find(|&(u, v)| c.0[u] == c.0[v]) {
        Some((u, v)) => Err(ColoringViolation::Conflict { u, v }),
        None => Ok(()),
    }
}
