//! Immutable simple graphs on at most [`MAX_ORDER`] vertices.
//!
//! Adjacency is stored as one `u64` bitrow per vertex, so vertex subsets are
//! plain bitmasks ([`VertexSet`]) and most set operations are a handful of
//! word instructions.

mod canon;
mod family;
mod graph6;
mod sets;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};

pub use canon::{canonical_code, canonical_labeling, CanonicalCode, CANON_MAX_ORDER};
pub use family::{make_family, FamilySpec};
pub use graph6::{emit_graph6, parse_graph6, GRAPH6_HEADER};
pub use sets::intersection_lower_bound;

/// Largest supported vertex count (single-byte graph6 size field).
pub const MAX_ORDER: usize = 62;

/// A set of vertex indices, stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> Self {
        VertexSet(vs.into_iter().fold(0u64, |m, v| m | (1u64 << v)))
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vertices(iter)
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

/// A simple undirected graph with vertices `0..n`, `1 <= n <= 62`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph `nK1`.
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Self> {
        check_order(n)?;
        let full = VertexSet::full(n).0;
        let adj = (0..n).map(|v| full & !(1u64 << v)).collect();
        Ok(Graph { n, adj })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        check_order(n)?;
        let mut adj = vec![0u64; n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(domain(format!("edge ({u},{v}) out of range for n={n}")));
            }
            if u == v {
                return Err(domain(format!("loop at vertex {u}")));
            }
            adj[u] |= 1u64 << v;
            adj[v] |= 1u64 << u;
        }
        Ok(Graph { n, adj })
    }

    /// Builds a graph from adjacency bitrows, validating symmetry and an
    /// empty diagonal.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        check_order(n)?;
        let outside = !VertexSet::full(n).0;
        for (v, &row) in rows.iter().enumerate() {
            if row & outside != 0 {
                return Err(domain(format!("row {v} references vertices >= {n}")));
            }
            if row >> v & 1 == 1 {
                return Err(domain(format!("loop at vertex {v}")));
            }
            for u in VertexSet(row) {
                if rows[u] >> v & 1 == 0 {
                    return Err(domain(format!("asymmetric adjacency between {v} and {u}")));
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    /// Rows already known to be valid.
    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Self {
        debug_assert!(Graph::from_rows(rows.clone()).is_ok());
        Graph {
            n: rows.len(),
            adj: rows,
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges `e(G)`.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            VertexSet(self.adj[u] & !((2u64 << u) - 1))
                .iter()
                .map(move |v| (u, v))
        })
    }

    /// Union of neighbourhoods of the members of `set`.
    pub fn neighborhood(&self, set: VertexSet) -> VertexSet {
        VertexSet(set.iter().fold(0, |m, v| m | self.adj[v]))
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.check_pair(u, v)?;
        let mut adj = self.adj.clone();
        adj[u] |= 1u64 << v;
        adj[v] |= 1u64 << u;
        Ok(Graph { n: self.n, adj })
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.check_pair(u, v)?;
        let mut adj = self.adj.clone();
        adj[u] &= !(1u64 << v);
        adj[v] &= !(1u64 << u);
        Ok(Graph { n: self.n, adj })
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n || u == v {
            return Err(domain(format!("invalid vertex pair ({u},{v}) for n={}", self.n)));
        }
        Ok(())
    }

    /// Subgraph induced by `set`; vertices are renumbered in ascending order.
    pub fn induced(&self, set: VertexSet) -> Result<Self> {
        let vs = set.intersection(self.vertices()).to_vec();
        check_order(vs.len())?;
        let rows = vs
            .iter()
            .map(|&u| {
                vs.iter()
                    .enumerate()
                    .filter(|&(_, &w)| self.has_edge(u, w))
                    .fold(0u64, |m, (j, _)| m | (1u64 << j))
            })
            .collect();
        Ok(Graph::from_rows_unchecked(rows))
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n || VertexSet::from_vertices(perm.iter().copied()) != self.vertices()
        {
            return Err(domain("relabeling is not a permutation of the vertex set"));
        }
        let mut adj = vec![0u64; self.n];
        for (u, v) in self.edges() {
            adj[perm[u]] |= 1u64 << perm[v];
            adj[perm[v]] |= 1u64 << perm[u];
        }
        Ok(Graph { n: self.n, adj })
    }

    pub fn complement(&self) -> Self {
        let full = self.vertices().0;
        let adj = (0..self.n)
            .map(|v| !self.adj[v] & full & !(1u64 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Vertices reachable from `start` using only vertices of `within`.
    pub fn reach(&self, start: VertexSet, within: VertexSet) -> VertexSet {
        let mut seen = start.intersection(within);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = self.neighborhood(frontier).intersection(within).difference(seen);
            seen = seen.union(next);
            frontier = next;
        }
        seen
    }

    /// True if `set` is nonempty and induces a connected subgraph.
    pub fn is_connected_set(&self, set: VertexSet) -> bool {
        match set.first() {
            None => false,
            Some(v) => self.reach(VertexSet::singleton(v), set) == set,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_set(self.vertices())
    }

    /// Connected components, each as a vertex set, ordered by least vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = left.first() {
            let c = self.reach(VertexSet::singleton(v), left);
            left = left.difference(c);
            out.push(c);
        }
        out
    }

    /// A 2-colouring `(side0, side1)` when the graph is bipartite. Each
    /// component's least vertex lands in `side0`.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let mut side = [VertexSet::EMPTY; 2];
        for comp in self.components() {
            let mut layer = VertexSet::singleton(comp.first().unwrap());
            let mut seen = layer;
            let mut parity = 0;
            while !layer.is_empty() {
                side[parity] = side[parity].union(layer);
                let next = self.neighborhood(layer).difference(seen);
                seen = seen.union(next);
                layer = next;
                parity ^= 1;
            }
        }
        let ok = (0..2).all(|s| side[s].iter().all(|v| self.neighbors(v).intersection(side[s]).is_empty()));
        ok.then_some((side[0], side[1]))
    }

    /// Dense row-major adjacency matrix.
    pub fn adjacency_matrix(&self) -> Vec<f64> {
        let n = self.n;
        let mut a = vec![0.0; n * n];
        for (u, v) in self.edges() {
            a[u * n + v] = 1.0;
            a[v * n + u] = 1.0;
        }
        a
    }

    /// `G ∨ H`: vertices of `self` first, then those of `other`.
    pub fn join(&self, other: &Graph) -> Result<Self> {
        self.combine(other, true)
    }

    /// `G ∪ H` with no cross edges; block order as in [`Graph::join`].
    pub fn disjoint_union(&self, other: &Graph) -> Result<Self> {
        self.combine(other, false)
    }

    fn combine(&self, other: &Graph, cross: bool) -> Result<Self> {
        let n = self.n + other.n;
        if n > MAX_ORDER {
            return Err(Error::UnsupportedSize {
                what: "combined graph order",
                size: n,
                max: MAX_ORDER,
            });
        }
        let low = VertexSet::full(self.n).0;
        let high = VertexSet::full(n).0 & !low;
        let mut adj = Vec::with_capacity(n);
        adj.extend(self.adj.iter().map(|&r| r | if cross { high } else { 0 }));
        adj.extend(
            other
                .adj
                .iter()
                .map(|&r| (r << self.n) | if cross { low } else { 0 }),
        );
        Ok(Graph { n, adj })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match emit_graph6(self) {
            Ok(s) => write!(f, "Graph({s})"),
            Err(_) => write!(f, "Graph(n={})", self.n),
        }
    }
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        return Err(domain("graphs must have at least one vertex"));
    }
    if n > MAX_ORDER {
        return Err(Error::UnsupportedSize {
            what: "graph order",
            size: n,
            max: MAX_ORDER,
        });
    }
    Ok(())
}
