//! The `L/U/V` vertex partition and the rewiring move towards `G[L] ∨ I`.

use serde::Serialize;

use crate::error::{domain, Result};
use crate::graph::{Graph, VertexSet};

/// `U` holds the vertices outside `L` adjacent to all of `L`; `V` the rest.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LUVPartition {
    pub l: VertexSet,
    pub u: VertexSet,
    pub v: VertexSet,
}

pub fn luv_partition(g: &Graph, l: VertexSet) -> Result<LUVPartition> {
    if !l.difference(g.vertices()).is_empty() {
        return Err(domain(format!("{l:?} is not a subset of the vertex set")));
    }
    let rest = g.vertices().difference(l);
    let u: VertexSet = rest
        .iter()
        .filter(|&x| g.neighbors(x).intersection(l) == l)
        .collect();
    Ok(LUVPartition {
        l,
        u,
        v: rest.difference(u),
    })
}

/// Finds an `(r−2)`-set `L` complete to everything else with the rest
/// independent, i.e. `g = G[L] ∨ (n−r+2)K₁`. The first such `L` in
/// colexicographic order is returned.
pub fn structure_check(g: &Graph, r: usize) -> Option<VertexSet> {
    if r < 3 || g.order() < r - 2 {
        return None;
    }
    let k = r - 2;
    let n = g.order();
    let cand: Vec<usize> = (0..n).filter(|&v| g.degree(v) >= n - k).collect();
    if cand.len() < k {
        return None;
    }
    let c = cand.len();
    let mut sel: u64 = (1u64 << k) - 1;
    while sel < (1u64 << c) {
        let l: VertexSet = (0..c).filter(|i| sel >> i & 1 == 1).map(|i| cand[i]).collect();
        let rest = g.vertices().difference(l);
        let ok = rest
            .iter()
            .all(|x| g.neighbors(x).intersection(l) == l && g.neighbors(x).intersection(rest).is_empty());
        if ok {
            return Some(l);
        }
        // next subset of the same size (Gosper)
        let low = sel & sel.wrapping_neg();
        let ripple = sel + low;
        sel = (((ripple ^ sel) >> 2) / low) | ripple;
    }
    None
}

/// Every vertex of `V` drops its edges into `U ∪ V` and is joined to all of
/// `L`. Edges inside `L`, between `L` and `U`, and inside `U` are kept.
pub fn rewire_to_join(g: &Graph, l: VertexSet) -> Result<Graph> {
    let part = luv_partition(g, l)?;
    let mut rows = g.rows().to_vec();
    let outer = part.u.union(part.v);
    for x in part.v {
        for y in g.neighbors(x).intersection(outer) {
            rows[x] &= !(1u64 << y);
            rows[y] &= !(1u64 << x);
        }
        for y in l {
            rows[x] |= 1u64 << y;
            rows[y] |= 1u64 << x;
        }
    }
    Graph::from_rows(rows)
}

/// The `|L|` highest-degree vertices, ties broken by index.
pub fn top_degree_set(g: &Graph, k: usize) -> VertexSet {
    let mut vs: Vec<usize> = (0..g.order()).collect();
    vs.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    vs.into_iter().take(k).collect()
}

/// Structural facts about `U` and `V` satisfied by extremal graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct UvFacts {
    pub u_size: usize,
    pub v_size: usize,
    /// `G[U]` has no edges.
    pub u_independent: bool,
    /// Every vertex of `V` has at most one neighbour in `U`.
    pub v_sparse_to_u: bool,
}

pub fn uv_facts(g: &Graph, part: &LUVPartition) -> UvFacts {
    UvFacts {
        u_size: part.u.len(),
        v_size: part.v.len(),
        u_independent: part.u.iter().all(|x| g.neighbors(x).intersection(part.u).is_empty()),
        v_sparse_to_u: part.v.iter().all(|x| g.neighbors(x).intersection(part.u).len() <= 1),
    }
}
