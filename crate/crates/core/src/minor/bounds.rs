//! Edge-count bounds for `K_r`-minor-free graphs.

use serde::Serialize;

use crate::error::{domain, Result};
use crate::graph::Graph;

/// `(r−2)n − C(r−1, 2)`: the size of `K_{r−2} ∨ (n−r+2)K₁`, which is the
/// maximum size of a `K_r`-minor-free graph for `r ≤ 7` and `n ≥ r − 2`.
pub fn mader_exact_form(r: usize, n: usize) -> i64 {
    let (r, n) = (r as i64, n as i64);
    (r - 2) * n - (r - 1) * (r - 2) / 2
}

/// `4^r (r−1)! (r−1)`: the bipartite-part constant obtained from the
/// `K_{s,t}`-minor-free bipartite bound at `s = t = r − 1`.
pub fn thomason_constant(r: usize) -> f64 {
    let fact: f64 = (1..r).map(|k| k as f64).product();
    4f64.powi(r as i32) * fact * (r as f64 - 1.0)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EdgeBoundReport {
    pub r: usize,
    pub n: usize,
    pub e: usize,
    /// Observed `e(G)/n`: the least `C` with `e(G) ≤ C n` for this graph.
    pub mader_linear_bound: f64,
    /// `(r−2)n − C(r−1,2)`, present for `r ≤ 7`.
    pub mader_exact_form: Option<f64>,
    pub mader_exact_ok: Option<bool>,
    /// `(r−2)n + C k` with `k` the smaller side, present when `g` is bipartite.
    pub bipartite_bound: Option<f64>,
    pub bipartite_ok: Option<bool>,
}

pub fn edge_bound_report(g: &Graph, r: usize) -> Result<EdgeBoundReport> {
    if r < 3 {
        return Err(domain(format!("edge bounds need r >= 3, got {r}")));
    }
    let n = g.order();
    let e = g.size();
    let mader = (r <= 7).then(|| mader_exact_form(r, n) as f64);
    let bipartite = g.bipartition().map(|(a, b)| {
        let k = a.len().min(b.len());
        (r as f64 - 2.0) * n as f64 + thomason_constant(r) * k as f64
    });
    Ok(EdgeBoundReport {
        r,
        n,
        e,
        mader_linear_bound: e as f64 / n as f64,
        mader_exact_form: mader,
        mader_exact_ok: mader.map(|m| e as f64 <= m),
        bipartite_bound: bipartite,
        bipartite_ok: bipartite.map(|b| e as f64 <= b),
    })
}
