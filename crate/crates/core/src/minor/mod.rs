//! Exact clique- and biclique-minor detection with checkable certificates.

mod bounds;
pub mod oracle;
mod search;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

pub use bounds::{edge_bound_report, mader_exact_form, thomason_constant, EdgeBoundReport};
pub use search::{hadwiger_number, has_biclique_minor, has_clique_minor, MINOR_MAX_ORDER};

/// Which minor a certificate witnesses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MinorKind {
    Clique { r: usize },
    /// The first `s` branch sets form one side, the remaining `t` the other.
    Biclique { s: usize, t: usize },
}

/// A minor model: disjoint connected branch sets with the required
/// adjacencies between them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorCertificate {
    #[serde(flatten)]
    pub kind: MinorKind,
    pub branch_sets: Vec<Vec<usize>>,
}

/// Checks every certificate invariant against `g` directly from the
/// adjacency relation. Returns `false` on any malformed input.
pub fn verify_certificate(g: &Graph, c: &MinorCertificate) -> bool {
    let n = g.order();
    let sets = &c.branch_sets;
    let expected = match c.kind {
        MinorKind::Clique { r } => r,
        MinorKind::Biclique { s, t } => s + t,
    };
    if sets.len() != expected || sets.iter().any(|s| s.is_empty()) {
        return false;
    }
    let mut owner = vec![usize::MAX; n];
    for (i, set) in sets.iter().enumerate() {
        for &v in set {
            if v >= n || owner[v] != usize::MAX {
                return false;
            }
            owner[v] = i;
        }
    }
    for set in sets {
        let mut seen = vec![set[0]];
        let mut k = 0;
        while k < seen.len() {
            let u = seen[k];
            k += 1;
            for &w in set {
                if !seen.contains(&w) && g.has_edge(u, w) {
                    seen.push(w);
                }
            }
        }
        if seen.len() != set.len() {
            return false;
        }
    }
    let touching = |a: &[usize], b: &[usize]| a.iter().any(|&u| b.iter().any(|&w| g.has_edge(u, w)));
    match c.kind {
        MinorKind::Clique { r } => {
            (0..r).all(|i| (i + 1..r).all(|j| touching(&sets[i], &sets[j])))
        }
        MinorKind::Biclique { s, t } => {
            (0..s).all(|i| (s..s + t).all(|j| touching(&sets[i], &sets[j])))
        }
    }
}
