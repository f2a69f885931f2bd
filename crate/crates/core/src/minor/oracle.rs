//! Naive reference for differential testing of the branch-set search.
//!
//! Explores every graph reachable from the input by edge contractions,
//! memoized on canonical codes, and looks for the target as a subgraph.
//! A graph has an `H` minor iff some contraction of it contains `H` as a
//! subgraph, so this is exact. It shares nothing with the search code.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{canonical_code, Graph, CANON_MAX_ORDER};

/// Largest order the oracle accepts.
pub const ORACLE_MAX_ORDER: usize = CANON_MAX_ORDER;

fn contract(g: &Graph, keep: usize, drop: usize) -> Graph {
    let n = g.order();
    let rows: Vec<u64> = g.rows().to_vec();
    let squeeze = |row: u64| -> u64 {
        let low = row & ((1u64 << drop) - 1);
        let high = (row >> (drop + 1)) << drop;
        low | high
    };
    let mut out = Vec::with_capacity(n - 1);
    for v in 0..n {
        if v == drop {
            continue;
        }
        let mut row = rows[v];
        if v == keep {
            row |= rows[drop];
        }
        if rows[v] >> drop & 1 == 1 {
            row |= 1u64 << keep;
        }
        row &= !(1u64 << v) & !(1u64 << drop);
        out.push(squeeze(row));
    }
    Graph::from_rows(out).expect("contraction preserves simplicity")
}

fn clique_number(g: &Graph) -> usize {
    fn grow(g: &Graph, cand: u64, size: usize, best: &mut usize) {
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        if cand == 0 {
            *best = size;
            return;
        }
        let v = cand.trailing_zeros() as usize;
        grow(g, cand & g.rows()[v], size + 1, best);
        grow(g, cand & !(1u64 << v), size, best);
    }
    let mut best = 0;
    grow(g, g.vertices().0, 0, &mut best);
    best
}

fn contains_biclique(g: &Graph, s: usize, t: usize) -> bool {
    let n = g.order();
    (0u64..1 << n).filter(|a| a.count_ones() as usize == s).any(|a| {
        let common = (0..n)
            .filter(|v| a >> v & 1 == 1)
            .fold(g.vertices().0, |m, v| m & g.rows()[v]);
        (common & !a).count_ones() as usize >= t
    })
}

fn closure_any<F>(g: &Graph, min_order: usize, found: F) -> Result<bool>
where
    F: Fn(&Graph) -> bool,
{
    if g.order() > ORACLE_MAX_ORDER {
        return Err(Error::UnsupportedSize {
            what: "contraction oracle",
            size: g.order(),
            max: ORACLE_MAX_ORDER,
        });
    }
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(canonical_code(g)?);
    queue.push_back(g.clone());
    while let Some(h) = queue.pop_front() {
        if found(&h) {
            return Ok(true);
        }
        if h.order() <= min_order {
            continue;
        }
        for (u, v) in h.edges() {
            let c = contract(&h, u, v);
            if seen.insert(canonical_code(&c)?) {
                queue.push_back(c);
            }
        }
    }
    Ok(false)
}

/// True iff `g` has a `K_r` minor.
pub fn clique_minor_oracle(g: &Graph, r: usize) -> Result<bool> {
    closure_any(g, r, |h| clique_number(h) >= r)
}

/// True iff `g` has a `K_{s,t}` minor.
pub fn biclique_minor_oracle(g: &Graph, s: usize, t: usize) -> Result<bool> {
    closure_any(g, s + t, |h| contains_biclique(h, s, t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph6;

    #[test]
    fn contraction_of_path_end() {
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let c = contract(&p3, 1, 2);
        assert_eq!(c, Graph::complete(2).unwrap());
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(contract(&c4, 0, 1), Graph::complete(3).unwrap());
    }

    #[test]
    fn known_answers() {
        let petersen = parse_graph6("IheA@GUAo").unwrap();
        assert!(clique_minor_oracle(&petersen, 5).unwrap());
        assert!(!clique_minor_oracle(&petersen, 6).unwrap());
        let c5 = Graph::from_edges(5, (0..5).map(|v| (v, (v + 1) % 5))).unwrap();
        assert!(clique_minor_oracle(&c5, 3).unwrap());
        assert!(!clique_minor_oracle(&c5, 4).unwrap());
        assert!(biclique_minor_oracle(&c5, 1, 2).unwrap());
        assert!(biclique_minor_oracle(&c5, 2, 2).unwrap());
        assert!(!biclique_minor_oracle(&c5, 2, 3).unwrap());
        let star = Graph::from_edges(5, (1..5).map(|v| (0, v))).unwrap();
        assert!(biclique_minor_oracle(&star, 1, 4).unwrap());
        assert!(!biclique_minor_oracle(&star, 2, 2).unwrap());
        assert_eq!(clique_number(&Graph::empty(3).unwrap()), 1);
    }
}
