//! Canonical forms for isomorph rejection at search scale.
//!
//! Individualization-refinement: the ordered partition of the vertex set is
//! refined to an equitable one, then the first non-singleton cell is split
//! by individualizing each of its vertices in turn. Every discrete leaf
//! yields a relabeling; the code is the smallest upper-triangle bitstring
//! over all leaves. Refinement is isomorphism-invariant, so the leaf set of
//! a relabeled graph is the relabeled leaf set. Twins inside the cell being
//! split are explored once, since swapping them is an automorphism fixing
//! the current partition.

use serde::{Deserialize, Serialize};

use super::{Graph, VertexSet};
use crate::error::{Error, Result};

/// Largest order accepted by [`canonical_code`].
pub const CANON_MAX_ORDER: usize = 10;

/// Isomorphism-class key: order plus the canonical upper-triangle bits,
/// pair `(0,1)` in the most significant position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalCode {
    pub n: u8,
    pub bits: u64,
}

impl CanonicalCode {
    /// The bitstring as big-endian bytes, prefixed by the order.
    pub fn to_bytes(&self) -> Vec<u8> {
        let nbits = self.n as usize * (self.n as usize).saturating_sub(1) / 2;
        let nbytes = nbits.div_ceil(8);
        let shifted = if nbits == 0 { 0 } else { self.bits << (64 - nbits) };
        std::iter::once(self.n)
            .chain(shifted.to_be_bytes().into_iter().take(nbytes))
            .collect()
    }
}

pub fn canonical_code(g: &Graph) -> Result<CanonicalCode> {
    canonical_labeling(g).map(|(code, _)| code)
}

/// Returns the canonical code and a labeling `perm` such that
/// `g.relabel(&perm)` has exactly that code.
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalCode, Vec<usize>)> {
    let n = g.order();
    if n > CANON_MAX_ORDER {
        return Err(Error::UnsupportedSize {
            what: "canonical form",
            size: n,
            max: CANON_MAX_ORDER,
        });
    }
    let mut best: Option<(u64, Vec<usize>)> = None;
    search(g, vec![g.vertices()], &mut best);
    let (bits, order) = best.expect("search visits at least one leaf");
    let mut perm = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    Ok((CanonicalCode { n: n as u8, bits }, perm))
}

fn search(g: &Graph, mut cells: Vec<VertexSet>, best: &mut Option<(u64, Vec<usize>)>) {
    refine(g, &mut cells);
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c.first().unwrap()).collect();
        let code = code_for_order(g, &order);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            *best = Some((code, order));
        }
        return;
    };
    let cell = cells[target];
    let mut tried: Vec<usize> = Vec::new();
    for v in cell {
        let nv = g.neighbors(v).difference(VertexSet::singleton(v));
        let twin = tried.iter().any(|&u| {
            g.neighbors(u).difference(VertexSet::singleton(v))
                == nv.difference(VertexSet::singleton(u))
        });
        if twin {
            continue;
        }
        tried.push(v);
        let mut next = Vec::with_capacity(cells.len() + 1);
        next.extend_from_slice(&cells[..target]);
        next.push(VertexSet::singleton(v));
        next.push(cell.difference(VertexSet::singleton(v)));
        next.extend_from_slice(&cells[target + 1..]);
        search(g, next, best);
    }
}

/// Splits cells by neighbour counts into splitter cells until the ordered
/// partition is equitable. Fragments are ordered by increasing count.
fn refine(g: &Graph, cells: &mut Vec<VertexSet>) {
    'outer: loop {
        for si in 0..cells.len() {
            let splitter = cells[si];
            let mut out = Vec::with_capacity(cells.len() + 1);
            let mut split = false;
            for &cell in cells.iter() {
                if cell.len() == 1 {
                    out.push(cell);
                    continue;
                }
                let mut buckets: Vec<(usize, VertexSet)> = Vec::new();
                for v in cell {
                    let k = g.neighbors(v).intersection(splitter).len();
                    match buckets.iter_mut().find(|(c, _)| *c == k) {
                        Some((_, s)) => s.insert(v),
                        None => buckets.push((k, VertexSet::singleton(v))),
                    }
                }
                if buckets.len() > 1 {
                    split = true;
                    buckets.sort_by_key(|&(k, _)| k);
                }
                out.extend(buckets.into_iter().map(|(_, s)| s));
            }
            if split {
                *cells = out;
                continue 'outer;
            }
        }
        return;
    }
}

fn code_for_order(g: &Graph, order: &[usize]) -> u64 {
    let mut code = 0u64;
    for j in 1..order.len() {
        for i in 0..j {
            code = code << 1 | g.has_edge(order[i], order[j]) as u64;
        }
    }
    code
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn relabeling_invariance_on_path() {
        let a = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let b = Graph::from_edges(3, [(1, 0), (0, 2)]).unwrap();
        assert_eq!(canonical_code(&a).unwrap(), canonical_code(&b).unwrap());
        assert_ne!(
            canonical_code(&a).unwrap(),
            canonical_code(&Graph::complete(3).unwrap()).unwrap()
        );
    }

    #[test]
    fn labeling_reproduces_code() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5)]).unwrap();
        let (code, perm) = canonical_labeling(&g).unwrap();
        let h = g.relabel(&perm).unwrap();
        let order: Vec<usize> = (0..6).collect();
        assert_eq!(code_for_order(&h, &order), code.bits);
    }

    #[test]
    fn eleven_classes_on_four_vertices() {
        let pairs = [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)];
        let codes: HashSet<_> = (0u32..64)
            .map(|mask| {
                let g = Graph::from_edges(
                    4,
                    pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &e)| e),
                )
                .unwrap();
                canonical_code(&g).unwrap()
            })
            .collect();
        assert_eq!(codes.len(), 11);
    }

    #[test]
    fn size_limit() {
        assert!(canonical_code(&Graph::empty(11).unwrap()).is_err());
        assert!(canonical_code(&Graph::complete(10).unwrap()).is_ok());
    }

    #[test]
    fn bytes_encoding() {
        let code = canonical_code(&Graph::complete(3).unwrap()).unwrap();
        assert_eq!(code.to_bytes(), vec![3, 0b1110_0000]);
    }
}
