//! Branch-set search.
//!
//! A `K_r` (or `K_{s,t}`) minor model inside a connected component can be
//! grown until its branch sets cover the component: any uncovered vertex
//! adjacent to a branch set joins it without breaking connectivity or
//! adjacency. So it suffices to search partitions of each component into
//! exactly `r` (or `s + t`) parts. Parts are unlabeled, so a vertex may only
//! open the next unused part.

use super::{MinorCertificate, MinorKind};
use crate::error::{domain, Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest graph order accepted by the exact minor search.
pub const MINOR_MAX_ORDER: usize = 11;

fn check_size(g: &Graph) -> Result<()> {
    if g.order() > MINOR_MAX_ORDER {
        return Err(Error::UnsupportedSize {
            what: "exact minor search",
            size: g.order(),
            max: MINOR_MAX_ORDER,
        });
    }
    Ok(())
}

struct Partitioner<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    bags: Vec<VertexSet>,
    /// Prune partial assignments whose bags can no longer become adjacent.
    need_all_pairs: bool,
}

impl<'a> Partitioner<'a> {
    fn new(g: &'a Graph, component: VertexSet, parts: usize, need_all_pairs: bool) -> Self {
        let mut order = component.to_vec();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        Partitioner {
            g,
            order,
            bags: vec![VertexSet::EMPTY; parts],
            need_all_pairs,
        }
    }

    fn run<F>(&mut self, leaf: &mut F) -> Option<Vec<VertexSet>>
    where
        F: FnMut(&Graph, &[VertexSet]) -> Option<Vec<VertexSet>>,
    {
        self.rec(0, 0, leaf)
    }

    fn rec<F>(&mut self, idx: usize, used: usize, leaf: &mut F) -> Option<Vec<VertexSet>>
    where
        F: FnMut(&Graph, &[VertexSet]) -> Option<Vec<VertexSet>>,
    {
        let parts = self.bags.len();
        if parts - used > self.order.len() - idx {
            return None;
        }
        if idx == self.order.len() {
            if self.bags.iter().all(|&b| self.g.is_connected_set(b)) {
                return leaf(self.g, &self.bags);
            }
            return None;
        }
        if !self.feasible(idx, used) {
            return None;
        }
        let v = self.order[idx];
        for b in 0..parts.min(used + 1) {
            self.bags[b].insert(v);
            let found = self.rec(idx + 1, used.max(b + 1), leaf);
            self.bags[b].remove(v);
            if found.is_some() {
                return found;
            }
        }
        None
    }

    fn feasible(&self, idx: usize, used: usize) -> bool {
        let free = VertexSet::from_vertices(self.order[idx..].iter().copied());
        let mut regions = [VertexSet::EMPTY; MINOR_MAX_ORDER];
        for (i, &bag) in self.bags[..used].iter().enumerate() {
            let start = VertexSet::singleton(bag.first().unwrap());
            let region = self.g.reach(start, bag.union(free));
            if !bag.difference(region).is_empty() {
                return false;
            }
            regions[i] = region;
        }
        if self.need_all_pairs {
            for i in 0..used {
                let closed = self.g.neighborhood(regions[i]).union(regions[i]);
                for region in &regions[i + 1..used] {
                    if closed.intersection(*region).is_empty() {
                        return false;
                    }
                }
            }
        }
        true
    }
}

fn bags_adjacent(g: &Graph, a: VertexSet, b: VertexSet) -> bool {
    !g.neighborhood(a).intersection(b).is_empty()
}

fn certificate(kind: MinorKind, bags: Vec<VertexSet>) -> MinorCertificate {
    MinorCertificate {
        kind,
        branch_sets: bags.into_iter().map(VertexSet::to_vec).collect(),
    }
}

/// Searches for a `K_r` minor; returns a certificate when one exists.
pub fn has_clique_minor(g: &Graph, r: usize) -> Result<Option<MinorCertificate>> {
    check_size(g)?;
    if r == 0 {
        return Err(domain("clique minor order must be at least 1"));
    }
    let kind = MinorKind::Clique { r };
    if r == 1 {
        return Ok(Some(certificate(kind, vec![VertexSet::singleton(0)])));
    }
    if r > g.order() || g.size() < r * (r - 1) / 2 {
        return Ok(None);
    }
    let mut leaf = |g: &Graph, bags: &[VertexSet]| {
        let ok = (0..bags.len())
            .all(|i| (i + 1..bags.len()).all(|j| bags_adjacent(g, bags[i], bags[j])));
        ok.then(|| bags.to_vec())
    };
    for comp in g.components() {
        if comp.len() < r {
            continue;
        }
        if let Some(bags) = Partitioner::new(g, comp, r, true).run(&mut leaf) {
            return Ok(Some(certificate(kind, bags)));
        }
    }
    Ok(None)
}

/// Searches for a `K_{s,t}` minor; in the certificate the first `s` branch
/// sets form one side.
pub fn has_biclique_minor(g: &Graph, s: usize, t: usize) -> Result<Option<MinorCertificate>> {
    check_size(g)?;
    if s == 0 || t == 0 {
        return Err(domain("biclique sides must be at least 1"));
    }
    let k = s + t;
    if k > g.order() || g.size() < s * t {
        return Ok(None);
    }
    let mut leaf = |g: &Graph, bags: &[VertexSet]| {
        let adj: Vec<u32> = bags
            .iter()
            .map(|&a| {
                bags.iter()
                    .enumerate()
                    .filter(|&(_, &b)| bags_adjacent(g, a, b))
                    .fold(0u32, |m, (j, _)| m | 1 << j)
            })
            .collect();
        let all = (1u32 << k) - 1;
        (0u32..1 << k)
            .filter(|left| left.count_ones() as usize == s)
            .find(|&left| {
                let right = all & !left;
                (0..k).filter(|i| left >> i & 1 == 1).all(|i| adj[i] & right == right)
            })
            .map(|left| {
                let (l, r): (Vec<_>, Vec<_>) =
                    (0..k).partition(|i| left >> i & 1 == 1);
                l.into_iter().chain(r).map(|i| bags[i]).collect()
            })
    };
    for comp in g.components() {
        if comp.len() < k {
            continue;
        }
        if let Some(bags) = Partitioner::new(g, comp, k, false).run(&mut leaf) {
            return Ok(Some(certificate(MinorKind::Biclique { s, t }, bags)));
        }
    }
    Ok(None)
}

/// Largest `r` with a `K_r` minor, with a certificate for it.
pub fn hadwiger_number(g: &Graph) -> Result<(usize, MinorCertificate)> {
    let mut best = has_clique_minor(g, 1)?.expect("every graph has a K1 minor");
    let mut r = 1;
    while let Some(cert) = has_clique_minor(g, r + 1)? {
        best = cert;
        r += 1;
    }
    Ok((r, best))
}
