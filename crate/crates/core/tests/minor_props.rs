mod common;

use common::{arb_graph, random_graph};
use kr_spread::minor::oracle::biclique_minor_oracle;
use kr_spread::minor::{
    hadwiger_number, has_biclique_minor, has_clique_minor, verify_certificate, MinorCertificate, MinorKind,
};
use kr_spread::search::enumerate_graphs;
use kr_spread::Graph;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Independent restatement of the certificate rules, used to judge mutated
/// certificates.
fn valid_model(g: &Graph, c: &MinorCertificate) -> bool {
    let n = g.order();
    let sets = &c.branch_sets;
    let want = match c.kind {
        MinorKind::Clique { r } => r,
        MinorKind::Biclique { s, t } => s + t,
    };
    if sets.len() != want {
        return false;
    }
    let mut all: Vec<usize> = sets.iter().flatten().copied().collect();
    let total = all.len();
    all.sort_unstable();
    all.dedup();
    if all.len() != total || all.iter().any(|&v| v >= n) {
        return false;
    }
    let connected = |s: &Vec<usize>| {
        if s.is_empty() {
            return false;
        }
        let mut comp = vec![s[0]];
        let mut changed = true;
        while changed {
            changed = false;
            for &v in s {
                if !comp.contains(&v) && comp.iter().any(|&u| g.has_edge(u, v)) {
                    comp.push(v);
                    changed = true;
                }
            }
        }
        comp.len() == s.len()
    };
    if !sets.iter().all(connected) {
        return false;
    }
    let adj = |i: usize, j: usize| sets[i].iter().any(|&u| sets[j].iter().any(|&v| g.has_edge(u, v)));
    match c.kind {
        MinorKind::Clique { r } => (0..r).all(|i| (i + 1..r).all(|j| adj(i, j))),
        MinorKind::Biclique { s, t } => (0..s).all(|i| (s..s + t).all(|j| adj(i, j))),
    }
}

fn mutate(rng: &mut ChaCha8Rng, c: &MinorCertificate, n: usize) -> MinorCertificate {
    let mut out = c.clone();
    let sets = &mut out.branch_sets;
    let k = sets.len();
    match rng.gen_range(0..6) {
        0 => {
            // move one vertex to another bag
            let i = rng.gen_range(0..k);
            let j = rng.gen_range(0..k);
            if !sets[i].is_empty() {
                let pos = rng.gen_range(0..sets[i].len());
                let v = sets[i].remove(pos);
                sets[j].push(v);
            }
        }
        1 => {
            let i = rng.gen_range(0..k);
            let v = rng.gen_range(0..n + 2);
            sets[i].push(v);
        }
        2 => {
            let i = rng.gen_range(0..k);
            sets.remove(i);
        }
        3 => {
            let i = rng.gen_range(0..k);
            sets[i].clear();
        }
        4 => {
            let i = rng.gen_range(0..k);
            let pos = rng.gen_range(0..sets[i].len());
            sets[i].remove(pos);
        }
        _ => {
            sets.push(vec![rng.gen_range(0..n)]);
        }
    }
    out
}

#[test]
fn mutated_certificates_judged_correctly() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut rejected = 0;
    let mut trials = 0;
    while trials < 10_000 {
        let n = rng.gen_range(4..=9);
        let g = random_graph(&mut rng, n, 0.6);
        let cert = if rng.gen_bool(0.5) {
            has_clique_minor(&g, rng.gen_range(2..=4)).unwrap()
        } else {
            has_biclique_minor(&g, rng.gen_range(1..=2), rng.gen_range(1..=3)).unwrap()
        };
        let Some(cert) = cert else { continue };
        assert!(verify_certificate(&g, &cert));
        trials += 1;
        let bad = mutate(&mut rng, &cert, n);
        let verdict = verify_certificate(&g, &bad);
        assert_eq!(verdict, valid_model(&g, &bad), "{g:?} {bad:?}");
        if !verdict {
            rejected += 1;
        }
    }
    assert!(rejected > 5_000, "only {rejected} mutations were invalid");
}

proptest! {
    #[test]
    fn minors_survive_edge_addition(g in arb_graph(2, 8), r in 2usize..6, pick in any::<usize>()) {
        let missing: Vec<(usize, usize)> = (0..g.order())
            .flat_map(|u| (u + 1..g.order()).map(move |v| (u, v)))
            .filter(|&(u, v)| !g.has_edge(u, v))
            .collect();
        prop_assume!(!missing.is_empty());
        let (u, v) = missing[pick % missing.len()];
        if has_clique_minor(&g, r).unwrap().is_some() {
            prop_assert!(has_clique_minor(&g.with_edge(u, v).unwrap(), r).unwrap().is_some());
        }
    }

    #[test]
    fn minors_of_induced_subgraphs_lift(g in arb_graph(2, 9), keep in any::<u64>()) {
        let set = kr_spread::VertexSet(keep & kr_spread::VertexSet::full(g.order()).0);
        prop_assume!(!set.is_empty());
        let sub = g.induced(set).unwrap();
        let (h_sub, _) = hadwiger_number(&sub).unwrap();
        let (h, cert) = hadwiger_number(&g).unwrap();
        prop_assert!(h_sub <= h);
        prop_assert!(verify_certificate(&g, &cert));
    }
}

#[test]
fn biclique_search_matches_oracle() {
    for n in 2..=6 {
        for g in enumerate_graphs(n).unwrap() {
            for (s, t) in [(1, 2), (1, 3), (2, 2), (2, 3), (3, 3)] {
                let found = has_biclique_minor(&g, s, t).unwrap();
                assert_eq!(found.is_some(), biclique_minor_oracle(&g, s, t).unwrap(), "{g:?} K{s},{t}");
                if let Some(c) = found {
                    assert!(verify_certificate(&g, &c));
                }
            }
        }
    }
}

/// `K_{r−1,r−1}` contains `K_r` as a minor, so every graph with the former
/// minor has the latter.
#[test]
fn biclique_implies_clique() {
    for n in 4..=7 {
        for g in enumerate_graphs(n).unwrap() {
            for r in 3..=4 {
                if has_biclique_minor(&g, r - 1, r - 1).unwrap().is_some() {
                    assert!(has_clique_minor(&g, r).unwrap().is_some(), "{g:?} r={r}");
                }
            }
        }
    }
}
