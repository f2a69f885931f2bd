use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{domain, Error, Result};

/// Named graph families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    Complete { n: usize },
    Empty { n: usize },
    /// `K_{1,n-1}`.
    Star { n: usize },
    Path { n: usize },
    Cycle { n: usize },
    CompleteBipartite { a: usize, b: usize },
    /// `K_{r-2} ∨ (n-r+2)K_1`, the extremal `K_r`-minor-free graph.
    JoinStar { r: usize, n: usize },
    /// `K_{⌊2n/3⌋} ∨ ⌈n/3⌉K_1`, the maximum-spread graph over all graphs.
    Ghk { n: usize },
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Complete { .. } => "complete",
            FamilySpec::Empty { .. } => "empty",
            FamilySpec::Star { .. } => "star",
            FamilySpec::Path { .. } => "path",
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::CompleteBipartite { .. } => "complete_bipartite",
            FamilySpec::JoinStar { .. } => "join_star",
            FamilySpec::Ghk { .. } => "ghk",
        }
    }

    /// Builds a spec from a family id and the named integer parameters that
    /// family uses (`n`, `r`, `a`, `b`).
    pub fn from_parts(
        family: &str,
        n: Option<usize>,
        r: Option<usize>,
        a: Option<usize>,
        b: Option<usize>,
    ) -> Result<Self> {
        let need = |v: Option<usize>, what: &str| {
            v.ok_or_else(|| domain(format!("family {family} needs parameter {what}")))
        };
        Ok(match family.parse::<FamilyId>()? {
            FamilyId::Complete => FamilySpec::Complete { n: need(n, "n")? },
            FamilyId::Empty => FamilySpec::Empty { n: need(n, "n")? },
            FamilyId::Star => FamilySpec::Star { n: need(n, "n")? },
            FamilyId::Path => FamilySpec::Path { n: need(n, "n")? },
            FamilyId::Cycle => FamilySpec::Cycle { n: need(n, "n")? },
            FamilyId::CompleteBipartite => FamilySpec::CompleteBipartite {
                a: need(a, "a")?,
                b: need(b, "b")?,
            },
            FamilyId::JoinStar => FamilySpec::JoinStar {
                r: need(r, "r")?,
                n: need(n, "n")?,
            },
            FamilyId::Ghk => FamilySpec::Ghk { n: need(n, "n")? },
        })
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::CompleteBipartite { a, b } => write!(f, "complete_bipartite(a={a},b={b})"),
            FamilySpec::JoinStar { r, n } => write!(f, "join_star(r={r},n={n})"),
            FamilySpec::Complete { n }
            | FamilySpec::Empty { n }
            | FamilySpec::Star { n }
            | FamilySpec::Path { n }
            | FamilySpec::Cycle { n }
            | FamilySpec::Ghk { n } => write!(f, "{}(n={n})", self.name()),
        }
    }
}

#[derive(Clone, Copy)]
enum FamilyId {
    Complete,
    Empty,
    Star,
    Path,
    Cycle,
    CompleteBipartite,
    JoinStar,
    Ghk,
}

impl FromStr for FamilyId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "complete" => FamilyId::Complete,
            "empty" => FamilyId::Empty,
            "star" => FamilyId::Star,
            "path" => FamilyId::Path,
            "cycle" => FamilyId::Cycle,
            "complete_bipartite" => FamilyId::CompleteBipartite,
            "join_star" => FamilyId::JoinStar,
            "ghk" => FamilyId::Ghk,
            other => return Err(domain(format!("unknown family {other:?}"))),
        })
    }
}

pub fn make_family(spec: FamilySpec) -> Result<Graph> {
    match spec {
        FamilySpec::Complete { n } => Graph::complete(n),
        FamilySpec::Empty { n } => Graph::empty(n),
        FamilySpec::Star { n } => {
            if n < 2 {
                return Err(domain(format!("star needs n >= 2, got {n}")));
            }
            Graph::complete(1)?.join(&Graph::empty(n - 1)?)
        }
        FamilySpec::Path { n } => Graph::from_edges(n, (1..n).map(|v| (v - 1, v))),
        FamilySpec::Cycle { n } => {
            if n < 3 {
                return Err(domain(format!("cycle needs n >= 3, got {n}")));
            }
            Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
        }
        FamilySpec::CompleteBipartite { a, b } => {
            if a == 0 || b == 0 {
                return Err(domain("complete_bipartite needs a, b >= 1"));
            }
            Graph::empty(a)?.join(&Graph::empty(b)?)
        }
        FamilySpec::JoinStar { r, n } => {
            if r < 3 || r > n {
                return Err(domain(format!("join_star needs 3 <= r <= n, got r={r}, n={n}")));
            }
            Graph::complete(r - 2)?.join(&Graph::empty(n - r + 2)?)
        }
        FamilySpec::Ghk { n } => {
            if n < 2 {
                return Err(domain(format!("ghk needs n >= 2, got {n}")));
            }
            let clique = 2 * n / 3;
            Graph::complete(clique)?.join(&Graph::empty(n - clique)?)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom2(k: usize) -> usize {
        k * k.saturating_sub(1) / 2
    }

    #[test]
    fn join_star_shapes() {
        let g = make_family(FamilySpec::JoinStar { r: 4, n: 5 }).unwrap();
        assert_eq!((g.order(), g.size()), (5, 7));
        let star = make_family(FamilySpec::JoinStar { r: 3, n: 5 }).unwrap();
        assert_eq!(star, make_family(FamilySpec::Star { n: 5 }).unwrap());
        for r in 3..=10 {
            for n in r..=20 {
                let g = make_family(FamilySpec::JoinStar { r, n }).unwrap();
                assert_eq!(g.size(), (r - 2) * (n - r + 2) + binom2(r - 2));
            }
        }
    }

    #[test]
    fn other_families() {
        assert_eq!(make_family(FamilySpec::CompleteBipartite { a: 2, b: 3 }).unwrap().size(), 6);
        assert_eq!(make_family(FamilySpec::Cycle { n: 6 }).unwrap().size(), 6);
        assert_eq!(make_family(FamilySpec::Path { n: 1 }).unwrap().size(), 0);
        let ghk = make_family(FamilySpec::Ghk { n: 7 }).unwrap();
        // K_4 ∨ 3K_1
        assert_eq!(ghk.size(), 6 + 12);
    }

    #[test]
    fn invalid_parameters() {
        assert!(make_family(FamilySpec::JoinStar { r: 2, n: 5 }).is_err());
        assert!(make_family(FamilySpec::JoinStar { r: 6, n: 5 }).is_err());
        assert!(make_family(FamilySpec::Cycle { n: 2 }).is_err());
        assert!(make_family(FamilySpec::Star { n: 63 }).is_err());
        assert!(FamilySpec::from_parts("wheel", Some(5), None, None, None).is_err());
        assert!(FamilySpec::from_parts("join_star", Some(5), None, None, None).is_err());
    }
}
