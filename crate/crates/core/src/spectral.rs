//! Dense symmetric eigensolver and graph spread.

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::graph::Graph;

/// Default residual tolerance for eigencomputations.
pub const DEFAULT_TOL: f64 = 1e-10;
/// Two spreads closer than this are reported as tied.
pub const TIE_TOL: f64 = 1e-9;
/// Largest matrix accepted by the dense solver.
pub const MAX_DENSE_ORDER: usize = 512;

const MAX_SWEEPS: usize = 100;

/// Eigendecomposition of a real symmetric matrix.
#[derive(Clone, Debug)]
pub struct SymmetricEigen {
    n: usize,
    /// Eigenvalues, descending.
    pub values: Vec<f64>,
    /// Row-major `n × n`; column `j` is a unit eigenvector for `values[j]`.
    vectors: Vec<f64>,
    /// `max_j ‖A v_j − λ_j v_j‖_∞`.
    pub residual: f64,
}

impl SymmetricEigen {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn vector(&self, j: usize) -> Vec<f64> {
        (0..self.n).map(|i| self.vectors[i * self.n + j]).collect()
    }
}

/// Cyclic Jacobi eigensolver for the row-major symmetric matrix `a`.
///
/// Fails if the residual of any eigenpair exceeds `tol · max(1, max|λ|)`.
pub fn symmetric_eigen(a: &[f64], n: usize, tol: f64) -> Result<SymmetricEigen> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(domain(format!("tolerance must be positive, got {tol}")));
    }
    if n == 0 || a.len() != n * n {
        return Err(domain(format!("matrix of length {} is not {n}x{n}", a.len())));
    }
    if n > MAX_DENSE_ORDER {
        return Err(Error::UnsupportedSize {
            what: "dense eigensolve",
            size: n,
            max: MAX_DENSE_ORDER,
        });
    }
    for i in 0..n {
        for j in 0..i {
            if a[i * n + j] != a[j * n + i] {
                return Err(domain(format!("matrix is not symmetric at ({i},{j})")));
            }
        }
    }

    let mut m = a.to_vec();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let frob: f64 = m.iter().map(|x| x * x).sum::<f64>().sqrt();
    let mut converged = frob == 0.0;
    for _ in 0..MAX_SWEEPS {
        if converged {
            break;
        }
        let off: f64 = (0..n)
            .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
            .map(|(p, q)| m[p * n + q] * m[p * n + q])
            .sum::<f64>()
            .sqrt();
        if off <= f64::EPSILON * frob * 1e-2 {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = m[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (m[q * n + q] - m[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (kp, kq) = (m[k * n + p], m[k * n + q]);
                    m[k * n + p] = c * kp - s * kq;
                    m[k * n + q] = s * kp + c * kq;
                }
                for k in 0..n {
                    let (pk, qk) = (m[p * n + k], m[q * n + k]);
                    m[p * n + k] = c * pk - s * qk;
                    m[q * n + k] = s * pk + c * qk;
                }
                m[p * n + q] = 0.0;
                m[q * n + p] = 0.0;
                for k in 0..n {
                    let (kp, kq) = (v[k * n + p], v[k * n + q]);
                    v[k * n + p] = c * kp - s * kq;
                    v[k * n + q] = s * kp + c * kq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[j * n + j].total_cmp(&m[i * n + i]).then(i.cmp(&j)));
    let values: Vec<f64> = order.iter().map(|&i| m[i * n + i]).collect();
    let mut vectors = vec![0.0; n * n];
    for (col, &src) in order.iter().enumerate() {
        for row in 0..n {
            vectors[row * n + col] = v[row * n + src];
        }
    }

    let mut residual: f64 = 0.0;
    for (j, &lambda) in values.iter().enumerate() {
        for i in 0..n {
            let av: f64 = (0..n).map(|k| a[i * n + k] * vectors[k * n + j]).sum();
            residual = residual.max((av - lambda * vectors[i * n + j]).abs());
        }
    }
    let scale = values.iter().fold(1.0f64, |s, x| s.max(x.abs()));
    if !converged || residual.is_nan() || residual > tol * scale {
        return Err(Error::Numerical {
            what: "symmetric eigensolver",
            detail: format!(
                "residual {residual:.3e} exceeds {:.3e} (converged: {converged})",
                tol * scale
            ),
        });
    }
    Ok(SymmetricEigen {
        n,
        values,
        vectors,
        residual,
    })
}

/// Adjacency spectrum of a graph.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    /// Eigenvalues, descending.
    pub values: Vec<f64>,
    pub residual: f64,
    pub tol: f64,
}

impl Spectrum {
    pub fn lambda1(&self) -> f64 {
        self.values[0]
    }

    pub fn lambda_n(&self) -> f64 {
        *self.values.last().unwrap()
    }

    pub fn spread(&self) -> f64 {
        self.lambda1() - self.lambda_n()
    }

    /// `|Σλ|` and `|Σλ² − 2e|`; both vanish for an adjacency spectrum.
    pub fn moment_defects(&self, edges: usize) -> (f64, f64) {
        let trace: f64 = self.values.iter().sum();
        let frob: f64 = self.values.iter().map(|x| x * x).sum();
        (trace.abs(), (frob - 2.0 * edges as f64).abs())
    }
}

pub fn spectrum(g: &Graph, tol: f64) -> Result<Spectrum> {
    let eig = symmetric_eigen(&g.adjacency_matrix(), g.order(), tol)?;
    Ok(Spectrum {
        values: eig.values,
        residual: eig.residual,
        tol,
    })
}

/// Extreme eigenvalues and their difference `s(G) = λ₁ − λₙ`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpreadReport {
    pub lambda1: f64,
    pub lambdan: f64,
    pub spread: f64,
    pub residual: f64,
}

pub fn spread(g: &Graph) -> Result<SpreadReport> {
    spread_with_tol(g, DEFAULT_TOL)
}

pub fn spread_with_tol(g: &Graph, tol: f64) -> Result<SpreadReport> {
    let s = spectrum(g, tol)?;
    Ok(SpreadReport {
        lambda1: s.lambda1(),
        lambdan: s.lambda_n(),
        spread: s.spread().max(0.0),
        residual: s.residual,
    })
}

/// An interior eigenvalue of `H ∨ mK₁` outside `[−λ₁(H), λ₁(H)]`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct WeylViolation {
    /// 1-based position in the descending spectrum.
    pub index: usize,
    pub value: f64,
    pub bound: f64,
}

/// Checks `|λ_i(H ∨ mK₁)| ≤ λ₁(H) + tol` for `2 ≤ i ≤ n−1`.
pub fn weyl_sandwich_check(h: &Graph, m: usize, tol: f64) -> Result<Vec<WeylViolation>> {
    if m == 0 {
        return Err(domain("independent part must have m >= 1 vertices"));
    }
    let g = h.join(&Graph::empty(m)?)?;
    let bound = spectrum(h, DEFAULT_TOL)?.lambda1();
    let spec = spectrum(&g, DEFAULT_TOL)?;
    let n = spec.values.len();
    Ok(spec
        .values
        .iter()
        .enumerate()
        .take(n.saturating_sub(1))
        .skip(1)
        .filter(|(_, v)| v.abs() > bound + tol)
        .map(|(i, &value)| WeylViolation {
            index: i + 1,
            value,
            bound,
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, FamilySpec};

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
    }

    #[test]
    fn complete_graph_spectrum() {
        let s = spectrum(&Graph::complete(5).unwrap(), DEFAULT_TOL).unwrap();
        assert!(close(&s.values, &[4.0, -1.0, -1.0, -1.0, -1.0], 1e-10));
    }

    #[test]
    fn star_spectrum() {
        let s = spectrum(&make_family(FamilySpec::Star { n: 5 }).unwrap(), DEFAULT_TOL).unwrap();
        assert!(close(&s.values, &[2.0, 0.0, 0.0, 0.0, -2.0], 1e-10));
        assert!((s.spread() - 4.0).abs() < 1e-10);
    }

    #[test]
    fn join_star_spectrum() {
        // quotient roots (1 ± 5)/2, plus -1 from K2 and 0 twice from the independent part
        let g = make_family(FamilySpec::JoinStar { r: 4, n: 5 }).unwrap();
        let s = spectrum(&g, DEFAULT_TOL).unwrap();
        assert!(close(&s.values, &[3.0, 0.0, 0.0, -1.0, -2.0], 1e-10));
        assert!((spread(&g).unwrap().spread - 5.0).abs() < 1e-10);
    }

    #[test]
    fn complete_bipartite_spread() {
        let g = make_family(FamilySpec::CompleteBipartite { a: 2, b: 3 }).unwrap();
        assert!((spread(&g).unwrap().spread - 2.0 * 6f64.sqrt()).abs() < 1e-10);
    }

    #[test]
    fn edgeless_and_single_vertex() {
        assert_eq!(spread(&Graph::empty(4).unwrap()).unwrap().spread, 0.0);
        assert_eq!(spread(&Graph::empty(1).unwrap()).unwrap().spread, 0.0);
    }

    #[test]
    fn eigenvectors_are_orthonormal() {
        let g = make_family(FamilySpec::Cycle { n: 7 }).unwrap();
        let e = symmetric_eigen(&g.adjacency_matrix(), 7, DEFAULT_TOL).unwrap();
        for i in 0..7 {
            for j in 0..7 {
                let d: f64 = e.vector(i).iter().zip(e.vector(j)).map(|(a, b)| a * b).sum();
                assert!((d - if i == j { 1.0 } else { 0.0 }).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn unreachable_tolerance_is_numerical_error() {
        let g = make_family(FamilySpec::Cycle { n: 9 }).unwrap();
        assert!(matches!(spectrum(&g, 1e-30), Err(Error::Numerical { .. })));
        assert!(spectrum(&g, 0.0).is_err());
    }

    #[test]
    fn rejects_bad_matrices() {
        assert!(symmetric_eigen(&[0.0, 1.0, 0.0, 0.0], 2, 1e-10).is_err());
        assert!(symmetric_eigen(&[0.0; 3], 2, 1e-10).is_err());
        let big = vec![0.0; 513 * 513];
        assert!(matches!(
            symmetric_eigen(&big, 513, 1e-10),
            Err(Error::UnsupportedSize { .. })
        ));
    }

    #[test]
    fn weyl_examples() {
        let k2 = Graph::complete(2).unwrap();
        assert!(weyl_sandwich_check(&k2, 3, 1e-9).unwrap().is_empty());
        let k1 = Graph::complete(1).unwrap();
        for m in 1..10 {
            assert!(weyl_sandwich_check(&k1, m, 1e-9).unwrap().is_empty());
        }
        assert!(weyl_sandwich_check(&k2, 0, 1e-9).is_err());
    }
}
