//! Eigenvalues of joins `H ∨ mK₁`.
//!
//! An eigenvector that is constant (say 1) on the independent part has
//! `y_H = m (λI − A_H)⁻¹ 1`, and the eigen-equation at an independent
//! vertex gives `λ = 1ᵀ y_H`. Expanding `A_H = Σ μ_j v_j v_jᵀ` this is the
//! secular equation
//!
//! ```text
//! λ = m Σ_j β_j / (λ − μ_j),   β_j = (v_jᵀ 1)²,
//! ```
//!
//! and for `|λ| > λ₁(A_H)` the Neumann series turns it into
//! `λ² = pm + Σ_{k≥1} a_k λ^{−k}` with `a_k = m·1ᵀA_H^k 1`. The remaining
//! eigenvalues of the join are eigenvalues of `H` whose eigenvectors are
//! orthogonal to `1`, and `0` with multiplicity `m − 1`.

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::graph::Graph;
use crate::spectral::{spectrum, symmetric_eigen, DEFAULT_TOL};

/// Exact rational used for the expansion coefficients.
pub type Rational = Ratio<i64>;

/// Default number of correction terms kept in the truncated series.
pub const DEFAULT_ORDER: usize = 8;

/// The join `H ∨ mK₁` described by its base graph and the size of the
/// independent part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JoinModel {
    h: Graph,
    m: usize,
}

impl JoinModel {
    pub fn new(h: Graph, m: usize) -> Result<Self> {
        if m == 0 {
            return Err(domain("independent part must have m >= 1 vertices"));
        }
        Ok(JoinModel { h, m })
    }

    /// `K_{r−2} ∨ (n−r+2)K₁` as a model.
    pub fn extremal(r: usize, n: usize) -> Result<Self> {
        if r < 3 || r > n {
            return Err(domain(format!("need 3 <= r <= n, got r={r}, n={n}")));
        }
        JoinModel::new(Graph::complete(r - 2)?, n - r + 2)
    }

    pub fn base(&self) -> &Graph {
        &self.h
    }

    pub fn p(&self) -> usize {
        self.h.order()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// `γ² = p·m`.
    pub fn gamma_sq(&self) -> usize {
        self.p() * self.m
    }

    pub fn gamma(&self) -> f64 {
        (self.gamma_sq() as f64).sqrt()
    }

    /// The joined graph itself.
    pub fn graph(&self) -> Result<Graph> {
        self.h.join(&Graph::empty(self.m)?)
    }
}

/// `ℓ_k = 1ᵀ A_H^k 1` and `a_k = m ℓ_k` for `k = 0..=K`, exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentVector {
    pub ell: Vec<BigUint>,
    pub a: Vec<BigUint>,
}

impl MomentVector {
    pub fn ell_f64(&self, k: usize) -> f64 {
        self.ell[k].to_f64().unwrap_or(f64::INFINITY)
    }

    pub fn a_f64(&self, k: usize) -> f64 {
        self.a[k].to_f64().unwrap_or(f64::INFINITY)
    }
}

/// Walk counts `1ᵀ A^k 1` for `k = 0..=max_k`.
pub fn walk_moments(h: &Graph, max_k: usize) -> Vec<BigUint> {
    let p = h.order();
    let mut x: Vec<BigUint> = vec![BigUint::from(1u8); p];
    let mut out = Vec::with_capacity(max_k + 1);
    out.push(BigUint::from(p));
    for _ in 0..max_k {
        x = (0..p)
            .map(|v| h.neighbors(v).iter().map(|u| &x[u]).sum())
            .collect();
        out.push(x.iter().sum());
    }
    out
}

pub fn moments(model: &JoinModel, max_k: usize) -> MomentVector {
    let ell = walk_moments(model.base(), max_k);
    let m = BigUint::from(model.m());
    let a = ell.iter().map(|l| l * &m).collect();
    MomentVector { ell, a }
}

fn small_moments(h: &Graph) -> (i64, i64) {
    let d = h.degrees();
    let l1 = d.iter().sum::<usize>() as i64;
    let l2 = d.iter().map(|&x| (x * x) as i64).sum::<i64>();
    (l1, l2)
}

/// First- and second-order coefficients of `λ₁ = γ + c₁ + c₂/γ + O(γ⁻²)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeriesCoefficients {
    pub c1: Rational,
    pub c2: Rational,
}

impl SeriesCoefficients {
    pub fn c1_f64(&self) -> f64 {
        ratio_f64(self.c1)
    }

    pub fn c2_f64(&self) -> f64 {
        ratio_f64(self.c2)
    }
}

pub fn ratio_f64(x: Rational) -> f64 {
    *x.numer() as f64 / *x.denom() as f64
}

/// `c₁ = ℓ₁/(2p)`, `c₂ = ℓ₂/(2p) − 3ℓ₁²/(8p²)`, exactly.
pub fn series_coefficients(model: &JoinModel) -> SeriesCoefficients {
    coefficients_of(model.base())
}

fn coefficients_of(h: &Graph) -> SeriesCoefficients {
    let p = h.order() as i64;
    let (l1, l2) = small_moments(h);
    SeriesCoefficients {
        c1: Rational::new(l1, 2 * p),
        c2: Rational::new(l2, 2 * p) - Rational::new(3 * l1 * l1, 8 * p * p),
    }
}

/// `2γ + 2c₂/γ`.
pub fn second_order_spread(model: &JoinModel) -> f64 {
    let g = model.gamma();
    2.0 * g + 2.0 * series_coefficients(model).c2_f64() / g
}

/// `√(4(r−2)(n−r+2) + (r−3)²)`, the spread of `K_{r−2} ∨ (n−r+2)K₁`.
pub fn closed_form_extremal_spread(r: usize, n: usize) -> Result<f64> {
    if r < 3 || r > n {
        return Err(domain(format!("need 3 <= r <= n, got r={r}, n={n}")));
    }
    let (r, n) = (r as f64, n as f64);
    Ok((4.0 * (r - 2.0) * (n - r + 2.0) + (r - 3.0).powi(2)).sqrt())
}

/// Extreme eigenvalues of a join.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct JoinExtremes {
    pub lambda1: f64,
    pub lambdan: f64,
}

impl JoinExtremes {
    pub fn spread(&self) -> f64 {
        self.lambda1 - self.lambdan
    }
}

/// Eigenvalues of `A_H` grouped into numerically equal clusters, each with
/// the squared norm of the projection of `1` onto its eigenspace.
struct Poles {
    /// `(μ, β, multiplicity)`, ascending in `μ`.
    clusters: Vec<(f64, f64, usize)>,
}

const CLUSTER_TOL: f64 = 1e-9;

impl Poles {
    fn of(h: &Graph) -> Result<Self> {
        let p = h.order();
        let eig = symmetric_eigen(&h.adjacency_matrix(), p, DEFAULT_TOL)?;
        let mut pairs: Vec<(f64, f64)> = (0..p)
            .map(|j| {
                let s: f64 = eig.vector(j).iter().sum();
                (eig.values[j], s * s)
            })
            .collect();
        pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
        let mut clusters: Vec<(f64, f64, usize)> = Vec::new();
        for (mu, beta) in pairs {
            match clusters.last_mut() {
                Some((m0, b0, k)) if (mu - *m0).abs() <= CLUSTER_TOL * m0.abs().max(1.0) => {
                    *b0 += beta;
                    *k += 1;
                }
                _ => clusters.push((mu, beta, 1)),
            }
        }
        Ok(Poles { clusters })
    }

    fn active_threshold(p: usize) -> f64 {
        1e-12 * p as f64
    }

    fn active(&self, p: usize) -> Vec<(f64, f64)> {
        self.clusters
            .iter()
            .filter(|c| c.1 > Self::active_threshold(p))
            .map(|&(mu, beta, _)| (mu, beta))
            .collect()
    }
}

fn secular(lambda: f64, m: f64, active: &[(f64, f64)]) -> (f64, f64) {
    let mut f = lambda;
    let mut df = 1.0;
    for &(mu, beta) in active {
        let d = lambda - mu;
        f -= m * beta / d;
        df += m * beta / (d * d);
    }
    (f, df)
}

fn pole_guard(mu: f64) -> f64 {
    1e-13 * mu.abs().max(1.0)
}

/// Root of the increasing function `φ` on `(lo, hi)` with `φ(lo) < 0 < φ(hi)`:
/// bisection to machine resolution, then Newton steps kept inside the bracket.
fn bracketed_root(
    mut lo: f64,
    mut hi: f64,
    m: f64,
    active: &[(f64, f64)],
    tol: f64,
) -> Result<f64> {
    let phi = |x: f64| secular(x, m, active);
    for _ in 0..2000 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if phi(mid).0 < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mut x = 0.5 * (lo + hi);
    for _ in 0..4 {
        let (f, df) = phi(x);
        let next = x - f / df;
        if next > lo && next < hi {
            x = next;
        }
    }
    let (f, _) = phi(x);
    // residual relative to the size of the summed terms
    let scale = active
        .iter()
        .fold(x.abs().max(1.0), |acc, &(mu, beta)| acc + m * beta / (x - mu).abs());
    if f.abs() > tol * scale {
        return Err(Error::Numerical {
            what: "secular root",
            detail: format!("bracket [{lo:e}, {hi:e}], |phi| = {:.3e}", f.abs()),
        });
    }
    Ok(x)
}

fn expand_bracket(
    mut x: f64,
    step: f64,
    want_positive: bool,
    m: f64,
    active: &[(f64, f64)],
) -> Result<f64> {
    let mut s = step;
    for _ in 0..200 {
        let f = secular(x, m, active).0;
        if (f > 0.0) == want_positive && f != 0.0 {
            return Ok(x);
        }
        x += s;
        s *= 2.0;
    }
    Err(Error::Numerical {
        what: "secular bracket",
        detail: format!("no sign change found up to {x:e}"),
    })
}

/// All roots of the secular equation, ascending: one below the smallest
/// active pole, one between each pair of consecutive active poles and one
/// above the largest.
pub fn secular_roots(model: &JoinModel, tol: f64) -> Result<Vec<f64>> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(domain(format!("tolerance must be positive, got {tol}")));
    }
    let p = model.p();
    let m = model.m() as f64;
    let poles = Poles::of(model.base())?;
    let active = poles.active(p);
    let reach = (m * p as f64).sqrt() + 1.0;
    let mut roots = Vec::with_capacity(active.len() + 1);

    let (mu_min, _) = active[0];
    let hi = mu_min - pole_guard(mu_min);
    let lo = expand_bracket(mu_min - mu_min.abs() - reach, -reach, false, m, &active)?;
    roots.push(bracketed_root(lo, hi, m, &active, tol)?);

    for w in active.windows(2) {
        let (a, b) = (w[0].0, w[1].0);
        roots.push(bracketed_root(a + pole_guard(a), b - pole_guard(b), m, &active, tol)?);
    }

    let (mu_max, _) = *active.last().unwrap();
    let lo = mu_max + pole_guard(mu_max);
    let hi = expand_bracket(mu_max + mu_max.abs() + reach, reach, true, m, &active)?;
    roots.push(bracketed_root(lo, hi, m, &active, tol)?);
    Ok(roots)
}

/// Full spectrum of `H ∨ mK₁` (descending), assembled from the secular
/// roots, the eigenvalues of `H` not seen by `1`, and `m − 1` zeros.
pub fn join_spectrum(model: &JoinModel, tol: f64) -> Result<Vec<f64>> {
    let p = model.p();
    let poles = Poles::of(model.base())?;
    let mut values = secular_roots(model, tol)?;
    for &(mu, beta, mult) in &poles.clusters {
        let silent = if beta > Poles::active_threshold(p) { mult - 1 } else { mult };
        values.extend(std::iter::repeat_n(mu, silent));
    }
    values.extend(std::iter::repeat_n(0.0, model.m() - 1));
    values.sort_by(|a, b| b.total_cmp(a));
    Ok(values)
}

/// `λ₁` and `λₙ` of `H ∨ mK₁` from the secular equation.
///
/// `λ₁` is always the largest secular root. `λₙ` is the smallest secular
/// root unless an eigenvalue of `H` orthogonal to `1` (or `0`, when
/// `m ≥ 2`) lies below it, e.g. the wheel `C₄ ∨ K₁`.
pub fn secular_extremes(model: &JoinModel, tol: f64) -> Result<JoinExtremes> {
    let values = join_spectrum(model, tol)?;
    Ok(JoinExtremes {
        lambda1: values[0],
        lambdan: *values.last().unwrap(),
    })
}

/// Extreme roots of `λ² − γ² − Σ_{k=1}^{K} a_k λ^{−k}` by safeguarded
/// Newton from `±γ`.
///
/// Requires `m > p·λ₁(A_H)²`, which keeps both roots in the region where
/// the full series converges.
pub fn truncated_series_extremes(model: &JoinModel, order: usize, tol: f64) -> Result<JoinExtremes> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(domain(format!("tolerance must be positive, got {tol}")));
    }
    let rho = spectrum(model.base(), DEFAULT_TOL)?.lambda1().max(0.0);
    let p = model.p() as f64;
    if (model.m() as f64) <= p * rho * rho {
        return Err(domain(format!(
            "series divergence region: m = {} <= p·λ₁(H)² = {:.6}",
            model.m(),
            p * rho * rho
        )));
    }
    let mv = moments(model, order);
    let a: Vec<f64> = (1..=order).map(|k| mv.a_f64(k)).collect();
    let g2 = model.gamma_sq() as f64;
    let gamma = g2.sqrt();
    let f = |x: f64| -> (f64, f64) {
        let mut val = x * x - g2;
        let mut der = 2.0 * x;
        let inv = 1.0 / x;
        let mut pw = inv;
        for (i, &ak) in a.iter().enumerate() {
            if ak != 0.0 {
                val -= ak * pw;
                der += (i + 1) as f64 * ak * pw * inv;
            }
            pw *= inv;
        }
        (val, der)
    };
    let solve = |seed: f64| -> Result<f64> {
        let mut x = seed;
        let (mut fx, mut dfx) = f(x);
        for _ in 0..200 {
            if fx == 0.0 {
                return Ok(x);
            }
            let step = fx / dfx;
            let mut t = 1.0;
            let mut accepted = None;
            for _ in 0..60 {
                let cand = x - t * step;
                if cand.abs() > rho {
                    let (fc, dc) = f(cand);
                    if fc.abs() < fx.abs() {
                        accepted = Some((cand, fc, dc));
                        break;
                    }
                }
                t *= 0.5;
            }
            let Some((cand, fc, dc)) = accepted else {
                break;
            };
            let moved = (cand - x).abs();
            x = cand;
            fx = fc;
            dfx = dc;
            if moved <= 4.0 * f64::EPSILON * x.abs() {
                break;
            }
        }
        if fx.abs() > tol * x.abs().max(1.0) {
            return Err(Error::Numerical {
                what: "truncated series Newton",
                detail: format!("stalled at {x} with residual {:.3e}", fx.abs()),
            });
        }
        Ok(x)
    };
    Ok(JoinExtremes {
        lambda1: solve(gamma)?,
        lambdan: solve(-gamma)?,
    })
}

/// Output of the Zagreb-bound chain for a candidate base graph `H ⊆ K_{r−2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct C2Chain {
    pub c2_actual: Rational,
    /// `f(ℓ₁) / (2(r−2))`, an upper bound on `c₂` for every graph of this
    /// order and size.
    pub c2_bound: Rational,
    pub f_value: Rational,
    /// `(r−3)²/8`, the value of `c₂` at `H = K_{r−2}`.
    pub c2_extremal: Rational,
}

/// `f(ℓ₁) = (5−r)/(4(r−2)(r−3)) ℓ₁² + (r−4)/2 ℓ₁`.
pub fn f_ell1(r: usize, ell1: i64) -> Rational {
    let r = r as i64;
    Rational::new((5 - r) * ell1 * ell1, 4 * (r - 2) * (r - 3)) + Rational::new((r - 4) * ell1, 2)
}

pub fn c2_upper_bound_chain(h: &Graph, r: usize) -> Result<C2Chain> {
    if r < 4 {
        return Err(domain(format!("c2 chain needs r >= 4, got {r}")));
    }
    if h.order() != r - 2 {
        return Err(domain(format!(
            "base graph has order {}, expected r - 2 = {}",
            h.order(),
            r - 2
        )));
    }
    let (l1, _) = small_moments(h);
    let f_value = f_ell1(r, l1);
    let ri = r as i64;
    Ok(C2Chain {
        c2_actual: coefficients_of(h).c2,
        c2_bound: f_value / Rational::from_integer(2 * (ri - 2)),
        f_value,
        c2_extremal: Rational::new((ri - 3) * (ri - 3), 8),
    })
}

/// Both sides of `Σ d(v)² ≤ e (2e/(n−1) + n − 2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ZagrebCheck {
    pub degree_square_sum: i64,
    pub bound: Rational,
}

impl ZagrebCheck {
    pub fn holds(&self) -> bool {
        Rational::from_integer(self.degree_square_sum) <= self.bound
    }

    pub fn tight(&self) -> bool {
        Rational::from_integer(self.degree_square_sum) == self.bound
    }
}

pub fn zagreb_check(g: &Graph) -> Result<ZagrebCheck> {
    let n = g.order() as i64;
    if n < 2 {
        return Err(domain("Zagreb bound needs at least two vertices"));
    }
    let (_, l2) = small_moments(g);
    let e = g.size() as i64;
    Ok(ZagrebCheck {
        degree_square_sum: l2,
        bound: Rational::from_integer(e) * (Rational::new(2 * e, n - 1) + Rational::from_integer(n - 2)),
    })
}

/// One row of the expansion-accuracy table.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SeriesRow {
    pub n: usize,
    pub gamma: f64,
    pub c1: f64,
    pub c2: f64,
    pub lambda1_exact: f64,
    pub lambdan_exact: f64,
    pub s_exact: f64,
    pub s_2nd: f64,
    pub err: f64,
    pub err_gamma3: f64,
    pub lambda1_series: Option<f64>,
    pub lambdan_series: Option<f64>,
    pub flag: Option<String>,
}

/// Row for `H ∨ (n − |H|)K₁`; truncated-series failures only set `flag`.
pub fn series_row(h: &Graph, n: usize, order: usize, tol: f64) -> Result<SeriesRow> {
    if n <= h.order() {
        return Err(domain(format!("n = {n} must exceed |H| = {}", h.order())));
    }
    let model = JoinModel::new(h.clone(), n - h.order())?;
    let coeffs = series_coefficients(&model);
    let exact = secular_extremes(&model, tol)?;
    let gamma = model.gamma();
    let s_exact = exact.spread();
    let s_2nd = second_order_spread(&model);
    let err = (s_exact - s_2nd).abs();
    let (series, flag) = match truncated_series_extremes(&model, order, tol) {
        Ok(x) => (Some(x), None),
        Err(e) => (None, Some(e.to_string())),
    };
    Ok(SeriesRow {
        n,
        gamma,
        c1: coeffs.c1_f64(),
        c2: coeffs.c2_f64(),
        lambda1_exact: exact.lambda1,
        lambdan_exact: exact.lambdan,
        s_exact,
        s_2nd,
        err,
        err_gamma3: err * gamma.powi(3),
        lambda1_series: series.map(|x| x.lambda1),
        lambdan_series: series.map(|x| x.lambdan),
        flag,
    })
}

impl SeriesCoefficients {
    pub fn is_zero(&self) -> bool {
        self.c1.is_zero() && self.c2.is_zero()
    }
}
