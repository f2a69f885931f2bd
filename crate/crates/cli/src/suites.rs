//! Built-in verification suites behind `krspread verify`.

use std::fmt;
use std::time::Instant;

use kr_spread::graph::{canonical_code, emit_graph6, make_family, parse_graph6, FamilySpec};
use kr_spread::join_series::{
    closed_form_extremal_spread, secular_extremes, series_coefficients, JoinModel, Rational,
};
use kr_spread::minor::oracle::clique_minor_oracle;
use kr_spread::minor::{has_clique_minor, mader_exact_form, verify_certificate};
use kr_spread::search::{enumerate_graphs, search_max_spread, SearchOptions};
use kr_spread::spectral::{spectrum, spread, DEFAULT_TOL};
use kr_spread::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::Suite;

#[derive(Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub run: usize,
    pub passed: usize,
    pub failed: usize,
    /// One line per check.
    pub details: Vec<String>,
    pub wall_time_s: f64,
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "suite {}: {} run, {} passed, {} failed ({:.3}s)",
            self.suite, self.run, self.passed, self.failed, self.wall_time_s
        )?;
        for d in &self.details {
            writeln!(f, "  {d}")?;
        }
        Ok(())
    }
}

struct Checks {
    lines: Vec<(bool, String)>,
}

impl Checks {
    fn new() -> Self {
        Checks { lines: Vec::new() }
    }

    /// Records a check made of many cases; `problems` lists the failing ones.
    fn add(&mut self, name: &str, cases: usize, problems: Vec<String>) {
        let ok = problems.is_empty();
        let mut line = format!("{} {name} ({cases} cases)", if ok { "PASS" } else { "FAIL" });
        if let Some(first) = problems.first() {
            line.push_str(&format!(": {} failing, first: {first}", problems.len()));
        }
        self.lines.push((ok, line));
    }

    fn finish(self, suite: &str, start: Instant) -> SuiteReport {
        let run = self.lines.len();
        let passed = self.lines.iter().filter(|(ok, _)| *ok).count();
        SuiteReport {
            suite: suite.to_string(),
            run,
            passed,
            failed: run - passed,
            details: self.lines.into_iter().map(|(_, l)| l).collect(),
            wall_time_s: start.elapsed().as_secs_f64(),
        }
    }
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect::<Vec<_>>()
        .into_iter()
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_edges(n, edges).expect("valid edge list")
}

pub fn run_suite(suite: Suite, seed: u64) -> SuiteReport {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut c = Checks::new();
    let name = match suite {
        Suite::Codec => {
            codec(&mut c, &mut rng);
            "codec"
        }
        Suite::Spectral => {
            spectral(&mut c, &mut rng);
            "spectral"
        }
        Suite::Minor => {
            minor(&mut c);
            "minor"
        }
        Suite::Series => {
            series(&mut c, &mut rng);
            "series"
        }
        Suite::Search => {
            search(&mut c);
            "search"
        }
        Suite::All => unreachable!("expanded by the caller"),
    };
    c.finish(name, start)
}

fn codec(c: &mut Checks, rng: &mut ChaCha8Rng) {
    let mut bad = Vec::new();
    for _ in 0..2000 {
        let n = rng.gen_range(1..=62);
        let density = rng.gen_range(0.0..=1.0);
        let g = random_graph(rng, n, density);
        let text = emit_graph6(&g).expect("n <= 62");
        match parse_graph6(&text) {
            Ok(back) if back == g => {}
            _ => bad.push(text),
        }
    }
    c.add("graph6 random round trip", 2000, bad);

    let known = [("Bw", Graph::complete(3)), ("A?", Graph::empty(2)), ("@", Graph::empty(1))];
    let bad = known
        .iter()
        .filter(|(text, g)| parse_graph6(text).ok().as_ref() != g.as_ref().ok())
        .map(|(text, _)| text.to_string())
        .collect();
    c.add("graph6 known codes", known.len(), bad);

    let bad = ["", "B~~", "A\u{7f}"]
        .iter()
        .filter(|t| parse_graph6(t).is_ok())
        .map(|t| format!("{t:?} accepted"))
        .collect();
    c.add("graph6 rejects malformed input", 3, bad);
}

fn spectral(c: &mut Checks, rng: &mut ChaCha8Rng) {
    let mut bad = Vec::new();
    for _ in 0..200 {
        let n = rng.gen_range(1..=30);
        let g = random_graph(rng, n, 0.4);
        match spectrum(&g, DEFAULT_TOL) {
            Ok(s) => {
                let (tr, fro) = s.moment_defects(g.size());
                if tr.abs() > 1e-8 || fro.abs() > 1e-8 {
                    bad.push(format!("{g:?}: trace {tr:e}, frobenius {fro:e}"));
                }
            }
            Err(e) => bad.push(format!("{g:?}: {e}")),
        }
    }
    c.add("trace and Frobenius identities", 200, bad);

    let mut bad = Vec::new();
    let mut cases = 0;
    for r in 3..=8 {
        for m in 2..=50 {
            cases += 1;
            let n = m + r - 2;
            let got = make_family(FamilySpec::JoinStar { r, n }).and_then(|g| spread(&g));
            let want = closed_form_extremal_spread(r, n).expect("r <= n");
            match got {
                Ok(s) if (s.spread - want).abs() <= 1e-8 => {}
                Ok(s) => bad.push(format!("r={r} m={m}: {} vs {want}", s.spread)),
                Err(e) => bad.push(format!("r={r} m={m}: {e}")),
            }
        }
    }
    c.add("closed-form spread of K_{r-2} join mK1", cases, bad);
}

fn minor(c: &mut Checks) {
    let mut bad = Vec::new();
    let mut cases = 0;
    for n in 1..=7 {
        for g in enumerate_graphs(n).expect("n <= 7") {
            for r in 3..=5 {
                cases += 1;
                let found = has_clique_minor(&g, r);
                let oracle = clique_minor_oracle(&g, r);
                match (found, oracle) {
                    (Ok(f), Ok(o)) if f.is_some() == o => {
                        if let Some(cert) = f {
                            if !verify_certificate(&g, &cert) {
                                bad.push(format!("{g:?} r={r}: certificate rejected"));
                            }
                        }
                    }
                    (f, o) => bad.push(format!("{g:?} r={r}: search {f:?} oracle {o:?}")),
                }
            }
        }
    }
    c.add("branch-set search vs contraction oracle, n <= 7", cases, bad);
}

fn series(c: &mut Checks, rng: &mut ChaCha8Rng) {
    let mut bad = Vec::new();
    for _ in 0..200 {
        let p = rng.gen_range(1..=6);
        let m = rng.gen_range(1..=40);
        let h = random_graph(rng, p, 0.5);
        let res = JoinModel::new(h.clone(), m).and_then(|model| {
            let sec = secular_extremes(&model, DEFAULT_TOL)?;
            let dense = spectrum(&model.graph()?, DEFAULT_TOL)?;
            Ok((sec, dense.lambda1(), dense.lambda_n()))
        });
        match res {
            Ok((sec, l1, ln)) if (sec.lambda1 - l1).abs() <= 1e-9 && (sec.lambdan - ln).abs() <= 1e-9 => {}
            Ok((sec, l1, ln)) => bad.push(format!("{h:?} m={m}: secular {sec:?} dense ({l1}, {ln})")),
            Err(e) => bad.push(format!("{h:?} m={m}: {e}")),
        }
    }
    c.add("secular vs dense extremes", 200, bad);

    let bad = (4..=10usize)
        .filter_map(|r| {
            let model = JoinModel::extremal(r, r).ok()?;
            let c2 = series_coefficients(&model).c2;
            let want = Rational::new(((r - 3) * (r - 3)) as i64, 8);
            (c2 != want).then(|| format!("r={r}: c2={c2}"))
        })
        .collect();
    c.add("c2 of K_{r-2} is (r-3)^2/8", 7, bad);
}

fn search(c: &mut Checks) {
    let opts = SearchOptions {
        shards: 4,
        edge_prescreen: false,
    };
    let mut bad = Vec::new();
    for n in 4..=7 {
        let graphs = enumerate_graphs(n).expect("n <= 7");
        match search_max_spread(n, 3, graphs, opts) {
            Ok(rep) => {
                let star = canonical_code(&make_family(FamilySpec::Star { n }).expect("star"));
                let top = parse_graph6(&rep.maximizers[0]).and_then(|g| canonical_code(&g));
                let want = 2.0 * ((n - 1) as f64).sqrt();
                let ok = rep.maximizers.len() == 1
                    && top.ok() == star.ok()
                    && (rep.max_spread - want).abs() <= 1e-8;
                if !ok {
                    bad.push(format!("n={n}: maximizers {:?}, spread {}", rep.maximizers, rep.max_spread));
                }
            }
            Err(e) => bad.push(format!("n={n}: {e}")),
        }
    }
    c.add("r=3 maximizer is the star", 4, bad);

    let mut bad = Vec::new();
    let mut cases = 0;
    for r in 4..=7 {
        for n in r..=7 {
            cases += 1;
            let graphs = enumerate_graphs(n).expect("n <= 7");
            match search_max_spread(n, r, graphs, opts) {
                Ok(rep) if rep.max_edges as i64 == mader_exact_form(r, n) => {}
                Ok(rep) => bad.push(format!("r={r} n={n}: {} edges", rep.max_edges)),
                Err(e) => bad.push(format!("r={r} n={n}: {e}")),
            }
        }
    }
    c.add("maximum size of K_r-minor-free graphs", cases, bad);
}
