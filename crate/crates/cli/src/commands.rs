use std::path::PathBuf;

use kr_spread::graph::{make_family, parse_graph6, FamilySpec};
use kr_spread::join_series::series_row;
use kr_spread::minor::hadwiger_number;
use kr_spread::search::{
    enumerate_graphs, ingest_graph6_stream, search_max_spread, SearchOptions, ENUMERATE_MAX_ORDER,
};
use kr_spread::spectral::{spread as spread_of, DEFAULT_TOL};
use kr_spread::Graph;
use serde_json::json;

use crate::suites::{run_suite, SuiteReport};
use crate::{Failure, HadwigerArgs, SearchArgs, SeriesArgs, SpreadArgs, Suite, VerifyArgs};

type CmdResult = Result<(), Failure>;

fn parse(text: &str) -> Result<Graph, Failure> {
    Ok(parse_graph6(text.trim())?)
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("report types serialize")
}

pub fn spread(a: &SpreadArgs) -> CmdResult {
    let g = match (&a.graph6, &a.family) {
        (Some(text), _) => parse(text)?,
        (None, Some(f)) => make_family(FamilySpec::from_parts(f, a.n, a.r, a.a, a.b)?)?,
        (None, None) => return Err(Failure::Usage("give a graph6 string or --family".into())),
    };
    let s = spread_of(&g)?;
    if a.json {
        println!("{}", to_json(&s));
    } else {
        println!("lambda1={:.9} lambdan={:.9} s={:.9}", s.lambda1, s.lambdan, s.spread);
    }
    Ok(())
}

pub fn hadwiger(a: &HadwigerArgs) -> CmdResult {
    let g = parse(&a.graph6)?;
    let (h, cert) = hadwiger_number(&g)?;
    if a.json {
        let mut v = json!({ "hadwiger": h });
        if a.cert {
            v["certificate"] = serde_json::to_value(&cert).expect("certificate serializes");
        }
        println!("{}", to_json(&v));
    } else {
        println!("hadwiger={h}");
        if a.cert {
            println!("{}", to_json(&cert));
        }
    }
    Ok(())
}

fn out_dir(explicit: &Option<PathBuf>) -> PathBuf {
    explicit
        .clone()
        .or_else(|| std::env::var_os("KRSPREAD_OUT").map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("."))
}

pub fn search(a: &SearchArgs) -> CmdResult {
    let graphs = match &a.input {
        Some(path) => {
            let got = ingest_graph6_stream(path, a.strict)?;
            for (line, msg) in &got.skipped {
                eprintln!("krspread: {}: line {line} skipped: {msg}", path.display());
            }
            got.graphs
        }
        None if a.n > ENUMERATE_MAX_ORDER => {
            return Err(Failure::Usage(format!(
                "n = {} is above the internal enumeration limit {ENUMERATE_MAX_ORDER}; \
                 pass --input FILE with graph6 lines (e.g. from `geng {}`)",
                a.n, a.n
            )))
        }
        None => enumerate_graphs(a.n)?,
    };
    let opts = SearchOptions {
        shards: a.shards.max(1),
        edge_prescreen: !a.no_prescreen,
    };
    let report = search_max_spread(a.n, a.r, graphs, opts)?;
    let dir = out_dir(&a.out);
    report.write_files(&dir)?;
    if a.json {
        println!("{}", report.to_json()?);
    } else {
        println!(
            "r={} n={} classes={} survivors={} max_spread={:.9} formula={:.9} maximizers={} predicted_wins={} max_edges={} -> {}",
            report.r,
            report.n,
            report.family_size,
            report.survivors,
            report.max_spread,
            report.formula_value,
            report.maximizers.join(","),
            report.predicted_wins,
            report.max_edges,
            dir.display()
        );
    }
    Ok(())
}

pub const SERIES_HEADER: [&str; 11] = [
    "n",
    "gamma",
    "c1",
    "c2",
    "lambda1_exact",
    "lambdan_exact",
    "s_exact",
    "s_2nd",
    "err",
    "err_gamma3",
    "flag",
];

pub fn series(a: &SeriesArgs) -> CmdResult {
    let h = match (&a.h, a.r) {
        (Some(text), r) => {
            let h = parse(text)?;
            if let Some(r) = r {
                if r < 3 || h.order() != r - 2 {
                    return Err(Failure::Usage(format!(
                        "--H has {} vertices but --r {r} needs r - 2",
                        h.order()
                    )));
                }
            }
            h
        }
        (None, Some(r)) if r >= 3 => Graph::complete(r - 2)?,
        (None, _) => return Err(Failure::Usage("--r must be at least 3".into())),
    };
    if a.n_from > a.n_to {
        return Err(Failure::Usage(format!("empty range {}..={}", a.n_from, a.n_to)));
    }
    let mut w = csv::Writer::from_writer(std::io::stdout().lock());
    let io = |e: csv::Error| Failure::Usage(e.to_string());
    w.write_record(SERIES_HEADER).map_err(io)?;
    for n in a.n_from..=a.n_to {
        let row = series_row(&h, n, a.order, DEFAULT_TOL)?;
        let nums = [
            row.gamma,
            row.c1,
            row.c2,
            row.lambda1_exact,
            row.lambdan_exact,
            row.s_exact,
            row.s_2nd,
            row.err,
            row.err_gamma3,
        ];
        let mut rec = vec![n.to_string()];
        rec.extend(nums.iter().map(|x| x.to_string()));
        rec.push(row.flag.unwrap_or_default());
        w.write_record(&rec).map_err(io)?;
    }
    w.flush().map_err(|e| Failure::Usage(e.to_string()))?;
    Ok(())
}

pub fn verify(a: &VerifyArgs) -> CmdResult {
    let suites: Vec<Suite> = match a.suite {
        Suite::All => vec![Suite::Codec, Suite::Spectral, Suite::Minor, Suite::Series, Suite::Search],
        s => vec![s],
    };
    let reports: Vec<SuiteReport> = suites.into_iter().map(|s| run_suite(s, a.seed)).collect();
    if a.json {
        println!("{}", to_json(&reports));
    } else {
        for r in &reports {
            print!("{r}");
        }
    }
    if reports.iter().any(|r| r.failed > 0) {
        return Err(Failure::Checks);
    }
    Ok(())
}
