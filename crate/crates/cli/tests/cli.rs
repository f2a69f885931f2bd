use std::process::{Command, Output};

fn krspread(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_krspread"))
        .args(args)
        .env_remove("KRSPREAD_OUT")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn spread_examples() {
    let o = krspread(&["spread", "--family", "join_star", "--r", "4", "--n", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("s=5.000000000"), "{}", stdout(&o));
    assert!(stdout(&krspread(&["spread", "Bw"])).contains("s=3.000000000"));
    let o = krspread(&["spread", "--family", "star", "--n", "5", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!((v["spread"].as_f64().unwrap() - 4.0).abs() < 1e-9);
}

#[test]
fn spread_errors_exit_2() {
    let o = krspread(&["spread", "B"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
    assert_eq!(krspread(&["spread", "--family", "nope", "--n", "3"]).status.code(), Some(2));
    assert_eq!(krspread(&["spread", "--family", "join_star", "--n", "3"]).status.code(), Some(2));
}

#[test]
fn hadwiger_examples() {
    assert!(stdout(&krspread(&["hadwiger", "D~{"])).contains("hadwiger=5"));
    assert!(stdout(&krspread(&["hadwiger", "D??"])).contains("hadwiger=1"));
    let o = krspread(&["hadwiger", "IheA@GUAo", "--cert", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["hadwiger"], 5);
    assert_eq!(v["certificate"]["kind"], "clique");
    assert_eq!(v["certificate"]["branch_sets"].as_array().unwrap().len(), 5);
    // 12 vertices is above the exact-search cap
    assert_eq!(krspread(&["hadwiger", "K???????????"]).status.code(), Some(2));
}

#[test]
fn search_writes_reports() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let o = krspread(&["search", "--r", "3", "--n", "6", "--out", out, "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["maximizers"].as_array().unwrap().len(), 1);
    assert!((v["max_spread"].as_f64().unwrap() - 2.0 * 5f64.sqrt()).abs() < 1e-9);
    assert_eq!(v["predicted_wins"], true);
    let csv = std::fs::read_to_string(dir.path().join("search_r3_n6.csv")).unwrap();
    assert!(csv.starts_with("graph6,edges,lambda1,lambdan,spread\n"));
    assert!(dir.path().join("search_r3_n6.json").exists());
}

#[test]
fn search_shards_byte_identical() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for (dir, shards) in [(&a, "4"), (&b, "1")] {
        let o = krspread(&["search", "--r", "4", "--n", "7", "--shards", shards, "--out", dir.path().to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
    }
    for f in ["search_r4_n7.json", "search_r4_n7.csv"] {
        assert_eq!(std::fs::read(a.path().join(f)).unwrap(), std::fs::read(b.path().join(f)).unwrap());
    }
}

#[test]
fn search_needs_input_above_seven() {
    let o = krspread(&["search", "--r", "4", "--n", "8"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--input"));
}

#[test]
fn search_reads_graph6_files() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.g6");
    // three 4-vertex graphs, one bad line
    std::fs::write(&input, "CF\nC~\nbad\nC]\n").unwrap();
    let args = |strict: bool| {
        let mut v = vec!["search", "--r", "3", "--n", "4", "--input", input.to_str().unwrap(), "--out", dir.path().to_str().unwrap()];
        if strict {
            v.push("--strict");
        }
        v.iter().map(|s| s.to_string()).collect::<Vec<_>>()
    };
    let lenient = krspread(&args(false).iter().map(String::as_str).collect::<Vec<_>>());
    assert_eq!(lenient.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&lenient.stderr).contains("line 3"));
    let strict = krspread(&args(true).iter().map(String::as_str).collect::<Vec<_>>());
    assert_eq!(strict.status.code(), Some(2));
}

#[test]
fn search_honors_out_env() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_krspread"))
        .args(["search", "--r", "3", "--n", "4"])
        .env("KRSPREAD_OUT", dir.path())
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(dir.path().join("search_r3_n4.json").exists());
}

#[test]
fn series_table() {
    let o = krspread(&["series", "--r", "4", "--n-from", "50", "--n-to", "50"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "n,gamma,c1,c2,lambda1_exact,lambdan_exact,s_exact,s_2nd,err,err_gamma3,flag"
    );
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(row[0], "50");
    assert_eq!(row[2].parse::<f64>().unwrap(), 0.5);
    assert_eq!(row[3].parse::<f64>().unwrap(), 0.125);

    let o = krspread(&["series", "--r", "3", "--n-from", "4", "--n-to", "30"]);
    for line in stdout(&o).lines().skip(1) {
        let err: f64 = line.split(',').nth(8).unwrap().parse().unwrap();
        assert!(err < 1e-9, "{line}");
    }
}

#[test]
fn series_flags_divergence_without_failing() {
    let o = krspread(&["series", "--H", "C~", "--n-from", "5", "--n-to", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("series divergence region"));
    assert_eq!(krspread(&["series", "--r", "5", "--H", "Bw", "--n-from", "9", "--n-to", "8"]).status.code(), Some(2));
    assert_eq!(krspread(&["series", "--r", "6", "--H", "Bw", "--n-from", "8", "--n-to", "9"]).status.code(), Some(2));
}

#[test]
fn verify_suites() {
    for suite in ["codec", "series", "minor"] {
        let o = krspread(&["verify", "--suite", suite, "--seed", "7"]);
        assert_eq!(o.status.code(), Some(0), "{suite}: {}", stdout(&o));
        assert!(stdout(&o).contains("0 failed"));
    }
    let o = krspread(&["verify", "--suite", "all", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    for r in v.as_array().unwrap() {
        assert_eq!(r["failed"], 0);
        assert_eq!(r["run"], r["passed"]);
    }
    assert_eq!(krspread(&["verify", "--suite", "bogus"]).status.code(), Some(2));
}

#[test]
fn verify_is_reproducible_per_seed() {
    let a = stdout(&krspread(&["verify", "--suite", "codec", "--seed", "3"]));
    let b = stdout(&krspread(&["verify", "--suite", "codec", "--seed", "3"]));
    let strip = |s: &str| s.lines().map(|l| l.split(" (").next().unwrap().to_string()).collect::<Vec<_>>();
    assert_eq!(strip(&a), strip(&b));
}
