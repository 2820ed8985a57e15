use std::path::PathBuf;
use std::process::{Command, Output};

fn spec(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../specs").join(name)
}

fn affprod(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_affprod")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path_arg(p: &std::path::Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn encode_then_decode_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let code = spec("reed-muller-3.json");
    let info = dir.path().join("info.txt");
    std::fs::write(&info, "101\n011\n110\n").unwrap();
    let enc = affprod(&["encode", "--code", path_arg(&code), "--in", path_arg(&info)]);
    assert!(enc.status.success(), "{}", String::from_utf8_lossy(&enc.stderr));
    let cw = dir.path().join("cw.txt");
    std::fs::write(&cw, &enc.stdout).unwrap();
    let dec = affprod(&["decode", "--code", path_arg(&code), "--in", path_arg(&cw)]);
    assert_eq!(dec.status.code(), Some(0));
    assert_eq!(dec.stdout, enc.stdout);

    // three narrowband rows and three impulse columns, written as erasures
    let noisy: Vec<String> = stdout(&enc)
        .lines()
        .enumerate()
        .map(|(i, row)| {
            row.chars().enumerate().map(|(j, c)| if i < 3 || [1, 4, 6].contains(&j) { 'e' } else { c }).collect()
        })
        .collect();
    let rx = dir.path().join("rx.txt");
    std::fs::write(&rx, noisy.join("\n")).unwrap();
    let dec = affprod(&["decode", "--code", path_arg(&code), "--in", path_arg(&rx)]);
    assert_eq!(dec.stdout, enc.stdout);
}

#[test]
fn decode_failure_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let rx = dir.path().join("rx.txt");
    // two erased columns against row codes of distance two
    std::fs::write(&rx, "ee10\nee01\nee01\nee10\n").unwrap();
    let out = affprod(&["decode", "--code", path_arg(&spec("even4-product.json")), "--in", path_arg(&rx)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("ambiguous"));
}

#[test]
fn usage_and_input_errors_exit_two() {
    assert_eq!(affprod(&["verify", "--bogus"]).status.code(), Some(2));
    assert_eq!(affprod(&["construct", "--code", "/no/such/file.json"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"row": {"family": "even_weight", "n": 4}, "colour": 3}"#).unwrap();
    let out = affprod(&["construct", "--code", path_arg(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
}

#[test]
fn enumerate_counts_constant_weight_matrices() {
    let code = spec("even4-product.json");
    let out = affprod(&["enumerate", "--code", path_arg(&code), "--filter", "row-weight=2,col-weight=2", "--count"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "90");
    let all = affprod(&["enumerate", "--code", path_arg(&code), "--count"]);
    assert_eq!(stdout(&all).trim(), "512");
    let listed = affprod(&["enumerate", "--code", path_arg(&code), "--filter", "row-weight=2,col-weight=2", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&listed.stdout).unwrap();
    assert_eq!(v["count"], 90);
    assert_eq!(v["codewords"].as_array().unwrap().len(), 90);
}

#[test]
fn table_lists_both_dimensions() {
    let out = affprod(&["table", "--gabidulin", "3..7", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let pairs: Vec<(u64, u64)> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|r| (r["product_dim"].as_u64().unwrap(), r["gabidulin_dim"].as_u64().unwrap()))
        .collect();
    assert_eq!(pairs, [(9, 4), (16, 8), (25, 16), (36, 32), (49, 64)]);
    let text = stdout(&affprod(&["table", "--gabidulin", "3..=7"]));
    assert_eq!(text.lines().count(), 6);
    assert!(text.lines().last().unwrap().split_whitespace().eq(["7", "128x128", "49", "64"]));
}

#[test]
fn verify_passes_on_the_sample_codes() {
    for name in ["even4-product.json", "rep4-even4-ia.json", "reed-muller-3.json"] {
        let out = affprod(&["verify", "--code", path_arg(&spec(name)), "--json"]);
        assert_eq!(out.status.code(), Some(0), "{name}");
        let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(v["ok"], true);
        assert_eq!(v["checks"].as_array().unwrap().len(), 6);
    }
}

#[test]
fn construct_reports_the_code() {
    let out = affprod(&["construct", "--code", path_arg(&spec("reed-muller-3.json")), "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["kind"], "construction_ia");
    assert_eq!(v["dimension"], 9);
    assert_eq!(v["row_code"]["distance"], 4);
    assert_eq!(v["leader"].as_array().unwrap().len(), 8);
}

#[test]
fn simulate_json_matches_text() {
    let code = spec("rep4-even4-ia.json");
    let args =
        ["simulate", "--code", path_arg(&code), "--e-nbd", "1", "--e-imp", "1", "--trials", "300", "--seed", "7"];
    let json = affprod(&[&args[..], &["--json"]].concat());
    let v: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(v["success_rate"], 1.0);
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
    let text = stdout(&affprod(&args));
    assert!(text.contains("successes            300"));
}

#[test]
fn irregular_subcommands() {
    let code = spec("irregular-chain.json");
    let dim = affprod(&["irregular-dim", "--code", path_arg(&code), "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&dim.stdout).unwrap();
    assert_eq!(v["dimension_bound"], 2);
    assert_eq!(v["exact"], true);

    let enc = affprod(&["irregular-encode", "--code", path_arg(&code), "--info", "11"]);
    assert!(enc.status.success());
    let dir = tempfile::tempdir().unwrap();
    let w = dir.path().join("w.txt");
    std::fs::write(&w, &enc.stdout).unwrap();
    assert_eq!(affprod(&["irregular-verify", "--code", path_arg(&code), "--in", path_arg(&w)]).status.code(), Some(0));
    std::fs::write(&w, "1000\n0000\n0000\n0000\n").unwrap();
    assert_eq!(affprod(&["irregular-verify", "--code", path_arg(&code), "--in", path_arg(&w)]).status.code(), Some(1));
    assert_eq!(affprod(&["irregular-verify", "--code", path_arg(&code), "--all"]).status.code(), Some(0));
    assert_eq!(affprod(&["irregular-encode", "--code", path_arg(&code), "--info", "101"]).status.code(), Some(2));
}
