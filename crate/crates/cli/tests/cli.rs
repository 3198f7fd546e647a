use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn corpus(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("../core/corpus");
    p.push(format!("{name}.mrf"));
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_morphic-bwt")).args(args).env_remove("MORPHIC_BWT_CACHE").output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn json_lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn analyze_fibonacci() {
    let out = run(&["analyze", &corpus("fibonacci"), "-i", "5"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["n"], 13);
    assert_eq!(v["r_bwt"], 2);
    assert_eq!(v["word"], "abaababaabaab");
}

#[test]
fn analyze_phi() {
    let v = json(&run(&["analyze", &corpus("phi"), "-i", "3"]));
    assert_eq!((v["r"].as_u64(), v["r_bwt"].as_u64()), (Some(16), Some(6)));
    let v = json(&run(&["analyze", &corpus("phi"), "-i", "0"]));
    assert_eq!((v["word"].as_str(), v["r"].as_u64(), v["r_bwt"].as_u64()), (Some("a"), Some(1), Some(1)));
}

#[test]
fn analyze_csv_has_one_row() {
    let out = run(&["analyze", &corpus("phi"), "-i", "3", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("morphism,digest,letter,i,n,r,r_bwt"));
    assert!(lines[1].contains(",1 3 7,"));
}

#[test]
fn sweep_phi_doubles_runs() {
    let out = run(&["sweep", &corpus("phi"), "--i", "1..10"]);
    assert!(out.status.success());
    let mut reader = csv::Reader::from_reader(&out.stdout[..]);
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 10);
    let headers = reader.headers().unwrap().clone();
    let col = |name: &str| headers.iter().position(|h| h == name).unwrap();
    for (k, row) in rows.iter().enumerate() {
        let i = k + 1;
        assert_eq!(row[col("i")].parse::<usize>().unwrap(), i);
        assert_eq!(row[col("r")].parse::<usize>().unwrap(), 1 << (i + 1));
        assert_eq!(row[col("status")].to_string(), "ok");
    }
}

#[test]
fn sweep_thue_morse_is_linear_in_i() {
    let out = run(&["sweep", &corpus("tm"), "--i", "1..12", "--format", "json"]);
    let rows = json_lines(&out);
    assert_eq!(rows.len(), 12);
    let ratios: Vec<f64> = rows.iter().map(|r| r["r_bwt"].as_f64().unwrap() / r["i"].as_f64().unwrap()).collect();
    let (lo, hi) = ratios[1..].iter().fold((f64::MAX, 0.0f64), |(lo, hi), &x| (lo.min(x), hi.max(x)));
    assert!(hi / lo <= 3.0, "{ratios:?}");
}

#[test]
fn sweep_rejects_empty_range() {
    let out = run(&["sweep", &corpus("phi"), "--i", "5..3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sweep_flags_rows_over_the_cap() {
    let out = run(&["sweep", &corpus("phi"), "--i", "1..6", "--cap-len", "100"]);
    assert_eq!(out.status.code(), Some(3));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 7);
    assert!(text.lines().last().unwrap().ends_with("cap-exceeded"));
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    for args in [
        vec!["sweep", "--i", "1..8", "--format", "csv"],
        vec!["verify", "--random", "5", "--seed", "3", "--i-max", "5"],
    ] {
        let mut args: Vec<String> = args.into_iter().map(String::from).collect();
        if args[0] == "sweep" {
            args.insert(1, corpus("tm"));
        }
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        assert_eq!(run(&args).stdout, run(&args).stdout);
    }
}

#[test]
fn verify_builtin_corpus() {
    let out = run(&["verify", "--builtin-corpus", "--checks", "all"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let verdicts = json_lines(&out);
    assert!(verdicts.iter().all(|v| v["status"] != "fail"));
    assert!(verdicts.iter().any(|v| v["status"] == "pass"));
}

#[test]
fn verify_random_bispecial_bounds() {
    let out =
        run(&["verify", "--random", "200", "--seed", "7", "--checks", "bispecial_bounds", "--cap-bispecial", "20000"]);
    assert_eq!(out.status.code(), Some(0));
    let verdicts = json_lines(&out);
    assert!(verdicts.iter().all(|v| v["check"] == "bispecial_bounds" && v["seed"] == 7));
}

#[test]
fn verify_periodic_spec_skips_gated_checks() {
    let out = run(&["verify", "--spec", &corpus("abkb")]);
    assert_eq!(out.status.code(), Some(0));
    let verdicts = json_lines(&out);
    for check in ["bispecial_lift", "structural_decomposition"] {
        let v: Vec<&Value> = verdicts.iter().filter(|v| v["check"] == check).collect();
        assert_eq!(v.len(), 1);
        assert_eq!(v[0]["status"], "skip");
    }
}

#[test]
fn verify_uses_the_cache_directory() {
    let dir = std::env::temp_dir().join(format!("morphic-bwt-cli-cache-{}", std::process::id()));
    let spec = corpus("aab_b");
    let args = ["verify", "--spec", spec.as_str(), "--i-max", "5"];
    let first =
        Command::new(env!("CARGO_BIN_EXE_morphic-bwt")).args(args).env("MORPHIC_BWT_CACHE", &dir).output().unwrap();
    assert!(std::fs::read_dir(&dir).unwrap().count() > 0);
    let second =
        Command::new(env!("CARGO_BIN_EXE_morphic-bwt")).args(args).env("MORPHIC_BWT_CACHE", &dir).output().unwrap();
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.stdout, run(&args).stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_needs_an_input() {
    assert_eq!(run(&["verify"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--random", "1", "--checks", "bogus"]).status.code(), Some(2));
}

#[test]
fn classify_reports() {
    let v = json(&run(&["classify", &corpus("phi")]));
    assert_eq!(v["factor_complexity"], "Θ(n log log n)");
    assert_eq!(v["highly_compressible"], "yes");
    let v = json(&run(&["classify", &corpus("abkb")]));
    assert_eq!(v["factor_complexity"], "ultimately-periodic");
    let v = json(&run(&["classify", &corpus("tm")]));
    assert_eq!(v["primitive"], true);
    assert_eq!(v["r_bwt"], "O(log n)");
}

#[test]
fn classify_non_binary_warns() {
    let out = run(&["classify", &corpus("psi")]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
    assert_eq!(json(&out)["factor_complexity"], "Θ(n log n)");
}

#[test]
fn parse_errors_name_the_line() {
    let path = std::env::temp_dir().join(format!("morphic-bwt-bad-{}.mrf", std::process::id()));
    std::fs::write(&path, "a -> ab\nb ->\n").unwrap();
    let out = run(&["analyze", path.to_str().unwrap(), "-i", "2"]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn cap_exceeded_exits_three() {
    let out = run(&["analyze", &corpus("phi"), "-i", "30", "--cap-len", "1000"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn out_flag_writes_a_file() {
    let path = std::env::temp_dir().join(format!("morphic-bwt-out-{}.json", std::process::id()));
    let out = run(&["analyze", &corpus("fibonacci"), "-i", "4", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(v["n"], 8);
}

#[test]
fn word_and_iterate_helpers() {
    let v = json(&run(&["word", "abaababaabaab"]));
    assert_eq!(v["r_bwt"], 2);
    let out = run(&["iterate", &corpus("tm"), "-i", "3"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "abbabaab\n");
}
