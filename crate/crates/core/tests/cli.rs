mod common;

use std::path::{Path, PathBuf};
use std::process::Command;

use common::scratch_dir;
use serde_json::Value;
use skewtrace::cli::{run_command, ResultRecord};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["skewtrace"];
    argv.extend_from_slice(args);
    let code = run_command(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn records(out: &str) -> Vec<ResultRecord> {
    out.lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

fn write(dir: &Path, name: &str, body: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const J4: &str = r#"{"dim":4,"scalar_mode":"rational","entries":["0","1","0","0","-1","0","0","0","0","0","0","1","0","0","-1","0"]}"#;
const A6: &str = r#"{"dim":6,"scalar_mode":"rational","entries":[
  "0","1/2","-3","2","0","5/3",
  "-1/2","0","4","-1","7/2","1",
  "3","-4","0","2/5","-2","0",
  "-2","1","-2/5","0","1","-3",
  "0","-7/2","2","-1","0","1/4",
  "-5/3","-1","0","3","-1/4","0"]}"#;

#[test]
fn pf_of_standard_matrix_is_one() {
    let dir = scratch_dir("cli-pf");
    let j = write(&dir, "J4.json", J4);
    let (code, out, err) = run(&["pf", "--input", s(&j), "--method", "traces"]);
    assert_eq!(code, 0, "{err}");
    assert!(err.is_empty());
    let rec = &records(&out)[0];
    assert_eq!(rec.command, "pf");
    assert_eq!(rec.value, Some(Value::String("1".into())));
    assert_eq!(rec.runtime_ms, None);
}

#[test]
fn pf_methods_report_identical_values() {
    let dir = scratch_dir("cli-methods");
    let a = write(&dir, "A6.json", A6);
    let values: Vec<Value> = ["traces", "elimination", "definition"]
        .iter()
        .map(|m| {
            let (code, out, err) = run(&["pf", "--input", s(&a), "--method", m]);
            assert_eq!(code, 0, "{err}");
            records(&out)[0].value.clone().unwrap()
        })
        .collect();
    assert_eq!(values[0], values[1]);
    assert_eq!(values[0], values[2]);
}

#[test]
fn det_and_inv_methods_agree() {
    let dir = scratch_dir("cli-det");
    let c = write(&dir, "C.json", r#"{"dim":3,"entries":["2","1/3","0","-1","4","5","0","7/2","1"],"scalar_mode":"rational"}"#);
    let dets: Vec<Value> = ["bell", "lu", "definition"]
        .iter()
        .map(|m| records(&run(&["det", "--input", s(&c), "--method", m]).1)[0].value.clone().unwrap())
        .collect();
    assert_eq!(dets[0], dets[1]);
    assert_eq!(dets[0], dets[2]);
    let invs: Vec<Value> = ["bell", "lu"]
        .iter()
        .map(|m| records(&run(&["inv", "--input", s(&c), "--method", m]).1)[0].value.clone().unwrap())
        .collect();
    assert_eq!(invs[0], invs[1]);
}

#[test]
fn semichar_for_two_by_two_pair() {
    let dir = scratch_dir("cli-semichar");
    let a = write(&dir, "A2.json", r#"{"dim":2,"scalar_mode":"rational","entries":["0","3","-3","0"]}"#);
    let b = write(&dir, "B2.json", r#"{"dim":2,"scalar_mode":"rational","entries":["0","-2/5","2/5","0"]}"#);
    let (code, out, _) = run(&["semichar", "--a", s(&a), "--b", s(&b)]);
    assert_eq!(code, 0);
    let rec = &records(&out)[0];
    assert_eq!(rec.value, Some(serde_json::json!(["-6/5", "1"])));
    assert_eq!(rec.extra["residual_max"], Value::String("0".into()));
}

#[test]
fn pair_commands_report_exact_values() {
    let dir = scratch_dir("cli-pair");
    let a = write(&dir, "A6.json", A6);
    let j = write(&dir, "J6.json", r#"{"dim":6,"scalar_mode":"rational","entries":["0","1","0","0","0","0","-1","0","0","0","0","0","0","0","0","1","0","0","0","0","-1","0","0","0","0","0","0","0","0","1","0","0","0","0","-1","0"]}"#);
    let (code, out, _) = run(&["pfprod", "--a", s(&a), "--b", s(&j)]);
    assert_eq!(code, 0);
    let pfprod = records(&out)[0].value.clone();
    let (_, out, _) = run(&["pf", "--input", s(&a), "--method", "definition"]);
    assert_eq!(pfprod, records(&out)[0].value);
    let (code, out, _) = run(&["skewinv", "--a", s(&a), "--b", s(&j)]);
    assert_eq!(code, 0);
    let rows = records(&out)[0].value.clone().unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 6);
}

#[test]
fn mathematical_errors_exit_one() {
    let dir = scratch_dir("cli-math");
    let odd = write(&dir, "odd.json", r#"{"dim":3,"scalar_mode":"rational","entries":["0","1","2","-1","0","3","-2","-3","0"]}"#);
    let (code, out, err) = run(&["pf", "--input", s(&odd)]);
    assert_eq!(code, 1);
    assert!(out.is_empty());
    assert!(err.contains("even dimension"), "{err}");
    let sing = write(&dir, "sing.json", r#"{"dim":2,"scalar_mode":"rational","entries":["1","2","2","4"]}"#);
    assert_eq!(run(&["inv", "--input", s(&sing)]).0, 1);
    let not_skew = write(&dir, "ns.json", r#"{"dim":2,"scalar_mode":"rational","entries":["0","1","1","0"]}"#);
    assert_eq!(run(&["pf", "--input", s(&not_skew)]).0, 1);
}

#[test]
fn usage_errors_exit_two() {
    let dir = scratch_dir("cli-usage");
    let bad = write(&dir, "bad.json", r#"{"dim":2,"scalar_mode":"rational","entries":["0","1/0","-1","0"]}"#);
    let (code, out, err) = run(&["pf", "--input", s(&bad)]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("entry 1"), "{err}");
    let short = write(&dir, "short.json", r#"{"dim":2,"scalar_mode":"rational","entries":["0","1","-1"]}"#);
    assert_eq!(run(&["pf", "--input", s(&short)]).0, 2);
    assert_eq!(run(&["pf", "--input", s(&dir.join("missing.json"))]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["pf", "--input", s(&bad), "--method", "magic"]).0, 2);
    let j4 = write(&dir, "J4.json", J4);
    let j2 = write(&dir, "J2.json", r#"{"dim":2,"scalar_mode":"rational","entries":["0","1","-1","0"]}"#);
    assert_eq!(run(&["pfprod", "--a", s(&j4), "--b", s(&j2)]).0, 2);
    assert_eq!(run(&["bench", "--dims", "8,4"]).0, 2);
}

#[test]
fn help_goes_to_stdout() {
    let (code, out, err) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("pfprod"));
    assert!(err.is_empty());
}

#[test]
fn verify_is_reproducible_and_passes() {
    let args = ["verify", "--max-dim", "6", "--trials", "4", "--seed", "3"];
    let (code, first, err) = run(&args);
    assert_eq!(code, 0, "{err}");
    let (_, second, _) = run(&args);
    assert_eq!(first, second);
    let recs = records(&first);
    let summary = recs.last().unwrap();
    assert_eq!(summary.extra["all_passed"], Value::Bool(true));
    assert!(recs.iter().all(|r| r.seed == Some(3)));
}

#[test]
fn exact_output_is_byte_identical_and_timing_is_opt_in() {
    let dir = scratch_dir("cli-bytes");
    let a = write(&dir, "A6.json", A6);
    let first = run(&["pf", "--input", s(&a)]).1;
    assert_eq!(first, run(&["pf", "--input", s(&a)]).1);
    let timed = records(&run(&["pf", "--input", s(&a), "--timing"]).1);
    assert!(timed[0].runtime_ms.is_some());
}

#[test]
fn bench_single_dim_has_no_slope() {
    let (code, out, err) = run(&["bench", "--dims", "8", "--method", "elimination", "--repeat", "3"]);
    assert_eq!(code, 0, "{err}");
    let recs = records(&out);
    assert_eq!(recs.len(), 2);
    assert!(recs[0].runtime_ms.is_some());
    assert_eq!(recs[1].extra["slope"], Value::Null);
}

#[test]
fn binary_honours_scalar_mode_environment() {
    let dir = scratch_dir("cli-env");
    let a = write(&dir, "A.json", r#"{"dim":2,"entries":["0","0.5","-0.5","0"]}"#);
    let bin = env!("CARGO_BIN_EXE_skewtrace");
    let output = Command::new(bin)
        .args(["pf", "--input", s(&a)])
        .env("SKEWTRACE_SCALAR_MODE", "f64")
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0));
    let rec: ResultRecord = serde_json::from_slice(&output.stdout).unwrap();
    assert_eq!(rec.value, Some(Value::String("0.5".into())));
    assert_eq!(rec.scalar_mode, Some(skewtrace::ScalarMode::F64));

    let output = Command::new(bin)
        .args(["pf", "--input", s(&a)])
        .env_remove("SKEWTRACE_SCALAR_MODE")
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(2));
    assert!(output.stdout.is_empty());
}
