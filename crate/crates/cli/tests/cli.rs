use std::io::Write;
use std::process::{Command, Output, Stdio};

use lrkit::oracle::{all_lr_sets, lr_coefficient};
use lrkit::tableaux::tableau;
use lrkit::{Boundary, Rect, SkewTableau};
use serde_json::{json, Value};

fn lrkit(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_lrkit"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    if let Some(s) = stdin {
        child.stdin.take().unwrap().write_all(s.as_bytes()).unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    assert!(o.status.success(), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn example() -> SkewTableau {
    tableau(3, 6, &[(2, &[1, 1, 1, 1]), (1, &[1, 2, 2]), (0, &[2, 3, 3])])
}

/// Canonical envelope, as emitted by the binary for a bare tableau.
fn envelope(t: &SkewTableau) -> String {
    let bare = serde_json::to_string(&t.to_json()).unwrap();
    let out = stdout(&lrkit(&["apply", "--op", "id", "--in", "-"], Some(&bare)));
    let v: Value = serde_json::from_str(&out).unwrap();
    let b = t.lr_boundary().unwrap().to_strings();
    assert_eq!(v["boundary"], json!({"mu": b[0], "nu": b[1], "lam": b[2]}));
    assert_eq!(v["kind"], "tableau");
    out
}

fn tableau_of(out: &str) -> SkewTableau {
    let v: Value = serde_json::from_str(out).unwrap();
    assert_eq!(v["convention"], lrkit::CONVENTION);
    SkewTableau::from_json(&serde_json::from_value(v["tableau"].clone()).unwrap()).unwrap()
}

#[test]
fn coeff_matches_enumeration() {
    let out = stdout(&lrkit(&["coeff", "--mu", "210", "--nu", "532", "--lam", "320", "--n", "9", "--d", "3", "--check"], None));
    let b = Boundary::parse(["210", "532", "320"], Rect::from_n_d(9, 3).unwrap()).unwrap();
    let c: usize = out.trim().parse().unwrap();
    assert!(c > 0);
    assert_eq!(c, lr_coefficient(&b));
}

#[test]
fn apply_varrho_and_id() {
    let input = envelope(&example());
    let out = stdout(&lrkit(&["apply", "--op", "varrho", "--in", "-"], Some(&input)));
    assert_eq!(tableau_of(&out).column_word().to_string(), "1231231245");
    let v: Value = serde_json::from_str(&out).unwrap();
    assert!(v["boundary"]["mu"].is_string());
    let echo = stdout(&lrkit(&["apply", "--op", "id", "--in", "-"], Some(&input)));
    assert_eq!(echo, input);
}

#[test]
fn apply_accepts_a_bare_tableau_and_a_hive() {
    let bare = serde_json::to_string(&example().to_json()).unwrap();
    let out = stdout(&lrkit(&["apply", "--op", "spade", "--in", "-"], Some(&bare)));
    assert_eq!(tableau_of(&out), lrkit::symmetries::spade(&example()).unwrap());
    let hive = stdout(&lrkit(&["convert", "--to", "hive", "--in", "-"], Some(&bare)));
    let img = stdout(&lrkit(&["apply", "--op", "rho1", "--in", "-"], Some(&hive)));
    let back = stdout(&lrkit(&["convert", "--to", "tableau", "--in", "-"], Some(&img)));
    assert_eq!(tableau_of(&back), lrkit::symmetries::rho1(&example()).unwrap());
}

#[test]
fn convert_round_trips_up_to_five() {
    for n in 2..=5 {
        for (_, ts) in all_lr_sets(n) {
            for t in &ts {
                let input = envelope(t);
                for model in ["puzzle", "hive", "companion"] {
                    let there = stdout(&lrkit(&["convert", "--to", model, "--in", "-"], Some(&input)));
                    let back = stdout(&lrkit(&["convert", "--to", "tableau", "--in", "-"], Some(&there)));
                    assert_eq!(back, input, "{model} round trip");
                }
            }
        }
    }
}

#[test]
fn enumerate_is_deterministic_and_models_agree() {
    let args = ["enumerate", "--mu", "21", "--nu", "21", "--lam", "210", "--n", "6", "--d", "3"];
    let a = stdout(&lrkit(&args, None));
    assert_eq!(a, stdout(&lrkit(&args, None)));
    let v: Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["count"], 2);
    let mut pargs = args.to_vec();
    pargs.extend(["--model", "puzzle"]);
    let p: Value = serde_json::from_str(&stdout(&lrkit(&pargs, None))).unwrap();
    assert_eq!(p["count"], 2);
    assert_eq!(p["convention"], lrkit::CONVENTION);
}

#[test]
fn svg_is_written_for_puzzles() {
    let dir = std::env::temp_dir().join(format!("lrkit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("p.svg");
    let input = envelope(&example());
    stdout(&lrkit(&["convert", "--to", "puzzle", "--in", "-", "--svg", path.to_str().unwrap()], Some(&input)));
    assert!(std::fs::read_to_string(&path).unwrap().starts_with("<svg"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_and_bench() {
    let table = stdout(&lrkit(&["verify", "--n", "4"], None));
    assert!(table.contains("violations"));
    let v: Value = serde_json::from_str(&stdout(&lrkit(&["verify", "--n", "4", "--d", "2", "--json"], None))).unwrap();
    assert_eq!(v["violations"].as_array().unwrap().len(), 0);
    let b: Value = serde_json::from_str(&stdout(&lrkit(
        &["bench", "--sizes", "110,1100", "--budget-ms", "1", "--trials", "20", "--json"],
        None,
    )))
    .unwrap();
    assert_eq!(b["bench"]["rows"].as_array().unwrap().len(), 3);
    assert_eq!(b["lozenge_mismatches"], 0);
}

#[test]
fn exit_codes() {
    assert_eq!(lrkit(&["frobnicate"], None).status.code(), Some(2));
    assert_eq!(lrkit(&["coeff", "--mu", "1"], None).status.code(), Some(2));
    assert_eq!(lrkit(&["apply", "--op", "nope", "--in", "-"], Some("{}")).status.code(), Some(2));
    assert_eq!(lrkit(&["apply", "--op", "id", "--in", "-"], Some("{not json")).status.code(), Some(1));
    let mut bad: Value = serde_json::from_str(&envelope(&example())).unwrap();
    bad["boundary"]["nu"] = json!("531");
    let bad = serde_json::to_string(&bad).unwrap();
    let o = lrkit(&["apply", "--op", "id", "--in", "-"], Some(&bad));
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("inconsistent boundary"));
    let o = lrkit(&["coeff", "--mu", "9", "--nu", "1", "--lam", "1", "--n", "4", "--d", "2"], None);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(lrkit(&["verify", "--n", "12"], None).status.code(), Some(1));
}
