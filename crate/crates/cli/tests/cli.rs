use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_quiver-pi")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, stdout, stderr) = run(args);
    assert_eq!(code, 0, "{stderr}");
    serde_json::from_str(&stdout).unwrap()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn pi1_json_is_deterministic() {
    let f = fixture("example1_I1.json");
    let first = run(&["pi1", s(&f), "--json"]);
    let second = run(&["pi1", s(&f), "--json", "--threads", "1"]);
    assert_eq!(first.0, 0);
    assert_eq!(first.1, second.1);
    let v: Value = serde_json::from_str(&first.1).unwrap();
    assert_eq!(v["group"]["abelian_invariants"]["free_rank"], 1);
    assert!(v["input_digest"].as_str().unwrap().starts_with("sha256:"));
}

#[test]
fn pi1_text_reports() {
    let (code, out, _) = run(&["pi1", s(&fixture("ladder3.json")), "--simplify"]);
    assert_eq!(code, 0);
    assert!(out.contains("order: 3"), "{out}");
    assert!(out.contains("simplified:"));
    let v = json(&["pi1", s(&fixture("example1_I2.json")), "--json"]);
    assert_eq!(v["group"]["order"]["order"], 1);
}

#[test]
fn basepoint_override() {
    let a = json(&["pi1", s(&fixture("ladder3.json")), "--json"]);
    let b = json(&["pi1", s(&fixture("ladder3.json")), "--base", "x0", "--json"]);
    assert_eq!(b["basepoint"], "x0");
    assert_eq!(a["group"]["abelian_invariants"], b["group"]["abelian_invariants"]);
    let (code, _, _) = run(&["pi1", s(&fixture("ladder3.json")), "--base", "nowhere"]);
    assert_eq!(code, 3);
}

#[test]
fn parse_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{ not json").unwrap();
    assert_eq!(run(&["pi1", s(&bad)]).0, 2);
    assert_eq!(run(&["pi1", s(&dir.path().join("missing.json"))]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
}

#[test]
fn invalid_quiver_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("short.json");
    let text = r#"{"vertices": ["1", "2"], "arrows": [{"name": "a", "from": "1", "to": "2"}],
        "relations": [[{"coef": "1", "path": ["a"]}]], "truncation": 2, "basepoint": "1"}"#;
    std::fs::write(&bad, text).unwrap();
    assert_eq!(run(&["pi1", s(&bad)]).0, 3);
    let (code, out, _) = run(&["check", s(&bad), "--json"]);
    assert_eq!(code, 3);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["valid"], false);
    assert!(!v["issues"].as_array().unwrap().is_empty());
}

#[test]
fn check_summarizes() {
    let v = json(&["check", s(&fixture("example1_I1.json")), "--json"]);
    assert_eq!(v["valid"], true);
    assert_eq!(v["triangular"], true);
    assert_eq!(v["constricted"], false);
    let v = json(&["check", s(&fixture("qg_Z2.json")), "--json"]);
    assert_eq!(v["triangular"], false);
}

#[test]
fn change_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("I2.json");
    let q = fixture("example1_I1.json");
    let v = json(&["change", s(&q), s(&fixture("example1_substitution.json")), "-o", s(&out), "--json"]);
    assert_eq!(v["dimensions_equal"], true);
    assert_eq!(v["after"]["group"]["order"]["order"], 1);
    let reread = json(&["pi1", s(&out), "--json"]);
    assert_eq!(reread["input_digest"], v["after"]["input_digest"]);
    assert_eq!(reread["group"], v["after"]["group"]);
    let same = json(&["change", s(&q), "--builtin", "example1", "--json"]);
    assert_eq!(same["after"], v["after"]);
}

#[test]
fn identity_change_keeps_group() {
    let v = json(&["change", s(&fixture("example1_I1.json")), s(&fixture("identity_substitution.json")), "--json"]);
    assert_eq!(v["before"]["group"], v["after"]["group"]);
}

#[test]
fn builtin_changes() {
    let v = json(&["change", s(&fixture("ladder3.json")), "--builtin", "ladder_trivializer", "--json"]);
    assert_eq!(v["after"]["group"]["order"]["order"], 1);
    assert_eq!(v["dimensions_equal"], true);
    let v = json(&["change", s(&fixture("loops_2_3.json")), "--builtin", "loop_freeer", "--param", "2,3", "--json"]);
    assert_eq!(v["after"]["group"]["abelian_invariants"]["free_rank"], 2);
}

#[test]
fn bad_substitution_exits_4() {
    let dir = tempfile::tempdir().unwrap();
    let sub = dir.path().join("sub.json");
    std::fs::write(&sub, r#"{"assignments": [{"arrow": "alpha", "rho": [{"coef": "1", "path": ["beta"]}]}]}"#).unwrap();
    let (code, _, err) = run(&["change", s(&fixture("example1_I1.json")), s(&sub)]);
    assert_eq!(code, 4, "{err}");
    let (code, _, _) = run(&["change", s(&fixture("example1_I1.json")), "--builtin", "no_such"]);
    assert_eq!(code, 4);
}

#[test]
fn construct_params() {
    assert_eq!(run(&["construct", "ladder", "1"]).0, 5);
    assert_eq!(run(&["construct", "loops", "0"]).0, 5);
    let (code, out, _) = run(&["construct", "ladder", "3"]);
    assert_eq!(code, 0);
    let fixture_text = std::fs::read_to_string(fixture("ladder3.json")).unwrap();
    assert_eq!(out.trim(), fixture_text.trim());
}

#[test]
fn cover_quotient_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let cover = dir.path().join("cover.json");
    let action = dir.path().join("action.json");
    let quotient = dir.path().join("quotient.json");
    assert_eq!(run(&["construct", "ladder-cover", "3", "--action-out", s(&action), "-o", s(&cover)]).0, 0);
    assert_eq!(json(&["pi1", s(&cover), "--json"])["group"]["order"]["order"], 1);
    assert_eq!(run(&["op", "quotient", s(&cover), s(&action), "-o", s(&quotient)]).0, 0);
    assert_eq!(json(&["pi1", s(&quotient), "--json"])["group"]["order"]["order"], 3);
}

#[test]
fn operations() {
    let v = {
        let (code, out, _) = run(&["op", "product", s(&fixture("ladder2.json")), s(&fixture("ladder3.json"))]);
        assert_eq!(code, 0);
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("p.json");
        std::fs::write(&p, out).unwrap();
        json(&["pi1", s(&p), "--json"])
    };
    assert_eq!(v["group"]["order"]["order"], 6);
    let (code, _, _) =
        run(&["op", "coproduct", s(&fixture("ladder2.json")), s(&fixture("example1_I1.json")), "--at", "x2,3"]);
    assert_eq!(code, 0);
    let (code, _, _) =
        run(&["op", "coproduct", s(&fixture("qg_Z2.json")), s(&fixture("ladder2.json")), "--at", "2,x1"]);
    assert_eq!(code, 6);
    let (code, _, _) =
        run(&["op", "coproduct", s(&fixture("ladder2.json")), s(&fixture("ladder2.json")), "--at", "x9,x0"]);
    assert_eq!(code, 6);
}

#[test]
fn assemble_writes_files() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out, err) =
        run(&["assemble", "a", s(&fixture("Z2.json")), s(&fixture("trivial.json")), "-o", s(dir.path())]);
    assert_eq!(code, 0, "{out}{err}");
    for f in ["quiver.json", "I1.json", "I2.json", "report.json"] {
        assert!(dir.path().join(f).exists(), "{f} missing");
    }
    let i1 = json(&["pi1", s(&dir.path().join("I1.json")), "--json"]);
    assert_eq!(i1["group"]["order"]["order"], 2);
    let i2 = json(&["pi1", s(&dir.path().join("I2.json")), "--json"]);
    assert_eq!(i2["group"]["order"]["order"], 1);
    assert_eq!(i1["dimension"], i2["dimension"]);
}

#[test]
fn assemble_rejects_bad_expression() {
    assert_eq!(run(&["assemble", "b", "Z_2 x"]).0, 2);
}

#[test]
fn fixtures_round_trip() {
    use quiver_pi::change::Substitution;
    use quiver_pi::group::GroupPresentation;
    use quiver_pi::quiver::BoundQuiver;
    for entry in std::fs::read_dir(fixture("")).unwrap() {
        let path = entry.unwrap().path();
        let text = std::fs::read_to_string(&path).unwrap();
        if let Ok(bq) = BoundQuiver::from_json(&text) {
            assert_eq!(BoundQuiver::from_json(&bq.to_json()).unwrap(), bq, "{}", path.display());
            if let Ok(s) = Substitution::from_json(&bq.quiver, &text) {
                panic!("{} parses as both kinds: {s:?}", path.display());
            }
        } else if let Ok(g) = GroupPresentation::from_json(&text) {
            assert_eq!(GroupPresentation::from_json(&g.to_json()).unwrap(), g);
        }
    }
    let bq = BoundQuiver::from_json(&std::fs::read_to_string(fixture("example1_I1.json")).unwrap()).unwrap();
    let text = std::fs::read_to_string(fixture("example1_substitution.json")).unwrap();
    let s = Substitution::from_json(&bq.quiver, &text).unwrap();
    assert_eq!(Substitution::from_json(&bq.quiver, &s.to_json(&bq.quiver)).unwrap(), s);
}
