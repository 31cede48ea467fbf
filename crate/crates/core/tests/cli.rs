mod common;

use std::path::PathBuf;
use std::process::{Command, Output};

use common::fixture_path;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_factoriad"))
        .args(args)
        .env_remove("FACTORIAD_SIZE_GUARD")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON report")
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn write_scratch(name: &str, text: &str) -> String {
    let p = scratch(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn monad_laws_pass_on_two() {
    let out = run(&["monad-laws", &fixture_path("two"), "--monad", "P"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["status"], "pass");
    assert_eq!(r["command"], "monad-laws");
    assert_eq!(r["inputs"][0]["sha256"].as_str().unwrap().len(), 64);
    assert!(r["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true && c["anchor"].is_string()));
}

#[test]
fn proper_only_enumeration_on_idem_is_empty() {
    let out = run(&["fs-enumerate", &fixture_path("idem"), "--proper-only"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["result"]["count"], 0);
    assert_eq!(r["result"]["systems"], serde_json::json!([]));
}

#[test]
fn all_all_on_two_fails_with_a_counterexample() {
    let out = run(&["fs-check", &fixture_path("two"), &fixture_path("fs_all_all")]);
    assert_eq!(out.status.code(), Some(1));
    let r = json(&out);
    assert_eq!(r["status"], "fail");
    let failed: Vec<_> = r["checks"].as_array().unwrap().iter().filter(|c| c["passed"] == false).collect();
    assert!(!failed.is_empty());
    assert!(failed.iter().any(|c| c["counterexample"].as_str().unwrap().contains("a is not orthogonal to a")));
}

#[test]
fn every_command_passes_on_split() {
    let split = fixture_path("split");
    for args in [
        vec!["check", &split],
        vec!["arrow", &split],
        vec!["freyd", &split],
        vec!["monad-laws", &split, "--monad", "Fr"],
        vec!["cubical", &split],
        vec!["fs-enumerate", &split],
        vec!["fs-enumerate", &split, "--strict"],
        vec!["roundtrip", &split],
        vec!["projection-check", &split],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn fs_to_algebra_and_back() {
    let two = fixture_path("two");
    let fs = write_scratch("isos_all.json", r#"{"E": ["id0", "id1"], "M": ["a", "id0", "id1"]}"#);
    let alg = scratch("two_alg.json");
    let out = run(&["fs-to-algebra", &two, &fs, "-o", alg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let out = run(&["algebra-check", &two, alg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let back = scratch("two_fs.json");
    let out = run(&["algebra-to-fs", &two, alg.to_str().unwrap(), "-o", back.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["fs-check", &two, back.to_str().unwrap(), "--proper"]);
    assert_eq!(out.status.code(), Some(0));
    let emitted: Value = serde_json::from_str(&std::fs::read_to_string(&back).unwrap()).unwrap();
    assert_eq!(emitted["E"], serde_json::json!(["id0", "id1"]));
}

#[test]
fn the_minus_face_of_split_is_not_compatible() {
    let split = fixture_path("split");
    let fs = write_scratch("split_isos_all.json", r#"{"E": ["idA", "idB"], "M": ["e", "idA", "idB", "p", "s"]}"#);
    let alg = scratch("split_alg.json");
    assert_eq!(run(&["fs-to-algebra", &split, &fs, "-o", alg.to_str().unwrap()]).status.code(), Some(0));
    let out = run(&["fr-compat", &split, alg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["status"], "fail");
    // and improper systems do not give Fr-algebras
    let out = run(&["fs-to-algebra", &split, &fs, "--monad", "Fr"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn emitted_categories_reload() {
    for name in ["idem", "split"] {
        for cmd in ["arrow", "freyd"] {
            let out_path = scratch(&format!("{cmd}_{name}.json"));
            let out = run(&[cmd, &fixture_path(name), "-o", out_path.to_str().unwrap()]);
            assert_eq!(out.status.code(), Some(0));
            let out = run(&["check", out_path.to_str().unwrap()]);
            assert_eq!(out.status.code(), Some(0), "{cmd} {name}");
        }
    }
}

#[test]
fn malformed_input_exits_two_with_a_location() {
    let bad = write_scratch("bad.json", "{\"objects\": [\"A\", \"A\"], \"morphisms\": [], \"identities\": {}, \"composition\": []}");
    let out = run(&["check", &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("objects[1]"));

    let truncated = write_scratch("truncated.json", "{\"objects\": [\n");
    let out = run(&["check", &truncated]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line"));

    let out = run(&["check", "/nonexistent/category.json"]);
    assert_eq!(out.status.code(), Some(2));

    let nonassoc = write_scratch(
        "nonassoc.json",
        r#"{"objects": ["*"], "morphisms": [{"name": "1", "dom": "*", "cod": "*"}, {"name": "a", "dom": "*", "cod": "*"}, {"name": "b", "dom": "*", "cod": "*"}],
            "identities": {"*": "1"}, "composition": [["a", "a", "b"], ["a", "b", "a"], ["b", "a", "b"], ["b", "b", "b"]]}"#,
    );
    // `check` reports the broken law as a failed check ...
    let out = run(&["check", &nonassoc]);
    assert_eq!(out.status.code(), Some(1));
    let r = json(&out);
    let assoc = r["checks"].as_array().unwrap().iter().find(|c| c["law"] == "associativity").unwrap();
    assert!(assoc["counterexample"].as_str().unwrap().contains("a ∘ (a ∘ a)"));
    // ... every other command refuses the input
    let out = run(&["monad-laws", &nonassoc]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("associativity"));

    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn size_guard_exits_three() {
    let out = run(&["--size-guard", "3", "monad-laws", &fixture_path("split")]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("size guard"));
    let out = Command::new(env!("CARGO_BIN_EXE_factoriad"))
        .args(["fs-enumerate", &fixture_path("split")])
        .env("FACTORIAD_SIZE_GUARD", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn output_is_byte_reproducible() {
    let two = fixture_path("two");
    let idem = fixture_path("idem");
    let all_all = fixture_path("fs_all_all");
    for args in [
        vec!["check", two.as_str()],
        vec!["arrow", idem.as_str()],
        vec!["freyd", idem.as_str()],
        vec!["cubical", two.as_str()],
        vec!["fs-enumerate", idem.as_str(), "--strict"],
        vec!["roundtrip", two.as_str()],
        vec!["--pretty", "projection-check", idem.as_str()],
        vec!["fs-check", two.as_str(), all_all.as_str()],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.status.code(), b.status.code());
    }
}

#[test]
fn pretty_output_is_text() {
    let out = run(&["--pretty", "monad-laws", &fixture_path("two")]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("monad-laws: pass"));
    assert!(serde_json::from_str::<Value>(&text).is_err());
}
