use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn lindim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lindim"))
        .args(args)
        .env_remove("LINDIM_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

#[test]
fn c6_regular_over_gf2() {
    let o = lindim(&["compute", "--catalog", "C6", "--action", "regular", "--field", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("lindim=4\n"));
}

#[test]
fn s4_on_cosets_of_c4() {
    let action = format!("cosets:{}", data("c4.grp"));
    let o = lindim(&["compute", "--catalog", "S4", "--action", &action, "--field", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("lindim=3\n"));
}

#[test]
fn psl32_fast_path() {
    let o = lindim(&["compute", "--catalog", "PSL32", "--field", "2", "--mode", "primitive"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "lindim=3\nmethod=primitive-fastpath\n");
}

#[test]
fn group_file_source() {
    let o = lindim(&["compute", "--group", &data("c4.grp"), "--field", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("lindim=1\n"));
}

#[test]
fn formula_mode_matches_search() {
    let search = lindim(&["compute", "--action", "wreath-prod:S3,S2", "--field", "3"]);
    let formula = lindim(&["compute", "--action", "wreath-prod:S3,S2", "--field", "3", "--mode", "formula"]);
    assert_eq!(stdout(&search).lines().next(), Some("lindim=3"));
    assert_eq!(stdout(&formula).lines().next(), Some("lindim=3"));
    let none = lindim(&["compute", "--catalog", "PSL32", "--field", "2", "--mode", "formula"]);
    assert_eq!(none.status.code(), Some(2));
    assert!(stderr(&none).contains("OutOfTheoremRange"));
}

#[test]
fn interval_exits_three() {
    let o = Command::new(env!("CARGO_BIN_EXE_lindim"))
        .args(["compute", "--catalog", "S5", "--action", "ksets:2", "--field", "2", "--mode", "general"])
        .env("LINDIM_CAP", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).starts_with("lindim=2..10\n"));
}

#[test]
fn exit_codes_for_bad_input_and_failed_computation() {
    let bad_field = lindim(&["compute", "--catalog", "S4", "--field", "6"]);
    assert_eq!(bad_field.status.code(), Some(1));
    let bad_action = lindim(&["compute", "--catalog", "S4", "--action", "orbit", "--field", "2"]);
    assert_eq!(bad_action.status.code(), Some(1));
    let unknown = lindim(&["compute", "--catalog", "Q8", "--field", "2"]);
    assert_eq!(unknown.status.code(), Some(1));
    let cyclic = lindim(&["compute", "--catalog", "C5", "--field", "2", "--mode", "primitive"]);
    assert_eq!(cyclic.status.code(), Some(2));
    assert!(stderr(&cyclic).contains("UseGeneralPath"));
}

#[test]
fn verify_round_trip_and_tampering() {
    let dir = tempfile::tempdir().unwrap();
    let w = dir.path().join("s4.wit");
    let w = w.to_str().unwrap();
    let o = lindim(&["compute", "--catalog", "S4", "--field", "3", "--output", w]);
    assert_eq!(o.status.code(), Some(0));
    let ok = lindim(&["verify", "--witness", w, "--catalog", "S4"]);
    assert_eq!(ok.status.code(), Some(0), "{}", stdout(&ok));

    // copy the second phi vector over the third
    let text = fs::read_to_string(w).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    let at = lines.iter().position(|l| *l == "phi").unwrap();
    let mut edited: Vec<String> = lines.iter().map(|s| s.to_string()).collect();
    let second = lines[at + 2].split_once(':').unwrap().1;
    let label = lines[at + 3].split_once(':').unwrap().0;
    edited[at + 3] = format!("{label}:{second}");
    let dup = dir.path().join("dup.wit");
    fs::write(&dup, edited.join("\n") + "\n").unwrap();
    let o = lindim(&["verify", "--witness", dup.to_str().unwrap(), "--catalog", "S4"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stdout(&o).contains("NotInjective"), "{}", stdout(&o));

    // same shape as S4, different generators
    let other = dir.path().join("other.grp");
    fs::write(&other, "degree 4\ngen (1,3)\ngen (2,4)\n").unwrap();
    let wrong = lindim(&["verify", "--witness", w, "--group", other.to_str().unwrap()]);
    assert_ne!(wrong.status.code(), Some(0));
    assert!(stdout(&wrong).contains("IntertwineFailure"), "{}", stdout(&wrong));

    let garbage = dir.path().join("garbage.wit");
    fs::write(&garbage, "not a witness\n").unwrap();
    let o = lindim(&["verify", "--witness", garbage.to_str().unwrap(), "--catalog", "S4"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn identical_runs_write_identical_files() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.wit");
    let b = dir.path().join("b.wit");
    for p in [&a, &b] {
        let o = lindim(&["compute", "--catalog", "T6_8", "--field", "2", "--seed", "5", "--output", p.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
}

#[test]
fn theorem_suite_has_the_product_row() {
    let o = lindim(&["suite", "theorems"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o)
        .lines()
        .any(|l| l == "S3wrS2-product GF(3) computed=3 expected=3 [product-wreath] PASS"));
}

#[test]
fn suite_json_records() {
    let o = lindim(&["suite", "oracle", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let first = stdout(&o).lines().next().unwrap().to_string();
    let v: serde_json::Value = serde_json::from_str(&first).unwrap();
    for key in ["case", "field", "computed", "expected", "theorem", "status"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["status"], "PASS");
}
