use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hecke-herm"))
        .args(args)
        .env_remove("HECKE_HERM_JOBS")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> serde_json::Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

#[test]
fn gram_in_r_basis_is_diagonal() {
    let v = json(&["gram", "B2", "--nu0", "0,0", "--dir", "2,1", "--basis", "R"]);
    assert_eq!(v["kind"], "R");
    let rows = v["text"].as_array().unwrap();
    assert_eq!(rows.len(), 8);
    for (i, row) in rows.iter().enumerate() {
        for (j, e) in row.as_array().unwrap().iter().enumerate() {
            if i != j {
                assert_eq!(e, "0");
            }
        }
    }
    assert_eq!(rows[1][1], "(t-1)/(t+1)");
}

#[test]
fn gram_on_a_singular_line_in_r_basis_is_rejected() {
    let out = run(&["gram", "B2", "--nu0", "0,0", "--dir", "1,0", "--basis", "R"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("degenerate"));
}

#[test]
fn jantzen_level_dims() {
    let v = json(&["jantzen", "B2", "--nu0", "0,0", "--dir", "1,0", "--t0", "1"]);
    assert_eq!(v["level_dims"], serde_json::json!([3, 1, 1, 3]));
    assert_eq!(v["bookkeeping_holds"], true);
}

#[test]
fn jantzen_on_an_isotypic_block() {
    let v = json(&[
        "jantzen", "G2", "--nu0", "0,0,0", "--dir", "0,1,-1", "--t0", "1", "--wtype", "2_2",
    ]);
    assert_eq!(v["orders"], serde_json::json!([1, 3]));
}

#[test]
fn steinberg_module_from_the_command_line() {
    let v = json(&[
        "jantzen", "B2", "--nu0", "0,0", "--dir", "1,1", "--levi", "1", "--sigma", "st", "--t0", "1/2",
    ]);
    assert_eq!(v["level_dims"], serde_json::json!([1, 3]));
}

#[test]
fn hkl_regular_table() {
    let v = json(&["hkl-regular", "B2", "--s", "3/2,1/2"]);
    assert_eq!(v["verdict"], true);
    assert_eq!(v["constituents"].as_array().unwrap().len(), 2);
}

#[test]
fn weights_at_the_subregular_point() {
    let v = json(&["weights", "B2", "--nu0", "0,0", "--dir", "1,0", "--t0", "1"]);
    let ws = v["weights"].as_array().unwrap();
    assert_eq!(ws.len(), 4);
    assert!(ws.iter().all(|w| w["multiplicity"] == 2));
    assert_eq!(v["tempered"], false);
}

#[test]
fn char_table_tsv() {
    let out = run(&["--format", "tsv", "char-table", "B2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 6);
    assert!(text.contains("0x2"));
}

#[test]
fn verify_reports_pass() {
    for args in [
        vec!["verify", "g2-subregular"],
        vec!["verify", "b2-subregular"],
        vec!["verify", "regular", "A2", "--s", "1,0,-1"],
        vec!["verify", "identities"],
    ] {
        let v = json(&args);
        assert_eq!(v["pass"], true, "{args:?}");
        let checks = v["checks"].as_array().unwrap();
        assert!(!checks.is_empty());
        for c in checks {
            for key in ["name", "expected", "expected_source", "got", "pass"] {
                assert!(c.get(key).is_some(), "{key}");
            }
        }
    }
}

#[test]
fn verify_is_byte_identical_across_runs_and_jobs() {
    let a = run(&["verify", "b2-subregular"]);
    let b = run(&["--jobs", "1", "verify", "b2-subregular"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(run(&["gram", "E9", "--nu0", "0", "--dir", "1"]).status.code(), Some(2));
    assert_eq!(run(&["gram", "B2", "--nu0", "0,x", "--dir", "1,0"]).status.code(), Some(2));
    assert_eq!(run(&["gram", "B2", "--nu0", "0.5,0", "--dir", "1,0"]).status.code(), Some(2));
    assert_eq!(run(&["hkl-regular", "B2", "--s", "1,0"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}
