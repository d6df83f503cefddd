//! End-to-end checks of the installed binary: exit codes, stream separation,
//! JSON shapes, and the table cells named in the interface contract.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_biquat")).args(args).output().expect("spawn biquat")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn eval_success_is_quiet_on_stderr() {
    let out = run(&["eval", "1 + 2i + 3Ij"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1 + 2i + 3Ij\n");
    assert_eq!(stderr(&out), "");
}

#[test]
fn eval_errors_keep_stdout_empty() {
    let syntax = run(&["eval", "1 +"]);
    assert_eq!(syntax.status.code(), Some(2));
    assert_eq!(stdout(&syntax), "");
    assert!(stderr(&syntax).contains("syntax error at column 4"));

    let domain = run(&["eval", "1/(i + Ij)"]);
    assert_eq!(domain.status.code(), Some(1));
    assert_eq!(stdout(&domain), "");
    assert!(stderr(&domain).contains("columns 3-10"));
    assert!(stderr(&domain).contains("not invertible"));
}

#[test]
fn eval_json_has_exactly_eight_reals() {
    let out = run(&["eval", "0.5 - I", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let obj = v.as_object().unwrap();
    assert_eq!(obj.len(), 8);
    assert_eq!(v["w_re"], serde_json::json!(0.5));
    assert_eq!(v["w_im"], serde_json::json!(-1.0));
}

#[test]
fn classify_flags_follow_the_value() {
    let out = run(&["classify", "i + Ij"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("nilpotent=true"));
    assert!(text.contains("divisor_of_zero=true"));
    assert!(text.contains("idempotent=false"));

    let json = run(&["classify", "i + Ij", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(v["is_nilpotent"], serde_json::json!(true));
    assert_eq!(v["is_pure"], serde_json::json!(true));
    assert_eq!(v.as_object().unwrap().len(), 16);
}

#[test]
fn repr_forms_all_answer() {
    for form in ["cartesian", "sv", "cf1", "cf2", "cd", "sym", "hpolar", "cpolar", "geom"] {
        let out = run(&["repr", "1 + 2i + 3Ij + 0.25k", "--form", form]);
        assert_eq!(out.status.code(), Some(0), "form {form}: {}", stderr(&out));
        assert!(!stdout(&out).is_empty());
    }
    let unknown = run(&["repr", "1", "--form", "polar"]);
    assert_eq!(unknown.status.code(), Some(2));
    assert!(stderr(&unknown).contains("unknown form"));

    let divisor = run(&["repr", "1 + Ii", "--form", "hpolar"]);
    assert_eq!(divisor.status.code(), Some(1));
    assert!(stderr(&divisor).contains("divisor of zero"));
}

#[test]
fn basis_table_has_the_contract_cells() {
    let out = run(&["tables", "--basis"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let rows: Vec<Vec<&str>> = text.lines().map(|l| l.split_whitespace().collect()).collect();
    assert_eq!(rows.len(), 9);
    let header = &rows[0];
    let col_of = |name: &str| header.iter().position(|c| *c == name).unwrap();
    let row_of = |name: &str| rows.iter().position(|r| r[0] == name).unwrap();
    // row label occupies index 0, so a header column lands at index + 1
    assert_eq!(rows[row_of("i")][col_of("j") + 1], "k");
    assert_eq!(rows[row_of("iI")][col_of("jI") + 1], "-k");
    assert_eq!(rows[row_of("I")][col_of("I") + 1], "-1");
}

#[test]
fn grade_table_names_its_discrepancies() {
    let out = run(&["tables", "--grades"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.matches("note:").count(), 2);
    assert!(text.contains("(B, V)"));
    assert!(text.contains("(V, B)"));
}

#[test]
fn tables_requires_a_selection() {
    let out = run(&["tables"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_json_reports_per_identity() {
    let out = run(&["verify", "--samples", "50", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["pass"], serde_json::json!(true));
    assert_eq!(v["seed"], serde_json::json!(42));
    let ids = v["identities"].as_array().unwrap();
    assert!(ids.len() >= 30);
    for id in ids {
        assert_eq!(id["pass"], serde_json::json!(true));
        assert!(id["max_residual"].as_f64().unwrap() <= 1e-9);
    }
}

#[test]
fn verify_failure_exits_3_with_the_report_on_stdout() {
    let out = run(&["verify", "--samples", "5", "--tol", "1e-300"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("FAIL"));
    // timing goes to stderr so stdout stays reproducible
    assert!(stderr(&out).contains("wall time"));
    assert!(!stdout(&out).contains("wall time"));
}

#[test]
fn verify_stdout_is_reproducible() {
    let a = run(&["verify", "--samples", "40"]);
    let b = run(&["verify", "--samples", "40"]);
    assert_eq!(a.stdout, b.stdout);
    let c = run(&["verify", "--samples", "40", "--seed", "7"]);
    assert_ne!(a.stdout, c.stdout, "different seeds should show different residuals");
}
