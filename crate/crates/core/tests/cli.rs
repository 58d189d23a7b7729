use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

const BRIDGED: &str = "0 1\n1 2\n2 0\n2 3\n3 4\n4 5\n5 3\n";
const WITH_PATH: &str = "0 1\n1 2\n2 0\n2 3\n3 4\n4 5\n5 6\n6 4\n";

fn irp(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_irp"))
        .args(args)
        .env_remove("IRP_BUDGET")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn exit_codes_follow_the_verdict() {
    let ok = irp(&["equivalence", "-"], BRIDGED);
    assert_eq!(ok.status.code(), Some(0));
    let r = report(&ok);
    assert_eq!(r["command"], "equivalence");
    assert!(r["input_digest"].as_str().unwrap().starts_with("sha256:"));
    assert!(r["timings"]["total_ms"].is_number());
    let bad = irp(&["equivalence", "-"], WITH_PATH);
    assert_eq!(bad.status.code(), Some(1));
    assert_eq!(report(&bad)["verdicts"]["f_odd_cycles"], false);
}

#[test]
fn json_input_from_stdin() {
    let doc = r#"{"kind":"clutter","vertices":[1,2,3,4,5,6],"edges":[[1,3,6],[2,3,5],[1,4,5],[2,4,6]]}"#;
    let out = irp(&["irp-leq", "--json", "-"], doc);
    assert_eq!(out.status.code(), Some(1));
    let out = irp(&["irp-witness", "--direction", ">=", "--window", "1", "--json", "-"], doc);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(report(&out)["verdicts"]["witness_found"], true);
}

#[test]
fn errors_are_reported_as_json() {
    let out = irp(&["equivalence", "-"], "0 1\n2 3\n");
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(report(&out)["error"]["code"], "not_connected");
    assert!(!out.stderr.is_empty());
    let out = irp(&["tdi", "--alpha", "1,1,1,1,1", "-"], "0 1\n1 2\n2 3\n3 4\n4 0\n");
    assert_eq!(report(&out)["error"]["code"], "not_perfect");
    let out = irp(&["irp-leq", "--json", "-"], r#"{"kind":"clutter","vertices":[1,2],"edges":[[1],[1,2]]}"#);
    assert_eq!(report(&out)["error"]["code"], "clutter_axiom");
    let out = irp(&["ehrhart-eq", "--json", "-"], r#"{"kind":"clutter","vertices":[1,2,3],"edges":[[1],[2,3]]}"#);
    assert_eq!(report(&out)["error"]["code"], "not_uniform");
    let out = irp(&["vertices", "--budget", "1", "-"], BRIDGED);
    assert_eq!(report(&out)["error"]["code"], "budget_exceeded");
    assert_eq!(irp(&["no-such-command"], "").status.code(), Some(2));
}

#[test]
fn out_writes_the_report_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = irp(&["a-invariant", "--method", "perfect", "--out", path.to_str().unwrap(), "-"], "0 1\n1 2\n2 3\n3 0\n");
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let r: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(r["command"], "a-invariant");
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
}

#[test]
fn every_subcommand_runs() {
    for cmd in [
        &["irp-leq"][..],
        &["irp-geq"],
        &["irp-witness"],
        &["ehrhart-eq"],
        &["vertices"],
        &["hilbert-basis", "--cone", "edge"],
        &["canonical"],
        &["a-invariant", "--method", "direct"],
        &["gorenstein"],
        &["antiblocker"],
        &["equivalence"],
        &["tdi", "--alpha", "1,0,2,1"],
        &["predicates"],
    ] {
        let mut args = cmd.to_vec();
        args.push("-");
        let out = irp(&args, "0 1\n1 2\n2 3\n3 0\n");
        assert_eq!(out.status.code(), Some(0), "{cmd:?}: {}", String::from_utf8_lossy(&out.stdout));
        assert_eq!(report(&out)["command"], cmd[0]);
    }
}
