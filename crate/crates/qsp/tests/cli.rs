use std::process::{Command, Output};

fn qsp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qsp")).args(args).output().expect("run qsp")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn sumrule_prints_the_table_entry() {
    let o = qsp(&["sumrule", "--m", "1", "--L", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "38");
}

#[test]
fn sumrule_csv_has_the_table_layout() {
    let o = qsp(&["sumrule", "--m", "2", "--L", "2", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "m,L=1,L=2\n1,3,10\n2,8,92\n");
}

#[test]
fn eigen_reports_the_multiplicities() {
    let o = qsp(&["eigen", "--shape", "2,2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let got: Vec<(i64, u64)> =
        v["multiplicities"].as_array().unwrap().iter().map(|e| (e["j"].as_i64().unwrap(), e["observed"].as_u64().unwrap())).collect();
    assert_eq!(got, [(5, 1), (3, 2), (1, 3), (-1, 2), (-3, 1)]);
}

#[test]
fn bad_shape_is_a_usage_error() {
    assert_eq!(qsp(&["eigen", "--shape", "2,x"]).status.code(), Some(2));
    assert_eq!(qsp(&["eigen", "--shape", "2,2", "--q0", "0"]).status.code(), Some(2));
    assert_eq!(qsp(&["diagram", "--shape", "2,2", "--weight", "1,3"]).status.code(), Some(2));
    assert_eq!(qsp(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn qpoly_single_pair() {
    let o = qsp(&["qpoly", "--alpha", "--++-+", "--beta", "++++++"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("Q^{I,-}(--++-+, ++++++) = "));
}

#[test]
fn diagram_of_a_negative_weight() {
    let o = qsp(&["diagram", "--shape", "3,4,4", "--weight", "1,0,-2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 1);
}

#[test]
fn psi_routes_agree_from_the_command_line() {
    let o = qsp(&["psi", "--shape", "2,2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("sum at q = 1: 92"));
}

#[test]
fn output_is_deterministic() {
    let a = qsp(&["dualbasis", "--shape", "2,1", "--format", "json"]);
    let b = qsp(&["dualbasis", "--shape", "2,1", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn rmatrix_and_yact_pass_their_checks() {
    assert_eq!(qsp(&["rmatrix", "--shape", "2,1,1"]).status.code(), Some(0));
    assert_eq!(qsp(&["yact", "--shape", "2,2", "--format", "csv"]).status.code(), Some(0));
    assert_eq!(qsp(&["klpoly", "--n", "4", "--sign", "minus", "--format", "csv"]).status.code(), Some(0));
}

#[test]
fn verify_small_bound() {
    let o = Command::new(env!("CARGO_BIN_EXE_qsp")).args(["verify", "--max-sites", "4"]).env("QSP_THREADS", "2").output().unwrap();
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).lines().all(|l| l.starts_with("PASS")));
}
