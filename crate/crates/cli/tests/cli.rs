use std::process::{Command, Output};

fn qladder(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qladder")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn gen_t_prints_z11() {
    let o = qladder(&["gen-t", "--twoL", "1", "--twoN", "-1", "--twoM", "-1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "z11");
}

#[test]
fn rho1_pairing() {
    let o = qladder(&["pair", "--kind", "rho1", "--f1", "z11", "--f2", "z22 / N^3"]);
    assert_eq!(stdout(&o).trim(), "1/2");
}

#[test]
fn lambda_eigenvalues_json() {
    let o = qladder(&["verify", "eigenvalues", "--op", "lambda", "--nmax", "5", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<serde_json::Value> =
        stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 5);
    let got: Vec<&str> = lines.iter().map(|v| v["got"].as_str().unwrap()).collect();
    assert_eq!(got, ["1", "-1/2", "1/3", "-1/4", "1/5"]);
    assert!(lines.iter().all(|v| v["pass"] == true));
    let first = stdout(&o).lines().next().unwrap().to_string();
    assert!(first.starts_with("{\"check\":\"eigenvalue\",\"elapsedMs\":0,\"expected\""));
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "symmetry", "--count", "3", "--degmax", "2", "--json"];
    let (a, b) = (qladder(&args), qladder(&args));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn expand_round_trip() {
    for f in ["z11*z22 - 2/N", "(3/2+i)*z12^3 + z21/N^2", "7"] {
        let canon = qladder_core::parse_zh(f).unwrap().to_string();
        let o = qladder(&["expand", "--f", f, "--reconstruct"]);
        assert_eq!(stdout(&o).trim(), canon);
    }
}

#[test]
fn embed_prints_w_and_y() {
    let o = qladder(&["embed", "--f", "z11"]);
    assert_eq!(stdout(&o).trim(), "1/2*y11 + 1/2*w11");
}

#[test]
fn apply_two_loop() {
    let o = qladder(&["apply", "--op", "l2", "--input", "z11 - y11"]);
    assert_eq!(stdout(&o).trim(), "-1/2*z11 + 1/2*y11");
}

#[test]
fn exit_codes() {
    let bad = qladder(&["expand", "--f", "z11 +* 2"]);
    assert_eq!(bad.status.code(), Some(2));
    let err = String::from_utf8(bad.stderr).unwrap();
    assert!(err.contains("at 5") && err.contains("expected"), "{err}");
    assert_eq!(qladder(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(qladder(&["apply", "--op", "l2", "--input", "z11*z22"]).status.code(), Some(1));
}

#[test]
fn classify_by_cell() {
    assert_eq!(stdout(&qladder(&["classify", "--twoL", "2", "--k", "-1"])).trim(), "I2+ only");
    assert_eq!(stdout(&qladder(&["classify", "--twoL", "1", "--k", "-4", "--scheme", "rho1"])).trim(), "Zh1-");
    assert_eq!(qladder(&["classify", "--twoL", "1"]).status.code(), Some(2));
}

#[test]
fn equivariance_single_operator() {
    let o = qladder(&["verify", "equivariance", "--op", "m", "--nmax", "1", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().all(|l| l.contains("\"op\":\"M\"")));
}
