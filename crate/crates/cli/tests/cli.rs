use std::process::{Command, Output};

fn qdirac(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qdirac"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let o = qdirac(&all);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).expect("valid json")
}

#[test]
fn normalize_orders_w4_w1() {
    let o = qdirac(&["normalize", "w4*w1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "(-q + q^-1)*w2*w3 + w1*w4");
}

#[test]
fn mul_embeds_w_generators() {
    let v = json(&["mul", "Fm", "w2"]);
    let w = json(&["normalize", "(q^-1)*w2*Fm"]);
    assert_eq!(v["value"], w["value"]);
    assert_eq!(v["kind"], "U_q element");
}

#[test]
fn serre_reduce_detects_ideal_members() {
    let v = json(&["serre-reduce", "Fm*Fn - Fn*Fm"]);
    assert_eq!(v["in_ideal"], true);
    let v = json(&["serre-reduce", "Fm*Fb"]);
    assert_eq!(v["in_ideal"], false);
}

#[test]
fn dims_prints_the_known_prefix() {
    let v = json(&["dims", "--max-degree", "3"]);
    assert_eq!(v["dimensions"], serde_json::json!([1, 3, 8, 17]));
}

#[test]
fn star_table_entry() {
    let v = json(&["star", "--k", "Fm", "--w", "1"]);
    assert_eq!(v["result"]["value"], "w2");
    let v = json(&["star", "--k", "En", "--w", "4"]);
    assert_eq!(v["result"]["value"], "w2");
}

#[test]
fn dual_box_with_check() {
    let o = qdirac(&["dual", "--generator", "box", "--check-degree", "3"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("K_2.K_3.d_1.d_4"), "{out}");
    assert!(out.contains("PASS"), "{out}");
}

#[test]
fn dirac_show_lists_four_entries() {
    let o = qdirac(&["dirac", "--which", "plus", "--show"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with('[')).count(), 4);
}

#[test]
fn singular_vector_report() {
    let v = json(&["singular-vector", "--x", "6", "--scan", "0..6"]);
    assert_eq!(v["vanishing_x"], serde_json::json!([2]));
    assert_eq!(v["root_of_unity_orders"], serde_json::json!([4, 8]));
    assert_eq!(v["E_nu"], "0");
    assert_eq!(v["convention"], "twisted");
}

#[test]
fn verify_reports_pass_and_bound() {
    let v = json(&["verify", "dirac-factorization"]);
    assert_eq!(v["passed"], true);
    assert_eq!(v["degree"], 5);
    let v = json(&["verify", "dirac-intertwine", "--degree", "2"]);
    assert_eq!(v["degree"], 2);
}

#[test]
fn verify_json_is_byte_stable() {
    let a = qdirac(&["--json", "verify", "star-table"]);
    let b = qdirac(&["--json", "verify", "star-table"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["verify", "no-such-suite"][..],
        &["normalize", "w1 + d_1"],
        &["normalize", "w7"],
        &["singular-vector", "--x", "1", "--scan", "5..2"],
        &["star", "--k", "Fb", "--w", "1"],
    ] {
        assert_eq!(qdirac(args).status.code(), Some(2), "{args:?}");
    }
}
