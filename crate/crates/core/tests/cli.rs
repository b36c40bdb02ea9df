use padic_hg::cli::run_command;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["phg"];
    argv.extend_from_slice(args);
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run_command(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(text: &str) -> serde_json::Value {
    serde_json::from_str(text).expect("json output")
}

#[test]
fn verify_hat_passes() {
    let (code, out, _) = run(&["verify", "hat", "--p", "5", "--a", "1/3", "--s", "2", "--c", "6", "--n", "2", "--deg", "60"]);
    assert_eq!(code, 0);
    let r = json(&out);
    assert_eq!(r["pass"], true);
    assert_eq!(r["modulus"], 25);
    assert_eq!(r["params"]["M"], 60);
    assert_eq!(r["degrees_checked"]["count"], 60);
    assert!(r["first_failure"].is_null());
}

#[test]
fn conjectural_transform_dwork_is_flagged() {
    let (code, out, _) = run(&["verify", "transform-dwork", "--p", "5", "--a", "1/3", "--s", "1", "--n", "1"]);
    assert!(code == 0 || code == 1);
    assert_eq!(json(&out)["conjectural"], true);
}

#[test]
fn coeffs_csv_for_a_one() {
    let (code, out, _) = run(&["coeffs", "--p", "3", "--a", "1", "--s", "1", "--c", "1", "--n", "1", "--deg", "6"]);
    assert_eq!(code, 0);
    let rows: Vec<Vec<&str>> = out.lines().skip(1).map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 6);
    // 1, 1/2, 0, 1/4, 1/5, 0 reduced mod 3
    let b: Vec<u64> = rows.iter().map(|r| r[3].parse::<u64>().unwrap() % 3).collect();
    assert_eq!(b, vec![1, 2, 0, 1, 2, 0]);
    assert!(rows.iter().all(|r| r[1] == "1" && r[2] == "0"));
}

#[test]
fn fn_dwork_output() {
    let (code, out, _) = run(&["fn", "dwork", "--p", "5", "--a", "1", "--n", "1", "--deg", "12"]);
    assert_eq!(code, 0);
    let v = json(&out);
    let coeffs: Vec<u64> = v["series"]["coeffs"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap() % 5).collect();
    assert_eq!(coeffs, vec![1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0]);
    let (code, out, _) = run(&["fn", "hat", "--p", "3", "--a", "1", "--format", "text", "--deg", "4"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 4);
}

#[test]
fn exit_codes() {
    // p = 2 needs c = 1 mod 4 for checks that use c, not for Dwork checks
    assert_eq!(run(&["verify", "hat", "--p", "2", "--a", "1/3", "--c", "3"]).0, 3);
    assert_eq!(run(&["verify", "dwork", "--p", "2", "--a", "1/3", "--c", "3"]).0, 0);
    assert_eq!(run(&["verify", "hat", "--p", "3", "--a", "1/3"]).0, 3);
    assert_eq!(run(&["verify", "hat", "--p", "6", "--a", "1/5"]).0, 3);
    assert_eq!(run(&["verify", "hat", "--p", "5"]).0, 3);
    assert_eq!(run(&["verify", "frobnicate", "--p", "5"]).0, 3);
    assert_eq!(run(&["verify", "hat", "--p", "5", "--a", "1/3", "--n", "2", "--nw", "2"]).0, 2);
    assert_eq!(run(&["verify", "transform-log", "--p", "5", "--a", "22"]).0, 3);
    assert_eq!(run(&["--help"]).0, 0);
    let (code, _, err) = run(&["verify", "log", "--p", "5", "--a", "1/3", "--c", "2"]);
    assert_eq!(code, 3);
    assert!(err.contains("Frobenius"));
}

#[test]
fn c_sugar_resolves_against_p() {
    let (code, out, _) = run(&["verify", "log", "--p", "7", "--a", "1/2", "--c", "1+p", "--n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["params"]["c"], "8");
    let (_, out, _) = run(&["verify", "hat", "--p", "7", "--a", "1/2", "--c", "1-2*p"]);
    assert_eq!(json(&out)["params"]["c"], "-13");
}

#[test]
fn fault_injection_exits_one() {
    let (code, out, _) = run(&["verify", "sm", "--p", "3", "--a", "1", "--inject-fault", "2"]);
    assert_eq!(code, 1);
    let r = json(&out);
    assert_eq!(r["pass"], false);
    assert_eq!(r["first_failure"]["index"], 2);
}

fn lines(text: &str) -> Vec<serde_json::Value> {
    text.lines().map(json).collect()
}

#[test]
fn scan_skips_non_integral_points() {
    let (code, out, err) = run(&["scan", "--check", "hat", "--p", "3,5", "--a", "1/3,1/2,2/3"]);
    assert_eq!(code, 0);
    let v = lines(&out);
    assert_eq!(v.len(), 5);
    assert_eq!(v[4]["summary"]["pass"], 4);
    assert_eq!(v[4]["summary"]["total"], 4);
    assert_eq!(err.matches("skip:").count(), 2);
}

#[test]
fn empty_scan_is_summary_only() {
    let (code, out, _) = run(&["scan", "--check", "hat", "--p", "5", "--a", ""]);
    assert_eq!(code, 0);
    let v = lines(&out);
    assert_eq!(v.len(), 1);
    assert_eq!(v[0]["summary"]["total"], 0);
}

#[test]
fn scan_control_fault_counts_one_failure() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("scan.jsonl");
    let p = path.to_str().unwrap();
    let args = ["scan", "--check", "hat,log", "--p", "5,7", "--a", "1/3,3/4", "--s", "1,2", "--c", "1,1+p", "--n", "1,2", "--out", p, "--control-fault", "1"];
    let (code, out, _) = run(&args);
    assert_eq!(code, 1);
    assert!(out.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let v = lines(&text);
    let summary = &v.last().unwrap()["summary"];
    assert_eq!(summary["fail"], 1);
    assert_eq!(summary["pass"], 64);
    assert_eq!(summary["total"], 65);
}

#[test]
fn scan_is_deterministic() {
    let base = ["scan", "--check", "transform-log,transform-dwork", "--p", "7", "--a", "1/3,2/5", "--s", "1,2,3", "--c", "1+p", "--n", "1,2"];
    let strip = |text: &str| -> Vec<String> {
        lines(text)
            .into_iter()
            .map(|mut v| {
                if v.get("elapsed_ms").is_some() {
                    v["elapsed_ms"] = serde_json::json!(0);
                }
                v.to_string()
            })
            .collect()
    };
    let mut one = base.to_vec();
    one.extend(["--threads", "1"]);
    let mut four = base.to_vec();
    four.extend(["--threads", "4"]);
    let (c1, o1, _) = run(&one);
    let (c2, o2, _) = run(&four);
    assert_eq!(c1, c2);
    assert_eq!(strip(&o1), strip(&o2));
    assert_eq!(strip(&o1).len(), 2 * 2 * 3 * 2 + 1);
}

#[test]
fn scan_blal_runs_every_branch() {
    let (code, out, _) = run(&["scan", "--check", "blal", "--p", "3,5", "--n", "1,2"]);
    assert_eq!(code, 0);
    let v = lines(&out);
    assert_eq!(v.last().unwrap()["summary"]["pass"], 2 * 3 + 2 * 5);
}
