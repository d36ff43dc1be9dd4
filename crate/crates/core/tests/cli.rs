use mvcp::cli::run;
use serde_json::Value;

fn mvcp(args: &[&str]) -> mvcp::cli::Outcome {
    run(std::iter::once("mvcp").chain(args.iter().copied()))
}

#[test]
fn list_shows_families_and_bounds() {
    let out = mvcp(&["list"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout.lines().count(), 7);
    assert!(out.stdout.contains("n ≥ 3"));
    assert!(out.stdout.contains("m ≥ 0"));
    let json: Value = serde_json::from_str(&mvcp(&["list", "--format", "json"]).stdout).unwrap();
    assert_eq!(json.as_array().unwrap().len(), 7);
}

#[test]
fn emit_json_is_exact_and_stable() {
    let args = ["emit", "--family", "C1", "--param", "n=3", "--format", "json"];
    let a = mvcp(&args);
    assert_eq!(a.code, 0);
    assert_eq!(a, mvcp(&args));
    let v: Value = serde_json::from_str(&a.stdout).unwrap();
    assert_eq!(v["R_tilde"], serde_json::json!([["-1/2", "1/2"], ["0", "-1"]]));
    assert_eq!(v["psi0"][0][0], serde_json::json!([[1, "1", "1"]]));
    assert_eq!(v["T"], serde_json::json!([["2", "0"], ["0", "2"]]));
}

#[test]
fn emit_text_and_errors() {
    let out = mvcp(&["emit", "--family", "b", "--param", "n=3", "--param", "i=1", "--format", "text"]);
    assert!(out.stdout.contains("S_tilde  [[1/2, 1/2], [1/2, 1/2]]"));
    let bad = mvcp(&["emit", "--family", "C1", "--param", "n=2"]);
    assert_eq!(bad.code, 2);
    assert!(bad.stderr.contains("n ≥ 3"));
    assert_eq!(mvcp(&["emit", "--family", "X1"]).code, 2);
    assert_eq!(mvcp(&["emit", "--family", "C1", "--param", "n"]).code, 2);
}

#[test]
fn verify_passes_and_detects_perturbation() {
    let ok = mvcp(&["verify", "--family", "C1", "--param", "n=3", "--dmax", "4"]);
    assert_eq!(ok.code, 0, "{}", ok.stdout);
    assert!(ok.stdout.contains("PASS hypergeometric"));
    let c2 = mvcp(&["verify", "--family", "C2", "--param", "n=4", "--dmax", "4", "--format", "json"]);
    assert_eq!(c2.code, 0);
    let v: Value = serde_json::from_str(&c2.stdout).unwrap();
    assert_eq!(v[0]["passed"], Value::Bool(true));
    let bad = mvcp(&["verify", "--family", "C1", "--param", "n=3", "--perturb-a0"]);
    assert_eq!(bad.code, 1);
    assert!(bad.stdout.contains("FAIL symmetry"));
}

#[test]
fn verify_all_in_parallel_is_ordered() {
    let one = mvcp(&["verify", "--all", "--dmax", "2", "--format", "csv"]);
    let four = mvcp(&["--jobs", "4", "verify", "--all", "--dmax", "2", "--format", "csv"]);
    assert_eq!(one.code, 0);
    assert_eq!(one, four);
    assert_eq!(mvcp(&["verify"]).code, 2);
}

#[test]
fn mvop_tables() {
    let out = mvcp(&["mvop", "--family", "C1", "--param", "n=3", "--dmax", "0", "--format", "json"]);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["P"][0]["coeffs"], serde_json::json!([[["1", "0"], ["0", "1"]]]));

    let m: Value = serde_json::from_str(&mvcp(&["mvop", "--family", "C1", "--param", "n=3", "--dmax", "2", "--format", "json"]).stdout).unwrap();
    let h: Value = serde_json::from_str(&mvcp(&["hyper", "--family", "C1", "--param", "n=3", "--dmax", "2", "--format", "json"]).stdout).unwrap();
    for d in 0..=2 {
        assert_eq!(m["P"][d]["coeffs"].to_string(), h["P"][d]["coeffs"].to_string());
    }

    let sp = mvcp(&["mvop", "--family", "SP3x3", "--param", "j=1", "--dmax", "2", "--format", "csv"]);
    assert_eq!(sp.code, 0);
    let p2: Vec<_> = sp.stdout.lines().filter(|l| l.starts_with("P,2,")).collect();
    assert_eq!(p2.len(), 3 * 9);
}

#[test]
fn branch_tables() {
    let w1 = mvcp(&["branch", "--n", "3", "--mu", "1,0,0", "--format", "csv"]);
    assert_eq!(w1.stdout, "mu,num_k1_types,num_m_types\n1 0 0,2,2\n");
    let two = mvcp(&["branch", "--n", "3", "--mu", "2,0,0", "--format", "json"]);
    let v: Value = serde_json::from_str(&two.stdout).unwrap();
    assert_eq!(v["num_k1_types"], 3);
    assert_eq!(mvcp(&["branch", "--n", "3", "--mu", "0,1,0"]).code, 2);
    assert_eq!(mvcp(&["branch", "--n", "3", "--classify", "3"]).stdout, "1 0 0\n1 1 0\n");
    assert_eq!(mvcp(&["branch", "--n", "3"]).code, 2);
}

#[test]
fn hyper_rejects_other_families() {
    assert_eq!(mvcp(&["hyper", "--family", "G1"]).code, 2);
}

#[test]
fn help_exits_zero() {
    let out = mvcp(&["--help"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("verify"));
}
