use std::process::{Command, Output};

fn spbranch(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spbranch")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

#[test]
fn branch_of_the_exterior_square() {
    let out = spbranch(&["branch", "--n", "2", "--lambda", "1,1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "lambda\tmu\tmultiplicity\tghat_dominant\tk_highest\tk_lowest\trecording\tstatus\n\
         1,1\t0\t1\t1\t1\t1\t1\tok\n\
         1,1\t1,1\t1\t1\t1\t1\t1\tok\n\
         dimension\t6\t6\tok\n"
    );
}

#[test]
fn branch_of_the_trivial_weight() {
    for lambda in ["0", ""] {
        let out = spbranch(&["branch", "--n", "2", "--lambda", lambda, "--json"]);
        assert_eq!(out.status.code(), Some(0));
        let v = json(&out);
        assert_eq!(v["rows"].as_array().unwrap().len(), 1);
        assert_eq!(v["rows"][0]["mu"], serde_json::json!([]));
        assert_eq!(v["rows"][0]["oracle"], 1);
        assert_eq!(v["pass"], true);
    }
}

#[test]
fn branch_at_rank_three_contains_the_vector_representation() {
    let out = spbranch(&["branch", "--n", "3", "--lambda", "2,2,1", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let rows = json(&out)["rows"].as_array().unwrap().clone();
    let vector = rows.iter().find(|r| r["mu"] == serde_json::json!([1])).expect("μ = (1) occurs");
    for key in ["oracle", "ghat_dominant", "k_highest", "k_lowest", "recording"] {
        assert_eq!(vector[key], 1, "{key}");
    }
}

#[test]
fn bad_weights_are_usage_errors() {
    for lambda in ["1,1,1,1,1", "1,x", "1,2"] {
        let out = spbranch(&["branch", "--n", "2", "--lambda", lambda]);
        assert_eq!(out.status.code(), Some(2), "{lambda}");
        assert!(out.stdout.is_empty());
        assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
    }
    assert_eq!(spbranch(&["branch", "--lambda", "1"]).status.code(), Some(2));
    assert_eq!(spbranch(&["branch", "--n", "1", "--lambda", "1"]).status.code(), Some(2));
}

#[test]
fn verify_small_sweeps_pass() {
    let out = spbranch(&["verify", "--n", "2", "--max-size", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).ends_with("verdict: PASS\n"));

    let out = spbranch(&["verify", "--n", "2", "--max-size", "4", "--json", "--seed", "3", "--trials", "50"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["pass"], true);
    assert_eq!(v["seed"], 3);
    assert!(v["rows"].as_array().unwrap().iter().all(|r| r["pass"] == true));
    assert!(v.get("elapsed_seconds").is_none());
}

#[test]
fn verify_output_is_byte_stable() {
    let args = ["verify", "--n", "3", "--max-size", "3", "--json", "--seed", "11"];
    let first = spbranch(&args);
    let second = spbranch(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let text = ["verify", "--n", "2", "--max-size", "4"];
    assert_eq!(spbranch(&text).stdout, spbranch(&text).stdout);
}

#[test]
fn timings_are_opt_in() {
    let out = spbranch(&["verify", "--n", "2", "--max-size", "1", "--json", "--timings"]);
    assert!(json(&out)["elapsed_seconds"].is_number());
    assert!(String::from_utf8_lossy(&out.stderr).contains("verify n=2 max_size=1"));
}

#[test]
fn verify_respects_the_budget() {
    let out = spbranch(&["verify", "--n", "3", "--max-size", "8", "--budget", "1000"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget of 1000"));
}

#[test]
fn show_insertion_and_recording() {
    let out = spbranch(&["show", "1,2;2,3;4", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["P"], "2");
    assert_eq!(v["k_highest"], true);
    assert_eq!(v["Q"].as_array().unwrap().len(), 4);
    let text = stdout(&spbranch(&["show", "1,2;2,3;4", "--what", "q"]));
    assert!(text.starts_with("P\t2\nQ\t"));
}

#[test]
fn show_phi_trace() {
    let out = spbranch(&["show", "1,1;2,6;5", "--what", "phi", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "input\t1,1;2,6;5\npr_{3,4}\t1,1;2,6;5\npr_{3,5}\t1,1;2,6;3\npr_{1,6}\t1,2;2,3;4\noutput\t1,2;2,3;4\n"
    );
}

#[test]
fn show_of_the_empty_tableau_is_empty() {
    let v = json(&spbranch(&["show", "", "--json"]));
    assert_eq!(v["P"], "∅");
    assert_eq!(v["Q"], serde_json::json!([]));
    let v = json(&spbranch(&["show", "", "--what", "walk", "--json"]));
    assert_eq!(v["prefixes"], serde_json::json!([]));
    let v = json(&spbranch(&["show", "", "--what", "psi", "--json"]));
    assert_eq!(v["output"], "∅");
}

#[test]
fn show_walk_and_strings() {
    let v = json(&spbranch(&["show", "1;4", "--what", "walk", "--n", "2", "--json"]));
    assert_eq!(v["dominant"], true);
    assert_eq!(v["wt_ghat"], serde_json::json!([0, 0]));
    let v = json(&spbranch(&["show", "1,4", "--what", "walk", "--n", "2", "--json"]));
    assert_eq!(v["prefixes"], serde_json::json!([[-1, 0], [0, 0]]));
    assert_eq!(v["failing_prefix"], 1);
    let text = stdout(&spbranch(&["show", "1,2;2,3;4", "--what", "strings", "--n", "2"]));
    assert_eq!(text, "i\teps\tphi\n1\t1\t0\n2\t0\t1\n3\t0\t0\n");
}

#[test]
fn show_rejects_bad_tableaux() {
    for t in ["2,1", "1;1", "a,b", "1,9"] {
        let out = spbranch(&["show", t, "--n", "2"]);
        assert_eq!(out.status.code(), Some(2), "{t}");
    }
}

#[test]
fn bijection_factors_and_inverse() {
    let out = spbranch(&["bijection", "--n", "2", "--which", "psi", "1,2;3"]);
    assert_eq!(stdout(&out), "factors\tpr_{2,3} pr_{2,4}\n1,2;3\t1,4;3\n");
    let out = spbranch(&["bijection", "--n", "2", "--which", "phi"]);
    assert_eq!(stdout(&out), "factors\tpr_{1,4}\n");
    let v = json(&spbranch(&["bijection", "--n", "3", "--inverse", "1,2;2,3;4", "--json"]));
    assert_eq!(v["images"][0]["image"], "1,1;2,6;5");
    assert_eq!(v["factors"], serde_json::json!(["pr_{3,4}", "pr_{3,5}", "pr_{1,6}"]));
}
