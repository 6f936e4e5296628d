use std::process::{Command, Output};

use serde_json::Value;

fn eislat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eislat")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = eislat(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

#[test]
fn shortvec_counts() {
    let out = eislat(&["shortvec", "--name", "lambda4", "--norm", "3", "--count-only"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), r#"{"count":240}"#);
    assert_eq!(json(&["shortvec", "--norm", "6", "--count-only"])["count"], 2160);
    assert_eq!(json(&["shortvec", "--norm", "3", "--representatives", "--count-only"])["count"], 40);
}

#[test]
fn shortvec_json_gram_matches_name() {
    let named = json(&["lattice", "--name", "lambda2"]);
    let gram = named["gram"].to_string();
    let a = json(&["shortvec", "--gram", &gram, "--norm", "3"]);
    let b = json(&["shortvec", "--name", "lambda2", "--norm", "3"]);
    assert_eq!(a, b);
    assert_eq!(a["count"], 24);
}

#[test]
fn ring_arithmetic() {
    let v = json(&["ring", "--x", "1+w", "--y", "th"]);
    assert_eq!(v["norm"], 3);
    assert_eq!(v["product"], serde_json::json!([-3, 3]));
    assert_eq!(json(&["ring", "--x", "th*th"])["x"], serde_json::json!([-3, 0]));
}

#[test]
fn decompose_theta_and_perp() {
    let v = json(&["decompose", "six", "--z", "r1+r2"]);
    assert_eq!(v["count"], 3);
    assert_eq!(v["common_span"], true);
    // every pair sums to z
    for p in v["pairs"].as_array().unwrap() {
        let sum: Vec<[i64; 2]> = (0..4)
            .map(|i| {
                let c = |j: usize, k: usize| p[j][i][k].as_i64().unwrap();
                [c(0, 0) + c(1, 0), c(0, 1) + c(1, 1)]
            })
            .collect();
        assert_eq!(sum, vec![[1, 0], [1, 0], [0, 0], [0, 0]]);
    }
    assert_eq!(json(&["decompose", "six", "--z", "r1+r3", "--mode", "perp"])["count"], 4);
}

#[test]
fn classify_pair_and_flag() {
    let v = json(&["classify", "pair", "--z", "r1+r2", "--r", "r3"]);
    assert_eq!(v["position"], "c");
    assert_eq!(v["discriminant"], 15);
    let f = json(&["classify", "flag", "--z", "r1+r2"]);
    assert_eq!(f["v"], serde_json::json!([1, 1, 0, 0]));
}

#[test]
fn kodaira_type_and_enumeration() {
    assert_eq!(json(&["kodaira", "type", "--j", "inf", "--deg", "2", "--chi", "2"])["type"], "I2");
    assert_eq!(json(&["kodaira", "type", "--j", "0", "--deg", "1", "--chi", "8"])["type"], "IV*");
    let all = json(&["kodaira", "enumerate"]);
    assert_eq!(all["count"].as_u64().unwrap() as usize, all["configurations"].as_array().unwrap().len());
}

#[test]
fn git_commands() {
    let v = json(&["git", "stability", "--f0", "1,0,0,0,1", "--f1", "0,0,0,0,0,0,1"]);
    assert_eq!(v["pair"], "Stable");
    // f0 = Y⁴ and f1 = 0 vanish to high order at [1:0]
    let v = json(&["git", "stability", "--f0", "1,0,0,0,0", "--f1", "0,0,0,0,0,0,0"]);
    assert_eq!(v["pair"], "Unstable");
    assert_eq!(json(&["git", "j", "--lambda", "1", "--mu", "2"])["display"], "[1/5:1]");
}

#[test]
fn pham_and_picard() {
    assert_eq!(json(&["pham", "gram"])["discriminant"], -243);
    assert_eq!(json(&["picard", "verify"])["signature"], serde_json::json!([1, 9, 0]));
    let out = eislat(&["pham", "verify"]);
    assert_eq!(out.status.code(), Some(1), "integral monodromy is not of order six");
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["all_over_o"], true);
}

#[test]
fn invalid_input_exits_two() {
    for args in [
        &["shortvec", "--norm", "4"][..],
        &["shortvec", "--name", "nope", "--norm", "3"],
        &["classify", "pair", "--z", "r1", "--r", "r2"],
        &["decompose", "six", "--z", "r9"],
        &["kodaira", "type", "--j", "0", "--deg", "1", "--chi", "3"],
        &["ring", "--x", "2+q"],
        &["git", "stability", "--f0", "1,2", "--f1", "1"],
        &["verify-all", "--only", "15"],
        &["frobnicate"],
    ] {
        let out = eislat(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn output_is_byte_stable() {
    let args = ["verify-all", "--only", "13"];
    let a = eislat(&args);
    let b = eislat(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
