//! End-to-end tests of the binary: JSON output, exit codes, determinism.

use serde_json::Value;
use std::process::{Command, Output};

const CM_POLY: &str = "x^7+1786*x^5+44441*x^3+278179*x";

fn octavics(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_octavics"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON document")
}

#[test]
fn reduction_on_the_example_curve() {
    let out = octavics(&["reduction", "--prime", "11", CM_POLY]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["verdict"], "BadEllipticTimesGenus2");
    assert_eq!(v["v_sh_discriminant"], "6/7");
    assert_eq!(v["v_sh_i20"], "0");
    assert!(v["caveat"]
        .as_str()
        .unwrap()
        .contains("principally polarized"));

    let at_13 = json_of(&octavics(&["reduction", "--prime", "13", CM_POLY]));
    assert_eq!(at_13["verdict"], "PotentiallyGood");
}

#[test]
fn reduction_at_7_fails_with_hsop_code() {
    let out = octavics(&["reduction", "--prime", "7", CM_POLY]);
    assert_eq!(out.status.code(), Some(5));
    let v = json_of(&out);
    assert_eq!(v["error"]["code"], 5);
    assert_eq!(v["error"]["kind"], "requires-external-hsop");
}

#[test]
fn verify_passage_i4_matches() {
    let out = octavics(&["verify-passage", "--target", "I4", "--seed", "1"]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["match"], true);
    assert_eq!(v["monomials"], 2);
    let coeffs: Vec<&str> = v["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t["coefficient"].as_str().unwrap())
        .collect();
    assert_eq!(coeffs, vec!["-8601600", "101154816"]);
}

#[test]
fn verify_passage_output_is_byte_identical_across_runs() {
    let a = octavics(&["verify-passage", "--target", "I6", "--seed", "9"]);
    let b = octavics(&["verify-passage", "--target", "I6", "--seed", "9"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn invariants_from_roots_agree_with_tables() {
    let roots = "1,2,3,4,5,6,7,inf";
    let via_tables = json_of(&octavics(&["invariants", "--roots", roots]));
    let via_sums = json_of(&octavics(&["invariants", "--roots", roots, "--from-roots"]));
    assert_eq!(via_tables["tsuyumine_source"], "passage-tables");
    assert_eq!(via_sums["tsuyumine_source"], "root-sums");
    assert_eq!(via_tables["tsuyumine"], via_sums["tsuyumine"]);
    assert_eq!(via_tables["shioda"], via_sums["shioda"]);
    // Scalars are exact strings, never JSON numbers.
    assert!(via_tables["tsuyumine"]["I2"].is_string());
    assert!(via_tables["discriminant"].is_string());
}

#[test]
fn invariants_of_example_curve_factored() {
    let out = octavics(&["invariants", CM_POLY, "--factored"]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["shioda"]["J2"]["value"], "-81318879/28");
    assert_eq!(
        v["shioda"]["J2"]["factored"],
        "(-3^2 * 19 * 475549) / (2^2 * 7)"
    );
    assert_eq!(v["shioda"]["J3"]["value"], "0");
}

#[test]
fn i20_both_ways_when_roots_available() {
    let out = octavics(&["i20", "--roots", "1,2,3,4,5,6,7,8"]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["match"], true);
    assert_eq!(v["i20"], v["i20_from_roots"]);
}

#[test]
fn absolute_command_errors_when_normalizer_vanishes() {
    // The example curve has I3 = 0: the weight-0 tuple is undefined.
    let out = octavics(&["absolute", CM_POLY]);
    assert_eq!(out.status.code(), Some(7));
    let v = json_of(&out);
    assert_eq!(v["error"]["kind"], "degenerate");

    let ok = octavics(&["absolute", "--roots", "1,2,3,4,5,6,7,8"]);
    assert!(ok.status.success());
    let v = json_of(&ok);
    assert_eq!(v["absolute"].as_array().unwrap().len(), 9);
}

#[test]
fn convert_roundtrips_through_both_directions() {
    let j = "1,2,3,4,5,6,7,8,9";
    let forward = json_of(&octavics(&["convert", "--shioda", j]));
    let i_values: Vec<String> = (2..=10)
        .map(|k| {
            forward["tsuyumine"][format!("I{k}")]
                .as_str()
                .unwrap()
                .to_string()
        })
        .collect();
    let back = json_of(&octavics(&["convert", "--tsuyumine", &i_values.join(",")]));
    for k in 2..=10 {
        assert_eq!(
            back["shioda"][format!("J{k}")],
            forward["shioda"][format!("J{k}")],
            "J{k} roundtrip"
        );
    }
}

#[test]
fn cluster_command_and_error_codes() {
    let out = octavics(&["cluster", "--prime", "11", "--roots", "0,11,22,1,2,3,4,5"]);
    assert!(out.status.success());
    let v = json_of(&out);
    let ones = v["multiset"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|x| x == &&Value::String("1".into()))
        .count();
    assert_eq!(ones, 3);

    let inf = octavics(&["cluster", "--prime", "11", "--roots", "0,1,2,3,4,5,6,inf"]);
    assert_eq!(inf.status.code(), Some(8));

    let composite = octavics(&["cluster", "--prime", "15", "--roots", "0,1,2,3,4,5,6,7"]);
    assert_eq!(composite.status.code(), Some(4));
}

#[test]
fn parse_and_degree_errors() {
    let bad = octavics(&["invariants", "x^9+1"]);
    assert_eq!(bad.status.code(), Some(2));
    let v = json_of(&bad);
    assert_eq!(v["error"]["kind"], "parse");
    assert!(v["error"]["message"].as_str().unwrap().contains("byte"));

    let deg = octavics(&["invariants", "x^3+1"]);
    assert_eq!(deg.status.code(), Some(3));

    let strict = octavics(&["invariants", CM_POLY, "--strict-octic"]);
    assert_eq!(strict.status.code(), Some(3));
    // Without the flag, degree 7 homogenizes.
    let loose = octavics(&["invariants", CM_POLY]);
    assert!(loose.status.success());
}

#[test]
fn thread_cap_env_is_accepted() {
    let out = Command::new(env!("CARGO_BIN_EXE_octavics"))
        .env("OCTIC_THREADS", "1")
        .args(["invariants", "--roots", "1,2,3,4,5,6,7,8", "--from-roots"])
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    let baseline = octavics(&["invariants", "--roots", "1,2,3,4,5,6,7,8", "--from-roots"]);
    assert_eq!(
        out.stdout, baseline.stdout,
        "thread count never changes results"
    );
}
