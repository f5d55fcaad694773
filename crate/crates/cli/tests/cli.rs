use std::process::{Command, Output};

use serde_json::Value;
use skein_core::ring::json::ratfun_to_json;
use skein_core::ring::{bracket, delta};

fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn forge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skein-forge")).args(args).env_remove("SKEIN_FORGE_MAX_DIM").output().unwrap()
}

fn json_of(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn homfly_of_unknot_is_bracket_a() {
    let o = forge(&["invariant", "--which", "homfly", &data("unknot.json")]);
    assert_eq!(o.status.code(), Some(0));
    let v = json_of(&o);
    assert_eq!(v["invariant"], "homfly");
    assert_eq!(v["value"], ratfun_to_json(&bracket(1, 0)));
    assert!(v["stats"]["nodes"].is_u64());
}

#[test]
fn kauffman_of_trivial_braid_is_delta_per_component() {
    let dir = std::env::temp_dir().join("skein-forge-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let f = dir.join("unlink3.json");
    std::fs::write(&f, r#"{"strands": 3, "word": []}"#).unwrap();
    let o = forge(&["invariant", "--which", "kauffman", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let d = delta();
    assert_eq!(json_of(&o)["value"], ratfun_to_json(&(&(&d * &d) * &d)));
}

#[test]
fn parse_errors_exit_2_and_name_the_field() {
    let o = forge(&["invariant", "--which", "homfly", &data("bad_word.json")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("`word`"));
    let o = forge(&["invariant", "--which", "kauffman", &data("truncated.json")]);
    assert_eq!(o.status.code(), Some(2));
    let o = forge(&["jaeger", "--mode", "verify", &data("bad_index.json")]);
    assert_eq!(o.status.code(), Some(2));
    let o = forge(&["invariant", "--which", "jones", &data("unknot.json")]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn jaeger_verify_on_trefoil_and_hopf() {
    for f in ["trefoil.json", "hopf.json"] {
        let o = forge(&["jaeger", "--mode", "verify", &data(f)]);
        assert_eq!(o.status.code(), Some(0), "{f}");
        let v = json_of(&o);
        assert_eq!(v["equal"], true);
        assert_eq!(v["lhs"], v["rhs"]);
    }
}

#[test]
fn jaeger_expand_unknot_has_two_terms() {
    let o = forge(&["jaeger", "--mode", "expand", &data("unknot.json")]);
    assert_eq!(o.status.code(), Some(0));
    let terms = json_of(&o)["terms"].as_array().unwrap().clone();
    assert_eq!(terms.len(), 2);
    let mut rots: Vec<i64> = terms.iter().map(|t| t["rot"].as_i64().unwrap()).collect();
    rots.sort();
    assert_eq!(rots, vec![-1, 1]);
}

#[test]
fn embed_suites() {
    let o = forge(&["embed", "--n", "2", "--N", "3", "--suite", "relations"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json_of(&o)["pass"], true);
    let o = forge(&["embed", "--n", "2", "--N", "3", "--suite", "rank"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json_of(&o)["rank"], 3);
    for suite in ["hecke", "theta-routes"] {
        let o = forge(&["embed", "--n", "3", "--N", "3", "--suite", suite]);
        assert_eq!(o.status.code(), Some(0), "{suite}");
    }
    let o = forge(&["embed", "--n", "2", "--N", "1", "--suite", "rank"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn wrong_convention_is_a_verification_failure() {
    let o = forge(&["--bracket-sign-flip", "embed", "--n", "2", "--N", "3", "--suite", "relations"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(!json_of(&o)["failures"].as_array().unwrap().is_empty());
}

#[test]
fn schur_check_and_size_bound() {
    let o = forge(&["schur-check", "--n", "2", "--d", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json_of(&o)["dim"], 8);
    let o = Command::new(env!("CARGO_BIN_EXE_skein-forge"))
        .args(["schur-check", "--n", "3", "--d", "3"])
        .env("SKEIN_FORGE_MAX_DIM", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn output_is_byte_deterministic() {
    let args = ["jaeger", "--mode", "expand", &data("trefoil.json")];
    let (a, b) = (forge(&args), forge(&args));
    assert!(!a.stdout.is_empty());
    assert_eq!(a.stdout, b.stdout);
}
