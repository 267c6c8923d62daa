mod common;

use common::*;
use gencluster::cli::run_cli;
use serde_json::Value;

struct Out {
    code: i32,
    stdout: String,
    stderr: String,
}

impl Out {
    fn json(&self) -> Value {
        serde_json::from_str(&self.stdout).unwrap_or_else(|e| panic!("{e}: {}", self.stdout))
    }
}

fn run(args: &[&str], input: &str) -> Out {
    let mut argv = vec!["gencluster"];
    argv.extend_from_slice(args);
    let mut stdin = input.as_bytes();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_cli(argv, &mut stdin, &mut out, &mut err);
    Out {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

#[test]
fn validate() {
    let o = run(&["validate"], Z2_JSON);
    assert_eq!(o.code, 0);
    let v = o.json();
    assert_eq!(v["valid"], true);
    assert_eq!(v["acyclic"], true);
    assert_eq!(v["coprime"], true);
    let bad = r#"{"n":2,"B":[[0,-2],[1,0]],"d":[1,3]}"#;
    let o = run(&["validate"], bad);
    assert_eq!(o.code, 2);
    assert_eq!(o.json()["violations"][0]["code"], "divisor-does-not-divide");
    let o = run(&["validate"], A3_LP_JSON);
    assert_eq!(o.code, 0);
    assert_eq!(o.json()["irreducibility"], serde_json::json!(["verified", "verified", "verified"]));
}

#[test]
fn malformed_documents() {
    let o = run(&["classgroup"], "{\"n\": 2,\n \"B\": [[0,1],[-1,0]]");
    assert_eq!(o.code, 2);
    let v = o.json();
    assert_eq!(v["error"], "invalid-document");
    assert!(v["message"].as_str().unwrap().contains("line 2, column 20"), "{v}");
    assert!(o.stderr.starts_with("error:"));
    let o = run(&["mutate", "--dir", "1"], r#"{"n":1,"B":[[0]],"extra":1}"#);
    assert_eq!(o.code, 2);
    let o = run(&["exchange-polys"], r#"{"n":1,"m":1,"B":[[0],[1]],"d":[2],"rho":[["1","x2 +","1"]]}"#);
    assert_eq!(o.code, 2);
    assert!(o.json()["message"].as_str().unwrap().contains("rho[0][1]"));
    let o = run(&["validate", "/nonexistent/seed.json"], "");
    assert_eq!(o.code, 2);
}

#[test]
fn exchange_polys_and_classgroup() {
    let o = run(&["exchange-polys"], Z2_JSON);
    assert_eq!(o.json()["exchange_polynomials"], serde_json::json!(["x2 + 1", "x1^2 + 2*x1 + 1"]));
    let v = run(&["classgroup"], Z2_JSON).json();
    assert_eq!(v["torsion"], serde_json::json!([2]));
    assert_eq!(v["free_rank"], 0);
    assert_eq!(v["valuation_matrix"], serde_json::json!([[1, 0], [0, 2]]));
    assert_eq!(v["mode"], "rational");
    let case2 = r#"{"n":2,"B":[[0,3],[-1,0]]}"#;
    assert_eq!(run(&["classgroup"], case2).json()["free_rank"], 1);
    assert_eq!(run(&["--mode", "closed", "classgroup"], case2).json()["free_rank"], 2);
    let cyc = r#"{"n":3,"B":[[0,1,-1],[-1,0,1],[1,-1,0]]}"#;
    let o = run(&["classgroup"], cyc);
    assert_eq!(o.code, 2);
    assert_eq!(o.json()["precondition"], "acyclic");
    assert_eq!(run(&["classgroup", "--allow-non-acyclic"], cyc).code, 0);
}

#[test]
fn mutate_round_trip() {
    let o = run(&["mutate", "--dir", "1"], Z2_JSON);
    assert_eq!(o.code, 0);
    assert_eq!(o.json()["B"], serde_json::json!([[0, 2], [-1, 0]]));
    let back = run(&["mutate", "--dir", "1"], &o.stdout);
    assert_eq!(back.code, 0);
    assert_eq!(back.json(), gencluster::io::seed_to_value(&z2_seed()));
    // Canonical output is a fixed point of the round trip, byte for byte.
    let twice = run(&["mutate", "--dir", "1"], &run(&["mutate", "--dir", "1"], &back.stdout).stdout);
    assert_eq!(twice.stdout, back.stdout);
    let o = run(&["mutate", "--dir", "3"], Z2_JSON);
    assert_eq!(o.code, 2);
    assert_eq!(o.json()["error"], "invalid-direction");
}

#[test]
fn realize() {
    let o = run(&["realize", "--free-rank", "2", "--torsion", "3"], "");
    assert_eq!(o.code, 0);
    let v = o.json();
    assert_eq!(v["verified"], true);
    assert_eq!(v["class_group"]["torsion"], serde_json::json!([3]));
    assert_eq!(v["class_group"]["free_rank"], 2);
    assert_eq!(v["seed"]["n"], 4);
    let o = run(&["realize", "--torsion", "0"], "");
    assert_eq!(o.code, 2);
    assert_eq!(o.json()["precondition"], "torsion-positive");
}

#[test]
fn lp_commands() {
    let o = run(&["lp-mutate", "--dir", "1"], A3_LP_JSON);
    assert_eq!(o.code, 0);
    assert_eq!(o.json()["names"], serde_json::json!(["x1'", "x2", "x3"]));
    let back = run(&["lp-mutate", "--dir", "1"], &o.stdout);
    assert_eq!(back.code, 0);
    let v = run(&["lp-enumerate", "--depth", "4"], A3_LP_JSON).json();
    assert_eq!(v["count"], 7);
    assert!(v["variables"]
        .as_array()
        .unwrap()
        .contains(&Value::from("(x2 + 1)/(x1*x3)")));
    let bad = r#"{"n":2,"F":["x1 + x2","x1 + 1"]}"#;
    let o = run(&["lp-mutate", "--dir", "1"], bad);
    assert_eq!(o.code, 2);
    assert_eq!(o.json()["error"], "invalid-seed");
}

#[test]
fn laurent_and_explore() {
    let v = run(&["verify-laurent", "--seq", "1,2,1,2"], Z2_JSON).json();
    assert_eq!(v["laurent"], true);
    assert_eq!(v["cluster"].as_array().unwrap().len(), 2);
    assert_eq!(run(&["verify-laurent", "--seq", "1,5"], Z2_JSON).code, 2);
    let a2 = r#"{"n":2,"B":[[0,1],[-1,0]]}"#;
    let v = run(&["explore", "--max-seeds", "20"], a2).json();
    assert_eq!((v["seeds_found"].as_u64(), v["exhausted"].as_bool()), (Some(5), Some(true)));
    let kron = r#"{"n":2,"B":[[0,2],[-2,0]]}"#;
    let v = run(&["explore", "--max-seeds", "50"], kron).json();
    assert_eq!(v["exhausted"], false);
}

#[test]
fn formats_and_usage() {
    let pretty = run(&["--format", "pretty", "exchange-polys"], Z2_JSON);
    let compact = run(&["exchange-polys"], Z2_JSON);
    assert!(pretty.stdout.contains("\n  "));
    assert_eq!(pretty.json(), compact.json());
    assert_eq!(run(&["--help"], "").code, 0);
    let o = run(&["frobnicate"], "");
    assert_eq!(o.code, 2);
    assert!(!o.stderr.is_empty());
}

#[test]
fn reads_files() {
    let dir = std::env::temp_dir().join(format!("gencluster-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("z2.json");
    std::fs::write(&path, Z2_JSON).unwrap();
    let o = run(&["classgroup", path.to_str().unwrap()], "");
    assert_eq!(o.code, 0);
    assert_eq!(o.json()["torsion"], serde_json::json!([2]));
    let o = run(&["classgroup", "-"], Z2_JSON);
    assert_eq!(o.code, 0);
    std::fs::remove_dir_all(&dir).unwrap();
}
