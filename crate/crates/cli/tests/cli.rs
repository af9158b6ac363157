use std::process::{Command, Output};

use serde_json::Value;
use snowkit::{BigInt, Monomial, Polynomial};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_snowkit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout)
        .unwrap()
        .trim_end()
        .to_string()
}

#[test]
fn polynomials() {
    assert_eq!(stdout(&["groth", "1324"]), "(x1 + x2) + b*x1*x2");
    assert_eq!(stdout(&["groth", "1"]), "1");
    assert_eq!(stdout(&["groth", "1,3,2,4", "--schubert"]), "x1 + x2");
    assert_eq!(stdout(&["lascoux", "0,2,1", "--top"]), "x1^2*x2^2*x3");
    assert_eq!(stdout(&["top", "--comp", "0,2,1"]), "x1^2*x2^2*x3");
    assert_eq!(stdout(&["top", "--perm", "1342"]), "2*x1*x2*x3");
    assert_eq!(stdout(&["lascoux", "2,1", "--key"]), "x1^2*x2");
}

#[test]
fn rajcodes() {
    assert_eq!(
        stdout(&["rajcode", "--perm", "3721564"]),
        "(4,5,2,1,1,1) raj=14"
    );
    assert!(stdout(&["rajcode", "--comp", "2,0,4,3,1"]).starts_with("(4,3,4,3,1)"));
    assert_eq!(stdout(&["rajcode", "--perm", "1"]), "() raj=0");
    assert_eq!(
        stdout(&["rajcode", "--cells", "1,3;2,1;2,2;3,3;5,1;5,2"]),
        "(3,3,2,1,2) raj=11"
    );
}

#[test]
fn snow_rendering() {
    assert_eq!(
        stdout(&["snow", "--comp", "0,2,1"]),
        "1 **\n2 ·●\n3 ●\n(2,2,1) raj=5"
    );
}

#[test]
fn kkd_and_shadow() {
    assert_eq!(stdout(&["kkd", "0,2,1", "--count"]), "11");
    assert_eq!(stdout(&["kkd", "0,2,1"]).lines().count(), 11);
    assert_eq!(
        stdout(&["shadow", "3721564", "--turning"]),
        "(3,1) (1,2) (6,4) (2,6)"
    );
    assert_eq!(stdout(&["shadow", "3721564"]).lines().count(), 4);
}

#[test]
fn hilbert_series() {
    assert_eq!(stdout(&["hilb", "3"]), "1 1 2 1");
    assert_eq!(stdout(&["hilb", "--limit", "3"]), "1 1 2 4");
}

#[test]
fn expansions() {
    assert_eq!(stdout(&["expand", "1342"]), "(0,0,1) 2");
    assert_eq!(stdout(&["expand", "1324", "--lascoux"]), "(0,1) 1");
}

#[test]
fn verify_suites() {
    assert!(stdout(&["verify", "tables"]).contains("48/48 table rows match"));
    assert!(stdout(&["verify", "rajcode-equiv", "6"]).contains("720 permutations checked"));
    let out = run(&["verify", "all", "4"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["groth", "1x3"]).status.code(), Some(2));
    assert_eq!(run(&["lascoux", "a,b"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "nothing"]).status.code(), Some(2));
    assert_eq!(run(&["rajcode"]).status.code(), Some(2));
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
    let out = run(&["groth", "1x3"]);
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
}

#[test]
fn json_round_trip() {
    let text = stdout(&["groth", "1432", "--json"]);
    let doc: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["kind"], "polynomial");
    let payload = &doc["payload"];
    let terms = payload["terms"].as_array().unwrap().iter().map(|t| {
        let x: Vec<u32> = serde_json::from_value(t["x"].clone()).unwrap();
        let b = t["b"].as_u64().unwrap() as u32;
        let c: BigInt = t["coeff"].as_str().unwrap().parse().unwrap();
        (Monomial::new(x, b), c)
    });
    let rebuilt = Polynomial::from_terms(terms);
    let from_text: Polynomial = payload["text"].as_str().unwrap().parse().unwrap();
    assert_eq!(rebuilt, from_text);
    assert_eq!(rebuilt, snowkit::grothendieck(&"1432".parse().unwrap()));

    let doc: Value = serde_json::from_str(&stdout(&["hilb", "4", "--json"])).unwrap();
    assert_eq!(doc["kind"], "series");
    assert_eq!(doc["payload"]["coefficients"][2], "2");
    let doc: Value = serde_json::from_str(&stdout(&["verify", "tables", "--json"])).unwrap();
    assert_eq!(doc["kind"], "report");
    assert_eq!(doc["payload"]["passed"], true);
}
