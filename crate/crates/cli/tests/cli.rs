use std::process::{Command, Output};

use serde_json::Value;

const FERMAT: &str = "x^3+y^3+z^3+t^3";
const CYCLIC: &str = "x^2*t+y^2*z+z^2*y+t^2*x";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cubic27")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON report")
}

#[test]
fn aut_of_fermat_over_gf4() {
    let out = run(&["aut", "--field", "GF(2^2)", "--cubic", FERMAT]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["results"]["aut_order"], 25920);
    assert_eq!(r["results"]["aut_label"], "PSU4(F2)");
    assert_eq!(r["status"], "ok");
    let gens = r["results"]["generators"].as_array().unwrap();
    assert!(!gens.is_empty());
    for g in gens {
        for row in g.as_array().unwrap() {
            for e in row.as_array().unwrap() {
                let s = e.as_str().unwrap();
                assert!(s == "0" || s == "1" || s.starts_with("g^"), "{s}");
            }
        }
    }
}

#[test]
fn iso_reports_non_isomorphic_pair() {
    let out = run(&["iso", "--field", "GF(2^1)", "--cubic", CYCLIC, "--cubic2", FERMAT]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["status"], "not isomorphic");
    assert!(r["results"].get("witness").is_none());

    let out = run(&["iso", "--field", "GF(2^2)", "--cubic", CYCLIC, "--cubic2", FERMAT]);
    let r = json(&out);
    assert_eq!(r["status"], "isomorphic");
    assert_eq!(r["results"]["witness"].as_array().unwrap().len(), 4);
}

#[test]
fn reports_are_byte_identical() {
    let args = ["lines", "--field", "GF(2^1)", "--cubic", CYCLIC];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.stdout, b.stdout);
    let r = json(&a);
    assert_eq!(r["results"]["split_degree"], 2);
    assert_eq!(r["results"]["rows"].as_array().unwrap().len(), 27);
    assert_eq!(r["results"]["rational_lines"], 15);
    assert!(r.get("timing_ms").is_none());
    let timed = json(&run(&["galois", "--cubic", CYCLIC, "--timing"]));
    assert!(timed["timing_ms"].is_u64());
}

#[test]
fn bad_input_exits_with_two() {
    let cases: &[&[&str]] = &[
        &["aut", "--field", "GF(2^5)", "--cubic", "bogus(("],
        &["aut", "--field", "GF(3)", "--cubic", FERMAT],
        &["aut", "--field", "GF(2^13)", "--cubic", FERMAT],
        &["aut", "--field", "GF(2^1)"],
        &["aut", "--field", "GF(2^1)", "--cubic", "x^3+y^3+z^3"],
        &["iso", "--cubic", FERMAT],
        &["verify", "no-such-suite"],
        &["verify", "a6-conjugacy"],
        &["frobnicate"],
    ];
    for args in cases {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
    let r = json(&run(&["verify", "no-such-suite"]));
    assert_eq!(r["status"], "error");
    assert!(r["results"]["error"].as_str().unwrap().contains("unknown suite"));
}

#[test]
fn verify_exit_codes() {
    let out = run(&["verify", "weyl-order"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["status"], "pass");
    let checks = r["results"]["suites"][0]["checks"].as_array().unwrap();
    assert_eq!(checks[0]["computed"], "51840");
    assert_eq!(checks[0]["expected"], "51840");

    // the stated collineation does not map the cyclic surface onto Fermat
    let out = run(&["verify", "collineation"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["status"], "fail");
}

#[test]
fn galois_tsv() {
    let out = run(&["galois", "--cubic", CYCLIC, "--out", "tsv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("galois\t{\"class\":\"A1\",\"fixed_lines\":15,\"order\":2}"), "{text}");
    assert!(text.ends_with("status\tok\n"));
}

#[test]
fn blowdown_and_blowup() {
    let r = json(&run(&["blowdown", "--cubic", CYCLIC]));
    assert_eq!(r["results"]["model"], "Weil restriction GF(2^2)/GF(2^1)");
    assert_eq!(r["results"]["points"].as_array().unwrap().len(), 5);
    assert_eq!(r["results"]["contracted_lines"].as_array().unwrap().len(), 5);

    let out = run(&["blowdown", "--cubic", FERMAT]);
    assert_eq!(out.status.code(), Some(1));

    let r = json(&run(&["blowup", "--model", "weil"]));
    assert_eq!(r["results"]["smooth"], true);
    let cubic = r["results"]["cubic"].as_str().unwrap();
    let iso = json(&run(&["iso", "--cubic", cubic, "--cubic2", CYCLIC]));
    assert_eq!(iso["status"], "isomorphic");
}

#[test]
fn orbits_over_gf16() {
    let r = json(&run(&["orbits", "--field", "GF(2^4)", "--threads", "2"]));
    assert_eq!(r["results"]["classes"], 1);
    assert_eq!(r["inputs"]["model"], "split over GF(2^4)");
}
