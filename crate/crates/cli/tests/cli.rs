use braidknot::ring::{BiLaurentPoly, LaurentPoly};
use braidknot_cli::{run, EXIT_MISMATCH, EXIT_OK, EXIT_PARSE, EXIT_SEARCH_LIMIT};
use serde_json::Value;

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("braidknot").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn figure_eight_wada() {
    let (code, out, _) = invoke(&["invariant", "--kind", "wada", "--braid", "1 -2 1 -2"]);
    assert_eq!((code, out.trim()), (EXIT_OK, "5"));
}

#[test]
fn trefoil_burau_with_matrix() {
    let (code, out, _) = invoke(&[
        "invariant",
        "--kind",
        "burau",
        "--braid",
        "1^3",
        "--show-matrix",
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("-t^3 + t^2 - t, t^3 - t^2 + t"));
    assert!(out.contains("t^2 - t + 1, -t^2 + t - 1"));
    assert_eq!(out.lines().last(), Some("t^2 - t + 1"));
}

#[test]
fn empty_braid_is_unknot() {
    let (code, out, _) = invoke(&[
        "invariant",
        "--kind",
        "wada",
        "--braid",
        "",
        "--strands",
        "1",
    ]);
    assert_eq!((code, out.trim()), (EXIT_OK, "1"));
}

#[test]
fn chain_listing() {
    let (_, out, _) = invoke(&[
        "invariant",
        "--kind",
        "wada",
        "--braid",
        "1^3 2^3",
        "--show-chain",
    ]);
    assert!(out.contains("E_0: 0\nE_1: 9\n"));
}

#[test]
fn parse_errors_exit_2() {
    let (code, _, err) = invoke(&["invariant", "--braid", "1 2^x"]);
    assert_eq!(code, EXIT_PARSE);
    assert!(err.contains("byte 2") && err.contains("'2^x'"), "{err}");
    let (code, _, err) = invoke(&["invariant", "--braid", "3", "--strands", "3"]);
    assert_eq!(code, EXIT_PARSE);
    assert!(err.contains("generator 3"), "{err}");
    let (code, _, _) = invoke(&["invariant", "--braid", "1", "--kind", "reduced"]);
    assert_eq!(code, EXIT_PARSE);
}

#[test]
fn json_round_trips() {
    let (code, out, _) = invoke(&[
        "invariant",
        "--kind",
        "burau",
        "--braid",
        "1 -2 1 -2",
        "--format",
        "json",
        "--show-matrix",
    ]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["strands"], 3);
    assert_eq!(v["kind"], "burau");
    assert_eq!(v["alexander_at_minus1"], "5");
    assert_eq!(v["conjecture_consistent"], true);
    let texts = v["matrix"]
        .as_array()
        .unwrap()
        .iter()
        .flat_map(|r| r.as_array().unwrap().clone())
        .chain(v["chain"].as_array().unwrap().iter().cloned())
        .chain([v["invariant"].clone()]);
    for t in texts {
        let s = t.as_str().unwrap();
        let p: LaurentPoly = s.parse().unwrap();
        assert_eq!(p.to_string(), s);
    }
}

#[test]
fn twovar_json_round_trips() {
    let (_, out, _) = invoke(&[
        "invariant",
        "--kind",
        "twovar",
        "--braid",
        "1^2",
        "--format",
        "json",
    ]);
    let v: Value = serde_json::from_str(&out).unwrap();
    let inv: BiLaurentPoly = v["invariant"].as_str().unwrap().parse().unwrap();
    assert!(inv.unit_equal(&"1 - s*t".parse().unwrap()));
    assert_eq!(inv.to_string(), v["invariant"].as_str().unwrap());
}

#[test]
fn verify_trefoil_orbit() {
    let args = [
        "verify", "--braid", "1^3", "--kind", "wada", "--depth", "4", "--seed", "7",
    ];
    let (code, out, _) = invoke(&args);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("PASS: invariant 3 at every node"));
    assert_eq!(out.lines().filter(|l| l.contains("->")).count(), 4);
    assert_eq!(invoke(&args).1, out);
}

#[test]
fn verify_depth_zero() {
    let (code, out, _) = invoke(&["verify", "--braid", "1 -2 1 -2", "--depth", "0"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("PASS: invariant 5"));
}

#[test]
fn verify_hopf_burau() {
    let (code, out, _) = invoke(&[
        "verify", "--braid", "1^2", "--kind", "burau", "--depth", "5", "--seed", "3", "--format",
        "json",
    ]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["pass"], true);
    for node in v["nodes"].as_array().unwrap() {
        assert_eq!(node["invariant"], "t - 1");
    }
}

#[test]
fn table_matches() {
    let (code, out, _) = invoke(&["table"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(!out.contains("MISMATCH"));
    let line = |name: &str| {
        out.lines()
            .find(|l| l.starts_with(name))
            .unwrap()
            .to_string()
    };
    let square = line("square knot");
    let granny = line("granny knot");
    assert_eq!(
        square.split_whitespace().skip(5).collect::<Vec<_>>(),
        granny.split_whitespace().skip(5).collect::<Vec<_>>()
    );
    for k in 2..=6 {
        let row = line(&format!("torus (2,{k})"));
        assert_eq!(
            row.split_whitespace().nth(4),
            Some(k.to_string().as_str()),
            "{row}"
        );
    }
}

#[test]
fn table_json() {
    let (_, out, _) = invoke(&["table", "--format", "json"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    let rows = v.as_array().unwrap();
    assert!(rows.iter().all(|r| r["matches_expected"] == true));
}

#[test]
fn search_examples() {
    let (code, out, _) = invoke(&["search", "--from", "1^3", "--to", "1 1 1"]);
    assert_eq!(
        (code, out.trim()),
        (
            EXIT_OK,
            "FOUND path of 0 moves\n  start             [1^3] on 2 strands".trim()
        )
    );
    let (code, out, _) = invoke(&[
        "search",
        "--from",
        "1",
        "--to",
        "",
        "--to-strands",
        "1",
        "--max-strands",
        "2",
        "--max-length",
        "4",
        "--max-depth",
        "3",
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("FOUND path of 1 moves") && out.contains("destabilize"));
    let (code, out, _) = invoke(&[
        "search",
        "--from",
        "1^-3",
        "--to",
        "1^3",
        "--max-depth",
        "6",
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("NOT FOUND within bounds"));
}

#[test]
fn search_node_limit_exit_4() {
    let (code, out, _) = invoke(&[
        "search",
        "--from",
        "1^-3",
        "--to",
        "1^3",
        "--max-strands",
        "4",
        "--max-length",
        "10",
        "--max-nodes",
        "10",
    ]);
    assert_eq!(code, EXIT_SEARCH_LIMIT);
    assert!(out.contains("node limit"));
}

#[test]
fn mismatch_code_is_distinct() {
    assert_ne!(EXIT_MISMATCH, EXIT_OK);
    assert_ne!(EXIT_MISMATCH, EXIT_PARSE);
}
