use std::path::{Path, PathBuf};
use std::process::Command;

use novikov::cli::run_args;
use novikov::report::{Report, Value};

fn example(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "examples", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Report {
    let mut all = vec!["novikov"];
    all.extend_from_slice(args);
    run_args(all).expect("arguments parse").1
}

fn series(r: &Report, name: &str) -> (String, Vec<String>) {
    match r.find(name) {
        Some(Value::Series(s)) => (s.text.clone(), s.coeffs.clone()),
        other => panic!("{name}: expected a series, got {other:?}\n{}", r.render_text()),
    }
}

fn error_of(r: &Report) -> (String, String) {
    let e = r.error.as_ref().unwrap_or_else(|| panic!("expected an error\n{}", r.render_text()));
    (e.path.clone(), e.kind.clone())
}

fn write_tmp(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

fn strs(v: &[i64]) -> Vec<String> {
    v.iter().map(i64::to_string).collect()
}

#[test]
fn zeta_routes() {
    let r = run(&["zeta", "primes", &example("primes.json"), "--order", "8"]);
    assert_eq!(series(&r, "zeta_L").0, "1 + t + t^2 + t^3 + t^4 + t^5 + t^6 + t^7 + O(t^8)");
    assert_eq!(r.exit_code, 0);

    let r = run(&["zeta", "homology", &example("catmap.json"), "--order", "6"]);
    assert_eq!(series(&r, "zeta_L").1, strs(&[1, -1, -2, -3, -4, -5]));

    let r = run(&["zeta", "orbits", &example("empty.json"), "--order", "4"]);
    assert_eq!(series(&r, "zeta_L").0, "1 + O(t^4)");

    // orbits and descent read from a full instance
    let r = run(&["zeta", "orbits", &example("synthetic_descent_1.json")]);
    let d = run(&["zeta", "descent", &example("synthetic_descent_1.json")]);
    assert_eq!(series(&r, "zeta_L"), series(&d, "zeta_L"));
    assert_eq!(series(&d, "zeta_L").0, "1 - t + O(t^16)");
}

#[test]
fn zeta_from_orbits_of_the_cat_map_matches_homology() {
    let orb = run(&["zeta", "orbits", &example("catmap_torus.json"), "--order", "16"]);
    let hom = run(&["zeta", "homology", &example("catmap.json"), "--order", "16"]);
    assert_eq!(series(&orb, "zeta_L").1, series(&hom, "zeta_L").1);
}

#[test]
fn novikov_commands_on_the_circle() {
    let c = example("circle.json");
    let r = run(&["novikov", "validate", &c]);
    assert!(r.passed(), "{}", r.render_text());
    let r = run(&["novikov", "ranks", &c]);
    assert_eq!(r.find("novikov_homology"), Some(&Value::Ranks(vec![0, 0])));
    let r = run(&["novikov", "tower", &c, "5"]);
    assert!(r.verdicts.iter().any(|v| v.check == "tower_check" && v.pass));
    assert!(r.passed());
}

#[test]
fn torsion_commands() {
    let r = run(&["torsion", "map", &example("circle.json")]);
    assert_eq!(series(&r, "torsion").0, "1 + O(t^16)");

    let d = example("synthetic_descent_1.json");
    let closed = run(&["torsion", "descent-closed", &d]);
    let generic = run(&["torsion", "descent-generic", &d]);
    assert_eq!(series(&closed, "w"), series(&generic, "w"));

    let r = run(&["torsion", "complex", &example("not_acyclic.json")]);
    assert_eq!(error_of(&r), ("$.degrees[1]".into(), "NotAcyclic".into()));
    assert_eq!(r.exit_code, 2);
}

#[test]
fn theorem_b_on_bundled_instances() {
    for name in ["circle.json", "catmap_torus.json", "synthetic_descent_1.json", "synthetic_descent_2.json", "synthetic_descent_3.json"] {
        let r = run(&["verify-theorem-b", &example(name)]);
        assert!(r.passed(), "{name}\n{}", r.render_text());
    }
}

#[test]
fn corrupted_descent_matrix_is_located() {
    let dir = tempfile::tempdir().unwrap();
    let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(example("synthetic_descent_1.json")).unwrap()).unwrap();
    v["descent"]["H"][0]["matrix"][0][0] = "1+t".into();
    let f = write_tmp(dir.path(), "bad.json", &v.to_string());
    let r = run(&["verify-theorem-b", &f]);
    assert_eq!(error_of(&r), ("$.descent.H[0].matrix[0][0]".into(), "PositiveValuationRequired".into()));
    assert_eq!(r.exit_code, 2);
}

#[test]
fn verification_failure_exits_with_one() {
    let dir = tempfile::tempdir().unwrap();
    let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(example("synthetic_descent_1.json")).unwrap()).unwrap();
    v["orbits"]["orbits"][0]["eps"] = 1.into();
    let f = write_tmp(dir.path(), "wrong_orbits.json", &v.to_string());
    let r = run(&["verify-theorem-b", &f]);
    assert!(r.error.is_none());
    assert_eq!(r.exit_code, 1, "{}", r.render_text());

    // dropping the second iterate of a prime orbit breaks integrality
    let f = write_tmp(dir.path(), "incomplete.json", r#"{"N_orb": 4, "orbits": [{"n":1,"m":1,"eps":1},{"n":3,"m":3,"eps":1}]}"#);
    let r = run(&["zeta", "orbits", &f, "--order", "4"]);
    assert_eq!(series(&r, "zeta_L").1[2], "1/2");
    assert_eq!(r.exit_code, 1);
}

#[test]
fn oracle_and_expand() {
    let r = run(&["oracle", "cat-map", "--matrix", "2,1,1,1", "--iterates", "3"]);
    assert_eq!(r.find("L"), Some(&Value::Integers(strs(&[-1, -5, -16]))));
    let r = run(&["oracle", "cat-map", "--matrix", "1,0,0,1"]);
    assert_eq!(error_of(&r), ("--matrix".into(), "NonHyperbolic".into()));
    let r = run(&["oracle", "cat-map", "--matrix", "2,1,1,1", "--iterates", "0"]);
    assert_eq!(r.find("L"), Some(&Value::Integers(vec![])));
    let r = run(&["oracle", "cat-map", "--matrix", "2,1,1"]);
    assert_eq!(error_of(&r).1, "ShapeMismatch");

    let r = run(&["expand", "(1)/(1-t)", "--order", "4"]);
    assert_eq!(series(&r, "expansion").0, "1 + t + t^2 + t^3 + O(t^4)");
    let e = run(&["expand", "(1-3t+t^2)/(1-t)^2", "--order", "12"]);
    let z = run(&["zeta", "homology", &example("catmap.json"), "--order", "12"]);
    assert_eq!(series(&e, "expansion").1, series(&z, "zeta_L").1);
    let r = run(&["expand", "1/(0)"]);
    assert_eq!(error_of(&r), ("EXPR".into(), "ZeroDenominator".into()));
}

#[test]
fn input_errors_name_their_path() {
    let dir = tempfile::tempdir().unwrap();
    let cases: &[(&str, &[&str], &str, &str, &str)] = &[
        ("syntax.json", &["zeta", "orbits"], "{\"N_orb\": 4,\n \"orbits\": [}", "$", "Syntax"),
        ("missing.json", &["zeta", "orbits"], r#"{"orbits": []}"#, "$.N_orb", "MissingField"),
        ("eps.json", &["zeta", "orbits"], r#"{"N_orb": 4, "orbits": [{"n":1,"m":1,"eps":2}]}"#, "$.orbits[0].eps", "InvalidSign"),
        ("short.json", &["zeta", "orbits"], r#"{"N_orb": 4, "orbits": []}"#, "$.N_orb", "InsufficientOrbitOrder"),
        ("prime.json", &["zeta", "primes"], r#"{"primes": [{"n":0,"e1":1,"e2":1}]}"#, "$.primes[0].n", "OutOfRange"),
        ("hom.json", &["zeta", "homology"], r#"{"h": [[[1, 2]]]}"#, "$.h[0][0]", "ShapeMismatch"),
        ("poly.json", &["torsion", "complex"], r#"{"degrees": [{"basis": ["a"]}, {"basis": ["b"]}], "boundaries": [{"deg": 1, "matrix": [["1-"]]}]}"#, "$.boundaries[0].matrix[0][0]", "Parse"),
        (
            "square.json",
            &["torsion", "complex"],
            r#"{"degrees": [{"basis": ["a"]}, {"basis": ["b"]}, {"basis": ["c"]}], "boundaries": [{"deg": 1, "matrix": [["1"]]}, {"deg": 2, "matrix": [["t"]]}]}"#,
            "$.boundaries[1]",
            "BoundarySquareNonzero",
        ),
        (
            "label.json",
            &["novikov", "validate"],
            r#"{"points": [{"label": "p", "index": 1}], "incidence": [{"from": "p", "to": "z", "coeff": "1"}]}"#,
            "$.incidence[0].to",
            "UnknownLabel",
        ),
        (
            "gap.json",
            &["novikov", "validate"],
            r#"{"points": [{"label": "p", "index": 2}, {"label": "q", "index": 0}], "incidence": [{"from": "p", "to": "q", "coeff": "1"}]}"#,
            "$.incidence[0]",
            "IndexMismatch",
        ),
        (
            "neg.json",
            &["novikov", "validate"],
            r#"{"points": [{"label": "p", "index": 1}, {"label": "q", "index": 0}], "incidence": [{"from": "p", "to": "q", "coeff": "t^-1"}]}"#,
            "$.incidence[0].coeff",
            "NegativePower",
        ),
        (
            "order.json",
            &["novikov", "validate"],
            r#"{"points": [], "N_data": 8}"#,
            "$.N_data",
            "InsufficientDataOrder",
        ),
    ];
    for (file, cmd, text, path, kind) in cases {
        let f = write_tmp(dir.path(), file, text);
        let mut args = cmd.to_vec();
        args.push(&f);
        let r = run(&args);
        assert_eq!(error_of(&r), (path.to_string(), kind.to_string()), "{file}\n{}", r.render_text());
        assert_eq!(r.exit_code, 2);
    }
    let r = run(&["zeta", "orbits", "/nonexistent/file.json"]);
    assert_eq!(error_of(&r).1, "Io");
}

#[test]
fn binary_exit_codes_and_json_output() {
    let bin = env!("CARGO_BIN_EXE_novikov");
    let dir = tempfile::tempdir().unwrap();
    let out1 = dir.path().join("a.json");
    let out2 = dir.path().join("b.json");
    let inst = example("synthetic_descent_2.json");
    for out in [&out1, &out2] {
        let st = Command::new(bin).args(["verify-theorem-b", &inst, "--json"]).arg(out).status().unwrap();
        assert_eq!(st.code(), Some(0));
    }
    let a = std::fs::read_to_string(&out1).unwrap();
    assert_eq!(a, std::fs::read_to_string(&out2).unwrap());
    let report = Report::from_json(&a).unwrap();
    assert_eq!(report.to_json(), a);
    assert!(!report.command.iter().any(|c| c.contains("a.json")));

    let st = Command::new(bin).args(["expand", "1/(0)"]).output().unwrap();
    assert_eq!(st.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&st.stderr).contains("EXPR"));

    let st = Command::new(bin).args(["zeta", "bogus", "x.json"]).output().unwrap();
    assert_eq!(st.status.code(), Some(2));

    let f = write_tmp(dir.path(), "incomplete.json", r#"{"N_orb": 3, "orbits": [{"n":1,"m":1,"eps":1}]}"#);
    let st = Command::new(bin).args(["zeta", "orbits", &f, "--order", "3"]).output().unwrap();
    assert_eq!(st.status.code(), Some(1));
}
