use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

struct Run {
    code: i32,
    json: Value,
    stderr: String,
}

fn run(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_galois-equiv")).args(args).output().unwrap();
    let stdout = String::from_utf8(out.stdout).unwrap();
    Run {
        code: out.status.code().unwrap(),
        json: serde_json::from_str(&stdout).unwrap_or(Value::Null),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn validate_exit_codes() {
    let ok = run(&["validate", path(&fixture("a5_3dim.json"))]);
    assert_eq!(ok.code, 0);
    assert_eq!(ok.json["burnside"]["dim"], 9);
    let broken = run(&["validate", path(&fixture("a5_broken.json"))]);
    assert_eq!(broken.code, 1);
    assert_eq!(broken.json["ok"], false);
    assert_eq!(run(&["validate", path(&fixture("2a7_4dim.json"))]).code, 0);
}

#[test]
fn malformed_input_reports_position() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("bad.json");
    std::fs::write(&f, "{\n  \"field\": {\"min_poly\": [-5, 0, 1],\n  \"sigma_image\": [0, -1]\n").unwrap();
    let r = run(&["validate", path(&f)]);
    assert_eq!(r.code, 2);
    assert!(r.json["error"].as_str().unwrap().contains("line 4"), "{}", r.json);
    assert!(r.stderr.contains("line 4"));

    let text = std::fs::read_to_string(fixture("a5_3dim.json")).unwrap().replace("\"1/2\"", "0.5");
    std::fs::write(&f, text).unwrap();
    let r = run(&["lambda", path(&f)]);
    assert_eq!(r.code, 2);
    assert!(r.json["error"].as_str().unwrap().contains("representation.b"), "{}", r.json);

    assert_eq!(run(&["validate", path(&dir.path().join("missing.json"))]).code, 2);
}

#[test]
fn unknown_generator_in_a_relation_is_a_parse_error() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("p.json");
    let text = std::fs::read_to_string(fixture("a5_3dim.json")).unwrap().replace("\"b b b\"", "\"b q b\"");
    std::fs::write(&f, text).unwrap();
    let r = run(&["validate", path(&f)]);
    assert_eq!(r.code, 2);
    assert!(r.json["error"].as_str().unwrap().contains("group.relations[1]"), "{}", r.json);
}

#[test]
fn lambda_reports() {
    let a5 = run(&["lambda", path(&fixture("a5_3dim.json"))]).json;
    assert_eq!((&a5["lambda_rep"], &a5["lambda_canonical"], &a5["is_trivial"]), (&"-1".into(), &"1".into(), &true.into()));
    let two = run(&["lambda", path(&fixture("2a7_4dim.json"))]).json;
    assert_eq!(two["lambda_canonical"], "-2");
    assert_eq!(two["is_trivial"], false);
    assert_eq!(two["note"]["primes_divide_order"], true);
    let c3 = run(&["lambda", path(&fixture("c3_inversion.json"))]).json;
    assert_eq!((&c3["lambda_rep"], &c3["lambda_canonical"], &c3["is_trivial"]), (&"1".into(), &"1".into(), &true.into()));
}

#[test]
fn equivariant_certificates_round_trip_and_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let (c1, c2) = (dir.path().join("c1.json"), dir.path().join("c2.json"));
    let a5 = path(&fixture("a5_3dim.json")).to_string();
    assert_eq!(run(&["equivariant", &a5, "--seed", "5", "--out", path(&c1)]).code, 0);
    assert_eq!(run(&["equivariant", &a5, "--seed", "5", "--out", path(&c2)]).code, 0);
    assert_eq!(std::fs::read(&c1).unwrap(), std::fs::read(&c2).unwrap());
    let v = run(&["verify", path(&c1)]);
    assert_eq!(v.code, 0, "{}", v.json);

    let cert: Value = serde_json::from_slice(&std::fs::read(&c1).unwrap()).unwrap();
    assert_eq!(cert["status"], "constructed");
    assert_eq!(cert["problem"]["options"]["seed"], 5);
    let tampered = serde_json::to_string(&{
        let mut c = cert.clone();
        c["Y"][0][0] = Value::String("7".into());
        c
    })
    .unwrap();
    std::fs::write(&c2, tampered).unwrap();
    assert_eq!(run(&["verify", path(&c2)]).code, 1);
}

#[test]
fn obstruction_exit_code() {
    let r = run(&["equivariant", path(&fixture("2a7_4dim.json"))]);
    assert_eq!(r.code, 3);
    assert_eq!(r.json["status"], "obstructed");
    assert_eq!(r.json["symbol"], serde_json::json!(["-2", "-7"]));
    assert!(r.json["message"].as_str().unwrap().contains("obstruction"));
}

#[test]
fn c3_certificate_is_one_by_one() {
    let r = run(&["equivariant", path(&fixture("c3_inversion.json"))]);
    assert_eq!(r.code, 0);
    assert_eq!(r.json["Y"].as_array().unwrap().len(), 1);
    assert_eq!(r.json["rho_prime"]["g"][0].as_array().unwrap().len(), 1);
}

#[test]
fn replayed_y_gives_the_known_matrices() {
    let r = run(&[
        "equivariant",
        path(&fixture("a5_3dim.json")),
        "--replay-Y",
        path(&fixture("a5_known_Y.json")),
    ]);
    assert_eq!(r.code, 0);
    let b = &r.json["rho_prime"]["b"];
    assert_eq!(b[0][0], serde_json::json!(["1/4", "-1/10"]));
    assert_eq!(b[0][1], serde_json::json!(["-1/8", "19/40"]));
    assert_eq!(b[2][0], "-5/4");
    assert_eq!(r.json["rho_prime"]["a"], serde_json::json!([["-1", "0", "0"], ["0", "0", "1"], ["0", "1", "0"]]));
    assert_eq!(r.json["witness"], serde_json::json!(["2", "-1"]));
}

#[test]
fn witness_flag() {
    let a5 = path(&fixture("a5_3dim.json")).to_string();
    let r = run(&["equivariant", &a5, "--witness", "-2,1"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.json["witness"], serde_json::json!(["-2", "1"]));
    assert_eq!(run(&["equivariant", &a5, "--witness", "1,0"]).code, 1);
    assert_eq!(run(&["equivariant", &a5, "--witness", "x"]).code, 2);
}

#[test]
fn induce_reports() {
    let a5 = run(&["induce", path(&fixture("a5_3dim.json"))]);
    assert_eq!(a5.code, 0);
    assert_eq!((&a5.json["endo_dim"], &a5.json["relations_ok"], &a5.json["schur_index"]), (&4.into(), &true.into(), &1.into()));
    assert!(a5.json["symbol"].is_null());
    let two = run(&["induce", path(&fixture("2a7_4dim.json"))]).json;
    assert_eq!((&two["endo_dim"], &two["schur_index"]), (&4.into(), &2.into()));
    assert_eq!(two["symbol"], serde_json::json!(["-2", "-7"]));
    assert_eq!(two["crossed_product_ok"], true);
    let c3 = run(&["induce", path(&fixture("c3_inversion.json"))]).json;
    assert_eq!((&c3["endo_dim"], &c3["schur_index"]), (&4.into(), &1.into()));
}
