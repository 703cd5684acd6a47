//! End-to-end CLI tests: schemas, exit codes, determinism, and a
//! malformed-input fuzz pass. Everything runs in-process through
//! `latpol::cli::run` except one smoke test of the compiled binary.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use std::fs;
use std::path::Path;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["latpol".to_string()];
    argv.extend(args.iter().map(|s| s.to_string()));
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = latpol::cli::run(&argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).expect("stdout utf8"),
        String::from_utf8(err).expect("stderr utf8"),
    )
}

fn run_json(args: &[&str]) -> Value {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "expected success, stderr: {err}");
    serde_json::from_str(&out).expect("stdout is one JSON document")
}

fn write_file(dir: &Path, name: &str, content: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, content).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn lattice_names_and_parameters() {
    let u = run_json(&["lattice", "--name", "u"]);
    assert_eq!(u["rank"], json!(2));
    assert_eq!(u["gram"], json!([["0", "1"], ["1", "0"]]));

    let e8 = run_json(&["lattice", "--name", "e8neg"]);
    assert_eq!(e8["rank"], json!(8));
    assert_eq!(e8["gram"][0][0], json!("-2"));

    assert_eq!(run_json(&["lattice", "--name", "k3"])["rank"], json!(22));

    let k3n = run_json(&["lattice", "--name", "k3n", "--n", "7"]);
    assert_eq!(k3n["rank"], json!(23));
    assert_eq!(k3n["gram"][22][22], json!("-12"));

    let mukai = run_json(&["lattice", "--name", "mukai"]);
    assert_eq!(mukai["rank"], json!(24));

    let r1 = run_json(&["lattice", "--name", "rank1", "--k", "-8"]);
    assert_eq!(r1["gram"], json!([["-8"]]));

    // Missing required parameters are usage errors.
    assert_eq!(run(&["lattice", "--name", "k3n"]).0, 2);
    assert_eq!(run(&["lattice", "--name", "rank1"]).0, 2);
    assert_eq!(run(&["lattice", "--name", "leech"]).0, 2);
}

#[test]
fn snf_hnf_schemas_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let m = write_file(dir.path(), "m.json", "[[4,2],[2,4]]");

    let snf = run_json(&["snf", "--matrix", &m]);
    assert_eq!(snf["s"], json!([["2", "0"], ["0", "6"]]));
    for key in ["s", "u", "v"] {
        assert!(snf[key].is_array(), "snf output must carry {key}");
    }

    let hnf = run_json(&["hnf", "--matrix", &m]);
    assert_eq!(hnf["h"], json!([["2", "4"], ["0", "6"]]));

    // Determinism: identical invocations give byte-identical output.
    let (c1, o1, _) = run(&["snf", "--matrix", &m]);
    let (c2, o2, _) = run(&["snf", "--matrix", &m]);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(o1, o2);
}

#[test]
fn poltype_schema_and_failure_modes() {
    let dir = tempfile::tempdir().unwrap();

    let principal = write_file(
        dir.path(),
        "p.json",
        "[[0,0,1,0],[0,0,0,1],[-1,0,0,0],[0,-1,0,0]]",
    );
    let doc = run_json(&["poltype", "--matrix", &principal]);
    assert_eq!(doc["type"], json!(["1", "1"]));
    assert!(doc["transform"].is_array());

    // Non-alternating, odd-dimensional and singular forms are
    // mathematical failures (exit 1), not usage errors.
    let sym = write_file(dir.path(), "s.json", "[[1,0],[0,1]]");
    assert_eq!(run(&["poltype", "--matrix", &sym]).0, 1);
    let odd = write_file(dir.path(), "o.json", "[[0,1,0],[-1,0,0],[0,0,0]]");
    assert_eq!(run(&["poltype", "--matrix", &odd]).0, 1);
    let singular = write_file(
        dir.path(),
        "sg.json",
        "[[0,0,0,0],[0,0,0,1],[0,0,0,0],[0,-1,0,0]]",
    );
    assert_eq!(run(&["poltype", "--matrix", &singular]).0, 1);
}

#[test]
fn div_invariant_enumerate_bm() {
    let dir = tempfile::tempdir().unwrap();
    let u = write_file(dir.path(), "u.json", r#"{"rank":2,"gram":[["0","1"],["1","0"]]}"#);

    let div = run_json(&["div", "--lattice", &u, "--vector", "[2,4]"]);
    assert_eq!(div["divisibility"], json!("2"));
    // Dimension mismatch is a usage error.
    assert_eq!(run(&["div", "--lattice", &u, "--vector", "[1,2,3]"]).0, 2);
    // A vector pairing to zero with everything has no divisibility.
    let degenerate = write_file(dir.path(), "z.json", r#"{"rank":1,"gram":[["0"]]}"#);
    assert_eq!(run(&["div", "--lattice", &degenerate, "--vector", "[1]"]).0, 1);

    let lam = "[0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,2,2,1]";
    let inv = run_json(&["invariant", "--n", "5", "--lambda", lam]);
    assert_eq!(inv["d"], json!("2"));
    assert_eq!(inv["b_star"], json!("1"));
    assert_eq!(inv["gram_h"], json!([["2", "0"], ["0", "0"]]));

    // Non-isotropic input fails the mathematical precondition.
    let bad = "[0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,1,1,0,0,0,0,0]";
    assert_eq!(run(&["invariant", "--n", "5", "--lambda", bad]).0, 1);

    let en = run_json(&["enumerate", "--n", "26"]);
    let classes: Vec<(&str, &str)> = en["classes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| (c["d"].as_str().unwrap(), c["b_star"].as_str().unwrap()))
        .collect();
    assert_eq!(classes, vec![("1", "0"), ("5", "1"), ("5", "2")]);
    let only_d5 = run_json(&["enumerate", "--n", "26", "--d", "5"]);
    assert_eq!(only_d5["classes"].as_array().unwrap().len(), 2);

    let bm = run_json(&["bm", "--n", "5", "--d", "2", "--b", "1"]);
    assert_eq!(bm["(v,v)"], json!("8"));
    assert_eq!(bm["div_alpha"], json!("2"));
    assert_eq!(bm["div_check"], json!("pass"));
    assert_eq!(bm["moduli_dimension"], json!("10"));
    assert_eq!(bm["v"]["r"], json!("0"));

    // gcd(d, b) != 1 violates the construction, exit 1.
    assert_eq!(run(&["bm", "--n", "10", "--d", "3", "--b", "6"]).0, 1);
    // d^2 must divide n-1.
    assert_eq!(run(&["bm", "--n", "6", "--d", "2", "--b", "1"]).0, 1);
}

#[test]
fn certificate_build_and_check() {
    let dir = tempfile::tempdir().unwrap();
    let lam = "[0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,2,2,1]";

    let cert_path = dir.path().join("cert.json");
    let (code, _, _) = run(&[
        "certificate",
        "--n",
        "5",
        "--lambda",
        lam,
        "--output",
        cert_path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let doc: Value = serde_json::from_str(&fs::read_to_string(&cert_path).unwrap()).unwrap();
    assert_eq!(doc["kind"], json!("principality-certificate"));
    assert_eq!(doc["conclusion"], json!(["1", "1", "1", "1", "1"]));

    let checked = run_json(&["certificate", "--check", cert_path.to_str().unwrap()]);
    assert_eq!(checked["verified"], json!(true));

    // Any tampering is detected on re-check.
    let mut forged = doc.clone();
    forged["steps"][2]["witness"]["b_star"] = json!("7");
    let forged_path = write_file(dir.path(), "forged.json", &forged.to_string());
    assert_eq!(run(&["certificate", "--check", &forged_path]).0, 1);

    // Building from a non-isotropic class fails with exit 1.
    let bad = "[1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0]";
    assert_eq!(run(&["certificate", "--n", "5", "--lambda", bad]).0, 1);
}

#[test]
fn period_subcommand() {
    let dir = tempfile::tempdir().unwrap();
    let k3 = run_json(&["lattice", "--name", "k3"]);
    let k3_path = write_file(dir.path(), "k3.json", &k3.to_string());

    let mut x = vec!["0"; 22];
    let mut y = vec!["0"; 22];
    x[16] = "1";
    x[17] = "1";
    y[18] = "1";
    y[19] = "1";
    let xs = serde_json::to_string(&x).unwrap();
    let ys = serde_json::to_string(&y).unwrap();

    let mut lam = vec![0i64; 22];
    lam[16] = 1;
    lam[17] = -1;
    let lam_s = serde_json::to_string(&lam).unwrap();

    let doc = run_json(&["period", "--lattice", &k3_path, "--x", &xs, "--y", &ys, "--lambda", &lam_s]);
    assert_eq!(doc["is_period"], json!(true));
    assert_eq!(doc["one_one_rank"], json!(20));
    assert_eq!(doc["lambda_in_one_one"], json!(true));

    // Rational scaling keeps the period conditions.
    let xq: Vec<String> = x.iter().map(|c| format!("{c}/3")).collect();
    let yq: Vec<String> = y.iter().map(|c| format!("{c}/3")).collect();
    let doc = run_json(&[
        "period",
        "--lattice",
        &k3_path,
        "--x",
        &serde_json::to_string(&xq).unwrap(),
        "--y",
        &serde_json::to_string(&yq).unwrap(),
    ]);
    assert_eq!(doc["is_period"], json!(true));

    // (x, y) != 0 is not a period.
    let e = serde_json::to_string(&{
        let mut v = vec!["0"; 22];
        v[16] = "1";
        v
    })
    .unwrap();
    let f = serde_json::to_string(&{
        let mut v = vec!["0"; 22];
        v[17] = "1";
        v
    })
    .unwrap();
    let doc = run_json(&["period", "--lattice", &k3_path, "--x", &e, "--y", &f]);
    assert_eq!(doc["is_period"], json!(false));
}

#[test]
fn selftest_is_deterministic_and_seed_sensitive() {
    let (c1, o1, _) = run(&["selftest", "--seed", "11", "--trials", "5"]);
    let (c2, o2, _) = run(&["selftest", "--seed", "11", "--trials", "5"]);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(o1, o2, "same seed must give identical reports");
    let doc: Value = serde_json::from_str(&o1).unwrap();
    assert_eq!(doc["status"], json!("pass"));
    assert_eq!(doc["properties"].as_array().unwrap().len(), 8);
}

#[test]
fn output_flag_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let (_, stdout, _) = run(&["lattice", "--name", "u"]);
    let path = dir.path().join("u.json");
    let (code, piped, _) = run(&["lattice", "--name", "u", "--output", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(piped.is_empty(), "with --output nothing goes to stdout");
    assert_eq!(fs::read_to_string(&path).unwrap(), stdout);
}

#[test]
fn usage_errors_are_exit_2() {
    assert_eq!(run(&[]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["snf"]).0, 2);
    assert_eq!(run(&["snf", "--matrix", "/nonexistent/file.json"]).0, 2);
    assert_eq!(run(&["invariant", "--n", "1", "--lambda", "[]"]).0, 2);
    assert_eq!(run(&["invariant", "--n", "2", "--lambda", "not json"]).0, 2);
    assert_eq!(run(&["enumerate", "--n", "99999999999"]).0, 2);
    assert_eq!(run(&["bm", "--n", "5", "--d", "2"]).0, 2);
    // 22 coordinates against a rank-23 lattice.
    let short = "[0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,2,2]";
    assert_eq!(run(&["invariant", "--n", "5", "--lambda", short]).0, 2);
}

#[test]
fn fuzzed_malformed_inputs_always_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let valid = "[[0,2],[-2,0]]";

    for trial in 0..120 {
        let corrupted: String = match trial % 4 {
            // Truncations of a valid document.
            0 => valid[..rng.gen_range(1..valid.len() - 1)].to_string(),
            // Random printable garbage.
            1 => (0..rng.gen_range(1..40))
                .map(|_| char::from(rng.gen_range(b' '..=b'~')))
                .collect(),
            // Structurally valid JSON, wrong content.
            2 => ["{}", "[]", "[[1.5]]", "[[1,2],[3]]", "[\"a\"]", "true", "[[]]"]
                [rng.gen_range(0..7)]
            .to_string(),
            // Byte mutation inside a valid document.
            _ => {
                let mut b = valid.as_bytes().to_vec();
                let i = rng.gen_range(0..b.len());
                b[i] = rng.gen_range(b'a'..=b'z');
                String::from_utf8_lossy(&b).into_owned()
            }
        };
        let path = write_file(dir.path(), &format!("fuzz{trial}.json"), &corrupted);
        for sub in ["snf", "hnf", "poltype"] {
            let (code, _, _) = run(&[sub, "--matrix", &path]);
            // A mutation can still produce a valid integer matrix (or a
            // degenerate alternating one); what is forbidden is a crash
            // or an uncontrolled exit code.
            assert!(
                code == 0 || code == 1 || code == 2,
                "unexpected exit {code} for {sub} on {corrupted:?}"
            );
            if serde_json::from_str::<Value>(&corrupted).is_err() {
                assert_eq!(code, 2, "{sub} must reject non-JSON {corrupted:?}");
            }
        }
        let (code, _, _) = run(&["div", "--lattice", &path, "--vector", &corrupted]);
        assert!(code == 0 || code == 1 || code == 2);
    }
}

#[test]
fn compiled_binary_smoke_test() {
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_latpol"))
        .args(["lattice", "--name", "u"])
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["rank"], json!(2));

    let fail = std::process::Command::new(env!("CARGO_BIN_EXE_latpol"))
        .args(["bm", "--n", "10", "--d", "3", "--b", "6"])
        .output()
        .expect("binary runs");
    assert_eq!(fail.status.code(), Some(1));
}
