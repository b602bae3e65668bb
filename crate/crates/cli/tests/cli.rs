use std::fs;
use std::path::PathBuf;
use std::process::Command;

const BIN: &str = env!("CARGO_BIN_EXE_selfdecomp");

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run(args: &[&str]) -> Run {
    run_env(args, &[])
}

fn run_env(args: &[&str], env: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(BIN);
    cmd.args(args).env_remove("SELFDECOMP_SEED");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn data_rows(csv: &str) -> Vec<Vec<f64>> {
    csv.lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| l.split(',').map(|c| c.parse().unwrap()).collect())
        .collect()
}

/// Compares against `tests/golden/<name>`; `UPDATE_GOLDEN=1` rewrites the file.
fn golden(name: &str, actual: &str) {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name].iter().collect();
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        fs::write(&path, actual).unwrap();
    }
    let expected = fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
    assert_eq!(actual, expected, "output differs from {name}");
}

#[test]
fn golden_outputs() {
    let r = run(&["cf", "--model", "Gamma(1,1)", "--which", "bdcf", "--t", "-1,0,0.5,1,2"]);
    assert_eq!(r.code, 0);
    golden("cf_gamma_bdcf.csv", &r.stdout);

    let r = run(&["bddf", "--model", "SymStable1", "--a", "-1,0,1"]);
    assert_eq!(r.code, 0);
    golden("bddf_stable1.csv", &r.stdout);

    let r = run(&["sample", "--gen", "loggamma", "--alpha", "1", "--lambda", "1", "--n", "5", "--seed", "7"]);
    assert_eq!(r.code, 0);
    golden("sample_loggamma.csv", &r.stdout);

    let r = run(&["moments", "--model", "LogGamma(2,1)"]);
    assert_eq!(r.code, 0);
    golden("moments_loggamma.json", &r.stdout);

    let r = run(&["cf", "--kind", "besselk", "--alpha", "1", "--t", "1", "--format", "json"]);
    assert_eq!(r.code, 0);
    golden("cf_besselk.json", &r.stdout);
}

#[test]
fn cf_examples() {
    let r = run(&["cf", "--model", r#"{"kind":"SymStable1","params":{"scale":1}}"#, "--which", "bdcf", "--t", "1,0"]);
    let rows = data_rows(&r.stdout);
    assert!((rows[0][1] - (-1.0f64).exp()).abs() < 1e-15 && rows[0][2] == 0.0);
    assert_eq!(rows[1], vec![0.0, 1.0, 0.0]);

    let r = run(&["cf", "--model", "Gamma(1,1)", "--which", "bdcf", "--t", "1"]);
    let rows = data_rows(&r.stdout);
    let m = (-0.5f64).exp();
    assert!((rows[0][1] - m * 0.5f64.cos()).abs() < 1e-15);
    assert!((rows[0][2] - m * 0.5f64.sin()).abs() < 1e-15);
}

#[test]
fn bddf_examples() {
    // the Lévy(0, 2) driving variable is Lévy(0, 1/2)
    let r = run(&["bddf", "--kind", "levy", "--m", "0", "--c", "2", "--a", "0.5"]);
    let v = data_rows(&r.stdout)[0][1];
    assert!((v - 0.317_310_507_862_914_1).abs() < 1e-6, "{v}");

    let r = run(&["bddf", "--model", "SymStable1", "--a", "1"]);
    assert!((data_rows(&r.stdout)[0][1] - 0.75).abs() < 1e-8);

    let r = run(&["bddf", "--model", "Gamma(1,1)", "--a", "1e-9"]);
    assert!((data_rows(&r.stdout)[0][1] - (-1.0f64).exp()).abs() < 1e-6);

    let r = run(&["bddf", "--model", "SymStable1", "--a-range", "-2:2:5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 5);
}

#[test]
fn bddf_failure_keeps_partial_output() {
    let r = run(&["bddf", "--model", "Levy(0,2)", "--a", "0.5,200", "--max-segments", "10"]);
    assert_eq!(r.code, 3, "{}", r.stderr);
    assert!(r.stdout.contains("# failed at a = "));
    assert_eq!(r.stdout.lines().filter(|l| !l.starts_with('#')).count(), 2);
}

#[test]
fn sample_is_deterministic_and_seed_env_is_honoured() {
    let args = ["sample", "--gen", "loggamma", "--alpha", "1", "--lambda", "1", "--n", "1000", "--seed", "7"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
    let env = run_env(&["sample", "--gen", "loggamma", "--alpha", "1", "--lambda", "1", "--n", "1000"], &[("SELFDECOMP_SEED", "7")]);
    assert_eq!(env.stdout, a.stdout);
    assert!(a.stdout.contains("# seed: 7\n") && a.stdout.contains("# generator: loggamma_series\n"));
}

#[test]
fn sample_compound_poisson_atom() {
    let r = run(&["sample", "--gen", "gamma_bdrv", "--alpha", "1", "--lambda", "1", "--n", "1000000", "--seed", "1"]);
    let rows = data_rows(&r.stdout);
    assert_eq!(rows.len(), 1_000_000);
    let zeros = rows.iter().filter(|r| r[0] == 0.0).count() as f64 / 1e6;
    let p = (-1.0f64).exp();
    assert!((zeros - p).abs() < 3.0 * (p * (1.0 - p) / 1e6).sqrt(), "{zeros}");
}

#[test]
fn sample_header_records_poisson_mean_and_writes_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.csv");
    let r = run(&[
        "sample", "--gen", "besselk_innovation", "--alpha", "2", "--c", "0.5", "--n", "10", "--seed", "3", "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.is_empty());
    let text = fs::read_to_string(&path).unwrap();
    let line = text.lines().find(|l| l.starts_with("# poisson_mean: ")).unwrap();
    let mean: f64 = line.trim_start_matches("# poisson_mean: ").parse().unwrap();
    assert!((mean - 2.772_588_722_239_781).abs() < 1e-12);
    assert_eq!(data_rows(&text).len(), 10);
}

#[test]
fn sample_json_batch() {
    let r = run(&["sample", "--gen", "gamma_innovation", "--alpha", "1", "--c", "0.5", "--n", "4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["n"], 4);
    assert_eq!(v["values"].as_array().unwrap().len(), 4);
    assert_eq!(v["generator_tag"], "gamma_innovation");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["sample", "--gen", "nope", "--alpha", "1", "--n", "1"]).code, 2);
    assert_eq!(run(&["sample", "--gen", "gamma_innovation", "--alpha", "1", "--n", "1"]).code, 2);
    assert_eq!(run(&["sample", "--gen", "gamma_innovation", "--alpha", "1", "--c", "1.5", "--n", "1"]).code, 2);
    assert_eq!(run(&["cf", "--model", r#"{"kind":"Gamma"}"#, "--t", "1"]).code, 2);
    assert_eq!(run(&["cf", "--model", "Gamma(-1,1)", "--t", "1"]).code, 2);
    assert_eq!(run(&["cf", "--model", "Gamma(1,1)"]).code, 2);
    assert_eq!(run(&["moments", "--model", "SymStable1"]).code, 2);
}

#[test]
fn moments_examples() {
    let get = |model: &str| -> serde_json::Value { serde_json::from_str(&run(&["moments", "--model", model]).stdout).unwrap() };
    let v = get("LogGamma(1,1)");
    assert!((v["mean"].as_f64().unwrap() + 0.577_215_664_901_532_9).abs() < 1e-15);
    assert!((v["variance"].as_f64().unwrap() - 1.644_934_066_848_226_4).abs() < 1e-15);
    assert!((v["bddf_variance"].as_f64().unwrap() - 2.0 * 1.644_934_066_848_226_4).abs() < 1e-9);
    let e = get(&format!("LogGamma(1,{})", std::f64::consts::E));
    assert!((e["mean"].as_f64().unwrap() + 1.577_215_664_901_532_9).abs() < 1e-15);
    let two = get("LogGamma(2,1)");
    assert!((two["mean"].as_f64().unwrap() - 0.422_784_335_098_467_1).abs() < 1e-15);
}

#[test]
fn verify_filters_and_tolerance_scale() {
    let r = run(&["verify", "--only", "erfc_sine"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let lines: Vec<serde_json::Value> = r.stdout.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 4);
    for l in &lines {
        assert_eq!(l["identity_id"], "erfc_sine_integral");
        assert_eq!(l["passed"], true);
        for key in ["residual", "tolerance", "params"] {
            assert!(l.get(key).is_some());
        }
    }
    let r = run(&["verify", "--only", "compound_poisson_atom,selfdecomposition", "--tolerance-scale", "0.01"]);
    assert_eq!(r.code, 1);
}

#[test]
fn verify_default_suite_passes() {
    let r = run(&["verify"]);
    assert_eq!(r.code, 0, "{}\n{}", r.stdout, r.stderr);
    assert!(r.stdout.lines().count() > 40);
}
