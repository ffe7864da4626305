use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn spfkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spfkit"))
        .args(args)
        .env_remove("SPFKIT_THREADS")
        .output()
        .expect("run spfkit")
}

fn json(args: &[&str]) -> Value {
    let out = spfkit(args);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn csv_rows(bytes: &[u8]) -> (Vec<String>, Vec<Vec<String>>) {
    let mut r = csv::Reader::from_reader(bytes);
    let header = r.headers().unwrap().iter().map(String::from).collect();
    let rows = r.records().map(|rec| rec.unwrap().iter().map(String::from).collect()).collect();
    (header, rows)
}

#[test]
fn output_file_is_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    for (fmt, cmd) in [("json", "suite"), ("csv", "suite"), ("csv", "remez")] {
        let mut files = Vec::new();
        for k in 0..2 {
            let path = dir.path().join(format!("{cmd}_{fmt}_{k}"));
            let p = path.to_str().unwrap();
            let out = match cmd {
                "suite" => spfkit(&["suite", "--id", "12", "--seed", "9", "--format", fmt, "--out", p]),
                _ => spfkit(&["remez", "--c", "0.3", "--n", "5", "--format", fmt, "--out", p]),
            };
            assert_eq!(out.status.code(), Some(0));
            assert!(out.stdout.is_empty());
            files.push(std::fs::read(&path).unwrap());
        }
        assert!(!files[0].is_empty());
        assert_eq!(files[0], files[1], "{cmd} {fmt}");
    }
}

#[test]
fn thread_count_does_not_change_output() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_spfkit"))
            .args(["suite", "--id", "6", "--format", "csv"])
            .env("SPFKIT_THREADS", threads)
            .output()
            .unwrap()
    };
    let one = run("1");
    let four = run("4");
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(run("0").status.code(), Some(2));
}

#[test]
fn exit_codes() {
    assert_eq!(spfkit(&["hsum", "--kind", "diff", "--n", "3"]).status.code(), Some(0));
    // usage errors
    assert_eq!(spfkit(&[]).status.code(), Some(2));
    assert_eq!(spfkit(&["remez", "--c", "0.3"]).status.code(), Some(2));
    assert_eq!(spfkit(&["suite"]).status.code(), Some(2));
    // precondition errors name the violated rule
    let out = spfkit(&["metrics", "--poles", "1,2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("positive imaginary part"));
    let out = spfkit(&["regdiff", "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("n >= 3"));
    // a singular moment problem is reported as a failed check, not an error
    let out = spfkit(&["prony", "--moments", "1,1,1,1"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], false);
    assert_eq!(v["result"]["regular"], false);
}

#[test]
fn json_shape() {
    let v = json(&["pade", "--coeffs", "1,1,0.5,0.16666666666666666,0.041666666666666664", "--n", "3"]);
    assert_eq!(v["command"], "pade");
    assert_eq!(v["inputs"]["n"], 3);
    assert_eq!(v["inputs"]["seed"], 42);
    assert_eq!(v["passed"], true);
    let poles = v["result"]["poles"].as_array().unwrap();
    assert_eq!(poles.len(), 3);
    assert!(poles.iter().all(|p| p.as_array().unwrap().len() == 2));
    let names: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["contact", "exp_construction_agrees"]);

    let v = json(&["remez", "--c", "0.3", "--n", "4"]);
    let dev = v["result"]["deviation"].as_f64().unwrap();
    let b = v["result"]["bounds"].as_array().unwrap();
    assert!(b[0].as_f64().unwrap() <= dev && dev <= b[1].as_f64().unwrap());
    assert_eq!(v["result"]["alternance"].as_array().unwrap().len(), 5);
}

#[test]
fn csv_rows_carry_inputs() {
    let out = spfkit(&["extremal", "--omega", "16", "--n", "4", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let (header, rows) = csv_rows(&out.stdout);
    assert_eq!(header, ["delta", "n", "omega", "seed", "entry", "index", "re", "im"]);
    let poles: Vec<_> = rows.iter().filter(|r| r[4] == "pole").collect();
    assert_eq!(poles.len(), 4);
    for r in &rows {
        assert_eq!(&r[..4], ["null", "4", "16.0", "42"]);
        r[6].parse::<f64>().unwrap();
        r[7].parse::<f64>().unwrap();
    }

    let out = spfkit(&["suite", "--all", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let (header, rows) = csv_rows(&out.stdout);
    assert_eq!(header, ["all", "id", "seed", "criterion", "name", "passed", "detail"]);
    assert_eq!(rows.len(), 14);
    assert!(rows.iter().all(|r| r[5] == "true"));
}

fn write(path: &Path, text: &str) {
    std::fs::write(path, text).unwrap();
}

#[test]
fn config_file_and_overrides() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.json");
    write(&cfg, r#"{"command": "regextrap", "a": 2.0, "n": 3, "format": "csv", "seed": 5}"#);
    let out = spfkit(&["--config", cfg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let (header, rows) = csv_rows(&out.stdout);
    assert_eq!(&header[..4], ["a", "n", "p", "seed"]);
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0][3], "5");

    // flags on the command line win over the file
    let v = json(&["--config", cfg.to_str().unwrap(), "--format", "json", "--seed", "8"]);
    assert_eq!(v["command"], "regextrap");
    assert_eq!(v["inputs"]["seed"], 8);
    assert_eq!(v["inputs"]["p"], 1.0);

    let v = json(&["--config", cfg.to_str().unwrap(), "--format", "json", "hsum", "--kind", "int", "--n", "2"]);
    assert_eq!(v["command"], "hsum");

    write(&cfg, r#"{"command": "const", "c": "0.25", "n": 6}"#);
    let v = json(&["--config", cfg.to_str().unwrap()]);
    assert_eq!(v["command"], "const");
    assert_eq!(v["checks"].as_array().unwrap().len(), 3);

    write(&cfg, r#"{"command": "remez", "c": 0.3}"#);
    assert_eq!(spfkit(&["--config", cfg.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn series_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("f.json");
    // -sum z^m = 1/(z - 1), a one-term fraction with pole 1
    write(&f, r#"{"coeffs": [-1, -1, [-1, 0], "-1"]}"#);
    let v = json(&["pade", "--f", f.to_str().unwrap(), "--n", "1"]);
    let p = &v["result"]["poles"][0];
    assert!((p[0].as_f64().unwrap() - 1.0).abs() < 1e-12);
    assert!(p[1].as_f64().unwrap().abs() < 1e-12);
    assert_eq!(spfkit(&["pade", "--n", "1"]).status.code(), Some(2));
}
