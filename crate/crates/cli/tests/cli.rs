//! End-to-end tests of the `indtopo` binary: every JSON output is checked
//! against its shipped schema (a light structural validator: types,
//! required keys, enums, items), and exit codes follow the documented
//! contract (0 ok, 1 fail, 2 usage/certificate, 3 budget).

use serde_json::Value;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_indtopo"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

fn schema(name: &str) -> Value {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("schemas")
        .join(name);
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

/// Structural validation: `type`, `required`, `properties`,
/// `additionalProperties` (schema-valued), `items`, `enum`, `minItems`,
/// `maxItems`. Enough to catch output drift against the shipped schemas.
fn validate(value: &Value, schema: &Value, at: &str) -> Result<(), String> {
    if let Some(ty) = schema.get("type").and_then(Value::as_str) {
        let ok = match ty {
            "object" => value.is_object(),
            "array" => value.is_array(),
            "string" => value.is_string(),
            "integer" => value.is_i64() || value.is_u64(),
            "boolean" => value.is_boolean(),
            other => return Err(format!("{at}: unsupported schema type {other}")),
        };
        if !ok {
            return Err(format!("{at}: expected {ty}, got {value}"));
        }
    }
    if let Some(allowed) = schema.get("enum").and_then(Value::as_array) {
        if !allowed.contains(value) {
            return Err(format!("{at}: {value} not in {allowed:?}"));
        }
    }
    if let Some(obj) = value.as_object() {
        for req in schema
            .get("required")
            .and_then(Value::as_array)
            .into_iter()
            .flatten()
        {
            let key = req.as_str().unwrap();
            if !obj.contains_key(key) {
                return Err(format!("{at}: missing required key `{key}`"));
            }
        }
        let props = schema.get("properties").and_then(Value::as_object);
        let additional = schema.get("additionalProperties");
        for (key, sub) in obj {
            if let Some(sub_schema) = props.and_then(|p| p.get(key)) {
                validate(sub, sub_schema, &format!("{at}.{key}"))?;
            } else if let Some(extra) = additional {
                if extra.is_object() {
                    validate(sub, extra, &format!("{at}.{key}"))?;
                }
            }
        }
    }
    if let Some(arr) = value.as_array() {
        if let Some(items) = schema.get("items") {
            for (i, item) in arr.iter().enumerate() {
                validate(item, items, &format!("{at}[{i}]"))?;
            }
        }
    }
    Ok(())
}

fn assert_schema(value: &Value, schema_name: &str) {
    let s = schema(schema_name);
    if let Err(e) = validate(value, &s, "$") {
        panic!("schema {schema_name} violated: {e}\nvalue: {value:#}");
    }
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("indtopo-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn gen_and_homology_pipeline() {
    let c5 = tmp("c5.graph");
    let out = run(&["gen", "cycle", "--n", "5", "--out", c5.to_str().unwrap()]);
    assert!(out.status.success());

    let out = run(&["homology", c5.to_str().unwrap()]);
    let sig = stdout_json(&out);
    assert_schema(&sig, "signature.schema.json");
    assert_eq!(sig["betti"]["1"], 1);

    // 14-vertex power with 28 edges round-trips through the text format
    let c14 = tmp("c14.graph");
    run(&[
        "gen",
        "cycle-power",
        "--n",
        "14",
        "--r",
        "2",
        "--out",
        c14.to_str().unwrap(),
    ]);
    let text = std::fs::read_to_string(&c14).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("e ")).count(), 28);

    let c12 = tmp("c12.graph");
    run(&["gen", "cycle", "--n", "12", "--out", c12.to_str().unwrap()]);
    let sig = stdout_json(&run(&["homology", c12.to_str().unwrap()]));
    assert_eq!(sig["betti"]["3"], 2);

    // the empty graph is the (-1)-sphere
    let empty = tmp("empty.graph");
    run(&[
        "gen",
        "path-power",
        "--n",
        "0",
        "--r",
        "3",
        "--out",
        empty.to_str().unwrap(),
    ]);
    let sig = stdout_json(&run(&["homology", empty.to_str().unwrap()]));
    assert_eq!(sig["betti"]["-1"], 1);

    // JSON graph form is accepted as input too
    let j = tmp("c5.json");
    run(&[
        "gen",
        "cycle",
        "--n",
        "5",
        "--json",
        "--out",
        j.to_str().unwrap(),
    ]);
    let sig = stdout_json(&run(&["homology", j.to_str().unwrap()]));
    assert_eq!(sig["betti"]["1"], 1);
}

#[test]
fn gen_cylinder_and_subdivision() {
    let out = run(&["gen", "cylinder", "--m", "4", "--k", "5"]);
    let text = String::from_utf8_lossy(&out.stdout).to_string();
    assert!(text.starts_with("n 20\n"));

    let out = run(&["gen", "subdiv3-all", "--base", "cycle", "--n", "3"]);
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("n 9\n"));

    // missing required parameter is a usage error
    let out = run(&["gen", "cylinder", "--m", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn predict_reports() {
    let out = run(&["predict", "cycle", "--n", "12", "--r", "1"]);
    let rep = stdout_json(&out);
    assert_schema(&rep, "predict.schema.json");
    assert_eq!(rep["expr"], "Wedge[2 x S^3]");
    assert_eq!(rep["betti"]["3"], 2);

    let out = run(&["predict", "path", "--n", "7", "--r", "2"]);
    let rep = stdout_json(&out);
    assert_schema(&rep, "predict.schema.json");
    assert_eq!(rep["expr"], "Wedge[3 x S^1]");

    let out = run(&[
        "predict", "cycle", "--n", "23", "--r", "2", "--expand", "partial",
    ]);
    let rep = stdout_json(&out);
    assert_schema(&rep, "predict.schema.json");
    assert_eq!(
        rep["expr"],
        "Wedge[Susp^2(Ind(C_14^2)), 4 x Susp^3(Ind(P_9^2)), 5 x Susp^3(Ind(P_8^2))]"
    );

    // cycles need n >= 3
    let out = run(&["predict", "cycle", "--n", "2", "--r", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_suites_and_exit_codes() {
    let out = run(&["verify", "kozlov", "--n-max", "8"]);
    let rep = stdout_json(&out);
    assert_schema(&rep, "suite-report.schema.json");
    assert_eq!(rep["failed"], 0);

    let out = run(&["verify", "reconcile", "--r-max", "4"]);
    let rep = stdout_json(&out);
    assert_schema(&rep, "suite-report.schema.json");

    let out = run(&["verify", "no-such-suite"]);
    assert_eq!(out.status.code(), Some(2));

    // determinism: same flags, same bytes
    let a = run(&[
        "verify", "chordal", "--count", "5", "--n-max", "6", "--seed", "3",
    ]);
    let b = run(&[
        "verify", "chordal", "--count", "5", "--n-max", "6", "--seed", "3",
    ]);
    assert!(a.status.success());
    let strip = |o: &Output| {
        let mut v: Value = serde_json::from_slice(&o.stdout).unwrap();
        for case in v["cases"].as_array_mut().unwrap() {
            case.as_object_mut().unwrap().remove("runtime_ms");
        }
        v
    };
    assert_eq!(strip(&a), strip(&b));
}

#[test]
fn script_runs_and_certificate_failures() {
    let c9 = tmp("c9.graph");
    run(&["gen", "cycle", "--n", "9", "--out", c9.to_str().unwrap()]);

    let zig = tmp("zigzag.iso");
    std::fs::write(&zig, "add(0,4)!2; del(0,1)!3; del(3,4)!1\n").unwrap();
    let out = run(&[
        "script",
        c9.to_str().unwrap(),
        zig.to_str().unwrap(),
        "--check-betti",
    ]);
    let rep = stdout_json(&out);
    assert_schema(&rep, "script-log.schema.json");
    assert_eq!(rep["steps"]["steps"].as_array().unwrap().len(), 3);
    assert_eq!(rep["betti_start"], rep["betti_end"]);

    let bad = tmp("bad.iso");
    std::fs::write(&bad, "del(0,1)!3; add(0,4)!2; del(3,4)!1\n").unwrap();
    let out = run(&["script", c9.to_str().unwrap(), bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let empty = tmp("empty.iso");
    std::fs::write(&empty, "# nothing\n").unwrap();
    let out = run(&["script", c9.to_str().unwrap(), empty.to_str().unwrap()]);
    assert!(out.status.success());

    let syntax = tmp("syntax.iso");
    std::fs::write(&syntax, "add(1,2)!!\n").unwrap();
    let out = run(&["script", c9.to_str().unwrap(), syntax.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cnr_commands() {
    let out = run(&["cnr", "log", "--n", "14", "--r", "2"]);
    let log = stdout_json(&out);
    assert_schema(&log, "cnr-log.schema.json");
    assert_eq!(log["edges"].as_array().unwrap().len(), 8);
    assert_eq!(log["edges"][7]["index_form"], serde_json::json!([-1, 10]));

    let out = run(&["cnr", "log", "--n", "13", "--r", "2"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["cnr", "reconcile", "--r-max", "5"]);
    assert!(out.status.success());

    let out = run(&["cnr", "model", "--n", "9", "--r", "1"]);
    let rep = stdout_json(&out);
    assert_eq!(rep["signatures_match"], true);

    let out = run(&["cnr", "lemma", "--r", "1"]);
    assert!(out.status.success());

    let out = run(&["cnr", "summands", "--r", "2"]);
    let text = String::from_utf8_lossy(&out.stdout).to_string();
    assert!(text.contains("totals by offset: {14: 4, 15: 5}"));
}

#[test]
fn budget_exit_code() {
    let c12 = tmp("c12b.graph");
    run(&["gen", "cycle", "--n", "12", "--out", c12.to_str().unwrap()]);
    let out = run(&["homology", c12.to_str().unwrap(), "--budget-faces", "10"]);
    assert_eq!(out.status.code(), Some(3));

    // environment variable is honored, flag wins over it
    let out = bin()
        .args(["homology", c12.to_str().unwrap()])
        .env("INDTOPO_BUDGET_FACES", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let out = bin()
        .args([
            "homology",
            c12.to_str().unwrap(),
            "--budget-faces",
            "100000",
        ])
        .env("INDTOPO_BUDGET_FACES", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn faces_export() {
    let c4 = tmp("c4.graph");
    run(&["gen", "cycle", "--n", "4", "--out", c4.to_str().unwrap()]);
    let faces = tmp("c4.faces");
    let out = run(&[
        "homology",
        c4.to_str().unwrap(),
        "--write-faces",
        faces.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(
        std::fs::read_to_string(&faces).unwrap(),
        "0\n1\n2\n3\n0 2\n1 3\n"
    );
}
