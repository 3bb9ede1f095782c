use std::process::Command;

use serde_json::Value;

use schubert::cohomology::{product, CohomologyClass};
use schubert_cli::{run, CommandResult};

fn call(args: &[&str]) -> CommandResult {
    run(std::iter::once("schubert").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Value {
    let r = call(args);
    assert_eq!(r.exit_code, 0, "{:?}", r.diagnostics);
    serde_json::from_str(&r.payload).unwrap()
}

#[test]
fn witness_figure() {
    let v = json(&[
        "witness", "-k", "5", "-n", "12", "--a", "3,2,1", "--b", "2,2,1", "--render",
    ]);
    assert_eq!(v["figure"], ":::11/::22/:3");
    assert_eq!(v["case"], "SIMPLE");
    assert_eq!(v["coefficient"], 1);
    let v = json(&[
        "witness", "-k", "10", "-n", "21", "--a", "8,3,1", "--b", "4,4,1",
    ]);
    assert_eq!(v["case"], "MARKING");
    assert_eq!(v["c"], serde_json::json!([11, 7, 3]));
}

#[test]
fn ed_and_products() {
    let v = json(&["ed", "-k", "1", "-n", "3"]);
    assert_eq!(v["ed"], 3);
    assert!(v.get("elapsed_ms").is_none());
    assert!(json(&["ed", "-k", "1", "-n", "3", "--timing"])
        .get("elapsed_ms")
        .is_some());

    let v = json(&["product", "-k", "2", "-n", "5", "--a", "1,1,1", "--b", "3"]);
    let zero: CohomologyClass = serde_json::from_value(v).unwrap();
    assert!(zero.is_zero());
    assert_eq!(zero.degree(), 6);

    let v = json(&["product", "-k", "1", "-n", "3", "--a", "1", "--b", "1"]);
    let c: CohomologyClass = serde_json::from_value(v).unwrap();
    assert_eq!(c.to_string(), "s(2) + s(1,1)");
}

#[test]
fn lr_subcommand() {
    let v = json(&[
        "lr", "--outer", "3,2,1", "--inner", "2,1", "--weight", "2,1",
    ]);
    assert_eq!(v["count"], 2);
    assert_eq!(v["tableaux"].as_array().unwrap().len(), 2);
    let v = json(&[
        "lr",
        "--outer",
        "2,1",
        "--inner",
        "1",
        "--weight",
        "1,1",
        "--count-only",
    ]);
    assert_eq!(v["count"], 1);
    assert!(v.get("tableaux").is_none());
}

#[test]
fn gd_witness_round_trips() {
    let v = json(&[
        "gd-witness",
        "-k",
        "1",
        "-n",
        "3",
        "--degree-sum",
        "3",
        "--coeff-bound",
        "1",
        "--support",
        "2",
    ]);
    assert_eq!(v["found"], true);
    let x: CohomologyClass = serde_json::from_value(v["witness"]["x"].clone()).unwrap();
    let y: CohomologyClass = serde_json::from_value(v["witness"]["y"].clone()).unwrap();
    assert!(product(&x, &y).unwrap().is_zero());
    let v = json(&[
        "gd-witness",
        "-k",
        "0",
        "-n",
        "3",
        "--degree-sum",
        "3",
        "--coeff-bound",
        "2",
        "--support",
        "1",
    ]);
    assert_eq!(v["found"], false);
    assert!(v["witness"].is_null());
}

#[test]
fn tango_search_and_budget() {
    let v = json(&[
        "tango-search",
        "-k",
        "1",
        "-n",
        "4",
        "-l",
        "0",
        "-m",
        "3",
        "--coeff-bound",
        "2",
    ]);
    assert_eq!(v["complete"], true);
    assert_eq!(v["systems"].as_array().unwrap().len(), 1);
    assert_eq!(v["systems"][0]["trivial"], true);

    let r = call(&[
        "tango-search",
        "-k",
        "1",
        "-n",
        "3",
        "-l",
        "1",
        "-m",
        "3",
        "--coeff-bound",
        "1",
        "--budget",
        "3",
    ]);
    assert_eq!(r.exit_code, 1);
    assert!(r.diagnostics[0].starts_with("error[SearchBudgetExceeded]"));
    let partial: Value = serde_json::from_str(&r.payload).unwrap();
    assert_eq!(partial["complete"], false);
}

#[test]
fn table_rows() {
    let v = json(&["table", "--max-n", "4"]);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 4 + 3);
    for r in rows {
        assert_eq!(r["ed"], r["ed_expected"]);
    }
    assert_eq!(rows[0]["variety"], "P^1");
    assert!(rows
        .iter()
        .filter(|r| r["k"] == 0)
        .all(|r| r["zero_divisor_degree_sum"].is_null()));
    let g13 = rows.iter().find(|r| r["variety"] == "G(1,3)").unwrap();
    assert_eq!(g13["zero_divisor_degree_sum"], 3);
    assert_eq!(v["theorem"].as_array().unwrap().len(), 10);
}

#[test]
fn exit_codes() {
    assert_eq!(call(&["--help"]).exit_code, 0);
    assert!(!call(&["--help"]).payload.is_empty());
    assert_eq!(call(&["--version"]).exit_code, 0);

    for bad in [
        &["ed", "-k", "1"][..],
        &["frobnicate"],
        &["product", "-k", "1", "-n", "3", "--a", "x"],
    ] {
        let r = call(bad);
        assert_eq!(r.exit_code, 2, "{bad:?}");
        assert!(r.payload.is_empty());
    }

    let cases: [(&[&str], &str); 5] = [
        (&["ed", "-k", "3", "-n", "3"], "ContextError"),
        (
            &["product", "-k", "1", "-n", "3", "--a", "3", "--b", "1"],
            "BoxError",
        ),
        (
            &["product", "-k", "1", "-n", "3", "--a", "1,2", "--b", "1"],
            "PartitionError",
        ),
        (&["lr", "--outer", "2", "--inner", "3"], "ContainmentError"),
        (
            &["witness", "-k", "1", "-n", "3", "--a", "2,1", "--b", "2,1"],
            "PreconditionError",
        ),
    ];
    for (args, name) in cases {
        let r = call(args);
        assert_eq!(r.exit_code, 1, "{args:?}");
        assert!(
            r.diagnostics[0].starts_with(&format!("error[{name}]")),
            "{:?}",
            r.diagnostics
        );
    }
}

#[test]
fn output_is_reproducible() {
    let args = [
        "witness", "-k", "10", "-n", "21", "--a", "8,3,1", "--b", "4,4,1", "--render",
    ];
    assert_eq!(call(&args).payload, call(&args).payload);
    let args = ["ed", "-k", "2", "-n", "6"];
    assert_eq!(call(&args).payload, call(&args).payload);
}

#[test]
fn binary_writes_stdout_and_out_file() {
    let bin = env!("CARGO_BIN_EXE_schubert");
    let out = Command::new(bin)
        .args(["ed", "-k", "1", "-n", "4"])
        .env("SCHUBERT_THREADS", "2")
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["ed"], 4);

    let path = std::env::temp_dir().join(format!("schubert-cli-{}.json", std::process::id()));
    let out = Command::new(bin)
        .args([
            "product", "-k", "1", "-n", "3", "--a", "1", "--b", "1", "--out",
        ])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(written["degree"], 2);
    std::fs::remove_file(&path).unwrap();

    let out = Command::new(bin)
        .args(["ed", "-k", "5", "-n", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error[ContextError]"));
    let out = Command::new(bin).arg("nope").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
