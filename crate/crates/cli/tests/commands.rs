use std::process::{Command, Output};

use rootloci::partition::{partitions, Partition};
use rootloci_cli::record::{run_tp, MethodChoice, TpRecord};

fn rootloci(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rootloci"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn line_value(text: &str, key: &str) -> String {
    text.lines()
        .find_map(|l| l.strip_prefix(&format!("{key}: ")))
        .unwrap_or_else(|| panic!("no {key} line in {text}"))
        .to_string()
}

#[test]
fn tp_text_examples() {
    for (lambda, tp, degree) in [
        ("2,1", "6*c1", "4"),
        ("1^3 3", "120*c1^2 - 48*c2", "12"),
        ("1,1,1", "1", "1"),
    ] {
        let out = rootloci(&["tp", "--lambda", lambda]);
        assert!(out.status.success());
        let text = stdout(&out);
        assert_eq!(line_value(&text, "tp"), tp);
        assert_eq!(line_value(&text, "degree"), degree);
    }
}

#[test]
fn tp_json_schema() {
    let out = rootloci(&["tp", "--lambda", "3,1,1,1", "--format", "json"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out).trim_end(),
        r#"{"d":6,"lambda":[3,1,1,1],"codim":2,"tp":[["120",2,0],["-48",0,1]],"degree":12,"methods":["reduce","naive","sum"]}"#
    );
}

#[test]
fn single_method_is_reported() {
    let out = rootloci(&[
        "tp", "--lambda", "3", "--method", "naive", "--format", "json",
    ]);
    let rec: TpRecord = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(rec.methods, vec!["naive"]);
    assert_eq!(
        rec.tp,
        vec![("6".to_string(), 2, 0), ("3".to_string(), 0, 1)]
    );
}

#[test]
fn json_round_trip_is_byte_identical() {
    for d in 1..=7 {
        for lambda in partitions(d) {
            let json = run_tp(&lambda, MethodChoice::Reduce).unwrap().to_json();
            let parsed: TpRecord = serde_json::from_str(&json).unwrap();
            assert_eq!(parsed.to_json(), json);
            assert!(parsed.tp.iter().all(|(_, i, j)| i + 2 * j == parsed.codim));
            assert_eq!(
                parsed.polynomial().unwrap(),
                rootloci::thom::tp_reduce(&lambda).unwrap().value
            );
        }
    }
}

#[test]
fn degree_command() {
    let out = rootloci(&["degree", "--lambda", "1^2 2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "6");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["tp", "--lambda", "0,2"][..],
        &["tp", "--lambda", ""],
        &["tp", "--lambda", "1^x 2"],
        &["tp"],
        &["tp", "--lambda", "2", "--method", "fast"],
        &["moduli", "--d", "7", "--space", "link"],
        &["moduli", "--d", "5", "--space", "stable"],
        &["moduli", "--d", "2", "--space", "ss"],
        &["table", "--d", "0"],
        &["frobnicate"],
    ] {
        assert_eq!(rootloci(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn table_counts_order_and_degrees() {
    let out = rootloci(&["table", "--d", "3", "--format", "json"]);
    let records: Vec<TpRecord> = stdout(&out)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    let lambdas: Vec<Vec<usize>> = records.iter().map(|r| r.lambda.clone()).collect();
    assert_eq!(lambdas, vec![vec![3], vec![2, 1], vec![1, 1, 1]]);

    let out = rootloci(&["table", "--d", "5", "--format", "json"]);
    let records: Vec<TpRecord> = stdout(&out)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(records.len(), 7);
    for r in records {
        let lambda = Partition::from_parts(&r.lambda).unwrap();
        assert_eq!(r.degree.to_string(), lambda.hilbert_degree().to_string());
    }

    let text = stdout(&rootloci(&["table", "--d", "5"]));
    assert_eq!(text.lines().count(), 8);
}

#[test]
fn moduli_examples() {
    let out = rootloci(&["moduli", "--d", "5", "--space", "ss", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    let series: Vec<u64> = serde_json::from_value(v["series"].clone()).unwrap();
    assert_eq!(&series[..4], &[1, 1, 1, 0]);
    assert!(series[3..].iter().all(|&b| b == 0));
    assert_eq!(v["relations"].as_array().unwrap().len(), 2);
    assert_eq!(v["series_verified"], true);

    let text = stdout(&rootloci(&["moduli", "--d", "6", "--space", "stable"]));
    assert!(line_value(&text, "series").starts_with("1,1,1,0"));
    assert!(text.contains("120*c1^2 - 48*c2"));

    let text = stdout(&rootloci(&["moduli", "--d", "6", "--space", "link"]));
    assert_eq!(line_value(&text, "betti degrees"), "0,5");
    let text = stdout(&rootloci(&["moduli", "--d", "8", "--space", "link"]));
    assert_eq!(line_value(&text, "betti degrees"), "0,4,5,9");

    let text = stdout(&rootloci(&[
        "moduli",
        "--d",
        "6",
        "--space",
        "ss-quotient",
        "--bound",
        "6",
    ]));
    assert_eq!(line_value(&text, "series"), "1,1,1,1,0,0,0");
    assert!(text.contains("structure: "));
}

fn summary(out: &Output) -> serde_json::Value {
    let text = stdout(out);
    serde_json::from_str(text.lines().last().unwrap()).unwrap()
}

#[test]
fn verify_tp_suite_small() {
    let out = rootloci(&["verify", "--max-d", "6", "--suite", "tp", "--jobs", "2"]);
    assert!(out.status.success());
    let s = summary(&out);
    assert_eq!(s["partitions"], 29);
    assert_eq!(s["failed"], 0);
    assert_eq!(s["by_check"]["three-way"], serde_json::json!([29, 29]));
    assert_eq!(s["by_check"]["degree"], serde_json::json!([29, 29]));
}

#[test]
fn verify_minimal_run() {
    let out = rootloci(&["verify", "--max-d", "2"]);
    assert!(out.status.success());
    let s = summary(&out);
    assert_eq!(s["by_check"]["spot"], serde_json::json!([1, 1]));
    assert_eq!(s["partitions"], 3);
}

#[test]
fn verify_moduli_suite_small() {
    let out = rootloci(&["verify", "--max-d", "6", "--suite", "moduli"]);
    assert!(out.status.success(), "{}", stdout(&out));
    let s = summary(&out);
    assert_eq!(s["failed"], 0);
    for check in [
        "ss-series",
        "stable-series",
        "ss-quotient-series",
        "non-membership",
        "link",
        "gcd",
    ] {
        assert!(s["by_check"][check][0].as_u64().unwrap() > 0, "{check}");
    }
}

#[test]
fn large_d_warns() {
    let out = rootloci(&["degree", "--lambda", "11"]);
    assert!(out.status.success());
    assert!(String::from_utf8(out.stderr).unwrap().contains("warning"));
}
