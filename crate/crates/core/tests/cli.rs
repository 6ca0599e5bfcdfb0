use std::process::{Command, Output};

use colorseq::{Count, DistributionTable};
use serde_json::Value;

fn colorseq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_colorseq")).args(args).output().expect("run colorseq")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = colorseq(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["schema_version"], 1);
    v
}

#[test]
fn documented_examples() {
    let o = colorseq(&["problem1", "--k", "5", "--n", "3", "--m", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "120\n");

    let o = colorseq(&["z", "--k", "7", "--n", "2", "--m", "1", "--lambda", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0\n");

    let o = colorseq(&["verify", "--k", "5", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("k=5 n=3: PASS"));
}

#[test]
fn exit_codes() {
    assert_eq!(colorseq(&["z", "--k", "-1", "--n", "2", "--m", "0", "--lambda", "0"]).status.code(), Some(1));
    assert_eq!(colorseq(&["problem2", "--n", "2"]).status.code(), Some(1));
    assert_eq!(colorseq(&["verify", "--k", "9", "--n", "9"]).status.code(), Some(3));
    assert_eq!(colorseq(&["verify", "--k", "3", "--n", "3", "--budget", "26"]).status.code(), Some(3));
    assert_eq!(colorseq(&["verify", "--k", "3", "--n", "3", "--budget", "27"]).status.code(), Some(0));
}

#[test]
fn large_counts_print_in_full() {
    let o = colorseq(&["z", "--k", "60", "--n", "40", "--m", "40", "--lambda", "10"]);
    let printed = stdout(&o);
    let digits = printed.trim();
    assert!(digits.len() > 20 && digits.bytes().all(|b| b.is_ascii_digit()), "{printed}");

    let v = json(&["z", "--k", "60", "--n", "40", "--m", "40", "--lambda", "10", "--format", "json"]);
    assert_eq!(v["result"].as_str().unwrap(), digits);
}

#[test]
fn json_round_trips() {
    let scalars: [(&[&str], &str); 6] = [
        (&["z", "--k", "5", "--n", "3", "--m", "4", "--lambda", "1"], "30"),
        (&["s", "--m", "4", "--lambda", "2"], "6"),
        (&["problem1", "--k", "5", "--n", "3", "--m", "4"], "120"),
        (&["problem2", "--n", "2", "--m", "2"], "8"),
        (&["problem3", "--k", "3", "--n", "2", "--mu", "1"], "6"),
        (&["problem4", "--n", "3", "--mu", "0"], "15"),
    ];
    for (args, expected) in scalars {
        let mut full = args.to_vec();
        full.extend(["--format", "json"]);
        let v = json(&full);
        assert_eq!(v["query"]["command"], args[0]);
        let count: Count = serde_json::from_value(v["result"].clone()).unwrap();
        assert_eq!(count.to_string(), expected);
    }

    let v = json(&["table", "--k", "5", "--n", "3", "--format", "json"]);
    let table: DistributionTable = serde_json::from_value(v["result"].clone()).unwrap();
    assert_eq!(table, colorseq::distribution_table(5, 3));

    let v = json(&["verify", "--k", "4", "--n", "3", "--format", "json", "--no-timing"]);
    assert_eq!(v["result"]["passed"], true);
    assert!(v["result"].get("elapsed_ms").is_none());
    let report: colorseq::oracle::VerificationReport = serde_json::from_value(v["result"].clone()).unwrap();
    assert!(report.mismatches.is_empty());

    let v = json(&["verify", "--k", "4", "--n", "3", "--format", "json"]);
    assert!(v["result"]["elapsed_ms"].is_u64());

    let v = json(&["verify-range", "--max-k", "3", "--max-n", "3", "--format", "json", "--no-timing"]);
    assert_eq!(v["query"]["command"], "verify-range");
    assert_eq!(v["result"]["reports"].as_array().unwrap().len(), 16);
}

#[test]
fn deterministic_output() {
    let runs = [
        vec!["table", "--k", "7", "--n", "5"],
        vec!["table", "--k", "7", "--n", "5", "--format", "json"],
        vec!["verify", "--k", "6", "--n", "4", "--no-timing"],
        vec!["verify-range", "--max-k", "4", "--max-n", "4", "--format", "json", "--no-timing"],
    ];
    for args in runs {
        let a = colorseq(&args);
        let b = colorseq(&args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn tsv_table_layout() {
    let out = stdout(&colorseq(&["table", "--k", "5", "--n", "3"]));
    let (cells, repeats) = out.split_once("\n\n").unwrap();
    let mut lines = cells.lines();
    assert_eq!(lines.next(), Some("m\tlambda\tcount"));
    let rows: Vec<(u64, u64)> = lines
        .map(|l| {
            let f: Vec<&str> = l.split('\t').collect();
            (f[0].parse().unwrap(), f[1].parse().unwrap())
        })
        .collect();
    assert!(rows.windows(2).all(|w| w[0] < w[1]));
    assert!(cells.contains("\n4\t1\t30\n") && cells.contains("\n4\t2\t90"));
    assert!(repeats.starts_with("mu\tcount\n"));
}
