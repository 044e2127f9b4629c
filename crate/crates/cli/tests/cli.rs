//! End-to-end runs of the `hlkostka` binary.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hlkostka"))
        .args(args)
        .env_remove("KOSTKA_CACHE")
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn table_lists_every_pair_of_the_order() {
    let v = stdout_json(&run(&["table", "--n", "2", "--r", "2"]));
    assert_eq!(v["order"].as_array().unwrap().len(), 5);
    assert_eq!(v["sign"], "minus");
    assert_eq!(v["method"], "solve");
    // Five diagonal ones plus nine nonzero entries below the diagonal.
    assert_eq!(v["entries"].as_array().unwrap().len(), 14);
}

#[test]
fn one_box_partition_function_table() {
    let out = run(&[
        "table", "--n", "1", "--r", "2", "--method", "pf", "--sign", "minus", "--format", "csv",
    ]);
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "lambda,mu,poly\n\"([1],[])\",\"([1],[])\",1\n\"([1],[])\",\"([],[1])\",t1\n\"([],[1])\",\"([],[1])\",1\n"
    );
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["table", "--n", "0", "--r", "2"][..],
        &["table", "--n", "9", "--r", "2"],
        &[
            "table", "--n", "2", "--r", "2", "--method", "pf", "--m", "1",
        ],
        &["table", "--n", "2", "--r", "2", "--params", "t3=t"],
        &["table", "--n", "2", "--r", "2", "--bogus"],
        &["verify", "--suite", "nonsense"],
        &["specialize", "--input", "/nonexistent/table.json"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn csv_and_json_agree() {
    let base = ["table", "--n", "3", "--r", "2", "--sign", "plus"];
    let v = stdout_json(&run(&base));
    let csv_out = run(&[&base[..], &["--format", "csv"]].concat());
    let mut rdr = csv::Reader::from_reader(&csv_out.stdout[..]);
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(rows.len(), entries.len());
    for (row, e) in rows.iter().zip(entries) {
        assert_eq!(row[0], *e["lambda"].as_str().unwrap());
        assert_eq!(row[1], *e["mu"].as_str().unwrap());
    }
}

#[test]
fn methods_produce_the_same_entries() {
    let strip = |mut v: serde_json::Value| {
        v.as_object_mut().unwrap().remove("method");
        v
    };
    let get = |m: &str| {
        strip(stdout_json(&run(&[
            "table", "--n", "3", "--r", "3", "--method", m,
        ])))
    };
    let solve = get("solve");
    assert_eq!(solve, get("pf"));
    assert_eq!(solve, get("gram-schmidt"));
    assert_eq!(solve, get("raising"));
}

#[test]
fn identity_specialization_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.json");
    let out = run(&[
        "table",
        "--n",
        "3",
        "--r",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let again = run(&["specialize", "--input", path.to_str().unwrap()]);
    assert!(again.status.success());
    assert_eq!(again.stdout, std::fs::read(&path).unwrap());
}

#[test]
fn specialization_matches_computing_from_scratch() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.json");
    let p = path.to_str().unwrap();
    assert!(run(&["table", "--n", "3", "--r", "3", "--out", p])
        .status
        .success());
    let mut spec = stdout_json(&run(&[
        "specialize",
        "--input",
        p,
        "--params",
        "t1=t,t2=t,t3=t",
    ]));
    assert_eq!(spec["provenance"]["assignment"], "t1=t,t2=t,t3=t");
    spec.as_object_mut().unwrap().remove("provenance");
    let direct = stdout_json(&run(&[
        "table",
        "--n",
        "3",
        "--r",
        "3",
        "--params",
        "t1=t,t2=t,t3=t",
    ]));
    assert_eq!(spec, direct);
}

#[test]
fn jobs_do_not_change_the_output() {
    let args = ["table", "--n", "3", "--r", "3", "--method", "pf"];
    let one = run(&[&args[..], &["--jobs", "1"]].concat());
    let eight = run(&[&args[..], &["--jobs", "8"]].concat());
    assert!(one.status.success());
    assert_eq!(one.stdout, eight.stdout);
}

#[test]
fn cache_and_config_file() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.toml");
    std::fs::write(&cfg, "n = 2\nr = 2\nsign = \"plus\"\nformat = \"csv\"\n").unwrap();
    let cache = dir.path().join("cache");
    let args = [
        "table",
        "--config",
        cfg.to_str().unwrap(),
        "--format",
        "json",
        "--cache-dir",
        cache.to_str().unwrap(),
    ];
    let first = run(&args);
    let v = stdout_json(&first);
    assert_eq!(v["sign"], "plus");
    assert_eq!(std::fs::read_dir(&cache).unwrap().count(), 1);
    let second = run(&args);
    assert!(String::from_utf8_lossy(&second.stderr).contains("cached"));
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn verify_reports_and_exits_cleanly() {
    let out = run(&["verify", "--suite", "kostka-threeway", "--n-max", "2"]);
    let v = stdout_json(&out);
    assert_eq!(v["passed"], true);
    assert!(v["outcomes"]
        .as_array()
        .unwrap()
        .iter()
        .all(|o| o["passed"] == true));
    // Expected failures are reported without failing the run.
    let out = run(&["verify", "--suite", "j0", "--n-max", "2"]);
    let v = stdout_json(&out);
    assert_eq!(v["outcomes"][0]["passed"], false);
    assert_eq!(v["outcomes"][0]["expected_failure"], true);
}

#[test]
fn reduce_drops_leading_empty_components() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.json");
    let p = path.to_str().unwrap();
    assert!(run(&["table", "--n", "2", "--r", "3", "--out", p])
        .status
        .success());
    let v = stdout_json(&run(&["specialize", "--input", p, "--reduce", "1"]));
    assert_eq!(v["r"], 2);
    assert_eq!(v["order"].as_array().unwrap().len(), 5);
    assert_eq!(
        v["provenance"]["parameter_images"],
        serde_json::json!(["t2", "t1*t3"])
    );
}
