//! Acceptance run: one PASS/FAIL line per criterion, at the exact ranges.
//!
//! Checks that are known not to hold in general are printed as FAIL with the
//! first counterexample and do not fail the run; every other check must pass.
//! The target has no test harness so the report is always printed.

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use hlkostka::verify::{self, Outcome};

const SEED: u64 = 2024;

struct Report {
    unexpected: Vec<String>,
}

impl Report {
    fn line(&mut self, criterion: usize, outcomes: &[Outcome]) {
        let ok = outcomes.iter().all(|o| o.passed);
        println!(
            "criterion {criterion:>2}: {}",
            if ok { "PASS" } else { "FAIL" }
        );
        for o in outcomes {
            println!("    {o}");
            if !o.passed && !o.expected_failure {
                self.unexpected
                    .push(format!("criterion {criterion}: {}", o.check));
            }
        }
    }
}

fn timed<T>(limit: Duration, what: &str, f: impl FnOnce() -> T) -> (T, Outcome) {
    let start = Instant::now();
    let value = f();
    let elapsed = start.elapsed();
    let mut tally = verify::Tally::new(format!("{what} within {}s", limit.as_secs()));
    tally.record(elapsed <= limit, || format!("took {elapsed:?}"));
    (value, tally.finish())
}

/// Builds the command-line tool with the same profile and returns its path.
fn cli_binary() -> Result<PathBuf, String> {
    let cargo = std::env::var("CARGO").unwrap_or_else(|_| "cargo".into());
    let mut cmd = Command::new(cargo);
    cmd.args(["build", "-q", "-p", "hlkostka-cli", "--message-format=json"])
        .current_dir(env!("CARGO_MANIFEST_DIR"));
    if !cfg!(debug_assertions) {
        cmd.arg("--release");
    }
    let out = cmd.output().map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(String::from_utf8_lossy(&out.stderr).into_owned());
    }
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .filter_map(|l| serde_json::from_str::<serde_json::Value>(l).ok())
        .filter_map(|v| v.get("executable")?.as_str().map(PathBuf::from))
        .find(|p| p.file_stem().is_some_and(|s| s == "hlkostka"))
        .ok_or_else(|| "no hlkostka executable reported".into())
}

/// Runs the tool with one and with eight worker threads and compares bytes.
fn cli_determinism() -> Vec<Outcome> {
    let mut tally = verify::Tally::new("table output identical with --jobs 1 and --jobs 8");
    match cli_binary() {
        Err(e) => tally.record(false, || format!("cannot build the tool: {e}")),
        Ok(bin) => {
            for args in [
                ["--sign", "minus", "--method", "solve", "--r", "2"],
                ["--sign", "minus", "--method", "pf", "--r", "3"],
                ["--sign", "plus", "--method", "gram-schmidt", "--r", "2"],
                ["--sign", "plus", "--method", "pf", "--r", "2"],
            ] {
                let run = |jobs: &str| {
                    Command::new(&bin)
                        .args(["table", "--n", "3", "--jobs", jobs])
                        .args(args)
                        .output()
                        .expect("tool runs")
                };
                let (one, eight) = (run("1"), run("8"));
                tally.record(
                    one.status.success() && eight.status.success() && one.stdout == eight.stdout,
                    || format!("{args:?}"),
                );
            }
        }
    }
    vec![tally.finish()]
}

fn main() {
    let mut report = Report {
        unexpected: Vec::new(),
    };
    let limit = Duration::from_secs(300);

    let (threeway, time) = timed(limit, "three-way K- comparison", || {
        [2, 3].map(|r| verify::kostka_threeway(3, r).unwrap())
    });
    let mut c1: Vec<Outcome> = threeway.into();
    c1.push(time);
    report.line(1, &c1);

    report.line(
        2,
        &[2, 3].map(|r| verify::kostka_plus_twoway(3, r).unwrap()),
    );
    report.line(3, &[verify::classical_reduction(5).unwrap()]);
    report.line(4, &[verify::specialization_square(3, 3).unwrap()]);
    report.line(5, &[verify::cross_r_reduction(4, 3).unwrap()]);
    report.line(6, &[verify::positivity(4, 3).unwrap()]);
    report.line(
        7,
        &[
            verify::degree_minus(3, 3).unwrap(),
            verify::degree_plus_bound(3, 3).unwrap(),
        ],
    );
    report.line(8, &[verify::stability(20, 3, 2, SEED).unwrap()]);
    report.line(
        9,
        &[
            verify::cauchy(2, 2).unwrap(),
            verify::duality(3, 2).unwrap(),
            verify::triangularity(3, 3).unwrap(),
            verify::closed_diagonal(3, 2).unwrap(),
            verify::schur_at_zero(3, 3).unwrap(),
            verify::j0_normalisation(3, 2).unwrap(),
        ],
    );
    report.line(10, &[verify::lemma_identities(50, &[2, 3], SEED).unwrap()]);
    report.line(11, &cli_determinism());

    if !report.unexpected.is_empty() {
        eprintln!("unexpected failures: {:?}", report.unexpected);
        std::process::exit(1);
    }
}
