//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::process::ExitCode;
use std::time::Instant;

use qdirac::suites::{run_suite, Report, Suite};

const BUDGET_SECS: f64 = 60.0;

fn failed_checks(r: &Report) -> Vec<String> {
    r.checks
        .iter()
        .filter(|c| !c.passed)
        .map(|c| format!("{}: {}", c.name, c.detail))
        .collect()
}

fn criterion(n: usize, title: &str, suites: &[Suite]) -> bool {
    let start = Instant::now();
    let reports: Vec<Report> = suites.iter().map(|s| run_suite(*s, None)).collect();
    let secs = start.elapsed().as_secs_f64();
    let ok = reports.iter().all(|r| r.passed) && secs < BUDGET_SECS;
    let degrees: Vec<String> = reports
        .iter()
        .filter_map(|r| r.degree.map(|d| format!("{} ≤ {d}", r.suite)))
        .collect();
    println!(
        "{} criterion {n:>2}: {title}{} [{secs:.2}s]",
        if ok { "PASS" } else { "FAIL" },
        if degrees.is_empty() {
            String::new()
        } else {
            format!(" ({})", degrees.join(", "))
        },
    );
    for r in &reports {
        for f in failed_checks(r) {
            println!("     {} :: {f}", r.suite);
        }
    }
    ok
}

fn determinism() -> bool {
    let start = Instant::now();
    let unstable: Vec<&str> = Suite::ALL
        .iter()
        .filter(|s| run_suite(**s, None).to_json() != run_suite(**s, None).to_json())
        .map(|s| s.name())
        .collect();
    let ok = unstable.is_empty();
    println!(
        "{} criterion 10: JSON reports byte-identical across two runs ({} suites) [{:.2}s]",
        if ok { "PASS" } else { "FAIL" },
        Suite::ALL.len(),
        start.elapsed().as_secs_f64()
    );
    for s in unstable {
        println!("     {s} differs between runs");
    }
    ok
}

fn main() -> ExitCode {
    let results = [
        criterion(
            1,
            "w-algebra relations and central element",
            &[Suite::AqRelations],
        ),
        criterion(2, "power identity for N = 1..8", &[Suite::AqPowerIdentity]),
        criterion(
            3,
            "Serre-ideal oracle and recorded identities",
            &[Suite::SerreOracle],
        ),
        criterion(4, "PBW graded dimensions", &[Suite::Dims]),
        criterion(5, "star-action table and mirrors", &[Suite::StarTable]),
        criterion(
            6,
            "dual closed forms and box",
            &[Suite::DualClosedForms, Suite::Box],
        ),
        criterion(7, "Dirac factorization", &[Suite::DiracFactorization]),
        criterion(8, "intertwiner correspondence", &[Suite::DiracIntertwine]),
        criterion(9, "singular vector", &[Suite::SingularVector]),
        determinism(),
    ];
    let passed = results.iter().filter(|ok| **ok).count();
    println!("{passed}/{} criteria passed", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
