//! The ten acceptance criteria, each with its time budget. Prints one line
//! per criterion and fails if any check fails or runs over budget.

use std::time::{Duration, Instant};

use hyperell::extension::DegreeBound;
use hyperell::suites::{self, SuiteReport, DEFAULT_SEED};

struct Criterion {
    number: usize,
    name: &'static str,
    budget: Duration,
    run: fn() -> SuiteReport,
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn criteria() -> Vec<Criterion> {
    vec![
        Criterion {
            number: 1,
            name: "columns of A vanish under Phi0",
            budget: secs(1),
            run: suites::presentation_suite,
        },
        Criterion {
            number: 2,
            name: "extended branch equations in ker Phi (20 seeds + symbolic)",
            budget: secs(30),
            run: || suites::kernel_suite(DEFAULT_SEED, &Vec::new()),
        },
        Criterion {
            number: 3,
            name: "extended Q1..Q4 in ker Phi, Q2 refused at alpha beta = 1",
            budget: secs(60),
            run: || suites::corollary_suite(DEFAULT_SEED),
        },
        Criterion {
            number: 4,
            name: "perturbed corrections are certified inconsistent",
            budget: secs(120),
            run: || suites::uniqueness_suite(DEFAULT_SEED, DegreeBound::Natural),
        },
        Criterion {
            number: 5,
            name: "solved xi, eta match the closed forms",
            budget: secs(60),
            run: || suites::oracle_suite(DEFAULT_SEED),
        },
        Criterion {
            number: 6,
            name: "covering series and numerators",
            budget: secs(1),
            run: || suites::hilbert_suite(hyperell::series::DEFAULT_TRUNCATION),
        },
        Criterion {
            number: 7,
            name: "equations of D, E, T pull back to zero",
            budget: secs(30),
            run: || suites::tower_suite(DEFAULT_SEED),
        },
        Criterion {
            number: 8,
            name: "10 transversal nodes",
            budget: secs(10),
            run: || suites::nodes_suite(DEFAULT_SEED),
        },
        Criterion {
            number: 9,
            name: "involutions and eigenspace table",
            budget: secs(60),
            run: || suites::involution_suite(DEFAULT_SEED, None, None),
        },
        Criterion {
            number: 10,
            name: "W' restricts to T'",
            budget: secs(5),
            run: || suites::restriction_suite(DEFAULT_SEED),
        },
    ]
}

fn main() {
    let mut failures = Vec::new();
    for c in criteria() {
        let start = Instant::now();
        let report = (c.run)();
        let elapsed = start.elapsed();
        let in_time = elapsed <= c.budget;
        let ok = report.passed() && in_time;
        println!(
            "criterion {:>2} {}: {} ({} checks, {:.3}s of {}s)",
            c.number,
            if ok { "PASS" } else { "FAIL" },
            c.name,
            report.checks.len(),
            elapsed.as_secs_f64(),
            c.budget.as_secs()
        );
        if let Some(f) = report.first_failure() {
            failures.push(format!("criterion {}: {} {:?}", c.number, f.id, f.detail));
        } else if !in_time {
            failures.push(format!("criterion {}: over budget ({elapsed:?})", c.number));
        }
    }
    if !failures.is_empty() {
        eprintln!("{failures:#?}");
        std::process::exit(1);
    }
    println!("all {} criteria passed", criteria().len());
}
