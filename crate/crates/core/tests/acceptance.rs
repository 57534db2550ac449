//! Acceptance criteria, one line of output per criterion.

use std::time::{Duration, Instant};

use twsurf_core::verify::{run_all, run_criterion, Check};

const SEED: u64 = 0;

fn report(criterion: u32, checks: &[Check], elapsed: Duration, budget: Option<Duration>) -> bool {
    let in_time = budget.is_none_or(|b| elapsed < b);
    let passed = !checks.is_empty() && checks.iter().all(|c| c.passed) && in_time;
    let detail: Vec<String> = checks
        .iter()
        .map(|c| {
            let values: Vec<String> = c
                .measured
                .iter()
                .map(|m| format!("{}={}", m.name, m.value))
                .collect();
            format!("{} [{}]", c.name, values.join(" "))
        })
        .collect();
    println!(
        "criterion {criterion:>2}: {} ({:.2}s{}) {}",
        if passed { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        budget.map_or(String::new(), |b| format!(" of {}s", b.as_secs())),
        detail.join("; ")
    );
    passed
}

fn main() {
    let mut failed = Vec::new();
    for criterion in 1..=12 {
        let start = Instant::now();
        let checks = run_criterion(criterion, SEED);
        let budget = matches!(criterion, 1 | 2).then(|| Duration::from_secs(30));
        if !report(criterion, &checks, start.elapsed(), budget) {
            failed.push(criterion);
        }
    }

    let start = Instant::now();
    let reports = run_all(SEED);
    let elapsed = start.elapsed();
    let all_checks: Vec<Check> = reports.into_iter().flat_map(|r| r.checks).collect();
    let summary = Check {
        criterion: 13,
        name: "all verify targets",
        passed: all_checks.iter().all(|c| c.passed),
        measured: Vec::new(),
    };
    if !report(13, &[summary], elapsed, Some(Duration::from_secs(120))) {
        failed.push(13);
    }

    if failed.is_empty() {
        println!("acceptance: all 13 criteria passed");
    } else {
        println!("acceptance: failed criteria {failed:?}");
        std::process::exit(1);
    }
}
