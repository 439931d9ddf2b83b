//! Acceptance gate: every verification suite must pass, inside its runtime
//! budget. One pass/fail line per criterion is written to stdout (directly,
//! so the lines survive the harness capture), then any failure is raised
//! with the full per-check detail.

use std::io::Write as _;
use std::time::Instant;

use wrightkit::{run_suite, EvalConfig};

/// (criterion number, suite id, runtime budget in seconds)
const CRITERIA: [(usize, &str, f64); 12] = [
    (1, "closed-forms", 1.0),
    (2, "aux-relation", 1.0),
    (3, "laplace-pairs", 30.0),
    (4, "sisters", 10.0),
    (5, "reciprocity", 1.0),
    (6, "moments", 20.0),
    (7, "charfn", 10.0),
    (8, "composition", 10.0),
    (9, "stable", 30.0),
    (10, "frac-ops", 10.0),
    (11, "asymptotics", 5.0),
    (12, "figures", 30.0),
];

#[test]
fn acceptance_criteria() {
    let cfg = EvalConfig::default();
    let mut out = std::io::stdout();
    let mut failures: Vec<String> = Vec::new();

    for (num, id, budget) in CRITERIA {
        let start = Instant::now();
        let rep = run_suite(id, &cfg).expect("criterion suite ids are known");
        let dt = start.elapsed().as_secs_f64();
        let in_budget = dt <= budget;
        let pass = rep.pass && in_budget;
        writeln!(
            out,
            "criterion {num:2} [{id}]: {} ({} checks, {dt:.2}s of {budget}s budget)",
            if pass { "PASS" } else { "FAIL" },
            rep.checks.len(),
        )
        .unwrap();
        if !rep.pass {
            failures.push(rep.render_text());
        }
        if !in_budget {
            failures.push(format!(
                "{id}: runtime {dt:.2}s exceeded the {budget}s budget\n"
            ));
        }
    }

    assert!(
        failures.is_empty(),
        "acceptance criteria failed:\n{}",
        failures.join("")
    );
}
