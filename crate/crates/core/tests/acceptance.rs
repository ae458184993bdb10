//! One line per criterion. Runtime limits live in `suites::SUITES`; a suite
//! that finishes late fails even if every value matches.
//!
//! Set `CUBIC27_EXTENDED=1` to include the extended suites.

use std::panic;
use std::process::ExitCode;

use cubic27::suites::SUITES;

fn main() -> ExitCode {
    let extended = std::env::var("CUBIC27_EXTENDED").is_ok_and(|v| v == "1");
    let mut failed = 0;
    for (n, suite) in SUITES.iter().enumerate() {
        let n = n + 1;
        if suite.extended && !extended {
            println!("criterion {n:>2} SKIP {} (extended; set CUBIC27_EXTENDED=1)", suite.id);
            continue;
        }
        let report = match panic::catch_unwind(|| suite.run()) {
            Ok(r) => r,
            Err(_) => {
                failed += 1;
                println!("criterion {n:>2} FAIL {} (panicked)", suite.id);
                continue;
            }
        };
        let verdict = if report.passed() { "PASS" } else { "FAIL" };
        println!(
            "criterion {n:>2} {verdict} {} [{:.2?} of {:?}]",
            suite.id, report.elapsed, report.limit
        );
        if !report.passed() {
            failed += 1;
            for c in report.checks.iter().filter(|c| !c.ok) {
                println!("    {}: computed {}, expected {}", c.name, c.computed, c.expected);
            }
            if !report.within_limit() {
                println!("    over the time limit");
            }
        }
    }
    println!("acceptance: {failed} failed");
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
