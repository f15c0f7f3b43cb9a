//! Acceptance battery: one line per criterion, non-zero exit if any fails.
//! Failing criteria also print each failing check.

use std::process::ExitCode;
use std::time::Instant;

use eisenzero::verify::{criterion, SuiteOptions, CRITERIA};

fn main() -> ExitCode {
    let opts = SuiteOptions::default();
    let mut failed = 0;
    println!("\nacceptance criteria");
    for (n, title) in CRITERIA {
        let start = Instant::now();
        let checks = criterion(n, &opts);
        let ok = checks.iter().all(|c| c.passed());
        println!(
            "criterion {n:>2} {} ({} checks, {:.1}s): {title}",
            if ok { "PASS" } else { "FAIL" },
            checks.len(),
            start.elapsed().as_secs_f64()
        );
        for c in checks.iter().filter(|c| !c.passed()) {
            println!(
                "    {}: measured {:?} expected {:?} tolerance {:e}{}",
                c.id,
                c.measured,
                c.expected,
                c.tolerance,
                c.detail.as_deref().map(|d| format!(" ({d})")).unwrap_or_default()
            );
        }
        if !ok {
            failed += 1;
        }
    }
    println!("{} of {} criteria passed\n", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
