// Sweep of the prime-multiplicity classification and catenary formulas,
// printed as the JSON report.

use numsg::{verify_range, VerificationReport};

pub fn run_example(primes: &[u64], h_max: u64) -> numsg::Result<VerificationReport> {
    let report = verify_range(primes, h_max)?;
    for case in &report.cases {
        println!(
            "p={} c={} closed={} brute={:?} unique={} {}",
            case.p,
            case.c,
            case.closed_form,
            case.brute_force,
            case.unique_count,
            if case.pass { "pass" } else { "FAIL" }
        );
    }
    println!(
        "{} cases, {} passed, {} failed",
        report.summary.total, report.summary.passed, report.summary.failed
    );
    Ok(report)
}

fn main() -> numsg::Result<()> {
    let report = run_example(&[2, 3, 5, 7], 4)?;
    println!(
        "{}",
        serde_json::to_string_pretty(&report.summary).expect("serializes")
    );
    Ok(())
}
