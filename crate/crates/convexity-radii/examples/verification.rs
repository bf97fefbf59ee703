//! Run the independent verification layer — quadrature oracles for the
//! integral representations, the Struve recurrence, Laguerre inequalities,
//! integrand shape scans, and disk certifications — and print one line per
//! report.
//!
//! ```sh
//! cargo run --example verification
//! ```

use convexity_radii::verify::{run_suite, SuiteKind};

fn main() {
    let reports = run_suite(SuiteKind::Fast, 42);
    let mut failed = 0;
    for r in &reports {
        println!(
            "{:<42} {}  margin {:+.3e}  ({})",
            r.check_name,
            if r.passed { "PASS" } else { "FAIL" },
            r.worst_margin,
            r.details
        );
        if !r.passed {
            failed += 1;
        }
    }
    println!("{} checks, {} failed", reports.len(), failed);
    std::process::exit(if failed == 0 { 0 } else { 1 });
}
