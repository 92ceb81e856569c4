//! Run the verification suites programmatically and print a compact report.
//! The same suites power `superschur verify <SUITE>` and the acceptance
//! tests.
//!
//! Run with `cargo run --release --example verify_identities`.

use superschur::bases::SchurTable;
use superschur::verify::{run_suite, Bounds};

fn main() {
    let table = SchurTable::new();
    let bounds = Bounds {
        max_total: 4,
        max_fermionic: 2,
    };
    println!("bounds: total <= {}, fermionic <= {}\n", bounds.max_total, bounds.max_fermionic);
    let reports = run_suite(&table, "all", bounds).unwrap();
    for report in &reports {
        println!(
            "{:<16} {:>4} checks  {:>6} ms  {}",
            report.suite,
            report.checks.len(),
            report.millis,
            if report.passed { "PASS" } else { "FAIL" }
        );
        if let Some(failure) = report.first_failure() {
            println!("  first counterexample: {}", failure.name);
        }
    }
    assert!(reports.iter().all(|r| r.passed));
}
