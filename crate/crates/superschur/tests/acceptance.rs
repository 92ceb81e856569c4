//! Acceptance suite: the ten exact-identity gates, one per test, each
//! printing a `criterion N: PASS/FAIL` line (visible with
//! `cargo test --test acceptance -- --nocapture`).
//!
//! Everything is exact rational arithmetic; tolerance is zero throughout.

use std::time::Instant;

use superschur::bases::SchurTable;
use superschur::verify::{
    suite_appendix_a, suite_classical, suite_creation, suite_dualities, suite_negative_modes,
    suite_orthogonality, suite_pieri, suite_recurrence, suite_table1, suite_worked_examples,
    Bounds, SuiteReport,
};

fn gate(number: u32, description: &str, report: SuiteReport) {
    let status = if report.passed { "PASS" } else { "FAIL" };
    println!(
        "criterion {number}: {status} — {description} ({} checks, {} ms)",
        report.checks.len(),
        report.millis
    );
    if let Some(failure) = report.first_failure() {
        panic!(
            "criterion {number} failed at {}: {}",
            failure.name,
            failure.detail.clone().unwrap_or_default()
        );
    }
}

#[test]
fn criterion_01_worked_example_fidelity() {
    let table = SchurTable::new();
    let started = Instant::now();
    let report = suite_worked_examples(&table);
    assert!(
        started.elapsed().as_secs() < 10,
        "worked examples exceeded the time budget"
    );
    gate(1, "worked-example fidelity (exact)", report);
}

#[test]
fn criterion_02_one_row_one_column_table() {
    let table = SchurTable::new();
    let report = suite_table1(&table, 6);
    gate(2, "16 one-row/one-column identities for 0 <= r <= 6", report);
}

#[test]
fn criterion_03_orthogonality() {
    let table = SchurTable::new();
    let report = suite_orthogonality(
        &table,
        Bounds {
            max_total: 6,
            max_fermionic: 3,
        },
    );
    gate(
        3,
        "duality pairings <s,s*> and <sbar,sbar*> are delta for |L| <= 6, m <= 3",
        report,
    );
}

#[test]
fn criterion_04_creation_property() {
    let table = SchurTable::new();
    let report = suite_creation(
        &table,
        Bounds {
            max_total: 5,
            max_fermionic: 3,
        },
    );
    gate(
        4,
        "operator strings rebuild all four families and single modes add one row",
        report,
    );
}

#[test]
fn criterion_05_pieri_vs_oracle() {
    let table = SchurTable::new();
    let report = suite_pieri(
        &table,
        Bounds {
            max_total: 5,
            max_fermionic: 2,
        },
        4,
    );
    gate(
        5,
        "four combinatorial Pieri rules equal the algebraic product, signs included",
        report,
    );
}

#[test]
fn criterion_06_classical_consistency() {
    let table = SchurTable::new();
    let report = suite_classical(&table, 8);
    gate(
        6,
        "m=0 sector equals the h-determinant oracle up to degree 8",
        report,
    );
}

#[test]
fn criterion_07_duality_suite() {
    let table = SchurTable::new();
    let report = suite_dualities(&table, 5);
    gate(
        7,
        "involutions and the omega/rho/phi duality relations for |L| <= 5",
        report,
    );
}

#[test]
fn criterion_08_derivative_and_exchange_relations() {
    let report = suite_appendix_a(6);
    gate(
        8,
        "derivative identities and all eight exchange relations on bidegrees <= (5,2)",
        report,
    );
}

#[test]
fn criterion_09_negative_modes() {
    let table = SchurTable::new();
    let report = suite_negative_modes(
        &table,
        Bounds {
            max_total: 5,
            max_fermionic: 2,
        },
    );
    gate(
        9,
        "K and L strings reduce s*_L and s_L to (-1)^{|L|} for |L| <= 5, m <= 2",
        report,
    );
}

#[test]
fn criterion_10_recurrence_through_rules() {
    let report = suite_recurrence(3, 4);
    gate(
        10,
        "(e_{r+1} + sum (-1)^s h_s e_{r+1-s}) s*_L = 0 through the combinatorial rules",
        report,
    );
}
