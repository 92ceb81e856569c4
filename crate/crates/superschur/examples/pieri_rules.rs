//! The four combinatorial Pieri rules with decorated diagrams, checked
//! against the algebraic product oracle.
//!
//! Run with `cargo run --example pieri_rules`.

use superschur::bases::SchurTable;
use superschur::pieri::{apply_rule, matches_oracle, DecoratedDiagram, PieriRule};
use superschur::SuperPartition;

fn show(rule: PieriRule, r: u32, lambda: &str, table: &SchurTable) {
    let sp: SuperPartition = lambda.parse().unwrap();
    println!("{} with r={r} on ({sp}):", rule);
    for (omega, coeff) in apply_rule(rule, r, &sp) {
        println!("  ({omega})  coefficient {coeff:+}");
        let diagram = DecoratedDiagram::for_transition(&sp, &omega);
        for line in diagram.render().lines() {
            println!("      {line}");
        }
    }
    matches_oracle(table, rule, r, &sp).expect("rule agrees with the algebraic oracle");
    println!("  oracle: exact match\n");
}

fn main() {
    let table = SchurTable::new();
    show(PieriRule::ThetaI, 4, "0;3", &table);
    show(PieriRule::EI, 1, "0;", &table);
    show(PieriRule::HIStar, 3, "1;3", &table);
    show(PieriRule::EIStar, 2, "2;1", &table);
}
