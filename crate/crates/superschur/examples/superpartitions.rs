//! Superpartition combinatorics: enumeration, diagrams, conjugation and
//! scalar-product weights.
//!
//! Run with `cargo run --example superpartitions`.

use superschur::pieri::DecoratedDiagram;
use superschur::SuperPartition;

fn diagram(sp: &SuperPartition) -> String {
    DecoratedDiagram::for_transition(sp, sp)
        .render()
        .lines()
        .map(|line| format!("    {line}"))
        .collect::<Vec<_>>()
        .join("\n")
}

fn main() {
    let sp: SuperPartition = "8,6,3,2,0;5,3".parse().unwrap();
    println!("Lambda = ({sp})");
    println!("  star    = {:?}", sp.star());
    println!("  circled = {:?}", sp.circled());
    println!("  m = {}, |Lambda| = {}", sp.fermionic_degree(), sp.total_degree());
    println!("{}", diagram(&sp));

    let conj = sp.conjugate();
    println!("\nconjugate = ({conj})");
    println!("{}", diagram(&conj));
    assert_eq!(conj.conjugate(), sp);

    println!("\nAll superpartitions of degree 3 with one circle:");
    for p in SuperPartition::enumerate(3, 1) {
        println!("  ({p})  weight z = {}", p.z_weight().value);
    }

    println!("\nClass sizes |SP(n, m)| for n <= 6:");
    for m in 0..=3usize {
        let counts: Vec<usize> = (0..=6u32)
            .map(|n| SuperPartition::enumerate(n, m).len())
            .collect();
        println!("  m={m}: {counts:?}");
    }
}
