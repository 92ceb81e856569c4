//! Walk through one odd Bernstein mode application step by step:
//! `B₃^{(1)} s_{(0;3)} = s_{(3,0;3)}`, with the `e_r^⊥` bookkeeping and the
//! θ-Pieri expansion of each intermediate product.
//!
//! Run with `cargo run --example bernstein_modes`.

use superschur::bases::{SchurTable, SchurType};
use superschur::operators::{bernstein_b, e_perp};
use superschur::{SuperPartition, SuperPolynomial};

fn main() {
    let table = SchurTable::new();
    let sp: SuperPartition = "0;3".parse().unwrap();
    let s = (*table.schur(SchurType::I, &sp)).clone();
    println!("s_(0;3) = {s}");

    println!("\ne_r^perp ladder:");
    for r in 0..=3u32 {
        println!("  e_{r}^perp s_(0;3) = {}", e_perp(r, &s));
    }

    // the mode sums theta_{4+r} against the ladder with alternating signs
    let direct = SuperPolynomial::theta(4).mul(&s)
        - SuperPolynomial::theta(5).mul(&e_perp(1, &s));
    let via_mode = bernstein_b(3, 1).apply(&s);
    assert_eq!(via_mode, direct);
    println!("\nB_3^(1) s_(0;3) = theta_4 s_(0;3) - theta_5 (e_1^perp s_(0;3))");
    println!("               = {via_mode}");

    let target = table.schur(SchurType::I, &"3,0;3".parse().unwrap());
    assert_eq!(via_mode, *target);
    println!("               = s_(3,0;3)");

    println!("\nEvery mode with n >= circled_1 creates a single row:");
    for n in 4..=6i64 {
        let created = bernstein_b(n, 0).apply(&s);
        let expansion = table.expand(&created, SchurType::I);
        println!("  B_{n}^(0) s_(0;3) -> {}", expansion.render_lines());
    }
}
