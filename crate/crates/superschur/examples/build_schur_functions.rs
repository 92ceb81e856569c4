//! Build all four super-Schur families for one superpartition from their
//! operator strings and print the power-sum expansions.
//!
//! Run with `cargo run --example build_schur_functions`.

use superschur::bases::{SchurTable, SchurType};
use superschur::SuperPartition;

fn main() {
    let table = SchurTable::new();
    let sp: SuperPartition = "2;1".parse().unwrap();

    let string: Vec<String> = sp
        .rows()
        .iter()
        .map(|row| format!("mode({}, eps={})", row.star, row.fermionic as u8))
        .collect();
    println!("Lambda = ({sp}), operator string: {}", string.join(" "));
    println!();

    for ty in SchurType::ALL {
        let poly = table.schur(ty, &sp);
        println!("{:>6}: {poly}", ty.to_string());
    }

    // the two dual pairs are orthonormal
    let s = table.schur(SchurType::I, &sp);
    let s_star = table.schur(SchurType::IStar, &sp);
    println!("\n<s, s*> at ({sp}) = {}", s.scalar_product(&s_star));

    // expansions of a product in the type-I basis: theta_1 * h_3
    let f = superschur::SuperPolynomial::theta(1).mul(&superschur::bases::homogeneous(3));
    let expansion = table.expand(&f, SchurType::I);
    println!("\ntheta_1 * h_3 in the type-I basis:");
    for line in expansion.render_lines().lines() {
        println!("  {line}");
    }
}
