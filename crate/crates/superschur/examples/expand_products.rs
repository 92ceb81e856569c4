//! Exact products in the superalgebra and their expansions in any of the
//! four Schur families — the algebraic oracle behind the Pieri rules.
//!
//! Run with `cargo run --example expand_products`.

use superschur::bases::{homogeneous_tilde, SchurTable, SchurType};
use superschur::pieri::{oracle_product, Generator};
use superschur::{SuperPartition, SuperPolynomial};

fn main() {
    let table = SchurTable::new();

    // a product with no stated combinatorial rule: h̃_2 · s_(1;1)
    let sp: SuperPartition = "1;1".parse().unwrap();
    let product = homogeneous_tilde(2).mul(&table.schur(SchurType::I, &sp));
    println!("ht_2 * s_(1;1) = {product}");
    println!("\nexpanded in the type-I basis:");
    let expansion = oracle_product(&table, Generator::HTilde(2), &sp, SchurType::I);
    for line in expansion.render_lines().lines() {
        println!("  {line}");
    }

    // reconstruction is exact
    let rebuilt = table.reconstruct(&expansion, SchurType::I);
    assert_eq!(rebuilt, product);
    println!("\nreconstruction from the expansion is exact");

    // scalar products are exact rationals
    let theta13 = SuperPolynomial::theta(1).mul(&SuperPolynomial::theta(3));
    println!(
        "\n<t1*t3, t1*t3> = {}  (the binom(m,2) sign at m = 2)",
        theta13.scalar_product(&theta13)
    );
    let x2 = SuperPolynomial::x(2);
    println!("<x2, x2> = {}", x2.scalar_product(&x2));
}
