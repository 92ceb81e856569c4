//! The dualities linking the four super-Schur families: the sign
//! automorphism ω, the mixing involution ρ, their composition φ, and the
//! blockwise adjoints.
//!
//! Run with `cargo run --example dualities`.

use superschur::bases::{elementary, homogeneous, SchurTable, SchurType};
use superschur::operators::{omega, phi, phi_perp, rho, rho_perp};
use superschur::SuperPartition;

fn main() {
    let table = SchurTable::new();

    println!("omega swaps the elementary and homogeneous ladders:");
    for n in 0..=4u32 {
        assert_eq!(omega(&elementary(n)), homogeneous(n));
        println!("  omega(e_{n}) = h_{n}");
    }

    let sp: SuperPartition = "2;1".parse().unwrap();
    let conj = sp.conjugate();
    println!("\nLambda = ({sp}), Lambda' = ({conj})");

    let s = table.schur(SchurType::I, &sp);
    println!("rho(s_L)      = {}", rho(&s));
    println!("s_(L')        = {}", table.schur(SchurType::I, &conj));

    let s_star = table.schur(SchurType::IStar, &sp);
    println!("rho_perp(s*_L)= {}", rho_perp(&s_star));
    println!("s*_(L')       = {}", table.schur(SchurType::IStar, &conj));

    println!("\nphi carries type I to type II*:");
    println!("phi(s_L)      = {}", phi(&s));
    println!("sbar*_L       = {}", table.schur(SchurType::IIStar, &sp));

    println!("\nphi_perp carries type II to type I*:");
    let s_bar = table.schur(SchurType::II, &sp);
    println!("phi_perp(sbar_L) = {}", phi_perp(&s_bar));
    println!("s*_L             = {s_star}");

    // the omega duality between starred and barred families carries the
    // sign (-1)^binom(m,2); it is invisible below fermionic degree two
    let m2: SuperPartition = "1,0;".parse().unwrap();
    let lhs = table.schur(SchurType::IStar, &m2);
    let rhs = omega(&table.schur(SchurType::II, &m2.conjugate()));
    println!("\nat m = 2 the omega duality picks up a sign:");
    println!("s*_(1,0;)           = {lhs}");
    println!("omega(sbar_(1,0;)') = {rhs}");
}
