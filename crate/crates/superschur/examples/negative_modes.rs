//! Negative modes strip rows and columns: the `L` string over the conjugate
//! diagram reduces `s_Λ` to `(−1)^{|Λ|}`, and `K` does the same for `s*_Λ`.
//!
//! Run with `cargo run --example negative_modes`.

use superschur::bases::{SchurTable, SchurType};
use superschur::operators::{mode_k, mode_l};
use superschur::SuperPartition;

fn main() {
    let table = SchurTable::new();
    let sp: SuperPartition = "2;1".parse().unwrap();
    let conj = sp.conjugate();
    println!("Lambda = ({sp}), conjugate rows drive the string: ({conj})");

    let mut value = (*table.schur(SchurType::I, &sp)).clone();
    println!("\ns_({sp}) = {value}");
    for row in conj.rows() {
        let mode = mode_l(-(row.star as i64), row.fermionic as u8);
        value = mode.apply(&value);
        println!("after {:>6}: {value}", mode.name());
    }
    println!("expected (-1)^{} = {}", sp.total_degree(), if sp.total_degree() % 2 == 1 { "-1" } else { "1" });

    let mut value = (*table.schur(SchurType::IStar, &sp)).clone();
    println!("\ns*_({sp}) = {value}");
    for row in conj.rows() {
        let mode = mode_k(-(row.star as i64), row.fermionic as u8);
        value = mode.apply(&value);
        println!("after {:>6}: {value}", mode.name());
    }
}
