//! Exact computer algebra for symmetric functions in superspace.
//!
//! The ring carries even generators `x₁, x₂, …` (normalized power sums) and
//! odd Grassmann generators `θ₁, θ₂, …`, with exact rational coefficients
//! throughout — no floating point anywhere.  On top of it the crate builds:
//!
//! * the multiplicative bases `h`, `e`, `h̃`, `ẽ`, `ȟ` and the power-sum
//!   superbasis ([`bases`]);
//! * the four super-Schur families `s_Λ`, `s*_Λ`, `s̄_Λ`, `s̄*_Λ`
//!   constructed by strings of super Bernstein operator modes
//!   ([`operators`], [`bases::SchurTable`]);
//! * the scalar product making the power-sum superbasis orthogonal, with
//!   blockwise Gram adjoints ([`algebra`], [`operators::gram_adjoint`]);
//! * the dualities `ω`, `ρ`, `φ` and the negative modes `K`, `L` that strip
//!   rows and columns ([`operators`]);
//! * combinatorial Pieri rules on superpartition diagrams with an exact
//!   algebraic oracle ([`pieri`]);
//! * verification suites covering orthogonality, dualities, one-row/
//!   one-column tables, exchange relations and negative modes ([`verify`]).
//!
//! Every result is exact; all identities the crate claims are enforced by
//! the `acceptance` integration test.
//!
//! The `examples/` directory demonstrates each capability as a runnable
//! program; the thin `superschur` binary exposes the same functionality as
//! batch subcommands (see [`cli`]).
//!
//! ```
//! use superschur::{SchurTable, SchurType, SuperPartition};
//!
//! let table = SchurTable::new();
//! let sp: SuperPartition = "0;3".parse().unwrap();
//! let s = table.schur(SchurType::I, &sp);
//! assert_eq!(s.render_text(), "-1 t4 | 1 t1*x3 | 1 t1*x1*x2 | 1/6 t1*x1^3");
//!
//! // the dual family pairs to the Kronecker delta
//! let dual = table.schur(SchurType::IStar, &sp);
//! assert_eq!(s.scalar_product(&dual), superschur::algebra::rat_int(1));
//! ```

pub mod algebra;
pub mod bases;
pub mod cli;
pub mod operators;
pub mod pieri;
pub mod superpartition;
pub mod verify;

pub use algebra::{Bidegree, Rat, SuperMonomial, SuperPolynomial};
pub use bases::{SchurExpansion, SchurTable, SchurType};
pub use operators::LinearOperator;
pub use superpartition::SuperPartition;
