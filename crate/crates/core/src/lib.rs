//! Exact computations around alternating subalgebras of multi-parameter
//! Hecke algebras and alternating subgroups of braid groups.

pub mod error;
pub mod coeffs;
pub mod coxeter;
pub mod exactmath;
pub mod heckedihedral;
pub mod presentations;
pub mod subgroup_rewrite;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
pub use exactmath::{LaurentPoly, Monomial, RationalFunction, TruncatedSeries, Var};
