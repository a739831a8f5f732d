//! Integral binary quartic forms with vanishing `J`-invariant.
//!
//! Every such form is determined by its Hessian divisor `f`, a binary
//! quadratic form, together with a point `(A, B)` of a congruence lattice.
//! The crate builds that parametrization, the class-group arithmetic it
//! needs, exact orbit counts, and a brute-force oracle to check them against.

pub mod ck;
pub mod classes;
pub mod counting;
pub mod error;
pub mod factor;
pub mod family;
pub mod forms;
pub mod hensel;
pub mod lattice;
pub mod numth;
pub mod oracle;
pub mod poly;
pub mod reducibility;
pub mod verify;

pub use error::{Error, Result};
pub use forms::{
    cubic_resolvent, hessian, hessian_sqrt, invariants, is_irreducible_q, splitting_type,
    InvariantTriple, Mat2, QuadraticForm, QuarticForm, SplittingType, Unimodular,
};
