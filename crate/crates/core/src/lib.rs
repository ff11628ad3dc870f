//! Exact colored Jones polynomials of double twist knots.
//!
//! Every evaluator returns an exact [`LaurentPoly`](qalgebra::LaurentPoly)
//! with big-integer coefficients. Several independent formulas compute the
//! same invariant, and the [`verify`] module cross-checks them.

pub mod bailey;
pub mod cjp;
pub mod error;
pub mod exec;
pub mod knots;
pub mod kzseries;
pub mod lattice;
pub mod qalgebra;
pub mod takata;
pub mod verify;

pub use error::{Error, Result};
pub use exec::Exec;
