//! Exact one-variable algebra: Laurent polynomials over `Z`, their fraction
//! field, the cyclotomic quotients `Z[x]/Phi_N`, and the q-combinatorial
//! building blocks (Pochhammer symbols, Gaussian binomials).

pub(crate) mod dense;
mod cyclotomic;
mod laurent;
mod qfunc;
mod rational;
pub mod text;

pub use cyclotomic::{cyclotomic_poly, euler_phi, galois_invert, reduce_mod_phi, CyclotomicElt};
pub(crate) use cyclotomic::divisors;
pub use laurent::{lp_invert_q, lp_mul, LaurentPoly};
pub use qfunc::{qbinomial, qbinomial_shared, qmultinomial, qpochhammer, qpochhammer_general};
pub use rational::RationalFn;

/// `n choose 2` for possibly negative `n`, i.e. `n(n-1)/2`.
pub fn choose2(n: i64) -> i64 {
    n * (n - 1) / 2
}
