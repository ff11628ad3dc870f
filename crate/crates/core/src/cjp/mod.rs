//! Colored Jones evaluators for double twist knots.
//!
//! | function | knot |
//! |---|---|
//! | [`jones_thm1`] | `K(-m,-p)`, `m,p >= 1` |
//! | [`jones_thm2`] | `K(-m,p)`, `m >= 0`, `p >= 1` |
//! | [`jones_torus`] | `T(2,2p+1) = K(0,p)` |
//! | [`jones_thm3_pos`] | `K(m,p)`, `m,p >= 1` |
//! | [`jones_thm3_neg`] | `K(m,-p)`, `m,p >= 1` |
//! | [`walsh_colored_jones`] | `K(m,p)`, `m >= 1`, `p != 0` |

mod coeffs;
mod habiro;
mod thm12;
mod thm3;
mod walsh;

pub use coeffs::{beta_coeff, delta_coeff, epsilon, gamma};
pub use habiro::{habiro_coefficient, habiro_left_torus_check};
pub use thm12::{jones_thm1, jones_thm1_with, jones_thm2, jones_thm2_with, jones_torus, jones_torus_with};
pub use thm3::{
    c_neg_poly, c_neg_via_inversion, c_poly, c_poly_defining, d_poly, d_poly_defining, dd_poly,
    jones_thm3_neg, jones_thm3_neg_with, jones_thm3_pos, jones_thm3_pos_with,
};
pub use walsh::walsh_colored_jones;

pub(crate) use thm12::{thm1_core, thm2_core};
pub(crate) use thm3::c_neg_chain;
