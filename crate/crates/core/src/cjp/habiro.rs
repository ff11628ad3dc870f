//! The cyclotomic expansion of the left-handed torus knots `K(1,-p)`.

use crate::error::{Error, Result};
use crate::lattice::WeakChains;
use crate::qalgebra::{qbinomial, qpochhammer, LaurentPoly};

/// `C_n(K(1,-p); q)`: the chain sum over `n+1 = k_p >= ... >= k_1 >= 1` with
/// the inner product taken over `i = 1..p-1`.
pub fn habiro_coefficient(p: i64, n: usize) -> Result<LaurentPoly> {
    if p < 1 {
        return Err(Error::invalid(format!("habiro requires p >= 1 (got p={p})")));
    }
    let len = p as usize;
    let mut acc = LaurentPoly::zero();
    for k in WeakChains::with_top(len, n + 1) {
        if k[0] < 1 {
            continue;
        }
        let mut term = LaurentPoly::one();
        let mut e = 0;
        let mut running = 0i64; // sum_{j<i} k_j
        for i in 1..len {
            let (ki, knext) = (k[i - 1] as i64, k[i] as i64);
            e += ki * ki;
            term = term * qbinomial(knext + ki - i as i64 + 2 * running, knext - ki);
            running += ki;
        }
        acc += term.shift(e);
    }
    Ok(acc.shift(n as i64 + 1 - p))
}

/// `sum_{n < N} (q^{1+N})_n (q^{1-N})_n C_n(K(1,-p); q)`, to be compared with
/// `J_N(K(1,-p); q)`.
pub fn habiro_left_torus_check(p: i64, big_n: usize) -> Result<LaurentPoly> {
    super::thm12::check_color(big_n)?;
    let nn = big_n as i64;
    let mut acc = LaurentPoly::zero();
    for n in 0..big_n {
        acc += qpochhammer(1 + nn, n) * qpochhammer(1 - nn, n) * habiro_coefficient(p, n)?;
    }
    Ok(acc)
}
