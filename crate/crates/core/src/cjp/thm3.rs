//! Habiro-type sums for `K(m,p)` and `K(m,-p)` and their chain-sum
//! coefficients `c_{p,n}`, `d_{m,n}`, `c_{-p,n}`.

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::lattice::chain_sum_fixed_top;
use crate::qalgebra::{choose2, qbinomial, qpochhammer, LaurentPoly, RationalFn};

use super::thm12::check_color;

fn check_pos(name: &str, what: &str, v: i64) -> Result<()> {
    if v < 1 {
        return Err(Error::invalid(format!("{name} requires {what} >= 1 (got {what}={v})")));
    }
    Ok(())
}

/// `c_{p,n} = sum_{n = n_p >= ... >= n_1 >= 0} prod_{j<p} q^{n_j^2+n_j} [n_{j+1}; n_j]`.
pub fn c_poly(p: i64, n: usize) -> Result<LaurentPoly> {
    check_pos("c_poly", "p", p)?;
    Ok(chain_sum_fixed_top(p as usize, n, |v| {
        let e: i64 = v[..v.len() - 1].iter().map(|&x| (x * x + x) as i64).sum();
        Some((e, false))
    }))
}

/// `c_{p,n}` from its defining single sum.
pub fn c_poly_defining(p: i64, n: usize) -> Result<RationalFn> {
    check_pos("c_poly", "p", p)?;
    let mut acc = RationalFn::zero();
    for k in 0..=n {
        let ki = k as i64;
        let num = qpochhammer(1, n)
            * (LaurentPoly::one() - LaurentPoly::q_pow(2 * ki + 1))
                .shift_signed(choose2(ki) + p * (ki * ki + ki), k % 2 == 1);
        let den = qpochhammer(1, n - k) * qpochhammer(1, n + k + 1);
        acc = &acc + &RationalFn::new(num, den)?;
    }
    Ok(acc)
}

/// `(q)_n d_{m,n} = sum_{chains} (q^{n_1+1})_{n-n_1} prod_{i<m} q^{n_i^2+n_i} [n_{i+1}; n_i]`,
/// the polynomial that replaces `d_{m,n}` in every evaluator.
pub fn dd_poly(m: i64, n: usize) -> Result<LaurentPoly> {
    check_pos("d_poly", "m", m)?;
    let len = m as usize;
    let mut acc = LaurentPoly::zero();
    for n1 in 0..=n {
        // Pin n_1 by summing the chain n_1 <= n_2 <= ... <= n_m = n.
        let tail = chain_sum_fixed_top(len, n, |v| {
            if v[0] != n1 {
                return None;
            }
            let e: i64 = v[..len - 1].iter().map(|&x| (x * x + x) as i64).sum();
            Some((e, false))
        });
        if !tail.is_zero() {
            acc += qpochhammer(n1 as i64 + 1, n - n1) * tail;
        }
    }
    Ok(acc)
}

/// `d_{m,n}` as the chain sum with its `1/(q)_{n_1}` factor.
pub fn d_poly(m: i64, n: usize) -> Result<RationalFn> {
    RationalFn::new(dd_poly(m, n)?, qpochhammer(1, n))
}

/// `d_{m,n}` from its defining single sum.
pub fn d_poly_defining(m: i64, n: usize) -> Result<RationalFn> {
    check_pos("d_poly", "m", m)?;
    let mut acc = RationalFn::zero();
    for k in 0..=n {
        let ki = k as i64;
        let num = qpochhammer(1, n)
            * (LaurentPoly::one() - LaurentPoly::q_pow(2 * ki + 1)).shift(m * ki * ki + (m - 1) * ki);
        let den = qpochhammer(1, n - k) * qpochhammer(1, n + k + 1);
        acc = &acc + &RationalFn::new(num, den)?;
    }
    Ok(acc)
}

/// `sum_{n = s_p >= ... >= s_1 >= 0} prod_{j<p} q^{-s_j - s_{j+1} s_j} [s_{j+1}; s_j]`.
pub(crate) fn c_neg_chain(p: i64, n: usize) -> LaurentPoly {
    let len = p as usize;
    chain_sum_fixed_top(len, n, |s| {
        let e: i64 = (0..len - 1)
            .map(|j| -(s[j] as i64) - (s[j + 1] * s[j]) as i64)
            .sum();
        Some((e, false))
    })
}

/// `c_{-p,n} = (-1)^n q^{-n(n+3)/2} * c_neg_chain(p, n)`.
pub fn c_neg_poly(p: i64, n: usize) -> Result<LaurentPoly> {
    check_pos("c_neg_poly", "p", p)?;
    let ni = n as i64;
    Ok(c_neg_chain(p, n).shift_signed(-ni * (ni + 3) / 2, n % 2 == 1))
}

/// `c_{-p,n}` through the `q -> 1/q` transformation of `c_{p,n}`.
pub fn c_neg_via_inversion(p: i64, n: usize) -> Result<LaurentPoly> {
    let ni = n as i64;
    Ok(c_poly(p, n)?.invert_q().shift_signed(-ni * (ni + 3) / 2, n % 2 == 1))
}

/// `(q^{1-N})_n / (q)_n = (-1)^n q^{n(1-N) + C(n,2)} [N-1; n]`.
pub(crate) fn pochhammer_ratio(big_n: usize, n: usize) -> LaurentPoly {
    let (nn, ni) = (big_n as i64, n as i64);
    qbinomial(nn - 1, ni).shift_signed(ni * (1 - nn) + choose2(ni), n % 2 == 1)
}

pub fn jones_thm3_pos(m: i64, p: i64, big_n: usize) -> Result<LaurentPoly> {
    jones_thm3_pos_with(m, p, big_n, Exec::default())
}

/// `J_N(K(m,p); q)` for `m, p >= 1`.
pub fn jones_thm3_pos_with(m: i64, p: i64, big_n: usize, exec: Exec) -> Result<LaurentPoly> {
    check_pos("thm3pos", "m", m)?;
    check_pos("thm3pos", "p", p)?;
    check_color(big_n)?;
    let nn = big_n as i64;
    let terms: Vec<Result<LaurentPoly>> = exec.map(big_n, |n| {
        let ni = n as i64;
        Ok(qpochhammer(1 + nn, n)
            * pochhammer_ratio(big_n, n)
            * c_poly(p, n)?
            * dd_poly(m, n)?)
        .map(|t: LaurentPoly| t.shift(ni))
    });
    let sum: LaurentPoly = terms.into_iter().collect::<Result<Vec<_>>>()?.into_iter().sum();
    Ok(sum.shift(p * (1 - nn * nn)))
}

pub fn jones_thm3_neg(m: i64, p: i64, big_n: usize) -> Result<LaurentPoly> {
    jones_thm3_neg_with(m, p, big_n, Exec::default())
}

/// `J_N(K(m,-p); q)` for `m, p >= 1`.
pub fn jones_thm3_neg_with(m: i64, p: i64, big_n: usize, exec: Exec) -> Result<LaurentPoly> {
    check_pos("thm3neg", "m", m)?;
    check_pos("thm3neg", "p", p)?;
    check_color(big_n)?;
    let nn = big_n as i64;
    let terms: Vec<Result<LaurentPoly>> = exec.map(big_n, |n| {
        let ni = n as i64;
        // (-1)^n q^{-C(n+1,2)} times the ratio's sign and power leaves q^{-nN}.
        let t = qpochhammer(1 + nn, n) * qbinomial(nn - 1, ni) * c_neg_chain(p, n) * dd_poly(m, n)?;
        Ok(t.shift(-ni * nn))
    });
    let sum: LaurentPoly = terms.into_iter().collect::<Result<Vec<_>>>()?.into_iter().sum();
    Ok(sum.shift(-p * (1 - nn * nn)))
}

/// The `n`-th summand of either sum in literal form, in the fraction field,
/// without the overall prefactor. `n` may exceed `N - 1`.
#[cfg(test)]
pub(crate) fn thm3_term_literal(m: i64, p: i64, big_n: usize, n: usize, negative: bool) -> Result<RationalFn> {
    let nn = big_n as i64;
    let ni = n as i64;
    let outer = qpochhammer(1 + nn, n) * qpochhammer(1 - nn, n);
    let mut acc = RationalFn::zero();
    for chain in crate::lattice::WeakChains::with_top(m as usize, n) {
        let mut num = outer.clone();
        let mut e = 0;
        for i in 0..chain.len() - 1 {
            let x = chain[i] as i64;
            e += x * x + x;
            num = num * qbinomial(chain[i + 1] as i64, x);
        }
        acc = &acc + &RationalFn::new(num.shift(e), qpochhammer(1, chain[0]))?;
    }
    let s_part = if negative {
        c_neg_chain(p, n).shift_signed(-ni * (ni + 1) / 2, n % 2 == 1)
    } else {
        c_poly(p, n)?.shift(ni)
    };
    Ok(&acc * &RationalFn::from_poly(s_part))
}

/// The `n`-th summand of the division-free evaluator, matching
/// [`thm3_term_literal`].
#[cfg(test)]
pub(crate) fn thm3_term_fast(m: i64, p: i64, big_n: usize, n: usize, negative: bool) -> Result<LaurentPoly> {
    let nn = big_n as i64;
    let ni = n as i64;
    Ok(if negative {
        (qpochhammer(1 + nn, n) * qbinomial(nn - 1, ni) * c_neg_chain(p, n) * dd_poly(m, n)?).shift(-ni * nn)
    } else {
        (qpochhammer(1 + nn, n) * pochhammer_ratio(big_n, n) * c_poly(p, n)? * dd_poly(m, n)?).shift(ni)
    })
}
