//! Generalized Kontsevich-Zagier series at roots of unity.
//!
//! Each series is first summed exactly as a Laurent polynomial with the outer
//! index below `N` (all later summands carry a factor `1 - q^N`), then reduced
//! into `Z[x]/Phi_d` for the requested divisor `d` of `N`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cjp::{
    c_neg_chain, c_poly, dd_poly, jones_thm1, jones_thm2, jones_thm3_neg, jones_thm3_pos, thm1_core,
    thm2_core,
};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::qalgebra::{divisors, galois_invert, qpochhammer, reduce_mod_phi, CyclotomicElt, LaurentPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SeriesKind {
    /// `F_{m,p}`, tied to `K(-m,p)`.
    F,
    /// `Ffrak_{m,p}`, tied to `K(-m,-p)`.
    Ffrak,
    /// `U_{m,p}(-1; q)`, tied to `K(m,-p)`.
    U,
    /// `Ufrak_{m,p}(-1; q)`, tied to `K(m,p)`.
    Ufrak,
}

impl fmt::Display for SeriesKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SeriesKind::F => "F",
            SeriesKind::Ffrak => "Ffrak",
            SeriesKind::U => "U",
            SeriesKind::Ufrak => "Ufrak",
        })
    }
}

impl FromStr for SeriesKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "F" => Ok(SeriesKind::F),
            "Ffrak" => Ok(SeriesKind::Ffrak),
            "U" => Ok(SeriesKind::U),
            "Ufrak" => Ok(SeriesKind::Ufrak),
            _ => Err(Error::parse(format!("unknown series {s:?} (expected F, Ffrak, U or Ufrak)"))),
        }
    }
}

/// A series value at a primitive `level`-th root of unity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootOfUnitySeriesValue {
    pub series: SeriesKind,
    pub m: i64,
    pub p: i64,
    /// The order `N` of the root the series was truncated for.
    pub n: usize,
    pub level: u64,
    pub value: CyclotomicElt,
}

fn check(kind: SeriesKind, m: i64, p: i64, big_n: usize) -> Result<()> {
    let m_min = if kind == SeriesKind::F { 0 } else { 1 };
    if m < m_min {
        return Err(Error::invalid(format!("{kind} requires m >= {m_min} (got m={m})")));
    }
    if p < 1 {
        return Err(Error::invalid(format!("{kind} requires p >= 1 (got p={p})")));
    }
    if big_n < 1 {
        return Err(Error::invalid("the order N must be at least 1"));
    }
    Ok(())
}

/// The exact truncated sum of `kind` for roots of order dividing `N`.
pub fn series_poly(kind: SeriesKind, m: i64, p: i64, big_n: usize, exec: Exec) -> Result<LaurentPoly> {
    check(kind, m, p, big_n)?;
    let max = big_n - 1;
    Ok(match kind {
        SeriesKind::F => thm2_core(m, p, max, 0, exec),
        SeriesKind::Ffrak => thm1_core(m, p, max, 0, exec),
        SeriesKind::U => {
            let terms = exec.map(big_n, |n| -> Result<LaurentPoly> {
                let ni = n as i64;
                let t = qpochhammer(1, n) * dd_poly(m, n)? * c_neg_chain(p, n);
                Ok(t.shift_signed(-ni * (ni + 1) / 2, n % 2 == 1))
            });
            sum_terms(terms)?.shift(-p)
        }
        SeriesKind::Ufrak => {
            let terms = exec.map(big_n, |n| -> Result<LaurentPoly> {
                Ok((qpochhammer(1, n) * dd_poly(m, n)? * c_poly(p, n)?).shift(n as i64))
            });
            sum_terms(terms)?.shift(p)
        }
    })
}

fn sum_terms(terms: Vec<Result<LaurentPoly>>) -> Result<LaurentPoly> {
    Ok(terms.into_iter().collect::<Result<Vec<_>>>()?.into_iter().sum())
}

fn check_divisor(big_n: usize, d: u64) -> Result<()> {
    if d == 0 || !(big_n as u64).is_multiple_of(d) {
        return Err(Error::invalid(format!("{d} does not divide N = {big_n}")));
    }
    Ok(())
}

/// `kind` evaluated at a primitive `d`-th root of unity, `d | N`.
pub fn evaluate(kind: SeriesKind, m: i64, p: i64, big_n: usize, d: u64) -> Result<RootOfUnitySeriesValue> {
    check_divisor(big_n, d)?;
    let poly = series_poly(kind, m, p, big_n, Exec::default())?;
    Ok(RootOfUnitySeriesValue {
        series: kind,
        m,
        p,
        n: big_n,
        level: d,
        value: reduce_mod_phi(&poly, d),
    })
}

pub fn f_at_root(m: i64, p: i64, big_n: usize) -> Result<CyclotomicElt> {
    Ok(evaluate(SeriesKind::F, m, p, big_n, big_n as u64)?.value)
}

pub fn ffrak_at_root(m: i64, p: i64, big_n: usize) -> Result<CyclotomicElt> {
    Ok(evaluate(SeriesKind::Ffrak, m, p, big_n, big_n as u64)?.value)
}

pub fn u_at_root(m: i64, p: i64, big_n: usize) -> Result<CyclotomicElt> {
    Ok(evaluate(SeriesKind::U, m, p, big_n, big_n as u64)?.value)
}

pub fn ufrak_at_root(m: i64, p: i64, big_n: usize) -> Result<CyclotomicElt> {
    Ok(evaluate(SeriesKind::Ufrak, m, p, big_n, big_n as u64)?.value)
}

/// `Ufrak_{m,p}(-1; q)` as a power series, keeping exponents below `order`.
pub fn ufrak_series_truncated(m: i64, p: i64, order: i64) -> Result<LaurentPoly> {
    check(SeriesKind::Ufrak, m, p, 1)?;
    // Summand n starts at q^{p+n}.
    let n_terms = (order - p).max(0) as usize;
    let mut acc = LaurentPoly::zero();
    for n in 0..n_terms {
        let t = (qpochhammer(1, n) * dd_poly(m, n)? * c_poly(p, n)?).shift(p + n as i64);
        acc += t.truncate_below(order);
    }
    Ok(acc)
}

/// The colored Jones polynomial each series is tied to.
pub fn matching_jones(kind: SeriesKind, m: i64, p: i64, big_n: usize) -> Result<LaurentPoly> {
    match kind {
        SeriesKind::F => jones_thm2(m, p, big_n),
        SeriesKind::Ffrak => jones_thm1(m, p, big_n),
        SeriesKind::U => jones_thm3_neg(m, p, big_n),
        SeriesKind::Ufrak => jones_thm3_pos(m, p, big_n),
    }
}

/// `S(zeta_d) = J_N(K; zeta_d)` for every `d | N`.
pub fn check_relation(kind: SeriesKind, m: i64, p: i64, big_n: usize) -> Result<bool> {
    let s = series_poly(kind, m, p, big_n, Exec::default())?;
    let j = matching_jones(kind, m, p, big_n)?;
    Ok(divisors(big_n as u64)
        .into_iter()
        .all(|d| reduce_mod_phi(&s, d) == reduce_mod_phi(&j, d)))
}

/// The alternative reading `Ufrak_{m,p}(-1; zeta_N) = J_N(K(-m,p); zeta_N)`;
/// expected to fail, see [`SeriesKind::Ufrak`].
pub fn check_ufrak_alternative(m: i64, p: i64, big_n: usize) -> Result<bool> {
    let s = series_poly(SeriesKind::Ufrak, m, p, big_n, Exec::default())?;
    let j = jones_thm2(m, p, big_n)?;
    Ok(reduce_mod_phi(&s, big_n as u64) == reduce_mod_phi(&j, big_n as u64))
}

fn duality_at(lhs: &LaurentPoly, rhs: &LaurentPoly, d: u64) -> bool {
    reduce_mod_phi(lhs, d) == galois_invert(&reduce_mod_phi(rhs, d))
}

/// `F_{m,p}(zeta_N) = U_{m+1,p}(-1; zeta_N^{-1})`.
pub fn check_duality_1(m: i64, p: i64, big_n: usize) -> Result<bool> {
    check_duality_at(1, m, p, big_n, big_n as u64)
}

/// `Ffrak_{m,p}(zeta_N) = Ufrak_{m+1,p}(-1; zeta_N^{-1})`.
pub fn check_duality_2(m: i64, p: i64, big_n: usize) -> Result<bool> {
    check_duality_at(2, m, p, big_n, big_n as u64)
}

/// Duality `which` (1 or 2) at a primitive `d`-th root, `d | N`.
pub fn check_duality_at(which: u8, m: i64, p: i64, big_n: usize, d: u64) -> Result<bool> {
    check_divisor(big_n, d)?;
    let (left, right) = match which {
        1 => (SeriesKind::F, SeriesKind::U),
        2 => (SeriesKind::Ffrak, SeriesKind::Ufrak),
        _ => return Err(Error::invalid(format!("duality must be 1 or 2 (got {which})"))),
    };
    let lhs = series_poly(left, m, p, big_n, Exec::default())?;
    let rhs = series_poly(right, m + 1, p, big_n, Exec::default())?;
    Ok(duality_at(&lhs, &rhs, d))
}

/// Duality `which` at every divisor of `N`.
pub fn check_duality_all_divisors(which: u8, m: i64, p: i64, big_n: usize) -> Result<bool> {
    for d in divisors(big_n as u64) {
        if !check_duality_at(which, m, p, big_n, d)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `zeta_N * sum_{n<N} (zeta_N; zeta_N)_n`, the classical series times `q`.
pub fn kontsevich_zagier_at_root(big_n: usize) -> CyclotomicElt {
    let s: LaurentPoly = (0..big_n).map(|n| qpochhammer(1, n)).sum();
    reduce_mod_phi(&s.shift(1), big_n as u64)
}
