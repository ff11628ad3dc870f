//! Nested sums for `K(-m,-p)`, `K(-m,p)` and the torus knots `T(2,2p+1)`.
//!
//! Each sum runs over `N-1 >= n_L >= ... >= n_1 >= 0` and is evaluated with
//! [`chain_sum`]. The `_core` variants take the power of `q^N` appearing in the
//! exponents separately from the summation bound, which is how the
//! root-of-unity series reuse them with `q^N = 1`.

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::lattice::{chain_sum, Leaf};
use crate::qalgebra::{qpochhammer, LaurentPoly};

use super::coeffs::{beta_coeff, delta_pairs, epsilon_pairs, gamma};

fn c2p(n: i64) -> i64 {
    n * (n + 1) / 2
}

pub(crate) fn check_color(big_n: usize) -> Result<()> {
    if big_n < 1 {
        return Err(Error::invalid("the color N must be at least 1"));
    }
    Ok(())
}

/// Sum for `K(-m,-p)` with `N` in the exponents replaced by `nn` and the
/// head `(q^{1-nn})_{n_L}`.
pub(crate) fn thm1_core(m: i64, p: i64, max: usize, nn: i64, exec: Exec) -> LaurentPoly {
    let w = 2 * m + 1;
    let len = (w * p - 1) as usize;
    let pairs = epsilon_pairs(m, len as i64);
    let gam: Vec<i64> = (1..len as i64)
        .map(|i| gamma(i, m).expect("in range") as i64)
        .collect();
    let special: Vec<usize> = (1..len as i64)
        .filter(|i| i.rem_euclid(w) == m || i.rem_euclid(w) == 0)
        .map(|i| i as usize)
        .collect();
    let pre = (p - 1) * (nn - 1);
    let leaf = |n: &[usize]| -> Leaf {
        let v = |i: usize| n[i - 1] as i64;
        let top = v(len);
        let mut e = pre - c2p(top);
        let mut odd = top % 2 == 1;
        for &(i, j, c) in &pairs {
            e += c * v(i) * v(j);
        }
        for &i in &special {
            e += nn * v(i) + c2p(v(i));
            odd ^= v(i) % 2 == 1;
        }
        for i in 1..len {
            e += -v(i) * v(i + 1) + gam[i - 1] * v(i);
        }
        Some((e, odd))
    };
    chain_sum(len, max, exec, |t| qpochhammer(1 - nn, t), leaf)
}

/// Sum for `K(-m,p)` in the form where the `i = L` factor is split off the
/// head, so that `m = 0` counts the overlapping residue classes twice.
pub(crate) fn thm2_core(m: i64, p: i64, max: usize, nn: i64, exec: Exec) -> LaurentPoly {
    let w = 2 * m + 1;
    let len = (w * p) as usize;
    let pairs = delta_pairs(m, len as i64);
    let beta: Vec<i64> = (1..len as i64)
        .map(|i| beta_coeff(i, m).expect("in range") as i64)
        .collect();
    // Each index appears once per matching class: m+1 and 0 mod 2m+1.
    let mut special = Vec::new();
    for i in 1..=len as i64 {
        if i.rem_euclid(w) == (m + 1).rem_euclid(w) {
            special.push(i as usize);
        }
        if i.rem_euclid(w) == 0 {
            special.push(i as usize);
        }
    }
    let pre = p * (1 - nn);
    let leaf = |n: &[usize]| -> Leaf {
        let v = |i: usize| n[i - 1] as i64;
        let top = v(len);
        let mut e = pre + nn * top - 2 * c2p(top);
        let mut odd = false;
        for &(i, j, c) in &pairs {
            e += c * v(i) * v(j);
        }
        for &i in &special {
            e += -nn * v(i) + c2p(v(i));
            odd ^= v(i) % 2 == 1;
        }
        for i in 1..len {
            e += beta[i - 1] * v(i);
        }
        Some((e, odd))
    };
    chain_sum(len, max, exec, |t| qpochhammer(1 - nn, t), leaf)
}

/// The same sum written with a single product over
/// `i === m+1, 0` up to `L-1`. Agrees with [`thm2_core`] for `m >= 1`.
#[cfg(test)]
pub(crate) fn thm2_single_product(m: i64, p: i64, big_n: usize) -> LaurentPoly {
    let nn = big_n as i64;
    let w = 2 * m + 1;
    let len = (w * p) as usize;
    let pairs = delta_pairs(m, len as i64);
    let special: Vec<usize> = (1..len as i64)
        .filter(|i| i.rem_euclid(w) == (m + 1).rem_euclid(w) || i.rem_euclid(w) == 0)
        .map(|i| i as usize)
        .collect();
    let leaf = |n: &[usize]| -> Leaf {
        let v = |i: usize| n[i - 1] as i64;
        let top = v(len);
        let mut e = p * (1 - nn) - c2p(top);
        let mut odd = top % 2 == 1;
        for &(i, j, c) in &pairs {
            e += c * v(i) * v(j);
        }
        for &i in &special {
            e += -nn * v(i) + c2p(v(i));
            odd ^= v(i) % 2 == 1;
        }
        for i in 1..len {
            e += beta_coeff(i as i64, m).unwrap() as i64 * v(i);
        }
        Some((e, odd))
    };
    chain_sum(len, big_n - 1, Exec::Sequential, |t| qpochhammer(1 - nn, t), leaf)
}

pub fn jones_thm1(m: i64, p: i64, big_n: usize) -> Result<LaurentPoly> {
    jones_thm1_with(m, p, big_n, Exec::default())
}

/// `J_N(K(-m,-p); q)` for `m, p >= 1`.
pub fn jones_thm1_with(m: i64, p: i64, big_n: usize, exec: Exec) -> Result<LaurentPoly> {
    if m < 1 {
        return Err(Error::invalid(format!("thm1 requires m >= 1 (got m={m})")));
    }
    if p < 1 {
        return Err(Error::invalid(format!("thm1 requires p >= 1 (got p={p})")));
    }
    check_color(big_n)?;
    Ok(thm1_core(m, p, big_n - 1, big_n as i64, exec))
}

pub fn jones_thm2(m: i64, p: i64, big_n: usize) -> Result<LaurentPoly> {
    jones_thm2_with(m, p, big_n, Exec::default())
}

/// `J_N(K(-m,p); q)` for `m >= 0`, `p >= 1`.
pub fn jones_thm2_with(m: i64, p: i64, big_n: usize, exec: Exec) -> Result<LaurentPoly> {
    if m < 0 {
        return Err(Error::invalid(format!("thm2 requires m >= 0 (got m={m})")));
    }
    if p < 1 {
        return Err(Error::invalid(format!("thm2 requires p >= 1 (got p={p})")));
    }
    check_color(big_n)?;
    Ok(thm2_core(m, p, big_n - 1, big_n as i64, exec))
}

pub fn jones_torus(p: i64, big_n: usize) -> Result<LaurentPoly> {
    jones_torus_with(p, big_n, Exec::default())
}

/// `J_N(T(2,2p+1); q)` for the right-handed torus knot.
pub fn jones_torus_with(p: i64, big_n: usize, exec: Exec) -> Result<LaurentPoly> {
    if p < 1 {
        return Err(Error::invalid(format!("torus requires p >= 1 (got p={p})")));
    }
    check_color(big_n)?;
    let nn = big_n as i64;
    let len = p as usize;
    let leaf = |n: &[usize]| -> Leaf {
        let top = n[len - 1] as i64;
        let mut e = p * (1 - nn) - nn * top;
        for &x in &n[..len - 1] {
            let x = x as i64;
            e += x * (x + 1 - 2 * nn);
        }
        Some((e, false))
    };
    Ok(chain_sum(len, big_n - 1, exec, |t| qpochhammer(1 - nn, t), leaf))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn torus_anchor_values() {
        assert_eq!(jones_torus(1, 2).unwrap(), lp(&[(-1, 1), (-3, 1), (-4, -1)]));
        assert_eq!(
            jones_torus(2, 2).unwrap(),
            lp(&[(-2, 1), (-4, 1), (-5, -1), (-6, 1), (-7, -1)])
        );
        assert!(jones_torus(3, 1).unwrap().is_one());
    }

    #[test]
    fn thm2_at_m0_is_torus() {
        assert_eq!(jones_thm2(0, 1, 2).unwrap(), lp(&[(-1, 1), (-3, 1), (-4, -1)]));
        for p in 1..=3 {
            for n in 1..=6 {
                assert_eq!(jones_thm2(0, p, n).unwrap(), jones_torus(p, n).unwrap(), "p={p} N={n}");
            }
        }
    }

    #[test]
    fn single_product_form_agrees_for_positive_m() {
        for (m, p) in [(1, 1), (1, 2), (2, 1)] {
            for n in 1..=4 {
                assert_eq!(thm2_single_product(m, p, n), jones_thm2(m, p, n).unwrap());
            }
        }
    }

    #[test]
    fn single_product_form_breaks_at_m0() {
        // Counting the shared residue class once loses the torus reduction.
        assert_ne!(thm2_single_product(0, 1, 2), jones_torus(1, 2).unwrap());
    }

    #[test]
    fn normalization() {
        for m in 1..=2 {
            for p in 1..=2 {
                assert!(jones_thm1(m, p, 1).unwrap().is_one());
                assert!(jones_thm2(m, p, 1).unwrap().is_one());
                for n in 2..=4 {
                    assert_eq!(jones_thm1(m, p, n).unwrap().eval_at_one(), 1.into());
                    assert_eq!(jones_thm2(m, p, n).unwrap().eval_at_one(), 1.into());
                }
            }
        }
    }

    #[test]
    fn hypotheses_are_enforced() {
        let e = jones_thm1(0, 1, 2).unwrap_err();
        assert!(e.to_string().contains("thm1 requires m >= 1"));
        assert!(jones_thm2(-1, 1, 2).is_err());
        assert!(jones_thm2(1, 0, 2).is_err());
        assert!(jones_torus(1, 0).is_err());
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let a = jones_thm1_with(1, 2, 4, Exec::Sequential).unwrap();
        let b = jones_thm1_with(1, 2, 4, Exec::Parallel).unwrap();
        assert_eq!(a, b);
    }
}
