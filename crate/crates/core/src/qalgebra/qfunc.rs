use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use super::laurent::LaurentPoly;
use crate::error::{Error, Result};

/// `(q^c; q)_n = prod_{k=0}^{n-1} (1 - q^{c+k})`; the empty product is 1.
pub fn qpochhammer(c: i64, n: usize) -> LaurentPoly {
    let mut acc = LaurentPoly::one();
    for k in 0..n as i64 {
        let factor = LaurentPoly::from_terms([(0, 1), (c + k, -1)]);
        acc = &acc * &factor;
        if acc.is_zero() {
            break;
        }
    }
    acc
}

/// `(a; q)_n` for an arbitrary Laurent polynomial `a`.
pub fn qpochhammer_general(a: &LaurentPoly, n: usize) -> LaurentPoly {
    let mut acc = LaurentPoly::one();
    for k in 0..n as i64 {
        let factor = &LaurentPoly::one() - &a.shift(k);
        acc = &acc * &factor;
    }
    acc
}

type BinomTable = RwLock<HashMap<(u32, u32), Arc<LaurentPoly>>>;

fn binom_table() -> &'static BinomTable {
    static TABLE: OnceLock<BinomTable> = OnceLock::new();
    TABLE.get_or_init(Default::default)
}

/// Shared handle to the memoized Gaussian binomial `[n choose k]_q`.
///
/// Built by the q-Pascal rule `[n,k] = [n-1,k-1] + q^k [n-1,k]`; no division.
/// The memo table sits behind a lock so concurrent callers only ever see
/// finished entries.
pub fn qbinomial_shared(n: u32, k: u32) -> Arc<LaurentPoly> {
    if k > n {
        return Arc::new(LaurentPoly::zero());
    }
    let k = k.min(n - k);
    if k == 0 {
        return Arc::new(LaurentPoly::one());
    }
    if let Some(p) = binom_table().read().unwrap().get(&(n, k)).cloned() {
        return p;
    }
    let a = qbinomial_shared(n - 1, k - 1);
    let b = qbinomial_shared(n - 1, k);
    let v = Arc::new(&*a + &b.shift(k as i64));
    binom_table()
        .write()
        .unwrap()
        .entry((n, k))
        .or_insert(v)
        .clone()
}

/// Gaussian binomial `[n choose k]_q`; zero outside `0 <= k <= n`.
pub fn qbinomial(n: i64, k: i64) -> LaurentPoly {
    if n < 0 || k < 0 || k > n {
        return LaurentPoly::zero();
    }
    qbinomial_shared(n as u32, k as u32).as_ref().clone()
}

/// `(q)_n / prod (q)_{part}` as a product of Gaussian binomials.
pub fn qmultinomial(n: u32, parts: &[u32]) -> Result<LaurentPoly> {
    let total: u64 = parts.iter().map(|&x| x as u64).sum();
    if total != n as u64 {
        return Err(Error::invalid(format!(
            "multinomial parts sum to {total}, expected {n}"
        )));
    }
    let mut acc = LaurentPoly::one();
    let mut running = 0u32;
    for &part in parts {
        running += part;
        if part > 0 && part < running {
            acc = &acc * &*qbinomial_shared(running, part);
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(qpochhammer(1, 2), lp(&[(0, 1), (1, -1), (2, -1), (3, 1)]));
        assert_eq!(qpochhammer(-5, 0), LaurentPoly::one());
        assert_eq!(qpochhammer(-1, 1), lp(&[(0, 1), (-1, -1)]));
        // (q^{1-N})_N contains the factor 1 - q^0.
        for n in 1..6 {
            assert!(qpochhammer(1 - n, n as usize).is_zero());
        }
    }

    #[test]
    fn general_pochhammer_agrees() {
        for c in -3..4 {
            for n in 0..5 {
                assert_eq!(qpochhammer_general(&LaurentPoly::q_pow(c), n), qpochhammer(c, n));
            }
        }
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(qbinomial(4, 2), lp(&[(0, 1), (1, 1), (2, 2), (3, 1), (4, 1)]));
        assert_eq!(qbinomial(0, 0), LaurentPoly::one());
        assert!(qbinomial(3, 4).is_zero());
        assert!(qbinomial(3, -1).is_zero());
        for n in 0..=12 {
            for k in 0..=n {
                assert_eq!(qbinomial(n, k), qbinomial(n, n - k));
            }
        }
    }

    #[test]
    fn binomial_shape() {
        for n in 0..=15i64 {
            for k in 0..=n {
                let b = qbinomial(n, k);
                assert!(b.terms().all(|(_, c)| c.sign() == num_bigint::Sign::Plus));
                assert_eq!(b.min_exp(), Some(0));
                assert_eq!(b.max_exp(), Some(k * (n - k)));
                assert_eq!(b, b.invert_q().shift(k * (n - k)), "palindromic");
            }
        }
    }

    #[test]
    fn pochhammer_shape() {
        for n in 0..10usize {
            let p = qpochhammer(1, n);
            assert_eq!(p.max_exp(), Some((n * (n + 1) / 2) as i64));
            assert_eq!(p.min_exp(), Some(0));
            assert_eq!(p.coeff(0), 1.into());
        }
    }

    #[test]
    fn binomial_times_pochhammers_is_pochhammer() {
        for n in 0..9usize {
            for k in 0..=n {
                let lhs = &(&qbinomial(n as i64, k as i64) * &qpochhammer(1, k)) * &qpochhammer(1, n - k);
                assert_eq!(lhs, qpochhammer(1, n));
            }
        }
    }

    #[test]
    fn multinomial_examples() {
        assert_eq!(qmultinomial(2, &[1, 1]).unwrap(), lp(&[(0, 1), (1, 1)]));
        assert_eq!(qmultinomial(5, &[5]).unwrap(), LaurentPoly::one());
        let expect = &lp(&[(0, 1), (1, 1)]) * &lp(&[(0, 1), (1, 1), (2, 1)]);
        assert_eq!(qmultinomial(3, &[1, 1, 1]).unwrap(), expect);
        assert!(qmultinomial(3, &[1, 1]).is_err());
    }
}
