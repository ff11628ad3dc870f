//! The general colored Jones formula for mirrored 2-bridge knots `b(l,t)*`,
//! used as an independent oracle for the double twist formulas.

use std::cmp::Ordering;
use std::sync::atomic::{AtomicBool, Ordering as AtomicOrdering};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::knots::{takata_tables_general, TakataTables, TwoBridge};
use crate::lattice::{chain_sum, Leaf};
use crate::qalgebra::{qpochhammer, LaurentPoly, RationalFn};

pub use crate::lattice::{MultiIndex, WeakChains};

/// Read access to `n_s` with `n_s = 0` for `s <= 0`.
#[derive(Clone, Copy)]
struct Nbar<'a>(&'a [usize]);

impl Nbar<'_> {
    fn n(&self, s: i64) -> i64 {
        if s <= 0 {
            0
        } else {
            self.0[(s - 1) as usize] as i64
        }
    }

    /// `n_i - n_{i-1}`.
    fn d(&self, i: i64) -> i64 {
        self.n(i) - self.n(i - 1)
    }
}

/// Exponent data for one multi-index, in half units where needed.
struct Exponents {
    a_twice: i64,
    /// `2(a + b_1)`: everything in `b_1` except the leading `-a`.
    b1_rest_twice: i64,
    b2: i64,
}

fn exponents(tb: &TwoBridge, tabs: &TakataTables, nb: Nbar<'_>) -> Result<Exponents> {
    let pp = tabs.pprime() as i64;
    let (l, t) = (tb.l() as i64, tb.t() as i64);
    let sigma = |j: i64| tabs.sigma(j as usize);
    let sigma_i = |k: i64| tabs.sigma_i(k as usize);
    let ik = |k: i64| tabs.i(k as usize) as i64;

    let mut a2 = 0;
    for j in 1..=pp {
        let rp = tabs.r_prime(j as usize) as i64;
        let s: i64 = (rp..=pp).map(|k| sigma_i(k) + sigma_i(pp + 1 - k)).sum();
        a2 -= s * nb.d(j);
    }
    for j in 1..pp {
        a2 -= (sigma(j + 1) + sigma(pp + 1 - j)) * nb.n(j);
    }
    a2 -= (sigma(pp) + 1) * nb.n(pp);
    a2 -= 2 * (1..=pp).map(sigma).sum::<i64>();

    let h = (l - t) / 2;
    let mut r2 = 0;
    for k in 1..=h {
        r2 += (1 - sigma_i(k)) * nb.n(ik(k) - 1);
    }
    for k in h + 1..=pp {
        r2 -= 2 * nb.n(ik(k) - 1);
        r2 += (1 + sigma_i(k)) * nb.n(ik(k));
    }
    r2 -= 2 * (1 + sigma(pp)) * nb.n(pp);
    for j in 1..pp {
        r2 += (sigma(j + 1) - sigma(j)) * nb.n(j);
    }
    for k in 1..pp {
        for k2 in k + 1..=pp {
            if ik(k) > ik(k2) {
                r2 -= (sigma_i(k) - sigma_i(k2)) * nb.d(ik(k)) * nb.d(ik(k2));
            }
        }
    }
    for j in 1..=pp {
        let rp = tabs.r_prime(j as usize) as i64;
        let inner: i64 = (1..=rp).map(|k| nb.d(ik(k))).sum();
        r2 += 2 * sigma(j) * inner * nb.n(j - 1);
    }

    let b2 = match l.cmp(&(2 * t)) {
        Ordering::Less => ((l - t) / 2 + 1..=(t - 1) / 2)
            .map(|k| (1 + sigma_i(k)) / 2 * nb.n(ik(k) - 1))
            .sum(),
        Ordering::Greater => -((t + 1) / 2 + 1..=(l - t) / 2)
            .map(|k| (1 + sigma_i(k)) / 2 * nb.n(ik(k) - 1))
            .sum::<i64>(),
        Ordering::Equal => return Err(Error::invalid(format!("{tb}: l = 2t has no b2"))),
    };
    Ok(Exponents {
        a_twice: a2,
        b1_rest_twice: r2,
        b2,
    })
}

/// The exponent `a(n)` scaled by 2 (it is a half-integer in general).
pub fn takata_a_twice(tb: &TwoBridge, tabs: &TakataTables, nbar: &MultiIndex) -> Result<i64> {
    check_len(tabs, nbar)?;
    Ok(exponents(tb, tabs, Nbar(nbar.values()))?.a_twice)
}

/// `a(n)` when it is an integer.
pub fn takata_a(tb: &TwoBridge, tabs: &TakataTables, nbar: &MultiIndex) -> Result<Option<i64>> {
    let a2 = takata_a_twice(tb, tabs, nbar)?;
    Ok((a2 % 2 == 0).then_some(a2 / 2))
}

/// Closed form of `a(n)` for `l = 10p+1`, `t = 8p+1`:
/// `-sum_{j<=p} n_{5j-2} - sum_{j<p} n_{5j} - p`.
///
/// The regrouped sum it comes from evaluates to `-n_{5j-2}` per block; the
/// variant with a positive sign on that term disagrees with the raw
/// definition (see [`takata_a_closed_m2_plus_variant`]).
pub fn takata_a_closed_m2(p: usize, nbar: &MultiIndex) -> Result<i64> {
    let (plus, minus) = closed_m2_parts(p, nbar)?;
    Ok(-plus - minus - p as i64)
}

/// The variant `+sum n_{5j-2} - sum n_{5j} - p`, kept as a negative control.
pub fn takata_a_closed_m2_plus_variant(p: usize, nbar: &MultiIndex) -> Result<i64> {
    let (plus, minus) = closed_m2_parts(p, nbar)?;
    Ok(plus - minus - p as i64)
}

fn closed_m2_parts(p: usize, nbar: &MultiIndex) -> Result<(i64, i64)> {
    if p < 1 || nbar.len() != 5 * p {
        return Err(Error::invalid(format!(
            "expected a multi-index of length {}, got {}",
            5 * p,
            nbar.len()
        )));
    }
    let n = |s: usize| nbar.get(s as i64) as i64;
    let a: i64 = (1..=p).map(|j| n(5 * j - 2)).sum();
    let b: i64 = (1..p).map(|j| n(5 * j)).sum();
    Ok((a, b))
}

fn check_len(tabs: &TakataTables, nbar: &MultiIndex) -> Result<()> {
    if nbar.len() != tabs.pprime() {
        return Err(Error::invalid(format!(
            "multi-index has length {}, expected {}",
            nbar.len(),
            tabs.pprime()
        )));
    }
    Ok(())
}

/// Exponent and sign of the monomial part of one summand: everything except
/// `(q^{N-n})_n` and the Gaussian binomials.
fn leaf_weight(tb: &TwoBridge, tabs: &TakataTables, big_n: i64, n: &[usize]) -> Result<(i64, bool)> {
    let nb = Nbar(n);
    let pp = tabs.pprime() as i64;
    let ex = exponents(tb, tabs, nb)?;
    let twice = ex.a_twice * (big_n - 1) + ex.b1_rest_twice;
    if twice % 2 != 0 {
        return Err(Error::consistency(format!(
            "{tb}: half-integral exponent at n = {n:?}"
        )));
    }
    let mut e = twice / 2 + ex.b2;
    if tabs.sigma(pp as usize) == -1 {
        e -= big_n * nb.n(pp);
    }
    let mut odd = nb.n(pp) % 2 == 1;
    for j in 1..=pp {
        let d = nb.d(j);
        if tabs.sigma(j as usize) == 1 {
            e += d * (d + 1) / 2;
        } else if d % 2 == 1 {
            odd = !odd;
        }
    }
    Ok((e, odd))
}

/// The summand `X(n)` in literal form, built in the fraction field.
pub fn x_factor_literal(tabs: &TakataTables, big_n: usize, nbar: &MultiIndex) -> Result<RationalFn> {
    check_len(tabs, nbar)?;
    let nb = Nbar(nbar.values());
    let pp = tabs.pprime() as i64;
    let top = nb.n(pp) as usize;
    if top + 1 > big_n {
        return Err(Error::invalid("multi-index exceeds N-1"));
    }
    let mut num = qpochhammer(1, big_n - 1) * qpochhammer(1, top);
    let mut den = qpochhammer(1, big_n - top - 1);
    if top % 2 == 1 {
        num = -num;
    }
    if tabs.sigma(pp as usize) == -1 {
        num = num.shift(-(big_n as i64) * top as i64);
    }
    for j in 1..=pp {
        let d = nb.d(j);
        if tabs.sigma(j as usize) == 1 {
            num = num.shift(d * (d + 1) / 2);
        } else if d % 2 == 1 {
            num = -num;
        }
        den = den * qpochhammer(1, d as usize);
    }
    RationalFn::new(num, den)
}

/// The division-free form of `X(n)`:
/// `(-1)^{n_top} q^kappa (q^{N-n_top})_{n_top} prod [n_j; n_{j-1}] prod tau(j)`.
pub fn x_factor(tabs: &TakataTables, big_n: usize, nbar: &MultiIndex) -> Result<LaurentPoly> {
    check_len(tabs, nbar)?;
    let v = nbar.values();
    let pp = tabs.pprime();
    let top = nbar.top();
    let mut acc = qpochhammer((big_n - top) as i64, top);
    for j in 1..pp {
        acc = acc * crate::qalgebra::qbinomial(v[j] as i64, v[j - 1] as i64);
    }
    let nb = Nbar(v);
    let mut e = 0;
    let mut odd = top % 2 == 1;
    if tabs.sigma(pp) == -1 {
        e -= (big_n * top) as i64;
    }
    for j in 1..=pp as i64 {
        let d = nb.d(j);
        if tabs.sigma(j as usize) == 1 {
            e += d * (d + 1) / 2;
        } else if d % 2 == 1 {
            odd = !odd;
        }
    }
    Ok(acc.shift_signed(e, odd))
}

pub fn takata_colored_jones(tb: &TwoBridge, big_n: usize) -> Result<LaurentPoly> {
    takata_colored_jones_with(tb, big_n, Exec::default())
}

/// `J_N(b(l,t)*; q)`.
pub fn takata_colored_jones_with(tb: &TwoBridge, big_n: usize, exec: Exec) -> Result<LaurentPoly> {
    if big_n < 1 {
        return Err(Error::invalid("the color N must be at least 1"));
    }
    let tabs = takata_tables_general(tb)?;
    let pp = tabs.pprime();
    let failed = AtomicBool::new(false);
    let head = |t: usize| qpochhammer((big_n - t) as i64, t);
    let leaf = |n: &[usize]| -> Leaf {
        match leaf_weight(tb, &tabs, big_n as i64, n) {
            Ok(w) => Some(w),
            Err(_) => {
                failed.store(true, AtomicOrdering::Relaxed);
                None
            }
        }
    };
    let total = chain_sum(pp, big_n - 1, exec, head, leaf);
    if failed.load(AtomicOrdering::Relaxed) {
        return Err(Error::consistency(format!(
            "{tb}: a summand exponent is not an integer"
        )));
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knots::{two_bridge_params, TwistFamily};
    use rand::{Rng, SeedableRng};

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn color_one_is_trivial() {
        for l in (3..=31u64).step_by(2) {
            for t in (1..l).step_by(2) {
                if let Ok(tb) = TwoBridge::new(l, t) {
                    assert!(takata_colored_jones(&tb, 1).unwrap().is_one(), "{tb}");
                }
            }
        }
    }

    #[test]
    fn right_trefoil() {
        // b(3,1)* is the right-handed trefoil.
        let j = takata_colored_jones(&TwoBridge::new(3, 1).unwrap(), 2).unwrap();
        assert_eq!(j, lp(&[(-1, 1), (-3, 1), (-4, -1)]));
    }

    #[test]
    fn value_at_one() {
        for (l, t) in [(5, 3), (7, 5), (7, 3), (9, 7), (11, 9), (13, 5)] {
            let tb = TwoBridge::new(l, t).unwrap();
            for n in 1..=4 {
                let j = takata_colored_jones(&tb, n).unwrap();
                assert_eq!(j.eval_at_one(), 1.into(), "{tb} N={n}");
            }
        }
    }

    #[test]
    fn rewrite_matches_literal_x() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for (l, t) in [(5u64, 3u64), (7, 5), (9, 7), (11, 9), (13, 5)] {
            let tb = TwoBridge::new(l, t).unwrap();
            let tabs = takata_tables_general(&tb).unwrap();
            for _ in 0..10 {
                let big_n = rng.gen_range(1..=5usize);
                let mut v: Vec<usize> = (0..tabs.pprime()).map(|_| rng.gen_range(0..big_n)).collect();
                v.sort();
                let nbar = MultiIndex::new(v).unwrap();
                let lit = x_factor_literal(&tabs, big_n, &nbar).unwrap();
                let fast = x_factor(&tabs, big_n, &nbar).unwrap();
                assert_eq!(lit.to_laurent(), Some(fast), "{tb} {nbar:?}");
            }
        }
    }

    #[test]
    fn closed_form_examples() {
        let zero = MultiIndex::new(vec![0; 5]).unwrap();
        assert_eq!(takata_a_closed_m2(1, &zero).unwrap(), -1);
        let v = MultiIndex::new(vec![0, 0, 1, 1, 1]).unwrap();
        assert_eq!(takata_a_closed_m2(1, &v).unwrap(), -2);
        assert_eq!(takata_a_closed_m2_plus_variant(1, &v).unwrap(), 0);
        assert!(takata_a_closed_m2(2, &v).is_err());
    }

    #[test]
    fn closed_form_matches_raw() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        for p in 1..=3u32 {
            let tb = two_bridge_params(2, p, TwistFamily::MinusPlus).unwrap();
            let tabs = takata_tables_general(&tb).unwrap();
            for _ in 0..20 {
                let mut v: Vec<usize> = (0..5 * p as usize).map(|_| rng.gen_range(0..6)).collect();
                v.sort();
                let nbar = MultiIndex::new(v).unwrap();
                let raw = takata_a(&tb, &tabs, &nbar).unwrap();
                assert_eq!(raw, Some(takata_a_closed_m2(p as usize, &nbar).unwrap()));
            }
        }
    }

    #[test]
    fn plus_variant_disagrees_when_n_5j_minus_2_is_nonzero() {
        let tb = two_bridge_params(2, 1, TwistFamily::MinusPlus).unwrap();
        let tabs = takata_tables_general(&tb).unwrap();
        let nbar = MultiIndex::new(vec![0, 0, 1, 1, 1]).unwrap();
        assert_eq!(takata_a(&tb, &tabs, &nbar).unwrap(), Some(-2));
        assert_ne!(takata_a_closed_m2_plus_variant(1, &nbar).unwrap(), -2);
    }

    #[test]
    fn rejects_zero_color() {
        assert!(takata_colored_jones(&TwoBridge::new(5, 3).unwrap(), 0).is_err());
    }
}
