//! Double twist knots, their 2-bridge normal forms, and the sign/permutation
//! tables that drive the 2-bridge colored Jones formula.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The double twist knot `K(m,p)`: `2m-1` half-twists in the first region
/// and `2p` in the second, positive meaning right-handed.
///
/// `m = 0` is allowed (one left-handed half-twist); `K(0,p)` is the
/// right-handed torus knot `T(2,2p+1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KnotSpec {
    pub m: i64,
    pub p: i64,
}

/// Which of the two 2-bridge families a double twist knot falls in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TwistFamily {
    /// `b(4mp+2p-1, 4mp-1)`, whose mirror is `K(-m,-p)`.
    MinusMinus,
    /// `b(4mp+2p+1, 4mp+1)`, whose mirror is `K(-m,p)`.
    MinusPlus,
}

impl KnotSpec {
    pub fn new(m: i64, p: i64) -> Result<Self> {
        if p == 0 {
            return Err(Error::invalid("a double twist knot needs p != 0"));
        }
        Ok(Self { m, p })
    }

    /// The four sign quadrants; `m = 0` counts as non-positive.
    pub fn quadrant(&self) -> (bool, bool) {
        (self.m > 0, self.p > 0)
    }

    /// `K(-m,-p) <-> K(m+1,p)` and `K(-m,p) <-> K(m+1,-p)`.
    pub fn mirror(&self) -> Self {
        Self {
            m: 1 - self.m,
            p: -self.p,
        }
    }

    /// The 2-bridge knot `b(l,t)` together with whether this knot is its
    /// mirror image `b(l,t)*` (the form the 2-bridge formula evaluates).
    pub fn two_bridge_form(&self) -> Option<(TwoBridge, bool)> {
        // Work in the non-positive-m chart; the other chart is its mirror.
        let (k, mirrored) = if self.m <= 0 {
            (*self, true)
        } else {
            (self.mirror(), false)
        };
        let (m, p) = (-k.m, k.p.abs());
        let tb = if k.p < 0 {
            if m < 1 {
                return None;
            }
            two_bridge_params(m as u32, p as u32, TwistFamily::MinusMinus).ok()?
        } else if m == 0 {
            TwoBridge::new(2 * p as u64 + 1, 1).ok()?
        } else {
            two_bridge_params(m as u32, p as u32, TwistFamily::MinusPlus).ok()?
        };
        Some((tb, mirrored))
    }
}

impl fmt::Display for KnotSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K({},{})", self.m, self.p)
    }
}

impl FromStr for KnotSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = t
            .strip_prefix("K(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::parse(format!("expected K(m,p), got {s:?}")))?;
        let (a, b) = inner
            .split_once(',')
            .ok_or_else(|| Error::parse(format!("expected K(m,p), got {s:?}")))?;
        let m = a.parse().map_err(|_| Error::parse(format!("bad m in {s:?}")))?;
        let p = b.parse().map_err(|_| Error::parse(format!("bad p in {s:?}")))?;
        KnotSpec::new(m, p)
    }
}

pub fn mirror(k: &KnotSpec) -> KnotSpec {
    k.mirror()
}

/// A 2-bridge knot `b(l,t)`: coprime odd `l > t >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwoBridge {
    l: u64,
    t: u64,
}

impl TwoBridge {
    pub fn new(l: u64, t: u64) -> Result<Self> {
        if l.is_multiple_of(2) || t.is_multiple_of(2) {
            return Err(Error::invalid(format!("b({l},{t}): l and t must be odd")));
        }
        if !(l > t && t >= 1) {
            return Err(Error::invalid(format!("b({l},{t}): need l > t >= 1")));
        }
        if l.gcd(&t) != 1 {
            return Err(Error::invalid(format!("b({l},{t}): l and t must be coprime")));
        }
        Ok(Self { l, t })
    }

    pub fn l(&self) -> u64 {
        self.l
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    /// `(l-1)/2`, the length of the summation multi-index.
    pub fn pprime(&self) -> usize {
        ((self.l - 1) / 2) as usize
    }
}

impl fmt::Display for TwoBridge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b({},{})", self.l, self.t)
    }
}

pub fn two_bridge_params(m: u32, p: u32, family: TwistFamily) -> Result<TwoBridge> {
    if m < 1 || p < 1 {
        return Err(Error::invalid(format!(
            "two-bridge parameters need m >= 1 and p >= 1 (got m={m}, p={p})"
        )));
    }
    let (m, p) = (m as u64, p as u64);
    match family {
        TwistFamily::MinusMinus => TwoBridge::new(4 * m * p + 2 * p - 1, 4 * m * p - 1),
        TwistFamily::MinusPlus => TwoBridge::new(4 * m * p + 2 * p + 1, 4 * m * p + 1),
    }
}

/// Sign and permutation tables for `b(l,t)`. Vectors are 0-based; the
/// accessors take the 1-based indices used in the formulas.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TakataTables {
    pub sigma: Vec<i8>,
    pub ik: Vec<usize>,
    pub sigma_ik: Vec<i8>,
    pub rprime: Vec<usize>,
}

impl TakataTables {
    pub fn pprime(&self) -> usize {
        self.sigma.len()
    }

    /// `sigma_j`, 1-based.
    pub fn sigma(&self, j: usize) -> i64 {
        self.sigma[j - 1] as i64
    }

    /// `i_k`, 1-based.
    pub fn i(&self, k: usize) -> usize {
        self.ik[k - 1]
    }

    /// `sigma_{i_k}`, 1-based.
    pub fn sigma_i(&self, k: usize) -> i64 {
        self.sigma_ik[k - 1] as i64
    }

    /// `r'(j)`, 1-based.
    pub fn r_prime(&self, j: usize) -> usize {
        self.rprime[j - 1]
    }
}

/// Tables straight from the definitions: `r(j) = (2j-1)t mod 2l` taken in
/// `(-l, l)`, `sigma_j = (-1)^floor((2j-1)t/l)`, `r'(j) = (|r(j)|+1)/2`, and
/// `i` the inverse permutation of `r'`.
pub fn takata_tables_general(tb: &TwoBridge) -> Result<TakataTables> {
    let (l, t) = (tb.l as i64, tb.t as i64);
    let pp = tb.pprime();
    let mut sigma = Vec::with_capacity(pp);
    let mut rprime = Vec::with_capacity(pp);
    for j in 1..=pp as i64 {
        let x = (2 * j - 1) * t;
        let mut r = x.rem_euclid(2 * l);
        if r >= l {
            r -= 2 * l;
        }
        debug_assert!(-l < r && r < l);
        sigma.push(if (x / l) % 2 == 0 { 1 } else { -1 });
        rprime.push(((r.abs() + 1) / 2) as usize);
    }
    let mut ik = vec![0usize; pp];
    for (j0, &k) in rprime.iter().enumerate() {
        if k == 0 || k > pp || ik[k - 1] != 0 {
            return Err(Error::invalid(format!("{tb}: r' is not a permutation")));
        }
        ik[k - 1] = j0 + 1;
    }
    let sigma_ik = ik.iter().map(|&i| sigma[i - 1]).collect();
    Ok(TakataTables {
        sigma,
        ik,
        sigma_ik,
        rprime,
    })
}

/// The same tables built from the closed-form interval descriptions for the
/// two double twist families.
pub fn takata_tables_lemma(m: u32, p: u32, family: TwistFamily) -> TakataTables {
    let (m, p) = (m as i64, p as i64);
    let w = 2 * m + 1;
    let (pp, n_intervals, step, second_offset, sigma_hi, first_sign) = match family {
        TwistFamily::MinusMinus => (w * p - 1, 2 * m + 1, 2 * w * p - 1, m, m, -1),
        TwistFamily::MinusPlus => (w * p, 2 * m + 1, 2 * w * p + 1, m + 2, m + 1, 1),
    };
    let sigma: Vec<i8> = (1..=pp)
        .map(|j| {
            let r = j.rem_euclid(w);
            if (1..=sigma_hi).contains(&r) {
                1
            } else {
                -1
            }
        })
        .collect();

    // Interval c (1-based) covers k in ((c-1)p, cp]; the last minus-minus
    // interval is one shorter, which the bound on k handles.
    let interval_value = |c: i64, k: i64| -> i64 {
        let base = if c % 2 == 1 {
            w * (k - 1) + m + 1
        } else {
            w * (2 * p - k) + second_offset
        };
        let shifts = (c - 1) / 2;
        if c % 2 == 1 {
            base - shifts * step
        } else {
            base + shifts * step
        }
    };
    let mut ik = Vec::with_capacity(pp as usize);
    let mut sigma_ik = Vec::with_capacity(pp as usize);
    for k in 1..=pp {
        let c = ((k - 1) / p + 1).min(n_intervals);
        ik.push(interval_value(c, k) as usize);
        sigma_ik.push(if c % 2 == 1 { first_sign } else { -first_sign });
    }
    let mut rprime = vec![0usize; pp as usize];
    for (k0, &i) in ik.iter().enumerate() {
        if (1..=pp as usize).contains(&i) {
            rprime[i - 1] = k0 + 1;
        }
    }
    TakataTables {
        sigma,
        ik,
        sigma_ik,
        rprime,
    }
}

/// The symmetric sums `sigma_{i_k} + sigma_{i_{p'+1-k}}` and
/// `sigma_{j+1} + sigma_{p'+1-j}` of both families follow their periodic patterns.
pub fn lemma_sum_patterns_hold(m: u32, p: u32) -> bool {
    let w = 2 * m as usize + 1;
    let (mi, pi) = (m as usize, p as usize);
    let mm = takata_tables_lemma(m, p, TwistFamily::MinusMinus);
    let pp = mm.pprime();
    let mm_ok = (1..=pp).all(|k| {
        let expect = if k % pi == 0 {
            0
        } else if (k / pi) % 2 == 1 {
            2
        } else {
            -2
        };
        mm.sigma_i(k) + mm.sigma_i(pp + 1 - k) == expect
    }) && (1..pp).all(|j| mm.sigma(j + 1) + mm.sigma(pp + 1 - j) == if j % w == mi { -2 } else { 0 });
    let mp = takata_tables_lemma(m, p, TwistFamily::MinusPlus);
    let pp = mp.pprime();
    let mp_ok = (1..=pp).all(|k| {
        mp.sigma_i(k) + mp.sigma_i(pp + 1 - k) == if ((k - 1) / pi) % 2 == 0 { 2 } else { -2 }
    }) && (1..pp).all(|j| mp.sigma(j + 1) + mp.sigma(pp + 1 - j) == if j % w == 0 { 2 } else { 0 });
    mm_ok && mp_ok
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mirror_examples() {
        assert_eq!(KnotSpec::new(-1, -1).unwrap().mirror(), KnotSpec::new(2, 1).unwrap());
        assert_eq!(KnotSpec::new(-1, 2).unwrap().mirror(), KnotSpec::new(2, -2).unwrap());
        let k = KnotSpec::new(3, -2).unwrap();
        assert_eq!(mirror(&mirror(&k)), k);
    }

    #[test]
    fn knot_name_round_trip() {
        let k: KnotSpec = "K(-2,3)".parse().unwrap();
        assert_eq!(k, KnotSpec { m: -2, p: 3 });
        assert_eq!(k.to_string(), "K(-2,3)");
        assert!("K(1,0)".parse::<KnotSpec>().is_err());
        assert!("(1,2)".parse::<KnotSpec>().is_err());
    }

    #[test]
    fn two_bridge_examples() {
        let mm = two_bridge_params(1, 1, TwistFamily::MinusMinus).unwrap();
        assert_eq!((mm.l(), mm.t()), (5, 3));
        let mp = two_bridge_params(1, 1, TwistFamily::MinusPlus).unwrap();
        assert_eq!((mp.l(), mp.t()), (7, 5));
        let m2 = two_bridge_params(2, 1, TwistFamily::MinusPlus).unwrap();
        assert_eq!((m2.l(), m2.t()), (11, 9));
        for p in 1..5 {
            let tb = two_bridge_params(2, p, TwistFamily::MinusPlus).unwrap();
            assert_eq!((tb.l(), tb.t()), (10 * p as u64 + 1, 8 * p as u64 + 1));
        }
        assert!(two_bridge_params(0, 1, TwistFamily::MinusPlus).is_err());
        assert!(two_bridge_params(1, 0, TwistFamily::MinusMinus).is_err());
    }

    #[test]
    fn two_bridge_validation() {
        assert!(TwoBridge::new(6, 1).is_err());
        assert!(TwoBridge::new(9, 3).is_err());
        assert!(TwoBridge::new(3, 5).is_err());
        let tb = TwoBridge::new(7, 5).unwrap();
        assert_eq!(tb.pprime(), 3);
    }

    #[test]
    fn two_bridge_form_of_knots() {
        let (tb, mirrored) = KnotSpec::new(-1, -1).unwrap().two_bridge_form().unwrap();
        assert_eq!((tb.l(), tb.t(), mirrored), (5, 3, true));
        let (tb, mirrored) = KnotSpec::new(2, 1).unwrap().two_bridge_form().unwrap();
        assert_eq!((tb.l(), tb.t(), mirrored), (5, 3, false));
        let (tb, mirrored) = KnotSpec::new(-1, 1).unwrap().two_bridge_form().unwrap();
        assert_eq!((tb.l(), tb.t(), mirrored), (7, 5, true));
        let (tb, mirrored) = KnotSpec::new(0, 2).unwrap().two_bridge_form().unwrap();
        assert_eq!((tb.l(), tb.t(), mirrored), (5, 1, true));
        // K(0,-p) would need m = 0 in the minus-minus family.
        assert!(KnotSpec::new(0, -1).unwrap().two_bridge_form().is_none());
    }

    #[test]
    fn tables_for_5_3() {
        let t = takata_tables_general(&TwoBridge::new(5, 3).unwrap()).unwrap();
        assert_eq!(t.sigma, vec![1, -1]);
        assert_eq!(t.ik, vec![2, 1]);
        assert_eq!(t.sigma_ik, vec![-1, 1]);
    }

    #[test]
    fn tables_for_t_equal_one() {
        for l in [3u64, 5, 7, 9, 11] {
            let t = takata_tables_general(&TwoBridge::new(l, 1).unwrap()).unwrap();
            assert!(t.sigma.iter().all(|&s| s == 1));
            assert_eq!(t.ik, (1..=t.pprime()).collect::<Vec<_>>());
        }
    }

    #[test]
    fn tables_for_11_9() {
        let t = takata_tables_general(&TwoBridge::new(11, 9).unwrap()).unwrap();
        // sigma_j = 1 iff j = 1,2,3 mod 5; i_1 = 3.
        assert_eq!(t.sigma, vec![1, 1, 1, -1, -1]);
        assert_eq!(t.i(1), 3);
        assert_eq!(t, takata_tables_lemma(2, 1, TwistFamily::MinusPlus));
    }

    #[test]
    fn minus_plus_m2_closed_forms() {
        for p in 1..=4u32 {
            let t = takata_tables_lemma(2, p, TwistFamily::MinusPlus);
            for j in 1..=t.pprime() {
                assert_eq!(t.sigma(j) == 1, [1, 2, 3].contains(&(j % 5)));
            }
            for k in 1..=p as usize {
                assert_eq!(t.i(k), 5 * (k - 1) + 3);
            }
        }
    }

    #[test]
    fn inverse_permutation_property() {
        for l in (3..=31u64).step_by(2) {
            for t in (1..l).step_by(2) {
                let Ok(tb) = TwoBridge::new(l, t) else { continue };
                let tabs = takata_tables_general(&tb).unwrap();
                for j in 1..=tabs.pprime() {
                    assert_eq!(tabs.i(tabs.r_prime(j)), j);
                }
                for k in 1..=tabs.pprime() {
                    assert_eq!(tabs.sigma_i(k), tabs.sigma(tabs.i(k)));
                }
            }
        }
    }

    #[test]
    fn lemma_tables_match_general() {
        for fam in [TwistFamily::MinusMinus, TwistFamily::MinusPlus] {
            for m in 1..=4 {
                for p in 1..=4 {
                    let general = takata_tables_general(&two_bridge_params(m, p, fam).unwrap()).unwrap();
                    assert_eq!(takata_tables_lemma(m, p, fam), general, "{fam:?} m={m} p={p}");
                }
            }
        }
    }

    #[test]
    fn lemma_sum_patterns() {
        for m in 1..=4u32 {
            for p in 1..=4u32 {
                assert!(lemma_sum_patterns_hold(m, p), "m={m} p={p}");
            }
        }
    }
}
