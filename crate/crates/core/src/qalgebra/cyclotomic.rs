use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::dense::{self, Poly};
use super::laurent::LaurentPoly;
use crate::error::{Error, Result};

fn phi_cache() -> &'static RwLock<HashMap<u64, Arc<Poly>>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<Poly>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

pub(crate) fn divisors(n: u64) -> Vec<u64> {
    let mut ds: Vec<u64> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    ds.sort_unstable();
    ds
}

fn phi_dense(n: u64) -> Arc<Poly> {
    assert!(n >= 1, "cyclotomic polynomials are indexed from 1");
    if let Some(p) = phi_cache().read().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by every Phi_d with d | n, d < n.
    let mut p: Poly = vec![BigInt::zero(); n as usize + 1];
    p[0] = -BigInt::one();
    p[n as usize] = BigInt::one();
    for d in divisors(n).into_iter().filter(|&d| d < n) {
        p = dense::div_exact(&p, &phi_dense(d)).expect("cyclotomic recursion divides exactly");
    }
    let p = Arc::new(p);
    phi_cache().write().unwrap().insert(n, p.clone());
    p
}

/// The `n`-th cyclotomic polynomial.
pub fn cyclotomic_poly(n: u64) -> LaurentPoly {
    LaurentPoly::from_dense(0, phi_dense(n).as_ref().clone())
}

/// Euler's totient, computed as `deg Phi_n`.
pub fn euler_phi(n: u64) -> usize {
    phi_dense(n).len() - 1
}

/// An element of `Z[x] / Phi_N(x)`, i.e. of `Z[zeta_N]` for a primitive
/// `N`-th root of unity.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicElt {
    level: u64,
    coeffs: Vec<BigInt>,
}

impl CyclotomicElt {
    /// From a coefficient vector of length at most `phi(level)`; shorter
    /// vectors are zero-padded.
    pub fn new(level: u64, mut coeffs: Vec<BigInt>) -> Result<Self> {
        if level == 0 {
            return Err(Error::invalid("cyclotomic level must be positive"));
        }
        let d = euler_phi(level);
        if coeffs.len() > d {
            return Err(Error::invalid(format!(
                "cyclotomic level {level} takes {d} coefficients, got {}",
                coeffs.len()
            )));
        }
        coeffs.resize(d, BigInt::zero());
        Ok(Self { level, coeffs })
    }

    pub fn from_int<C: Into<BigInt>>(level: u64, c: C) -> Self {
        reduce_mod_phi(&LaurentPoly::constant(c), level)
    }

    pub fn zero(level: u64) -> Self {
        Self::from_int(level, 0)
    }

    pub fn one(level: u64) -> Self {
        Self::from_int(level, 1)
    }

    /// The image of `x`, i.e. `zeta_N` itself.
    pub fn zeta(level: u64) -> Self {
        reduce_mod_phi(&LaurentPoly::q_pow(1), level)
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// The canonical representative as a polynomial of degree `< phi(N)`.
    pub fn to_poly(&self) -> LaurentPoly {
        LaurentPoly::from_dense(0, self.coeffs.clone())
    }

    fn check_level(&self, other: &Self) {
        assert_eq!(
            self.level, other.level,
            "mixing cyclotomic levels {} and {}",
            self.level, other.level
        );
    }
}

impl fmt::Debug for CyclotomicElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CyclotomicElt[N={}]({})", self.level, self.to_poly())
    }
}

impl fmt::Display for CyclotomicElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod Phi_{})", self.to_poly(), self.level)
    }
}

/// Evaluation at a primitive `N`-th root of unity: exponents are folded
/// modulo `N` (as `x^N = 1`), then reduced modulo `Phi_N`.
pub fn reduce_mod_phi(f: &LaurentPoly, level: u64) -> CyclotomicElt {
    assert!(level >= 1, "cyclotomic level must be positive");
    let n = level as i64;
    let mut folded = vec![BigInt::zero(); level as usize];
    for (e, c) in f.terms() {
        folded[e.rem_euclid(n) as usize] += c;
    }
    dense::trim(&mut folded);
    let mut rem = dense::rem_monic(&folded, &phi_dense(level));
    rem.resize(euler_phi(level), BigInt::zero());
    CyclotomicElt { level, coeffs: rem }
}

/// The Galois conjugation `zeta_N -> zeta_N^{-1}`.
pub fn galois_invert(e: &CyclotomicElt) -> CyclotomicElt {
    let n = e.level;
    let p = LaurentPoly::from_dense(0, e.coeffs.clone()).subs_pow(-1);
    reduce_mod_phi(&p, n)
}

impl Add for &CyclotomicElt {
    type Output = CyclotomicElt;
    fn add(self, rhs: &CyclotomicElt) -> CyclotomicElt {
        self.check_level(rhs);
        CyclotomicElt {
            level: self.level,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &CyclotomicElt {
    type Output = CyclotomicElt;
    fn sub(self, rhs: &CyclotomicElt) -> CyclotomicElt {
        self + &(-rhs)
    }
}

impl Neg for &CyclotomicElt {
    type Output = CyclotomicElt;
    fn neg(self) -> CyclotomicElt {
        CyclotomicElt {
            level: self.level,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &CyclotomicElt {
    type Output = CyclotomicElt;
    fn mul(self, rhs: &CyclotomicElt) -> CyclotomicElt {
        self.check_level(rhs);
        let mut a = self.coeffs.clone();
        let mut b = rhs.coeffs.clone();
        dense::trim(&mut a);
        dense::trim(&mut b);
        let mut rem = dense::rem_monic(&dense::mul(&a, &b), &phi_dense(self.level));
        rem.resize(euler_phi(self.level), BigInt::zero());
        CyclotomicElt {
            level: self.level,
            coeffs: rem,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct CyclotomicJson {
    level: u64,
    coeffs: Vec<String>,
}

impl Serialize for CyclotomicElt {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CyclotomicJson {
            level: self.level,
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CyclotomicElt {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = CyclotomicJson::deserialize(d)?;
        let coeffs = raw
            .coeffs
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(D::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        if coeffs.len() != euler_phi(raw.level.max(1)) || raw.level == 0 {
            return Err(D::Error::custom("coefficient count must equal phi(level)"));
        }
        CyclotomicElt::new(raw.level, coeffs).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn small_cyclotomic_polys() {
        assert_eq!(cyclotomic_poly(1), lp(&[(1, 1), (0, -1)]));
        assert_eq!(cyclotomic_poly(4), lp(&[(2, 1), (0, 1)]));
        assert_eq!(cyclotomic_poly(6), lp(&[(2, 1), (1, -1), (0, 1)]));
        assert_eq!(cyclotomic_poly(12), lp(&[(4, 1), (2, -1), (0, 1)]));
    }

    #[test]
    fn totient_degrees() {
        let phi = |n: u64| (1..=n).filter(|k| num_integer::gcd(*k, n) == 1).count();
        for n in 1..=30 {
            assert_eq!(euler_phi(n), phi(n), "n = {n}");
        }
    }

    #[test]
    fn x_to_the_n_is_one() {
        for n in 1..=12 {
            assert_eq!(reduce_mod_phi(&LaurentPoly::q_pow(n as i64), n), CyclotomicElt::one(n));
            assert_eq!(reduce_mod_phi(&LaurentPoly::q_pow(-(n as i64)), n), CyclotomicElt::one(n));
        }
    }

    #[test]
    fn geometric_sum_vanishes_at_fourth_root() {
        let f = lp(&[(0, 1), (1, 1), (2, 1), (3, 1)]);
        assert!(reduce_mod_phi(&f, 4).is_zero());
    }

    #[test]
    fn galois_inverse_of_zeta4() {
        let z = CyclotomicElt::zeta(4);
        assert_eq!(galois_invert(&z), -&z);
        assert_eq!(galois_invert(&CyclotomicElt::from_int(4, 7)), CyclotomicElt::from_int(4, 7));
    }

    #[test]
    fn json_shape() {
        let e = reduce_mod_phi(&lp(&[(1, 3), (0, -2)]), 5);
        let s = serde_json::to_string(&e).unwrap();
        assert_eq!(s, r#"{"level":5,"coeffs":["-2","3","0","0"]}"#);
        let back: CyclotomicElt = serde_json::from_str(&s).unwrap();
        assert_eq!(back, e);
        assert!(serde_json::from_str::<CyclotomicElt>(r#"{"level":5,"coeffs":["1"]}"#).is_err());
    }
}
