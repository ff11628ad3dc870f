use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{Signed, Zero};

use super::dense;
use super::laurent::LaurentPoly;
use crate::error::{Error, Result};

/// A reduced quotient of two Laurent polynomials.
///
/// Canonical form: the denominator is an ordinary polynomial with nonzero
/// constant term, that constant term is positive, and numerator and
/// denominator share no common factor in `Z[q]` (content included).
/// Monomial factors live in the numerator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFn {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFn {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    /// `1 / p`; panics when `p` is zero.
    pub fn recip_of(p: &LaurentPoly) -> Self {
        Self::new(LaurentPoly::one(), p.clone()).expect("reciprocal of the zero polynomial")
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Lossless conversion when the reduced denominator is 1.
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        self.den.is_one().then(|| self.num.clone())
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn invert_q(&self) -> Self {
        Self::reduce(self.num.invert_q(), self.den.invert_q())
    }

    fn reduce(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (dlo, dcoeffs) = den.to_dense();
        let (nlo, ncoeffs) = num.to_dense();
        let g = dense::gcd(&ncoeffs, &dcoeffs);
        let (mut n, mut d) = if g.len() == 1 && g[0] == num_bigint::BigInt::from(1) {
            (ncoeffs, dcoeffs)
        } else {
            (
                dense::div_exact(&ncoeffs, &g).expect("gcd divides numerator"),
                dense::div_exact(&dcoeffs, &g).expect("gcd divides denominator"),
            )
        };
        // Denominator has nonzero constant term after stripping its lowest power.
        if d[0].is_negative() {
            for c in n.iter_mut().chain(d.iter_mut()) {
                *c = -std::mem::take(c);
            }
        }
        debug_assert!(!d[0].is_zero());
        Self {
            num: LaurentPoly::from_dense(nlo - dlo, n),
            den: LaurentPoly::from_dense(0, d),
        }
    }
}

impl fmt::Debug for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFn({self})")
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl From<LaurentPoly> for RationalFn {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl Add for &RationalFn {
    type Output = RationalFn;
    fn add(self, rhs: &RationalFn) -> RationalFn {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RationalFn::reduce(&self.num + &rhs.num, self.den.clone());
        }
        RationalFn::reduce(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RationalFn {
    type Output = RationalFn;
    fn sub(self, rhs: &RationalFn) -> RationalFn {
        self + &(-rhs)
    }
}

impl Neg for &RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        RationalFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &RationalFn {
    type Output = RationalFn;
    fn mul(self, rhs: &RationalFn) -> RationalFn {
        if self.is_zero() || rhs.is_zero() {
            return RationalFn::zero();
        }
        RationalFn::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RationalFn {
    type Output = RationalFn;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &RationalFn) -> RationalFn {
        self * &rhs.recip().expect("division by the zero rational function")
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for RationalFn {
            type Output = RationalFn;
            fn $m(self, rhs: RationalFn) -> RationalFn {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl Neg for RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        -&self
    }
}

impl std::iter::Sum for RationalFn {
    fn sum<I: Iterator<Item = RationalFn>>(iter: I) -> Self {
        iter.fold(RationalFn::zero(), |acc, x| &acc + &x)
    }
}

impl Zero for RationalFn {
    fn zero() -> Self {
        RationalFn::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn reduces_common_factor() {
        // (q^2 - 1) / (q - 1) = q + 1
        let r = RationalFn::new(lp(&[(2, 1), (0, -1)]), lp(&[(1, 1), (0, -1)])).unwrap();
        assert_eq!(r.to_laurent(), Some(lp(&[(1, 1), (0, 1)])));
    }

    #[test]
    fn canonical_sign_and_shift() {
        // q^3 / (-q^2 + q^3)  ->  -q / (1 - q)
        let r = RationalFn::new(lp(&[(3, 1)]), lp(&[(2, -1), (3, 1)])).unwrap();
        assert_eq!(r.den(), &lp(&[(0, 1), (1, -1)]));
        assert_eq!(r.num(), &lp(&[(1, -1)]));
    }

    #[test]
    fn content_is_reduced() {
        let r = RationalFn::new(lp(&[(0, 4)]), lp(&[(0, 6), (1, -6)])).unwrap();
        assert_eq!(r.num(), &lp(&[(0, 2)]));
        assert_eq!(r.den(), &lp(&[(0, 3), (1, -3)]));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(RationalFn::new(LaurentPoly::one(), LaurentPoly::zero()).is_err());
    }

    #[test]
    fn sum_of_fractions() {
        // 1/(1-q) - q/(1-q) = 1
        let d = lp(&[(0, 1), (1, -1)]);
        let a = RationalFn::new(LaurentPoly::one(), d.clone()).unwrap();
        let b = RationalFn::new(LaurentPoly::q_pow(1), d).unwrap();
        assert_eq!((&a - &b).to_laurent(), Some(LaurentPoly::one()));
    }
}
