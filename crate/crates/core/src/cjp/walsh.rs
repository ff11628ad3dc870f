//! The unsimplified single-sum formula in the half-power variable `a`
//! (`a^2 = q`), evaluated in the fraction field and converted back at the end.

use crate::error::{Error, Result};
use crate::qalgebra::{LaurentPoly, RationalFn};

/// `{n} = a^n - a^{-n}`.
fn curly(n: i64) -> LaurentPoly {
    LaurentPoly::from_terms([(n, 1), (-n, -1)])
}

fn curly_fact(n: i64) -> LaurentPoly {
    (1..=n).map(curly).product()
}

fn rat(p: LaurentPoly) -> RationalFn {
    RationalFn::from_poly(p)
}

/// `[n] = {n} / {1}`.
fn bracket(n: i64) -> Result<RationalFn> {
    RationalFn::new(curly(n), curly(1))
}

fn bracket_fact(n: i64) -> Result<RationalFn> {
    RationalFn::new(curly_fact(n), curly(1).pow(n as u32))
}

fn div(a: &RationalFn, b: &RationalFn) -> Result<RationalFn> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(a / b)
}

/// `J_N(K(m,p); q)` for `m >= 1`, `p != 0`.
pub fn walsh_colored_jones(m: i64, p: i64, big_n: usize) -> Result<LaurentPoly> {
    if m < 1 {
        return Err(Error::invalid(format!("walsh requires m >= 1 (got m={m})")));
    }
    if p == 0 {
        return Err(Error::invalid("walsh requires p != 0"));
    }
    super::thm12::check_color(big_n)?;
    let nn = big_n as i64;
    // mu_{2k}^{x} = a^{x (2k^2 + 2k)}; the half-integer power stays integral.
    let mu_half = |k: i64| LaurentPoly::q_pow((2 * m - 1) * (k * k + k));
    let mu_p = |k: i64| LaurentPoly::q_pow(2 * p * (k * k + k));
    let a_minus = curly(1);

    let mut total = RationalFn::zero();
    for n in 0..nn {
        let ratio = div(
            &bracket_fact(nn + n)?,
            &(&bracket_fact(nn - n - 1)? * &bracket_fact(2 * n + 1)?),
        )?;
        let n_fact = bracket_fact(n)?;
        let mut c_sum = RationalFn::zero();
        let mut inner = RationalFn::zero();
        for k in 0..=n {
            let den = &bracket_fact(n + k + 1)? * &bracket_fact(n - k)?;
            let sign = if k % 2 == 1 { -1 } else { 1 };
            let c_term = &(&rat(mu_p(k).scale(&sign.into())) * &bracket(2 * k + 1)?) * &n_fact;
            c_sum = &c_sum + &div(&c_term, &den)?;
            let i_term = &bracket(2 * k + 1)? * &rat(mu_half(k));
            inner = &inner + &div(&i_term, &den)?;
        }
        let c_prime = div(&c_sum, &rat(a_minus.pow(n as u32)))?;
        let mut num = curly_fact(2 * n + 1) * curly_fact(n);
        if n % 2 == 1 {
            num = -num;
        }
        let den = a_minus.pow(2 * n as u32 + 1);
        let middle = RationalFn::new(num, den)?;
        total = &total + &(&(&(&ratio * &c_prime) * &middle) * &inner);
    }
    let pre = RationalFn::new(LaurentPoly::q_pow(2 * p * (1 - nn * nn)), LaurentPoly::one())?;
    let value = div(&(&pre * &total), &bracket(nn)?)?;
    let in_a = value
        .to_laurent()
        .ok_or_else(|| Error::consistency(format!("walsh({m},{p},{big_n}): denominator {} survives", value.den())))?;
    in_a.deflate(2)
        .ok_or_else(|| Error::consistency(format!("walsh({m},{p},{big_n}): odd power of a survives")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_color() {
        assert!(walsh_colored_jones(1, 1, 1).unwrap().is_one());
        assert!(walsh_colored_jones(2, -3, 1).unwrap().is_one());
    }

    #[test]
    fn left_trefoil() {
        let expect = LaurentPoly::from_terms([(1, 1), (3, 1), (4, -1)]);
        assert_eq!(walsh_colored_jones(1, -1, 2).unwrap(), expect);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(walsh_colored_jones(0, 1, 2).is_err());
        assert!(walsh_colored_jones(1, 0, 2).is_err());
    }
}
