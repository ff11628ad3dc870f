//! Text and JSON renderings of [`LaurentPoly`].
//!
//! Text: ascending exponents, each term `c*q^e` with the unit coefficient
//! elided, e.g. `-q^-4 + q^-3 + q^-1`. The zero polynomial is `0`.
//!
//! JSON: `{"variable":"q","terms":[[e,"c"],...]}` with ascending `e` and the
//! coefficient as a decimal string.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::laurent::LaurentPoly;
use crate::error::{Error, Result};

pub fn render(p: &LaurentPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (e, c)) in p.terms().enumerate() {
        let neg = c.is_negative();
        let mag = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if e == 0 {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&format!("q^{e}"));
        } else {
            out.push_str(&format!("{mag}*q^{e}"));
        }
    }
    out
}

/// Parses the text rendering. Also accepts `q` for `q^1`, a bare `q^e`
/// without `*`, and arbitrary whitespace.
pub fn parse(s: &str) -> Result<LaurentPoly> {
    // Whitespace may only separate a term from a sign.
    let chars: Vec<char> = s.trim().chars().collect();
    for (i, c) in chars.iter().enumerate() {
        if !c.is_whitespace() {
            continue;
        }
        let prev = chars[..i].iter().rev().find(|c| !c.is_whitespace());
        let next = chars[i..].iter().find(|c| !c.is_whitespace());
        if let (Some(a), Some(b)) = (prev, next) {
            if !matches!(a, '+' | '-') && !matches!(b, '+' | '-') {
                return Err(Error::parse(format!("unexpected whitespace in {s:?}")));
            }
        }
    }
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::parse("empty polynomial"));
    }
    let bytes = compact.as_bytes();
    let mut out = LaurentPoly::zero();
    let mut i = 0;
    while i < bytes.len() {
        let mut negative = false;
        if bytes[i] == b'+' || bytes[i] == b'-' {
            negative = bytes[i] == b'-';
            i += 1;
        } else if i != 0 {
            return Err(Error::parse(format!("expected sign at offset {i} in {s:?}")));
        }
        // Term ends at the next sign that is not an exponent sign.
        let start = i;
        while i < bytes.len() {
            let b = bytes[i];
            if (b == b'+' || b == b'-') && i > start && bytes[i - 1] != b'^' {
                break;
            }
            i += 1;
        }
        let (e, mut c) = parse_term(&compact[start..i])?;
        if negative {
            c = -c;
        }
        out.add_term(e, c);
    }
    Ok(out)
}

fn parse_term(t: &str) -> Result<(i64, BigInt)> {
    if t.is_empty() {
        return Err(Error::parse("empty term"));
    }
    let (coeff_part, var_part) = match t.find('q') {
        None => (t, None),
        Some(pos) => {
            let coeff = t[..pos].trim_end_matches('*');
            (coeff, Some(&t[pos + 1..]))
        }
    };
    let c = if coeff_part.is_empty() {
        BigInt::one()
    } else {
        coeff_part
            .parse::<BigInt>()
            .map_err(|_| Error::parse(format!("bad coefficient {coeff_part:?}")))?
    };
    let e = match var_part {
        None => 0,
        Some("") => 1,
        Some(rest) => {
            let digits = rest
                .strip_prefix('^')
                .ok_or_else(|| Error::parse(format!("expected '^' in {t:?}")))?;
            digits
                .parse::<i64>()
                .map_err(|_| Error::parse(format!("bad exponent {digits:?}")))?
        }
    };
    Ok((e, c))
}

#[derive(Serialize, Deserialize)]
struct LaurentJson {
    variable: String,
    terms: Vec<(i64, String)>,
}

impl Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        LaurentJson {
            variable: "q".to_string(),
            terms: self.terms().map(|(e, c)| (e, c.to_string())).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = LaurentJson::deserialize(d)?;
        let mut out = LaurentPoly::zero();
        let mut last: Option<i64> = None;
        for (e, c) in raw.terms {
            if last.is_some_and(|l| l >= e) {
                return Err(D::Error::custom("exponents must be strictly ascending"));
            }
            last = Some(e);
            let c: BigInt = c.parse().map_err(D::Error::custom)?;
            if c.is_zero() {
                return Err(D::Error::custom("zero coefficients are not stored"));
            }
            out.add_term(e, c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn render_trefoil() {
        let f = lp(&[(-1, 1), (-3, 1), (-4, -1)]);
        assert_eq!(render(&f), "-q^-4 + q^-3 + q^-1");
        assert_eq!(render(&LaurentPoly::one()), "1");
        assert_eq!(render(&LaurentPoly::zero()), "0");
        assert_eq!(render(&lp(&[(0, -3), (2, 12)])), "-3 + 12*q^2");
    }

    #[test]
    fn parse_variants() {
        assert_eq!(parse("-q^-4 + q^-3 + q^-1").unwrap(), lp(&[(-1, 1), (-3, 1), (-4, -1)]));
        assert_eq!(parse("q + 2q^2 - 3").unwrap(), lp(&[(1, 1), (2, 2), (0, -3)]));
        assert_eq!(parse("0").unwrap(), LaurentPoly::zero());
        assert!(parse("q^").is_err());
        assert!(parse("").is_err());
        assert!(parse("2 3").is_err());
    }

    #[test]
    fn json_shape() {
        let f = lp(&[(-1, 1), (-3, 1), (-4, -1)]);
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"{"variable":"q","terms":[[-4,"-1"],[-3,"1"],[-1,"1"]]}"#);
        assert_eq!(serde_json::from_str::<LaurentPoly>(&s).unwrap(), f);
        assert!(serde_json::from_str::<LaurentPoly>(r#"{"variable":"q","terms":[[1,"1"],[0,"1"]]}"#).is_err());
    }
}
