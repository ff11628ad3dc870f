//! Dense integer polynomial kernels.
//!
//! Vectors hold coefficients in ascending degree order and are kept trimmed
//! (no trailing zeros); the empty vector is the zero polynomial.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Poly = Vec<BigInt>;

pub fn trim(p: &mut Poly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub fn mul(a: &[BigInt], b: &[BigInt]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    trim(&mut out);
    out
}

pub fn content(p: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Primitive part with positive leading coefficient.
pub fn primitive_part(p: &[BigInt]) -> Poly {
    if p.is_empty() {
        return Vec::new();
    }
    let mut c = content(p);
    if p.last().unwrap().is_negative() {
        c = -c;
    }
    p.iter().map(|x| x / &c).collect()
}

/// Exact quotient `a / b` in `Z[x]`, or `None` if `b` does not divide `a`.
pub fn div_exact(a: &[BigInt], b: &[BigInt]) -> Option<Poly> {
    assert!(!b.is_empty(), "division by the zero polynomial");
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let mut rem: Poly = a.to_vec();
    let lb = b.last().unwrap();
    let mut quot = vec![BigInt::zero(); a.len() - b.len() + 1];
    for i in (0..quot.len()).rev() {
        let top = &rem[i + b.len() - 1];
        if top.is_zero() {
            continue;
        }
        let (q, r) = top.div_rem(lb);
        if !r.is_zero() {
            return None;
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                rem[i + j] -= &q * bj;
            }
        }
        quot[i] = q;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return None;
    }
    trim(&mut quot);
    Some(quot)
}

/// Remainder of `a` modulo a monic `m`.
pub fn rem_monic(a: &[BigInt], m: &[BigInt]) -> Poly {
    assert!(m.last().is_some_and(|c| c.is_one()), "modulus must be monic");
    let dm = m.len() - 1;
    let mut rem: Poly = a.to_vec();
    trim(&mut rem);
    while rem.len() > dm {
        let top = rem.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        let base = rem.len() - dm;
        for (j, mj) in m[..dm].iter().enumerate() {
            if !mj.is_zero() {
                rem[base + j] -= &top * mj;
            }
        }
        trim(&mut rem);
    }
    rem
}

/// Pseudo-remainder of `a` by `b`: `lc(b)^k a mod b` without fractions.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Poly {
    let mut rem: Poly = a.to_vec();
    let lb = b.last().unwrap().clone();
    let db = b.len() - 1;
    while rem.len() > db && !rem.is_empty() {
        let top = rem.last().unwrap().clone();
        let shift = rem.len() - 1 - db;
        for c in rem.iter_mut() {
            *c *= &lb;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[shift + j] -= &top * bj;
        }
        trim(&mut rem);
    }
    rem
}

fn eval(p: &[BigInt], x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn max_norm(p: &[BigInt]) -> BigInt {
    p.iter().map(|c| c.abs()).max().unwrap_or_default()
}

/// Recovers a polynomial from its value at `xi` using balanced digits.
fn interpolate(mut g: BigInt, xi: &BigInt) -> Poly {
    let half = xi / 2;
    let mut out = Vec::new();
    while !g.is_zero() {
        let mut d = g.mod_floor(xi);
        if d > half {
            d -= xi;
        }
        g = (g - &d) / xi;
        out.push(d);
    }
    trim(&mut out);
    out
}

fn gcd_prs(a: &[BigInt], b: &[BigInt]) -> Poly {
    let (mut a, mut b) = if a.len() >= b.len() {
        (primitive_part(a), primitive_part(b))
    } else {
        (primitive_part(b), primitive_part(a))
    };
    while !b.is_empty() {
        let r = pseudo_rem(&a, &b);
        a = b;
        b = primitive_part(&r);
    }
    a
}

/// Heuristic gcd of two primitive polynomials via evaluation at a large
/// integer; each candidate is confirmed by exact division.
fn gcd_heuristic(a: &[BigInt], b: &[BigInt]) -> Option<Poly> {
    let bound = max_norm(a).min(max_norm(b));
    let mut xi: BigInt = bound * 2u32 + 29u32;
    for _ in 0..6 {
        let va = eval(a, &xi);
        let vb = eval(b, &xi);
        if !va.is_zero() && !vb.is_zero() {
            let g = va.gcd(&vb);
            let cand = primitive_part(&interpolate(g, &xi));
            if !cand.is_empty() && div_exact(a, &cand).is_some() && div_exact(b, &cand).is_some() {
                return Some(cand);
            }
        }
        xi = xi * 73794u32 / 27011u32 + 1u32;
    }
    None
}

/// Greatest common divisor in `Z[x]`, content included, positive leading
/// coefficient. `gcd(0, 0) = 0`.
pub fn gcd(a: &[BigInt], b: &[BigInt]) -> Poly {
    if a.is_empty() {
        return primitive_part(b)
            .into_iter()
            .map(|c| c * content(b))
            .collect();
    }
    if b.is_empty() {
        return gcd(b, a);
    }
    let c = content(a).gcd(&content(b));
    if a.len() == 1 || b.len() == 1 {
        return vec![c];
    }
    let pa = primitive_part(a);
    let pb = primitive_part(b);
    let g = if pa == pb {
        pa
    } else {
        gcd_heuristic(&pa, &pb).unwrap_or_else(|| gcd_prs(&pa, &pb))
    };
    g.into_iter().map(|x| x * &c).collect()
}
