//! Sign coefficients of the quadratic and linear forms in the
//! `K(-m,-p)` and `K(-m,p)` sums.

use crate::error::{Error, Result};

fn residue(i: i64, m: i64) -> i64 {
    i.rem_euclid(2 * m + 1)
}

/// `epsilon_{i,j,m}`; defined for `1 <= i < j`, `(2m+1) !| i`, `j !== m`.
pub fn epsilon(i: i64, j: i64, m: i64) -> Result<i8> {
    if m < 1 || i < 1 || i >= j || residue(i, m) == 0 || residue(j, m) == m {
        return Err(Error::invalid(format!("epsilon({i},{j},{m}) is out of domain")));
    }
    let rj = residue(j, m);
    Ok(if rj == residue(-i, m) || rj == residue(-i - 1, m) {
        1
    } else if rj == residue(i, m) || rj == residue(i - 1, m) {
        -1
    } else {
        0
    })
}

/// `gamma_{i,m}` for `i >= 1`.
pub fn gamma(i: i64, m: i64) -> Result<i8> {
    if m < 1 || i < 1 {
        return Err(Error::invalid(format!("gamma({i},{m}) is out of domain")));
    }
    let r = residue(i, m);
    Ok(if (1..m).contains(&r) {
        1
    } else if r == m {
        0
    } else {
        -1
    })
}

/// `Delta_{i,j,m}`; defined for `1 <= i < j`, `(2m+1) !| i`, `j !== m+1`.
pub fn delta_coeff(i: i64, j: i64, m: i64) -> Result<i8> {
    if m < 0 || i < 1 || i >= j || residue(i, m) == 0 || residue(j, m) == residue(m + 1, m) {
        return Err(Error::invalid(format!("delta({i},{j},{m}) is out of domain")));
    }
    let rj = residue(j, m);
    Ok(if rj == residue(-i, m) || rj == residue(-i + 1, m) {
        1
    } else if rj == residue(i, m) || rj == residue(i + 1, m) {
        -1
    } else {
        0
    })
}

/// `beta_{i,m}`, with `beta_{i,0} = 0`.
pub fn beta_coeff(i: i64, m: i64) -> Result<i8> {
    if m < 0 || i < 1 {
        return Err(Error::invalid(format!("beta({i},{m}) is out of domain")));
    }
    if m == 0 {
        return Ok(0);
    }
    let r = residue(i, m);
    Ok(if r == 0 {
        0
    } else if r <= m {
        1
    } else {
        -1
    })
}

/// Nonzero `epsilon_{i,j,m} n_i n_j` terms for a sum of length `len`.
pub(crate) fn epsilon_pairs(m: i64, len: i64) -> Vec<(usize, usize, i64)> {
    let mut out = Vec::new();
    for j in 2..=len {
        for i in 1..j {
            if let Ok(e) = epsilon(i, j, m) {
                if e != 0 {
                    out.push((i as usize, j as usize, e as i64));
                }
            }
        }
    }
    out
}

/// Nonzero `Delta_{i,j,m} n_i n_j` terms for a sum of length `len`.
pub(crate) fn delta_pairs(m: i64, len: i64) -> Vec<(usize, usize, i64)> {
    let mut out = Vec::new();
    for j in 2..=len {
        for i in 1..j {
            if let Ok(e) = delta_coeff(i, j, m) {
                if e != 0 {
                    out.push((i as usize, j as usize, e as i64));
                }
            }
        }
    }
    out
}
