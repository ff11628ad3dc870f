//! Bailey pairs relative to `a = q`, the `rho -> infinity` chain step and the
//! two iterated families built from it.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::cjp::{c_poly, dd_poly};
use crate::error::{Error, Result};
use crate::qalgebra::{qpochhammer, qpochhammer_general, LaurentPoly, RationalFn};

type Seq = Arc<dyn Fn(usize) -> RationalFn + Send + Sync>;

/// A memoized sequence `n -> RationalFn`.
#[derive(Clone)]
struct Memo {
    f: Seq,
    cache: Arc<Mutex<HashMap<usize, RationalFn>>>,
}

impl Memo {
    fn new(f: impl Fn(usize) -> RationalFn + Send + Sync + 'static) -> Self {
        Self { f: Arc::new(f), cache: Arc::default() }
    }

    fn get(&self, n: usize) -> RationalFn {
        if let Some(v) = self.cache.lock().unwrap().get(&n) {
            return v.clone();
        }
        // Computed outside the lock: f may recurse into other memos.
        let v = (self.f)(n);
        self.cache.lock().unwrap().insert(n, v.clone());
        v
    }
}

#[derive(Clone)]
pub struct BaileyPair {
    a: LaurentPoly,
    alpha: Memo,
    beta: Memo,
    tag: String,
}

impl BaileyPair {
    pub fn new(
        a: LaurentPoly,
        alpha: impl Fn(usize) -> RationalFn + Send + Sync + 'static,
        beta: impl Fn(usize) -> RationalFn + Send + Sync + 'static,
        tag: impl Into<String>,
    ) -> Self {
        Self { a, alpha: Memo::new(alpha), beta: Memo::new(beta), tag: tag.into() }
    }

    pub fn a(&self) -> &LaurentPoly {
        &self.a
    }

    pub fn alpha(&self, n: usize) -> RationalFn {
        self.alpha.get(n)
    }

    pub fn beta(&self, n: usize) -> RationalFn {
        self.beta.get(n)
    }

    pub fn tag(&self) -> &str {
        &self.tag
    }
}

impl fmt::Debug for BaileyPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BaileyPair").field("a", &self.a).field("tag", &self.tag).finish()
    }
}

fn ratio(num: LaurentPoly, den: LaurentPoly) -> RationalFn {
    RationalFn::new(num, den).expect("nonzero denominator")
}

/// `(1 - q^{2n+1}) / (1 - q)`.
fn odd_ratio(n: usize) -> LaurentPoly {
    (0..=2 * n as i64).map(LaurentPoly::q_pow).sum()
}

fn sign(n: usize) -> bool {
    n % 2 == 1
}

/// `alpha_n = (-1)^n q^{n(3n+1)/2} (1-q^{2n+1})/(1-q)`, `beta_n = 1/(q)_n`.
pub fn slater_pair() -> BaileyPair {
    BaileyPair::new(
        LaurentPoly::q_pow(1),
        |n| {
            let ni = n as i64;
            odd_ratio(n).shift_signed(ni * (3 * ni + 1) / 2, sign(n)).into()
        },
        |n| RationalFn::recip_of(&qpochhammer(1, n)),
        "slater",
    )
}

/// `alpha_n = q^{n^2} (1-q^{2n+1})/(1-q)`, `beta_n = 1/(q)_n^2`.
pub fn walsh_pair() -> BaileyPair {
    BaileyPair::new(
        LaurentPoly::q_pow(1),
        |n| odd_ratio(n).shift((n * n) as i64).into(),
        |n| RationalFn::recip_of(&qpochhammer(1, n).pow(2)),
        "walsh",
    )
}

/// The Slater `alpha` with `beta_n = 1/(q)_{n+1}`; not a Bailey pair.
pub fn perturbed_pair() -> BaileyPair {
    let s = slater_pair();
    BaileyPair::new(
        LaurentPoly::q_pow(1),
        move |n| s.alpha(n),
        |n| RationalFn::recip_of(&qpochhammer(1, n + 1)),
        "perturbed",
    )
}

/// `(a q^{c}; q)_n`.
fn a_poch(a: &LaurentPoly, c: i64, n: usize) -> LaurentPoly {
    qpochhammer_general(&a.shift(c), n)
}

/// The defining relation, cleared of denominators, for `0 <= n <= n_max`:
/// `beta_n (q)_n (aq)_{2n} = sum_k alpha_k (q^{n-k+1})_k (a q^{n+k+1})_{n-k}`.
pub fn verify_bailey_pair(bp: &BaileyPair, n_max: usize) -> bool {
    (0..=n_max).all(|n| {
        let lhs = &bp.beta(n) * &RationalFn::from_poly(qpochhammer(1, n) * a_poch(&bp.a, 1, 2 * n));
        let rhs: RationalFn = (0..=n)
            .map(|k| {
                let w = qpochhammer((n - k + 1) as i64, k) * a_poch(&bp.a, (n + k + 1) as i64, n - k);
                &bp.alpha(k) * &RationalFn::from_poly(w)
            })
            .sum();
        (&lhs - &rhs).is_zero()
    })
}

fn require_a_is_q(bp: &BaileyPair) -> Result<()> {
    if bp.a != LaurentPoly::q_pow(1) {
        return Err(Error::invalid(format!("the chain step needs a = q (got a = {})", bp.a)));
    }
    Ok(())
}

/// One step of the chain with `rho_1, rho_2 -> infinity`:
/// `alpha'_n = a^n q^{n^2} alpha_n`,
/// `beta'_n = sum_k a^k q^{k^2} beta_k / (q)_{n-k}`.
pub fn bailey_step_limit(bp: &BaileyPair) -> Result<BaileyPair> {
    require_a_is_q(bp)?;
    let (pa, pb) = (bp.clone(), bp.clone());
    Ok(BaileyPair::new(
        bp.a.clone(),
        move |n| {
            let ni = n as i64;
            &pa.alpha(n) * &LaurentPoly::q_pow(ni + ni * ni).into()
        },
        move |n| {
            (0..=n)
                .map(|k| {
                    let ki = k as i64;
                    let w = ratio(LaurentPoly::q_pow(ki + ki * ki), qpochhammer(1, n - k));
                    &pb.beta(k) * &w
                })
                .sum()
        },
        format!("{}+", bp.tag),
    ))
}

/// One step of the chain at finite `rho_1 = -q^{r1}`, `rho_2 = -q^{r2}`:
/// `alpha'_n = (rho1)_n (rho2)_n (aq/rho1rho2)^n alpha_n / ((aq/rho1)_n (aq/rho2)_n)`,
/// `beta'_n = sum_k (rho1)_k (rho2)_k (aq/rho1rho2)_{n-k} (aq/rho1rho2)^k beta_k
///            / ((q)_{n-k} (aq/rho1)_n (aq/rho2)_n)`.
pub fn bailey_step(bp: &BaileyPair, r1: i64, r2: i64) -> Result<BaileyPair> {
    require_a_is_q(bp)?;
    let rho1 = LaurentPoly::monomial(-1, r1);
    let rho2 = LaurentPoly::monomial(-1, r2);
    // a q / rho_i with a = q.
    let aq_r1 = LaurentPoly::monomial(-1, 2 - r1);
    let aq_r2 = LaurentPoly::monomial(-1, 2 - r2);
    let aq_r12 = LaurentPoly::q_pow(2 - r1 - r2);
    if (0..16).any(|n| qpochhammer_general(&aq_r1, n).is_zero() || qpochhammer_general(&aq_r2, n).is_zero()) {
        return Err(Error::invalid("rho makes (aq/rho)_n vanish"));
    }
    let den = {
        let (a1, a2) = (aq_r1.clone(), aq_r2.clone());
        move |n: usize| qpochhammer_general(&a1, n) * qpochhammer_general(&a2, n)
    };
    let (pa, pb) = (bp.clone(), bp.clone());
    let (r1a, r2a, r12a, den_a) = (rho1.clone(), rho2.clone(), aq_r12.clone(), den.clone());
    Ok(BaileyPair::new(
        bp.a.clone(),
        move |n| {
            let num = qpochhammer_general(&r1a, n) * qpochhammer_general(&r2a, n) * r12a.pow(n as u32);
            &pa.alpha(n) * &ratio(num, den_a(n))
        },
        move |n| {
            let s: RationalFn = (0..=n)
                .map(|k| {
                    let num = qpochhammer_general(&rho1, k)
                        * qpochhammer_general(&rho2, k)
                        * qpochhammer_general(&aq_r12, n - k)
                        * aq_r12.pow(k as u32);
                    &pb.beta(k) * &ratio(num, qpochhammer(1, n - k))
                })
                .sum();
            &s * &RationalFn::recip_of(&den(n))
        },
        format!("{}+rho({r1},{r2})", bp.tag),
    ))
}

fn check_p(p: i64) -> Result<()> {
    if p < 1 {
        return Err(Error::invalid(format!("iterated pairs require p >= 1 (got p={p})")));
    }
    Ok(())
}

/// `alpha_n^{(p)} = (-1)^n q^{n(n-1)/2 + p(n^2+n)} (1-q^{2n+1})/(1-q)`,
/// `beta_n^{(p)} = c_{p,n} / (q)_n`.
pub fn iterated_pair_slater(p: i64) -> Result<BaileyPair> {
    check_p(p)?;
    Ok(BaileyPair::new(
        LaurentPoly::q_pow(1),
        move |n| {
            let ni = n as i64;
            odd_ratio(n).shift_signed(ni * (ni - 1) / 2 + p * (ni * ni + ni), sign(n)).into()
        },
        move |n| ratio(c_poly(p, n).expect("p >= 1"), qpochhammer(1, n)),
        format!("slater^{p}"),
    ))
}

/// `alpha_n^{(p)} = q^{pn^2 + (p-1)n} (1-q^{2n+1})/(1-q)`,
/// `beta_n^{(p)} = d_{p,n} / (q)_n`.
pub fn iterated_pair_walsh(p: i64) -> Result<BaileyPair> {
    check_p(p)?;
    Ok(BaileyPair::new(
        LaurentPoly::q_pow(1),
        move |n| {
            let ni = n as i64;
            odd_ratio(n).shift(p * ni * ni + (p - 1) * ni).into()
        },
        move |n| ratio(dd_poly(p, n).expect("p >= 1"), qpochhammer(1, n).pow(2)),
        format!("walsh^{p}"),
    ))
}

/// Applies [`bailey_step_limit`] `times` times.
pub fn iterate_limit(bp: &BaileyPair, times: usize) -> Result<BaileyPair> {
    let mut cur = bp.clone();
    for _ in 0..times {
        cur = bailey_step_limit(&cur)?;
    }
    Ok(cur)
}

/// Termwise equality of two pairs for `n <= n_max`.
pub fn pairs_agree(x: &BaileyPair, y: &BaileyPair, n_max: usize) -> bool {
    x.a == y.a && (0..=n_max).all(|n| x.alpha(n) == y.alpha(n) && x.beta(n) == y.beta(n))
}
