//! Enumeration of weakly increasing multi-indices and the nested chain sums
//! built on them.

use serde::{Deserialize, Serialize};

use crate::exec::Exec;
use crate::qalgebra::{qbinomial_shared, LaurentPoly};

/// A weakly increasing vector `n_1 <= ... <= n_K`. Indices outside `1..=K`
/// read as zero below and are rejected above.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MultiIndex {
    values: Vec<usize>,
}

impl MultiIndex {
    pub fn new(values: Vec<usize>) -> Option<Self> {
        values
            .windows(2)
            .all(|w| w[0] <= w[1])
            .then_some(Self { values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `n_s`, 1-based, with `n_s = 0` for `s <= 0`.
    pub fn get(&self, s: i64) -> usize {
        if s <= 0 {
            0
        } else {
            self.values[(s - 1) as usize]
        }
    }

    pub fn top(&self) -> usize {
        self.values.last().copied().unwrap_or(0)
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }
}

/// Iterator over all weakly increasing `(n_1, ..., n_K)` with `n_K <= max`,
/// in lexicographic order. Yields `C(max + K, K)` vectors.
#[derive(Clone, Debug)]
pub struct WeakChains {
    current: Vec<usize>,
    max: usize,
    done: bool,
}

impl WeakChains {
    pub fn new(len: usize, max: usize) -> Self {
        Self {
            current: vec![0; len],
            max,
            done: false,
        }
    }

    /// Chains whose top entry is pinned: `n_1 <= ... <= n_{K-1} <= n_K = top`.
    pub fn with_top(len: usize, top: usize) -> impl Iterator<Item = Vec<usize>> {
        let below = len.saturating_sub(1);
        let pinned = len > 0;
        WeakChains::new(below, top).map(move |mut v| {
            if pinned {
                v.push(top);
            }
            v
        })
    }
}

impl Iterator for WeakChains {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        // Bump the last entry below max; reset everything after it to its value.
        match (0..self.current.len()).rev().find(|&i| self.current[i] < self.max) {
            None => self.done = true,
            Some(i) => {
                self.current[i] += 1;
                let v = self.current[i];
                for x in &mut self.current[i + 1..] {
                    *x = v;
                }
            }
        }
        Some(out)
    }
}

/// Number of weakly increasing vectors of length `len` bounded by `max`.
pub fn chain_count(len: usize, max: usize) -> u128 {
    // C(max + len, len)
    let mut acc: u128 = 1;
    for i in 1..=len as u128 {
        acc = acc * (max as u128 + i) / i;
    }
    acc
}

/// A monomial leaf weight: `(-1)^negative * q^exp`, or `None` to skip.
pub type Leaf = Option<(i64, bool)>;

/// `sum over n_1 <= ... <= n_K <= max of head(n_K) * prod_{i<K} [n_{i+1}; n_i] * leaf(n)`.
///
/// The slice handed to `leaf` is 0-based: `n[i]` is `n_{i+1}`. The Gaussian
/// binomial product is accumulated along the descent so shared prefixes are
/// multiplied once. Work is split over the two top indices.
pub fn chain_sum<H, W>(len: usize, max: usize, exec: Exec, head: H, leaf: W) -> LaurentPoly
where
    H: Fn(usize) -> LaurentPoly + Sync,
    W: Fn(&[usize]) -> Leaf + Sync,
{
    if len == 0 {
        return match leaf(&[]) {
            Some((e, neg)) => LaurentPoly::signed_q_pow(neg, e),
            None => LaurentPoly::zero(),
        };
    }
    let heads: Vec<LaurentPoly> = (0..=max).map(&head).collect();
    let tasks: Vec<(usize, usize)> = if len == 1 {
        (0..=max).map(|t| (t, 0)).collect()
    } else {
        (0..=max).flat_map(|t| (0..=t).map(move |s| (t, s))).collect()
    };
    exec.sum_over(tasks.len(), |ix| {
        let (t, s) = tasks[ix];
        if heads[t].is_zero() {
            return LaurentPoly::zero();
        }
        let mut n = vec![0usize; len];
        n[len - 1] = t;
        let mut acc = LaurentPoly::zero();
        if len == 1 {
            push_leaf(&mut acc, &heads[t], &n, &leaf);
        } else {
            n[len - 2] = s;
            let prefix = &heads[t] * &*qbinomial_shared(t as u32, s as u32);
            descend(len - 2, &mut n, &prefix, &mut acc, &leaf);
        }
        acc
    })
}

/// Same sum with the top index pinned to `top` and no head factor.
pub fn chain_sum_fixed_top<W>(len: usize, top: usize, leaf: W) -> LaurentPoly
where
    W: Fn(&[usize]) -> Leaf,
{
    let mut acc = LaurentPoly::zero();
    if len == 0 {
        push_leaf(&mut acc, &LaurentPoly::one(), &[], &leaf);
        return acc;
    }
    let mut n = vec![0usize; len];
    n[len - 1] = top;
    descend(len - 1, &mut n, &LaurentPoly::one(), &mut acc, &leaf);
    acc
}

/// Fills `n[..level]` below `n[level]`, multiplying in `[n[i+1]; n[i]]`.
fn descend<W>(level: usize, n: &mut [usize], prefix: &LaurentPoly, acc: &mut LaurentPoly, leaf: &W)
where
    W: Fn(&[usize]) -> Leaf,
{
    if level == 0 {
        push_leaf(acc, prefix, n, leaf);
        return;
    }
    let upper = n[level];
    for v in 0..=upper {
        n[level - 1] = v;
        let b = qbinomial_shared(upper as u32, v as u32);
        let next = if b.is_one() { prefix.clone() } else { prefix * &*b };
        descend(level - 1, n, &next, acc, leaf);
    }
}

fn push_leaf<W>(acc: &mut LaurentPoly, poly: &LaurentPoly, n: &[usize], leaf: &W)
where
    W: Fn(&[usize]) -> Leaf,
{
    if let Some((e, neg)) = leaf(n) {
        *acc += poly.shift_signed(e, neg);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalgebra::qbinomial;

    #[test]
    fn enumeration_counts() {
        for len in 0..6 {
            for max in 0..6 {
                let all: Vec<_> = WeakChains::new(len, max).collect();
                assert_eq!(all.len() as u128, chain_count(len, max));
                let mut sorted = all.clone();
                sorted.sort();
                sorted.dedup();
                assert_eq!(sorted, all, "lexicographic and without repeats");
                assert!(all.iter().all(|v| MultiIndex::new(v.clone()).is_some()));
            }
        }
    }

    #[test]
    fn pinned_top() {
        let v: Vec<_> = WeakChains::with_top(3, 2).collect();
        assert_eq!(v.len(), 6);
        assert!(v.iter().all(|c| c[2] == 2));
        assert_eq!(WeakChains::with_top(0, 5).count(), 1);
    }

    #[test]
    fn multi_index_access() {
        let m = MultiIndex::new(vec![0, 1, 1, 3]).unwrap();
        assert_eq!(m.get(0), 0);
        assert_eq!(m.get(-2), 0);
        assert_eq!(m.get(4), 3);
        assert_eq!(m.top(), 3);
        assert!(MultiIndex::new(vec![2, 1]).is_none());
    }

    fn brute(len: usize, max: usize, leaf: impl Fn(&[usize]) -> Leaf) -> LaurentPoly {
        let mut acc = LaurentPoly::zero();
        for n in WeakChains::new(len, max) {
            let mut term = crate::qalgebra::qpochhammer(1, n[len - 1]);
            for i in 0..len - 1 {
                term = &term * &qbinomial(n[i + 1] as i64, n[i] as i64);
            }
            if let Some((e, neg)) = leaf(&n) {
                acc += term.shift_signed(e, neg);
            }
        }
        acc
    }

    #[test]
    fn chain_sum_matches_brute_force() {
        let leaf = |n: &[usize]| -> Leaf {
            let e: i64 = n.iter().enumerate().map(|(i, &x)| (i as i64 - 1) * x as i64).sum();
            Some((e - (n[0] * n[n.len() - 1]) as i64, n[0] % 2 == 1))
        };
        for len in 1..5 {
            for max in 0..4 {
                let head = |t: usize| crate::qalgebra::qpochhammer(1, t);
                let fast = chain_sum(len, max, Exec::Sequential, head, leaf);
                assert_eq!(fast, brute(len, max, leaf), "len={len} max={max}");
                assert_eq!(chain_sum(len, max, Exec::Parallel, head, leaf), fast);
            }
        }
    }

    #[test]
    fn fixed_top_sum() {
        // Summing [n_2; n_1] over n_1 gives the Galois number G_n.
        let g = chain_sum_fixed_top(2, 3, |_| Some((0, false)));
        let expect: LaurentPoly = (0..=3).map(|k| qbinomial(3, k)).sum();
        assert_eq!(g, expect);
        assert_eq!(chain_sum_fixed_top(0, 0, |_| Some((2, true))), LaurentPoly::monomial(-1, 2));
    }
}
