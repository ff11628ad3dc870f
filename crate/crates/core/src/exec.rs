//! Execution policy for the outer summation index.

use serde::{Deserialize, Serialize};

/// How partial sums over the outer index are scheduled.
///
/// Without the `parallel` feature both variants run on the calling thread.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Exec {
    Sequential,
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

impl Exec {
    /// `sum_{i < count} f(i)`. Partial results are added in index order.
    pub fn sum_over<T, F>(self, count: usize, f: F) -> T
    where
        T: Send + std::iter::Sum<T>,
        F: Fn(usize) -> T + Sync + Send,
    {
        self.map(count, f).into_iter().sum()
    }

    /// `[f(0), ..., f(count-1)]`.
    pub fn map<T, F>(self, count: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => {
                use rayon::prelude::*;
                (0..count).into_par_iter().map(f).collect()
            }
            _ => (0..count).map(f).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_policies_agree() {
        let f = |i: usize| (i * i) as u64;
        assert_eq!(Exec::Sequential.sum_over(100, f), Exec::Parallel.sum_over(100, f));
        assert_eq!(Exec::Parallel.map(5, |i| i + 1), vec![1, 2, 3, 4, 5]);
        assert_eq!(Exec::Sequential.sum_over(0, f), 0);
    }
}
