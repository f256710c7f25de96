//! Execution strategy for the data-parallel drivers (tables, sweeps, scans).
//!
//! With the `parallel` feature (on by default) [`Execution::Parallel`] runs on
//! the rayon global pool. Without it, every request runs sequentially. Both
//! paths return results in input order, so output never depends on the
//! strategy.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// True when work will actually be spread across threads.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }

    /// `f(i)` for every `i` in `0..n`, collected in index order.
    pub fn map_range<R, F>(self, n: u64, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(u64) -> R + Send + Sync,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return (0..n).into_par_iter().map(f).collect();
        }
        (0..n).map(f).collect()
    }

    /// `f` over a slice, collected in slice order.
    pub fn map_slice<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Send + Sync,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return items.par_iter().map(f).collect();
        }
        items.iter().map(f).collect()
    }

    /// Fold `f` over `0..n` into per-worker accumulators and merge them.
    /// `merge` must be associative and commutative up to the caller's
    /// canonicalization.
    pub fn fold_range<A, F, M>(self, n: u64, init: impl Fn() -> A + Send + Sync, f: F, merge: M) -> A
    where
        A: Send,
        F: Fn(A, u64) -> A + Send + Sync,
        M: Fn(A, A) -> A + Send + Sync,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return (0..n)
                .into_par_iter()
                .fold(&init, &f)
                .reduce(&init, &merge);
        }
        let _ = &merge;
        (0..n).fold(init(), f)
    }
}
