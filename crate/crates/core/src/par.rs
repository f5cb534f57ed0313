//! Data-parallel inner loops with a sequential fallback.
//!
//! With the `parallel` feature (default) these fan out over rayon; without it
//! they run as plain iterators. Every reduction used here is associative and
//! exact, so results are identical regardless of how work is split.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Minimum number of work items before fanning out.
const SPLIT_THRESHOLD: usize = 16;

#[cfg(feature = "parallel")]
pub(crate) fn map_sum_u64<F>(n: usize, f: F) -> u64
where
    F: Fn(usize) -> u64 + Sync + Send,
{
    if n < SPLIT_THRESHOLD {
        (0..n).map(f).sum()
    } else {
        (0..n).into_par_iter().map(f).sum()
    }
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_sum_u64<F>(n: usize, f: F) -> u64
where
    F: Fn(usize) -> u64,
{
    (0..n).map(f).sum()
}

#[cfg(feature = "parallel")]
pub(crate) fn map_collect<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_collect<T, F>(n: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..n).map(f).collect()
}

/// True when this build fans work out over rayon.
pub fn parallel_enabled() -> bool {
    cfg!(feature = "parallel")
}
