//! Thin indirection over rayon so every data-parallel loop has a sequential
//! fallback. With the `parallel` feature disabled (or `parallel: false` in the
//! per-call options) the same closures run on the current thread.
//!
//! All helpers preserve input order in their output, so results are identical
//! whichever path executes.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Map over a slice, collecting results in input order.
pub(crate) fn ordered_map<T, R, F>(items: &[T], parallel: bool, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    #[cfg(feature = "parallel")]
    if parallel {
        return items.par_iter().map(&f).collect();
    }
    let _ = parallel;
    items.iter().map(f).collect()
}

/// Map over `0..n`, collecting results in index order.
pub(crate) fn ordered_map_range<R, F>(n: usize, parallel: bool, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync,
{
    #[cfg(feature = "parallel")]
    if parallel {
        return (0..n).into_par_iter().map(&f).collect();
    }
    let _ = parallel;
    (0..n).map(f).collect()
}

/// Map over fixed-size chunks of a slice, collecting per-chunk results in
/// chunk order. Used where per-item results would be too small to merge
/// efficiently (e.g. sparse count maps).
pub(crate) fn ordered_chunk_map<T, R, F>(items: &[T], chunk: usize, parallel: bool, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&[T]) -> R + Sync,
{
    let chunk = chunk.max(1);
    #[cfg(feature = "parallel")]
    if parallel {
        return items.par_chunks(chunk).map(&f).collect();
    }
    let _ = parallel;
    items.chunks(chunk).map(f).collect()
}

/// True when the crate was built with rayon support.
pub fn parallel_enabled() -> bool {
    cfg!(feature = "parallel")
}
