//! Data-parallel helpers for instance sweeps.
//!
//! The expensive workloads in this crate are embarrassingly parallel:
//! exhaustive catalogs of small graphs, batches of random instances, and
//! independent cover members inside the solvers. With the `parallel` feature
//! (default) these helpers fan out over rayon; without it they run the same
//! code sequentially. The `*_seq` variants always run sequentially so the
//! two paths can be benchmarked against each other in one build.
//!
//! All helpers preserve input order in their output, so results are
//! identical across thread counts and both execution modes.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Caps the worker threads used by the parallel helpers. Must be called
/// before any parallel work; a no-op without the `parallel` feature or once
/// the pool exists.
pub fn configure_threads(n: usize) {
    #[cfg(feature = "parallel")]
    {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = n;
    }
}

/// Maps a function over a mask range, keeping the `Some` results in order.
/// The workhorse for catalog sweeps: the closure builds a graph from the
/// mask, filters, and reports.
pub fn filter_map_range<T, F>(range: std::ops::Range<u64>, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> Option<T> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        range.into_par_iter().filter_map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        range.filter_map(f).collect()
    }
}

/// Sequential twin of [`filter_map_range`], for benchmarking the fallback.
pub fn filter_map_range_seq<T, F>(range: std::ops::Range<u64>, f: F) -> Vec<T>
where
    F: Fn(u64) -> Option<T>,
{
    range.filter_map(f).collect()
}

/// Order-preserving parallel map over a slice.
pub fn map_slice<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

/// Sequential twin of [`map_slice`].
pub fn map_slice_seq<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}

/// True iff the predicate holds on the whole mask range.
pub fn all_masks<F>(range: std::ops::Range<u64>, pred: F) -> bool
where
    F: Fn(u64) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        range.into_par_iter().all(pred)
    }
    #[cfg(not(feature = "parallel"))]
    {
        range.into_iter().all(pred)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_and_sequential_agree() {
        let par = filter_map_range(0..1000, |i| (i % 7 == 0).then_some(i * 2));
        let seq = filter_map_range_seq(0..1000, |i| (i % 7 == 0).then_some(i * 2));
        assert_eq!(par, seq);

        let items: Vec<u64> = (0..100).collect();
        assert_eq!(map_slice(&items, |x| x * x), map_slice_seq(&items, |x| x * x));

        assert!(all_masks(0..100, |i| i < 100));
        assert!(!all_masks(0..100, |i| i < 99));
    }
}
