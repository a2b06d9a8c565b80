//! Data-parallel helpers. With the `parallel` feature (default) items are
//! processed on the rayon pool; otherwise a sequential fallback runs.
//! Output order matches input order either way, so reports stay
//! deterministic.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Applies `f` to every item, keeping the non-`None` results in order.
pub fn collect_some<T, W, F>(items: Vec<T>, f: F) -> Vec<W>
where
    T: Send + Sync,
    W: Send,
    F: Fn(&T) -> Option<W> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().filter_map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().filter_map(|t| f(t)).collect()
    }
}

/// Maps `f` over the items, preserving order.
pub fn map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send + Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(|t| f(t)).collect()
    }
}
