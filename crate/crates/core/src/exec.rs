//! Data-parallel map with a sequential fallback.
//!
//! With the `parallel` feature (on by default) [`map`] runs on the rayon
//! thread pool; without it, or through [`map_seq`], it is a plain loop.
//! Both return results in input order.

pub fn map_seq<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    items.iter().map(f).collect()
}

#[cfg(feature = "parallel")]
pub fn map_par<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(feature = "parallel")]
pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    map_par(items, f)
}

#[cfg(not(feature = "parallel"))]
pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    map_seq(items, f)
}

/// True when [`map`] dispatches to the thread pool.
pub const fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}
