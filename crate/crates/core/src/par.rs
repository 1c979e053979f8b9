//! Dispatch between rayon data-parallel and sequential execution.
//!
//! With the default `parallel` feature, `map_collect` fans work items out
//! across the rayon pool; without it the same call runs sequentially.
//! `map_collect_seq` is always sequential so benchmarks can compare the two
//! paths inside one build. Output order matches input order in both cases.

#[cfg(feature = "parallel")]
pub fn map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Send + Sync,
{
    use rayon::prelude::*;
    items.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> U + Send + Sync,
{
    items.into_iter().map(f).collect()
}

pub fn map_collect_seq<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> U,
{
    items.into_iter().map(f).collect()
}
