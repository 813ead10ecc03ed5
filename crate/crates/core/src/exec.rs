//! Sequential/parallel dispatch for the crate's data-parallel loops.
//!
//! Every helper here returns the same value in both modes: results are
//! aggregated by index, never by completion order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Execution {
    Sequential,
    /// Uses rayon when the `parallel` feature is enabled, otherwise the same
    /// as `Sequential`.
    #[default]
    Parallel,
}

impl Execution {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

/// `(0..len).map(f).collect()`.
pub fn map_range<T, F>(exec: Execution, len: u64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return (0..len).into_par_iter().map(f).collect();
    }
    let _ = exec;
    (0..len).map(f).collect()
}

/// Lowest index `i` in `0..len` with `f(i) = Some(_)`.
pub fn find_first<T, F>(exec: Execution, len: u64, f: F) -> Option<(u64, T)>
where
    T: Send,
    F: Fn(u64) -> Option<T> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return (0..len)
            .into_par_iter()
            .filter_map(|i| f(i).map(|v| (i, v)))
            .find_first(|_| true);
    }
    let _ = exec;
    (0..len).find_map(|i| f(i).map(|v| (i, v)))
}

/// Lowest-index error wins, so error reporting is deterministic too.
pub fn try_map_range<T, E, F>(exec: Execution, len: u64, f: F) -> Result<Vec<T>, E>
where
    T: Send,
    E: Send,
    F: Fn(u64) -> Result<T, E> + Sync + Send,
{
    map_range(exec, len, f).into_iter().collect()
}
