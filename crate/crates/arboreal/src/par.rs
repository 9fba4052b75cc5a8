//! Execution-mode plumbing: data-parallel inner loops run on rayon when the
//! `parallel` feature is on, and on plain iterators otherwise. The mode can
//! be forced per call so the bench suite can compare both paths in one run.

/// How a data-parallel kernel should execute.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parallelism {
    Sequential,
    #[cfg(feature = "parallel")]
    Rayon,
}

impl Default for Parallelism {
    #[cfg(feature = "parallel")]
    fn default() -> Self {
        Parallelism::Rayon
    }
    #[cfg(not(feature = "parallel"))]
    fn default() -> Self {
        Parallelism::Sequential
    }
}

/// Map `f` over work items, preserving input order in the output.
pub fn map_ordered<T, U, F>(mode: Parallelism, items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    match mode {
        Parallelism::Sequential => items.into_iter().map(f).collect(),
        #[cfg(feature = "parallel")]
        Parallelism::Rayon => {
            use rayon::prelude::*;
            items.into_par_iter().map(f).collect()
        }
    }
}

/// Split `lo..hi` into chunks of at most `width`.
pub fn chunk_ranges(lo: i64, hi: i64, width: i64) -> Vec<(i64, i64)> {
    assert!(width > 0);
    let mut out = Vec::new();
    let mut a = lo;
    while a < hi {
        let b = (a + width).min(hi);
        out.push((a, b));
        a = b;
    }
    out
}
