//! Sequential or data-parallel execution of independent work items.
//!
//! Every scan in this crate is split into work items (one per time vector)
//! whose results are merged in item order, so both strategies produce
//! identical output.

/// Execution strategy for bounded scans.
///
/// The default is `Parallel` when the `parallel` feature is enabled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Exec {
    #[cfg_attr(not(feature = "parallel"), default)]
    Sequential,
    /// Work items run on the rayon thread pool.
    #[cfg(feature = "parallel")]
    #[default]
    Parallel,
}

impl Exec {
    /// Applies `f` to every item; results keep the item order.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            Exec::Sequential => items.iter().map(f).collect(),
            #[cfg(feature = "parallel")]
            Exec::Parallel => {
                use rayon::prelude::*;
                items.par_iter().map(f).collect()
            }
        }
    }

    /// The first `Some` in item order.
    pub fn find_map_first<T, R, F>(self, items: &[T], f: F) -> Option<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> Option<R> + Sync + Send,
    {
        match self {
            Exec::Sequential => items.iter().find_map(f),
            #[cfg(feature = "parallel")]
            Exec::Parallel => {
                use rayon::prelude::*;
                items.par_iter().find_map_first(f)
            }
        }
    }
}
