//! Execution strategy for the batch drivers (audits, grids, fuzzing,
//! enumeration). Every driver takes an [`ExecMode`]; results are collected
//! in input order, so both modes produce identical output and reports stay
//! byte-reproducible regardless of worker count.
//!
//! With the `parallel` feature (default) the `Parallel` mode fans out over
//! the rayon pool; without it both modes run sequentially and the API is
//! unchanged.

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExecMode {
    #[default]
    Parallel,
    Sequential,
}

#[cfg(feature = "parallel")]
pub fn map_collect<T, R, F>(mode: ExecMode, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    match mode {
        ExecMode::Parallel => items.par_iter().map(f).collect(),
        ExecMode::Sequential => items.iter().map(f).collect(),
    }
}

#[cfg(not(feature = "parallel"))]
pub fn map_collect<T, R, F>(_mode: ExecMode, items: &[T], f: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    items.iter().map(f).collect()
}

/// First `Some` in input order; under `Parallel` later work is cancelled
/// cooperatively once a match is known.
#[cfg(feature = "parallel")]
pub fn find_map_first<T, R, F>(mode: ExecMode, items: &[T], f: F) -> Option<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Option<R> + Sync + Send,
{
    use rayon::prelude::*;
    match mode {
        ExecMode::Parallel => items.par_iter().find_map_first(f),
        ExecMode::Sequential => items.iter().find_map(f),
    }
}

#[cfg(not(feature = "parallel"))]
pub fn find_map_first<T, R, F>(_mode: ExecMode, items: &[T], f: F) -> Option<R>
where
    F: Fn(&T) -> Option<R>,
{
    items.iter().find_map(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let items: Vec<u64> = (0..100).collect();
        let sq = |x: &u64| x * x;
        assert_eq!(
            map_collect(ExecMode::Parallel, &items, sq),
            map_collect(ExecMode::Sequential, &items, sq)
        );
        let first_big = |x: &u64| if *x > 40 { Some(*x) } else { None };
        assert_eq!(
            find_map_first(ExecMode::Parallel, &items, first_big),
            Some(41)
        );
        assert_eq!(
            find_map_first(ExecMode::Sequential, &items, first_big),
            Some(41)
        );
    }
}
