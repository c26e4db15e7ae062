//! Execution-policy helpers. Data-parallel scans run on rayon when the
//! `parallel` feature is enabled; every aggregation is order-independent
//! (leftmost match, index-ordered collect), so parallel and sequential
//! execution produce identical results.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Selects the execution path for the data-parallel entry points.
///
/// `Auto` uses rayon when the crate is built with the `parallel` feature and
/// falls back to the sequential path otherwise. `Sequential` forces the
/// fallback; the benchmark suite uses it to compare the two paths.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExecMode {
    #[default]
    Auto,
    Sequential,
}

impl ExecMode {
    #[cfg(feature = "parallel")]
    pub(crate) fn is_parallel(self) -> bool {
        matches!(self, ExecMode::Auto)
    }
}

/// Maps `f` over `items`, returning results in input order.
pub(crate) fn map_collect<T, U, F>(mode: ExecMode, items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode.is_parallel() {
        return items.into_par_iter().map(f).collect();
    }
    let _ = mode;
    items.into_iter().map(f).collect()
}

/// Returns `f(item)` for the first (leftmost) item where it is `Some`.
///
/// The leftmost guarantee is what makes witness selection deterministic
/// regardless of thread schedule.
pub(crate) fn find_first_map<T, U, F>(mode: ExecMode, items: Vec<T>, f: F) -> Option<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> Option<U> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode.is_parallel() {
        return items.into_par_iter().find_map_first(f);
    }
    let _ = mode;
    items.into_iter().find_map(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_collect_preserves_order() {
        let v: Vec<usize> = (0..100).collect();
        let doubled = map_collect(ExecMode::Auto, v.clone(), |x| 2 * x);
        assert_eq!(doubled, v.iter().map(|x| 2 * x).collect::<Vec<_>>());
        let doubled_seq = map_collect(ExecMode::Sequential, v.clone(), |x| 2 * x);
        assert_eq!(doubled, doubled_seq);
    }

    #[test]
    fn find_first_is_leftmost() {
        let v: Vec<usize> = (0..1000).collect();
        let hit = find_first_map(ExecMode::Auto, v.clone(), |x| (x % 7 == 3).then_some(x));
        assert_eq!(hit, Some(3));
        let hit_seq = find_first_map(ExecMode::Sequential, v, |x| (x % 7 == 3).then_some(x));
        assert_eq!(hit, hit_seq);
    }
}
