//! Thin switch between rayon and sequential execution.
//!
//! Every data-parallel site in the crate funnels through these helpers, so
//! the `parallel` feature toggles the whole crate at once and benches can
//! compare both paths explicitly.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `items` and folds the results with an associative,
/// commutative `merge`, starting from `identity`.
pub(crate) fn map_merge<T, R, F, M, I>(items: Vec<T>, f: F, identity: I, merge: M) -> R
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
    M: Fn(R, R) -> R + Sync + Send,
    I: Fn() -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.into_par_iter().map(f).reduce(identity, merge)
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.into_iter().map(f).fold(identity(), merge)
    }
}

/// Sequential twin of [`map_merge`], kept callable from benches regardless of
/// the feature set.
pub fn map_merge_seq<T, R, F, M, I>(items: Vec<T>, f: F, identity: I, merge: M) -> R
where
    F: Fn(T) -> R,
    M: Fn(R, R) -> R,
    I: Fn() -> R,
{
    items.into_iter().map(f).fold(identity(), merge)
}
