//! Single switch point between the rayon and sequential execution paths.
//!
//! Every brute-force engine splits its space into branches, maps each
//! branch to a partial result and merges with an associative, commutative
//! function, so results are identical whichever path runs and however
//! many worker threads rayon uses.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[cfg(feature = "parallel")]
pub(crate) fn map_merge<B, R>(
    branches: Vec<B>,
    map: impl Fn(B) -> R + Sync + Send,
    merge: impl Fn(R, R) -> R + Sync + Send,
) -> Option<R>
where
    B: Send,
    R: Send,
{
    branches.into_par_iter().map(map).reduce_with(merge)
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_merge<B, R>(
    branches: Vec<B>,
    map: impl Fn(B) -> R + Sync + Send,
    merge: impl Fn(R, R) -> R + Sync + Send,
) -> Option<R>
where
    B: Send,
    R: Send,
{
    branches.into_iter().map(map).reduce(merge)
}
