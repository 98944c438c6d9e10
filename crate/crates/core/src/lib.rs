//! Exact-arithmetic extremal values of rearrangement-type expressions.
//!
//! The crate computes sums of products and products of sums of one or
//! more rational sequences under permutations of their terms, finds the
//! extremal permutation structures by bounded brute force, evaluates the
//! known closed forms and optimal constructions, and verifies the
//! corresponding inequality families — including their extensions to
//! pluggable combiner/aggregator pairs, circular arrangements, pooled
//! partitions into equal blocks, and partially ordered structures such as
//! vectors under the positive cone and symmetric matrices under the
//! Loewner order.
//!
//! Everything is exact: scalars are arbitrary-precision rationals, matrix
//! order comparisons are decided by a certified LDL^T factorization, and
//! brute-force oracles never touch floating point.
//!
//! Module map:
//! - [`rational`], [`perm`], [`sequence`], [`extremal`]: number type,
//!   permutation machinery, bounded enumeration.
//! - [`kperm`]: `v(n,k)` / `w(n,k)` over k-sets of permutations of one
//!   sequence, brute extrema, closed-form catalog, multi-sequence bounds.
//! - [`progression`]: arithmetic/geometric progression closed forms and
//!   the explicit equal-column-sum constructions.
//! - [`framework`]: generalized (f,g) rearrangement checks and the
//!   circular variant.
//! - [`pool`]: the pooled variation where one permutation acts across all
//!   `kn` entries, partitioned into `n` blocks of `k`.
//! - [`algebra`]: ordered algebraic structures (dot/bilinear/matrix
//!   products, Hadamard/Kronecker) with exact Loewner certificates.
//! - [`oeis`]: table emission for the integer special case `a_i = i`.

pub mod algebra;
pub mod error;
mod exec;
pub mod extremal;
pub mod framework;
pub mod kperm;
pub mod oeis;
pub mod perm;
pub mod pool;
pub mod progression;
pub mod rational;
pub mod suites;
pub mod sequence;

pub use error::{Error, Result};
pub use extremal::ExtremalResult;
pub use perm::{PermMultiset, Permutation};
pub use rational::{ExactPower, Rational};
pub use sequence::OrderedSequence;

/// Enumeration ceilings for the brute-force engines.
///
/// `max_nodes` bounds the number of candidates an exhaustive search may
/// visit; requests above it fail loudly with [`Error::SizeLimit`] instead
/// of truncating.
#[derive(Clone, Debug)]
pub struct Limits {
    pub max_nodes: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_nodes: 10_000_000,
        }
    }
}

impl Limits {
    /// Default ceilings, overridden by the `REARRANGE_MAX_NODES`
    /// environment variable when it parses as a positive integer.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Ok(s) = std::env::var("REARRANGE_MAX_NODES") {
            if let Ok(v) = s.trim().parse::<u64>() {
                if v > 0 {
                    limits.max_nodes = v;
                }
            }
        }
        limits
    }

    pub fn check(&self, needed: u128) -> Result<()> {
        if needed > self.max_nodes as u128 {
            Err(Error::SizeLimit {
                needed,
                limit: self.max_nodes as u128,
            })
        } else {
            Ok(())
        }
    }
}
