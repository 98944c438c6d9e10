//! Permutations of `{1..n}`, canonicalized multisets of permutations, and
//! bounded exhaustive enumeration of both.
//!
//! Images are 1-indexed throughout: `image[i-1] = sigma(i)`.

use serde::{Serialize, Serializer};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::Limits;

/// A bijection on `{1..n}` stored as its image vector.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    image: Vec<u32>,
}

impl Permutation {
    /// Validates that `image` is a bijection on `{1..n}`.
    pub fn from_image(image: Vec<u32>) -> Result<Self> {
        let n = image.len();
        if n == 0 {
            return Err(Error::Invalid("empty permutation".into()));
        }
        let mut seen = vec![false; n];
        for &v in &image {
            if v == 0 || v as usize > n || seen[v as usize - 1] {
                return Err(Error::Invalid(format!(
                    "image {image:?} is not a bijection on 1..={n}"
                )));
            }
            seen[v as usize - 1] = true;
        }
        Ok(Permutation { image })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (1..=n as u32).collect(),
        }
    }

    /// The reversal `(n, n-1, ..., 1)`.
    pub fn reverse(n: usize) -> Self {
        Permutation {
            image: (1..=n as u32).rev().collect(),
        }
    }

    /// Cyclic rotation `r_i` with `r_i(j) = ((i+j-2) mod n) + 1`, `1 <= i <= n`.
    pub fn cyclic(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i > n {
            return Err(Error::Invalid(format!(
                "cyclic index {i} out of range 1..={n}"
            )));
        }
        let image = (1..=n)
            .map(|j| (((i + j - 2) % n) + 1) as u32)
            .collect();
        Ok(Permutation { image })
    }

    pub fn n(&self) -> usize {
        self.image.len()
    }

    /// `sigma(i)` with 1-indexed `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.image[i - 1] as usize
    }

    pub fn image(&self) -> &[u32] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// Composition `(self . other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::Dimension(format!(
                "composing permutations of sizes {} and {}",
                self.n(),
                other.n()
            )));
        }
        Ok(Permutation {
            image: (1..=self.n()).map(|i| self.apply(other.apply(i)) as u32).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0u32; self.n()];
        for (i, &v) in self.image.iter().enumerate() {
            image[v as usize - 1] = (i + 1) as u32;
        }
        Permutation { image }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.image.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let image = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Invalid(format!("bad permutation entry `{t}`")))
            })
            .collect::<Result<Vec<u32>>>()?;
        Permutation::from_image(image)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// A multiset of `k` permutations acting on the same `{1..n}`, stored in
/// canonical (lexicographically sorted) order. The values `v` and `w` do
/// not depend on the order of the members, so two multisets compare equal
/// exactly when they are equal as multisets.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct PermMultiset {
    perms: Vec<Permutation>,
}

impl PermMultiset {
    pub fn new(mut perms: Vec<Permutation>) -> Result<Self> {
        if perms.is_empty() {
            return Err(Error::Invalid("empty permutation multiset".into()));
        }
        let n = perms[0].n();
        if perms.iter().any(|p| p.n() != n) {
            return Err(Error::Dimension(
                "all permutations in a multiset must act on the same n".into(),
            ));
        }
        perms.sort();
        Ok(PermMultiset { perms })
    }

    pub fn k(&self) -> usize {
        self.perms.len()
    }

    pub fn n(&self) -> usize {
        self.perms[0].n()
    }

    /// Members in canonical order.
    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }
}

impl fmt::Display for PermMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.perms.iter().map(|p| p.to_string()).collect();
        write!(f, "{{{}}}", parts.join(" | "))
    }
}

impl fmt::Debug for PermMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

pub(crate) fn factorial_u128(n: usize) -> Option<u128> {
    let mut acc: u128 = 1;
    for i in 2..=n as u128 {
        acc = acc.checked_mul(i)?;
    }
    Some(acc)
}

/// Number of multisets of size `k` over `a` items: `C(a+k-1, k)`.
pub(crate) fn multichoose_u128(a: u128, k: u128) -> Option<u128> {
    if k == 0 {
        return Some(1);
    }
    // C(a+k-1, k) = prod_{i=0}^{k-1} (a+i) / k!, built incrementally;
    // every prefix product of consecutive integers is divisible.
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul(a.checked_add(i)?)?;
        acc /= i + 1;
    }
    Some(acc)
}

/// Advance `image` to its lexicographic successor; `false` at the last one.
fn next_permutation(image: &mut [u32]) -> bool {
    let n = image.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && image[i - 1] >= image[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while image[j] <= image[i - 1] {
        j -= 1;
    }
    image.swap(i - 1, j);
    image[i..].reverse();
    true
}

/// Iterator over all `n!` permutations in lexicographic order of images.
pub struct Permutations {
    current: Option<Vec<u32>>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let cur = self.current.take()?;
        let item = Permutation { image: cur.clone() };
        let mut next = cur;
        if next_permutation(&mut next) {
            self.current = Some(next);
        }
        Some(item)
    }
}

/// All permutations of `{1..n}` in lexicographic order, guarded by `limits`
/// (`n!` counts as the node budget).
pub fn enumerate_permutations(n: usize, limits: &Limits) -> Result<Permutations> {
    if n == 0 {
        return Err(Error::Invalid("n must be at least 1".into()));
    }
    let count = factorial_u128(n).ok_or(Error::SizeLimit {
        needed: u128::MAX,
        limit: limits.max_nodes as u128,
    })?;
    limits.check(count)?;
    Ok(Permutations {
        current: Some((1..=n as u32).collect()),
    })
}

/// Materialized `S_n` in lexicographic order.
pub fn all_permutations(n: usize, limits: &Limits) -> Result<Vec<Permutation>> {
    Ok(enumerate_permutations(n, limits)?.collect())
}

/// Iterator over multisets of `k` permutations, encoded as nondecreasing
/// index tuples into the lex-ordered `S_n`.
pub struct PermMultisets {
    perms: Vec<Permutation>,
    indices: Option<Vec<usize>>,
    fixed_first: bool,
}

impl Iterator for PermMultisets {
    type Item = PermMultiset;

    fn next(&mut self) -> Option<PermMultiset> {
        let idx = self.indices.take()?;
        let members: Vec<Permutation> = idx.iter().map(|&i| self.perms[i].clone()).collect();
        // Indices are nondecreasing over lex-sorted perms, so members are
        // already canonical.
        let item = PermMultiset { perms: members };
        let max = self.perms.len() - 1;
        let lo = if self.fixed_first { 1 } else { 0 };
        let mut next = idx;
        let mut pos = next.len();
        while pos > lo {
            pos -= 1;
            if next[pos] < max {
                let v = next[pos] + 1;
                for slot in next[pos..].iter_mut() {
                    *slot = v;
                }
                self.indices = Some(next);
                return Some(item);
            }
        }
        Some(item)
    }
}

/// Every multiset of `k` permutations of `{1..n}` up to multiset equality.
///
/// With `fix_first_identity` only multisets containing the identity are
/// produced. For row-relabeling-invariant objectives (the `v` and `w` of
/// the k-permutation problems) this loses no extremal values: composing
/// all members with a common permutation on the right permutes the outer
/// index and any multiset can be steered onto one containing the identity.
pub fn enumerate_perm_multisets(
    n: usize,
    k: usize,
    fix_first_identity: bool,
    limits: &Limits,
) -> Result<PermMultisets> {
    if k == 0 {
        return Err(Error::Invalid("k must be at least 1".into()));
    }
    let nf = factorial_u128(n).ok_or(Error::SizeLimit {
        needed: u128::MAX,
        limit: limits.max_nodes as u128,
    })?;
    let free = if fix_first_identity { k - 1 } else { k } as u128;
    let count = multichoose_u128(nf, free).ok_or(Error::SizeLimit {
        needed: u128::MAX,
        limit: limits.max_nodes as u128,
    })?;
    limits.check(count)?;
    let perms = all_permutations(n, limits)?;
    Ok(PermMultisets {
        perms,
        indices: Some(vec![0; k]),
        fixed_first: fix_first_identity,
    })
}

/// Multiset count without materializing the stream.
pub fn count_perm_multisets(n: usize, k: usize, fix_first_identity: bool) -> Option<u128> {
    let nf = factorial_u128(n)?;
    let free = if fix_first_identity { k.checked_sub(1)? } else { k };
    multichoose_u128(nf, free as u128)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_enumeration() {
        let limits = Limits::default();
        let perms: Vec<_> = enumerate_permutations(3, &limits).unwrap().collect();
        assert_eq!(perms.len(), 6);
        assert_eq!(perms[0], Permutation::identity(3));
        assert_eq!(perms[5], Permutation::reverse(3));
        let mut sorted = perms.clone();
        sorted.sort();
        assert_eq!(perms, sorted);

        let one: Vec<_> = enumerate_permutations(1, &limits).unwrap().collect();
        assert_eq!(one, vec![Permutation::identity(1)]);
        let two: Vec<_> = enumerate_permutations(2, &limits).unwrap().collect();
        assert_eq!(two, vec![Permutation::identity(2), Permutation::reverse(2)]);
    }

    #[test]
    fn enumeration_respects_ceiling() {
        let limits = Limits { max_nodes: 100 };
        assert!(enumerate_permutations(5, &limits).is_err());
        assert!(enumerate_permutations(4, &limits).is_ok());
        assert!(enumerate_permutations(0, &limits).is_err());
    }

    #[test]
    fn cyclic_matches_definition() {
        assert_eq!(
            Permutation::cyclic(3, 1).unwrap(),
            "1,2,3".parse().unwrap()
        );
        assert_eq!(
            Permutation::cyclic(3, 2).unwrap(),
            "2,3,1".parse().unwrap()
        );
        assert_eq!(
            Permutation::cyclic(4, 4).unwrap(),
            "4,1,2,3".parse().unwrap()
        );
        assert!(Permutation::cyclic(3, 0).is_err());
        assert!(Permutation::cyclic(3, 4).is_err());
    }

    #[test]
    fn compose_and_inverse() {
        let a = Permutation::cyclic(4, 2).unwrap();
        let id = Permutation::identity(4);
        assert_eq!(a.compose(&a.inverse()).unwrap(), id);
        assert_eq!(a.inverse().compose(&a).unwrap(), id);
        let rev = Permutation::reverse(3);
        // rev(cyc(i)) computed by hand: cyc=(2,3,1), rev=(3,2,1) -> (2,1,3)
        let c = Permutation::cyclic(3, 2).unwrap();
        assert_eq!(rev.compose(&c).unwrap(), "2,1,3".parse().unwrap());
    }

    #[test]
    fn bijection_validation() {
        assert!(Permutation::from_image(vec![1, 1]).is_err());
        assert!(Permutation::from_image(vec![0, 1]).is_err());
        assert!(Permutation::from_image(vec![3, 1]).is_err());
        assert!(Permutation::from_image(vec![2, 3, 1]).is_ok());
    }

    #[test]
    fn multiset_enumeration_counts() {
        let limits = Limits::default();
        let all: Vec<_> = enumerate_perm_multisets(2, 2, false, &limits)
            .unwrap()
            .collect();
        assert_eq!(all.len(), 3);
        let fixed: Vec<_> = enumerate_perm_multisets(2, 2, true, &limits)
            .unwrap()
            .collect();
        assert_eq!(fixed.len(), 2);
        assert!(fixed.iter().all(|m| m.perms()[0].is_identity()));

        let single: Vec<_> = enumerate_perm_multisets(1, 3, false, &limits)
            .unwrap()
            .collect();
        assert_eq!(single.len(), 1);

        // multichoose(3!, 2) = C(7,2) = 21
        let m32: Vec<_> = enumerate_perm_multisets(3, 2, false, &limits)
            .unwrap()
            .collect();
        assert_eq!(m32.len(), 21);
        assert_eq!(count_perm_multisets(3, 2, false), Some(21));
    }

    #[test]
    fn multiset_canonical_form_is_order_free() {
        let a = Permutation::cyclic(3, 2).unwrap();
        let b = Permutation::reverse(3);
        let m1 = PermMultiset::new(vec![a.clone(), b.clone()]).unwrap();
        let m2 = PermMultiset::new(vec![b, a]).unwrap();
        assert_eq!(m1, m2);
    }
}
