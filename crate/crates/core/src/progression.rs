//! Arithmetic and geometric progressions: closed forms for `w_max`, the
//! explicit equal-column-sum constructions, and the `v_min` form for
//! geometric sequences.
//!
//! For a k-set of permutations the column sums `w_i = sum_j sigma_j(i)`
//! decide `w` completely on a progression, because
//! `sum_j a_{sigma_j(i)} = k(a_1 - d) + w_i d`. The constructions below
//! realize the flattest possible column-sum profiles.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{enumerate_perm_multisets, PermMultiset, Permutation};
use crate::rational::{ExactPower, Rational};
use crate::sequence::OrderedSequence;
use crate::Limits;

/// `a_i = a1 + (i-1) d` with `a1, d >= 0`, so terms are nonnegative and
/// nondecreasing.
#[derive(Clone, Debug, Serialize)]
pub struct ArithProgression {
    pub a1: Rational,
    pub d: Rational,
    pub n: usize,
}

impl ArithProgression {
    pub fn new(a1: Rational, d: Rational, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Invalid("progression needs at least one term".into()));
        }
        if a1.is_negative() || d.is_negative() {
            return Err(Error::Hypothesis(
                "arithmetic progression requires a1 >= 0 and d >= 0".into(),
            ));
        }
        Ok(ArithProgression { a1, d, n })
    }

    /// The integers `1, 2, ..., n`.
    pub fn integers(n: usize) -> Self {
        ArithProgression {
            a1: Rational::one(),
            d: Rational::one(),
            n,
        }
    }

    /// 1-indexed term `a_i`.
    pub fn term(&self, i: usize) -> Rational {
        &self.a1 + &self.d * Rational::from_int(i as i64 - 1)
    }

    pub fn terms(&self) -> Vec<Rational> {
        (1..=self.n).map(|i| self.term(i)).collect()
    }

    pub fn to_sequence(&self) -> OrderedSequence {
        OrderedSequence::sorted(self.terms()).expect("progression terms are nondecreasing")
    }
}

/// `a_i = c * d^(b_i)` with `c, d >= 1` and `b` a nonnegative arithmetic
/// progression. Terms materialize as rationals only when every `b_i` is
/// an integer.
#[derive(Clone, Debug, Serialize)]
pub struct GeomProgression {
    pub c: Rational,
    pub d: Rational,
    pub b: ArithProgression,
}

impl GeomProgression {
    pub fn new(c: Rational, d: Rational, b: ArithProgression) -> Result<Self> {
        if c < Rational::one() || d < Rational::one() {
            return Err(Error::Hypothesis(
                "geometric progression requires c >= 1 and d >= 1".into(),
            ));
        }
        Ok(GeomProgression { c, d, b })
    }

    pub fn n(&self) -> usize {
        self.b.n
    }

    /// Rational terms, when all exponents are integers.
    pub fn terms(&self) -> Option<Vec<Rational>> {
        (1..=self.n())
            .map(|i| {
                let e = self.b.term(i);
                if !e.is_integer() {
                    return None;
                }
                let e = i64::try_from(e.numer()).ok()?;
                Some(&self.c * self.d.pow(e))
            })
            .collect()
    }
}

/// The column sums `w_i = sum_j sigma_j(i)` of a k-set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColumnSums {
    w: Vec<u64>,
}

impl ColumnSums {
    pub fn from_multiset(sigmas: &PermMultiset) -> Self {
        let n = sigmas.n();
        let mut w = vec![0u64; n];
        for sigma in sigmas.perms() {
            for (i, &v) in sigma.image().iter().enumerate() {
                w[i] += v as u64;
            }
        }
        let total: u64 = w.iter().sum();
        debug_assert_eq!(
            total as u128,
            sigmas.k() as u128 * (n as u128) * (n as u128 + 1) / 2
        );
        ColumnSums { w }
    }

    pub fn sums(&self) -> &[u64] {
        &self.w
    }

    pub fn all_equal(&self) -> bool {
        self.w.windows(2).all(|p| p[0] == p[1])
    }

    pub fn spread(&self) -> u64 {
        let max = *self.w.iter().max().expect("nonempty");
        let min = *self.w.iter().min().expect("nonempty");
        max - min
    }
}

/// `t` copies of the identity, `t` of the reversal and `u` of every cyclic
/// rotation: `k = 2t + nu` permutations whose column sums all equal
/// `k(n+1)/2`.
pub fn build_kset_even(n: usize, t: usize, u: usize) -> Result<PermMultiset> {
    if n == 0 {
        return Err(Error::Invalid("n must be at least 1".into()));
    }
    let k = 2 * t + n * u;
    if k == 0 {
        return Err(Error::Invalid("k = 2t + nu must be at least 1".into()));
    }
    let mut perms = Vec::with_capacity(k);
    for _ in 0..t {
        perms.push(Permutation::identity(n));
        perms.push(Permutation::reverse(n));
    }
    for _ in 0..u {
        for i in 1..=n {
            perms.push(Permutation::cyclic(n, i)?);
        }
    }
    let ms = PermMultiset::new(perms)?;
    let sums = ColumnSums::from_multiset(&ms);
    let expected = (k * (n + 1) / 2) as u64;
    assert!(
        sums.sums().iter().all(|&w| w == expected),
        "column sums {:?} != {expected}",
        sums.sums()
    );
    Ok(ms)
}

/// The permutation `(1, 3, ..., n-1, 2, 4, ..., n)` read as
/// `sigma(i) = 2i - 1` for `i <= n/2` and `sigma(i) = 2i - n` above.
fn sigma_tilde(n: usize) -> Permutation {
    let half = n / 2;
    let image: Vec<u32> = (1..=n)
        .map(|i| if i <= half { 2 * i - 1 } else { 2 * i - n } as u32)
        .collect();
    Permutation::from_image(image).expect("sigma-tilde is a bijection for even n")
}

/// For even `n`: `n - 1` permutations whose column sums are `n^2/2 - 1` on
/// the first half and `n^2/2` on the second: the rotations `r_i` for
/// `i in 2..=n, i != n/2 + 1`, plus one interleaving permutation.
pub fn build_n_minus_1_set(n: usize) -> Result<PermMultiset> {
    if n < 2 || n % 2 != 0 {
        return Err(Error::Hypothesis(format!("n must be even and >= 2, got {n}")));
    }
    let mut perms = vec![sigma_tilde(n)];
    for i in 2..=n {
        if i != n / 2 + 1 {
            perms.push(Permutation::cyclic(n, i)?);
        }
    }
    let ms = PermMultiset::new(perms)?;
    let sums = ColumnSums::from_multiset(&ms);
    let base = (n * n / 2) as u64;
    for (i, &w) in sums.sums().iter().enumerate() {
        let expected = if i < n / 2 { base - 1 } else { base };
        assert_eq!(w, expected, "column {i} of the (n-1)-set");
    }
    Ok(ms)
}

/// For even `n` and odd `k >= n - 1`: the `(n-1)`-set padded with
/// `t = (k - n + 1)/2` identity/reversal pairs. Column sums are
/// `(k(n+1) - 1)/2` on the first half and `(k(n+1) + 1)/2` on the second.
pub fn build_kset_odd(n: usize, k: usize) -> Result<PermMultiset> {
    if n < 2 || n % 2 != 0 {
        return Err(Error::Hypothesis(format!("n must be even and >= 2, got {n}")));
    }
    if k % 2 == 0 || k + 1 < n {
        return Err(Error::Hypothesis(format!(
            "k must be odd and >= n-1, got k={k}, n={n}"
        )));
    }
    let t = (k - (n - 1)) / 2;
    let mut perms = build_n_minus_1_set(n)?.perms().to_vec();
    for _ in 0..t {
        perms.push(Permutation::identity(n));
        perms.push(Permutation::reverse(n));
    }
    let ms = PermMultiset::new(perms)?;
    let sums = ColumnSums::from_multiset(&ms);
    let lo = ((k * (n + 1) - 1) / 2) as u64;
    for (i, &w) in sums.sums().iter().enumerate() {
        let expected = if i < n / 2 { lo } else { lo + 1 };
        assert_eq!(w, expected, "column {i} of the odd k-set");
    }
    Ok(ms)
}

/// Smallest-`u` nonnegative solution of `k = 2t + nu`, if any.
pub fn representable_2t_nu(n: usize, k: usize) -> Option<(usize, usize)> {
    if n == 0 || k == 0 {
        return None;
    }
    let mut u = 0;
    while n * u <= k {
        let rest = k - n * u;
        if rest % 2 == 0 {
            return Some((rest / 2, u));
        }
        u += 1;
    }
    None
}

/// Closed form for `w_max` on an arithmetic progression:
/// `(k(a_1 + a_n)/2)^n` when `k = 2t + nu` is representable, the split
/// two-factor form when `n` is even and `k` odd with `k >= n - 1`,
/// absent otherwise.
pub fn w_max_ap(ap: &ArithProgression, k: usize) -> Option<Rational> {
    if k == 0 {
        return None;
    }
    let n = ap.n;
    if representable_2t_nu(n, k).is_some() {
        let mean_sum = Rational::from_int(k as i64) * (&ap.a1 + ap.term(n)) / Rational::from_int(2);
        return Some(mean_sum.pow(n as i64));
    }
    if n % 2 == 0 && k % 2 == 1 && k >= n - 1 {
        let ka1 = Rational::from_int(k as i64) * &ap.a1;
        let half = |off: i64| {
            let c = Rational::from_int((k * (n - 1)) as i64 + off) / Rational::from_int(2);
            &ka1 + c * &ap.d
        };
        return Some(half(-1).pow((n / 2) as i64) * half(1).pow((n / 2) as i64));
    }
    None
}

/// `v_min` for a geometric progression with representable `k`:
/// `n c^k d^(k(b_1+b_n)/2)` as an exact symbolic power.
pub fn v_min_gp(gp: &GeomProgression, k: usize) -> Option<ExactPower> {
    let n = gp.n();
    representable_2t_nu(n, k)?;
    let coeff = Rational::from_int(n as i64) * gp.c.pow(k as i64);
    let exponent =
        Rational::from_int(k as i64) * (&gp.b.a1 + gp.b.term(n)) / Rational::from_int(2);
    Some(ExactPower::new(coeff, gp.d.clone(), exponent))
}

/// Confirms by exhaustion that no k-set has all column sums equal when
/// `n` is even and `k` odd. Enumerates identity-containing multisets
/// only: relabeling rows permutes the column sums, which preserves
/// "all equal".
pub fn no_equal_columns_check(n: usize, k: usize, limits: &Limits) -> Result<bool> {
    if n % 2 != 0 || k % 2 == 0 {
        return Err(Error::Hypothesis(
            "the no-equal-column-sums claim is for even n and odd k".into(),
        ));
    }
    for ms in enumerate_perm_multisets(n, k, true, limits)? {
        if ColumnSums::from_multiset(&ms).all_equal() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn rr(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn kset_even_examples() {
        let ms = build_kset_even(3, 1, 0).unwrap();
        assert_eq!(ColumnSums::from_multiset(&ms).sums(), &[4, 4, 4]);
        let cyc = build_kset_even(3, 0, 1).unwrap();
        assert_eq!(ColumnSums::from_multiset(&cyc).sums(), &[6, 6, 6]);
        let two = build_kset_even(2, 2, 0).unwrap();
        assert_eq!(ColumnSums::from_multiset(&two).sums(), &[6, 6]);
        assert!(build_kset_even(3, 0, 0).is_err());
    }

    #[test]
    fn n_minus_1_set_examples() {
        let m2 = build_n_minus_1_set(2).unwrap();
        assert_eq!(m2.k(), 1);
        assert_eq!(m2.perms()[0], Permutation::identity(2));
        assert_eq!(ColumnSums::from_multiset(&m2).sums(), &[1, 2]);

        let m4 = build_n_minus_1_set(4).unwrap();
        assert_eq!(m4.k(), 3);
        assert!(m4.perms().contains(&"1,3,2,4".parse().unwrap()));
        assert!(m4.perms().contains(&Permutation::cyclic(4, 2).unwrap()));
        assert!(m4.perms().contains(&Permutation::cyclic(4, 4).unwrap()));
        assert_eq!(ColumnSums::from_multiset(&m4).sums(), &[7, 7, 8, 8]);

        let m6 = build_n_minus_1_set(6).unwrap();
        assert_eq!(m6.k(), 5);
        assert_eq!(
            ColumnSums::from_multiset(&m6).sums(),
            &[17, 17, 17, 18, 18, 18]
        );

        assert!(build_n_minus_1_set(3).is_err());
    }

    #[test]
    fn kset_odd_examples() {
        let m = build_kset_odd(2, 1).unwrap();
        assert_eq!(ColumnSums::from_multiset(&m).sums(), &[1, 2]);
        let m3 = build_kset_odd(2, 3).unwrap();
        assert_eq!(ColumnSums::from_multiset(&m3).sums(), &[4, 5]);
        let m43 = build_kset_odd(4, 3).unwrap();
        assert_eq!(ColumnSums::from_multiset(&m43).sums(), &[7, 7, 8, 8]);
        assert!(build_kset_odd(4, 1).is_err());
        assert!(build_kset_odd(4, 4).is_err());
        assert!(build_kset_odd(3, 3).is_err());
    }

    #[test]
    fn column_sum_formulas_for_all_even_n() {
        for n in (2..=8).step_by(2) {
            for k in (n - 1..=11).step_by(2) {
                let ms = build_kset_odd(n, k).unwrap();
                let sums = ColumnSums::from_multiset(&ms);
                let lo = ((k * (n + 1) - 1) / 2) as u64;
                for (i, &w) in sums.sums().iter().enumerate() {
                    assert_eq!(w, if i < n / 2 { lo } else { lo + 1 });
                }
            }
        }
    }

    #[test]
    fn representable_examples() {
        assert_eq!(representable_2t_nu(3, 7), Some((2, 1)));
        assert_eq!(representable_2t_nu(4, 3), None);
        assert_eq!(representable_2t_nu(2, 5), None);
        assert_eq!(representable_2t_nu(1, 1), Some((0, 1)));
        assert_eq!(representable_2t_nu(5, 4), Some((2, 0)));
    }

    #[test]
    fn w_max_ap_examples() {
        let ap = ArithProgression::integers(3);
        assert_eq!(w_max_ap(&ap, 3), Some(r(216)));
        let ap2 = ArithProgression::integers(2);
        assert_eq!(w_max_ap(&ap2, 3), Some(r(20)));
        let zero = ArithProgression::new(r(0), r(0), 3).unwrap();
        assert_eq!(w_max_ap(&zero, 2), Some(r(0)));
        // n = 4, k = 1: odd, k < n-1, not representable
        let ap4 = ArithProgression::integers(4);
        assert_eq!(w_max_ap(&ap4, 1), None);
    }

    #[test]
    fn v_min_gp_examples() {
        let b = ArithProgression::new(r(0), r(1), 3).unwrap();
        let gp = GeomProgression::new(r(1), r(2), b).unwrap();
        let p = v_min_gp(&gp, 3).unwrap();
        assert_eq!(p.value(), Some(r(24)));
        assert_eq!(gp.terms().unwrap(), vec![r(1), r(2), r(4)]);

        let b1 = ArithProgression::new(r(0), r(1), 2).unwrap();
        let constant = GeomProgression::new(r(1), r(1), b1.clone()).unwrap();
        assert_eq!(v_min_gp(&constant, 2).unwrap().value(), Some(r(2)));

        let gp2 = GeomProgression::new(r(2), r(4), b1).unwrap();
        assert_eq!(v_min_gp(&gp2, 2).unwrap().value(), Some(r(32)));

        // k = 3 is not representable as 2t + 2u
        let b2 = ArithProgression::new(r(0), r(1), 2).unwrap();
        let gp3 = GeomProgression::new(r(1), r(2), b2).unwrap();
        assert!(v_min_gp(&gp3, 3).is_none());
    }

    #[test]
    fn gp_fractional_exponent_stays_symbolic() {
        let b = ArithProgression::new(rr(1, 2), r(1), 2).unwrap();
        let gp = GeomProgression::new(r(1), r(2), b).unwrap();
        assert!(gp.terms().is_none());
        let p = v_min_gp(&gp, 2).unwrap();
        assert_eq!(p.exponent, r(2)); // 2*(1/2+3/2)/2
        assert_eq!(p.value(), Some(r(8)));
    }

    #[test]
    fn no_equal_columns_examples() {
        let limits = Limits::default();
        assert!(no_equal_columns_check(2, 1, &limits).unwrap());
        assert!(no_equal_columns_check(2, 3, &limits).unwrap());
        assert!(no_equal_columns_check(4, 3, &limits).unwrap());
        assert!(no_equal_columns_check(3, 3, &limits).is_err());
        assert!(no_equal_columns_check(2, 2, &limits).is_err());
    }

    #[test]
    fn progression_preconditions() {
        assert!(ArithProgression::new(r(-1), r(1), 2).is_err());
        assert!(ArithProgression::new(r(1), r(-1), 2).is_err());
        assert!(ArithProgression::new(r(1), r(1), 0).is_err());
        let b = ArithProgression::new(r(0), r(1), 2).unwrap();
        assert!(GeomProgression::new(rr(1, 2), r(2), b.clone()).is_err());
        assert!(GeomProgression::new(r(2), rr(1, 2), b).is_err());
    }
}
