//! Sums of products `v(n,k)` and products of sums `w(n,k)` over k-sets of
//! permutations of a single nonnegative nondecreasing sequence, plus the
//! multi-sequence bounds.
//!
//! `v(n,k) = sum_i prod_j a_{sigma_j(i)}` and
//! `w(n,k) = prod_i sum_j a_{sigma_j(i)}` range over multisets of `k`
//! permutations. Brute-force extrema enumerate multisets that contain the
//! identity: right-composing every member with a common permutation only
//! permutes the outer index, so each orbit has such a representative with
//! the same value.

use crate::error::{Error, Result};
use crate::exec::map_merge;
use crate::extremal::{ExtremalResult, MinMaxAcc};
use crate::perm::{all_permutations, count_perm_multisets, PermMultiset, Permutation};
use crate::rational::Rational;
use crate::sequence::OrderedSequence;
use crate::Limits;

/// One `v`/`w` extremal problem: a sorted nonnegative sequence and `k`.
#[derive(Clone, Debug)]
pub struct KPermProblem {
    seq: OrderedSequence,
    k: usize,
}

impl KPermProblem {
    pub fn new(seq: OrderedSequence, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::Invalid("k must be at least 1".into()));
        }
        if !seq.is_sorted() {
            return Err(Error::Hypothesis("sequence must be nondecreasing".into()));
        }
        if !seq.is_nonnegative() {
            return Err(Error::Hypothesis("sequence must be nonnegative".into()));
        }
        Ok(KPermProblem { seq, k })
    }

    pub fn n(&self) -> usize {
        self.seq.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn seq(&self) -> &OrderedSequence {
        &self.seq
    }
}

fn check_dims(p: &KPermProblem, sigmas: &PermMultiset) -> Result<()> {
    if sigmas.n() != p.n() {
        return Err(Error::Dimension(format!(
            "permutations act on {} but the sequence has {} terms",
            sigmas.n(),
            p.n()
        )));
    }
    if sigmas.k() != p.k() {
        return Err(Error::Dimension(format!(
            "multiset has {} permutations but k = {}",
            sigmas.k(),
            p.k()
        )));
    }
    Ok(())
}

/// `sum_i prod_j a_{sigma_j(i)}`.
pub fn v_value(p: &KPermProblem, sigmas: &PermMultiset) -> Result<Rational> {
    check_dims(p, sigmas)?;
    let a = p.seq.values();
    let mut sum = Rational::zero();
    for i in 0..p.n() {
        let mut prod = Rational::one();
        for sigma in sigmas.perms() {
            prod *= &a[sigma.image()[i] as usize - 1];
        }
        sum += prod;
    }
    Ok(sum)
}

/// `prod_i sum_j a_{sigma_j(i)}`.
pub fn w_value(p: &KPermProblem, sigmas: &PermMultiset) -> Result<Rational> {
    check_dims(p, sigmas)?;
    let a = p.seq.values();
    let mut prod = Rational::one();
    for i in 0..p.n() {
        let mut sum = Rational::zero();
        for sigma in sigmas.perms() {
            sum += &a[sigma.image()[i] as usize - 1];
        }
        prod *= sum;
    }
    Ok(prod)
}

fn eval_v(a: &[Rational], perms: &[Permutation], tuple: &[u32]) -> Rational {
    let mut sum = Rational::zero();
    for i in 0..a.len() {
        let mut prod = Rational::one();
        for &t in tuple {
            prod *= &a[perms[t as usize].image()[i] as usize - 1];
        }
        sum += prod;
    }
    sum
}

fn eval_w(a: &[Rational], perms: &[Permutation], tuple: &[u32]) -> Rational {
    let mut prod = Rational::one();
    for i in 0..a.len() {
        let mut sum = Rational::zero();
        for &t in tuple {
            sum += &a[perms[t as usize].image()[i] as usize - 1];
        }
        prod *= sum;
    }
    prod
}

fn multiset_from(perms: &[Permutation], tuple: &[u32]) -> PermMultiset {
    PermMultiset::new(tuple.iter().map(|&t| perms[t as usize].clone()).collect())
        .expect("tuple indices are valid")
}

/// Exhaustive (min, max) over identity-containing multisets. Branches on
/// the first non-identity member and merges deterministically, so the
/// reported witness is the lexicographically smallest optimal multiset in
/// the reduced space.
fn extrema_search(
    p: &KPermProblem,
    limits: &Limits,
    eval: fn(&[Rational], &[Permutation], &[u32]) -> Rational,
) -> Result<(ExtremalResult<PermMultiset>, ExtremalResult<PermMultiset>)> {
    let n = p.n();
    let k = p.k();
    let total = count_perm_multisets(n, k, true).ok_or(Error::SizeLimit {
        needed: u128::MAX,
        limit: limits.max_nodes as u128,
    })?;
    limits.check(total)?;
    let perms = all_permutations(n, limits)?;
    let a = p.seq.values();
    let nf = perms.len();

    if k == 1 {
        let tuple = vec![0u32];
        let value = eval(a, &perms, &tuple);
        let (min, max) = MinMaxAcc::seed(value, tuple).into_results();
        return Ok((
            min.map_witness(|t| multiset_from(&perms, &t)),
            max.map_witness(|t| multiset_from(&perms, &t)),
        ));
    }

    let branches: Vec<u32> = (0..nf as u32).collect();
    let acc = map_merge(
        branches,
        |i0| {
            let mut tuple = vec![i0; k];
            tuple[0] = 0;
            let mut acc: Option<MinMaxAcc<Vec<u32>>> = None;
            loop {
                let value = eval(a, &perms, &tuple);
                match acc.as_mut() {
                    None => acc = Some(MinMaxAcc::seed(value, tuple.clone())),
                    Some(acc) => acc.observe(value, &tuple),
                }
                // advance the nondecreasing odometer over slots 2..k;
                // slot 0 is the identity, slot 1 the branch value
                let mut advanced = false;
                let mut pos = k;
                while pos > 2 {
                    pos -= 1;
                    if (tuple[pos] as usize) < nf - 1 {
                        let v = tuple[pos] + 1;
                        for slot in tuple[pos..].iter_mut() {
                            *slot = v;
                        }
                        advanced = true;
                        break;
                    }
                }
                if !advanced {
                    break;
                }
            }
            acc.expect("each branch visits at least one tuple")
        },
        MinMaxAcc::merge,
    )
    .expect("at least one branch");

    let (min, max) = acc.into_results();
    Ok((
        min.map_witness(|t| multiset_from(&perms, &t)),
        max.map_witness(|t| multiset_from(&perms, &t)),
    ))
}

/// Brute-force `(v_min, v_max)` with witnesses.
pub fn v_extrema_brute(
    p: &KPermProblem,
    limits: &Limits,
) -> Result<(ExtremalResult<PermMultiset>, ExtremalResult<PermMultiset>)> {
    extrema_search(p, limits, eval_v)
}

/// Brute-force `(w_min, w_max)` with witnesses.
pub fn w_extrema_brute(
    p: &KPermProblem,
    limits: &Limits,
) -> Result<(ExtremalResult<PermMultiset>, ExtremalResult<PermMultiset>)> {
    extrema_search(p, limits, eval_w)
}

/// Which extremum a closed form is asked for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Which {
    VMin,
    VMax,
    WMin,
    WMax,
}

/// The catalog of exact closed forms for `v`/`w` extrema.
///
/// Covered: `v_max` and `w_min` for every `(n,k)`; all of `n = 1`,
/// `k = 1`, `n = 2` and `k = 2`; and `v_min` whenever `n | k` (cyclic
/// construction). `w_max` beyond those small cases only has progression
/// closed forms and upper bounds, which live elsewhere; here it is absent.
pub fn closed_form_catalog(p: &KPermProblem, which: Which) -> Option<Rational> {
    let a = p.seq.values();
    let n = p.n();
    let k = p.k();
    let k_i64 = k as i64;
    let prod_all = || a.iter().product::<Rational>();
    match which {
        Which::VMax => Some(a.iter().map(|x| x.pow(k_i64)).sum()),
        Which::WMin => Some(Rational::from_int(k_i64).pow(n as i64) * prod_all()),
        Which::VMin => {
            if n == 1 {
                Some(a[0].pow(k_i64))
            } else if k == 1 {
                Some(a.iter().sum())
            } else if n == 2 {
                let m = (k / 2) as i64;
                let core = a[0].pow(m) * a[1].pow(m);
                if k % 2 == 0 {
                    Some(Rational::from_int(2) * core)
                } else {
                    Some((&a[0] + &a[1]) * core)
                }
            } else if k == 2 {
                Some((0..n).map(|i| &a[i] * &a[n - 1 - i]).sum())
            } else if k % n == 0 {
                let e = (k / n) as i64;
                Some(
                    Rational::from_int(n as i64)
                        * a.iter().map(|x| x.pow(e)).product::<Rational>(),
                )
            } else {
                None
            }
        }
        Which::WMax => {
            if n == 1 {
                Some(Rational::from_int(k_i64) * &a[0])
            } else if k == 1 {
                Some(prod_all())
            } else if n == 2 {
                let m = Rational::from_int((k / 2) as i64);
                if k % 2 == 0 {
                    let s = (&a[0] + &a[1]) * &m;
                    Some(&s * &s)
                } else {
                    let m1 = &m + Rational::one();
                    Some((&m * &a[0] + &m1 * &a[1]) * (&m * &a[1] + &m1 * &a[0]))
                }
            } else if k == 2 {
                Some((0..n).map(|i| &a[i] + &a[n - 1 - i]).product())
            } else {
                None
            }
        }
    }
}

/// Root-free form of the AM-GM lower bound on `v_min`.
///
/// Returns `(v_min^n, n^n * (prod a_i)^k)`; the bound
/// `v_min >= n * prod a_i^(k/n)` holds iff the left component is `>=` the
/// right one, with equality whenever `n | k`. The left side is computed
/// by brute force and is subject to the enumeration ceiling.
pub fn v_min_power_bound(p: &KPermProblem, limits: &Limits) -> Result<(Rational, Rational)> {
    let n = p.n() as i64;
    let (vmin, _) = v_extrema_brute(p, limits)?;
    let lhs_pow = vmin.value.pow(n);
    let rhs_pow =
        Rational::from_int(n).pow(n) * p.seq.values().iter().product::<Rational>().pow(p.k as i64);
    Ok((lhs_pow, rhs_pow))
}

fn check_rows(rows: &[OrderedSequence]) -> Result<usize> {
    if rows.is_empty() {
        return Err(Error::Invalid("need at least one row".into()));
    }
    let n = rows[0].len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(Error::Dimension("ragged rows".into()));
    }
    if rows.iter().any(|r| !r.is_nonnegative()) {
        return Err(Error::Hypothesis("rows must be nonnegative".into()));
    }
    Ok(n)
}

/// `sum_j prod_i a_ij` over `k` rows of length `n`.
pub fn sum_of_products(rows: &[OrderedSequence]) -> Result<Rational> {
    let n = check_rows(rows)?;
    Ok((0..n)
        .map(|j| rows.iter().map(|r| &r.values()[j]).product::<Rational>())
        .sum())
}

/// `prod_j sum_i a_ij` over `k` rows of length `n`.
pub fn product_of_sums(rows: &[OrderedSequence]) -> Result<Rational> {
    let n = check_rows(rows)?;
    Ok((0..n)
        .map(|j| rows.iter().map(|r| &r.values()[j]).sum::<Rational>())
        .product())
}

/// AM-GM bounds for multiple sequences, in root-free comparand form:
/// `(n^n * prod_ij a_ij, ((sum_ij a_ij)/n)^n)`. The first compares
/// against `(sum_j prod_i a_ij)^n` from below, the second bounds
/// `prod_j sum_i a_ij` from above.
pub fn multi_seq_bounds(rows: &[OrderedSequence]) -> Result<(Rational, Rational)> {
    let n = check_rows(rows)?;
    let n_rat = Rational::from_int(n as i64);
    let prod_all: Rational = rows
        .iter()
        .flat_map(|r| r.values())
        .product();
    let sum_all: Rational = rows.iter().flat_map(|r| r.values()).sum();
    let lower_pow = n_rat.pow(n as i64) * prod_all;
    let upper = (sum_all / &n_rat).pow(n as i64);
    Ok((lower_pow, upper))
}

/// Checks both directions of the similarly-ordered comparison: sorting
/// every row descending must not decrease the sum of products and must
/// not increase the product of sums.
pub fn ruderman_check(rows: &[OrderedSequence]) -> Result<bool> {
    check_rows(rows)?;
    let sorted: Vec<OrderedSequence> = rows
        .iter()
        .map(|r| {
            let mut vals = r.values().to_vec();
            vals.sort_by(|x, y| y.cmp(x));
            OrderedSequence::raw(vals).expect("nonempty")
        })
        .collect();
    let sp_ok = sum_of_products(rows)? <= sum_of_products(&sorted)?;
    let ps_ok = product_of_sums(rows)? >= product_of_sums(&sorted)?;
    Ok(sp_ok && ps_ok)
}
