//! The pooled variation: one permutation of all `kn` numbers, cut into
//! `n` blocks of `k`. Block sum-of-products `v` and product-of-sums `w`
//! depend only on the induced set partition, so brute force enumerates
//! unordered partitions into equal-size blocks instead of `(kn)!`
//! permutations.

use serde::Serialize;
use std::fmt;

use crate::error::{Error, Result};
use crate::exec::map_merge;
use crate::extremal::{ExtremalResult, MinMaxAcc};
use crate::perm::PermMultiset;
use crate::progression::{
    build_kset_even, build_kset_odd, representable_2t_nu, ArithProgression, GeomProgression,
};
use crate::rational::{ExactPower, Rational};
use crate::Limits;

/// A pool of `kn` rationals to be partitioned into `n` blocks of `k`.
#[derive(Clone, Debug)]
pub struct PoolProblem {
    pool: Vec<Rational>,
    n: usize,
    k: usize,
}

impl PoolProblem {
    pub fn new(pool: Vec<Rational>, n: usize, k: usize) -> Result<Self> {
        if n == 0 || k == 0 {
            return Err(Error::Invalid("n and k must be at least 1".into()));
        }
        if pool.len() != n * k {
            return Err(Error::Dimension(format!(
                "pool has {} entries, expected n*k = {}",
                pool.len(),
                n * k
            )));
        }
        Ok(PoolProblem { pool, n, k })
    }

    /// The pool `1, 2, ..., kn`.
    pub fn integers(n: usize, k: usize) -> Self {
        PoolProblem {
            pool: (1..=(n * k) as i64).map(Rational::from_int).collect(),
            n,
            k,
        }
    }

    pub fn pool(&self) -> &[Rational] {
        &self.pool
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn is_nonnegative(&self) -> bool {
        self.pool.iter().all(|v| v.is_nonnegative())
    }

    fn sorted_pool(&self) -> Vec<Rational> {
        let mut b = self.pool.clone();
        b.sort();
        b
    }
}

/// A set partition of the 1-based pool indices `{1..kn}` into `n` blocks
/// of `k`, in canonical form: each block ascending, blocks ordered by
/// their smallest element.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct BlockPartition {
    blocks: Vec<Vec<usize>>,
}

impl BlockPartition {
    pub fn new(mut blocks: Vec<Vec<usize>>, n: usize, k: usize) -> Result<Self> {
        if blocks.len() != n || blocks.iter().any(|b| b.len() != k) {
            return Err(Error::Dimension(format!(
                "partition must have {n} blocks of {k} indices"
            )));
        }
        let mut seen = vec![false; n * k];
        for b in &blocks {
            for &i in b {
                if i == 0 || i > n * k || seen[i - 1] {
                    return Err(Error::Invalid(format!(
                        "blocks do not partition 1..={}",
                        n * k
                    )));
                }
                seen[i - 1] = true;
            }
        }
        for b in blocks.iter_mut() {
            b.sort_unstable();
        }
        blocks.sort();
        Ok(BlockPartition { blocks })
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// The consecutive partition `{1..k}, {k+1..2k}, ...`.
    pub fn consecutive(n: usize, k: usize) -> Self {
        BlockPartition {
            blocks: (0..n)
                .map(|i| (i * k + 1..=(i + 1) * k).collect())
                .collect(),
        }
    }
}

impl fmt::Display for BlockPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                let inner: Vec<String> = b.iter().map(|i| i.to_string()).collect();
                format!("{{{}}}", inner.join(","))
            })
            .collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

impl fmt::Debug for BlockPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn check_partition(p: &PoolProblem, partition: &BlockPartition) -> Result<()> {
    if partition.blocks.len() != p.n || partition.blocks.iter().any(|b| b.len() != p.k) {
        return Err(Error::Dimension(format!(
            "partition shape does not match n={}, k={}",
            p.n, p.k
        )));
    }
    Ok(())
}

/// Sum over blocks of the block products.
pub fn block_v(p: &PoolProblem, partition: &BlockPartition) -> Result<Rational> {
    check_partition(p, partition)?;
    Ok(partition
        .blocks
        .iter()
        .map(|b| b.iter().map(|&i| &p.pool[i - 1]).product::<Rational>())
        .sum())
}

/// Product over blocks of the block sums.
pub fn block_w(p: &PoolProblem, partition: &BlockPartition) -> Result<Rational> {
    check_partition(p, partition)?;
    Ok(partition
        .blocks
        .iter()
        .map(|b| b.iter().map(|&i| &p.pool[i - 1]).sum::<Rational>())
        .product())
}

/// Which block objective the brute-force search optimizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockObjective {
    V,
    W,
}

fn binomial_u128(n: u128, r: u128) -> Option<u128> {
    if r > n {
        return Some(0);
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = acc.checked_mul(n - i)?;
        acc /= i + 1;
    }
    Some(acc)
}

/// Number of partitions of `nk` items into `n` unordered blocks of `k`.
pub fn partition_count(n: usize, k: usize) -> Option<u128> {
    let mut rem = (n * k) as u128;
    let mut acc: u128 = 1;
    while rem > 0 {
        acc = acc.checked_mul(binomial_u128(rem - 1, k as u128 - 1)?)?;
        rem -= k as u128;
    }
    Some(acc)
}

/// Depth-first enumeration over the remaining elements; the smallest
/// unused index always leads the next block, so blocks come out in
/// canonical order.
pub(crate) fn complete_partition(
    pool_len: usize,
    k: usize,
    used: &mut [bool],
    blocks: &mut Vec<Vec<u8>>,
    visit: &mut impl FnMut(&[Vec<u8>]),
) {
    let leader = match used.iter().position(|u| !u) {
        None => {
            visit(blocks);
            return;
        }
        Some(l) => l,
    };
    used[leader] = true;
    let avail: Vec<u8> = (leader + 1..pool_len)
        .filter(|&i| !used[i])
        .map(|i| i as u8)
        .collect();
    let r = k - 1;
    if avail.len() < r {
        used[leader] = false;
        return;
    }
    let mut comb: Vec<usize> = (0..r).collect();
    loop {
        let mut block = Vec::with_capacity(k);
        block.push(leader as u8);
        for &c in &comb {
            block.push(avail[c]);
            used[avail[c] as usize] = true;
        }
        blocks.push(block);
        complete_partition(pool_len, k, used, blocks, visit);
        let block = blocks.pop().expect("pushed above");
        for &b in &block[1..] {
            used[b as usize] = false;
        }
        if r == 0 {
            break;
        }
        // next r-combination of 0..avail.len()
        let mut pos = r;
        loop {
            if pos == 0 {
                used[leader] = false;
                return;
            }
            pos -= 1;
            if comb[pos] < avail.len() - (r - pos) {
                comb[pos] += 1;
                for j in pos + 1..r {
                    comb[j] = comb[j - 1] + 1;
                }
                break;
            }
        }
    }
    used[leader] = false;
}

fn partition_from(blocks: &[Vec<u8>]) -> BlockPartition {
    BlockPartition {
        blocks: blocks
            .iter()
            .map(|b| b.iter().map(|&i| i as usize + 1).collect())
            .collect(),
    }
}

/// Exhaustive (min, max) of `v` or `w` over all equal-size-block
/// partitions, parallelized over the choice of the first block.
pub fn pool_extrema_brute(
    p: &PoolProblem,
    objective: BlockObjective,
    limits: &Limits,
) -> Result<(ExtremalResult<BlockPartition>, ExtremalResult<BlockPartition>)> {
    let count = partition_count(p.n, p.k).ok_or(Error::SizeLimit {
        needed: u128::MAX,
        limit: limits.max_nodes as u128,
    })?;
    limits.check(count)?;
    let pool_len = p.n * p.k;
    if pool_len > 250 {
        return Err(Error::SizeLimit {
            needed: count,
            limit: limits.max_nodes as u128,
        });
    }

    let eval = |blocks: &[Vec<u8>]| -> Rational {
        match objective {
            BlockObjective::V => blocks
                .iter()
                .map(|b| b.iter().map(|&i| &p.pool[i as usize]).product::<Rational>())
                .sum(),
            BlockObjective::W => blocks
                .iter()
                .map(|b| b.iter().map(|&i| &p.pool[i as usize]).sum::<Rational>())
                .product(),
        }
    };

    // branches: every possible first block (leader 0 plus k-1 companions)
    let mut branches: Vec<Vec<u8>> = Vec::new();
    {
        let r = p.k - 1;
        let m = pool_len - 1;
        let mut comb: Vec<usize> = (0..r).collect();
        loop {
            let mut first = Vec::with_capacity(p.k);
            first.push(0u8);
            for &c in &comb {
                first.push((c + 1) as u8);
            }
            branches.push(first);
            if r == 0 {
                break;
            }
            let mut pos = r;
            let mut done = true;
            while pos > 0 {
                pos -= 1;
                if comb[pos] < m - (r - pos) {
                    comb[pos] += 1;
                    for j in pos + 1..r {
                        comb[j] = comb[j - 1] + 1;
                    }
                    done = false;
                    break;
                }
            }
            if done {
                break;
            }
        }
    }

    let acc = map_merge(
        branches,
        |first| {
            let mut used = vec![false; pool_len];
            for &i in &first {
                used[i as usize] = true;
            }
            let mut blocks = vec![first];
            let mut acc: Option<MinMaxAcc<Vec<Vec<u8>>>> = None;
            complete_partition(pool_len, p.k, &mut used, &mut blocks, &mut |bs| {
                let value = eval(bs);
                match acc.as_mut() {
                    None => acc = Some(MinMaxAcc::seed(value, bs.to_vec())),
                    Some(a) => a.observe(value, &bs.to_vec()),
                }
            });
            acc.expect("every first block completes to at least one partition")
        },
        MinMaxAcc::merge,
    )
    .expect("at least one branch");

    let (min, max) = acc.into_results();
    Ok((
        min.map_witness(|b| partition_from(&b)),
        max.map_witness(|b| partition_from(&b)),
    ))
}

/// The sorted-pool constructions and AM-GM comparands.
#[derive(Clone, Debug, Serialize)]
pub struct SortedConstructions {
    /// Consecutive blocks of the ascending pool: maximizes `v`.
    pub v_max: Rational,
    /// Consecutive blocks of the ascending pool: minimizes `w`.
    pub w_min: Rational,
    /// `sum_i b_i b_{2n-i+1}` (k = 2 only): minimizes `v`.
    pub v_min_pairing: Option<Rational>,
    /// `prod_i (b_i + b_{2n-i+1})` (k = 2 only): maximizes `w`.
    pub w_max_pairing: Option<Rational>,
    /// `n^n * prod pool`: lower comparand for `v_min^n`.
    pub am_gm_lower_pow: Rational,
    /// `((sum pool)/n)^n`: upper bound for `w_max`.
    pub am_gm_upper: Rational,
}

pub fn sorted_constructions(p: &PoolProblem) -> SortedConstructions {
    let b = p.sorted_pool();
    let (n, k) = (p.n, p.k);
    let total = n * k;
    let v_max: Rational = (0..n)
        .map(|i| b[i * k..(i + 1) * k].iter().product::<Rational>())
        .sum();
    let w_min: Rational = (0..n)
        .map(|i| b[i * k..(i + 1) * k].iter().sum::<Rational>())
        .product();
    let (v_min_pairing, w_max_pairing) = if k == 2 {
        (
            Some((0..n).map(|i| &b[i] * &b[total - 1 - i]).sum()),
            Some((0..n).map(|i| &b[i] + &b[total - 1 - i]).product()),
        )
    } else {
        (None, None)
    };
    let n_rat = Rational::from_int(n as i64);
    let am_gm_lower_pow = n_rat.pow(n as i64) * b.iter().product::<Rational>();
    let am_gm_upper = (b.iter().sum::<Rational>() / &n_rat).pow(n as i64);
    SortedConstructions {
        v_max,
        w_min,
        v_min_pairing,
        w_max_pairing,
        am_gm_lower_pow,
        am_gm_upper,
    }
}

/// Closed forms on an arithmetic-progression pool of `kn` terms. The
/// gamma-ratio displays reduce to rising-factorial products, i.e. plain
/// products over consecutive blocks, which stay valid at `d = 0`.
#[derive(Clone, Debug, Serialize)]
pub struct ApClosedForms {
    pub v_max: Rational,
    pub w_min: Rational,
    /// `n^n * prod_i a_i`: lower comparand for `v_min^n`.
    pub v_min_lower_pow: Rational,
    /// `(k(a_1 + a_kn)/2)^n`.
    pub w_max_upper: Rational,
}

pub fn ap_closed_forms(ap: &ArithProgression, n: usize, k: usize) -> Result<ApClosedForms> {
    if ap.n != n * k {
        return Err(Error::Dimension(format!(
            "progression has {} terms, expected kn = {}",
            ap.n,
            n * k
        )));
    }
    let terms = ap.terms();
    let v_max: Rational = (0..n)
        .map(|i| terms[i * k..(i + 1) * k].iter().product::<Rational>())
        .sum();
    // w_min = k^n * prod_i (a1 + (ik - (k+1)/2) d)
    let k_rat = Rational::from_int(k as i64);
    let w_min = k_rat.pow(n as i64)
        * (1..=n)
            .map(|i| {
                let off = Rational::from_int((i * k) as i64)
                    - Rational::new(k as i64 + 1, 2);
                &ap.a1 + off * &ap.d
            })
            .product::<Rational>();
    let n_rat = Rational::from_int(n as i64);
    let v_min_lower_pow = n_rat.pow(n as i64) * terms.iter().product::<Rational>();
    let w_max_upper = (k_rat * (&ap.a1 + ap.term(n * k)) / Rational::from_int(2)).pow(n as i64);
    Ok(ApClosedForms {
        v_max,
        w_min,
        v_min_lower_pow,
        w_max_upper,
    })
}

/// Offsets the `j`-th member of a k-set of permutations of `{1..n}` by
/// `(j-1)n`, producing the block partition of `{1..kn}` that realizes the
/// same column-sum profile on an arithmetic pool.
fn offset_blocks(base: &PermMultiset, n: usize) -> BlockPartition {
    let k = base.k();
    let blocks: Vec<Vec<usize>> = (1..=n)
        .map(|i| {
            let mut block: Vec<usize> = base
                .perms()
                .iter()
                .enumerate()
                .map(|(j, sigma)| sigma.apply(i) + j * n)
                .collect();
            block.sort_unstable();
            block
        })
        .collect();
    BlockPartition::new(blocks, n, k).expect("offset construction partitions 1..=kn")
}

/// Closed form for `w_max` of the pooled variation on an arithmetic
/// progression, with the witness partition that achieves it.
pub fn w_max_variation(
    ap: &ArithProgression,
    n: usize,
    k: usize,
) -> Result<Option<(Rational, BlockPartition)>> {
    if ap.n != n * k {
        return Err(Error::Dimension(format!(
            "progression has {} terms, expected kn = {}",
            ap.n,
            n * k
        )));
    }
    if let Some((t, u)) = representable_2t_nu(n, k) {
        let value =
            (Rational::from_int(k as i64) * (&ap.a1 + ap.term(n * k)) / Rational::from_int(2))
                .pow(n as i64);
        let base = build_kset_even(n, t, u)?;
        return Ok(Some((value, offset_blocks(&base, n))));
    }
    if n % 2 == 0 && k % 2 == 1 && k >= n - 1 {
        let ka1 = Rational::from_int(k as i64) * &ap.a1;
        let half = |off: i64| {
            let c = Rational::from_int((k * (k * n - 1)) as i64 + off) / Rational::from_int(2);
            &ka1 + c * &ap.d
        };
        let value = half(-1).pow((n / 2) as i64) * half(1).pow((n / 2) as i64);
        let base = build_kset_odd(n, k)?;
        return Ok(Some((value, offset_blocks(&base, n))));
    }
    Ok(None)
}

/// `v_min = n c^k d^(k(b_1+b_kn)/2)` for a geometric-progression pool
/// with representable `k`.
pub fn gp_v_min_variation(gp: &GeomProgression, n: usize, k: usize) -> Result<Option<ExactPower>> {
    if gp.n() != n * k {
        return Err(Error::Dimension(format!(
            "progression has {} terms, expected kn = {}",
            gp.n(),
            n * k
        )));
    }
    if representable_2t_nu(n, k).is_none() {
        return Ok(None);
    }
    let coeff = Rational::from_int(n as i64) * gp.c.pow(k as i64);
    let exponent =
        Rational::from_int(k as i64) * (&gp.b.a1 + gp.b.term(n * k)) / Rational::from_int(2);
    Ok(Some(ExactPower::new(coeff, gp.d.clone(), exponent)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::parse_rationals;

    fn r(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn pool(s: &str, n: usize, k: usize) -> PoolProblem {
        PoolProblem::new(parse_rationals(s).unwrap(), n, k).unwrap()
    }

    fn part(blocks: &[&[usize]], n: usize, k: usize) -> BlockPartition {
        BlockPartition::new(blocks.iter().map(|b| b.to_vec()).collect(), n, k).unwrap()
    }

    #[test]
    fn block_value_examples() {
        let p = pool("1,2,3,4", 2, 2);
        let consec = part(&[&[1, 2], &[3, 4]], 2, 2);
        assert_eq!(block_v(&p, &consec).unwrap(), r(14));
        assert_eq!(block_w(&p, &consec).unwrap(), r(21));
        let paired = part(&[&[1, 4], &[2, 3]], 2, 2);
        assert_eq!(block_v(&p, &paired).unwrap(), r(10));
        assert_eq!(block_w(&p, &paired).unwrap(), r(25));

        let c = pool("5,5,5,5", 2, 2);
        assert_eq!(block_v(&c, &consec).unwrap(), r(50));
        assert_eq!(block_w(&c, &consec).unwrap(), r(100));
    }

    #[test]
    fn malformed_partitions_are_rejected() {
        assert!(BlockPartition::new(vec![vec![1, 2], vec![2, 3]], 2, 2).is_err());
        assert!(BlockPartition::new(vec![vec![1, 2], vec![3, 5]], 2, 2).is_err());
        assert!(BlockPartition::new(vec![vec![1, 2, 3]], 1, 2).is_err());
        let p = pool("1,2,3,4", 2, 2);
        let wrong = part(&[&[1, 2, 3], &[4, 5, 6]], 2, 3);
        assert!(block_v(&p, &wrong).is_err());
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partition_count(2, 2), Some(3));
        assert_eq!(partition_count(3, 3), Some(280));
        assert_eq!(partition_count(4, 1), Some(1));
        assert_eq!(partition_count(1, 5), Some(1));
    }

    #[test]
    fn brute_examples() {
        let limits = Limits::default();
        let p = pool("1,2,3,4", 2, 2);
        let (vmin, vmax) = pool_extrema_brute(&p, BlockObjective::V, &limits).unwrap();
        assert_eq!(vmin.value, r(10));
        assert_eq!(vmax.value, r(14));
        assert_eq!(vmin.witness, part(&[&[1, 4], &[2, 3]], 2, 2));
        let (wmin, wmax) = pool_extrema_brute(&p, BlockObjective::W, &limits).unwrap();
        assert_eq!(wmin.value, r(21));
        assert_eq!(wmax.value, r(25));
        assert_eq!(wmin.nodes_explored, 3);

        let six = PoolProblem::integers(2, 3);
        let (_, wmax6) = pool_extrema_brute(&six, BlockObjective::W, &limits).unwrap();
        assert_eq!(wmax6.value, r(110));

        let flat = pool("2,2,2,2", 2, 2);
        let (fmin, fmax) = pool_extrema_brute(&flat, BlockObjective::V, &limits).unwrap();
        assert_eq!(fmin.value, fmax.value);
    }

    #[test]
    fn brute_witness_reproduces_value_and_ties_counted() {
        let limits = Limits::default();
        // v_min on 1..6 into two triples is achieved twice: {1,4,6},{2,3,5}
        // and {1,5,6},{2,3,4}, both 54.
        let p = PoolProblem::integers(2, 3);
        let (vmin, _) = pool_extrema_brute(&p, BlockObjective::V, &limits).unwrap();
        assert_eq!(vmin.value, r(54));
        assert_eq!(vmin.optima_count, 2);
        assert_eq!(vmin.witness, part(&[&[1, 4, 6], &[2, 3, 5]], 2, 3));
        assert_eq!(block_v(&p, &vmin.witness).unwrap(), vmin.value);
    }

    #[test]
    fn sorted_construction_examples() {
        let p = pool("4,2,1,3", 2, 2);
        let sc = sorted_constructions(&p);
        assert_eq!(sc.v_max, r(14));
        assert_eq!(sc.v_min_pairing, Some(r(10)));
        assert_eq!(sc.w_min, r(21));
        assert_eq!(sc.w_max_pairing, Some(r(25)));

        let six = PoolProblem::integers(2, 3);
        let sc6 = sorted_constructions(&six);
        assert_eq!(sc6.v_max, r(126));
        assert_eq!(sc6.w_min, r(90));
        assert_eq!(sc6.v_min_pairing, None);

        let z = pool("0,0,1,1", 2, 2);
        assert_eq!(sorted_constructions(&z).v_min_pairing, Some(r(0)));
    }

    #[test]
    fn ap_closed_form_examples() {
        let ap = ArithProgression::integers(4);
        let forms = ap_closed_forms(&ap, 2, 2).unwrap();
        assert_eq!(forms.v_max, r(14));
        assert_eq!(forms.w_min, r(21));
        assert_eq!(forms.w_max_upper, r(25));

        let ap6 = ArithProgression::integers(6);
        let forms6 = ap_closed_forms(&ap6, 2, 3).unwrap();
        assert_eq!(forms6.w_min, r(90));
        assert_eq!(forms6.v_max, r(126));

        let flat = ArithProgression::new(r(3), r(0), 6).unwrap();
        let f = ap_closed_forms(&flat, 2, 3).unwrap();
        assert_eq!(f.v_max, r(2) * r(27));
        assert_eq!(f.w_min, r(81));

        assert!(ap_closed_forms(&ap, 3, 2).is_err());
    }

    #[test]
    fn w_max_variation_examples() {
        let ap9 = ArithProgression::integers(9);
        let (value, witness) = w_max_variation(&ap9, 3, 3).unwrap().unwrap();
        assert_eq!(value, r(3375));
        assert_eq!(witness, part(&[&[1, 5, 9], &[2, 6, 7], &[3, 4, 8]], 3, 3));
        let p9 = PoolProblem::integers(3, 3);
        assert_eq!(block_w(&p9, &witness).unwrap(), value);

        let ap6 = ArithProgression::integers(6);
        let (v6, wit6) = w_max_variation(&ap6, 2, 3).unwrap().unwrap();
        assert_eq!(v6, r(110));
        let p6 = PoolProblem::integers(2, 3);
        assert_eq!(block_w(&p6, &wit6).unwrap(), v6);

        let flat = ArithProgression::new(r(2), r(0), 6).unwrap();
        let (vf, _) = w_max_variation(&flat, 2, 3).unwrap().unwrap();
        assert_eq!(vf, r(36));

        // n = 4, k = 1: not representable, k < n-1
        let ap4 = ArithProgression::integers(4);
        assert!(w_max_variation(&ap4, 4, 1).unwrap().is_none());
    }

    #[test]
    fn gp_v_min_variation_examples() {
        let b = ArithProgression::new(r(0), r(1), 4).unwrap();
        let gp = GeomProgression::new(r(1), r(2), b).unwrap();
        let p = gp_v_min_variation(&gp, 2, 2).unwrap().unwrap();
        assert_eq!(p.value(), Some(r(16)));

        let b1 = ArithProgression::new(r(0), r(1), 2).unwrap();
        let gp1 = GeomProgression::new(r(1), r(3), b1).unwrap();
        let p1 = gp_v_min_variation(&gp1, 1, 2).unwrap().unwrap();
        assert_eq!(p1.value(), Some(r(3)));

        let bflat = ArithProgression::new(r(0), r(0), 6).unwrap();
        let gpflat = GeomProgression::new(r(2), r(7), bflat).unwrap();
        let pf = gp_v_min_variation(&gpflat, 3, 2).unwrap().unwrap();
        assert_eq!(pf.value(), Some(r(3) * r(4)));
    }

    #[test]
    fn size_limit_is_loud() {
        let limits = Limits { max_nodes: 100 };
        let p = PoolProblem::integers(3, 3);
        assert!(matches!(
            pool_extrema_brute(&p, BlockObjective::V, &limits),
            Err(Error::SizeLimit { .. })
        ));
    }
}
