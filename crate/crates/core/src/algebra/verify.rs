//! Exhaustive exact verification of the sandwich inequalities over
//! ordered structures: the two-chain rearrangement sandwich, the
//! Chebyshev sum corollary, the pooled pairing/blocking variation, the
//! Kronecker/Hadamard family, and the commuting multi-chain theorems.
//!
//! Every verifier first re-certifies its hypotheses (chain order,
//! membership, commutation where products demand it) instead of trusting
//! the caller, then enumerates all permutations within the ceilings.

use serde::Serialize;
use serde_json::json;

use crate::algebra::element::{Carrier, Element, StarOp};
use crate::algebra::matrix::SymMatrix;
use crate::algebra::psd::{loewner_leq, psd_check};
use crate::algebra::OrderedAlgebra;
use crate::error::{Error, Result};
use crate::perm::{all_permutations, factorial_u128, Permutation};
use crate::pool::{complete_partition, partition_count};
use crate::Limits;

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub passed: bool,
    pub checks: u64,
    pub counterexample: Option<serde_json::Value>,
}

impl VerifyReport {
    fn pass(checks: u64) -> Self {
        VerifyReport {
            passed: true,
            checks,
            counterexample: None,
        }
    }

    fn fail(checks: u64, counterexample: serde_json::Value) -> Self {
        VerifyReport {
            passed: false,
            checks,
            counterexample: Some(counterexample),
        }
    }
}

fn certify_chain(carrier: &Carrier, chain: &[Element], label: &str) -> Result<()> {
    if chain.is_empty() {
        return Err(Error::Invalid(format!("chain {label} is empty")));
    }
    for e in chain {
        if !carrier.contains(e) {
            return Err(Error::Hypothesis(format!(
                "chain {label} has an element outside carrier {carrier:?}"
            )));
        }
    }
    for w in chain.windows(2) {
        if !carrier.leq(&w[0], &w[1])? {
            return Err(Error::Hypothesis(format!(
                "chain {label} is not nondecreasing in its carrier order"
            )));
        }
    }
    Ok(())
}

fn check_matmul_commutation(star: &StarOp, elems: &[&Element]) -> Result<()> {
    if *star != StarOp::MatMul {
        return Ok(());
    }
    for (i, x) in elems.iter().enumerate() {
        for y in elems.iter().skip(i + 1) {
            let (Element::Matrix(a), Element::Matrix(b)) = (x, y) else {
                return Err(Error::Hypothesis(
                    "matrix product needs matrix elements".into(),
                ));
            };
            if !a.commutes_with(b)? {
                return Err(Error::Hypothesis(
                    "matrix-product verification needs pairwise commuting inputs".into(),
                ));
            }
        }
    }
    Ok(())
}

fn star_sum_pairing(
    star: &StarOp,
    a: &[Element],
    b: &[Element],
    index: impl Fn(usize) -> usize,
) -> Result<Element> {
    let terms: Vec<Element> = (0..a.len())
        .map(|i| star.apply(&a[i], &b[index(i)]))
        .collect::<Result<_>>()?;
    Element::sum(&terms)
}

fn star_prod_pairing(
    star: &StarOp,
    a: &[Element],
    b: &[Element],
    index: impl Fn(usize) -> usize,
) -> Result<Element> {
    let factors: Vec<Element> = (0..a.len())
        .map(|i| a[i].add(&b[index(i)]))
        .collect::<Result<_>>()?;
    star.apply_fold(&factors)
}

/// Two-chain rearrangement sandwich over every permutation: reversed
/// pairing below, identity pairing above. When the structure is a
/// commutative square (`I = J = K`, symmetric product) and both chains
/// start nonnegative, the reversed product-of-sums sandwich is checked
/// too.
pub fn verify_ri_calc(
    alg: &OrderedAlgebra,
    a: &[Element],
    b: &[Element],
    limits: &Limits,
) -> Result<VerifyReport> {
    certify_chain(&alg.carrier_i, a, "a")?;
    certify_chain(&alg.carrier_j, b, "b")?;
    if a.len() != b.len() {
        return Err(Error::Dimension("chains must have equal length".into()));
    }
    let n = a.len();
    limits.check(factorial_u128(n).unwrap_or(u128::MAX))?;
    let star = &alg.star;
    let korder = &alg.carrier_k;

    let lower = star_sum_pairing(star, a, b, |i| n - 1 - i)?;
    let upper = star_sum_pairing(star, a, b, |i| i)?;
    let mut checks = 0u64;

    let product_branch = alg.carrier_i == alg.carrier_j
        && alg.carrier_j == alg.carrier_k
        && alg.symmetric_star
        && alg.carrier_i.nonneg(&a[0])?
        && alg.carrier_i.nonneg(&b[0])?;
    let (plower, pupper) = if product_branch {
        let all: Vec<&Element> = a.iter().chain(b.iter()).collect();
        check_matmul_commutation(star, &all)?;
        (
            Some(star_prod_pairing(star, a, b, |i| n - 1 - i)?),
            Some(star_prod_pairing(star, a, b, |i| i)?),
        )
    } else {
        (None, None)
    };

    for sigma in all_permutations(n, limits)? {
        let idx = |i: usize| sigma.image()[i] as usize - 1;
        let mid = star_sum_pairing(star, a, b, idx)?;
        checks += 2;
        if !(korder.leq(&lower, &mid)? && korder.leq(&mid, &upper)?) {
            return Ok(VerifyReport::fail(
                checks,
                json!({"branch": "sum", "sigma": sigma.to_string()}),
            ));
        }
        if let (Some(pl), Some(pu)) = (&plower, &pupper) {
            let pm = star_prod_pairing(star, a, b, idx)?;
            checks += 2;
            // products of sums: reversed pairing dominates
            if !(korder.leq(pu, &pm)? && korder.leq(&pm, pl)?) {
                return Ok(VerifyReport::fail(
                    checks,
                    json!({"branch": "product", "sigma": sigma.to_string()}),
                ));
            }
        }
    }
    Ok(VerifyReport::pass(checks))
}

/// Chebyshev sum inequality: `(sum a_i) * (sum b_j) <= n sum a_i * b_i`.
pub fn verify_chebyshev_calc(
    alg: &OrderedAlgebra,
    a: &[Element],
    b: &[Element],
) -> Result<VerifyReport> {
    certify_chain(&alg.carrier_i, a, "a")?;
    certify_chain(&alg.carrier_j, b, "b")?;
    if a.len() != b.len() {
        return Err(Error::Dimension("chains must have equal length".into()));
    }
    let n = a.len();
    let lhs = alg.star.apply(&Element::sum(a)?, &Element::sum(b)?)?;
    let aligned: Vec<Element> = (0..n)
        .map(|i| alg.star.apply(&a[i], &b[i]))
        .collect::<Result<_>>()?;
    let rhs = Element::sum(&aligned)?.scale_int(n as i64);
    if alg.carrier_k.leq(&lhs, &rhs)? {
        Ok(VerifyReport::pass(1))
    } else {
        Ok(VerifyReport::fail(
            1,
            json!({"lhs": lhs, "rhs": rhs, "check": "chebyshev"}),
        ))
    }
}

/// Pooled variation over one ordered chain of `kn` elements, verified
/// against every partition into `n` blocks of `k`. For `k = 2` the full
/// two-sided pairing sandwich and the split Chebyshev variant run; for
/// larger `k` the one-sided consecutive-block bounds from the multi
/// corollary run (these need a nonnegative chain).
pub fn verify_variation_calc(
    alg: &OrderedAlgebra,
    pool: &[Element],
    k: usize,
    limits: &Limits,
) -> Result<VerifyReport> {
    if !alg.symmetric_star {
        return Err(Error::Hypothesis(
            "the pooled variation needs a symmetric product".into(),
        ));
    }
    if alg.carrier_i != alg.carrier_j {
        return Err(Error::Hypothesis(
            "the pooled variation needs I = J".into(),
        ));
    }
    if k < 2 {
        return Err(Error::Invalid("block size k must be at least 2".into()));
    }
    if pool.is_empty() || pool.len() % k != 0 {
        return Err(Error::Dimension(format!(
            "pool of {} elements does not split into blocks of {k}",
            pool.len()
        )));
    }
    certify_chain(&alg.carrier_i, pool, "pool")?;
    let n = pool.len() / k;
    let len = pool.len();
    let count = partition_count(n, k).unwrap_or(u128::MAX);
    limits.check(count)?;
    let star = &alg.star;
    let korder = &alg.carrier_k;
    let iorder = &alg.carrier_i;
    let nonneg = iorder.nonneg(&pool[0])?;
    if k >= 3 && !nonneg {
        return Err(Error::Hypothesis(
            "block bounds for k >= 3 need a nonnegative chain".into(),
        ));
    }
    let refs: Vec<&Element> = pool.iter().collect();
    check_matmul_commutation(star, &refs)?;

    let block_star = |idx: &[usize]| -> Result<Element> {
        let factors: Vec<Element> = idx.iter().map(|&i| pool[i].clone()).collect();
        star.apply_fold(&factors)
    };
    let block_sum = |idx: &[usize]| -> Result<Element> {
        let terms: Vec<Element> = idx.iter().map(|&i| pool[i].clone()).collect();
        Element::sum(&terms)
    };

    let consecutive: Vec<Vec<usize>> = (0..n).map(|j| (j * k..(j + 1) * k).collect()).collect();
    let sum_upper = {
        let terms: Vec<Element> = consecutive
            .iter()
            .map(|b| block_star(b))
            .collect::<Result<_>>()?;
        Element::sum(&terms)?
    };
    let sum_lower = if k == 2 {
        let terms: Vec<Element> = (0..n)
            .map(|i| star.apply(&pool[i], &pool[len - 1 - i]))
            .collect::<Result<_>>()?;
        Some(Element::sum(&terms)?)
    } else {
        None
    };
    let product_branch = alg.carrier_i == alg.carrier_k && nonneg;
    let prod_lower = if product_branch {
        let factors: Vec<Element> = consecutive
            .iter()
            .map(|b| block_sum(b))
            .collect::<Result<_>>()?;
        Some(star.apply_fold(&factors)?)
    } else {
        None
    };
    let prod_upper = if product_branch && k == 2 {
        let factors: Vec<Element> = (0..n)
            .map(|i| pool[i].add(&pool[len - 1 - i]))
            .collect::<Result<_>>()?;
        Some(star.apply_fold(&factors)?)
    } else {
        None
    };

    let mut checks = 0u64;
    let mut failure: Option<serde_json::Value> = None;
    let mut used = vec![false; len];
    let mut blocks: Vec<Vec<u8>> = Vec::new();
    complete_partition(len, k, &mut used, &mut blocks, &mut |bs| {
        if failure.is_some() {
            return;
        }
        let run = || -> Result<Option<serde_json::Value>> {
            let idx_blocks: Vec<Vec<usize>> = bs
                .iter()
                .map(|b| b.iter().map(|&i| i as usize).collect())
                .collect();
            let partition_desc = || {
                json!(idx_blocks
                    .iter()
                    .map(|b| b.iter().map(|&i| i + 1).collect::<Vec<usize>>())
                    .collect::<Vec<_>>())
            };
            let s_terms: Vec<Element> = idx_blocks
                .iter()
                .map(|b| block_star(b))
                .collect::<Result<_>>()?;
            let s_val = Element::sum(&s_terms)?;
            if !korder.leq(&s_val, &sum_upper)? {
                return Ok(Some(json!({
                    "check": "block-sum-of-products-max",
                    "partition": partition_desc(),
                })));
            }
            if let Some(lowr) = &sum_lower {
                if !korder.leq(lowr, &s_val)? {
                    return Ok(Some(json!({
                        "check": "pairing-sum-of-products-min",
                        "partition": partition_desc(),
                    })));
                }
            }
            if let Some(pl) = &prod_lower {
                let p_factors: Vec<Element> = idx_blocks
                    .iter()
                    .map(|b| block_sum(b))
                    .collect::<Result<_>>()?;
                let p_val = star.apply_fold(&p_factors)?;
                if !iorder.leq(pl, &p_val)? {
                    return Ok(Some(json!({
                        "check": "block-product-of-sums-min",
                        "partition": partition_desc(),
                    })));
                }
                if let Some(pu) = &prod_upper {
                    if !iorder.leq(&p_val, pu)? {
                        return Ok(Some(json!({
                            "check": "pairing-product-of-sums-max",
                            "partition": partition_desc(),
                        })));
                    }
                }
            }
            Ok(None)
        };
        checks += 1;
        match run() {
            Ok(None) => {}
            Ok(Some(ce)) => failure = Some(ce),
            Err(e) => failure = Some(json!({"error": e.to_string()})),
        }
    });
    if let Some(ce) = failure {
        return Ok(VerifyReport::fail(checks, ce));
    }

    // split Chebyshev variant for k = 2: any half/half split of the pool
    if k == 2 {
        let rhs = sum_upper.scale_int(n as i64);
        let mut comb: Vec<usize> = (0..n).collect();
        loop {
            let in_set: Vec<bool> = {
                let mut f = vec![false; len];
                for &i in &comb {
                    f[i] = true;
                }
                f
            };
            let left: Vec<Element> = (0..len)
                .filter(|&i| in_set[i])
                .map(|i| pool[i].clone())
                .collect();
            let right: Vec<Element> = (0..len)
                .filter(|&i| !in_set[i])
                .map(|i| pool[i].clone())
                .collect();
            let lhs = star.apply(&Element::sum(&left)?, &Element::sum(&right)?)?;
            checks += 1;
            if !korder.leq(&lhs, &rhs)? {
                return Ok(VerifyReport::fail(
                    checks,
                    json!({
                        "check": "split-chebyshev",
                        "split": comb.iter().map(|&i| i + 1).collect::<Vec<usize>>(),
                    }),
                ));
            }
            // next n-combination of 0..len
            let mut pos = n;
            let mut done = true;
            while pos > 0 {
                pos -= 1;
                if comb[pos] < len - (n - pos) {
                    comb[pos] += 1;
                    for j in pos + 1..n {
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
    Ok(VerifyReport::pass(checks))
}

fn certify_loewner_chain(chain: &[SymMatrix], label: &str) -> Result<()> {
    if chain.is_empty() {
        return Err(Error::Invalid(format!("chain {label} is empty")));
    }
    for w in chain.windows(2) {
        if !loewner_leq(&w[0], &w[1])? {
            return Err(Error::Hypothesis(format!(
                "chain {label} is not Loewner-nondecreasing"
            )));
        }
    }
    Ok(())
}

fn sym_sum(terms: impl Iterator<Item = Result<SymMatrix>>) -> Result<SymMatrix> {
    let mut acc: Option<SymMatrix> = None;
    for t in terms {
        let t = t?;
        acc = Some(match acc {
            None => t,
            Some(s) => s.add(&t)?,
        });
    }
    acc.ok_or_else(|| Error::Invalid("empty sum".into()))
}

/// Kronecker and Hadamard sandwich family over two Loewner chains (no
/// commutation hypotheses): the Kronecker sum sandwich, the Hadamard sum
/// sandwich, the reversed Hadamard product-of-sums sandwich on PSD
/// chains, and the circular Hadamard variant over necklaces.
pub fn verify_kron_hadamard(
    a: &[SymMatrix],
    b: &[SymMatrix],
    limits: &Limits,
) -> Result<VerifyReport> {
    certify_loewner_chain(a, "a")?;
    certify_loewner_chain(b, "b")?;
    if a.len() != b.len() {
        return Err(Error::Dimension("chains must have equal length".into()));
    }
    let n = a.len();
    limits.check(factorial_u128(n).unwrap_or(u128::MAX))?;
    let mut checks = 0u64;

    let kron_pair = |index: &dyn Fn(usize) -> usize| -> Result<SymMatrix> {
        sym_sum((0..n).map(|i| Ok(a[i].kronecker(&b[index(i)]))))
    };
    let klower = kron_pair(&|i| n - 1 - i)?;
    let kupper = kron_pair(&|i| i)?;

    let same_order = a[0].order() == b[0].order();
    let (hlower, hupper) = if same_order {
        let had_pair = |index: &dyn Fn(usize) -> usize| -> Result<SymMatrix> {
            sym_sum((0..n).map(|i| a[i].hadamard(&b[index(i)])))
        };
        (Some(had_pair(&|i| n - 1 - i)?), Some(had_pair(&|i| i)?))
    } else {
        (None, None)
    };
    let psd_chains = same_order && psd_check(&a[0]) && psd_check(&b[0]);
    let had_prod = |index: &dyn Fn(usize) -> usize| -> Result<SymMatrix> {
        let mut acc: Option<SymMatrix> = None;
        for i in 0..n {
            let f = a[i].add(&b[index(i)])?;
            acc = Some(match acc {
                None => f,
                Some(s) => s.hadamard(&f)?,
            });
        }
        Ok(acc.expect("n >= 1"))
    };
    let (plower, pupper) = if psd_chains {
        (Some(had_prod(&|i| n - 1 - i)?), Some(had_prod(&|i| i)?))
    } else {
        (None, None)
    };

    for sigma in all_permutations(n, limits)? {
        let idx = |i: usize| sigma.image()[i] as usize - 1;
        let kmid = kron_pair(&idx)?;
        checks += 2;
        if !(loewner_leq(&klower, &kmid)? && loewner_leq(&kmid, &kupper)?) {
            return Ok(VerifyReport::fail(
                checks,
                json!({"check": "kronecker-sum", "sigma": sigma.to_string()}),
            ));
        }
        if let (Some(hl), Some(hu)) = (&hlower, &hupper) {
            let hmid = sym_sum((0..n).map(|i| a[i].hadamard(&b[idx(i)])))?;
            checks += 2;
            if !(loewner_leq(hl, &hmid)? && loewner_leq(&hmid, hu)?) {
                return Ok(VerifyReport::fail(
                    checks,
                    json!({"check": "hadamard-sum", "sigma": sigma.to_string()}),
                ));
            }
        }
        if let (Some(pl), Some(pu)) = (&plower, &pupper) {
            let pm = had_prod(&idx)?;
            checks += 2;
            if !(loewner_leq(pu, &pm)? && loewner_leq(&pm, pl)?) {
                return Ok(VerifyReport::fail(
                    checks,
                    json!({"check": "hadamard-product-of-sums", "sigma": sigma.to_string()}),
                ));
            }
        }
    }

    // circular Hadamard variant on the `a` chain
    if same_order && n >= 3 {
        let circ = |image: &[u32]| -> Result<SymMatrix> {
            sym_sum((0..n).map(|i| {
                a[image[i] as usize - 1].hadamard(&a[image[(i + 1) % n] as usize - 1])
            }))
        };
        let m1 = crate::framework::sigma_m1(n)?;
        let m2 = crate::framework::sigma_m2(n)?;
        let vlow = circ(m1.image())?;
        let vhigh = circ(m2.image())?;
        for image in crate::framework::necklace_images(n) {
            let v = circ(&image)?;
            checks += 2;
            if !(loewner_leq(&vlow, &v)? && loewner_leq(&v, &vhigh)?) {
                return Ok(VerifyReport::fail(
                    checks,
                    json!({
                        "check": "hadamard-circular",
                        "necklace": Permutation::from_image(image.clone())?.to_string(),
                    }),
                ));
            }
        }
    }

    Ok(VerifyReport::pass(checks))
}

fn sym_matmul_fold(factors: &[&SymMatrix]) -> Result<SymMatrix> {
    let mut iter = factors.iter();
    let first = (*iter.next().ok_or_else(|| Error::Invalid("empty product".into()))?).clone();
    iter.try_fold(first, |acc, f| {
        SymMatrix::new(acc.matrix().matmul(f.matrix())?).map_err(|_| {
            Error::Hypothesis("product left the symmetric carrier (inputs do not commute)".into())
        })
    })
}

/// Commuting-chain theorems: for `k` Loewner chains of PSD matrices that
/// all commute pairwise, the aligned sum of products dominates every
/// permuted combination, and the aligned product of sums is dominated by
/// every permuted combination. All `(n!)^k` tuples are enumerated.
pub fn verify_hermitian_multi(chains: &[Vec<SymMatrix>], limits: &Limits) -> Result<VerifyReport> {
    if chains.is_empty() {
        return Err(Error::Invalid("need at least one chain".into()));
    }
    let k = chains.len();
    let n = chains[0].len();
    if chains.iter().any(|c| c.len() != n) {
        return Err(Error::Dimension("chains must have equal length".into()));
    }
    for (j, chain) in chains.iter().enumerate() {
        certify_loewner_chain(chain, &format!("chain {j}"))?;
        if !psd_check(&chain[0]) {
            return Err(Error::Hypothesis(format!(
                "chain {j} must start at a PSD matrix"
            )));
        }
    }
    let flat: Vec<&SymMatrix> = chains.iter().flatten().collect();
    for (i, x) in flat.iter().enumerate() {
        for y in flat.iter().skip(i + 1) {
            if !x.matrix().commutes_with(y.matrix())? {
                return Err(Error::Hypothesis(
                    "all chain members must commute pairwise".into(),
                ));
            }
        }
    }
    let nf = factorial_u128(n).unwrap_or(u128::MAX);
    let mut total: u128 = 1;
    for _ in 0..k {
        total = total.saturating_mul(nf);
    }
    limits.check(total)?;
    let perms = all_permutations(n, limits)?;

    let sum_of_products = |tuple: &[usize]| -> Result<SymMatrix> {
        sym_sum((0..n).map(|i| {
            let factors: Vec<&SymMatrix> = (0..k)
                .map(|j| &chains[j][perms[tuple[j]].image()[i] as usize - 1])
                .collect();
            sym_matmul_fold(&factors)
        }))
    };
    let product_of_sums = |tuple: &[usize]| -> Result<SymMatrix> {
        let factors: Vec<SymMatrix> = (0..n)
            .map(|i| {
                sym_sum((0..k).map(|j| {
                    Ok(chains[j][perms[tuple[j]].image()[i] as usize - 1].clone())
                }))
            })
            .collect::<Result<_>>()?;
        let refs: Vec<&SymMatrix> = factors.iter().collect();
        sym_matmul_fold(&refs)
    };

    let aligned = vec![0usize; k];
    let rhs_sum = sum_of_products(&aligned)?;
    let rhs_prod = product_of_sums(&aligned)?;

    let mut checks = 0u64;
    let mut tuple = vec![0usize; k];
    loop {
        let lhs_sum = sum_of_products(&tuple)?;
        let lhs_prod = product_of_sums(&tuple)?;
        checks += 2;
        let describe = || {
            json!(tuple
                .iter()
                .map(|&t| perms[t].to_string())
                .collect::<Vec<String>>())
        };
        if !loewner_leq(&lhs_sum, &rhs_sum)? {
            return Ok(VerifyReport::fail(
                checks,
                json!({"check": "sum-of-products", "sigmas": describe()}),
            ));
        }
        if !loewner_leq(&rhs_prod, &lhs_prod)? {
            return Ok(VerifyReport::fail(
                checks,
                json!({"check": "product-of-sums", "sigmas": describe()}),
            ));
        }
        let mut pos = k;
        let mut advanced = false;
        while pos > 0 {
            pos -= 1;
            if tuple[pos] + 1 < perms.len() {
                tuple[pos] += 1;
                for t in tuple[pos + 1..].iter_mut() {
                    *t = 0;
                }
                advanced = true;
                break;
            }
        }
        if !advanced {
            break;
        }
    }
    Ok(VerifyReport::pass(checks))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::chain::{
        commuting_psd_chains, element_chain, element_chain_pair, generate_loewner_chain,
        SampleKind,
    };
    use crate::rational::Rational;

    fn scalars(vals: &[i64]) -> Vec<Element> {
        vals.iter()
            .map(|&v| Element::Scalar(Rational::from_int(v)))
            .collect()
    }

    fn scalar_alg() -> OrderedAlgebra {
        OrderedAlgebra::by_name("scalar-mul", 1).unwrap()
    }

    #[test]
    fn scalar_ri_matches_hand_values() {
        let limits = Limits::default();
        let alg = scalar_alg();
        let a = scalars(&[1, 2, 3]);
        let rep = verify_ri_calc(&alg, &a, &a, &limits).unwrap();
        assert!(rep.passed);
        // product branch ran: 3! sigmas, 4 checks each
        assert_eq!(rep.checks, 24);
    }

    #[test]
    fn scalar_chebyshev_example() {
        let alg = scalar_alg();
        let a = scalars(&[1, 2]);
        let rep = verify_chebyshev_calc(&alg, &a, &a).unwrap();
        assert!(rep.passed);
        let flat = scalars(&[5, 5, 5]);
        assert!(verify_chebyshev_calc(&alg, &flat, &flat).unwrap().passed);
    }

    #[test]
    fn unsorted_chain_is_rejected() {
        let limits = Limits::default();
        let alg = scalar_alg();
        let bad = scalars(&[3, 1]);
        assert!(matches!(
            verify_ri_calc(&alg, &bad, &bad, &limits),
            Err(Error::Hypothesis(_))
        ));
    }

    #[test]
    fn scalar_variation_matches_pool_numbers() {
        let limits = Limits::default();
        let alg = scalar_alg();
        let pool = scalars(&[1, 2, 3, 4]);
        let rep = verify_variation_calc(&alg, &pool, 2, &limits).unwrap();
        assert!(rep.passed);
        assert!(verify_variation_calc(&alg, &scalars(&[1; 6]), 3, &limits)
            .unwrap()
            .passed);
    }

    #[test]
    fn dot_and_bilinear_rows_verify() {
        let limits = Limits::default();
        for name in ["dot", "bilinear"] {
            let alg = OrderedAlgebra::by_name(name, 2).unwrap();
            let (a, b) = element_chain_pair(&alg.carrier_i, 3, alg.sample, 23);
            assert!(verify_ri_calc(&alg, &a, &b, &limits).unwrap().passed);
            assert!(verify_chebyshev_calc(&alg, &a, &b).unwrap().passed);
            let pool = element_chain(&alg.carrier_i, 4, alg.sample, 29);
            assert!(verify_variation_calc(&alg, &pool, 2, &limits)
                .unwrap()
                .passed);
        }
    }

    #[test]
    fn hadamard_and_matmul_rows_verify() {
        let limits = Limits::default();
        for name in ["hadamard", "matmul-commuting", "frobenius"] {
            let alg = OrderedAlgebra::by_name(name, 2).unwrap();
            let (a, b) = element_chain_pair(&alg.carrier_i, 3, alg.sample, 31);
            let rep = verify_ri_calc(&alg, &a, &b, &limits).unwrap();
            assert!(rep.passed, "{name}: {:?}", rep.counterexample);
            assert!(verify_chebyshev_calc(&alg, &a, &b).unwrap().passed);
        }
    }

    #[test]
    fn matmul_without_commutation_is_a_hypothesis_error() {
        let limits = Limits::default();
        let alg = OrderedAlgebra::by_name("matmul-commuting", 2).unwrap();
        // independent Gram chains almost surely fail the commutation check
        let (a, b) = element_chain_pair(&alg.carrier_i, 3, SampleKind::Independent, 3);
        let res = verify_ri_calc(&alg, &a, &b, &limits);
        assert!(matches!(res, Err(Error::Hypothesis(_))));
    }

    #[test]
    fn kron_hadamard_family() {
        let limits = Limits::default();
        let a = generate_loewner_chain(2, 3, false, 41).matrices;
        let b = generate_loewner_chain(2, 3, false, 43).matrices;
        let rep = verify_kron_hadamard(&a, &b, &limits).unwrap();
        assert!(rep.passed, "{:?}", rep.counterexample);

        // 1x1 chains reduce to the scalar inequalities
        let a1 = generate_loewner_chain(1, 4, false, 45).matrices;
        let b1 = generate_loewner_chain(1, 4, false, 47).matrices;
        assert!(verify_kron_hadamard(&a1, &b1, &limits).unwrap().passed);
    }

    #[test]
    fn hermitian_multi_on_commuting_chains() {
        let limits = Limits::default();
        let chains = commuting_psd_chains(2, 2, 3, 51);
        let rep = verify_hermitian_multi(&chains, &limits).unwrap();
        assert!(rep.passed, "{:?}", rep.counterexample);
    }

    #[test]
    fn hermitian_multi_rejects_noncommuting() {
        let limits = Limits::default();
        let a = generate_loewner_chain(2, 2, false, 3).matrices;
        let b = generate_loewner_chain(2, 2, false, 4).matrices;
        assert!(matches!(
            verify_hermitian_multi(&[a, b], &limits),
            Err(Error::Hypothesis(_))
        ));
    }
}
