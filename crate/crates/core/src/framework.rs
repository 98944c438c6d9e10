//! The generalized rearrangement framework: pluggable combiner/aggregator
//! pairs over the rationals, the local exchange condition that drives the
//! sandwich inequalities, multi-sequence extensions, and the circular
//! variant with its explicit extremal arrangements.

use rand_chacha::ChaCha8Rng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::map_merge;
use crate::extremal::{ExtremalResult, MinMaxAcc};
use crate::perm::{all_permutations, Permutation};
use crate::rational::Rational;
use crate::sequence::OrderedSequence;
use crate::Limits;

/// Binary (or k-ary, by folding) combining function `f`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CombinerKind {
    Times,
    Plus,
    Max,
    Min,
}

impl CombinerKind {
    pub fn apply2(&self, x: &Rational, y: &Rational) -> Rational {
        match self {
            CombinerKind::Times => x * y,
            CombinerKind::Plus => x + y,
            CombinerKind::Max => x.clone().max(y.clone()),
            CombinerKind::Min => x.clone().min(y.clone()),
        }
    }

    /// k-ary extension by folding; all four kinds are associative.
    pub fn apply_k(&self, xs: &[Rational]) -> Rational {
        let mut iter = xs.iter();
        let first = iter.next().expect("combiner needs at least one argument").clone();
        iter.fold(first, |acc, x| self.apply2(&acc, x))
    }

    /// All listed combiners are symmetric in their arguments.
    pub fn symmetric(&self) -> bool {
        true
    }

    pub fn name(&self) -> &'static str {
        match self {
            CombinerKind::Times => "times",
            CombinerKind::Plus => "plus",
            CombinerKind::Max => "max",
            CombinerKind::Min => "min",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "times" => Some(CombinerKind::Times),
            "plus" => Some(CombinerKind::Plus),
            "max" => Some(CombinerKind::Max),
            "min" => Some(CombinerKind::Min),
            _ => None,
        }
    }
}

/// n-ary aggregating function `g`; every kind is permutation-invariant
/// (property S).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum AggregatorKind {
    Sum,
    NegProd,
    Max,
    NegMin,
    Prod,
    NegSum,
}

impl AggregatorKind {
    pub fn apply(&self, xs: &[Rational]) -> Rational {
        match self {
            AggregatorKind::Sum => xs.iter().sum(),
            AggregatorKind::NegProd => -xs.iter().product::<Rational>(),
            AggregatorKind::Max => xs.iter().cloned().reduce(Rational::max).expect("nonempty"),
            AggregatorKind::NegMin => {
                -xs.iter().cloned().reduce(Rational::min).expect("nonempty")
            }
            AggregatorKind::Prod => xs.iter().product(),
            AggregatorKind::NegSum => -xs.iter().sum::<Rational>(),
        }
    }

    pub fn property_s(&self) -> bool {
        true
    }

    pub fn name(&self) -> &'static str {
        match self {
            AggregatorKind::Sum => "sum",
            AggregatorKind::NegProd => "negprod",
            AggregatorKind::Max => "max",
            AggregatorKind::NegMin => "negmin",
            AggregatorKind::Prod => "prod",
            AggregatorKind::NegSum => "negsum",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "sum" => Some(AggregatorKind::Sum),
            "negprod" => Some(AggregatorKind::NegProd),
            "max" => Some(AggregatorKind::Max),
            "negmin" => Some(AggregatorKind::NegMin),
            "prod" => Some(AggregatorKind::Prod),
            "negsum" => Some(AggregatorKind::NegSum),
            _ => None,
        }
    }
}

/// The domain a pair is claimed to satisfy the exchange condition on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Domain {
    AllReals,
    NonnegReals,
}

/// One (f, g, domain) row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FgEntry {
    pub f: CombinerKind,
    pub g: AggregatorKind,
    pub domain: Domain,
}

impl FgEntry {
    pub fn new(f: CombinerKind, g: AggregatorKind, domain: Domain) -> Self {
        FgEntry { f, g, domain }
    }

    /// The CLI key, e.g. `times:sum`.
    pub fn key(&self) -> String {
        format!("{}:{}", self.f.name(), self.g.name())
    }

    fn check_domain(&self, values: &[&OrderedSequence]) -> Result<()> {
        if self.domain == Domain::NonnegReals
            && values.iter().any(|s| !s.is_nonnegative())
        {
            return Err(Error::Hypothesis(format!(
                "entry {} is only valid on nonnegative inputs",
                self.key()
            )));
        }
        Ok(())
    }
}

/// The twelve combiner/aggregator rows known to satisfy the exchange
/// condition on their stated domains.
pub fn catalog() -> Vec<FgEntry> {
    use AggregatorKind as G;
    use CombinerKind as F;
    use Domain::{AllReals as R, NonnegReals as R0};
    vec![
        FgEntry::new(F::Times, G::Sum, R),
        FgEntry::new(F::Times, G::Max, R0),
        FgEntry::new(F::Times, G::NegMin, R0),
        FgEntry::new(F::Plus, G::NegProd, R0),
        FgEntry::new(F::Plus, G::Max, R),
        FgEntry::new(F::Plus, G::NegMin, R),
        FgEntry::new(F::Max, G::NegSum, R),
        FgEntry::new(F::Max, G::NegProd, R0),
        FgEntry::new(F::Max, G::NegMin, R),
        FgEntry::new(F::Min, G::Sum, R),
        FgEntry::new(F::Min, G::Prod, R0),
        FgEntry::new(F::Min, G::Max, R),
    ]
}

/// Look up a catalog entry by its `f:g` key.
pub fn entry_by_key(key: &str) -> Option<FgEntry> {
    catalog().into_iter().find(|e| e.key() == key)
}

/// One sampled violation of the exchange condition.
#[derive(Clone, Debug, Serialize)]
pub struct Order1Counterexample {
    pub x1: Rational,
    pub x2: Rational,
    pub y1: Rational,
    pub y2: Rational,
    pub z: Vec<Rational>,
    pub i: usize,
    pub j: usize,
    pub lhs: Rational,
    pub rhs: Rational,
}

#[derive(Clone, Debug, Serialize)]
pub struct Order1Report {
    pub passed: bool,
    pub samples_run: u64,
    pub counterexample: Option<Order1Counterexample>,
}

fn sample_rational(rng: &mut ChaCha8Rng, domain: Domain) -> Rational {
    let num = match domain {
        Domain::AllReals => rng.gen_range(-12i64..=12),
        Domain::NonnegReals => rng.gen_range(0i64..=12),
    };
    let den = rng.gen_range(1i64..=6);
    Rational::new(num, den)
}

/// Randomized test of the exchange condition
/// `g_ij(f(x1,y1), f(x2,y2), z) >= g_ij(f(x2,y1), f(x1,y2), z)` over
/// the entry's domain. Returns the first counterexample found.
pub fn check_order1(entry: &FgEntry, samples: u64, seed: u64) -> Order1Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for run in 0..samples {
        let n = rng.gen_range(3usize..=5);
        let mut x1 = sample_rational(&mut rng, entry.domain);
        let mut x2 = sample_rational(&mut rng, entry.domain);
        if x1 > x2 {
            std::mem::swap(&mut x1, &mut x2);
        }
        let mut y1 = sample_rational(&mut rng, entry.domain);
        let mut y2 = sample_rational(&mut rng, entry.domain);
        if y1 > y2 {
            std::mem::swap(&mut y1, &mut y2);
        }
        let z: Vec<Rational> = (0..n).map(|_| sample_rational(&mut rng, entry.domain)).collect();
        let i = rng.gen_range(0..n - 1);
        let j = rng.gen_range(i + 1..n);

        let eval = |p: Rational, q: Rational| {
            let mut args = z.clone();
            args[i] = p;
            args[j] = q;
            entry.g.apply(&args)
        };
        let lhs = eval(entry.f.apply2(&x1, &y1), entry.f.apply2(&x2, &y2));
        let rhs = eval(entry.f.apply2(&x2, &y1), entry.f.apply2(&x1, &y2));
        if lhs < rhs {
            return Order1Report {
                passed: false,
                samples_run: run + 1,
                counterexample: Some(Order1Counterexample {
                    x1,
                    x2,
                    y1,
                    y2,
                    z,
                    i: i + 1,
                    j: j + 1,
                    lhs,
                    rhs,
                }),
            };
        }
    }
    Order1Report {
        passed: true,
        samples_run: samples,
        counterexample: None,
    }
}

fn pairing_value(
    entry: &FgEntry,
    a: &[Rational],
    b: &[Rational],
    index: impl Fn(usize) -> usize,
) -> Rational {
    let vals: Vec<Rational> = (0..a.len())
        .map(|i| entry.f.apply2(&a[i], &b[index(i)]))
        .collect();
    entry.g.apply(&vals)
}

#[derive(Clone, Debug, Serialize)]
pub struct SandwichReport {
    pub passed: bool,
    pub lower: Rational,
    pub upper: Rational,
    pub counterexample: Option<Permutation>,
}

/// Exhaustive check of the single-permutation sandwich: for every
/// `sigma`, the reverse pairing is `<=` the `sigma` pairing which is
/// `<=` the identity pairing under `g`.
pub fn verify_newri(
    entry: &FgEntry,
    a: &OrderedSequence,
    b: &OrderedSequence,
    limits: &Limits,
) -> Result<SandwichReport> {
    if !a.is_sorted() || !b.is_sorted() {
        return Err(Error::Hypothesis("sequences must be nondecreasing".into()));
    }
    entry.check_domain(&[a, b])?;
    if a.len() != b.len() {
        return Err(Error::Dimension("sequences must have equal length".into()));
    }
    let n = a.len();
    let (av, bv) = (a.values(), b.values());
    let lower = pairing_value(entry, av, bv, |i| n - 1 - i);
    let upper = pairing_value(entry, av, bv, |i| i);
    for sigma in crate::perm::enumerate_permutations(n, limits)? {
        let mid = pairing_value(entry, av, bv, |i| sigma.image()[i] as usize - 1);
        if mid < lower || mid > upper {
            return Ok(SandwichReport {
                passed: false,
                lower,
                upper,
                counterexample: Some(sigma),
            });
        }
    }
    Ok(SandwichReport {
        passed: true,
        lower,
        upper,
        counterexample: None,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct DoubleSandwichReport {
    pub passed: bool,
    pub counterexample: Option<(Permutation, Permutation)>,
}

/// Exhaustive check of the double-permutation sandwich: for all `mu` and
/// `sigma`, `g({f(a_mu(i), b_mu(n-i+1))}) <= g({f(a_i, b_sigma(i))}) <=
/// g({f(a_mu(i), b_mu(i))})`. Needs `g` to satisfy property S.
pub fn verify_newri2(
    entry: &FgEntry,
    a: &OrderedSequence,
    b: &OrderedSequence,
    limits: &Limits,
) -> Result<DoubleSandwichReport> {
    if !entry.g.property_s() {
        return Err(Error::Hypothesis(
            "the double-permutation sandwich needs a permutation-invariant g".into(),
        ));
    }
    if !a.is_sorted() || !b.is_sorted() {
        return Err(Error::Hypothesis("sequences must be nondecreasing".into()));
    }
    entry.check_domain(&[a, b])?;
    if a.len() != b.len() {
        return Err(Error::Dimension("sequences must have equal length".into()));
    }
    let n = a.len();
    let nf = crate::perm::factorial_u128(n).unwrap_or(u128::MAX);
    limits.check(nf.saturating_mul(nf))?;
    let (av, bv) = (a.values(), b.values());
    let perms = all_permutations(n, limits)?;
    let mids: Vec<Rational> = perms
        .iter()
        .map(|sigma| pairing_value(entry, av, bv, |i| sigma.image()[i] as usize - 1))
        .collect();
    for mu in &perms {
        let m = |i: usize| mu.image()[i] as usize - 1;
        let vals_low: Vec<Rational> = (0..n)
            .map(|i| entry.f.apply2(&av[m(i)], &bv[m(n - 1 - i)]))
            .collect();
        let lower = entry.g.apply(&vals_low);
        let vals_up: Vec<Rational> = (0..n)
            .map(|i| entry.f.apply2(&av[m(i)], &bv[m(i)]))
            .collect();
        let upper = entry.g.apply(&vals_up);
        for (sigma, mid) in perms.iter().zip(&mids) {
            if *mid < lower || *mid > upper {
                return Ok(DoubleSandwichReport {
                    passed: false,
                    counterexample: Some((sigma.clone(), mu.clone())),
                });
            }
        }
    }
    Ok(DoubleSandwichReport {
        passed: true,
        counterexample: None,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct MultiReport {
    pub passed: bool,
    pub aligned: Rational,
    pub counterexample: Option<Vec<Permutation>>,
}

/// Multi-sequence check: with `f` extended k-ary on nonnegative rows, the
/// aligned combination dominates `g({f(a_1i, a_2s2(i), ..., a_ksk(i))})`
/// for every tuple of permutations.
pub fn verify_multi(
    f: CombinerKind,
    g: AggregatorKind,
    rows: &[OrderedSequence],
    limits: &Limits,
) -> Result<MultiReport> {
    if rows.len() < 2 {
        return Err(Error::Invalid("need at least two rows".into()));
    }
    let n = rows[0].len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(Error::Dimension("ragged rows".into()));
    }
    if rows.iter().any(|r| !r.is_sorted() || !r.is_nonnegative()) {
        return Err(Error::Hypothesis(
            "rows must be nondecreasing and nonnegative".into(),
        ));
    }
    let k = rows.len();
    let nf = crate::perm::factorial_u128(n).unwrap_or(u128::MAX);
    let mut total: u128 = 1;
    for _ in 1..k {
        total = total.saturating_mul(nf);
    }
    limits.check(total)?;
    let perms = all_permutations(n, limits)?;

    let value_of = |tuple: &[usize]| -> Rational {
        let vals: Vec<Rational> = (0..n)
            .map(|i| {
                let args: Vec<Rational> = std::iter::once(rows[0].values()[i].clone())
                    .chain((1..k).map(|r| {
                        rows[r].values()[perms[tuple[r - 1]].image()[i] as usize - 1].clone()
                    }))
                    .collect();
                f.apply_k(&args)
            })
            .collect();
        g.apply(&vals)
    };

    let aligned = value_of(&vec![0; k - 1]);
    let mut tuple = vec![0usize; k - 1];
    loop {
        let val = value_of(&tuple);
        if val > aligned {
            return Ok(MultiReport {
                passed: false,
                aligned,
                counterexample: Some(tuple.iter().map(|&t| perms[t].clone()).collect()),
            });
        }
        let mut pos = k - 1;
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
    Ok(MultiReport {
        passed: true,
        aligned,
        counterexample: None,
    })
}

/// The circular minimizing arrangement: filled from both ends, taking
/// `1, n-1, 3, n-3, ...` on the left and `n, 2, n-2, 4, ...` on the
/// right, alternating. Matches the brute-force minimizer of the sum of
/// cyclically adjacent products for every n checked (3..=8).
pub fn sigma_m1(n: usize) -> Result<Permutation> {
    if n < 3 {
        return Err(Error::Invalid("circular arrangements need n >= 3".into()));
    }
    let mut image = vec![0u32; n];
    let (mut li, mut ri) = (0usize, n - 1);
    let (mut l_small, mut l_big) = (1usize, n - 1);
    let (mut r_small, mut r_big) = (2usize, n - 2);
    let mut l_take_small = true;
    let mut r_take_small = true;
    let mut r_first = true;
    let mut from_left = true;
    while li <= ri {
        if from_left {
            let v = if l_take_small {
                let v = l_small;
                l_small += 2;
                v
            } else {
                let v = l_big;
                l_big -= 2;
                v
            };
            l_take_small = !l_take_small;
            image[li] = v as u32;
            li += 1;
        } else {
            let v = if r_first {
                r_first = false;
                n
            } else if r_take_small {
                r_take_small = false;
                let v = r_small;
                r_small += 2;
                v
            } else {
                r_take_small = true;
                let v = r_big;
                r_big -= 2;
                v
            };
            image[ri] = v as u32;
            ri -= 1;
        }
        from_left = !from_left;
    }
    Permutation::from_image(image)
}

/// The circular maximizing arrangement: odd values ascending, then even
/// values descending.
pub fn sigma_m2(n: usize) -> Result<Permutation> {
    if n < 3 {
        return Err(Error::Invalid("circular arrangements need n >= 3".into()));
    }
    let mut image: Vec<u32> = (1..=n as u32).step_by(2).collect();
    let mut evens: Vec<u32> = (2..=n as u32).step_by(2).collect();
    evens.reverse();
    image.extend(evens);
    Permutation::from_image(image)
}

/// Canonical necklace representative: rotations and reflections
/// identified, normal form starts at 1 with its smaller neighbor second.
pub fn necklace_canonical(p: &Permutation) -> Permutation {
    let n = p.n();
    let img = p.image();
    let pos1 = img.iter().position(|&v| v == 1).expect("1 is present");
    let rot: Vec<u32> = (0..n).map(|i| img[(pos1 + i) % n]).collect();
    let mut refl: Vec<u32> = rot.clone();
    refl[1..].reverse();
    let best = if n >= 2 && refl < rot { refl } else { rot };
    Permutation::from_image(best).expect("rotation of a bijection")
}

/// `g` applied to the n cyclically adjacent `f`-pairs of
/// `a_{sigma(1)}, ..., a_{sigma(n)}`.
pub fn circular_value(
    entry: &FgEntry,
    a: &OrderedSequence,
    sigma: &Permutation,
) -> Result<Rational> {
    if !entry.f.symmetric() || !entry.g.property_s() {
        return Err(Error::Hypothesis(
            "circular values need a symmetric f and permutation-invariant g".into(),
        ));
    }
    entry.check_domain(&[a])?;
    let n = a.len();
    if sigma.n() != n {
        return Err(Error::Dimension("arrangement size mismatch".into()));
    }
    let av = a.values();
    let vals: Vec<Rational> = (0..n)
        .map(|i| {
            entry.f.apply2(
                &av[sigma.image()[i] as usize - 1],
                &av[sigma.image()[(i + 1) % n] as usize - 1],
            )
        })
        .collect();
    Ok(entry.g.apply(&vals))
}

/// Exhaustive circular extrema over necklace-distinct arrangements
/// (rotation and reflection quotiented away), parallelized over the
/// value placed next to 1.
pub fn circular_extrema_brute(
    entry: &FgEntry,
    a: &OrderedSequence,
    limits: &Limits,
) -> Result<(ExtremalResult<Permutation>, ExtremalResult<Permutation>)> {
    if !a.is_sorted() {
        return Err(Error::Hypothesis("sequence must be nondecreasing".into()));
    }
    entry.check_domain(&[a])?;
    let n = a.len();
    if n < 3 {
        return Err(Error::Invalid("circular extrema need n >= 3".into()));
    }
    let count = crate::perm::factorial_u128(n - 1)
        .map(|f| f / 2)
        .unwrap_or(u128::MAX);
    limits.check(count)?;
    let av = a.values();

    let eval = |image: &Vec<u32>| -> Rational {
        let vals: Vec<Rational> = (0..n)
            .map(|i| {
                entry.f.apply2(
                    &av[image[i] as usize - 1],
                    &av[image[(i + 1) % n] as usize - 1],
                )
            })
            .collect();
        entry.g.apply(&vals)
    };

    // canonical necklaces: image[0] = 1 and image[1] < image[n-1]
    let branches: Vec<u32> = (2..=n as u32).collect();
    let acc = map_merge(
        branches,
        |second| {
            let mut acc: Option<MinMaxAcc<Vec<u32>>> = None;
            let rest: Vec<u32> = (2..=n as u32).filter(|&v| v != second).collect();
            let mut tail = rest.clone();
            loop {
                if *tail.last().expect("n >= 3") > second {
                    let mut image = Vec::with_capacity(n);
                    image.push(1);
                    image.push(second);
                    image.extend_from_slice(&tail);
                    let value = eval(&image);
                    match acc.as_mut() {
                        None => acc = Some(MinMaxAcc::seed(value, image)),
                        Some(a) => a.observe(value, &image),
                    }
                }
                if !next_perm_u32(&mut tail) {
                    break;
                }
            }
            acc
        },
        |a, b| match (a, b) {
            (Some(a), Some(b)) => Some(MinMaxAcc::merge(a, b)),
            (a, None) => a,
            (None, b) => b,
        },
    )
    .flatten()
    .expect("n >= 3 has at least one necklace");

    let (min, max) = acc.into_results();
    let to_perm = |img: Vec<u32>| Permutation::from_image(img).expect("necklace image");
    Ok((min.map_witness(to_perm), max.map_witness(to_perm)))
}

/// All canonical necklace representatives of size `n`: arrangements with
/// 1 first and the smaller neighbor of 1 in second position.
pub(crate) fn necklace_images(n: usize) -> Vec<Vec<u32>> {
    assert!(n >= 3);
    let mut out = Vec::new();
    let mut rest: Vec<u32> = (2..=n as u32).collect();
    loop {
        if rest[0] < rest[n - 2] {
            let mut image = Vec::with_capacity(n);
            image.push(1);
            image.extend_from_slice(&rest);
            out.push(image);
        }
        if !next_perm_u32(&mut rest) {
            break;
        }
    }
    out
}

fn next_perm_u32(seq: &mut [u32]) -> bool {
    let n = seq.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && seq[i - 1] >= seq[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while seq[j] <= seq[i - 1] {
        j -= 1;
    }
    seq.swap(i - 1, j);
    seq[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::parse_rationals;

    fn r(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn seq(s: &str) -> OrderedSequence {
        OrderedSequence::sorted(parse_rationals(s).unwrap()).unwrap()
    }

    fn entry(key: &str) -> FgEntry {
        entry_by_key(key).unwrap()
    }

    #[test]
    fn catalog_has_twelve_rows() {
        let cat = catalog();
        assert_eq!(cat.len(), 12);
        assert!(cat.contains(&FgEntry::new(
            CombinerKind::Times,
            AggregatorKind::Sum,
            Domain::AllReals
        )));
        assert!(cat.contains(&FgEntry::new(
            CombinerKind::Plus,
            AggregatorKind::NegProd,
            Domain::NonnegReals
        )));
        assert!(cat.contains(&FgEntry::new(
            CombinerKind::Min,
            AggregatorKind::Max,
            Domain::AllReals
        )));
        let keys: Vec<String> = cat.iter().map(|e| e.key()).collect();
        assert_eq!(keys.len(), 12);
        assert!(keys.contains(&"max:negsum".to_string()));
    }

    #[test]
    fn order1_holds_on_catalog_domains() {
        for e in catalog() {
            let report = check_order1(&e, 500, 7);
            assert!(report.passed, "{} failed: {:?}", e.key(), report.counterexample);
        }
    }

    #[test]
    fn order1_fails_for_plus_negprod_on_signed_domain() {
        let e = FgEntry::new(CombinerKind::Plus, AggregatorKind::NegProd, Domain::AllReals);
        let report = check_order1(&e, 10_000, 42);
        assert!(!report.passed);
        let ce = report.counterexample.unwrap();
        assert!(ce.lhs < ce.rhs);
    }

    #[test]
    fn newri_examples() {
        let limits = Limits::default();
        let e = entry("times:sum");
        let rep = verify_newri(&e, &seq("1,2,3"), &seq("1,2,3"), &limits).unwrap();
        assert!(rep.passed);
        assert_eq!(rep.lower, r(10));
        assert_eq!(rep.upper, r(14));

        let e2 = entry("plus:negprod");
        let rep2 = verify_newri(&e2, &seq("1,2"), &seq("1,2"), &limits).unwrap();
        assert!(rep2.passed);
        assert_eq!(rep2.lower, r(-9));
        assert_eq!(rep2.upper, r(-8));

        let e3 = entry("min:sum");
        let rep3 = verify_newri(&e3, &seq("1,2"), &seq("1,2"), &limits).unwrap();
        assert!(rep3.passed);
        assert_eq!(rep3.lower, r(2));
        assert_eq!(rep3.upper, r(3));
    }

    #[test]
    fn newri_rejects_bad_hypotheses() {
        let limits = Limits::default();
        let e = entry("plus:negprod");
        let signed = OrderedSequence::sorted(parse_rationals("-1,2").unwrap()).unwrap();
        assert!(verify_newri(&e, &signed, &seq("1,2"), &limits).is_err());
        let e2 = entry("times:sum");
        assert!(verify_newri(&e2, &seq("1,2"), &seq("1,2,3"), &limits).is_err());
    }

    #[test]
    fn newri2_examples() {
        let limits = Limits::default();
        let e = entry("times:sum");
        assert!(verify_newri2(&e, &seq("1,2"), &seq("3,4"), &limits)
            .unwrap()
            .passed);
        assert!(verify_newri2(&e, &seq("5,5"), &seq("5,5"), &limits)
            .unwrap()
            .passed);
        let e2 = entry("plus:negprod");
        assert!(verify_newri2(&e2, &seq("0,1"), &seq("0,2"), &limits)
            .unwrap()
            .passed);
    }

    #[test]
    fn multi_example() {
        let limits = Limits::default();
        let rows = vec![seq("1,2"), seq("1,2"), seq("1,2")];
        let rep = verify_multi(CombinerKind::Times, AggregatorKind::Sum, &rows, &limits).unwrap();
        assert!(rep.passed);
        assert_eq!(rep.aligned, r(9));

        let flat = vec![seq("3,3"), seq("3,3")];
        let repf =
            verify_multi(CombinerKind::Times, AggregatorKind::Sum, &flat, &limits).unwrap();
        assert!(repf.passed);
    }

    #[test]
    fn sigma_constructions() {
        assert_eq!(sigma_m2(5).unwrap(), "1,3,5,4,2".parse().unwrap());
        assert_eq!(sigma_m2(4).unwrap(), "1,3,4,2".parse().unwrap());
        assert_eq!(sigma_m1(4).unwrap(), "1,3,2,4".parse().unwrap());
        assert_eq!(sigma_m1(3).unwrap(), "1,2,3".parse().unwrap());
        assert!(sigma_m1(2).is_err());
        assert!(sigma_m2(2).is_err());
        // bijections for a range of n
        for n in 3..=12 {
            assert_eq!(sigma_m1(n).unwrap().n(), n);
            assert_eq!(sigma_m2(n).unwrap().n(), n);
        }
    }

    #[test]
    fn circular_value_examples() {
        let e = entry("times:sum");
        let a = seq("1,2,3,4");
        assert_eq!(
            circular_value(&e, &a, &Permutation::identity(4)).unwrap(),
            r(24)
        );
        assert_eq!(
            circular_value(&e, &a, &"1,3,2,4".parse().unwrap()).unwrap(),
            r(21)
        );
        let plus_prod = FgEntry::new(CombinerKind::Plus, AggregatorKind::Prod, Domain::NonnegReals);
        assert_eq!(
            circular_value(&plus_prod, &seq("1,1,1"), &Permutation::identity(3)).unwrap(),
            r(8)
        );
    }

    #[test]
    fn circular_extrema_examples() {
        let limits = Limits::default();
        let e = entry("times:sum");
        let (min, max) = circular_extrema_brute(&e, &seq("1,2,3,4"), &limits).unwrap();
        assert_eq!(min.value, r(21));
        assert_eq!(max.value, r(25));
        assert_eq!(min.witness, necklace_canonical(&sigma_m1(4).unwrap()));
        assert_eq!(max.witness, necklace_canonical(&sigma_m2(4).unwrap()));
        assert_eq!(min.nodes_explored, 3);

        let (tmin, tmax) = circular_extrema_brute(&e, &seq("1,1,2"), &limits).unwrap();
        assert_eq!(tmin.value, r(5));
        assert_eq!(tmax.value, r(5));

        // dual pair: plus/prod swaps the extremal arrangements
        let plus_prod = FgEntry::new(CombinerKind::Plus, AggregatorKind::Prod, Domain::NonnegReals);
        let (pmin, pmax) = circular_extrema_brute(&plus_prod, &seq("1,2,3,4"), &limits).unwrap();
        assert_eq!(pmax.witness, necklace_canonical(&sigma_m1(4).unwrap()));
        assert_eq!(pmin.witness, necklace_canonical(&sigma_m2(4).unwrap()));
        assert_eq!(pmax.value, r(600));
        assert_eq!(pmin.value, r(504));
    }

    #[test]
    fn necklace_canonicalization() {
        let p: Permutation = "3,4,2,1".parse().unwrap();
        let c = necklace_canonical(&p);
        // rotations of (3,4,2,1): starts at 1 -> (1,3,4,2); reflection
        // (1,2,4,3) is lex smaller
        assert_eq!(c, "1,2,4,3".parse().unwrap());
        let e = entry("times:sum");
        let a = seq("1,2,3,5");
        assert_eq!(
            circular_value(&e, &a, &p).unwrap(),
            circular_value(&e, &a, &c).unwrap()
        );
    }
}
