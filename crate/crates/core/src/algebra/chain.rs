//! Seeded generators for ordered chains: scalar/vector/entrywise chains
//! by cumulative nonnegative increments, Loewner chains by cumulative
//! Gram increments, and commuting Loewner chains as polynomials in a
//! single PSD base matrix (polynomials in one matrix always commute, and
//! nonnegative-coefficient increments of a PSD base are PSD).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::element::{Carrier, Element};
use crate::algebra::matrix::{Matrix, SymMatrix};
use crate::algebra::psd::{loewner_leq, psd_check};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// How matrix-valued samples are drawn.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SampleKind {
    /// Fresh independent draws.
    Independent,
    /// Polynomials in one shared PSD base, so all draws commute.
    CommutingPolys,
}

/// A Loewner-ordered chain of symmetric matrices; `commuting` also
/// asserts that all members commute pairwise.
#[derive(Clone, Debug, Serialize)]
pub struct LoewnerChain {
    pub matrices: Vec<SymMatrix>,
    pub commuting: bool,
}

impl LoewnerChain {
    /// Re-derive the claimed invariants from scratch.
    pub fn verify(&self) -> Result<()> {
        if self.matrices.is_empty() {
            return Err(Error::Invalid("empty chain".into()));
        }
        for w in self.matrices.windows(2) {
            if !loewner_leq(&w[0], &w[1])? {
                return Err(Error::Hypothesis(
                    "chain is not Loewner-nondecreasing".into(),
                ));
            }
        }
        if self.commuting {
            for i in 0..self.matrices.len() {
                for j in i + 1..self.matrices.len() {
                    if !self.matrices[i]
                        .matrix()
                        .commutes_with(self.matrices[j].matrix())?
                    {
                        return Err(Error::Hypothesis(
                            "chain members do not all commute".into(),
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.matrices[0].order()
    }

    pub fn len(&self) -> usize {
        self.matrices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matrices.is_empty()
    }
}

pub(crate) fn rational_in(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> Rational {
    let num = rng.gen_range(lo..=hi);
    let den = rng.gen_range(1i64..=3);
    Rational::new(num, den)
}

pub(crate) fn signed_rational(rng: &mut ChaCha8Rng) -> Rational {
    rational_in(rng, -6, 6)
}

pub(crate) fn nonneg_rational(rng: &mut ChaCha8Rng) -> Rational {
    rational_in(rng, 0, 6)
}

pub(crate) fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| rational_in(rng, -3, 3))
}

pub(crate) fn random_gram(rng: &mut ChaCha8Rng, m: usize) -> SymMatrix {
    let g = random_matrix(rng, m, m);
    SymMatrix::gram(&g)
}

pub(crate) fn random_symmetric(rng: &mut ChaCha8Rng, m: usize) -> SymMatrix {
    let g = random_matrix(rng, m, m);
    SymMatrix::new(g.add(&g.transpose()).expect("same shape")).expect("symmetrized")
}

/// Polynomial `c0 I + c1 M + c2 M^2` in the base.
pub(crate) fn poly_in_base(base: &SymMatrix, coeffs: &[Rational]) -> SymMatrix {
    let m = base.order();
    let mut power = Matrix::identity(m);
    let mut acc = Matrix::zeros(m, m);
    for c in coeffs {
        acc = acc.add(&power.scale(c)).expect("same shape");
        power = power.matmul(base.matrix()).expect("square");
    }
    SymMatrix::new(acc).expect("polynomials in a symmetric matrix are symmetric")
}

pub(crate) fn nonneg_poly(rng: &mut ChaCha8Rng, base: &SymMatrix) -> SymMatrix {
    let coeffs: Vec<Rational> = (0..3).map(|_| rational_in(rng, 0, 3)).collect();
    poly_in_base(base, &coeffs)
}

pub(crate) fn signed_poly(rng: &mut ChaCha8Rng, base: &SymMatrix) -> SymMatrix {
    let coeffs: Vec<Rational> = (0..3).map(|_| rational_in(rng, -3, 3)).collect();
    poly_in_base(base, &coeffs)
}

/// A Loewner-nondecreasing chain of `n` symmetric `m x m` matrices
/// starting at a PSD element. Noncommuting mode stacks Gram increments on
/// a Gram start; commuting mode emits cumulative nonnegative-coefficient
/// polynomials in one PSD base. Both invariants are re-verified exactly
/// before returning.
pub fn generate_loewner_chain(m: usize, n: usize, commuting: bool, seed: u64) -> LoewnerChain {
    assert!(m >= 1 && n >= 1, "need m >= 1 and n >= 1");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let matrices = if commuting {
        let base = random_gram(&mut rng, m);
        let mut acc = nonneg_poly(&mut rng, &base);
        let mut out = vec![acc.clone()];
        for _ in 1..n {
            let inc = nonneg_poly(&mut rng, &base);
            acc = acc.add(&inc).expect("same order");
            out.push(acc.clone());
        }
        out
    } else {
        let mut acc = random_gram(&mut rng, m);
        let mut out = vec![acc.clone()];
        for _ in 1..n {
            let inc = random_gram(&mut rng, m);
            acc = acc.add(&inc).expect("same order");
            out.push(acc.clone());
        }
        out
    };
    let chain = LoewnerChain {
        matrices,
        commuting,
    };
    chain.verify().expect("construction satisfies its invariants");
    debug_assert!(psd_check(&chain.matrices[0]));
    chain
}

/// `k` chains of `n` PSD matrices each, all pairwise commuting (every
/// member is a cumulative nonnegative polynomial in one shared base).
pub fn commuting_psd_chains(m: usize, k: usize, n: usize, seed: u64) -> Vec<Vec<SymMatrix>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base = random_gram(&mut rng, m);
    (0..k)
        .map(|_| {
            let mut acc = nonneg_poly(&mut rng, &base);
            let mut chain = vec![acc.clone()];
            for _ in 1..n {
                acc = acc.add(&nonneg_poly(&mut rng, &base)).expect("same order");
                chain.push(acc.clone());
            }
            chain
        })
        .collect()
}

fn nonneg_element(rng: &mut ChaCha8Rng, carrier: &Carrier) -> Element {
    match carrier {
        Carrier::Scalar => Element::Scalar(nonneg_rational(rng)),
        Carrier::Vector(m) => {
            Element::Vector((0..*m).map(|_| nonneg_rational(rng)).collect())
        }
        Carrier::MatrixEntrywise(m) => Element::Matrix(Matrix::from_fn(*m, *m, |_, _| {
            nonneg_rational(rng)
        })),
        Carrier::MatrixLoewner(m) => Element::Matrix(random_gram(rng, *m).into_matrix()),
    }
}

/// An ordered chain of `n` elements of the carrier, starting at a
/// nonnegative element and growing by nonnegative increments.
pub fn element_chain(carrier: &Carrier, n: usize, sample: SampleKind, seed: u64) -> Vec<Element> {
    element_chains(carrier, &[n], sample, seed).pop().expect("one chain")
}

/// Paired chains drawn from one seed; with `CommutingPolys` all members
/// of all chains share one base and therefore commute.
pub fn element_chain_pair(
    carrier: &Carrier,
    n: usize,
    sample: SampleKind,
    seed: u64,
) -> (Vec<Element>, Vec<Element>) {
    let mut chains = element_chains(carrier, &[n, n], sample, seed);
    let b = chains.pop().expect("two chains");
    let a = chains.pop().expect("two chains");
    (a, b)
}

fn element_chains(
    carrier: &Carrier,
    lens: &[usize],
    sample: SampleKind,
    seed: u64,
) -> Vec<Vec<Element>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base = match (carrier, sample) {
        (Carrier::MatrixLoewner(m), SampleKind::CommutingPolys) => {
            Some(random_gram(&mut rng, *m))
        }
        _ => None,
    };
    lens.iter()
        .map(|&n| {
            assert!(n >= 1);
            let mut acc = match &base {
                Some(b) => Element::Matrix(nonneg_poly(&mut rng, b).into_matrix()),
                None => nonneg_element(&mut rng, carrier),
            };
            let mut chain = vec![acc.clone()];
            for _ in 1..n {
                let inc = match &base {
                    Some(b) => Element::Matrix(nonneg_poly(&mut rng, b).into_matrix()),
                    None => nonneg_element(&mut rng, carrier),
                };
                acc = acc.add(&inc).expect("same carrier");
                chain.push(acc.clone());
            }
            chain
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn noncommuting_chain_is_ordered() {
        let chain = generate_loewner_chain(2, 3, false, 7);
        assert_eq!(chain.len(), 3);
        chain.verify().unwrap();
        assert!(psd_check(&chain.matrices[0]));
    }

    #[test]
    fn commuting_chain_commutes_and_orders() {
        let chain = generate_loewner_chain(3, 4, true, 11);
        chain.verify().unwrap();
        for i in 0..chain.len() {
            for j in 0..chain.len() {
                assert!(chain.matrices[i]
                    .matrix()
                    .commutes_with(chain.matrices[j].matrix())
                    .unwrap());
            }
        }
    }

    #[test]
    fn scalar_chain_is_sorted() {
        let chain = element_chain(&Carrier::Scalar, 5, SampleKind::Independent, 3);
        let vals: Vec<Rational> = chain
            .iter()
            .map(|e| match e {
                Element::Scalar(r) => r.clone(),
                _ => unreachable!(),
            })
            .collect();
        assert!(vals.windows(2).all(|w| w[0] <= w[1]));
        assert!(vals[0].is_nonnegative());
    }

    #[test]
    fn chain_pairs_cross_commute_in_poly_mode() {
        let (a, b) = element_chain_pair(
            &Carrier::MatrixLoewner(2),
            3,
            SampleKind::CommutingPolys,
            5,
        );
        for x in &a {
            for y in &b {
                let (Element::Matrix(x), Element::Matrix(y)) = (x, y) else {
                    unreachable!()
                };
                assert!(x.commutes_with(y).unwrap());
            }
        }
    }

    #[test]
    fn shared_base_chains_commute_across() {
        let chains = commuting_psd_chains(2, 3, 3, 9);
        assert_eq!(chains.len(), 3);
        for c in &chains {
            assert!(psd_check(&c[0]));
        }
        let all: Vec<&SymMatrix> = chains.iter().flatten().collect();
        for x in &all {
            for y in &all {
                assert!(x.matrix().commutes_with(y.matrix()).unwrap());
            }
        }
    }

    #[test]
    fn chains_are_seed_deterministic() {
        let a = generate_loewner_chain(2, 3, true, 42);
        let b = generate_loewner_chain(2, 3, true, 42);
        assert_eq!(a.matrices, b.matrices);
        let c = generate_loewner_chain(2, 3, true, 43);
        assert_ne!(a.matrices, c.matrices);
    }
}
