//! Partially ordered algebraic structures with a distributive,
//! nonnegativity-preserving product, and the rearrangement/Chebyshev
//! inequality families over them.
//!
//! A structure is a tuple of three ordered carriers `(I, J, K)` and a
//! product `*: I x J -> K`. The implemented rows: rational
//! multiplication, vector dot and positive bilinear forms under the
//! positive-cone order, entrywise-ordered matrix multiplication, and the
//! Frobenius / commuting-product / Hadamard / Kronecker / reverse
//! Kronecker products of symmetric matrices under the Loewner order.
//! Matrix order comparisons are exact LDL^T decisions, never numeric.

pub mod chain;
pub mod element;
pub mod matrix;
pub mod psd;
pub mod verify;

pub use chain::{
    commuting_psd_chains, element_chain, element_chain_pair, generate_loewner_chain, LoewnerChain,
    SampleKind,
};
pub use element::{Carrier, Element, StarOp};
pub use matrix::{bilinear, dot, Matrix, SymMatrix};
pub use psd::{loewner_leq, psd_check, psd_check_certified, PsdCertificate, PsdOutcome};
pub use verify::{
    verify_chebyshev_calc, verify_hermitian_multi, verify_kron_hadamard, verify_ri_calc,
    verify_variation_calc, VerifyReport,
};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};

/// A runtime descriptor of one ordered-structure tuple.
#[derive(Clone, Debug, Serialize)]
pub struct OrderedAlgebra {
    pub name: String,
    pub carrier_i: Carrier,
    pub carrier_j: Carrier,
    pub carrier_k: Carrier,
    pub star: StarOp,
    pub symmetric_star: bool,
    pub sample: SampleKind,
}

impl OrderedAlgebra {
    /// The implemented finite-dimensional structure rows for size `m`.
    pub fn table2_rows(m: usize) -> Vec<OrderedAlgebra> {
        let lo = Carrier::MatrixLoewner(m);
        vec![
            OrderedAlgebra {
                name: "scalar-mul".into(),
                carrier_i: Carrier::Scalar,
                carrier_j: Carrier::Scalar,
                carrier_k: Carrier::Scalar,
                star: StarOp::Mul,
                symmetric_star: true,
                sample: SampleKind::Independent,
            },
            OrderedAlgebra {
                name: "dot".into(),
                carrier_i: Carrier::Vector(m),
                carrier_j: Carrier::Vector(m),
                carrier_k: Carrier::Scalar,
                star: StarOp::Dot,
                symmetric_star: true,
                sample: SampleKind::Independent,
            },
            Self::bilinear(positive_default(m)).expect("default form is entrywise positive"),
            OrderedAlgebra {
                name: "matmul-entrywise".into(),
                carrier_i: Carrier::MatrixEntrywise(m),
                carrier_j: Carrier::MatrixEntrywise(m),
                carrier_k: Carrier::MatrixEntrywise(m),
                star: StarOp::MatMul,
                symmetric_star: false,
                sample: SampleKind::Independent,
            },
            OrderedAlgebra {
                name: "frobenius".into(),
                carrier_i: lo,
                carrier_j: lo,
                carrier_k: Carrier::Scalar,
                star: StarOp::Frobenius,
                symmetric_star: true,
                sample: SampleKind::Independent,
            },
            OrderedAlgebra {
                name: "matmul-commuting".into(),
                carrier_i: lo,
                carrier_j: lo,
                carrier_k: lo,
                star: StarOp::MatMul,
                symmetric_star: true,
                sample: SampleKind::CommutingPolys,
            },
            OrderedAlgebra {
                name: "hadamard".into(),
                carrier_i: lo,
                carrier_j: lo,
                carrier_k: lo,
                star: StarOp::Hadamard,
                symmetric_star: true,
                sample: SampleKind::Independent,
            },
            OrderedAlgebra {
                name: "kronecker".into(),
                carrier_i: lo,
                carrier_j: lo,
                carrier_k: Carrier::MatrixLoewner(m * m),
                star: StarOp::Kronecker,
                symmetric_star: false,
                sample: SampleKind::Independent,
            },
            OrderedAlgebra {
                name: "rev-kronecker".into(),
                carrier_i: lo,
                carrier_j: lo,
                carrier_k: Carrier::MatrixLoewner(m * m),
                star: StarOp::ReverseKronecker,
                symmetric_star: false,
                sample: SampleKind::Independent,
            },
        ]
    }

    /// The bilinear row `x * y = x^T A y` for a specific entrywise
    /// positive `A`; symmetric exactly when `A` is.
    pub fn bilinear(a: Matrix) -> Result<OrderedAlgebra> {
        if !a.is_square() {
            return Err(Error::Dimension("bilinear form matrix must be square".into()));
        }
        let positive = (0..a.rows())
            .all(|i| (0..a.cols()).all(|j| !a.get(i, j).is_zero() && a.get(i, j).is_nonnegative()));
        if !positive {
            return Err(Error::Hypothesis(
                "bilinear form requires an entrywise positive matrix".into(),
            ));
        }
        let m = a.rows();
        let symmetric = a.is_symmetric();
        Ok(OrderedAlgebra {
            name: "bilinear".into(),
            carrier_i: Carrier::Vector(m),
            carrier_j: Carrier::Vector(m),
            carrier_k: Carrier::Scalar,
            star: StarOp::Bilinear(a),
            symmetric_star: symmetric,
            sample: SampleKind::Independent,
        })
    }

    pub fn by_name(name: &str, m: usize) -> Option<OrderedAlgebra> {
        Self::table2_rows(m).into_iter().find(|a| a.name == name)
    }

    /// The matmul row with independent (non-commuting) sampling; its
    /// symmetry flag is a deliberate false claim used as a negative
    /// control for the axiom checker.
    pub fn matmul_noncommuting_control(m: usize) -> OrderedAlgebra {
        OrderedAlgebra {
            name: "matmul-noncommuting-control".into(),
            carrier_i: Carrier::MatrixLoewner(m),
            carrier_j: Carrier::MatrixLoewner(m),
            carrier_k: Carrier::MatrixLoewner(m),
            star: StarOp::MatMul,
            symmetric_star: true,
            sample: SampleKind::Independent,
        }
    }
}

fn positive_default(m: usize) -> Matrix {
    use crate::rational::Rational;
    Matrix::from_fn(m, m, |i, j| {
        if i == j {
            Rational::from_int(2)
        } else {
            Rational::one()
        }
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CgCounterexample {
    pub axiom: String,
    pub detail: serde_json::Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct CgReport {
    pub passed: bool,
    pub samples_run: u64,
    pub counterexample: Option<CgCounterexample>,
}

/// Randomized exact check of the structure axioms: closure of `*` in the
/// K carrier, two-sided distributivity, the declared symmetry of `*`,
/// and nonnegativity preservation on order-certified nonnegative pairs.
pub fn cg_axiom_check(alg: &OrderedAlgebra, samples: u64, seed: u64) -> CgReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for run in 0..samples {
        let draws = sample_round(alg, &mut rng);
        match check_round(alg, &draws) {
            Ok(()) => {}
            Err(ce) => {
                return CgReport {
                    passed: false,
                    samples_run: run + 1,
                    counterexample: Some(ce),
                }
            }
        }
    }
    CgReport {
        passed: true,
        samples_run: samples,
        counterexample: None,
    }
}

struct RoundDraws {
    x: Element,
    x2: Element,
    y: Element,
    y2: Element,
    nonneg_x: Element,
    nonneg_y: Element,
}

fn sample_round(alg: &OrderedAlgebra, rng: &mut ChaCha8Rng) -> RoundDraws {
    use chain::{nonneg_poly, random_gram, signed_poly};
    match (alg.sample, &alg.carrier_i) {
        (SampleKind::CommutingPolys, Carrier::MatrixLoewner(m)) => {
            let base = random_gram(rng, *m);
            RoundDraws {
                x: Element::Matrix(signed_poly(rng, &base).into_matrix()),
                x2: Element::Matrix(signed_poly(rng, &base).into_matrix()),
                y: Element::Matrix(signed_poly(rng, &base).into_matrix()),
                y2: Element::Matrix(signed_poly(rng, &base).into_matrix()),
                nonneg_x: Element::Matrix(nonneg_poly(rng, &base).into_matrix()),
                nonneg_y: Element::Matrix(nonneg_poly(rng, &base).into_matrix()),
            }
        }
        _ => RoundDraws {
            x: signed_element(rng, &alg.carrier_i),
            x2: signed_element(rng, &alg.carrier_i),
            y: signed_element(rng, &alg.carrier_j),
            y2: signed_element(rng, &alg.carrier_j),
            nonneg_x: nonneg_element_of(rng, &alg.carrier_i),
            nonneg_y: nonneg_element_of(rng, &alg.carrier_j),
        },
    }
}

fn signed_element(rng: &mut ChaCha8Rng, carrier: &Carrier) -> Element {
    use chain::{random_symmetric, signed_rational};
    match carrier {
        Carrier::Scalar => Element::Scalar(signed_rational(rng)),
        Carrier::Vector(m) => Element::Vector((0..*m).map(|_| signed_rational(rng)).collect()),
        Carrier::MatrixEntrywise(m) => {
            Element::Matrix(Matrix::from_fn(*m, *m, |_, _| signed_rational(rng)))
        }
        Carrier::MatrixLoewner(m) => Element::Matrix(random_symmetric(rng, *m).into_matrix()),
    }
}

fn nonneg_element_of(rng: &mut ChaCha8Rng, carrier: &Carrier) -> Element {
    use chain::{nonneg_rational, random_gram};
    match carrier {
        Carrier::Scalar => Element::Scalar(nonneg_rational(rng)),
        Carrier::Vector(m) => Element::Vector((0..*m).map(|_| nonneg_rational(rng)).collect()),
        Carrier::MatrixEntrywise(m) => {
            Element::Matrix(Matrix::from_fn(*m, *m, |_, _| nonneg_rational(rng)))
        }
        Carrier::MatrixLoewner(m) => Element::Matrix(random_gram(rng, *m).into_matrix()),
    }
}

fn check_round(alg: &OrderedAlgebra, d: &RoundDraws) -> std::result::Result<(), CgCounterexample> {
    let ce = |axiom: &str, items: Vec<(&str, &Element)>| CgCounterexample {
        axiom: axiom.into(),
        detail: serde_json::json!(items
            .into_iter()
            .map(|(k, v)| (k.to_string(), serde_json::to_value(v).unwrap()))
            .collect::<serde_json::Map<String, serde_json::Value>>()),
    };
    let star = |x: &Element, y: &Element, axiom: &str| {
        alg.star
            .apply(x, y)
            .map_err(|_| ce(axiom, vec![("x", x), ("y", y)]))
    };

    // closure in K
    let xy = star(&d.x, &d.y, "closure")?;
    if !alg.carrier_k.contains(&xy) {
        return Err(ce("closure", vec![("x", &d.x), ("y", &d.y), ("x*y", &xy)]));
    }

    // distributivity on both sides
    let left = star(&d.x.add(&d.x2).unwrap(), &d.y, "distributivity")?;
    let split = star(&d.x, &d.y, "distributivity")?
        .add(&star(&d.x2, &d.y, "distributivity")?)
        .unwrap();
    if left != split {
        return Err(ce(
            "left-distributivity",
            vec![("x", &d.x), ("x2", &d.x2), ("y", &d.y)],
        ));
    }
    let right = star(&d.x, &d.y.add(&d.y2).unwrap(), "distributivity")?;
    let split = star(&d.x, &d.y, "distributivity")?
        .add(&star(&d.x, &d.y2, "distributivity")?)
        .unwrap();
    if right != split {
        return Err(ce(
            "right-distributivity",
            vec![("x", &d.x), ("y", &d.y), ("y2", &d.y2)],
        ));
    }

    // declared symmetry
    if alg.symmetric_star && alg.carrier_i == alg.carrier_j {
        let ab = star(&d.x, &d.y, "symmetry")?;
        let ba = star(&d.y, &d.x, "symmetry")?;
        if ab != ba {
            return Err(ce("symmetry", vec![("x", &d.x), ("y", &d.y)]));
        }
    }

    // nonnegativity preservation
    let pq = star(&d.nonneg_x, &d.nonneg_y, "nonnegativity")?;
    let ok = alg
        .carrier_k
        .nonneg(&pq)
        .map_err(|_| ce("nonnegativity", vec![("x", &d.nonneg_x), ("y", &d.nonneg_y), ("x*y", &pq)]))?;
    if !ok {
        return Err(ce(
            "nonnegativity",
            vec![("x", &d.nonneg_x), ("y", &d.nonneg_y), ("x*y", &pq)],
        ));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_rows_pass_axioms() {
        for alg in OrderedAlgebra::table2_rows(2) {
            let report = cg_axiom_check(&alg, 60, 17);
            assert!(
                report.passed,
                "{} failed: {:?}",
                alg.name,
                report.counterexample.map(|c| c.axiom)
            );
        }
    }

    #[test]
    fn noncommuting_matmul_control_is_flagged() {
        let alg = OrderedAlgebra::matmul_noncommuting_control(2);
        let report = cg_axiom_check(&alg, 200, 5);
        assert!(!report.passed);
        let ce = report.counterexample.unwrap();
        assert!(ce.axiom == "closure" || ce.axiom == "symmetry" || ce.axiom == "nonnegativity");
    }

    #[test]
    fn bilinear_rejects_nonpositive_forms() {
        let bad = Matrix::from_fn(2, 2, |i, j| {
            if i == j {
                crate::rational::Rational::one()
            } else {
                crate::rational::Rational::zero()
            }
        });
        assert!(OrderedAlgebra::bilinear(bad).is_err());
    }

    #[test]
    fn row_lookup() {
        assert!(OrderedAlgebra::by_name("hadamard", 2).is_some());
        assert!(OrderedAlgebra::by_name("nonsense", 2).is_none());
        assert_eq!(OrderedAlgebra::table2_rows(3).len(), 9);
    }
}
