//! Exact positive-semidefiniteness decisions over the rationals.
//!
//! The decision runs a diagonally pivoted LDL^T elimination. A zero pivot
//! is only admissible when its whole remaining row is zero; a negative
//! diagonal or a nonzero row on a zero diagonal yields an explicit vector
//! `x` with `x^T A x < 0`. The positive answer carries a factorization
//! `A = T D T^T` with `D >= 0`, so both outcomes are certificates that a
//! test can re-multiply and confirm.

use serde::Serialize;

use crate::algebra::matrix::{Matrix, SymMatrix};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Outcome of a certified PSD check.
#[derive(Clone, Debug, Serialize)]
pub enum PsdCertificate {
    /// `A = transform * diag(diag) * transform^T` with `diag >= 0`.
    Factorization {
        transform: Matrix,
        diag: Vec<Rational>,
    },
    /// A rational vector with `x^T A x < 0`.
    NegativeWitness { x: Vec<Rational>, value: Rational },
}

#[derive(Clone, Debug, Serialize)]
pub struct PsdOutcome {
    pub is_psd: bool,
    pub certificate: PsdCertificate,
}

/// Fast uncertified PSD decision.
pub fn psd_check(s: &SymMatrix) -> bool {
    decide(s.matrix(), false).0
}

/// PSD decision with an exact certificate for either answer.
pub fn psd_check_certified(s: &SymMatrix) -> PsdOutcome {
    let (is_psd, cert) = decide(s.matrix(), true);
    PsdOutcome {
        is_psd,
        certificate: cert.expect("certificate requested"),
    }
}

/// `A <= B` in the Loewner order, i.e. `B - A` is PSD.
pub fn loewner_leq(a: &SymMatrix, b: &SymMatrix) -> Result<bool> {
    if a.order() != b.order() {
        return Err(Error::Dimension(format!(
            "Loewner comparison of orders {} and {}",
            a.order(),
            b.order()
        )));
    }
    Ok(psd_check(&b.sub(a)?))
}

/// Loewner comparison on raw matrices; errors if either is asymmetric.
pub fn loewner_leq_raw(a: &Matrix, b: &Matrix) -> Result<bool> {
    let a = SymMatrix::new(a.clone())
        .map_err(|_| Error::Hypothesis("Loewner order needs symmetric matrices".into()))?;
    let b = SymMatrix::new(b.clone())
        .map_err(|_| Error::Hypothesis("Loewner order needs symmetric matrices".into()))?;
    loewner_leq(&a, &b)
}

/// Elimination with diagonal pivoting. `cur` is kept congruent to the
/// input via `cur = E A E^T`; `einv` accumulates `E^{-1}` so a positive
/// answer can report `A = E^{-1} D E^{-T}`.
fn decide(a: &Matrix, want_certificate: bool) -> (bool, Option<PsdCertificate>) {
    let m = a.rows();
    let mut cur = a.clone();
    let mut e = Matrix::identity(m); // row transform applied so far
    let mut einv = Matrix::identity(m);
    let mut active: Vec<usize> = (0..m).collect();
    let mut diag = vec![Rational::zero(); m];

    let negative_witness = |e: &Matrix, x_small: Vec<(usize, Rational)>, cur: &Matrix| {
        // x = E^T x_small; value = x_small^T cur x_small
        let mut x = vec![Rational::zero(); m];
        for (idx, coef) in &x_small {
            for col in 0..m {
                x[col] += coef * e.get(*idx, col);
            }
        }
        let mut value = Rational::zero();
        for (i, ci) in &x_small {
            for (j, cj) in &x_small {
                value += ci * cj * cur.get(*i, *j);
            }
        }
        debug_assert!(value.is_negative());
        PsdCertificate::NegativeWitness { x, value }
    };

    while !active.is_empty() {
        // largest remaining diagonal entry as pivot
        let p = *active
            .iter()
            .max_by(|&&i, &&j| cur.get(i, i).cmp(cur.get(j, j)))
            .expect("active set nonempty");
        let best = cur.get(p, p).clone();

        if best.is_negative() {
            let cert = want_certificate
                .then(|| negative_witness(&e, vec![(p, Rational::one())], &cur));
            return (false, cert);
        }
        if best.is_zero() {
            // max diagonal is zero: a negative diagonal or any nonzero
            // entry left in the block denies PSD
            for &i in &active {
                if cur.get(i, i).is_negative() {
                    let cert = want_certificate
                        .then(|| negative_witness(&e, vec![(i, Rational::one())], &cur));
                    return (false, cert);
                }
            }
            for &i in &active {
                for &j in &active {
                    if i < j && !cur.get(i, j).is_zero() {
                        let b = cur.get(i, j).clone();
                        let cert = want_certificate.then(|| {
                            let s = if b.is_negative() {
                                Rational::one()
                            } else {
                                -Rational::one()
                            };
                            negative_witness(&e, vec![(i, s), (j, Rational::one())], &cur)
                        });
                        return (false, cert);
                    }
                }
            }
            // remaining block is all zero: PSD with zero diagonal tail
            break;
        }

        // eliminate row/column p from the other active indices
        let others: Vec<usize> = active.iter().copied().filter(|&i| i != p).collect();
        for &q in &others {
            let l = cur.get(q, p) / &best;
            if l.is_zero() {
                continue;
            }
            // cur <- (I - l e_q e_p^T) cur (I - l e_q e_p^T)^T
            for col in 0..m {
                let v = cur.get(q, col) - &l * cur.get(p, col);
                cur.set(q, col, v);
            }
            for row in 0..m {
                let v = cur.get(row, q) - &l * cur.get(row, p);
                cur.set(row, q, v);
            }
            // e <- E_step e ; einv <- einv E_step^{-1}
            for col in 0..m {
                let v = e.get(q, col) - &l * e.get(p, col);
                e.set(q, col, v);
            }
            for row in 0..m {
                let v = einv.get(row, p) + &l * einv.get(row, q);
                einv.set(row, p, v);
            }
        }
        diag[p] = best;
        active.retain(|&i| i != p);
    }

    let cert = want_certificate.then(|| PsdCertificate::Factorization {
        transform: einv,
        diag,
    });
    (true, cert)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn sym(rows: &[&[i64]]) -> SymMatrix {
        SymMatrix::new(
            Matrix::from_rows(
                rows.iter()
                    .map(|row| row.iter().map(|&v| r(v)).collect())
                    .collect(),
            )
            .unwrap(),
        )
        .unwrap()
    }

    fn check_certificate(s: &SymMatrix) {
        let out = psd_check_certified(s);
        match out.certificate {
            PsdCertificate::Factorization { transform, diag } => {
                assert!(out.is_psd);
                assert!(diag.iter().all(|d| d.is_nonnegative()));
                let m = s.order();
                let d = Matrix::from_fn(m, m, |i, j| {
                    if i == j {
                        diag[i].clone()
                    } else {
                        Rational::zero()
                    }
                });
                let rebuilt = transform
                    .matmul(&d)
                    .unwrap()
                    .matmul(&transform.transpose())
                    .unwrap();
                assert_eq!(&rebuilt, s.matrix(), "T D T^T must reproduce A");
            }
            PsdCertificate::NegativeWitness { x, value } => {
                assert!(!out.is_psd);
                assert!(value.is_negative());
                // recompute x^T A x
                let m = s.order();
                let mut v = Rational::zero();
                for i in 0..m {
                    for j in 0..m {
                        v += &x[i] * s.matrix().get(i, j) * &x[j];
                    }
                }
                assert_eq!(v, value);
            }
        }
    }

    #[test]
    fn psd_examples() {
        assert!(psd_check(&sym(&[&[1, 1], &[1, 1]])));
        assert!(!psd_check(&sym(&[&[1, 2], &[2, 1]])));
        assert!(psd_check(&sym(&[&[0, 0], &[0, 0]])));
        assert!(psd_check(&sym(&[&[2, -1], &[-1, 2]])));
        assert!(!psd_check(&sym(&[&[-1, 0], &[0, 2]])));
        // zero diagonal with nonzero off-diagonal is indefinite
        assert!(!psd_check(&sym(&[&[0, 1], &[1, 0]])));
        assert!(!psd_check(&sym(&[&[0, 1], &[1, 2]])));
    }

    #[test]
    fn certificates_reproduce_the_matrix() {
        for s in [
            sym(&[&[1, 1], &[1, 1]]),
            sym(&[&[1, 2], &[2, 1]]),
            sym(&[&[0, 0], &[0, 0]]),
            sym(&[&[0, 1], &[1, 0]]),
            sym(&[&[4, 2, 0], &[2, 3, 1], &[0, 1, 5]]),
            sym(&[&[1, 2, 3], &[2, 4, 6], &[3, 6, 9]]),
            sym(&[&[2, 3, 1], &[3, 2, 0], &[1, 0, 1]]),
            sym(&[&[0, 0, 0], &[0, 1, 2], &[0, 2, 4]]),
        ] {
            check_certificate(&s);
        }
    }

    #[test]
    fn loewner_examples() {
        let i = SymMatrix::identity(2);
        let two_i = sym(&[&[2, 0], &[0, 2]]);
        assert!(loewner_leq(&i, &two_i).unwrap());
        assert!(!loewner_leq(&two_i, &i).unwrap());
        assert!(loewner_leq(&i, &i).unwrap());
        let a = sym(&[&[1, 0], &[0, 2]]);
        let b = sym(&[&[2, 0], &[0, 1]]);
        assert!(!loewner_leq(&a, &b).unwrap());
        assert!(!loewner_leq(&b, &a).unwrap());
        let bigger = SymMatrix::identity(3);
        assert!(loewner_leq(&i, &bigger).is_err());
    }
}
