//! Runtime elements of the ordered structures: rationals, vectors under
//! the positive-cone order, and square matrices under either the
//! entrywise or the Loewner order.

use serde::Serialize;
use std::fmt;

use crate::algebra::matrix::{bilinear, dot, Matrix, SymMatrix};
use crate::algebra::psd::loewner_leq_raw;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// A value in one of the supported carriers.
#[derive(Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Element {
    Scalar(Rational),
    Vector(Vec<Rational>),
    Matrix(Matrix),
}

impl Element {
    pub fn add(&self, other: &Element) -> Result<Element> {
        match (self, other) {
            (Element::Scalar(a), Element::Scalar(b)) => Ok(Element::Scalar(a + b)),
            (Element::Vector(a), Element::Vector(b)) if a.len() == b.len() => Ok(Element::Vector(
                a.iter().zip(b).map(|(x, y)| x + y).collect(),
            )),
            (Element::Matrix(a), Element::Matrix(b)) => Ok(Element::Matrix(a.add(b)?)),
            _ => Err(Error::Dimension("adding incompatible elements".into())),
        }
    }

    pub fn sub(&self, other: &Element) -> Result<Element> {
        match (self, other) {
            (Element::Scalar(a), Element::Scalar(b)) => Ok(Element::Scalar(a - b)),
            (Element::Vector(a), Element::Vector(b)) if a.len() == b.len() => Ok(Element::Vector(
                a.iter().zip(b).map(|(x, y)| x - y).collect(),
            )),
            (Element::Matrix(a), Element::Matrix(b)) => Ok(Element::Matrix(a.sub(b)?)),
            _ => Err(Error::Dimension("subtracting incompatible elements".into())),
        }
    }

    pub fn scale_int(&self, c: i64) -> Element {
        let c = Rational::from_int(c);
        match self {
            Element::Scalar(a) => Element::Scalar(a * &c),
            Element::Vector(a) => Element::Vector(a.iter().map(|x| x * &c).collect()),
            Element::Matrix(a) => Element::Matrix(a.scale(&c)),
        }
    }

    pub fn as_sym(&self) -> Result<SymMatrix> {
        match self {
            Element::Matrix(m) => SymMatrix::new(m.clone()),
            _ => Err(Error::Invalid("expected a matrix element".into())),
        }
    }

    /// Sum of a nonempty slice of compatible elements.
    pub fn sum(elems: &[Element]) -> Result<Element> {
        let mut iter = elems.iter();
        let first = iter
            .next()
            .ok_or_else(|| Error::Invalid("sum of no elements".into()))?
            .clone();
        iter.try_fold(first, |acc, e| acc.add(e))
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Scalar(r) => write!(f, "{r}"),
            Element::Vector(v) => {
                let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                write!(f, "({})", parts.join(","))
            }
            Element::Matrix(m) => m.fmt(f),
        }
    }
}

/// The carrier of one slot of an ordered-structure tuple, together with
/// its partial order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Carrier {
    /// Rationals with the total order.
    Scalar,
    /// `R^m` with the entrywise (positive cone) order.
    Vector(usize),
    /// `m x m` matrices with the entrywise order.
    MatrixEntrywise(usize),
    /// Symmetric `m x m` matrices with the Loewner order.
    MatrixLoewner(usize),
}

impl Carrier {
    pub fn zero(&self) -> Element {
        match self {
            Carrier::Scalar => Element::Scalar(Rational::zero()),
            Carrier::Vector(m) => Element::Vector(vec![Rational::zero(); *m]),
            Carrier::MatrixEntrywise(m) => Element::Matrix(Matrix::zeros(*m, *m)),
            Carrier::MatrixLoewner(m) => Element::Matrix(Matrix::zeros(*m, *m)),
        }
    }

    /// Membership: shape, and symmetry for Loewner carriers.
    pub fn contains(&self, e: &Element) -> bool {
        match (self, e) {
            (Carrier::Scalar, Element::Scalar(_)) => true,
            (Carrier::Vector(m), Element::Vector(v)) => v.len() == *m,
            (Carrier::MatrixEntrywise(m), Element::Matrix(a)) => {
                a.rows() == *m && a.cols() == *m
            }
            (Carrier::MatrixLoewner(m), Element::Matrix(a)) => {
                a.rows() == *m && a.cols() == *m && a.is_symmetric()
            }
            _ => false,
        }
    }

    /// The carrier's partial order. Errors on wrong shapes or, for the
    /// Loewner carrier, asymmetric inputs.
    pub fn leq(&self, x: &Element, y: &Element) -> Result<bool> {
        if !self.contains(x) || !self.contains(y) {
            return Err(Error::Hypothesis(format!(
                "elements are not members of carrier {self:?}"
            )));
        }
        match (self, x, y) {
            (Carrier::Scalar, Element::Scalar(a), Element::Scalar(b)) => Ok(a <= b),
            (Carrier::Vector(_), Element::Vector(a), Element::Vector(b)) => {
                Ok(a.iter().zip(b).all(|(p, q)| p <= q))
            }
            (Carrier::MatrixEntrywise(_), Element::Matrix(a), Element::Matrix(b)) => Ok((0
                ..a.rows())
                .all(|i| (0..a.cols()).all(|j| a.get(i, j) <= b.get(i, j)))),
            (Carrier::MatrixLoewner(_), Element::Matrix(a), Element::Matrix(b)) => {
                loewner_leq_raw(a, b)
            }
            _ => unreachable!("contains() filtered mismatches"),
        }
    }

    pub fn nonneg(&self, x: &Element) -> Result<bool> {
        self.leq(&self.zero(), x)
    }
}

/// The product `*` of an ordered-structure tuple.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum StarOp {
    /// Rational multiplication.
    Mul,
    /// Vector dot product.
    Dot,
    /// `x * y = x^T A y` with entrywise positive `A`.
    Bilinear(Matrix),
    /// Matrix multiplication.
    MatMul,
    /// Frobenius inner product.
    Frobenius,
    /// Entrywise matrix product.
    Hadamard,
    /// Tensor product.
    Kronecker,
    /// Tensor product with swapped operands.
    ReverseKronecker,
}

impl StarOp {
    pub fn name(&self) -> &'static str {
        match self {
            StarOp::Mul => "mul",
            StarOp::Dot => "dot",
            StarOp::Bilinear(_) => "bilinear",
            StarOp::MatMul => "matmul",
            StarOp::Frobenius => "frobenius",
            StarOp::Hadamard => "hadamard",
            StarOp::Kronecker => "kronecker",
            StarOp::ReverseKronecker => "rev-kronecker",
        }
    }

    pub fn apply(&self, x: &Element, y: &Element) -> Result<Element> {
        match (self, x, y) {
            (StarOp::Mul, Element::Scalar(a), Element::Scalar(b)) => Ok(Element::Scalar(a * b)),
            (StarOp::Dot, Element::Vector(u), Element::Vector(v)) => {
                Ok(Element::Scalar(dot(u, v)?))
            }
            (StarOp::Bilinear(a), Element::Vector(u), Element::Vector(v)) => {
                Ok(Element::Scalar(bilinear(u, a, v)?))
            }
            (StarOp::MatMul, Element::Matrix(a), Element::Matrix(b)) => {
                Ok(Element::Matrix(a.matmul(b)?))
            }
            (StarOp::Frobenius, Element::Matrix(a), Element::Matrix(b)) => {
                Ok(Element::Scalar(a.frobenius(b)?))
            }
            (StarOp::Hadamard, Element::Matrix(a), Element::Matrix(b)) => {
                Ok(Element::Matrix(a.hadamard(b)?))
            }
            (StarOp::Kronecker, Element::Matrix(a), Element::Matrix(b)) => {
                Ok(Element::Matrix(a.kronecker(b)))
            }
            (StarOp::ReverseKronecker, Element::Matrix(a), Element::Matrix(b)) => {
                Ok(Element::Matrix(b.kronecker(a)))
            }
            _ => Err(Error::Dimension(format!(
                "operation {} does not apply to these elements",
                self.name()
            ))),
        }
    }

    /// Fold over two or more factors; meaningful when the factors
    /// mutually commute (checked by callers where it matters).
    pub fn apply_fold(&self, elems: &[Element]) -> Result<Element> {
        let mut iter = elems.iter();
        let first = iter
            .next()
            .ok_or_else(|| Error::Invalid("product of no elements".into()))?
            .clone();
        iter.try_fold(first, |acc, e| self.apply(&acc, e))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn carrier_orders() {
        let s = Carrier::Scalar;
        assert!(s.leq(&Element::Scalar(r(1)), &Element::Scalar(r(2))).unwrap());
        let v = Carrier::Vector(2);
        assert!(v
            .leq(
                &Element::Vector(vec![r(1), r(0)]),
                &Element::Vector(vec![r(1), r(3)])
            )
            .unwrap());
        assert!(!v
            .leq(
                &Element::Vector(vec![r(1), r(4)]),
                &Element::Vector(vec![r(2), r(3)])
            )
            .unwrap());
        assert!(v.leq(&Element::Scalar(r(1)), &Element::Scalar(r(2))).is_err());

        let lo = Carrier::MatrixLoewner(2);
        let i = Element::Matrix(Matrix::identity(2));
        let two = i.scale_int(2);
        assert!(lo.leq(&i, &two).unwrap());
        assert!(!lo.leq(&two, &i).unwrap());
        let asym = Element::Matrix(
            Matrix::from_rows(vec![vec![r(1), r(2)], vec![r(3), r(4)]]).unwrap(),
        );
        assert!(lo.leq(&i, &asym).is_err());
        let ew = Carrier::MatrixEntrywise(2);
        assert!(ew.leq(&i, &asym).unwrap());
    }

    #[test]
    fn star_dims_are_checked() {
        let u = Element::Vector(vec![r(1), r(2)]);
        let w = Element::Vector(vec![r(1), r(2), r(3)]);
        assert!(StarOp::Dot.apply(&u, &w).is_err());
        assert_eq!(
            StarOp::Dot.apply(&u, &u).unwrap(),
            Element::Scalar(r(5))
        );
        assert!(StarOp::Mul.apply(&u, &u).is_err());
    }

    #[test]
    fn reverse_kronecker_swaps() {
        let a = Element::Matrix(Matrix::identity(1).scale(&r(2)));
        let b = Element::Matrix(
            Matrix::from_rows(vec![vec![r(1), r(2)], vec![r(2), r(1)]]).unwrap(),
        );
        let k = StarOp::Kronecker.apply(&a, &b).unwrap();
        let rk = StarOp::ReverseKronecker.apply(&b, &a).unwrap();
        assert_eq!(k, rk);
    }
}
