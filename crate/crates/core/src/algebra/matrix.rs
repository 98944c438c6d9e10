//! Dense rational matrices and the product zoo: matrix, Hadamard,
//! Kronecker and Frobenius products, plus vector dot and bilinear forms.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Row-major dense matrix of rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(m: usize) -> Self {
        let mut out = Matrix::zeros(m, m);
        for i in 0..m {
            out.set(i, i, Rational::one());
        }
        out
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(Error::Invalid("empty matrix".into()));
        }
        let cols = rows[0].len();
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Invalid("ragged matrix rows".into()));
        }
        let r = rows.len();
        Ok(Matrix {
            rows: r,
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for i in 0..self.rows {
            for j in i + 1..self.cols {
                if self.get(i, j) != self.get(j, i) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn is_entrywise_nonneg(&self) -> bool {
        self.data.iter().all(|v| v.is_nonnegative())
    }

    fn same_shape(&self, other: &Matrix) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn matmul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(l, j);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn commutes_with(&self, other: &Matrix) -> Result<bool> {
        Ok(self.matmul(other)? == other.matmul(self)?)
    }

    pub fn trace(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::Dimension("trace of a non-square matrix".into()));
        }
        Ok((0..self.rows).map(|i| self.get(i, i)).sum())
    }

    /// Entrywise product; shapes must match.
    pub fn hadamard(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a * b)
                .collect(),
        })
    }

    /// Kronecker tensor product (`rows*rows'` by `cols*cols'`).
    pub fn kronecker(&self, other: &Matrix) -> Matrix {
        Matrix::from_fn(
            self.rows * other.rows,
            self.cols * other.cols,
            |i, j| {
                self.get(i / other.rows, j / other.cols) * other.get(i % other.rows, j % other.cols)
            },
        )
    }

    /// `sum_ij A_ij B_ij`; for symmetric pairs this equals `tr(AB)`.
    pub fn frobenius(&self, other: &Matrix) -> Result<Rational> {
        self.same_shape(other)?;
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a * b)
            .sum())
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rational>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).clone()).collect())
            .collect()
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.row_vecs().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<Rational>>::deserialize(deserializer)?;
        Matrix::from_rows(rows).map_err(D::Error::custom)
    }
}

/// A square matrix whose symmetry has been checked exactly.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct SymMatrix(Matrix);

impl SymMatrix {
    pub fn new(m: Matrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::Dimension("symmetric matrix must be square".into()));
        }
        if !m.is_symmetric() {
            return Err(Error::Invalid("matrix is not symmetric".into()));
        }
        Ok(SymMatrix(m))
    }

    pub fn identity(m: usize) -> Self {
        SymMatrix(Matrix::identity(m))
    }

    pub fn zeros(m: usize) -> Self {
        SymMatrix(Matrix::zeros(m, m))
    }

    pub fn order(&self) -> usize {
        self.0.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix {
        self.0
    }

    /// Gram matrix `G^T G`, the canonical PSD sample.
    pub fn gram(g: &Matrix) -> Self {
        SymMatrix(
            g.transpose()
                .matmul(g)
                .expect("transpose shapes always match"),
        )
    }

    pub fn add(&self, other: &SymMatrix) -> Result<SymMatrix> {
        Ok(SymMatrix(self.0.add(&other.0)?))
    }

    pub fn sub(&self, other: &SymMatrix) -> Result<SymMatrix> {
        Ok(SymMatrix(self.0.sub(&other.0)?))
    }

    pub fn hadamard(&self, other: &SymMatrix) -> Result<SymMatrix> {
        Ok(SymMatrix(self.0.hadamard(&other.0)?))
    }

    pub fn kronecker(&self, other: &SymMatrix) -> SymMatrix {
        SymMatrix(self.0.kronecker(&other.0))
    }
}

impl fmt::Debug for SymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl<'de> Deserialize<'de> for SymMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let m = Matrix::deserialize(deserializer)?;
        SymMatrix::new(m).map_err(D::Error::custom)
    }
}

/// Dot product of equal-length rational vectors.
pub fn dot(u: &[Rational], v: &[Rational]) -> Result<Rational> {
    if u.len() != v.len() {
        return Err(Error::Dimension(format!(
            "dot of lengths {} and {}",
            u.len(),
            v.len()
        )));
    }
    Ok(u.iter().zip(v).map(|(a, b)| a * b).sum())
}

/// Bilinear form `u^T A v`; `A` must be entrywise positive.
pub fn bilinear(u: &[Rational], a: &Matrix, v: &[Rational]) -> Result<Rational> {
    if a.rows() != u.len() || a.cols() != v.len() {
        return Err(Error::Dimension(format!(
            "bilinear form: {}x{} matrix with vectors of length {} and {}",
            a.rows(),
            a.cols(),
            u.len(),
            v.len()
        )));
    }
    let positive =
        (0..a.rows()).all(|i| (0..a.cols()).all(|j| !a.get(i, j).is_zero() && a.get(i, j).is_nonnegative()));
    if !positive {
        return Err(Error::Hypothesis(
            "bilinear form requires an entrywise positive matrix".into(),
        ));
    }
    let mut acc = Rational::zero();
    for i in 0..u.len() {
        for j in 0..v.len() {
            acc += &u[i] * a.get(i, j) * &v[j];
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&v| r(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn star_op_examples() {
        assert_eq!(dot(&[r(1), r(2)], &[r(3), r(4)]).unwrap(), r(11));
        let h = m(&[&[1, 2], &[2, 1]])
            .hadamard(&Matrix::identity(2))
            .unwrap();
        assert_eq!(h, m(&[&[1, 0], &[0, 1]]));
        let s = m(&[&[5, 7], &[7, 11]]);
        assert_eq!(Matrix::identity(2).frobenius(&s).unwrap(), r(16));
    }

    #[test]
    fn kronecker_shape_and_values() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let b = m(&[&[0, 1]]);
        let k = a.kronecker(&b);
        assert_eq!((k.rows(), k.cols()), (2, 4));
        assert_eq!(k, m(&[&[0, 1, 0, 2], &[0, 3, 0, 4]]));
        // reverse kronecker = kronecker with swapped operands
        let rk = b.kronecker(&a);
        assert_eq!((rk.rows(), rk.cols()), (2, 4));
        assert_eq!(rk, m(&[&[0, 0, 1, 2], &[0, 0, 3, 4]]));
    }

    #[test]
    fn matmul_and_commutation() {
        let a = m(&[&[1, 1], &[0, 1]]);
        let b = m(&[&[1, 0], &[1, 1]]);
        assert!(!a.commutes_with(&b).unwrap());
        assert!(a.commutes_with(&a).unwrap());
        assert_eq!(a.matmul(&b).unwrap(), m(&[&[2, 1], &[1, 1]]));
    }

    #[test]
    fn symmetry_is_enforced() {
        assert!(SymMatrix::new(m(&[&[1, 2], &[2, 1]])).is_ok());
        assert!(SymMatrix::new(m(&[&[1, 2], &[3, 1]])).is_err());
        assert!(SymMatrix::new(m(&[&[1, 2, 3], &[4, 5, 6]])).is_err());
    }

    #[test]
    fn bilinear_requires_positive_matrix() {
        let a = m(&[&[1, 1], &[1, 2]]);
        assert_eq!(bilinear(&[r(1), r(0)], &a, &[r(0), r(1)]).unwrap(), r(1));
        let with_zero = m(&[&[1, 0], &[1, 2]]);
        assert!(bilinear(&[r(1), r(0)], &with_zero, &[r(0), r(1)]).is_err());
    }

    #[test]
    fn serde_round_trip() {
        let a = m(&[&[1, 2], &[2, 5]]);
        let js = serde_json::to_string(&a).unwrap();
        assert_eq!(js, r#"[["1","2"],["2","5"]]"#);
        let back: Matrix = serde_json::from_str(&js).unwrap();
        assert_eq!(a, back);
        let sym: SymMatrix = serde_json::from_str(&js).unwrap();
        assert_eq!(sym.matrix(), &a);
        assert!(serde_json::from_str::<SymMatrix>(r#"[["1","2"],["3","5"]]"#).is_err());
    }
}
