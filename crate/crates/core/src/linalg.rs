//! Exact vectors, matrices, determinants and the generalized cross product.

use std::fmt;
use std::ops::{Index, IndexMut};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Vector(Vec<Scalar>);

impl Vector {
    pub fn new(coords: Vec<Scalar>) -> Self {
        Vector(coords)
    }

    pub fn zeros(dim: usize) -> Self {
        Vector(vec![Scalar::zero(); dim])
    }

    pub fn unit(dim: usize, axis: usize) -> Self {
        let mut v = Vector::zeros(dim);
        v.0[axis] = Scalar::one();
        v
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Vector(coords.iter().map(|&c| Scalar::from_int(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Scalar> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    /// Standard inner product. Panics on length mismatch.
    pub fn dot(&self, other: &Vector) -> Scalar {
        assert_eq!(self.dim(), other.dim(), "dot of vectors of unequal length");
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn scale(&self, lambda: &Scalar) -> Vector {
        Vector(self.0.iter().map(|x| x * lambda).collect())
    }

    pub fn add(&self, other: &Vector) -> Vector {
        assert_eq!(self.dim(), other.dim());
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        assert_eq!(self.dim(), other.dim());
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Vector {
        Vector(self.0.iter().map(|x| -x).collect())
    }

    /// True when `other = λ·self` for some `λ > 0`.
    pub fn is_positive_multiple_of(&self, other: &Vector) -> bool {
        if self.dim() != other.dim() || self.is_zero() || other.is_zero() {
            return false;
        }
        let pivot = self.0.iter().position(|x| !x.is_zero()).unwrap();
        if other.0[pivot].is_zero() {
            return false;
        }
        let lambda = &other.0[pivot] / &self.0[pivot];
        lambda.signum() > 0 && self.scale(&lambda) == *other
    }
}

impl Index<usize> for Vector {
    type Output = Scalar;
    fn index(&self, i: usize) -> &Scalar {
        &self.0[i]
    }
}

impl IndexMut<usize> for Vector {
    fn index_mut(&mut self, i: usize) -> &mut Scalar {
        &mut self.0[i]
    }
}

impl From<Vec<Scalar>> for Vector {
    fn from(v: Vec<Scalar>) -> Self {
        Vector(v)
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// A dense rectangular matrix stored by rows.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vector>", into = "Vec<Vector>")]
pub struct Matrix {
    rows: Vec<Vector>,
    cols: usize,
}

impl Matrix {
    pub fn from_rows(rows: Vec<Vector>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vector::dim);
        if let Some(bad) = rows.iter().find(|r| r.dim() != cols) {
            return Err(Error::Dimension {
                what: "matrix row",
                expected: cols,
                found: bad.dim(),
            });
        }
        Ok(Matrix { rows, cols })
    }

    pub fn identity(n: usize) -> Self {
        Matrix {
            rows: (0..n).map(|i| Vector::unit(n, i)).collect(),
            cols: n,
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[Vector] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &Vector {
        &self.rows[i]
    }

    pub fn is_square(&self) -> bool {
        self.rows.len() == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let rows = (0..self.cols)
            .map(|j| Vector::new(self.rows.iter().map(|r| r[j].clone()).collect()))
            .collect();
        Matrix {
            rows,
            cols: self.rows.len(),
        }
    }

    pub fn mul_vec(&self, v: &Vector) -> Vector {
        Vector::new(self.rows.iter().map(|r| r.dot(v)).collect())
    }

    /// Exact determinant by fraction-preserving Gaussian elimination.
    pub fn determinant(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::Dimension {
                what: "determinant (square matrix)",
                expected: self.rows.len(),
                found: self.cols,
            });
        }
        let n = self.cols;
        let mut a: Vec<Vec<Scalar>> = self.rows.iter().map(|r| r.coords().to_vec()).collect();
        let mut det = Scalar::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                return Ok(Scalar::zero());
            };
            if p != col {
                a.swap(p, col);
                det = -det;
            }
            let pivot = a[col][col].clone();
            det *= &pivot;
            let inv = pivot.recip().expect("nonzero pivot");
            for r in col + 1..n {
                if a[r][col].is_zero() {
                    continue;
                }
                let factor = &a[r][col] * &inv;
                let (upper, lower) = a.split_at_mut(r);
                let src = &upper[col];
                for (dst, s) in lower[0][col..].iter_mut().zip(&src[col..]) {
                    *dst -= &factor * s;
                }
            }
        }
        Ok(det)
    }

    /// Row rank over the rationals.
    pub fn rank(&self) -> usize {
        let mut a: Vec<Vec<Scalar>> = self.rows.iter().map(|r| r.coords().to_vec()).collect();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(p) = (rank..a.len()).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(p, rank);
            let inv = a[rank][col].recip().expect("nonzero pivot");
            for r in rank + 1..a.len() {
                if a[r][col].is_zero() {
                    continue;
                }
                let factor = &a[r][col] * &inv;
                let (upper, lower) = a.split_at_mut(r);
                for (dst, s) in lower[0][col..].iter_mut().zip(&upper[rank][col..]) {
                    *dst -= &factor * s;
                }
            }
            rank += 1;
        }
        rank
    }
}

impl TryFrom<Vec<Vector>> for Matrix {
    type Error = Error;
    fn try_from(rows: Vec<Vector>) -> Result<Self> {
        Matrix::from_rows(rows)
    }
}

impl From<Matrix> for Vec<Vector> {
    fn from(m: Matrix) -> Self {
        m.rows
    }
}

/// Determinant of the matrix whose rows are `rows`.
pub fn determinant_of(rows: &[&Vector]) -> Result<Scalar> {
    Matrix::from_rows(rows.iter().map(|&r| r.clone()).collect())?.determinant()
}

/// The generalized cross product `[x_1, …, x_{d-1}]`: the vector `r` with
/// `⟨r, x⟩ = det(x_1, …, x_{d-1}, x)` for every `x`. Linearly dependent input
/// yields the zero vector.
pub fn generalized_cross(vs: &[&Vector]) -> Result<Vector> {
    let d = vs.len() + 1;
    if let Some(bad) = vs.iter().find(|v| v.dim() != d) {
        return Err(Error::Dimension {
            what: "generalized cross product operand",
            expected: d,
            found: bad.dim(),
        });
    }
    // Cofactor expansion of det(x_1, …, x_{d-1}, x) along the last row.
    let mut out = Vec::with_capacity(d);
    for k in 0..d {
        let minor: Vec<Vector> = vs
            .iter()
            .map(|v| {
                Vector::new(
                    v.iter()
                        .enumerate()
                        .filter(|&(j, _)| j != k)
                        .map(|(_, x)| x.clone())
                        .collect(),
                )
            })
            .collect();
        let m = if minor.is_empty() {
            Scalar::one()
        } else {
            Matrix::from_rows(minor)?.determinant()?
        };
        out.push(if (d - 1 + k).is_multiple_of(2) { m } else { -m });
    }
    Ok(Vector::new(out))
}
