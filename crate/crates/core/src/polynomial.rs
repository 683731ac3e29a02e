//! Dense homogeneous polynomials with exact rational coefficients.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::Vector;
use crate::monomial::{basis_len, monomial_basis, ExponentVector, MonomialIndex};
use crate::scalar::Scalar;

/// A homogeneous polynomial of degree `degree` in `dimension` variables.
/// Coefficients are aligned with `monomial_basis(dimension, degree)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomogeneousPolynomial {
    dimension: usize,
    degree: u32,
    coefficients: Vec<Scalar>,
}

impl HomogeneousPolynomial {
    pub fn zero(dimension: usize, degree: u32) -> Self {
        HomogeneousPolynomial {
            dimension,
            degree,
            coefficients: vec![Scalar::zero(); basis_len(dimension, degree as usize)],
        }
    }

    pub fn constant(dimension: usize, value: Scalar) -> Self {
        HomogeneousPolynomial {
            dimension,
            degree: 0,
            coefficients: vec![value],
        }
    }

    /// `ξ ↦ ⟨w, ξ⟩`.
    pub fn linear_form(w: &Vector) -> Self {
        HomogeneousPolynomial {
            dimension: w.dim(),
            degree: 1,
            coefficients: w.coords().to_vec(),
        }
    }

    pub fn from_coefficients(dimension: usize, degree: u32, coefficients: Vec<Scalar>) -> Result<Self> {
        let expected = basis_len(dimension, degree as usize);
        if coefficients.len() != expected {
            return Err(Error::Dimension {
                what: "polynomial coefficient vector",
                expected,
                found: coefficients.len(),
            });
        }
        Ok(HomogeneousPolynomial {
            dimension,
            degree,
            coefficients,
        })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coefficients(&self) -> &[Scalar] {
        &self.coefficients
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(Scalar::is_zero)
    }

    pub fn basis(&self) -> Vec<ExponentVector> {
        monomial_basis(self.dimension, self.degree)
    }

    /// Nonzero `(exponent, coefficient)` pairs in basis order.
    pub fn terms(&self) -> Vec<(ExponentVector, Scalar)> {
        self.basis()
            .into_iter()
            .zip(&self.coefficients)
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e, c.clone()))
            .collect()
    }

    pub fn eval(&self, x: &Vector) -> Scalar {
        assert_eq!(x.dim(), self.dimension, "evaluation point has wrong dimension");
        self.basis()
            .iter()
            .zip(&self.coefficients)
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| c * e.eval(x))
            .sum()
    }

    pub fn scale(&self, lambda: &Scalar) -> Self {
        HomogeneousPolynomial {
            dimension: self.dimension,
            degree: self.degree,
            coefficients: self.coefficients.iter().map(|c| c * lambda).collect(),
        }
    }

    /// Sum of two polynomials of equal dimension and degree.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_space(other)?;
        Ok(HomogeneousPolynomial {
            dimension: self.dimension,
            degree: self.degree,
            coefficients: self
                .coefficients
                .iter()
                .zip(&other.coefficients)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.dimension != other.dimension {
            return Err(Error::Dimension {
                what: "polynomial product",
                expected: self.dimension,
                found: other.dimension,
            });
        }
        let degree = self.degree + other.degree;
        let index = MonomialIndex::new(self.dimension, degree);
        let mut coefficients = vec![Scalar::zero(); index.len()];
        let rhs_basis = other.basis();
        for (ea, ca) in self.basis().iter().zip(&self.coefficients) {
            if ca.is_zero() {
                continue;
            }
            for (eb, cb) in rhs_basis.iter().zip(&other.coefficients) {
                if cb.is_zero() {
                    continue;
                }
                let sum = ExponentVector::new(
                    ea.exponents()
                        .iter()
                        .zip(eb.exponents())
                        .map(|(a, b)| a + b)
                        .collect(),
                );
                let pos = index.position(&sum).expect("product monomial in basis");
                coefficients[pos] += ca * cb;
            }
        }
        Ok(HomogeneousPolynomial {
            dimension: self.dimension,
            degree,
            coefficients,
        })
    }

    fn check_same_space(&self, other: &Self) -> Result<()> {
        if self.dimension != other.dimension {
            return Err(Error::Dimension {
                what: "polynomial dimension",
                expected: self.dimension,
                found: other.dimension,
            });
        }
        if self.degree != other.degree {
            return Err(Error::Dimension {
                what: "polynomial degree",
                expected: self.degree as usize,
                found: other.degree as usize,
            });
        }
        Ok(())
    }
}

impl fmt::Display for HomogeneousPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in terms.iter().enumerate() {
            let monomial: Vec<String> = e
                .exponents()
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(j, &k)| if k == 1 { format!("x{}", j + 1) } else { format!("x{}^{k}", j + 1) })
                .collect();
            let (sign, mag) = if c.signum() < 0 { ("-", c.abs()) } else { ("+", c.clone()) };
            if i == 0 {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            match (monomial.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => write!(f, "{}", monomial.join("*"))?,
                (false, false) => write!(f, "{mag}*{}", monomial.join("*"))?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exponents: ExponentVector,
    coefficient: Scalar,
}

#[derive(Serialize, Deserialize)]
struct PolynomialJson {
    dimension: usize,
    degree: u32,
    terms: Vec<TermJson>,
}

impl Serialize for HomogeneousPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PolynomialJson {
            dimension: self.dimension,
            degree: self.degree,
            terms: self
                .terms()
                .into_iter()
                .map(|(exponents, coefficient)| TermJson {
                    exponents,
                    coefficient,
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for HomogeneousPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = PolynomialJson::deserialize(deserializer)?;
        let index = MonomialIndex::new(raw.dimension, raw.degree);
        let mut coefficients = vec![Scalar::zero(); index.len()];
        for term in raw.terms {
            let pos = index.position(&term.exponents).ok_or_else(|| {
                D::Error::custom(format!(
                    "exponent vector {:?} is not a degree-{} monomial in {} variables",
                    term.exponents.exponents(),
                    raw.degree,
                    raw.dimension
                ))
            })?;
            coefficients[pos] += term.coefficient;
        }
        Ok(HomogeneousPolynomial {
            dimension: raw.dimension,
            degree: raw.degree,
            coefficients,
        })
    }
}
