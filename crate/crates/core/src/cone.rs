//! Pointed polyhedral cones given by an apex and a list of generators, and
//! their diagonals: the `(d-1)`-subsets of the generators.
//!
//! Generator indices are zero-based everywhere, including JSON.

use serde::{Deserialize, Serialize};

use crate::combinatorics::k_subsets;
use crate::error::{Error, Result};
use crate::linalg::{determinant_of, generalized_cross, Vector};
use crate::lp::{self, LpOutcome};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ConeJson", into = "ConeJson")]
pub struct Cone {
    apex: Vector,
    generators: Vec<Vector>,
}

#[derive(Serialize, Deserialize)]
struct ConeJson {
    apex: Vector,
    generators: Vec<Vector>,
}

impl TryFrom<ConeJson> for Cone {
    type Error = Error;
    fn try_from(raw: ConeJson) -> Result<Self> {
        Cone::new(raw.apex, raw.generators)
    }
}

impl From<Cone> for ConeJson {
    fn from(c: Cone) -> Self {
        ConeJson {
            apex: c.apex,
            generators: c.generators,
        }
    }
}

impl Cone {
    /// Checks the structural invariants: consistent dimensions, at least `d`
    /// generators, no zero generator and no two generators on the same ray.
    /// Pointedness is checked separately by [`Cone::validate`].
    pub fn new(apex: Vector, generators: Vec<Vector>) -> Result<Self> {
        let d = apex.dim();
        if let Some(bad) = generators.iter().find(|w| w.dim() != d) {
            return Err(Error::Dimension {
                what: "cone generator",
                expected: d,
                found: bad.dim(),
            });
        }
        if generators.len() < d || d == 0 {
            return Err(Error::TooFewGenerators {
                dimension: d,
                count: generators.len(),
            });
        }
        if let Some(index) = generators.iter().position(Vector::is_zero) {
            return Err(Error::ZeroGenerator { index });
        }
        for i in 0..generators.len() {
            for j in i + 1..generators.len() {
                if generators[i].is_positive_multiple_of(&generators[j]) {
                    return Err(Error::DuplicateRay { first: i, second: j });
                }
            }
        }
        Ok(Cone { apex, generators })
    }

    /// A cone with its apex at the origin.
    pub fn at_origin(generators: Vec<Vector>) -> Result<Self> {
        let d = generators.first().map_or(0, Vector::dim);
        Cone::new(Vector::zeros(d), generators)
    }

    pub fn from_int_generators(generators: &[&[i64]]) -> Result<Self> {
        Cone::at_origin(generators.iter().map(|w| Vector::from_ints(w)).collect())
    }

    pub fn apex(&self) -> &Vector {
        &self.apex
    }

    pub fn generators(&self) -> &[Vector] {
        &self.generators
    }

    pub fn generator(&self, i: usize) -> &Vector {
        &self.generators[i]
    }

    pub fn dimension(&self) -> usize {
        self.apex.dim()
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Degree `n - d` of the numerator polynomial.
    pub fn numerator_degree(&self) -> u32 {
        (self.len() - self.dimension()) as u32
    }

    pub fn with_apex(&self, apex: Vector) -> Result<Self> {
        Cone::new(apex, self.generators.clone())
    }

    /// The same cone with generator `i` replaced by `λ·w_i`, `λ > 0`.
    pub fn rescale_generator(&self, i: usize, lambda: &Scalar) -> Result<Self> {
        assert!(lambda.signum() > 0, "rescaling factor must be positive");
        let mut generators = self.generators.clone();
        generators[i] = generators[i].scale(lambda);
        Cone::new(self.apex.clone(), generators)
    }

    /// The same cone with generators listed in the order `perm`.
    pub fn permute(&self, perm: &[usize]) -> Result<Self> {
        Cone::new(
            self.apex.clone(),
            perm.iter().map(|&i| self.generators[i].clone()).collect(),
        )
    }

    /// Determinant of the generators at `indices` (a `d`-subset).
    pub fn subset_determinant(&self, indices: &[usize]) -> Scalar {
        let rows: Vec<&Vector> = indices.iter().map(|&i| &self.generators[i]).collect();
        determinant_of(&rows).expect("d-subset of d-dimensional generators")
    }

    /// A rational `ξ` with `⟨w_i, ξ⟩ ≥ 1` for all generators, minimizing
    /// `Σ ⟨w_i, ξ⟩`. Exists iff the cone is pointed.
    pub fn pointedness_witness(&self) -> Result<Vector> {
        let d = self.dimension();
        let n = self.len();
        // ξ = p - q with p, q ≥ 0, and one surplus variable per generator.
        let a: Vec<Vec<Scalar>> = self
            .generators
            .iter()
            .enumerate()
            .map(|(i, w)| {
                let mut row = Vec::with_capacity(2 * d + n);
                row.extend(w.iter().cloned());
                row.extend(w.iter().map(|x| -x));
                row.extend((0..n).map(|k| if k == i { -Scalar::one() } else { Scalar::zero() }));
                row
            })
            .collect();
        let b = vec![Scalar::one(); n];
        let total: Vec<Scalar> = (0..d)
            .map(|k| self.generators.iter().map(|w| &w[k]).sum())
            .collect();
        let mut c = total.clone();
        c.extend(total.iter().map(|x| -x));
        c.extend(std::iter::repeat_n(Scalar::zero(), n));
        match lp::minimize(&a, &b, &c) {
            LpOutcome::Optimal { x, .. } => {
                Ok(Vector::new((0..d).map(|k| &x[k] - &x[d + k]).collect()))
            }
            LpOutcome::Infeasible | LpOutcome::Unbounded => Err(Error::NotPointed),
        }
    }

    pub fn is_pointed(&self) -> bool {
        self.pointedness_witness().is_ok()
    }

    /// Generator `i` is redundant when it is a nonnegative combination of the others.
    pub fn is_redundant(&self, i: usize) -> bool {
        let others: Vec<&Vector> = (0..self.len())
            .filter(|&j| j != i)
            .map(|j| &self.generators[j])
            .collect();
        let a: Vec<Vec<Scalar>> = (0..self.dimension())
            .map(|k| others.iter().map(|w| w[k].clone()).collect())
            .collect();
        lp::feasible_point(&a, self.generators[i].coords()).is_some()
    }

    pub fn validate(&self) -> Result<ValidationReport> {
        let witness = self.pointedness_witness()?;
        Ok(ValidationReport {
            pointed: true,
            witness,
            general_position: self.is_general_position(),
            redundant_generators: (0..self.len()).filter(|&i| self.is_redundant(i)).collect(),
        })
    }

    /// First `d`-subset of generators with zero determinant, in lexicographic order.
    pub fn first_dependent_subset(&self) -> Option<Vec<usize>> {
        k_subsets(self.len(), self.dimension())
            .into_iter()
            .find(|s| self.subset_determinant(s).is_zero())
    }

    pub fn is_general_position(&self) -> bool {
        self.first_dependent_subset().is_none()
    }

    pub fn require_general_position(&self) -> Result<()> {
        match self.first_dependent_subset() {
            Some(subset) => Err(Error::NotGeneric { subset }),
            None => Ok(()),
        }
    }

    pub fn diagonal(&self, indices: Vec<usize>) -> Diagonal {
        assert!(
            indices.len() + 1 == self.dimension() && indices.windows(2).all(|w| w[0] < w[1]),
            "diagonal must be a strictly increasing (d-1)-subset"
        );
        assert!(indices.iter().all(|&i| i < self.len()), "diagonal index out of range");
        let rows: Vec<&Vector> = indices.iter().map(|&i| &self.generators[i]).collect();
        let dual = generalized_cross(&rows).expect("d-1 vectors of dimension d");
        Diagonal { indices, dual }
    }

    /// All `C(n, d-1)` diagonals in lexicographic order of their index sets.
    pub fn diagonals(&self) -> Vec<Diagonal> {
        k_subsets(self.len(), self.dimension() - 1)
            .into_iter()
            .map(|s| self.diagonal(s))
            .collect()
    }

    pub fn classify(&self, diagonal: &Diagonal) -> DiagonalClass {
        if diagonal.dual.is_zero() {
            return DiagonalClass::Degenerate;
        }
        let (mut pos, mut neg) = (false, false);
        for j in (0..self.len()).filter(|j| !diagonal.contains(*j)) {
            match diagonal.dual.dot(&self.generators[j]).signum() {
                0 => return DiagonalClass::Degenerate,
                1 => pos = true,
                _ => neg = true,
            }
        }
        match (pos, neg) {
            (true, false) => DiagonalClass::Extremal(1),
            (false, true) => DiagonalClass::Extremal(-1),
            _ => DiagonalClass::Interior,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub pointed: bool,
    pub witness: Vector,
    pub general_position: bool,
    pub redundant_generators: Vec<usize>,
}

/// A `(d-1)`-subset of the generators together with its dual vector
/// `D* = [w_{i_1}, …, w_{i_{d-1}}]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagonal {
    indices: Vec<usize>,
    dual: Vector,
}

impl Diagonal {
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn dual(&self) -> &Vector {
        &self.dual
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    /// `det(D, w) = ⟨D*, w⟩`.
    pub fn det_with(&self, w: &Vector) -> Scalar {
        self.dual.dot(w)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DiagonalClass {
    /// Spans a facet; the sign is the common sign of `det(D, w_j)`, `j ∉ D`.
    Extremal(i8),
    Interior,
    Degenerate,
}
