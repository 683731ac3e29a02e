//! Numerator of a conic Fourier transform by triangulating the cone.
//!
//! For a simplicial cone the transform is `|det W| / ∏⟨w_i, ξ⟩` (times the
//! modulation factor). Summing over a triangulation and bringing every piece
//! over the common denominator `∏_{i=1}^n ⟨w_i, ξ⟩` gives
//! `p_K = Σ_S |det S| · ∏_{j∉S} ⟨w_j, ξ⟩`.

use serde::{Deserialize, Serialize};

use crate::cone::{Cone, DiagonalClass};
use crate::error::{Error, Result};
use crate::linalg::Vector;
use crate::polynomial::HomogeneousPolynomial;
use crate::scalar::Scalar;

/// `p(ξ) / ∏⟨w_i, ξ⟩ · e^{2πi⟨apex, ξ⟩}` up to the normalising constant
/// applied during evaluation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConicTransform {
    pub apex: Vector,
    pub generators: Vec<Vector>,
    pub numerator: HomogeneousPolynomial,
}

impl ConicTransform {
    pub fn new(cone: &Cone, numerator: HomogeneousPolynomial) -> Self {
        ConicTransform {
            apex: cone.apex().clone(),
            generators: cone.generators().to_vec(),
            numerator,
        }
    }

    /// The rational part `p(ξ) / ∏⟨w_i, ξ⟩`, or the index of the first
    /// generator whose linear form vanishes at `ξ`.
    pub fn rational_part(&self, xi: &Vector) -> std::result::Result<Scalar, usize> {
        let mut denom = Scalar::one();
        for (i, w) in self.generators.iter().enumerate() {
            let form = w.dot(xi);
            if form.is_zero() {
                return Err(i);
            }
            denom *= form;
        }
        Ok(self.numerator.eval(xi) / denom)
    }
}

/// Simplicial cones (sorted `d`-subsets of generator indices) covering the cone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Triangulation {
    pub simplices: Vec<Vec<usize>>,
}

fn require_transformable(cone: &Cone) -> Result<()> {
    cone.require_general_position()?;
    cone.pointedness_witness()?;
    Ok(())
}

/// Cones generator `anchor` over every facet not containing it. Under general
/// position the facets are exactly the extremal diagonals.
pub fn pulling_triangulation(cone: &Cone, anchor: usize) -> Result<Triangulation> {
    assert!(anchor < cone.len(), "anchor index out of range");
    require_transformable(cone)?;
    let simplices = cone
        .diagonals()
        .into_iter()
        .filter(|d| !d.contains(anchor))
        .filter(|d| matches!(cone.classify(d), DiagonalClass::Extremal(_)))
        .map(|d| {
            let mut s = d.indices().to_vec();
            s.push(anchor);
            s.sort_unstable();
            s
        })
        .collect();
    Ok(Triangulation { simplices })
}

/// Transform of the simplicial cone spanned by the generators in `simplex`.
pub fn simplicial_transform(cone: &Cone, simplex: &[usize]) -> Result<ConicTransform> {
    if simplex.len() != cone.dimension() {
        return Err(Error::Dimension {
            what: "simplex size",
            expected: cone.dimension(),
            found: simplex.len(),
        });
    }
    let det = cone.subset_determinant(simplex);
    if det.is_zero() {
        return Err(Error::SingularSimplex {
            simplex: simplex.to_vec(),
        });
    }
    Ok(ConicTransform {
        apex: cone.apex().clone(),
        generators: simplex.iter().map(|&i| cone.generator(i).clone()).collect(),
        numerator: HomogeneousPolynomial::constant(cone.dimension(), det.abs()),
    })
}

/// `∏ ⟨v, ξ⟩` over `vs` as a polynomial in `d` variables; the empty product is 1.
pub fn expand_linear_forms(vs: &[&Vector], d: usize) -> Result<HomogeneousPolynomial> {
    vs.iter().try_fold(HomogeneousPolynomial::constant(d, Scalar::one()), |acc, v| {
        if v.dim() != d {
            return Err(Error::Dimension {
                what: "linear form",
                expected: d,
                found: v.dim(),
            });
        }
        acc.mul(&HomogeneousPolynomial::linear_form(v))
    })
}

pub fn pk_via_triangulation(cone: &Cone) -> Result<HomogeneousPolynomial> {
    pk_via_triangulation_anchored(cone, 0)
}

pub fn pk_via_triangulation_anchored(cone: &Cone, anchor: usize) -> Result<HomogeneousPolynomial> {
    let tri = pulling_triangulation(cone, anchor)?;
    let d = cone.dimension();
    let mut pk = HomogeneousPolynomial::zero(d, cone.numerator_degree());
    for simplex in &tri.simplices {
        let piece = simplicial_transform(cone, simplex)?;
        let omitted: Vec<&Vector> = (0..cone.len())
            .filter(|j| simplex.binary_search(j).is_err())
            .map(|j| cone.generator(j))
            .collect();
        let term = expand_linear_forms(&omitted, d)?.mul(&piece.numerator)?;
        pk = pk.add(&term)?;
    }
    Ok(pk)
}
