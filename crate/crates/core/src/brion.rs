//! Polytope Fourier transforms assembled from vertex tangent cones.
//!
//! The transform `∫_P e^{2πi⟨x,ξ⟩} dx` equals the sum over vertices `v` of
//! the transforms of the tangent cones `K_P(v)`. Each conic term is
//! `p_K(ξ) / ∏⟨w_i, ξ⟩ · e^{2πi⟨v,ξ⟩} · (−2πi)^{−d}`; the last constant is
//! what the one-dimensional integral `∫_0^∞ e^{2πitλ} dt = −1/(2πiλ)`
//! contributes per generator.

use std::f64::consts::PI;

use num::complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::combinatorics::k_subsets;
use crate::cone::Cone;
use crate::error::{Error, Result};
use crate::interpolation::pk_via_interpolation;
use crate::linalg::{generalized_cross, Matrix, Vector};
use crate::lp;
use crate::scalar::Scalar;
use crate::triangulation::{pk_via_triangulation, ConicTransform};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Triangulation,
    #[default]
    Interpolation,
}

impl Method {
    pub fn numerator(self, cone: &Cone) -> Result<crate::polynomial::HomogeneousPolynomial> {
        match self {
            Method::Triangulation => pk_via_triangulation(cone),
            Method::Interpolation => pk_via_interpolation(cone),
        }
    }
}

/// A supporting hyperplane `⟨normal, x⟩ = offset` with the polytope on the
/// side `⟨normal, x⟩ ≤ offset`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Facet {
    pub vertices: Vec<usize>,
    pub normal: Vector,
    pub offset: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Polytope {
    vertices: Vec<Vector>,
    facets: Vec<Facet>,
    adjacency: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PolytopeInput {
    pub vertices: Vec<Vector>,
}

impl Polytope {
    pub fn from_vertices(vertices: Vec<Vector>) -> Result<Self> {
        polytope_combinatorics(vertices)
    }

    pub fn from_int_vertices(vertices: &[&[i64]]) -> Result<Self> {
        polytope_combinatorics(vertices.iter().map(|v| Vector::from_ints(v)).collect())
    }

    pub fn vertices(&self) -> &[Vector] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &Vector {
        &self.vertices[i]
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn neighbours(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    pub fn dimension(&self) -> usize {
        self.vertices.first().map_or(0, Vector::dim)
    }

    pub fn translate(&self, t: &Vector) -> Result<Self> {
        Polytope::from_vertices(self.vertices.iter().map(|v| v.add(t)).collect())
    }
}

/// Facets by brute force over `d`-subsets of vertices; two vertices are
/// adjacent when the facets containing both meet in exactly those two.
pub fn polytope_combinatorics(vertices: Vec<Vector>) -> Result<Polytope> {
    let d = vertices.first().map_or(0, Vector::dim);
    if let Some(bad) = vertices.iter().find(|v| v.dim() != d) {
        return Err(Error::Dimension {
            what: "polytope vertex",
            expected: d,
            found: bad.dim(),
        });
    }
    let m = vertices.len();
    for j in 0..m {
        if vertices[..j].contains(&vertices[j]) {
            return Err(Error::DegenerateVertex { index: j });
        }
    }
    let rank = if m == 0 {
        0
    } else {
        Matrix::from_rows(vertices.iter().map(|v| v.sub(&vertices[0])).collect())?.rank()
    };
    if d == 0 || rank < d {
        return Err(Error::NotFullDimensional { rank, dimension: d });
    }
    for i in 0..m {
        if in_hull_of_others(&vertices, i) {
            return Err(Error::DegenerateVertex { index: i });
        }
    }

    let mut facets: Vec<Facet> = Vec::new();
    for subset in k_subsets(m, d) {
        let base = &vertices[subset[0]];
        let diffs: Vec<Vector> = subset[1..].iter().map(|&k| vertices[k].sub(base)).collect();
        let refs: Vec<&Vector> = diffs.iter().collect();
        let normal = generalized_cross(&refs)?;
        if normal.is_zero() {
            continue;
        }
        let offset = normal.dot(base);
        let side: Vec<i32> = vertices.iter().map(|v| (normal.dot(v) - &offset).signum()).collect();
        let pos = side.iter().any(|&s| s > 0);
        let neg = side.iter().any(|&s| s < 0);
        if pos && neg {
            continue;
        }
        let on: Vec<usize> = (0..m).filter(|&j| side[j] == 0).collect();
        if facets.iter().any(|f| f.vertices == on) {
            continue;
        }
        let (normal, offset) = if pos { (normal.neg(), -offset) } else { (normal, offset) };
        facets.push(Facet {
            vertices: on,
            normal,
            offset,
        });
    }

    let mut adjacency = vec![Vec::new(); m];
    for u in 0..m {
        for v in u + 1..m {
            let common: Vec<&Facet> = facets
                .iter()
                .filter(|f| f.vertices.contains(&u) && f.vertices.contains(&v))
                .collect();
            if common.is_empty() {
                continue;
            }
            let edge = (0..m).all(|w| w == u || w == v || common.iter().any(|f| !f.vertices.contains(&w)));
            if edge {
                adjacency[u].push(v);
                adjacency[v].push(u);
            }
        }
    }
    Ok(Polytope {
        vertices,
        facets,
        adjacency,
    })
}

fn in_hull_of_others(vertices: &[Vector], i: usize) -> bool {
    let others: Vec<&Vector> = (0..vertices.len()).filter(|&j| j != i).map(|j| &vertices[j]).collect();
    let d = vertices[i].dim();
    let mut a: Vec<Vec<Scalar>> = (0..d)
        .map(|k| others.iter().map(|v| v[k].clone()).collect())
        .collect();
    a.push(vec![Scalar::one(); others.len()]);
    let mut b = vertices[i].coords().to_vec();
    b.push(Scalar::one());
    lp::feasible_point(&a, &b).is_some()
}

/// The cone at vertex `v` spanned by the edge directions `u − v`.
pub fn tangent_cone(polytope: &Polytope, v: usize) -> Result<Cone> {
    let apex = polytope.vertices[v].clone();
    let generators = polytope.adjacency[v]
        .iter()
        .map(|&u| polytope.vertices[u].sub(&apex))
        .collect();
    Cone::new(apex, generators)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeTransform {
    pub terms: Vec<ConicTransform>,
}

pub fn polytope_transform(polytope: &Polytope, method: Method) -> Result<PolytopeTransform> {
    let terms = (0..polytope.vertices.len())
        .map(|v| {
            let cone = tangent_cone(polytope, v).map_err(Error::at_vertex(v))?;
            let numerator = method.numerator(&cone).map_err(Error::at_vertex(v))?;
            Ok(ConicTransform::new(&cone, numerator))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PolytopeTransform { terms })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComplexValue {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for ComplexValue {
    fn from(z: Complex64) -> Self {
        ComplexValue { re: z.re, im: z.im }
    }
}

impl From<ComplexValue> for Complex64 {
    fn from(z: ComplexValue) -> Self {
        Complex64::new(z.re, z.im)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TermValue {
    pub vertex: usize,
    /// Exact `p(ξ) / ∏⟨w, ξ⟩`.
    pub rational_part: Scalar,
    /// `⟨apex, ξ⟩ mod 1`.
    pub phase: Scalar,
    pub value: ComplexValue,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Evaluation {
    pub value: ComplexValue,
    pub terms: Vec<TermValue>,
}

pub fn evaluate(transform: &PolytopeTransform, xi: &Vector) -> Result<ComplexValue> {
    evaluate_detailed(transform, xi).map(|e| e.value)
}

/// All exact arithmetic (including the singularity check and reducing the
/// phase modulo 1) happens before the conversion to `f64`.
pub fn evaluate_detailed(transform: &PolytopeTransform, xi: &Vector) -> Result<Evaluation> {
    let d = xi.dim();
    // (−2πi)^{−d} = (i / 2π)^d
    let norm = Complex64::new(0.0, 1.0 / (2.0 * PI)).powu(d as u32);
    let mut total = Complex64::new(0.0, 0.0);
    let mut terms = Vec::with_capacity(transform.terms.len());
    for (vertex, term) in transform.terms.iter().enumerate() {
        if term.apex.dim() != d {
            return Err(Error::Dimension {
                what: "evaluation point",
                expected: term.apex.dim(),
                found: d,
            });
        }
        let rational_part = term.rational_part(xi).map_err(|generator| Error::SingularEvaluationPoint {
            vertex,
            generator,
            direction: term.generators[generator].coords().to_vec(),
        })?;
        let phase = term.apex.dot(xi).fract_positive();
        let angle = 2.0 * PI * phase.to_f64();
        let value = Complex64::from_polar(rational_part.to_f64(), angle) * norm;
        total += value;
        terms.push(TermValue {
            vertex,
            rational_part,
            phase,
            value: value.into(),
        });
    }
    Ok(Evaluation {
        value: total.into(),
        terms,
    })
}
