//! Exact Fourier transforms of pointed polyhedral cones.
//!
//! A pointed cone `K = v + cone(w_1, …, w_n)` in `R^d` has Fourier transform
//! `p_K(ξ) / ∏⟨w_i, ξ⟩` times a modulation factor, with `p_K` homogeneous of
//! degree `n - d`. This crate computes `p_K` exactly in two independent ways:
//!
//! * [`triangulation`]: sum the closed-form transforms of a pulling
//!   triangulation;
//! * [`interpolation`]: solve the overdetermined system prescribed by the
//!   values of `p_K` at the dual vectors of all `(d-1)`-subsets of generators.
//!
//! [`vervan`] checks determinant identities for the maximal minors of that
//! system, and [`brion`] sums vertex-cone transforms into the transform of a
//! whole polytope.

pub mod brion;
pub mod combinatorics;
pub mod cone;
pub mod error;
pub mod interpolation;
pub mod linalg;
pub mod lp;
pub mod monomial;
pub mod polynomial;
pub mod random;
pub mod scalar;
pub mod triangulation;
pub mod vervan;

pub use brion::{evaluate, polytope_transform, tangent_cone, ComplexValue, Method, Polytope, PolytopeTransform};
pub use cone::{Cone, Diagonal, DiagonalClass, ValidationReport};
pub use error::{Error, Result};
pub use interpolation::{build_system, pk_via_interpolation, solve_exact, InterpolationSystem};
pub use linalg::{generalized_cross, Matrix, Vector};
pub use monomial::{monomial_basis, veronese, ExponentVector};
pub use polynomial::HomogeneousPolynomial;
pub use scalar::Scalar;
pub use triangulation::{pk_via_triangulation, pulling_triangulation, ConicTransform, Triangulation};
pub use vervan::{verify_vervan, DiagonalFamily, SimplexIndex, VervanRecord};
