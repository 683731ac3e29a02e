use serde_json::{json, Value};
use thiserror::Error;

use crate::scalar::Scalar;
use crate::vervan::VervanRecord;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse {0:?} as a rational number")]
pub struct ParseScalarError(pub String);

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch in {what}: expected {expected}, found {found}")]
    Dimension {
        what: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("a cone in dimension {dimension} needs at least {dimension} generators, got {count}")]
    TooFewGenerators { dimension: usize, count: usize },

    #[error("generator {index} is the zero vector")]
    ZeroGenerator { index: usize },

    #[error("generators {first} and {second} span the same ray")]
    DuplicateRay { first: usize, second: usize },

    #[error("cone is not pointed: a nontrivial nonnegative combination of generators vanishes")]
    NotPointed,

    #[error("generators {subset:?} are linearly dependent; the cone is not in general position")]
    NotGeneric { subset: Vec<usize> },

    #[error("simplex {simplex:?} has zero determinant")]
    SingularSimplex { simplex: Vec<usize> },

    #[error("diagonal {indices:?} is degenerate and has no prescribed value")]
    DegenerateDiagonal { indices: Vec<usize> },

    #[error("interpolation system has rank {rank}, needs {unknowns}")]
    RankDeficient {
        rank: usize,
        unknowns: usize,
        skipped: Vec<Vec<usize>>,
    },

    #[error("interpolation row {row:?} is inconsistent (residual {residual})")]
    Inconsistent { row: Vec<usize>, residual: Scalar },

    #[error("invalid diagonal family: {reason}")]
    InvalidFamily { reason: String },

    #[error("Veronese-Vandermonde identity failed for family {:?}", record.family)]
    VerificationFailure { record: Box<VervanRecord> },

    #[error("vertices do not span a full-dimensional polytope (affine rank {rank} < {dimension})")]
    NotFullDimensional { rank: usize, dimension: usize },

    #[error("vertex {index} is repeated or lies in the convex hull of the others")]
    DegenerateVertex { index: usize },

    #[error("linear form of generator {generator} at vertex {vertex} vanishes at the evaluation point")]
    SingularEvaluationPoint {
        vertex: usize,
        generator: usize,
        direction: Vec<Scalar>,
    },

    #[error("at vertex {vertex}: {source}")]
    AtVertex {
        vertex: usize,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    /// Stable snake-case identifier for machine consumption.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Dimension { .. } => "dimension",
            Error::TooFewGenerators { .. } => "too_few_generators",
            Error::ZeroGenerator { .. } => "zero_generator",
            Error::DuplicateRay { .. } => "duplicate_ray",
            Error::NotPointed => "not_pointed",
            Error::NotGeneric { .. } => "not_generic",
            Error::SingularSimplex { .. } => "singular_simplex",
            Error::DegenerateDiagonal { .. } => "degenerate_diagonal",
            Error::RankDeficient { .. } => "rank_deficient",
            Error::Inconsistent { .. } => "inconsistent",
            Error::InvalidFamily { .. } => "invalid_family",
            Error::VerificationFailure { .. } => "verification_failure",
            Error::NotFullDimensional { .. } => "not_full_dimensional",
            Error::DegenerateVertex { .. } => "degenerate_vertex",
            Error::SingularEvaluationPoint { .. } => "singular_evaluation_point",
            Error::AtVertex { source, .. } => source.code(),
        }
    }

    /// Structured payload describing where the error arose.
    pub fn context(&self) -> Value {
        match self {
            Error::Dimension {
                what,
                expected,
                found,
            } => json!({ "what": what, "expected": expected, "found": found }),
            Error::TooFewGenerators { dimension, count } => {
                json!({ "dimension": dimension, "count": count })
            }
            Error::ZeroGenerator { index } => json!({ "index": index }),
            Error::DuplicateRay { first, second } => json!({ "first": first, "second": second }),
            Error::NotPointed => json!({}),
            Error::NotGeneric { subset } => json!({ "subset": subset }),
            Error::SingularSimplex { simplex } => json!({ "simplex": simplex }),
            Error::DegenerateDiagonal { indices } => json!({ "diagonal": indices }),
            Error::RankDeficient {
                rank,
                unknowns,
                skipped,
            } => json!({ "rank": rank, "unknowns": unknowns, "skipped": skipped }),
            Error::Inconsistent { row, residual } => {
                json!({ "diagonal": row, "residual": residual })
            }
            Error::InvalidFamily { reason } => json!({ "reason": reason }),
            Error::VerificationFailure { record } => {
                serde_json::to_value(record).unwrap_or(Value::Null)
            }
            Error::NotFullDimensional { rank, dimension } => {
                json!({ "rank": rank, "dimension": dimension })
            }
            Error::DegenerateVertex { index } => json!({ "vertex": index }),
            Error::SingularEvaluationPoint {
                vertex,
                generator,
                direction,
            } => json!({ "vertex": vertex, "generator": generator, "direction": direction }),
            Error::AtVertex { vertex, source } => {
                let mut ctx = source.context();
                if let Value::Object(map) = &mut ctx {
                    map.insert("vertex".into(), json!(vertex));
                }
                ctx
            }
        }
    }

    pub(crate) fn at_vertex(vertex: usize) -> impl FnOnce(Error) -> Error {
        move |source| Error::AtVertex {
            vertex,
            source: Box::new(source),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
