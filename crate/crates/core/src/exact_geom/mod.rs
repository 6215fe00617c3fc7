//! Exact rational plane geometry: scalars, primitives, constructions and
//! decision predicates.

mod construct;
mod predicates;
mod projective;
mod scalar;
mod similarity;
mod types;

pub use construct::*;
pub use predicates::*;
pub use projective::{
    projective_collinearity_det, projective_line_through, projective_polar, ProjectivePoint,
};
pub use scalar::{q, ParseScalarError, Scalar};
pub use similarity::InverseSimilarity;
pub use types::{
    Circle, Complex, DirectedAngleClass, GeomError, GeomResult, Line, Orientation, Point,
};
