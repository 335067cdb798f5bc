//! Birkhoff-James orthogonality in finite-dimensional normed spaces.
//!
//! Polyhedral spaces with rational data are handled exactly; analytic norms
//! (ℓp, the mixed l2-l∞ plane, regular polygons) run in `f64` with an absolute
//! tolerance. The core is generic over [`Scalar`], and the two regimes are
//! exposed through the aliases below.

pub mod envelope;
pub mod error;
pub mod linalg;
pub mod lp;
pub mod operators;
pub mod orthogonality;
pub mod sampling;
pub mod scalar;
pub mod search;
pub mod spaces;
pub mod symmetry;

pub use error::{Error, Result};
pub use scalar::{Rational, Scalar, DEFAULT_TOL};
pub use spaces::{AnySpace, NormedSpace, Polytope};

/// Polytope with exact rational data.
pub type ExactPolytope = Polytope<Rational>;
/// Polytope evaluated in floating point.
pub type FloatPolytope = Polytope<f64>;
