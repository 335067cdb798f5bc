//! Finite-dimensional normed spaces as queryable oracles.

mod analytic;
pub mod catalog;
pub mod file;
mod polytope;

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub use analytic::{L2Linf, Lp};
pub use catalog::{catalog, catalog_names, AnySpace};
pub use polytope::{Face, Facet, Polytope};

/// Position of a unit vector in the face lattice, or its smoothness for analytic norms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "dim")]
pub enum PointPosition {
    ExtremeVertex,
    EdgeInterior,
    FacetInterior,
    FaceInterior(usize),
    Smooth,
    Nonsmooth,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PointClass {
    pub position: PointPosition,
    pub smooth: bool,
    /// Number of generators of `J(x)`.
    pub generators: usize,
    /// Face index for polyhedral spaces.
    pub face: Option<usize>,
}

/// A norm on ℝⁿ.
///
/// Implementations are immutable after construction and safe to share
/// between threads.
pub trait NormedSpace<S: Scalar>: Send + Sync {
    fn dim(&self) -> usize;

    /// Absolute comparison tolerance (0 for exact spaces).
    fn tolerance(&self) -> f64;

    fn kind(&self) -> &'static str;

    fn norm(&self, v: &[S]) -> S;

    /// Fast floating-point evaluation used by samplers.
    fn norm_f64(&self, v: &[f64]) -> f64;

    fn dual_norm(&self, f: &[S]) -> S;

    /// Generators of `J(x)` (norm-one functionals with `f(x) = ‖x‖`). `x` must be nonzero.
    fn support_generators(&self, x: &[S]) -> Vec<Vec<S>>;

    fn polytope(&self) -> Option<&Polytope<S>> {
        None
    }

    /// The same space evaluated in floating point.
    fn float_view(&self) -> Arc<dyn NormedSpace<f64>>;

    /// The unit vector `y` with `f(y) = ‖f‖*`, when unique (strictly convex norms).
    fn dual_preimage(&self, _f: &[S]) -> Option<Vec<S>> {
        None
    }

    fn is_euclidean(&self) -> bool {
        false
    }

    /// True when every nonzero point has a single supporting functional.
    fn is_smooth(&self) -> bool {
        false
    }

    /// True when the unit sphere contains no segment.
    fn is_strictly_convex(&self) -> bool {
        false
    }

    fn classify_point(&self, x: &[S]) -> Result<PointClass> {
        check_dim(self.dim(), "x", x)?;
        let n = self.norm(x);
        if !crate::scalar::eq_tol(&n, &S::one(), self.tolerance()) {
            return Err(Error::NotUnit {
                field: "x".into(),
                norm: n.to_report(),
            });
        }
        let generators = self.support_generators(x).len();
        let smooth = generators == 1;
        Ok(PointClass {
            position: if smooth {
                PointPosition::Smooth
            } else {
                PointPosition::Nonsmooth
            },
            smooth,
            generators,
            face: None,
        })
    }
}

pub(crate) fn check_dim<S>(dim: usize, field: &str, v: &[S]) -> Result<()> {
    if v.len() != dim {
        return Err(Error::dim(field, dim, v.len()));
    }
    Ok(())
}

/// Norm evaluation with dimension checking.
pub fn norm_eval<S: Scalar, N: NormedSpace<S> + ?Sized>(space: &N, v: &[S]) -> Result<S> {
    check_dim(space.dim(), "v", v)?;
    Ok(space.norm(v))
}

pub fn dual_norm_eval<S: Scalar, N: NormedSpace<S> + ?Sized>(space: &N, f: &[S]) -> Result<S> {
    check_dim(space.dim(), "f", f)?;
    Ok(space.dual_norm(f))
}

/// Support set `J(x)` with dimension and nonzero checks.
pub fn support_set<S: Scalar, N: NormedSpace<S> + ?Sized>(
    space: &N,
    x: &[S],
) -> Result<Vec<Vec<S>>> {
    check_dim(space.dim(), "x", x)?;
    if crate::linalg::is_zero(x, 0.0) {
        return Err(Error::ZeroVector("x".into()));
    }
    Ok(space.support_generators(x))
}

/// The point of `S_X` in direction `(cos θ, sin θ)` of a planar space.
pub fn sphere_point_2d(space: &dyn NormedSpace<f64>, theta: f64) -> [f64; 2] {
    let d = [theta.cos(), theta.sin()];
    let n = space.norm_f64(&d);
    [d[0] / n, d[1] / n]
}
