//! Named example spaces.

use std::sync::Arc;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::scalar::{Rational, Scalar};

use super::{L2Linf, Lp, NormedSpace, Polytope};

/// A space of either arithmetic regime.
#[derive(Clone)]
pub enum AnySpace {
    /// Rational polytope; every query is exact.
    Exact(Arc<Polytope<Rational>>),
    /// Analytic norm or polytope with irrational data.
    Float(Arc<dyn NormedSpace<f64>>),
}

impl std::fmt::Debug for AnySpace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "AnySpace({}, dim {}, {})", self.kind(), self.dim(), self.mode())
    }
}

impl AnySpace {
    pub fn dim(&self) -> usize {
        match self {
            AnySpace::Exact(p) => p.dim(),
            AnySpace::Float(s) => s.dim(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            AnySpace::Exact(p) => p.kind(),
            AnySpace::Float(s) => s.kind(),
        }
    }

    /// `"exact"` or `"float"`.
    pub fn mode(&self) -> &'static str {
        match self {
            AnySpace::Exact(_) => "exact",
            AnySpace::Float(_) => "float",
        }
    }

    pub fn float_view(&self) -> Arc<dyn NormedSpace<f64>> {
        match self {
            AnySpace::Exact(p) => p.float_view(),
            AnySpace::Float(s) => s.clone(),
        }
    }

    pub fn is_polyhedral(&self) -> bool {
        match self {
            AnySpace::Exact(_) => true,
            AnySpace::Float(s) => s.polytope().is_some(),
        }
    }

    pub fn exact(&self) -> Option<&Polytope<Rational>> {
        match self {
            AnySpace::Exact(p) => Some(p),
            AnySpace::Float(_) => None,
        }
    }
}

/// Catalog entry names with a one-line description each.
pub fn catalog_names() -> Vec<(String, String)> {
    let mut v: Vec<(String, String)> = vec![
        ("linf2".into(), "max norm on the plane".into()),
        ("linf3".into(), "max norm on R^3".into()),
        ("l1-2".into(), "sum norm on the plane".into()),
        ("l2-2".into(), "Euclidean plane".into()),
        ("l2-3".into(), "Euclidean R^3".into()),
        (
            "l2linf".into(),
            "square in quadrants I/III, circle in quadrants II/IV".into(),
        ),
        (
            "decagon".into(),
            "decagon with vertices ±(2,2), ±(1,3), ±(0,7/2), ±(-1,3), ±(-2,2)".into(),
        ),
        (
            "fig9-hexagon".into(),
            "hexagon with vertices ±(2,1/2), ±(0,2), ±(-2,1/2)".into(),
        ),
        (
            "fig6-prism".into(),
            "three stacked hexagons 3H, 6H, 3H at heights -3, 0, 3".into(),
        ),
    ];
    for n in (4..=16).step_by(2) {
        v.push((
            format!("regular-polygon-{n}"),
            format!("regular polygon with {n} vertices"),
        ));
    }
    v
}

fn q(n: i64, d: i64) -> Rational {
    Rational::from_ratio(n, d)
}

fn symmetric(points: &[[Rational; 2]]) -> Vec<Vec<Rational>> {
    points
        .iter()
        .flat_map(|p| {
            [
                p.to_vec(),
                p.iter().map(|x| -x.clone()).collect::<Vec<_>>(),
            ]
        })
        .collect()
}

/// Unit ball of ℓ∞ⁿ, built from its facets.
pub fn linf(dim: usize) -> Result<Polytope<Rational>> {
    let mut fs = Vec::new();
    for i in 0..dim {
        for s in [1, -1] {
            let mut f = vec![q(0, 1); dim];
            f[i] = q(s, 1);
            fs.push(f);
        }
    }
    Polytope::from_facets(fs)
}

/// Unit ball of ℓ1ⁿ (cross-polytope).
pub fn l1(dim: usize) -> Result<Polytope<Rational>> {
    if dim <= 3 {
        let mut vs = Vec::new();
        for i in 0..dim {
            for s in [1, -1] {
                let mut v = vec![q(0, 1); dim];
                v[i] = q(s, 1);
                vs.push(v);
            }
        }
        Polytope::from_vertices(vs)
    } else if dim <= 4 {
        let fs = (0..dim)
            .map(|_| [1i64, -1])
            .multi_cartesian_product()
            .map(|s| s.into_iter().map(|x| q(x, 1)).collect())
            .collect();
        Polytope::from_facets(fs)
    } else {
        Err(Error::UnsupportedDimension {
            dim,
            what: "l1 space".into(),
        })
    }
}

/// Regular polygon with `n` vertices `(cos((2j-1)π/n), sin((2j-1)π/n))`.
pub fn regular_polygon(n: usize) -> Result<Polytope<f64>> {
    regular_polygon_tol(n, crate::scalar::DEFAULT_TOL)
}

pub fn regular_polygon_tol(n: usize, tol: f64) -> Result<Polytope<f64>> {
    if n < 4 || !n.is_multiple_of(2) || n > 64 {
        return Err(Error::Precondition(format!(
            "regular polygon needs an even vertex count between 4 and 64, got {n}"
        )));
    }
    let verts = (1..=n)
        .map(|j| {
            let t = (2 * j - 1) as f64 * std::f64::consts::PI / n as f64;
            vec![t.cos(), t.sin()]
        })
        .collect();
    Polytope::from_vertices_tol(verts, tol)
}

pub fn decagon() -> Polytope<Rational> {
    Polytope::from_vertices(symmetric(&[
        [q(2, 1), q(2, 1)],
        [q(1, 1), q(3, 1)],
        [q(0, 1), q(7, 2)],
        [q(-1, 1), q(3, 1)],
        [q(-2, 1), q(2, 1)],
    ]))
    .expect("decagon is a valid body")
}

pub fn fig9_hexagon() -> Polytope<Rational> {
    Polytope::from_vertices(symmetric(&[
        [q(2, 1), q(1, 2)],
        [q(0, 1), q(2, 1)],
        [q(-2, 1), q(1, 2)],
    ]))
    .expect("hexagon is a valid body")
}

/// Three stacked hexagons: `3H` at height −3, `6H` at height 0 and `3H` at
/// height 3, where `H` is the affine-regular hexagon
/// `{(1,0), (1,1), (0,1), (-1,0), (-1,-1), (0,-1)}`.
pub fn fig6_prism() -> Polytope<Rational> {
    let h = [(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)];
    let mut vs = Vec::new();
    for (r, z) in [(3, -3), (6, 0), (3, 3)] {
        for &(a, b) in &h {
            vs.push(vec![q(r * a, 1), q(r * b, 1), q(z, 1)]);
        }
    }
    Polytope::from_vertices(vs).expect("prism is a valid body")
}

pub fn catalog(name: &str) -> Result<AnySpace> {
    catalog_tol(name, None)
}

/// Like [`catalog`], with `tol` overriding the default of floating-point entries.
/// Exact entries ignore it.
pub fn catalog_tol(name: &str, tol: Option<f64>) -> Result<AnySpace> {
    let ftol = tol.unwrap_or(crate::scalar::DEFAULT_TOL);
    let exact = |p: Polytope<Rational>| Ok(AnySpace::Exact(Arc::new(p)));
    match name {
        "linf2" => exact(linf(2)?),
        "linf3" => exact(linf(3)?),
        "l1-2" => exact(l1(2)?),
        "l2-2" => Ok(AnySpace::Float(Arc::new(Lp::euclidean(2)?.with_tolerance(ftol)))),
        "l2-3" => Ok(AnySpace::Float(Arc::new(Lp::euclidean(3)?.with_tolerance(ftol)))),
        "l2linf" => Ok(AnySpace::Float(Arc::new(L2Linf::new().with_tolerance(ftol)))),
        "decagon" => exact(decagon()),
        "fig9-hexagon" => exact(fig9_hexagon()),
        "fig6-prism" => exact(fig6_prism()),
        _ => {
            if let Some(n) = name.strip_prefix("regular-polygon-") {
                let n: usize = n
                    .parse()
                    .map_err(|_| Error::UnknownCatalog(name.to_string()))?;
                if (4..=16).contains(&n) && n.is_multiple_of(2) {
                    return Ok(AnySpace::Float(Arc::new(regular_polygon_tol(n, ftol)?)));
                }
            }
            Err(Error::UnknownCatalog(name.to_string()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_listed_name_builds() {
        for (name, _) in catalog_names() {
            let s = catalog(&name).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert!(s.dim() >= 2);
        }
        assert!(matches!(catalog("nope"), Err(Error::UnknownCatalog(_))));
        assert!(catalog("regular-polygon-7").is_err());
    }

    #[test]
    fn prism_lattice() {
        let p = fig6_prism();
        assert_eq!(p.vertices().len(), 18);
        // top, bottom, and two rings of six quadrilaterals
        assert_eq!(p.facets().len(), 14);
        let top: Vec<Rational> = vec![q(0, 1), q(0, 1), q(1, 3)];
        assert!(p.facets().iter().any(|f| f.functional == top));
    }

    #[test]
    fn linf_facet_input_in_higher_dims() {
        let c = linf(4).unwrap();
        assert_eq!(c.vertices().len(), 16);
        assert_eq!(c.faces().len(), 80);
        let o = l1(4).unwrap();
        assert_eq!(o.vertices().len(), 8);
    }

    #[test]
    fn regular_polygon_is_float_and_unit() {
        let h = regular_polygon(6).unwrap();
        for v in h.vertices() {
            assert!((h.norm(v) - 1.0).abs() < 1e-12);
        }
    }
}
