//! Analytic norms evaluated in floating point.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::dot;
use crate::scalar::DEFAULT_TOL;

use super::NormedSpace;

/// `ℓp` on ℝⁿ for `1 < p < ∞`. The polyhedral cases `p = 1, ∞` are exact
/// [`Polytope`](super::Polytope)s.
#[derive(Debug, Clone, PartialEq)]
pub struct Lp {
    dim: usize,
    p: f64,
    tol: f64,
}

impl Lp {
    pub fn new(dim: usize, p: f64) -> Result<Self> {
        if !(2..=8).contains(&dim) {
            return Err(Error::UnsupportedDimension {
                dim,
                what: "lp space".into(),
            });
        }
        if !(p > 1.0 && p.is_finite()) {
            return Err(Error::Precondition(format!(
                "lp exponent must satisfy 1 < p < inf here, got {p}"
            )));
        }
        Ok(Lp {
            dim,
            p,
            tol: DEFAULT_TOL,
        })
    }

    pub fn euclidean(dim: usize) -> Result<Self> {
        Self::new(dim, 2.0)
    }

    pub fn with_tolerance(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    fn conjugate(&self) -> f64 {
        self.p / (self.p - 1.0)
    }

    fn pnorm(v: &[f64], p: f64) -> f64 {
        if p == 2.0 {
            return v.iter().map(|x| x * x).sum::<f64>().sqrt();
        }
        let m = v.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        if m == 0.0 {
            return 0.0;
        }
        m * v.iter().map(|x| (x.abs() / m).powf(p)).sum::<f64>().powf(1.0 / p)
    }

    /// `sign(v_i)|v_i|^(e)` normalized by `scale`.
    fn signed_pow(v: &[f64], e: f64, scale: f64) -> Vec<f64> {
        v.iter()
            .map(|x| x.signum() * (x.abs() / scale).powf(e))
            .map(|x| if x.is_nan() { 0.0 } else { x })
            .collect()
    }
}

impl NormedSpace<f64> for Lp {
    fn dim(&self) -> usize {
        self.dim
    }

    fn tolerance(&self) -> f64 {
        self.tol
    }

    fn kind(&self) -> &'static str {
        "lp"
    }

    fn norm(&self, v: &[f64]) -> f64 {
        Self::pnorm(v, self.p)
    }

    fn norm_f64(&self, v: &[f64]) -> f64 {
        Self::pnorm(v, self.p)
    }

    fn dual_norm(&self, f: &[f64]) -> f64 {
        Self::pnorm(f, self.conjugate())
    }

    fn support_generators(&self, x: &[f64]) -> Vec<Vec<f64>> {
        let n = self.norm(x);
        vec![Self::signed_pow(x, self.p - 1.0, n)]
    }

    fn float_view(&self) -> Arc<dyn NormedSpace<f64>> {
        Arc::new(self.clone())
    }

    fn dual_preimage(&self, f: &[f64]) -> Option<Vec<f64>> {
        let fq = self.dual_norm(f);
        if fq == 0.0 {
            return None;
        }
        let y = Self::signed_pow(f, self.conjugate() - 1.0, fq);
        let n = self.norm(&y);
        Some(y.iter().map(|t| t / n).collect())
    }

    fn is_euclidean(&self) -> bool {
        self.p == 2.0
    }

    fn is_smooth(&self) -> bool {
        true
    }

    fn is_strictly_convex(&self) -> bool {
        true
    }
}

/// Planar norm equal to `max(|a|, |b|)` when `ab >= 0` and to `√(a² + b²)`
/// otherwise: a square in the first and third quadrants glued to circular arcs.
#[derive(Debug, Clone, PartialEq)]
pub struct L2Linf {
    tol: f64,
}

impl Default for L2Linf {
    fn default() -> Self {
        L2Linf { tol: DEFAULT_TOL }
    }
}

impl L2Linf {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_tolerance(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }
}

impl NormedSpace<f64> for L2Linf {
    fn dim(&self) -> usize {
        2
    }

    fn tolerance(&self) -> f64 {
        self.tol
    }

    fn kind(&self) -> &'static str {
        "l2linf"
    }

    fn norm(&self, v: &[f64]) -> f64 {
        self.norm_f64(v)
    }

    fn norm_f64(&self, v: &[f64]) -> f64 {
        let (a, b) = (v[0], v[1]);
        if a * b >= 0.0 {
            a.abs().max(b.abs())
        } else {
            a.hypot(b)
        }
    }

    fn dual_norm(&self, f: &[f64]) -> f64 {
        let corners: [[f64; 2]; 6] = [
            [1.0, 1.0],
            [-1.0, -1.0],
            [1.0, 0.0],
            [-1.0, 0.0],
            [0.0, 1.0],
            [0.0, -1.0],
        ];
        let mut best = corners
            .iter()
            .map(|c| dot(f, c))
            .fold(f64::NEG_INFINITY, f64::max);
        // The arcs in the mixed quadrants contribute ‖f‖₂ when f points into them.
        if f[0] * f[1] <= 0.0 {
            best = best.max(f[0].hypot(f[1]));
        }
        best
    }

    fn support_generators(&self, x: &[f64]) -> Vec<Vec<f64>> {
        let (a, b) = (x[0], x[1]);
        let n = self.norm_f64(x);
        let (ua, ub) = (a / n, b / n);
        let tol = self.tol;
        if ua.abs() <= tol {
            return vec![vec![0.0, ub.signum()]];
        }
        if ub.abs() <= tol {
            return vec![vec![ua.signum(), 0.0]];
        }
        if ua * ub < 0.0 {
            return vec![vec![ua, ub]];
        }
        let gap = ua.abs() - ub.abs();
        if gap > tol {
            vec![vec![ua.signum(), 0.0]]
        } else if gap < -tol {
            vec![vec![0.0, ub.signum()]]
        } else {
            vec![vec![ua.signum(), 0.0], vec![0.0, ub.signum()]]
        }
    }

    fn float_view(&self) -> Arc<dyn NormedSpace<f64>> {
        Arc::new(self.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn l2linf_quadrant_rule() {
        let s = L2Linf::new();
        assert_eq!(s.norm(&[3.0, 4.0]), 4.0);
        assert_eq!(s.norm(&[-3.0, 4.0]), 5.0);
        assert_eq!(s.norm(&[0.0, -2.0]), 2.0);
    }

    #[test]
    fn l2linf_support_sets() {
        let s = L2Linf::new();
        assert_eq!(s.support_generators(&[0.0, 1.0]), vec![vec![0.0, 1.0]]);
        assert_eq!(
            s.support_generators(&[1.0, 1.0]),
            vec![vec![1.0, 0.0], vec![0.0, 1.0]]
        );
        let g = s.support_generators(&[-3.0, 4.0]);
        assert_eq!(g.len(), 1);
        assert!((g[0][0] + 0.6).abs() < 1e-15 && (g[0][1] - 0.8).abs() < 1e-15);
    }

    #[test]
    fn l2linf_dual_norm_of_generators_is_one() {
        let s = L2Linf::new();
        for x in [[1.0, 0.3], [-0.2, 0.9], [0.5, -0.5], [1.0, 1.0]] {
            for g in s.support_generators(&x) {
                assert!((s.dual_norm(&g) - 1.0).abs() < 1e-12);
                assert!((dot(&g, &x) - s.norm(&x)).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn lp_gradient_and_preimage() {
        let s = Lp::new(3, 3.0).unwrap();
        let x = [0.5, -1.0, 0.25];
        let g = &s.support_generators(&x)[0];
        assert!((dot(g, &x) - s.norm(&x)).abs() < 1e-12);
        assert!((s.dual_norm(g) - 1.0).abs() < 1e-12);
        let y = s.dual_preimage(g).unwrap();
        let n = s.norm(&x);
        for (a, b) in y.iter().zip(&x) {
            assert!((a - b / n).abs() < 1e-12);
        }
    }

    #[test]
    fn lp_rejects_polyhedral_exponents() {
        assert!(Lp::new(2, 1.0).is_err());
        assert!(Lp::new(2, f64::INFINITY).is_err());
        assert!(Lp::new(9, 2.0).is_err());
    }
}
