//! Linear maps between finite-dimensional normed spaces and their
//! Birkhoff-James orthogonality.
//!
//! With a polyhedral domain the operator norm is a maximum over extreme points,
//! and with a polyhedral codomain too the pencil `λ ↦ ‖A + λT‖` is an upper
//! envelope of lines, so both are exact. Euclidean pairs use the spectral norm;
//! everything else is sampled.

use std::sync::Arc;

use nalgebra::DMatrix;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::envelope;
use crate::error::{Error, Result};
use crate::linalg;
use crate::orthogonality::{in_negative_part, in_positive_part, offset_min_f64};
use crate::sampling::{self, SampleConfig};
use crate::scalar::{Rational, Scalar};
use crate::search;
use crate::spaces::file::OperatorSpec;
use crate::spaces::{sphere_point_2d, AnySpace, NormedSpace};
use crate::symmetry::Resolution;

/// A matrix acting from `domain` to `codomain` (rows = codomain dimension).
#[derive(Clone)]
pub struct LinearMap<S: Scalar> {
    matrix: Vec<Vec<S>>,
    domain: Arc<dyn NormedSpace<S>>,
    codomain: Arc<dyn NormedSpace<S>>,
}

impl<S: Scalar> std::fmt::Debug for LinearMap<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("LinearMap")
            .field("matrix", &self.matrix)
            .field("domain", &self.domain.kind())
            .field("codomain", &self.codomain.kind())
            .finish()
    }
}

impl<S: Scalar> LinearMap<S> {
    pub fn new(
        matrix: Vec<Vec<S>>,
        domain: Arc<dyn NormedSpace<S>>,
        codomain: Arc<dyn NormedSpace<S>>,
    ) -> Result<Self> {
        if matrix.len() != codomain.dim() {
            return Err(Error::dim("matrix rows", codomain.dim(), matrix.len()));
        }
        for r in &matrix {
            if r.len() != domain.dim() {
                return Err(Error::dim("matrix columns", domain.dim(), r.len()));
            }
        }
        Ok(LinearMap {
            matrix,
            domain,
            codomain,
        })
    }

    pub fn matrix(&self) -> &[Vec<S>] {
        &self.matrix
    }

    pub fn domain(&self) -> &Arc<dyn NormedSpace<S>> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<dyn NormedSpace<S>> {
        &self.codomain
    }

    pub fn apply(&self, v: &[S]) -> Vec<S> {
        self.matrix.iter().map(|r| linalg::dot(r, v)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.iter().all(|r| linalg::is_zero(r, 0.0))
    }

    /// Same spaces, matrix multiplied by `k`.
    pub fn scaled(&self, k: &S) -> Self {
        LinearMap {
            matrix: self.matrix.iter().map(|r| linalg::scale(r, k)).collect(),
            ..self.clone()
        }
    }

    /// `self + k·other`.
    pub fn plus_scaled(&self, k: &S, other: &Self) -> Result<Self> {
        check_same_spaces(self, other)?;
        Ok(LinearMap {
            matrix: self
                .matrix
                .iter()
                .zip(&other.matrix)
                .map(|(a, b)| linalg::axpy(a, k, b))
                .collect(),
            ..self.clone()
        })
    }

    pub fn to_float(&self) -> LinearMap<f64> {
        LinearMap {
            matrix: self.matrix.iter().map(|r| linalg::to_f64(r)).collect(),
            domain: self.domain.float_view(),
            codomain: self.codomain.float_view(),
        }
    }

    /// Rank of the matrix, with the domain tolerance in float mode.
    pub fn rank(&self) -> usize {
        linalg::rank(&self.matrix, self.domain.tolerance())
    }
}

/// A linear map over either arithmetic regime.
#[derive(Debug, Clone)]
pub enum AnyMap {
    Exact(LinearMap<Rational>),
    Float(LinearMap<f64>),
}

impl AnyMap {
    /// Exact when both spaces are rational polytopes, floating point otherwise.
    pub fn from_spec(spec: &OperatorSpec) -> Result<Self> {
        match (&spec.domain, &spec.codomain) {
            (AnySpace::Exact(d), AnySpace::Exact(c)) => Ok(AnyMap::Exact(LinearMap::new(
                spec.matrix.clone(),
                d.clone(),
                c.clone(),
            )?)),
            (d, c) => Ok(AnyMap::Float(LinearMap::new(
                spec.matrix.iter().map(|r| linalg::to_f64(r)).collect(),
                d.float_view(),
                c.float_view(),
            )?)),
        }
    }

    pub fn to_float(&self) -> LinearMap<f64> {
        match self {
            AnyMap::Exact(m) => m.to_float(),
            AnyMap::Float(m) => m.clone(),
        }
    }
}

fn check_same_spaces<S: Scalar>(a: &LinearMap<S>, t: &LinearMap<S>) -> Result<()> {
    let same = |x: &Arc<dyn NormedSpace<S>>, y: &Arc<dyn NormedSpace<S>>| {
        Arc::ptr_eq(x, y) || (x.dim() == y.dim() && x.kind() == y.kind())
    };
    if a.domain.dim() != t.domain.dim() {
        return Err(Error::dim("domain", a.domain.dim(), t.domain.dim()));
    }
    if a.codomain.dim() != t.codomain.dim() {
        return Err(Error::dim("codomain", a.codomain.dim(), t.codomain.dim()));
    }
    if !same(&a.domain, &t.domain) || !same(&a.codomain, &t.codomain) {
        return Err(Error::Precondition(
            "operators must share domain and codomain".into(),
        ));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NormMethod {
    /// Maximum over the extreme points of a polyhedral domain.
    VertexEnumeration,
    /// Largest singular value (Euclidean domain and codomain).
    Spectral,
    /// Grid or random search over the domain sphere; a lower bound.
    Sampled,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OperatorNorm<S> {
    pub value: S,
    /// Unit vectors where the norm is attained. For a polyhedral domain these
    /// are the maximizing extreme points.
    pub m_t: Vec<Vec<S>>,
    pub method: NormMethod,
    pub exact: bool,
    pub resolution: Option<Resolution>,
}

fn euclidean_pair<S: Scalar>(t: &LinearMap<S>) -> bool {
    t.domain.is_euclidean() && t.codomain.is_euclidean()
}

fn spectral(matrix: &[Vec<f64>], cols: usize) -> (f64, Vec<f64>) {
    let m = DMatrix::from_fn(matrix.len(), cols, |i, j| matrix[i][j]);
    let svd = m.svd(false, true);
    let (k, &s) = svd
        .singular_values
        .iter()
        .enumerate()
        .fold((0, &f64::NEG_INFINITY), |b, c| if c.1 > b.1 { c } else { b });
    let v_t = svd.v_t.expect("requested right singular vectors");
    (s, v_t.row(k).iter().cloned().collect())
}

/// Fixed sample of the domain sphere used by sampled norms.
fn domain_samples(space: &dyn NormedSpace<f64>, cfg: &SampleConfig) -> Vec<Vec<f64>> {
    match space.dim() {
        2 => sampling::circle_grid(space, cfg.samples)
            .iter()
            .map(|p| p.to_vec())
            .collect(),
        3 => sampling::fibonacci_sphere(cfg.samples)
            .iter()
            .map(|p| sampling::normalize(space, p))
            .collect(),
        d => {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            sampling::random_directions(d, cfg.samples, &mut rng)
                .iter()
                .map(|p| sampling::normalize(space, p))
                .collect()
        }
    }
}

/// `‖T‖` and the set `M_T`.
pub fn operator_norm<S: Scalar>(t: &LinearMap<S>, cfg: &SampleConfig) -> Result<OperatorNorm<S>> {
    if let Some(p) = t.domain.polytope() {
        let norms: Vec<S> = p
            .vertices()
            .iter()
            .map(|v| t.codomain.norm(&t.apply(v)))
            .collect();
        let value = norms
            .iter()
            .cloned()
            .fold(S::zero(), crate::scalar::max_of);
        let tol = t.codomain.tolerance() * value.to_f64().abs().max(1.0);
        let m_t = p
            .vertices()
            .iter()
            .zip(&norms)
            .filter(|(_, n)| crate::scalar::eq_tol(*n, &value, tol))
            .map(|(v, _)| v.clone())
            .collect();
        return Ok(OperatorNorm {
            exact: S::EXACT && t.codomain.polytope().is_some(),
            value,
            m_t,
            method: NormMethod::VertexEnumeration,
            resolution: None,
        });
    }
    let f = t.to_float();
    if euclidean_pair(t) {
        let (s, v) = spectral(&f.matrix, f.domain.dim());
        let v = sampling::normalize(f.domain.as_ref(), &v);
        return Ok(OperatorNorm {
            value: S::from_f64(s),
            m_t: vec![linalg::from_f64(&v), linalg::from_f64(&linalg::neg(&v))],
            method: NormMethod::Spectral,
            exact: false,
            resolution: None,
        });
    }
    let (value, x) = sampled_norm(&f, cfg);
    Ok(OperatorNorm {
        value: S::from_f64(value),
        m_t: vec![linalg::from_f64(&x), linalg::from_f64(&linalg::neg(&x))],
        method: NormMethod::Sampled,
        exact: false,
        resolution: Some(cfg.into()),
    })
}

fn sampled_norm(f: &LinearMap<f64>, cfg: &SampleConfig) -> (f64, Vec<f64>) {
    let dom = f.domain.as_ref();
    let value_at = |x: &[f64]| f.codomain.norm_f64(&f.apply(x));
    if dom.dim() == 2 {
        let g = |th: f64| Some(value_at(&sphere_point_2d(dom, th)));
        let (th, v) = sampling::refine_max(
            &g,
            0.0,
            std::f64::consts::TAU,
            cfg.samples,
            cfg.refine,
            cfg.factor,
        )
        .expect("feasible everywhere");
        return (v, sphere_point_2d(dom, th).to_vec());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let g = |c: &[f64]| value_at(&sampling::normalize(dom, c));
    let (v, c) = sampling::sphere_max(dom.dim(), &g, cfg, &mut rng);
    (v, sampling::normalize(dom, &c))
}

/// Minimum of the pencil `λ ↦ ‖A + λT‖`.
#[derive(Debug, Clone, PartialEq)]
pub struct PencilMin<S> {
    /// Minimizer of smallest absolute value.
    pub lambda_star: S,
    pub min_value: S,
    pub exact: bool,
}

/// Floating-point operator norm used inside pencils: fixed samples keep the
/// function convex in `λ`.
struct FloatNorm {
    points: Option<Vec<Vec<f64>>>,
}

impl FloatNorm {
    fn new(f: &LinearMap<f64>, cfg: &SampleConfig) -> Self {
        if euclidean_pair(f) {
            return FloatNorm { points: None };
        }
        let pts = match f.domain.polytope() {
            Some(p) => p.vertices().to_vec(),
            None => domain_samples(f.domain.as_ref(), cfg),
        };
        FloatNorm { points: Some(pts) }
    }

    fn eval(&self, f: &LinearMap<f64>, m: &[Vec<f64>]) -> f64 {
        match &self.points {
            None => spectral(m, f.domain.dim()).0,
            Some(pts) => pts
                .iter()
                .map(|x| {
                    let y: Vec<f64> = m.iter().map(|r| linalg::dot(r, x)).collect();
                    f.codomain.norm_f64(&y)
                })
                .fold(0.0, f64::max),
        }
    }
}

pub fn pencil_min<S: Scalar>(
    a: &LinearMap<S>,
    t: &LinearMap<S>,
    cfg: &SampleConfig,
) -> Result<PencilMin<S>> {
    check_same_spaces(a, t)?;
    if t.is_zero() {
        return Err(Error::ZeroVector("T".into()));
    }
    if let (Some(dp), Some(cp)) = (a.domain.polytope(), a.codomain.polytope()) {
        let mut lines = Vec::new();
        for v in dp.vertices() {
            let (av, tv) = (a.apply(v), t.apply(v));
            for g in cp.facets() {
                lines.push((
                    linalg::dot(&g.functional, &av),
                    linalg::dot(&g.functional, &tv),
                ));
            }
        }
        let m = envelope::minimize(&lines).expect("operator pencils are coercive");
        return Ok(PencilMin {
            lambda_star: m.lambda,
            min_value: m.value,
            exact: S::EXACT,
        });
    }
    let (af, tf) = (a.to_float(), t.to_float());
    let norm = FloatNorm::new(&af, cfg);
    let na = norm.eval(&af, &af.matrix);
    let nt = norm.eval(&tf, &tf.matrix);
    let r = 2.0 * na.max(1e-300) / nt + 1.0;
    let f = |l: f64| {
        let m: Vec<Vec<f64>> = af
            .matrix
            .iter()
            .zip(&tf.matrix)
            .map(|(x, y)| linalg::axpy(x, &l, y))
            .collect();
        norm.eval(&af, &m)
    };
    let m = search::convex_min_toward_zero(f, -r, r, 1e-12);
    Ok(PencilMin {
        lambda_star: S::from_f64(m.x),
        min_value: S::from_f64(m.value),
        exact: false,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct OpVerdict<S> {
    pub holds: bool,
    pub norm_a: S,
    pub pencil: PencilMin<S>,
}

/// `A ⊥_B T`: `‖A + λT‖ >= ‖A‖` for every `λ`.
pub fn op_is_bj_orthogonal<S: Scalar>(
    a: &LinearMap<S>,
    t: &LinearMap<S>,
    cfg: &SampleConfig,
) -> Result<OpVerdict<S>> {
    let pencil = pencil_min(a, t, cfg)?;
    // Evaluate ‖A‖ on the same path as the pencil so the comparison is consistent.
    let norm_a = if pencil.exact || a.domain.polytope().is_some() {
        operator_norm(a, cfg)?.value
    } else {
        let af = a.to_float();
        S::from_f64(FloatNorm::new(&af, cfg).eval(&af, &af.matrix))
    };
    let tol = a.codomain.tolerance() * norm_a.to_f64().abs().max(1.0);
    let holds = (pencil.min_value.clone() - norm_a.clone()).sign_tol(tol) != std::cmp::Ordering::Less;
    Ok(OpVerdict {
        holds,
        norm_a,
        pencil,
    })
}

fn independent<S: Scalar>(a: &LinearMap<S>, t: &LinearMap<S>) -> bool {
    let flat = |m: &LinearMap<S>| -> Vec<S> { m.matrix.iter().flatten().cloned().collect() };
    linalg::rank(&[flat(a), flat(t)], a.domain.tolerance()) == 2
}

/// `B = A + λ*T` with `B ⊥_B T`, re-verified before it is returned.
pub fn make_orthogonal_pair<S: Scalar>(
    a: &LinearMap<S>,
    t: &LinearMap<S>,
    cfg: &SampleConfig,
) -> Result<(LinearMap<S>, S)> {
    check_same_spaces(a, t)?;
    if !independent(a, t) {
        return Err(Error::Dependent);
    }
    let m = pencil_min(a, t, cfg)?;
    let b = a.plus_scaled(&m.lambda_star, t)?;
    if !op_is_bj_orthogonal(&b, t, cfg)?.holds {
        return Err(Error::Verification(format!(
            "A + {}·T is not orthogonal to T",
            m.lambda_star.to_report()
        )));
    }
    Ok((b, m.lambda_star))
}

/// Estimate of the ε in `T ⊥_D^ε A` from `√(1-ε²) = sup_{x∈𝒜} inf_λ ‖Tx + λAx‖`,
/// where `𝒜 = {x ∈ S_X : Tx ≠ λAx for every λ}` and both maps are normalized.
#[derive(Debug, Clone, PartialEq)]
pub struct SupInf {
    pub epsilon: f64,
    /// The sampled supremum; a lower bound, so `epsilon` is an upper bound.
    pub sup_inf: f64,
    /// The maximizing `x`.
    pub witness: Vec<f64>,
    /// Sampled points that fell in `𝒜`.
    pub in_a: usize,
    pub a_injective: bool,
    pub t_injective: bool,
    pub resolution: Resolution,
}

/// `inf_λ ‖Tx + λAx‖` when `x ∈ 𝒜`, else `None`.
fn inf_at(t: &LinearMap<f64>, a: &LinearMap<f64>, x: &[f64], tol: f64) -> Option<f64> {
    let tx = t.apply(x);
    let ax = a.apply(x);
    let cod = t.codomain.as_ref();
    let nt = cod.norm_f64(&tx);
    if nt <= tol {
        return None;
    }
    let na = cod.norm_f64(&ax);
    if na <= tol {
        return Some(nt);
    }
    // Tx ∥ Ax when the Euclidean residual of Tx off span{Ax} vanishes.
    let k = linalg::dot(&tx, &ax) / linalg::dot(&ax, &ax);
    let res = linalg::axpy(&tx, &-k, &ax);
    if linalg::dot(&res, &res).sqrt() <= tol * linalg::dot(&tx, &tx).sqrt().max(1.0) {
        return None;
    }
    let m = match cod.polytope() {
        Some(p) => {
            let lines: Vec<(f64, f64)> = p
                .facets_f64()
                .iter()
                .map(|g| (linalg::dot(g, &tx), linalg::dot(g, &ax)))
                .collect();
            envelope::minimize(&lines)
                .expect("norm envelopes are coercive")
                .value
        }
        None => offset_min_f64(cod, &tx, &ax, 2.0 * nt / na).value,
    };
    Some(m)
}

fn normalized(m: &LinearMap<f64>, cfg: &SampleConfig) -> Result<LinearMap<f64>> {
    let n = operator_norm(m, cfg)?.value;
    if n <= m.codomain.tolerance() {
        return Err(Error::ZeroVector("operator".into()));
    }
    Ok(m.scaled(&(1.0 / n)))
}

pub fn sup_inf_epsilon<S: Scalar>(
    t: &LinearMap<S>,
    a: &LinearMap<S>,
    cfg: &SampleConfig,
) -> Result<SupInf> {
    check_same_spaces(t, a)?;
    let tf = normalized(&t.to_float(), cfg)?;
    let af = normalized(&a.to_float(), cfg)?;
    let dom = tf.domain.clone();
    let tol = 1e-9;
    let mut pts: Vec<Vec<f64>> = dom
        .polytope()
        .map(|p| p.vertices().to_vec())
        .unwrap_or_default();
    pts.extend(domain_samples(dom.as_ref(), cfg));
    let vals: Vec<Option<(f64, Vec<f64>)>> = {
        use rayon::prelude::*;
        pts.par_iter()
            .map(|x| inf_at(&tf, &af, x, tol).map(|v| (v, x.clone())))
            .collect()
    };
    let in_a = vals.iter().filter(|v| v.is_some()).count();
    let mut best = sampling::argmax(vals).ok_or_else(|| {
        Error::Precondition("the set of x with Tx, Ax independent is empty at this resolution".into())
    })?;
    if dom.dim() == 2 {
        let g = |th: f64| inf_at(&tf, &af, &sphere_point_2d(dom.as_ref(), th), tol);
        let th0 = best.1[1].atan2(best.1[0]);
        let step = std::f64::consts::TAU / cfg.samples.max(1) as f64;
        if let Some((th, v)) =
            sampling::refine_max(&g, th0 - step, th0 + step, 2 * cfg.factor, cfg.refine, cfg.factor)
        {
            if v > best.0 {
                best = (v, sphere_point_2d(dom.as_ref(), th).to_vec());
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        let g = |c: &[f64]| {
            inf_at(&tf, &af, &sampling::normalize(dom.as_ref(), c), tol).unwrap_or(f64::NEG_INFINITY)
        };
        let r = linalg::dot(&best.1, &best.1).sqrt();
        let start = (best.0, best.1.iter().map(|c| c / r).collect());
        let (v, c) = sampling::refine_around(start, &g, cfg, &mut rng);
        if v > best.0 {
            best = (v, sampling::normalize(dom.as_ref(), &c));
        }
    }
    let s = best.0.min(1.0);
    let d = dom.dim();
    Ok(SupInf {
        epsilon: (1.0 - s * s).max(0.0).sqrt(),
        sup_inf: s,
        witness: best.1,
        in_a,
        a_injective: af.rank() == d,
        t_injective: tf.rank() == d,
        resolution: cfg.into(),
    })
}

/// Outcome of the diagnostic for conditions (a) and (b) of the operator
/// criterion for `T ⊥_D^ε A`.
#[derive(Debug, Clone, PartialEq)]
pub struct DragomirReport {
    /// `x ∈ M_T` with `Ax ∈ (Tx)⁺`.
    pub a_point: Option<Vec<f64>>,
    /// `y ∈ M_T` with `Ay ∈ (Ty)⁻`.
    pub b_point: Option<Vec<f64>>,
    /// Smallest `‖T + λA‖ - √(1-ε²)` over the grid of each interval.
    pub a_margin: f64,
    pub b_margin: f64,
    pub condition_a: bool,
    pub condition_b: bool,
    pub grid: usize,
}

impl DragomirReport {
    pub fn certified(&self) -> bool {
        self.condition_a || self.condition_b
    }
}

pub const DRAGOMIR_GRID: usize = 256;

/// Candidate points of `M_T`: maximizing vertices, centroids of faces spanned
/// by them, or the sampled maximizers.
fn m_t_points(t: &LinearMap<f64>, cfg: &SampleConfig) -> Result<Vec<Vec<f64>>> {
    let n = operator_norm(t, cfg)?;
    let mut pts = n.m_t.clone();
    if let Some(p) = t.domain.polytope() {
        for face in p.faces() {
            if face.dim >= 1
                && face
                    .vertices
                    .iter()
                    .all(|&i| n.m_t.contains(&p.vertices()[i]))
            {
                pts.push(p.face_centroid(face));
            }
        }
    }
    Ok(pts)
}

pub fn verify_dragomir_conditions<S: Scalar>(
    t: &LinearMap<S>,
    a: &LinearMap<S>,
    eps: f64,
    cfg: &SampleConfig,
) -> Result<DragomirReport> {
    check_same_spaces(t, a)?;
    if !(0.0..=1.0).contains(&eps) {
        return Err(Error::Precondition(format!("eps must lie in [0, 1], got {eps}")));
    }
    let tf = normalized(&t.to_float(), cfg)?;
    let af = normalized(&a.to_float(), cfg)?;
    let c = (1.0 - eps * eps).sqrt();
    let cod = tf.codomain.as_ref();
    let mut a_point = None;
    let mut b_point = None;
    for x in m_t_points(&tf, cfg)? {
        let (tx, ax) = (tf.apply(&x), af.apply(&x));
        if a_point.is_none() && in_positive_part(cod, &tx, &ax)? {
            a_point = Some(x.clone());
        }
        if b_point.is_none() && in_negative_part(cod, &tx, &ax)? {
            b_point = Some(x);
        }
    }
    let norm = FloatNorm::new(&tf, cfg);
    let margin = |centre: f64| -> f64 {
        (0..DRAGOMIR_GRID)
            .map(|i| {
                let l = centre - c + 2.0 * c * (i as f64 + 0.5) / DRAGOMIR_GRID as f64;
                let m: Vec<Vec<f64>> = tf
                    .matrix
                    .iter()
                    .zip(&af.matrix)
                    .map(|(x, y)| linalg::axpy(x, &l, y))
                    .collect();
                norm.eval(&tf, &m) - c
            })
            .fold(f64::INFINITY, f64::min)
    };
    let a_margin = margin(-1.0);
    let b_margin = margin(1.0);
    let tol = 1e-9;
    Ok(DragomirReport {
        condition_a: a_point.is_some() && a_margin >= -tol,
        condition_b: b_point.is_some() && b_margin >= -tol,
        a_point,
        b_point,
        a_margin,
        b_margin,
        grid: DRAGOMIR_GRID,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces::{catalog, Lp};

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    fn diag(a: Rational, b: Rational) -> Vec<Vec<Rational>> {
        vec![vec![a, q(0, 1)], vec![q(0, 1), b]]
    }

    fn linf2_map(m: Vec<Vec<Rational>>) -> LinearMap<Rational> {
        let s: Arc<dyn NormedSpace<Rational>> = Arc::new(catalog::linf(2).unwrap());
        LinearMap::new(m, s.clone(), s).unwrap()
    }

    fn l2_map(m: Vec<Vec<f64>>) -> LinearMap<f64> {
        let s: Arc<dyn NormedSpace<f64>> = Arc::new(Lp::euclidean(2).unwrap());
        LinearMap::new(m, s.clone(), s).unwrap()
    }

    fn cfg() -> SampleConfig {
        SampleConfig::default()
    }

    #[test]
    fn norms_on_the_square() {
        let t = linf2_map(diag(q(1, 1), q(1, 2)));
        let n = operator_norm(&t, &cfg()).unwrap();
        assert_eq!(n.value, q(1, 1));
        assert_eq!(n.m_t.len(), 4);
        assert!(n.exact);
        let t = linf2_map(diag(q(2, 1), q(1, 1)));
        assert_eq!(operator_norm(&t, &cfg()).unwrap().value, q(2, 1));
    }

    #[test]
    fn spectral_norm() {
        let t = l2_map(vec![vec![3.0, 0.0], vec![4.0, 0.0]]);
        let n = operator_norm(&t, &cfg()).unwrap();
        assert_eq!(n.method, NormMethod::Spectral);
        assert!((n.value - 5.0).abs() < 1e-12);
    }

    #[test]
    fn orthogonality_of_diagonal_maps() {
        let a = linf2_map(diag(q(0, 1), q(1, 1)));
        let t = linf2_map(diag(q(1, 1), q(0, 1)));
        assert!(op_is_bj_orthogonal(&a, &t, &cfg()).unwrap().holds);
        assert!(!op_is_bj_orthogonal(&a, &a, &cfg()).unwrap().holds);
        let a = l2_map(vec![vec![1.0, 0.0], vec![0.0, 0.0]]);
        let t = l2_map(vec![vec![0.0, 0.0], vec![0.0, 1.0]]);
        assert!(op_is_bj_orthogonal(&a, &t, &cfg()).unwrap().holds);
    }

    #[test]
    fn pair_construction_keeps_orthogonal_seed() {
        let a = l2_map(vec![vec![1.0, 0.0], vec![0.0, 0.0]]);
        let t = l2_map(vec![vec![0.0, 0.0], vec![0.0, 1.0]]);
        let (b, l) = make_orthogonal_pair(&a, &t, &cfg()).unwrap();
        assert_eq!(l, 0.0);
        assert_eq!(b.matrix(), a.matrix());
        assert!(matches!(
            make_orthogonal_pair(&a, &a.scaled(&2.0), &cfg()),
            Err(Error::Dependent)
        ));
    }

    #[test]
    fn sup_inf_on_the_square() {
        let t = linf2_map(diag(q(1, 1), q(0, 1)));
        let a = linf2_map(diag(q(0, 1), q(1, 1)));
        let r = sup_inf_epsilon(&t, &a, &cfg()).unwrap();
        assert!((r.sup_inf - 1.0).abs() < 1e-12);
        assert!(r.epsilon < 1e-6);
        let d = verify_dragomir_conditions(&t, &a, r.epsilon, &cfg()).unwrap();
        assert!(d.certified());
    }

    #[test]
    fn dragomir_negative_control() {
        // T = A is as far from orthogonal as possible.
        let t = linf2_map(diag(q(1, 1), q(1, 2)));
        let d = verify_dragomir_conditions(&t, &t, 0.0, &cfg()).unwrap();
        assert!(!d.certified());
    }
}
