//! Symmetry properties of Birkhoff-James orthogonality.
//!
//! For polyhedral spaces every decision is made face by face: `J` is constant
//! on the relative interior of each face, so the questions reduce to small
//! linear programs over face vertices. Analytic norms are sampled.

use std::cmp::Ordering;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{self, dot};
use crate::lp::{self, Constraint, Relation};
use crate::orthogonality::{eps_b_star, is_bj_orthogonal};
use crate::sampling::{self, SampleConfig};
use crate::scalar::{eq_tol, Scalar};
use crate::spaces::{check_dim, Face, NormedSpace, PointClass, Polytope};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// Exact decision over the face lattice.
    Exact,
    /// Every point is smooth, so the property holds by definition.
    Smooth,
    /// Grid sampling with refinement; the value is a lower bound on a supremum.
    Sampled,
    /// Sound search for counterexamples; "holds" means no witness was found.
    WitnessSearch,
}

/// Sampling resolution recorded with estimated constants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Resolution {
    pub samples: usize,
    pub refine_rounds: usize,
    pub refine_factor: usize,
}

impl From<&SampleConfig> for Resolution {
    fn from(c: &SampleConfig) -> Self {
        Resolution {
            samples: c.samples,
            refine_rounds: c.refine,
            refine_factor: c.factor,
        }
    }
}

/// A pair `(x, y)` with `x ⊥ y` certifying a failure.
#[derive(Debug, Clone, PartialEq)]
pub struct Witness<S> {
    pub x: Vec<S>,
    pub y: Vec<S>,
    /// `f ∈ J(x)` with `f(y) = 0`.
    pub functional: Vec<S>,
    pub y_class: Option<PointClass>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PropertyVerdict<S> {
    pub holds: bool,
    pub witness: Option<Witness<S>>,
    pub method: Method,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConstantKind {
    C,
    D,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
    Global,
}

/// Supremum of an ε* over orthogonal pairs. `value < 1` means the
/// corresponding approximate symmetry holds (at the recorded resolution).
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetryConstant<S> {
    pub value: S,
    pub kind: ConstantKind,
    pub side: Side,
    pub method: Method,
    pub resolution: Option<Resolution>,
    /// The pair `(x, y)` at which the value is attained or approached.
    pub witness: Option<(Vec<S>, Vec<S>)>,
    /// Decision bit for global constants.
    pub symmetric: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RConstant<S> {
    pub value: S,
    pub witness: Option<(Vec<S>, Vec<S>)>,
    pub method: Method,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RxReport<S> {
    pub r: RConstant<S>,
    pub property_p: PropertyVerdict<S>,
    /// `R(X) <= 1` implies property (P); false would be a bug.
    pub implication_holds: bool,
    /// `R(X) > 1` while property (P) holds, so the converse fails here.
    pub converse_counterexample: bool,
}

pub(crate) fn check_unit<S: Scalar, N: NormedSpace<S> + ?Sized>(
    space: &N,
    field: &str,
    v: &[S],
) -> Result<()> {
    check_dim(space.dim(), field, v)?;
    let n = space.norm(v);
    if !eq_tol(&n, &S::one(), space.tolerance()) {
        return Err(Error::NotUnit {
            field: field.into(),
            norm: n.to_report(),
        });
    }
    Ok(())
}

/// `y ∈ 𝒜(x)`: every `f ∈ J(y)` lies in `J(x)`, or every `f ∈ J(y)` lies in `-J(x)`.
pub fn in_script_a<S: Scalar, N: NormedSpace<S> + ?Sized>(
    space: &N,
    x: &[S],
    y: &[S],
) -> Result<bool> {
    check_unit(space, "x", x)?;
    check_unit(space, "y", y)?;
    let tol = space.tolerance();
    let vals: Vec<S> = space
        .support_generators(y)
        .iter()
        .map(|g| dot(g, x))
        .collect();
    let one = S::one();
    Ok(vals.iter().all(|v| eq_tol(v, &one, tol)) || vals.iter().all(|v| eq_tol(v, &-one.clone(), tol)))
}

/// A point `y` in the relative interior of `face` with `min g(y) <= 0 <= max g(y)`
/// over `gens`, if one exists.
pub fn relint_orthogonal_point<S: Scalar>(
    p: &Polytope<S>,
    face: &Face,
    gens: &[Vec<S>],
) -> Option<Vec<S>> {
    let tol = p.tolerance();
    let pts = p.face_points(face);
    let k = pts.len();
    let gv: Vec<Vec<S>> = gens
        .iter()
        .map(|g| pts.iter().map(|v| dot(g, v)).collect())
        .collect();
    if k == 1 {
        let straddle = gv.iter().any(|v| v[0].sign_tol(tol) != Ordering::Less)
            && gv.iter().any(|v| v[0].sign_tol(tol) != Ordering::Greater);
        return straddle.then(|| pts[0].to_vec());
    }
    // Variables: ν_1..ν_k >= 0 and s >= 0, with weights ν_v + s.
    let mut cost = vec![S::zero(); k + 1];
    cost[k] = S::one();
    for i in 0..gens.len() {
        for j in 0..gens.len() {
            let row = |vals: &[S]| -> Vec<S> {
                let mut r: Vec<S> = vals.to_vec();
                r.push(vals.iter().fold(S::zero(), |a, b| a + b.clone()));
                r
            };
            let mut sum = vec![S::one(); k];
            sum.push(S::from_usize(k));
            let cons = vec![
                Constraint::new(sum, Relation::Eq, S::one()),
                Constraint::new(row(&gv[i]), Relation::Ge, S::zero()),
                Constraint::new(row(&gv[j]), Relation::Le, S::zero()),
            ];
            if let Some((sol, s)) = lp::maximize(&cost, &cons, tol * 1e-3).optimal() {
                if s.sign_tol(tol) == Ordering::Greater {
                    let mut y = vec![S::zero(); p.dim()];
                    for (v, nu) in pts.iter().zip(&sol[..k]) {
                        let w = nu.clone() + s.clone();
                        y = linalg::axpy(&y, &w, v);
                    }
                    return Some(y);
                }
            }
        }
    }
    None
}

/// `max over y ∈ conv(face) of min_i sign·g_i(y)`, with the maximizer.
fn max_min_over_face<S: Scalar>(
    p: &Polytope<S>,
    face: &Face,
    gens: &[Vec<S>],
    negate: bool,
) -> (S, Vec<S>) {
    let pts = p.face_points(face);
    let k = pts.len();
    // Variables: μ_1..μ_k >= 0 and t' = t + 1 >= 0 (values lie in [-1, 1]).
    let mut cost = vec![S::zero(); k + 1];
    cost[k] = S::one();
    let mut sum = vec![S::one(); k];
    sum.push(S::zero());
    let mut cons = vec![Constraint::new(sum, Relation::Eq, S::one())];
    for g in gens {
        let mut row: Vec<S> = pts
            .iter()
            .map(|v| {
                let d = dot(g, v);
                if negate {
                    -d
                } else {
                    d
                }
            })
            .collect();
        row.push(-S::one());
        cons.push(Constraint::new(row, Relation::Ge, -S::one()));
    }
    let (sol, val) = lp::maximize(&cost, &cons, p.tolerance() * 1e-3)
        .optimal()
        .expect("face LP is feasible and bounded");
    let mut y = vec![S::zero(); p.dim()];
    for (v, mu) in pts.iter().zip(&sol[..k]) {
        y = linalg::axpy(&y, mu, v);
    }
    (val - S::one(), y)
}

/// `min over f ∈ conv(gens) of |f(x)|` for a unit `x`.
fn eps_b_over<S: Scalar>(gens: &[Vec<S>], x: &[S], tol: f64) -> S {
    let vals: Vec<S> = gens.iter().map(|g| dot(g, x)).collect();
    let lo = vals.iter().cloned().fold(vals[0].clone(), crate::scalar::min_of);
    let hi = vals.iter().cloned().fold(vals[0].clone(), crate::scalar::max_of);
    if lo.sign_tol(tol) != Ordering::Greater && hi.sign_tol(tol) != Ordering::Less {
        S::zero()
    } else if lo.is_positive() {
        lo
    } else {
        -hi
    }
}

fn witness_for<S: Scalar>(p: &Polytope<S>, x: &[S], y: Vec<S>) -> Result<Witness<S>> {
    let v = is_bj_orthogonal(p, x, &y)?;
    if !v.holds {
        return Err(Error::Verification(
            "candidate witness is not orthogonal".into(),
        ));
    }
    Ok(Witness {
        x: x.to_vec(),
        y_class: p.classify(&y).ok(),
        functional: v.certificate.expect("orthogonal verdicts carry a functional"),
        y,
    })
}

/// Local property (P) at a unit `x`: no `y ⊥ x` lies in `𝒜(x)`.
pub fn local_property_p<S: Scalar, N: NormedSpace<S> + ?Sized>(
    space: &N,
    x: &[S],
    cfg: &SampleConfig,
) -> Result<PropertyVerdict<S>> {
    check_unit(space, "x", x)?;
    if let Some(p) = space.polytope() {
        return local_p_polytope(p, x);
    }
    let gens = space.support_generators(x);
    if gens.len() == 1 {
        return Ok(PropertyVerdict {
            holds: true,
            witness: None,
            method: Method::Smooth,
        });
    }
    let left = left_symmetry_constant(space, x, cfg)?;
    let fails = left.value.to_f64() >= 1.0 - 1e3 * space.tolerance();
    let witness = match (&left.witness, fails) {
        (Some((wx, wy)), true) => {
            let v = is_bj_orthogonal(space, wx, wy)?;
            Some(Witness {
                x: wx.clone(),
                y: wy.clone(),
                functional: v.certificate.unwrap_or_else(|| gens[0].clone()),
                y_class: space.classify_point(wy).ok(),
            })
        }
        _ => None,
    };
    Ok(PropertyVerdict {
        holds: !fails,
        witness,
        method: Method::Sampled,
    })
}

fn local_p_polytope<S: Scalar>(p: &Polytope<S>, x: &[S]) -> Result<PropertyVerdict<S>> {
    let own = p
        .face_of(x)
        .ok_or_else(|| Error::Verification("unit vector lies in no face".into()))?;
    let own_vertices = &p.faces()[own].vertices;
    let gens = p.support_generators(x);
    // relint G ⊆ 𝒜(x) exactly when G contains x or -x; by symmetry of x^⊥
    // the faces containing x suffice.
    for face in p.faces() {
        if !own_vertices.iter().all(|v| face.vertices.contains(v)) {
            continue;
        }
        if let Some(y) = relint_orthogonal_point(p, face, &gens) {
            let w = witness_for(p, x, y)?;
            if !in_script_a(p, x, &w.y)? {
                return Err(Error::Verification("witness is not in A(x)".into()));
            }
            return Ok(PropertyVerdict {
                holds: false,
                witness: Some(w),
                method: Method::Exact,
            });
        }
    }
    Ok(PropertyVerdict {
        holds: true,
        witness: None,
        method: Method::Exact,
    })
}

/// Property (P): local (P) at every unit vector. For polytopes it suffices
/// to check the extreme points.
pub fn property_p<S: Scalar, N: NormedSpace<S> + ?Sized>(
    space: &N,
    cfg: &SampleConfig,
) -> Result<PropertyVerdict<S>> {
    if let Some(p) = space.polytope() {
        for v in p.vertices() {
            let r = local_p_polytope(p, v)?;
            if !r.holds {
                return Ok(r);
            }
        }
        return Ok(PropertyVerdict {
            holds: true,
            witness: None,
            method: Method::Exact,
        });
    }
    if space.is_smooth() {
        return Ok(PropertyVerdict {
            holds: true,
            witness: None,
            method: Method::Smooth,
        });
    }
    if space.dim() != 2 {
        return Err(Error::Unsupported(
            "sampled property (P) is available for planar norms only".into(),
        ));
    }
    let fs = space.float_view();
    for k in 0..cfg.samples {
        let th = std::f64::consts::TAU * k as f64 / cfg.samples as f64;
        let xf = crate::spaces::sphere_point_2d(fs.as_ref(), th);
        let x: Vec<S> = linalg::from_f64(&xf);
        if space.support_generators(&x).len() < 2 {
            continue;
        }
        let r = local_property_p(space, &x, cfg)?;
        if !r.holds {
            return Ok(r);
        }
    }
    Ok(PropertyVerdict {
        holds: true,
        witness: None,
        method: Method::Sampled,
    })
}

/// Property (P1): whenever the segment `[x, y]` lies in the unit sphere and
/// `x ⊥ y`, both endpoints are extreme points.
///
/// Exact in the plane. In dimension 3 this is a witness search over face
/// vertices and centroids; a `holds` result there means no witness was found.
pub fn property_p1<S: Scalar>(p: &Polytope<S>) -> Result<PropertyVerdict<S>> {
    match p.dim() {
        2 => p1_planar(p),
        3 => p1_search(p),
        d => Err(Error::UnsupportedDimension {
            dim: d,
            what: "property (P1)".into(),
        }),
    }
}

fn p1_planar<S: Scalar>(p: &Polytope<S>) -> Result<PropertyVerdict<S>> {
    let n = p.vertices().len();
    let tol = p.tolerance();
    for k in 0..n {
        let u = &p.vertices()[k];
        let inc = p.supporting_facets(u);
        // Outgoing edge (k, k+1) first, then the incoming edge (k-1, k).
        for w_idx in [(k + 1) % n, (k + n - 1) % n] {
            let w = &p.vertices()[w_idx];
            // Along y(t) = (1-t)u + t w the facet through both stays at 1; any
            // other g ∈ J(u) falls linearly to g(w) and vanishes at 1/(1-g(w)).
            let mut best: Option<S> = None;
            for &fi in &inc {
                let gw = dot(&p.facets()[fi].functional, w);
                if gw.sign_tol(tol) == Ordering::Less {
                    let t = S::one() / (S::one() - gw);
                    if best.as_ref().is_none_or(|b| t < *b) {
                        best = Some(t);
                    }
                }
            }
            if let Some(t) = best {
                let y = linalg::axpy(&linalg::scale(u, &(S::one() - t.clone())), &t, w);
                let wit = witness_for(p, u, y)?;
                verify_p1_witness(p, &wit)?;
                return Ok(PropertyVerdict {
                    holds: false,
                    witness: Some(wit),
                    method: Method::Exact,
                });
            }
        }
    }
    Ok(PropertyVerdict {
        holds: true,
        witness: None,
        method: Method::Exact,
    })
}

fn p1_search<S: Scalar>(p: &Polytope<S>) -> Result<PropertyVerdict<S>> {
    let faces = p.faces();
    let mut facet_order: Vec<usize> = (0..p.facets().len()).collect();
    // Small facets first: their LPs are cheapest.
    facet_order.sort_by_key(|&i| p.facets()[i].vertices.len());
    for fi in facet_order {
        let fv = &p.facets()[fi].vertices;
        let sub: Vec<&Face> = faces
            .iter()
            .filter(|f| f.vertices.iter().all(|v| fv.contains(v)))
            .collect();
        for gx in &sub {
            let x = if gx.dim == 0 {
                p.vertices()[gx.vertices[0]].clone()
            } else {
                p.face_centroid(gx)
            };
            let gens = p.face_functionals(gx);
            for gy in &sub {
                if gx.dim == 0 && gy.dim == 0 {
                    continue;
                }
                if let Some(y) = relint_orthogonal_point(p, gy, &gens) {
                    // (-x, -y) is a witness too; report the one with x pointing up.
                    let up = x.iter().rev().find(|c| !c.is_zero()).is_none_or(|c| c.is_positive());
                    let (x, y) = if up { (x.clone(), y) } else { (linalg::neg(&x), linalg::neg(&y)) };
                    let wit = witness_for(p, &x, y)?;
                    verify_p1_witness(p, &wit)?;
                    return Ok(PropertyVerdict {
                        holds: false,
                        witness: Some(wit),
                        method: Method::WitnessSearch,
                    });
                }
            }
        }
    }
    Ok(PropertyVerdict {
        holds: true,
        witness: None,
        method: Method::WitnessSearch,
    })
}

/// Independent pointwise checks of a (P1) counterexample.
pub fn verify_p1_witness<S: Scalar>(p: &Polytope<S>, w: &Witness<S>) -> Result<()> {
    let tol = p.tolerance();
    let one = S::one();
    let half = S::from_ratio(1, 2);
    let mid = linalg::scale(&linalg::add(&w.x, &w.y), &half);
    let on_sphere = [&w.x, &w.y, &mid]
        .iter()
        .all(|v| eq_tol(&p.norm(v), &one, tol));
    let orth = is_bj_orthogonal(p, &w.x, &w.y)?.holds;
    let non_extreme = p.vertex_index(&w.x).is_none() || p.vertex_index(&w.y).is_none();
    if on_sphere && orth && non_extreme {
        Ok(())
    } else {
        Err(Error::Verification(format!(
            "(P1) witness failed re-check: on_sphere={on_sphere}, orthogonal={orth}, non_extreme={non_extreme}"
        )))
    }
}

/// `R(X)`: the longest segment contained in the unit sphere.
pub fn r_constant<S: Scalar, N: NormedSpace<S> + ?Sized>(space: &N) -> Result<RConstant<S>> {
    let Some(p) = space.polytope() else {
        if space.is_strictly_convex() {
            return Ok(RConstant {
                value: S::zero(),
                witness: None,
                method: Method::Smooth,
            });
        }
        return Err(Error::Unsupported(
            "R(X) is computed for polyhedral or strictly convex spaces".into(),
        ));
    };
    let mut best: Option<(S, usize, usize)> = None;
    for f in p.facets() {
        for (a, &i) in f.vertices.iter().enumerate() {
            for &j in &f.vertices[a + 1..] {
                let d = p.norm(&linalg::sub(&p.vertices()[i], &p.vertices()[j]));
                if best.as_ref().is_none_or(|b| d > b.0) {
                    best = Some((d, i, j));
                }
            }
        }
    }
    let (value, i, j) = best.expect("facets have at least two vertices");
    Ok(RConstant {
        value,
        witness: Some((p.vertices()[i].clone(), p.vertices()[j].clone())),
        method: Method::Exact,
    })
}

pub fn check_rx_implication<S: Scalar, N: NormedSpace<S> + ?Sized>(
    space: &N,
    cfg: &SampleConfig,
) -> Result<RxReport<S>> {
    if space.polytope().is_none() {
        return Err(Error::Unsupported(
            "the R(X) implication check needs a polyhedral space".into(),
        ));
    }
    let r = r_constant(space)?;
    let pp = property_p(space, cfg)?;
    let small = (r.value.clone() - S::one()).sign_tol(space.tolerance()) != Ordering::Greater;
    Ok(RxReport {
        implication_holds: !small || pp.holds,
        converse_counterexample: !small && pp.holds,
        r,
        property_p: pp,
    })
}

fn constant<S: Scalar>(
    value: S,
    side: Side,
    method: Method,
    resolution: Option<Resolution>,
    witness: Option<(Vec<S>, Vec<S>)>,
    tol: f64,
) -> SymmetryConstant<S> {
    let symmetric = (value.clone() - S::one()).sign_tol(tol) == Ordering::Less;
    SymmetryConstant {
        value,
        kind: ConstantKind::C,
        side,
        method,
        resolution,
        witness,
        symmetric,
    }
}

/// `sup { ε*_B(y, x) : y ∈ S_X, x ⊥ y }` for a unit `x`.
pub fn left_symmetry_constant<S: Scalar, N: NormedSpace<S> + ?Sized>(
    space: &N,
    x: &[S],
    cfg: &SampleConfig,
) -> Result<SymmetryConstant<S>> {
    check_unit(space, "x", x)?;
    if let Some(p) = space.polytope() {
        let gens = p.support_generators(x);
        let mut best: Option<(S, Vec<S>)> = None;
        for face in p.faces() {
            let Some(y) = relint_orthogonal_point(p, face, &gens) else {
                continue;
            };
            let v = eps_b_over(&p.face_functionals(face), x, p.tolerance());
            if best.as_ref().is_none_or(|b| v > b.0) {
                best = Some((v, y));
            }
        }
        let (v, y) = best.expect("every unit vector has orthogonal directions");
        return Ok(constant(
            v,
            Side::Left,
            Method::Exact,
            None,
            Some((x.to_vec(), y)),
            p.tolerance(),
        ));
    }
    let xf = linalg::to_f64(x);
    let fs = space.float_view();
    let (v, y) = sampling::left_sup(fs.as_ref(), &xf, cfg);
    Ok(constant(
        S::from_f64(v),
        Side::Left,
        Method::Sampled,
        Some(cfg.into()),
        Some((x.to_vec(), linalg::from_f64(&y))),
        space.tolerance(),
    ))
}

/// `sup { ε*_B(x, y) : y ∈ S_X, y ⊥ x }` for a unit `x`.
pub fn right_symmetry_constant<S: Scalar, N: NormedSpace<S> + ?Sized>(
    space: &N,
    x: &[S],
    cfg: &SampleConfig,
) -> Result<SymmetryConstant<S>> {
    check_unit(space, "x", x)?;
    if let Some(p) = space.polytope() {
        let tol = p.tolerance();
        let gens = p.support_generators(x);
        let mut best: Option<(S, Vec<S>)> = None;
        for face in p.faces() {
            // y ⊥ x on relint G exactly when J(G) straddles x.
            let vals: Vec<S> = p
                .face_functionals(face)
                .iter()
                .map(|g| dot(g, x))
                .collect();
            let straddle = vals.iter().any(|v| v.sign_tol(tol) != Ordering::Greater)
                && vals.iter().any(|v| v.sign_tol(tol) != Ordering::Less);
            if !straddle {
                continue;
            }
            let (a, ya) = max_min_over_face(p, face, &gens, false);
            let (b, yb) = max_min_over_face(p, face, &gens, true);
            let (v, y) = if b > a { (b, yb) } else { (a, ya) };
            let (v, y) = if v.is_negative() {
                (S::zero(), p.face_centroid(face))
            } else {
                (v, y)
            };
            if best.as_ref().is_none_or(|bst| v > bst.0) {
                best = Some((v, y));
            }
        }
        let (v, y) = best.expect("every unit vector is orthogonal to some direction");
        return Ok(constant(
            v,
            Side::Right,
            Method::Exact,
            None,
            Some((x.to_vec(), y)),
            tol,
        ));
    }
    let xf = linalg::to_f64(x);
    let fs = space.float_view();
    let (v, y) = sampling::right_sup(fs.as_ref(), &xf, cfg)?;
    Ok(constant(
        S::from_f64(v),
        Side::Right,
        Method::Sampled,
        Some(cfg.into()),
        Some((x.to_vec(), linalg::from_f64(&y))),
        space.tolerance(),
    ))
}

/// `sup { ε*_B(y, x) : x, y ∈ S_X, x ⊥ y }`.
///
/// For polytopes the decision bit is property (P), which is equivalent to the
/// global constant being below 1; the value itself comes from a face-pair scan.
pub fn global_c_symmetry<S: Scalar, N: NormedSpace<S> + ?Sized>(
    space: &N,
    cfg: &SampleConfig,
) -> Result<SymmetryConstant<S>> {
    if let Some(p) = space.polytope() {
        let decision = property_p(space, cfg)?;
        let (value, witness) = global_c_faces(p);
        let mut c = constant(
            value,
            Side::Global,
            Method::Exact,
            None,
            Some(witness),
            p.tolerance(),
        );
        if c.symmetric != decision.holds {
            return Err(Error::Verification(format!(
                "global constant {} disagrees with property (P) = {}",
                c.value.to_report(),
                decision.holds
            )));
        }
        c.symmetric = decision.holds;
        if let Some(w) = decision.witness {
            c.witness = Some((w.x, w.y));
        }
        return Ok(c);
    }
    if space.dim() != 2 {
        return Err(Error::Unsupported(
            "the global C constant is sampled for planar analytic norms only".into(),
        ));
    }
    let fs = space.float_view();
    let (v, x, y) = sampling::global_c_sampled(fs.as_ref(), cfg);
    let tol = 1e3 * space.tolerance();
    Ok(SymmetryConstant {
        value: S::from_f64(v),
        kind: ConstantKind::C,
        side: Side::Global,
        method: Method::Sampled,
        resolution: Some(cfg.into()),
        witness: Some((linalg::from_f64(&x), linalg::from_f64(&y))),
        symmetric: v < 1.0 - tol,
    })
}

fn global_c_faces<S: Scalar>(p: &Polytope<S>) -> (S, (Vec<S>, Vec<S>)) {
    let tol = p.tolerance();
    let mut best: Option<(S, Vec<S>, Vec<S>)> = None;
    for gx in p.faces() {
        let gens_x = p.face_functionals(gx);
        for gy in p.faces() {
            let Some(y) = relint_orthogonal_point(p, gy, &gens_x) else {
                continue;
            };
            let gens_y = p.face_functionals(gy);
            let (a, xa) = max_min_over_face(p, gx, &gens_y, false);
            let (b, xb) = max_min_over_face(p, gx, &gens_y, true);
            let (v, x) = if b > a { (b, xb) } else { (a, xa) };
            let v = if v.sign_tol(tol) == Ordering::Less {
                S::zero()
            } else {
                v
            };
            if best.as_ref().is_none_or(|bst| v > bst.0) {
                best = Some((v, x, y));
            }
        }
    }
    let (v, x, y) = best.expect("nonempty face lattice");
    (v, (x, y))
}

/// `sup { ε*_D(y, x) : x, y ∈ S_X, x ⊥ y }`, sampled.
pub fn global_d_constant<S: Scalar, N: NormedSpace<S> + ?Sized>(
    space: &N,
    cfg: &SampleConfig,
) -> Result<SymmetryConstant<f64>> {
    let fs = space.float_view();
    let (v, x, y) = sampling::global_d_sampled(fs.as_ref(), cfg)?;
    Ok(SymmetryConstant {
        value: v,
        kind: ConstantKind::D,
        side: Side::Global,
        method: Method::Sampled,
        resolution: Some(cfg.into()),
        witness: Some((x, y)),
        symmetric: v < 1.0,
    })
}

/// `ε*_B(y, x)` checked through [`eps_b_star`]; used to cross-check face constants.
pub fn pair_eps_b<S: Scalar, N: NormedSpace<S> + ?Sized>(space: &N, x: &[S], y: &[S]) -> Result<S> {
    Ok(eps_b_star(space, y, x)?.value)
}
