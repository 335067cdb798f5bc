use std::cmp::Ordering;
use std::path::Path;

use bjsym::operators::{self, AnyMap, LinearMap};
use bjsym::orthogonality::{
    eps_b_star, eps_d_star, in_negative_part, in_positive_part, is_bj_orthogonal, minimize_offset,
};
use bjsym::sampling::SampleConfig;
use bjsym::scalar::{eq_tol, parse_vector};
use bjsym::spaces::file::SpaceSpec;
use bjsym::spaces::{catalog_names, AnySpace, NormedSpace};
use bjsym::symmetry::{self, Method, PropertyVerdict, SymmetryConstant};
use bjsym::{linalg, Error, Result, Scalar};
use serde_json::{json, Value};

use crate::args::{OpCmd, OrthoCmd, PropsCmd, SymmetryCmd};
use crate::report::{self, scalar, vector, vectors, Obj};

/// Tolerance for re-checks of sampled witnesses.
const SAMPLED_RECHECK: f64 = 1e-6;

fn recheck_tol<S: Scalar, N: NormedSpace<S> + ?Sized>(space: &N, sampled: bool) -> f64 {
    if sampled {
        SAMPLED_RECHECK
    } else {
        space.tolerance()
    }
}

fn fail(what: impl Into<String>) -> Error {
    Error::Verification(what.into())
}

fn vec_arg<S: Scalar>(flag: &str, s: &str) -> Result<Vec<S>> {
    parse_vector(s).map_err(|e| match e {
        Error::Parse(m) => Error::Parse(format!("--{flag}: {m}")),
        other => other,
    })
}

pub fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Precondition(format!("cannot read {}: {e}", path.display())))
}

pub fn load_space(file: Option<&Path>, name: Option<&str>, tol: Option<f64>) -> Result<(AnySpace, String)> {
    match (file, name) {
        (Some(p), _) => {
            let spec = SpaceSpec::from_json(&read_file(p)?)?;
            Ok((spec.build_tol(tol)?, format!("file:{}", p.display())))
        }
        (None, Some(n)) => Ok((bjsym::spaces::catalog::catalog_tol(n, tol)?, format!("catalog:{n}"))),
        (None, None) => Err(Error::Precondition(
            "this command needs --space FILE or --catalog NAME".into(),
        )),
    }
}

pub fn describe(space: &AnySpace, source: &str) -> Value {
    let tol = match space {
        AnySpace::Exact(_) => 0.0,
        AnySpace::Float(s) => s.tolerance(),
    };
    json!({
        "source": source,
        "kind": space.kind(),
        "dim": space.dim(),
        "arithmetic": space.mode(),
        "tolerance": tol,
    })
}

pub fn catalog_list() -> Value {
    let entries: Vec<Value> = catalog_names()
        .into_iter()
        .map(|(n, d)| json!({ "name": n, "description": d }))
        .collect();
    json!({ "spaces": entries })
}

pub fn space_info<S: Scalar, N: NormedSpace<S> + ?Sized>(space: &N) -> Value {
    let mut o = Obj::new()
        .set("dim", space.dim())
        .set("kind", space.kind())
        .set("smooth", space.is_smooth())
        .set("strictly_convex", space.is_strictly_convex())
        .set("euclidean", space.is_euclidean());
    if let Some(p) = space.polytope() {
        let facets: Vec<Value> = p
            .facets()
            .iter()
            .map(|f| json!({ "functional": vector(&f.functional), "vertices": f.vertices }))
            .collect();
        o = o
            .set("vertices", vectors(p.vertices()))
            .set("facets", facets)
            .set("faces", p.faces().len());
    }
    o.build()
}

/// `f ∈ J(x)` and `f(y) = 0`, checked from scratch.
fn check_orthogonality_certificate<S: Scalar, N: NormedSpace<S> + ?Sized>(
    space: &N,
    x: &[S],
    y: &[S],
    f: &[S],
    tol: f64,
) -> Result<()> {
    let ok = eq_tol(&linalg::dot(f, x), &space.norm(x), tol)
        && eq_tol(&space.dual_norm(f), &S::one(), tol)
        && linalg::dot(f, y).sign_tol(tol) == Ordering::Equal;
    if ok {
        Ok(())
    } else {
        Err(fail("orthogonality certificate failed re-check"))
    }
}

pub fn ortho<S: Scalar, N: NormedSpace<S> + ?Sized>(space: &N, cmd: &OrthoCmd) -> Result<Value> {
    let pair = match cmd {
        OrthoCmd::Check(p) | OrthoCmd::Min(p) | OrthoCmd::EpsD(p) | OrthoCmd::EpsB(p) => p,
    };
    let x: Vec<S> = vec_arg("x", &pair.x)?;
    let y: Vec<S> = vec_arg("y", &pair.y)?;
    let tol = space.tolerance() * 1e3;
    match cmd {
        OrthoCmd::Check(_) => {
            let v = is_bj_orthogonal(space, &x, &y)?;
            if let Some(f) = &v.certificate {
                check_orthogonality_certificate(space, &x, &y, f, tol)?;
            }
            let plus = in_positive_part(space, &x, &y)?;
            let minus = in_negative_part(space, &x, &y)?;
            if (plus && minus) != v.holds {
                return Err(fail("x⊥ differs from x⁺ ∩ x⁻"));
            }
            let mut o = Obj::new()
                .set("orthogonal", v.holds)
                .set("certificate", v.certificate.as_ref().map_or(Value::Null, |f| vector(f)))
                .set("in_x_plus", plus)
                .set("in_x_minus", minus);
            if !linalg::is_zero(&y, 0.0) {
                let m = minimize_offset(space, &x, &y)?;
                let agrees = eq_tol(&m.min_value, &space.norm(&x), tol);
                if m.exact && agrees != v.holds {
                    return Err(fail("James criterion disagrees with the offset minimum"));
                }
                o = o.set("offset_min", scalar(&m.min_value));
            }
            Ok(o.build())
        }
        OrthoCmd::Min(_) => {
            let m = minimize_offset(space, &x, &y)?;
            Ok(json!({
                "lambda_star": scalar(&m.lambda_star),
                "min_value": scalar(&m.min_value),
                "bracket": [scalar(&m.bracket.0), scalar(&m.bracket.1)],
                "exact": m.exact,
            }))
        }
        OrthoCmd::EpsD(_) | OrthoCmd::EpsB(_) => {
            // The pair is read as "x ⊥ y, how far is y ⊥ x": `value` is the
            // reverse defect, `forward` the defect of x ⊥ y itself.
            let eps = |a: &[S], b: &[S]| {
                if matches!(cmd, OrthoCmd::EpsD(_)) {
                    eps_d_star(space, a, b)
                } else {
                    eps_b_star(space, a, b)
                }
            };
            let e = eps(&y, &x)?;
            let forward = eps(&x, &y)?;
            Ok(json!({
                "value": scalar(&e.value),
                "forward": scalar(&forward.value),
                "squared": e.squared.as_ref().map_or(Value::Null, scalar),
                "exact": e.exact,
                "attained": e.attained,
                "certificate": report::certificate(&e.certificate),
            }))
        }
    }
}

fn verdict<S: Scalar>(v: &PropertyVerdict<S>) -> Value {
    json!({
        "holds": v.holds,
        "method": v.method,
        "witness": report::witness(&v.witness),
    })
}

fn recheck_p_witness<S: Scalar, N: NormedSpace<S> + ?Sized>(space: &N, v: &PropertyVerdict<S>) -> Result<()> {
    if let Some(w) = &v.witness {
        let sampled = v.method == Method::Sampled;
        let orth = if sampled {
            bjsym::sampling::eps_b_f64(
                space.float_view().as_ref(),
                &linalg::to_f64(&w.x),
                &linalg::to_f64(&w.y),
            ) <= SAMPLED_RECHECK
        } else {
            is_bj_orthogonal(space, &w.x, &w.y)?.holds
        };
        if !orth {
            return Err(fail("(P) witness is not orthogonal"));
        }
        if !sampled && !symmetry::in_script_a(space, &w.x, &w.y)? {
            return Err(fail("(P) witness is not in A(x)"));
        }
    }
    Ok(())
}

pub fn props<S: Scalar, N: NormedSpace<S> + ?Sized>(
    space: &N,
    cmd: &PropsCmd,
    cfg: &SampleConfig,
) -> Result<Value> {
    match cmd {
        PropsCmd::P(a) => {
            let (v, scope) = match &a.x {
                Some(x) => {
                    let x: Vec<S> = vec_arg("x", x)?;
                    (symmetry::local_property_p(space, &x, cfg)?, "local")
                }
                None => (symmetry::property_p(space, cfg)?, "global"),
            };
            recheck_p_witness(space, &v)?;
            let mut out = verdict(&v);
            out["scope"] = json!(scope);
            Ok(out)
        }
        PropsCmd::P1 => {
            let p = space
                .polytope()
                .ok_or_else(|| Error::Unsupported("property (P1) needs a polyhedral space".into()))?;
            let v = symmetry::property_p1(p)?;
            if let Some(w) = &v.witness {
                symmetry::verify_p1_witness(p, w)?;
            }
            Ok(verdict(&v))
        }
        PropsCmd::R => {
            let r = symmetry::r_constant(space)?;
            recheck_segment(space, &r)?;
            Ok(r_json(&r))
        }
        PropsCmd::RxCheck => {
            let rep = symmetry::check_rx_implication(space, cfg)?;
            recheck_segment(space, &rep.r)?;
            recheck_p_witness(space, &rep.property_p)?;
            if !rep.implication_holds {
                return Err(fail("R(X) <= 1 but property (P) fails"));
            }
            Ok(json!({
                "r": r_json(&rep.r),
                "property_p": verdict(&rep.property_p),
                "implication_holds": rep.implication_holds,
                "converse_counterexample": rep.converse_counterexample,
            }))
        }
    }
}

fn r_json<S: Scalar>(r: &symmetry::RConstant<S>) -> Value {
    json!({
        "value": scalar(&r.value),
        "witness": report::pair(&r.witness),
        "method": r.method,
    })
}

fn recheck_segment<S: Scalar, N: NormedSpace<S> + ?Sized>(
    space: &N,
    r: &symmetry::RConstant<S>,
) -> Result<()> {
    if let Some((x, y)) = &r.witness {
        let tol = space.tolerance();
        let mid = linalg::scale(&linalg::add(x, y), &S::from_ratio(1, 2));
        let on = [x, y, &mid].iter().all(|v| eq_tol(&space.norm(v), &S::one(), tol));
        if !on || !eq_tol(&space.norm(&linalg::sub(x, y)), &r.value, tol) {
            return Err(fail("R(X) segment failed re-check"));
        }
    }
    Ok(())
}

/// The witness `(x, y)` of a left/global constant satisfies `x ⊥ y` and
/// `ε*_B(y, x) = value`; of a right constant `y ⊥ x` and `ε*_B(x, y) = value`.
fn recheck_c<S: Scalar, N: NormedSpace<S> + ?Sized>(space: &N, c: &SymmetryConstant<S>) -> Result<()> {
    let Some((x, y)) = &c.witness else {
        return Ok(());
    };
    let sampled = c.method == Method::Sampled;
    let tol = recheck_tol(space, sampled);
    let (a, b) = match c.side {
        symmetry::Side::Right => (y, x),
        _ => (x, y),
    };
    let fs = space.float_view();
    let orth = bjsym::sampling::eps_b_f64(fs.as_ref(), &linalg::to_f64(a), &linalg::to_f64(b));
    let value = eps_b_star(space, b, a)?.value;
    let ok = if sampled {
        orth <= tol && (value.to_f64() - c.value.to_f64()).abs() <= tol
    } else {
        is_bj_orthogonal(space, a, b)?.holds && eq_tol(&value, &c.value, tol)
    };
    if ok {
        Ok(())
    } else {
        Err(fail(format!("{:?} constant witness failed re-check", c.side)))
    }
}

pub fn symmetry<S: Scalar, N: NormedSpace<S> + ?Sized>(
    space: &N,
    cmd: &SymmetryCmd,
    cfg: &SampleConfig,
) -> Result<Value> {
    match cmd {
        SymmetryCmd::Point(a) => {
            let x: Vec<S> = vec_arg("x", &a.x)?;
            let l = symmetry::left_symmetry_constant(space, &x, cfg)?;
            let r = symmetry::right_symmetry_constant(space, &x, cfg)?;
            recheck_c(space, &l)?;
            recheck_c(space, &r)?;
            Ok(json!({ "left": report::constant(&l), "right": report::constant(&r) }))
        }
        SymmetryCmd::GlobalC => {
            let c = symmetry::global_c_symmetry(space, cfg)?;
            recheck_c(space, &c)?;
            Ok(report::constant(&c))
        }
        SymmetryCmd::GlobalD => {
            let c = symmetry::global_d_constant(space, cfg)?;
            if let Some((x, y)) = &c.witness {
                let fs = space.float_view();
                let orth = bjsym::sampling::eps_b_f64(fs.as_ref(), x, y);
                let v = bjsym::sampling::eps_d_f64(fs.as_ref(), y, x);
                if orth > SAMPLED_RECHECK || (v - c.value).abs() > SAMPLED_RECHECK {
                    return Err(fail("D constant witness failed re-check"));
                }
            }
            Ok(report::constant(&c))
        }
    }
}

fn load_map(path: &Path, tol: Option<f64>) -> Result<AnyMap> {
    let spec = SpaceSpec::from_json(&read_file(path)?)?.build_operator_tol(tol)?;
    AnyMap::from_spec(&spec)
}

fn matrix<S: Scalar>(m: &LinearMap<S>) -> Value {
    vectors(m.matrix())
}

fn op_norm<S: Scalar>(t: &LinearMap<S>, cfg: &SampleConfig) -> Result<Value> {
    let n = operators::operator_norm(t, cfg)?;
    if n.method == operators::NormMethod::VertexEnumeration {
        let tol = t.codomain().tolerance();
        for v in &n.m_t {
            if !eq_tol(&t.codomain().norm(&t.apply(v)), &n.value, tol) {
                return Err(fail("M_T point does not attain the norm"));
            }
        }
    }
    Ok(json!({
        "value": scalar(&n.value),
        "m_t": vectors(&n.m_t),
        "method": n.method,
        "exact": n.exact,
        "resolution": report::resolution(&n.resolution),
        "domain": t.domain().kind(),
        "codomain": t.codomain().kind(),
    }))
}

fn op_two<S: Scalar>(cmd: &OpCmd, a: &LinearMap<S>, t: &LinearMap<S>, cfg: &SampleConfig) -> Result<Value> {
    match cmd {
        OpCmd::Ortho(_) => {
            let v = operators::op_is_bj_orthogonal(a, t, cfg)?;
            Ok(json!({
                "orthogonal": v.holds,
                "norm_a": scalar(&v.norm_a),
                "lambda_star": scalar(&v.pencil.lambda_star),
                "min_value": scalar(&v.pencil.min_value),
                "exact": v.pencil.exact,
            }))
        }
        OpCmd::MakePair(_) => {
            let (b, l) = operators::make_orthogonal_pair(a, t, cfg)?;
            Ok(json!({
                "b": matrix(&b),
                "lambda_star": scalar(&l),
                "verified": true,
            }))
        }
        OpCmd::Eps(_) => {
            let s = operators::sup_inf_epsilon(t, a, cfg)?;
            Ok(json!({
                "epsilon": scalar(&s.epsilon),
                "sup_inf": scalar(&s.sup_inf),
                "witness": vector(&s.witness),
                "samples_in_a": s.in_a,
                "a_injective": s.a_injective,
                "t_injective": s.t_injective,
                "resolution": report::resolution(&Some(s.resolution)),
            }))
        }
        OpCmd::DragomirCheck(d) => {
            let eps = match d.eps {
                Some(e) => e,
                None => operators::sup_inf_epsilon(t, a, cfg)?.epsilon,
            };
            let r = operators::verify_dragomir_conditions(t, a, eps, cfg)?;
            let opt = |p: &Option<Vec<f64>>| p.as_ref().map_or(Value::Null, |v| vector(v));
            Ok(json!({
                "epsilon": scalar(&eps),
                "condition_a": r.condition_a,
                "condition_b": r.condition_b,
                "a_point": opt(&r.a_point),
                "b_point": opt(&r.b_point),
                "a_margin": scalar(&r.a_margin),
                "b_margin": scalar(&r.b_margin),
                "grid": r.grid,
                "certified": r.certified(),
            }))
        }
        OpCmd::Norm(_) => unreachable!("single-operator command"),
    }
}

pub fn op(cmd: &OpCmd, cfg: &SampleConfig, tol: Option<f64>) -> Result<Value> {
    let (a_path, t_path) = match cmd {
        OpCmd::Norm(o) => {
            return match load_map(&o.t, tol)? {
                AnyMap::Exact(t) => op_norm(&t, cfg),
                AnyMap::Float(t) => op_norm(&t, cfg),
            };
        }
        OpCmd::Ortho(o) | OpCmd::MakePair(o) | OpCmd::Eps(o) => (&o.a, &o.t),
        OpCmd::DragomirCheck(d) => (&d.ops.a, &d.ops.t),
    };
    match (load_map(a_path, tol)?, load_map(t_path, tol)?) {
        (AnyMap::Exact(a), AnyMap::Exact(t)) => op_two(cmd, &a, &t, cfg),
        (a, t) => op_two(cmd, &a.to_float(), &t.to_float(), cfg),
    }
}
