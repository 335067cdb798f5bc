//! Birkhoff-James orthogonality and the minimal parameters of its two
//! approximate variants.
//!
//! `x ⊥ y` means `‖x + λy‖ >= ‖x‖` for every real `λ`. The Dragomir-type
//! variant relaxes the right side to `√(1-ε²)‖x‖`; the Chmieliński-type
//! variant asks for some `f ∈ J(x)` with `|f(y)| <= ε‖y‖`.

use std::cmp::Ordering;

use crate::envelope;
use crate::error::{Error, Result};
use crate::linalg::{self, dot};
use crate::scalar::Scalar;
use crate::search;
use crate::spaces::{check_dim, NormedSpace};

/// Golden-section tolerance on λ for analytic norms.
pub const LAMBDA_TOL: f64 = 1e-12;

/// Global minimum of `λ ↦ ‖x + λy‖`.
#[derive(Debug, Clone, PartialEq)]
pub struct OffsetMinimum<S> {
    /// Minimizer of smallest absolute value.
    pub lambda_star: S,
    pub min_value: S,
    /// Search interval `[-2‖x‖/‖y‖, 2‖x‖/‖y‖]`; the minimum always lies inside.
    pub bracket: (S, S),
    pub exact: bool,
}

/// Evidence attached to a computed ε* or verdict.
#[derive(Debug, Clone, PartialEq)]
pub enum Certificate<S> {
    /// A supporting functional realizing the value.
    Functional(Vec<S>),
    /// The minimizing offset `λ*` and the point `x + λ*y`.
    Offset { lambda: S, point: Vec<S> },
}

/// Minimal ε for which an approximate orthogonality holds.
///
/// `value = 1` means the relation fails for every `ε < 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct EpsilonStar<S> {
    pub value: S,
    /// `ε²` when known exactly (the Dragomir variant produces squares naturally).
    pub squared: Option<S>,
    /// False when `value` is a floating-point approximation.
    pub exact: bool,
    pub attained: bool,
    pub certificate: Option<Certificate<S>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Verdict<S> {
    pub holds: bool,
    /// A functional `f ∈ J(x)` with `f(y) = 0` when orthogonality holds.
    pub certificate: Option<Vec<S>>,
}

fn nonzero<S: Scalar>(v: &[S], field: &str) -> Result<()> {
    if linalg::is_zero(v, 0.0) {
        return Err(Error::ZeroVector(field.into()));
    }
    Ok(())
}

fn scaled(tol: f64, s: f64) -> f64 {
    tol * s.abs().max(1.0)
}

pub fn minimize_offset<S: Scalar, N: NormedSpace<S> + ?Sized>(
    space: &N,
    x: &[S],
    y: &[S],
) -> Result<OffsetMinimum<S>> {
    check_dim(space.dim(), "x", x)?;
    check_dim(space.dim(), "y", y)?;
    nonzero(y, "y")?;
    let nx = space.norm(x);
    let ny = space.norm(y);
    let r = (nx.clone() + nx) / ny;
    let bracket = (-r.clone(), r.clone());
    if let Some(p) = space.polytope() {
        let lines: Vec<(S, S)> = p
            .facets()
            .iter()
            .map(|f| (dot(&f.functional, x), dot(&f.functional, y)))
            .collect();
        let m = envelope::minimize(&lines).expect("norm envelopes are coercive");
        return Ok(OffsetMinimum {
            lambda_star: m.lambda,
            min_value: m.value,
            bracket,
            exact: S::EXACT,
        });
    }
    let xf = linalg::to_f64(x);
    let yf = linalg::to_f64(y);
    let m = offset_min_f64(space, &xf, &yf, r.to_f64());
    Ok(OffsetMinimum {
        lambda_star: S::from_f64(m.x),
        min_value: S::from_f64(m.value),
        bracket,
        exact: false,
    })
}

/// Floating-point offset minimum for any space, using only norm evaluations.
pub fn offset_min_f64<S: Scalar, N: NormedSpace<S> + ?Sized>(
    space: &N,
    x: &[f64],
    y: &[f64],
    radius: f64,
) -> search::Min1d {
    let f = |l: f64| {
        let p: Vec<f64> = x.iter().zip(y).map(|(a, b)| a + l * b).collect();
        space.norm_f64(&p)
    };
    search::convex_min_toward_zero(f, -radius, radius, LAMBDA_TOL)
}

fn generator_values<S: Scalar>(gens: &[Vec<S>], y: &[S]) -> Vec<S> {
    gens.iter().map(|g| dot(g, y)).collect()
}

fn argmin_max<S: Scalar>(vals: &[S]) -> (usize, usize) {
    let mut lo = 0;
    let mut hi = 0;
    for (i, v) in vals.iter().enumerate() {
        if *v < vals[lo] {
            lo = i;
        }
        if *v > vals[hi] {
            hi = i;
        }
    }
    (lo, hi)
}

/// Convex combination of `g_lo` and `g_hi` vanishing at `y`, given values of
/// opposite signs.
fn vanishing_combination<S: Scalar>(g_lo: &[S], v_lo: &S, g_hi: &[S], v_hi: &S) -> Vec<S> {
    let t = v_hi.clone() / (v_hi.clone() - v_lo.clone());
    let s = S::one() - t.clone();
    g_lo.iter()
        .zip(g_hi)
        .map(|(a, b)| t.clone() * a.clone() + s.clone() * b.clone())
        .collect()
}

/// James criterion: `x ⊥ y` iff the generator values `g(y)` over `J(x)` straddle 0.
pub fn is_bj_orthogonal<S: Scalar, N: NormedSpace<S> + ?Sized>(
    space: &N,
    x: &[S],
    y: &[S],
) -> Result<Verdict<S>> {
    check_dim(space.dim(), "x", x)?;
    check_dim(space.dim(), "y", y)?;
    nonzero(x, "x")?;
    let gens = space.support_generators(x);
    if linalg::is_zero(y, 0.0) {
        return Ok(Verdict {
            holds: true,
            certificate: Some(gens[0].clone()),
        });
    }
    let tol = scaled(space.tolerance(), space.norm(y).to_f64());
    let vals = generator_values(&gens, y);
    if let Some(i) = vals.iter().position(|v| v.sign_tol(tol) == Ordering::Equal) {
        return Ok(Verdict {
            holds: true,
            certificate: Some(gens[i].clone()),
        });
    }
    let (lo, hi) = argmin_max(&vals);
    if vals[lo].is_negative() && vals[hi].is_positive() {
        Ok(Verdict {
            holds: true,
            certificate: Some(vanishing_combination(
                &gens[lo], &vals[lo], &gens[hi], &vals[hi],
            )),
        })
    } else {
        Ok(Verdict {
            holds: false,
            certificate: None,
        })
    }
}

/// `y ∈ x⁺`: `‖x + λy‖ >= ‖x‖` for all `λ >= 0`, i.e. `max_{f∈J(x)} f(y) >= 0`.
pub fn in_positive_part<S: Scalar, N: NormedSpace<S> + ?Sized>(
    space: &N,
    x: &[S],
    y: &[S],
) -> Result<bool> {
    one_sided(space, x, y, Ordering::Greater)
}

/// `y ∈ x⁻`: `‖x + λy‖ >= ‖x‖` for all `λ <= 0`, i.e. `min_{f∈J(x)} f(y) <= 0`.
pub fn in_negative_part<S: Scalar, N: NormedSpace<S> + ?Sized>(
    space: &N,
    x: &[S],
    y: &[S],
) -> Result<bool> {
    one_sided(space, x, y, Ordering::Less)
}

fn one_sided<S: Scalar, N: NormedSpace<S> + ?Sized>(
    space: &N,
    x: &[S],
    y: &[S],
    side: Ordering,
) -> Result<bool> {
    check_dim(space.dim(), "x", x)?;
    check_dim(space.dim(), "y", y)?;
    nonzero(x, "x")?;
    if linalg::is_zero(y, 0.0) {
        return Ok(true);
    }
    let tol = scaled(space.tolerance(), space.norm(y).to_f64());
    let vals = generator_values(&space.support_generators(x), y);
    Ok(vals.iter().any(|v| v.sign_tol(tol) != side.reverse()))
}

/// Minimal ε with `‖x + λy‖ >= √(1-ε²)‖x‖` for all `λ`.
pub fn eps_d_star<S: Scalar, N: NormedSpace<S> + ?Sized>(
    space: &N,
    x: &[S],
    y: &[S],
) -> Result<EpsilonStar<S>> {
    nonzero(x, "x")?;
    let m = minimize_offset(space, x, y)?;
    let ratio = m.min_value.clone() / space.norm(x);
    let mut squared = S::one() - ratio.clone() * ratio;
    if squared.is_negative() {
        squared = S::zero();
    }
    let (value, exact) = match squared.exact_sqrt() {
        Some(v) => (v, m.exact),
        None => (S::from_f64(squared.to_f64().sqrt()), false),
    };
    let point = linalg::axpy(x, &m.lambda_star, y);
    Ok(EpsilonStar {
        value,
        squared: Some(squared),
        exact,
        attained: true,
        certificate: Some(Certificate::Offset {
            lambda: m.lambda_star,
            point,
        }),
    })
}

/// Minimal ε with some `f ∈ J(x)` satisfying `|f(y)| <= ε‖y‖`.
pub fn eps_b_star<S: Scalar, N: NormedSpace<S> + ?Sized>(
    space: &N,
    x: &[S],
    y: &[S],
) -> Result<EpsilonStar<S>> {
    check_dim(space.dim(), "x", x)?;
    check_dim(space.dim(), "y", y)?;
    nonzero(x, "x")?;
    nonzero(y, "y")?;
    let ny = space.norm(y);
    let gens = space.support_generators(x);
    let vals = generator_values(&gens, y);
    let tol = scaled(space.tolerance(), ny.to_f64());
    let (lo, hi) = argmin_max(&vals);
    let straddles = vals[lo].sign_tol(tol) != Ordering::Greater
        && vals[hi].sign_tol(tol) != Ordering::Less;
    let (value, cert) = if straddles {
        let f = if vals[lo].is_negative() && vals[hi].is_positive() {
            vanishing_combination(&gens[lo], &vals[lo], &gens[hi], &vals[hi])
        } else {
            let i = if vals[lo].sign_tol(tol) == Ordering::Equal {
                lo
            } else {
                hi
            };
            gens[i].clone()
        };
        (S::zero(), f)
    } else {
        let i = if vals[lo].is_positive() { lo } else { hi };
        (vals[i].abs() / ny, gens[i].clone())
    };
    Ok(EpsilonStar {
        squared: Some(value.clone() * value.clone()),
        value,
        exact: S::EXACT,
        attained: true,
        certificate: Some(Certificate::Functional(cert)),
    })
}

/// Independent estimate of [`eps_b_star`] from norm evaluations only:
/// the distance from `y/‖y‖` to the cone `{z ∈ span{x, y} : x ⊥ z}`.
pub fn eps_b_star_segment_oracle(
    space: &dyn NormedSpace<f64>,
    x: &[f64],
    y: &[f64],
) -> Result<f64> {
    check_dim(space.dim(), "x", x)?;
    check_dim(space.dim(), "y", y)?;
    if linalg::rank(&[x.to_vec(), y.to_vec()], 1e-12) < 2 {
        return Err(Error::Dependent);
    }
    let nx = space.norm_f64(x);
    let ny = space.norm_f64(y);
    let xh: Vec<f64> = x.iter().map(|t| t / nx).collect();
    let yh: Vec<f64> = y.iter().map(|t| t / ny).collect();
    let dir = |th: f64| -> Vec<f64> {
        let (c, s) = (th.cos(), th.sin());
        xh.iter().zip(&yh).map(|(a, b)| c * a + s * b).collect()
    };
    const H: f64 = 1e-7;
    let upper = |th: f64| {
        let d = dir(th);
        let p: Vec<f64> = xh.iter().zip(&d).map(|(a, b)| a + H * b).collect();
        (space.norm_f64(&p) - 1.0) / H
    };
    let lower = |th: f64| {
        let d = dir(th);
        let p: Vec<f64> = xh.iter().zip(&d).map(|(a, b)| a - H * b).collect();
        (1.0 - space.norm_f64(&p)) / H
    };
    // Both one-sided derivatives decrease from 1 at θ=0 to −1 at θ=π with a
    // single sign change; x ⊥ d(θ) exactly between the two zeros.
    let zero_of = |f: &dyn Fn(f64) -> f64| -> f64 {
        const GRID: usize = 256;
        let mut a = 0.0;
        let mut b = std::f64::consts::PI;
        for k in 1..=GRID {
            let t = std::f64::consts::PI * k as f64 / GRID as f64;
            if f(t) <= 0.0 {
                b = t;
                a = std::f64::consts::PI * (k - 1) as f64 / GRID as f64;
                break;
            }
        }
        for _ in 0..60 {
            let m = 0.5 * (a + b);
            if f(m) <= 0.0 {
                b = m;
            } else {
                a = m;
            }
        }
        0.5 * (a + b)
    };
    let th_lo = zero_of(&lower);
    let th_hi = zero_of(&upper).max(th_lo);
    let dist = |th: f64| {
        let d = dir(th);
        let r = 2.0 / space.norm_f64(&d);
        search::golden_min(
            |t| {
                let p: Vec<f64> = d.iter().zip(&yh).map(|(a, b)| t * a - b).collect();
                space.norm_f64(&p)
            },
            -r,
            r,
            1e-12,
        )
        .value
    };
    const SAMPLES: usize = 64;
    let step = (th_hi - th_lo) / SAMPLES as f64;
    let mut best = (th_lo, dist(th_lo));
    for k in 1..=SAMPLES {
        let t = th_lo + step * k as f64;
        let v = dist(t);
        if v < best.1 {
            best = (t, v);
        }
    }
    if step > 0.0 {
        let lo = (best.0 - step).max(th_lo);
        let hi = (best.0 + step).min(th_hi);
        let m = search::golden_min(dist, lo, hi, 1e-10);
        if m.value < best.1 {
            best = (m.x, m.value);
        }
    }
    Ok(best.1.min(1.0))
}

/// Chains the constants of the neighbourhood stability argument: if
/// `x ⊥_D^ε y` then `z ⊥_D^{ε3} w` for `z` within `eps1` of `x` and `w`
/// within `eps2` of `y` (all unit vectors).
pub fn d_stability_constants(eps: f64, eps1: f64, eps2: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&eps) || eps1 < 0.0 || eps2 < 0.0 {
        return Err(Error::Precondition(format!(
            "need 0 <= eps < 1 and nonnegative radii, got eps={eps}, eps1={eps1}, eps2={eps2}"
        )));
    }
    let c = (1.0 - eps * eps).sqrt() - eps1;
    if c <= 0.0 {
        return Err(Error::Precondition(format!(
            "sqrt(1 - eps^2) - eps1 = {c} must be positive"
        )));
    }
    let c2 = c - 2.0 * eps2;
    if c2 <= 0.0 {
        return Err(Error::Precondition(format!(
            "sqrt(1 - delta^2) - 2 eps2 = {c2} must be positive"
        )));
    }
    Ok((1.0 - c2 * c2).max(0.0).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;
    use crate::spaces::{catalog, Lp};

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    fn v(xs: &[(i64, i64)]) -> Vec<Rational> {
        xs.iter().map(|&(n, d)| q(n, d)).collect()
    }

    #[test]
    fn offset_in_max_norm() {
        let s = catalog::linf(2).unwrap();
        let m = minimize_offset(&s, &v(&[(1, 1), (0, 1)]), &v(&[(1, 1), (1, 1)])).unwrap();
        assert_eq!(m.lambda_star, q(-1, 2));
        assert_eq!(m.min_value, q(1, 2));
        let x = v(&[(3, 1), (-1, 2)]);
        let m = minimize_offset(&s, &x, &x).unwrap();
        assert_eq!((m.lambda_star, m.min_value), (q(-1, 1), q(0, 1)));
    }

    #[test]
    fn offset_in_euclidean_plane() {
        let s = Lp::euclidean(2).unwrap();
        let m = minimize_offset(&s, &[1.0, 0.0], &[0.0, 1.0]).unwrap();
        assert_eq!(m.lambda_star, 0.0);
        assert!((m.min_value - 1.0).abs() < 1e-12);
        assert!(minimize_offset(&s, &[1.0, 0.0], &[0.0, 0.0]).is_err());
    }

    #[test]
    fn james_criterion_examples() {
        let c = catalog::linf(3).unwrap();
        let x = v(&[(1, 1), (1, 2), (3, 10)]);
        let verdict = is_bj_orthogonal(&c, &x, &v(&[(0, 1), (1, 1), (-1, 1)])).unwrap();
        assert!(verdict.holds);
        assert_eq!(verdict.certificate.unwrap(), v(&[(1, 1), (0, 1), (0, 1)]));

        let e = Lp::euclidean(2).unwrap();
        assert!(!is_bj_orthogonal(&e, &[1.0, 0.0], &[1.0, 1.0]).unwrap().holds);
        assert!(is_bj_orthogonal(&e, &[1.0, 0.0], &[0.0, 0.0]).unwrap().holds);
        assert!(is_bj_orthogonal(&e, &[0.0, 0.0], &[1.0, 0.0]).is_err());
    }

    #[test]
    fn square_corner_certificate_is_a_combination() {
        let s = catalog::linf(2).unwrap();
        let verdict =
            is_bj_orthogonal(&s, &v(&[(1, 1), (1, 1)]), &v(&[(1, 1), (-1, 1)])).unwrap();
        assert_eq!(verdict.certificate.unwrap(), v(&[(1, 2), (1, 2)]));
    }

    #[test]
    fn positive_and_negative_parts() {
        let e = Lp::euclidean(2).unwrap();
        assert!(in_positive_part(&e, &[1.0, 0.0], &[1.0, 1.0]).unwrap());
        assert!(!in_negative_part(&e, &[1.0, 0.0], &[1.0, 1.0]).unwrap());
        assert!(in_positive_part(&e, &[1.0, 0.0], &[0.0, 0.0]).unwrap());
        assert!(in_negative_part(&e, &[1.0, 0.0], &[0.0, 0.0]).unwrap());
    }

    #[test]
    fn dragomir_values() {
        let s = catalog::linf(2).unwrap();
        let e = eps_d_star(&s, &v(&[(1, 1), (0, 1)]), &v(&[(1, 1), (1, 1)])).unwrap();
        assert_eq!(e.squared, Some(q(3, 4)));
        assert!(!e.exact);
        assert!((e.value.to_f64() - 3f64.sqrt() / 2.0).abs() < 1e-15);

        let h = Lp::euclidean(2).unwrap();
        let r = std::f64::consts::FRAC_1_SQRT_2;
        let e = eps_d_star(&h, &[1.0, 0.0], &[r, r]).unwrap();
        assert!((e.value - r).abs() < 1e-9);
        let e = eps_d_star(&h, &[1.0, 0.0], &[0.0, 2.0]).unwrap();
        assert!(e.value.abs() < 1e-9);
    }

    #[test]
    fn chmielinski_values() {
        let c = catalog::linf(3).unwrap();
        let x = v(&[(1, 1), (1, 2), (3, 10)]);
        let y = v(&[(0, 1), (1, 1), (0, 1)]);
        assert_eq!(eps_b_star(&c, &y, &x).unwrap().value, q(1, 2));
        let w = v(&[(1, 1), (-1, 1), (3, 10)]);
        assert_eq!(eps_b_star(&c, &x, &w).unwrap().value, q(1, 1));

        let hex = catalog::fig9_hexagon();
        let e = eps_b_star(&hex, &v(&[(-4, 3), (1, 1)]), &v(&[(0, 1), (2, 1)])).unwrap();
        assert_eq!(e.value, q(1, 1));
        assert_eq!(
            e.certificate,
            Some(Certificate::Functional(v(&[(-3, 8), (1, 2)])))
        );
    }

    #[test]
    fn segment_oracle_in_hilbert_space() {
        let h = Lp::euclidean(2).unwrap();
        for k in 1..12 {
            let t = 0.25 * k as f64;
            let est = eps_b_star_segment_oracle(&h, &[1.0, 0.0], &[t.cos(), t.sin()]).unwrap();
            assert!((est - t.cos().abs()).abs() < 1e-6, "θ={t}: {est}");
        }
        assert!(eps_b_star_segment_oracle(&h, &[1.0, 0.0], &[2.0, 0.0]).is_err());
    }

    #[test]
    fn segment_oracle_on_square_corner() {
        let s = catalog::linf(2).unwrap().to_float();
        let est = eps_b_star_segment_oracle(&s, &[0.0, 1.0], &[1.0, 1.0]).unwrap();
        assert!((est - 1.0).abs() < 1e-6, "{est}");
        let est = eps_b_star_segment_oracle(&s, &[1.0, 1.0], &[0.0, 1.0]).unwrap();
        assert!(est.abs() < 1e-6, "{est}");
    }

    #[test]
    fn stability_constants() {
        assert_eq!(d_stability_constants(0.0, 0.0, 0.0).unwrap(), 0.0);
        let e3 = d_stability_constants(0.0, 0.1, 0.1).unwrap();
        assert!((e3 - 0.51f64.sqrt()).abs() < 1e-12);
        assert!(d_stability_constants(0.0, 0.6, 0.3).is_err());
        assert!(d_stability_constants(0.0, 1.0, 0.0).is_err());
    }
}
