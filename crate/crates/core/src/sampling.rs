//! Grid and random sampling of unit spheres, used for the supremum-type
//! constants of non-polyhedral spaces and for the D-constant of every space.
//!
//! Every sampler is deterministic: grids are fixed, random directions come from
//! a seeded ChaCha stream, and parallel reductions keep the lowest index on ties.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::envelope;
use crate::error::{Error, Result};
use crate::linalg;
use crate::orthogonality::offset_min_f64;
use crate::spaces::{sphere_point_2d, NormedSpace};

type Pair = (Vec<f64>, Vec<f64>);

/// Resolution of a sampled supremum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SampleConfig {
    /// Points on the first grid.
    pub samples: usize,
    /// Refinement rounds around the incumbent maximum.
    pub refine: usize,
    /// Each round shrinks the step by this factor.
    pub factor: usize,
    pub seed: u64,
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig {
            samples: 4096,
            refine: 3,
            factor: 16,
            seed: 0,
        }
    }
}

impl SampleConfig {
    fn inner(&self) -> SampleConfig {
        SampleConfig {
            samples: 64,
            refine: self.refine.min(2),
            ..*self
        }
    }
}

/// Scales `v` onto the unit sphere of `space`.
pub fn normalize(space: &dyn NormedSpace<f64>, v: &[f64]) -> Vec<f64> {
    let n = space.norm_f64(v);
    v.iter().map(|x| x / n).collect()
}

/// `n` equally spaced points of a planar unit sphere, starting at angle 0.
pub fn circle_grid(space: &dyn NormedSpace<f64>, n: usize) -> Vec<[f64; 2]> {
    (0..n)
        .map(|k| sphere_point_2d(space, std::f64::consts::TAU * k as f64 / n as f64))
        .collect()
}

/// Fibonacci lattice on the Euclidean sphere of ℝ³.
pub fn fibonacci_sphere(n: usize) -> Vec<[f64; 3]> {
    let golden = std::f64::consts::PI * (3.0 - 5f64.sqrt());
    (0..n)
        .map(|i| {
            let z = 1.0 - (2 * i + 1) as f64 / n as f64;
            let r = (1.0 - z * z).max(0.0).sqrt();
            let phi = golden * i as f64;
            [r * phi.cos(), r * phi.sin(), z]
        })
        .collect()
}

/// Euclidean unit directions in ℝᵏ, drawn uniformly from the ball and projected.
pub fn random_directions(k: usize, n: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<f64>> {
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let v: Vec<f64> = (0..k).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let r = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if r > 1e-3 && r <= 1.0 {
            out.push(v.into_iter().map(|x| x / r).collect());
        }
    }
    out
}

/// Euclidean orthonormal basis of `{v : f·v = 0 for every f in rows}`.
pub fn orthonormal_kernel(rows: &[Vec<f64>], dim: usize) -> Vec<Vec<f64>> {
    let mut basis: Vec<Vec<f64>> = Vec::new();
    for mut v in linalg::null_space(rows, dim, 1e-12) {
        for b in &basis {
            let d = linalg::dot(&v, b);
            v = linalg::axpy(&v, &-d, b);
        }
        let r = linalg::dot(&v, &v).sqrt();
        if r > 1e-12 {
            basis.push(v.into_iter().map(|x| x / r).collect());
        }
    }
    basis
}

fn combine(basis: &[Vec<f64>], c: &[f64]) -> Vec<f64> {
    let mut v = vec![0.0; basis[0].len()];
    for (b, ci) in basis.iter().zip(c) {
        v = linalg::axpy(&v, ci, b);
    }
    v
}

/// Best of `candidates` by value; the first index wins ties.
pub(crate) fn argmax<T>(candidates: impl IntoIterator<Item = Option<(f64, T)>>) -> Option<(f64, T)> {
    let mut best: Option<(f64, T)> = None;
    for c in candidates.into_iter().flatten() {
        if best.as_ref().is_none_or(|b| c.0 > b.0) {
            best = Some(c);
        }
    }
    best
}

/// Maximizes `f` over `[lo, hi]`: a grid of `n` steps, then `rounds` windows
/// around the incumbent, each `factor` times finer. `f` returns `None` off the
/// feasible set.
pub fn refine_max(
    f: &(dyn Fn(f64) -> Option<f64> + Sync),
    lo: f64,
    hi: f64,
    n: usize,
    rounds: usize,
    factor: usize,
) -> Option<(f64, f64)> {
    let grid = |a: f64, b: f64, m: usize| -> Option<(f64, f64)> {
        let m = m.max(1);
        let vals: Vec<Option<(f64, f64)>> = (0..=m)
            .into_par_iter()
            .map(|i| {
                let t = a + (b - a) * i as f64 / m as f64;
                f(t).map(|v| (v, t))
            })
            .collect();
        argmax(vals)
    };
    let mut best = grid(lo, hi, n)?;
    let mut step = (hi - lo) / n.max(1) as f64;
    for _ in 0..rounds {
        let a = (best.1 - step).max(lo);
        let b = (best.1 + step).min(hi);
        if let Some(c) = grid(a, b, 2 * factor) {
            if c.0 > best.0 {
                best = c;
            }
        }
        step /= factor as f64;
    }
    Some((best.1, best.0))
}

/// Maximizes `f` over Euclidean unit vectors of ℝᵏ by random search with
/// shrinking local perturbations. Returns `(value, argmax)`.
pub fn sphere_max(
    k: usize,
    f: &(dyn Fn(&[f64]) -> f64 + Sync),
    cfg: &SampleConfig,
    rng: &mut ChaCha8Rng,
) -> (f64, Vec<f64>) {
    if k == 1 {
        return argmax([vec![1.0], vec![-1.0]].into_iter().map(|c| Some((f(&c), c))))
            .expect("two candidates");
    }
    let dirs = random_directions(k, cfg.samples.max(1), rng);
    let vals: Vec<Option<(f64, Vec<f64>)>> = dirs
        .into_par_iter()
        .map(|c| Some((f(&c), c)))
        .collect();
    let best = argmax(vals).expect("nonempty sample");
    refine_around(best, f, cfg, rng)
}

/// Random local search around `best` on the Euclidean sphere of ℝᵏ, shrinking
/// the radius by `cfg.factor` each of `cfg.refine` rounds.
pub fn refine_around(
    mut best: (f64, Vec<f64>),
    f: &(dyn Fn(&[f64]) -> f64 + Sync),
    cfg: &SampleConfig,
    rng: &mut ChaCha8Rng,
) -> (f64, Vec<f64>) {
    let k = best.1.len();
    let mut radius = 1.0 / cfg.factor as f64;
    let local = (cfg.samples / cfg.factor.max(1)).max(64);
    for _ in 0..cfg.refine {
        let steps = random_directions(k, local, rng);
        let centre = best.1.clone();
        let vals: Vec<Option<(f64, Vec<f64>)>> = steps
            .into_par_iter()
            .map(|s| {
                let c = linalg::axpy(&centre, &radius, &s);
                let r = linalg::dot(&c, &c).sqrt();
                let c: Vec<f64> = c.into_iter().map(|x| x / r).collect();
                Some((f(&c), c))
            })
            .collect();
        if let Some(c) = argmax(vals) {
            if c.0 > best.0 {
                best = c;
            }
        }
        radius /= cfg.factor as f64;
    }
    best
}

fn kernel2(f: &[f64]) -> Vec<f64> {
    vec![-f[1], f[0]]
}

/// `ε*_B(x, y)` for unit vectors in floating point.
pub fn eps_b_f64(space: &dyn NormedSpace<f64>, x: &[f64], y: &[f64]) -> f64 {
    let tol = space.tolerance();
    let vals: Vec<f64> = space
        .support_generators(x)
        .iter()
        .map(|g| linalg::dot(g, y))
        .collect();
    let lo = vals.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = vals.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    if lo <= tol && hi >= -tol {
        0.0
    } else if lo > 0.0 {
        lo
    } else {
        -hi
    }
}

/// `ε*_D(x, y)` for a unit `x` in floating point.
pub fn eps_d_f64(space: &dyn NormedSpace<f64>, x: &[f64], y: &[f64]) -> f64 {
    let m = match space.polytope() {
        Some(p) => {
            let lines: Vec<(f64, f64)> = p
                .facets_f64()
                .iter()
                .map(|f| (linalg::dot(f, x), linalg::dot(f, y)))
                .collect();
            envelope::minimize(&lines)
                .expect("norm envelopes are coercive")
                .value
        }
        None => offset_min_f64(space, x, y, 2.0 / space.norm_f64(y)).value,
    };
    (1.0 - m * m).max(0.0).sqrt()
}

/// Unit vectors spanning `x^⊥` in the plane: `y(t)` runs over the kernels of
/// `J(x)` between its two extreme generators as `t` goes from 0 to 1.
fn planar_kernel_arc(space: &dyn NormedSpace<f64>, x: &[f64]) -> (Vec<f64>, Vec<f64>) {
    let gens = space.support_generators(x);
    let a = kernel2(&gens[0]);
    let b = kernel2(&gens[gens.len() - 1]);
    (a, b)
}

fn arc_point(space: &dyn NormedSpace<f64>, a: &[f64], b: &[f64], t: f64) -> Vec<f64> {
    normalize(space, &linalg::axpy(&linalg::scale(a, &(1.0 - t)), &t, b))
}

/// `sup { ε*_B(y, x) : y ∈ x^⊥ ∩ S_X }` with the maximizing `y`.
pub fn left_sup(space: &dyn NormedSpace<f64>, x: &[f64], cfg: &SampleConfig) -> (f64, Vec<f64>) {
    if space.dim() == 2 {
        let (a, b) = planar_kernel_arc(space, x);
        if linalg::approx_eq(&a, &b, 1e-15) {
            let y = normalize(space, &a);
            return (eps_b_f64(space, &y, x), y);
        }
        let f = |t: f64| Some(eps_b_f64(space, &arc_point(space, &a, &b, t), x));
        let (t, v) = refine_max(&f, 0.0, 1.0, cfg.samples, cfg.refine, cfg.factor)
            .expect("the arc is feasible everywhere");
        return (v, arc_point(space, &a, &b, t));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut best: Option<(f64, Vec<f64>)> = None;
    for g in space.support_generators(x) {
        let basis = orthonormal_kernel(&[g], space.dim());
        let f = |c: &[f64]| eps_b_f64(space, &normalize(space, &combine(&basis, c)), x);
        let (v, c) = sphere_max(basis.len(), &f, cfg, &mut rng);
        if best.as_ref().is_none_or(|b| v > b.0) {
            best = Some((v, normalize(space, &combine(&basis, &c))));
        }
    }
    best.expect("J(x) is nonempty")
}

/// `sup { ε*_B(x, y) : y ∈ S_X, y ⊥ x }` with the maximizing `y`.
pub fn right_sup(
    space: &dyn NormedSpace<f64>,
    x: &[f64],
    cfg: &SampleConfig,
) -> Result<(f64, Vec<f64>)> {
    if space.dim() == 2 {
        return Ok(right_sup_planar(space, x, cfg));
    }
    if !space.is_strictly_convex() {
        return Err(Error::Unsupported(
            "the sampled right constant in dimension 3 and up needs a strictly convex norm".into(),
        ));
    }
    // y ⊥ x exactly when y is the dual preimage of a functional vanishing at x.
    let basis = orthonormal_kernel(&[x.to_vec()], space.dim());
    let to_y = |c: &[f64]| -> Option<Vec<f64>> {
        space
            .dual_preimage(&combine(&basis, c))
            .map(|y| normalize(space, &y))
    };
    let f = |c: &[f64]| to_y(c).map_or(f64::NEG_INFINITY, |y| eps_b_f64(space, x, &y));
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let (v, c) = sphere_max(basis.len(), &f, cfg, &mut rng);
    let y = to_y(&c).ok_or_else(|| Error::Unsupported("dual preimage unavailable".into()))?;
    Ok((v, y))
}

fn right_sup_planar(space: &dyn NormedSpace<f64>, x: &[f64], cfg: &SampleConfig) -> (f64, Vec<f64>) {
    let tol = space.tolerance();
    let n = cfg.samples.max(8);
    let theta = |k: f64| std::f64::consts::TAU * k / n as f64;
    let y_at = |t: f64| sphere_point_2d(space, t).to_vec();
    // Sign of J(y)(x): +1 or -1 when all generator values agree, 0 when y ⊥ x.
    let side = |t: f64| -> i8 {
        let y = y_at(t);
        let vals: Vec<f64> = space
            .support_generators(&y)
            .iter()
            .map(|g| linalg::dot(g, x))
            .collect();
        if vals.iter().all(|v| *v > tol) {
            1
        } else if vals.iter().all(|v| *v < -tol) {
            -1
        } else {
            0
        }
    };
    let sides: Vec<i8> = (0..n).into_par_iter().map(|k| side(theta(k as f64))).collect();
    let mut cands: Vec<f64> = Vec::new();
    for k in 0..n {
        let (s0, s1) = (sides[k], sides[(k + 1) % n]);
        if s0 == 0 {
            cands.push(theta(k as f64));
        } else if s1 != 0 && s0 != s1 {
            // The sign flips inside the cell; J is upper semicontinuous, so the
            // limit point is orthogonal to x.
            let (mut a, mut b) = (theta(k as f64), theta(k as f64 + 1.0));
            for _ in 0..60 {
                let m = 0.5 * (a + b);
                match side(m) {
                    0 => {
                        a = m;
                        b = m;
                        break;
                    }
                    s if s == s0 => a = m,
                    _ => b = m,
                }
            }
            cands.push(0.5 * (a + b));
        }
    }
    let value = |t: f64| eps_b_f64(space, x, &y_at(t));
    let mut best = argmax(cands.iter().map(|&t| Some((value(t), t))))
        .expect("every planar unit vector is orthogonal to some direction");
    let feasible = |t: f64| (side(t) == 0).then(|| value(t));
    let step = std::f64::consts::TAU / n as f64;
    if let Some((t, v)) = refine_max(
        &feasible,
        best.1 - step,
        best.1 + step,
        2 * cfg.factor,
        cfg.refine,
        cfg.factor,
    ) {
        if v > best.0 {
            best = (v, t);
        }
    }
    (best.0, y_at(best.1))
}

/// Sampled `sup { ε*_B(y, x) : x ⊥ y }` over a planar sphere, with `(x, y)`.
pub fn global_c_sampled(space: &dyn NormedSpace<f64>, cfg: &SampleConfig) -> (f64, Vec<f64>, Vec<f64>) {
    let inner = cfg.inner();
    let at = |t: f64| -> Option<f64> {
        let x = sphere_point_2d(space, t).to_vec();
        Some(left_sup(space, &x, &inner).0)
    };
    let (t, _) = refine_max(
        &at,
        0.0,
        std::f64::consts::TAU,
        cfg.samples,
        cfg.refine,
        cfg.factor,
    )
    .expect("feasible everywhere");
    let x = sphere_point_2d(space, t).to_vec();
    let (v, y) = left_sup(space, &x, &inner);
    (v, x, y)
}

/// `sup over y ∈ x^⊥ ∩ S_X of ε*_D(y, x)` for a planar unit `x`.
fn d_at_planar(space: &dyn NormedSpace<f64>, x: &[f64], inner: &SampleConfig) -> (f64, Vec<f64>) {
    let (a, b) = planar_kernel_arc(space, x);
    if linalg::approx_eq(&a, &b, 1e-15) {
        let y = normalize(space, &a);
        return (eps_d_f64(space, &y, x), y);
    }
    let f = |t: f64| Some(eps_d_f64(space, &arc_point(space, &a, &b, t), x));
    let (t, v) = refine_max(&f, 0.0, 1.0, inner.samples, inner.refine, inner.factor)
        .expect("the arc is feasible everywhere");
    (v, arc_point(space, &a, &b, t))
}

/// Sampled `sup { ε*_D(y, x) : x ⊥ y }` with the maximizing pair `(x, y)`.
/// A lower bound on the true supremum.
pub fn global_d_sampled(
    space: &dyn NormedSpace<f64>,
    cfg: &SampleConfig,
) -> Result<(f64, Vec<f64>, Vec<f64>)> {
    let inner = cfg.inner();
    let vertices: Vec<Vec<f64>> = space
        .polytope()
        .map(|p| p.vertices().to_vec())
        .unwrap_or_default();
    if space.dim() == 2 {
        let at = |t: f64| Some(d_at_planar(space, &sphere_point_2d(space, t), &inner).0);
        let (t, v) = refine_max(
            &at,
            0.0,
            std::f64::consts::TAU,
            cfg.samples,
            cfg.refine,
            cfg.factor,
        )
        .expect("feasible everywhere");
        let mut best = {
            let x = sphere_point_2d(space, t).to_vec();
            let (_, y) = d_at_planar(space, &x, &inner);
            (v, x, y)
        };
        for x in vertices {
            let (v, y) = d_at_planar(space, &x, &inner);
            if v > best.0 {
                best = (v, x, y);
            }
        }
        return Ok(best);
    }
    let dim = space.dim();
    let xs: Vec<Vec<f64>> = if dim == 3 {
        fibonacci_sphere(cfg.samples)
            .iter()
            .map(|p| normalize(space, p))
            .collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        random_directions(dim, cfg.samples, &mut rng)
            .iter()
            .map(|p| normalize(space, p))
            .collect()
    };
    let per_x = SampleConfig {
        samples: 32,
        refine: 0,
        ..*cfg
    };
    let results: Vec<Option<(f64, Pair)>> = vertices
        .into_iter()
        .chain(xs)
        .enumerate()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(i, x)| {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(i as u64));
            let mut best: Option<(f64, Vec<f64>)> = None;
            for g in space.support_generators(&x) {
                let basis = orthonormal_kernel(&[g], dim);
                let f = |c: &[f64]| eps_d_f64(space, &normalize(space, &combine(&basis, c)), &x);
                let (v, c) = sphere_max(basis.len(), &f, &per_x, &mut rng);
                if best.as_ref().is_none_or(|b| v > b.0) {
                    best = Some((v, normalize(space, &combine(&basis, &c))));
                }
            }
            best.map(|(v, y)| (v, (x, y)))
        })
        .collect();
    let (v, (x, y)) = argmax(results).ok_or_else(|| Error::Degenerate("no samples".into()))?;
    Ok((v, x, y))
}
