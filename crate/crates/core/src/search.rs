//! Univariate searches used by the floating-point paths.

/// Result of a one-dimensional minimization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Min1d {
    pub x: f64,
    pub value: f64,
}

const INV_PHI: f64 = 0.618_033_988_749_894_8;

/// Golden-section search for a unimodal `f` on `[lo, hi]`, stopping when the
/// bracket is shorter than `tol`.
pub fn golden_min(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> Min1d {
    let mut a = hi - INV_PHI * (hi - lo);
    let mut b = lo + INV_PHI * (hi - lo);
    let (mut fa, mut fb) = (f(a), f(b));
    while hi - lo > tol {
        if fa <= fb {
            hi = b;
            b = a;
            fb = fa;
            a = hi - INV_PHI * (hi - lo);
            fa = f(a);
        } else {
            lo = a;
            a = b;
            fa = fb;
            b = lo + INV_PHI * (hi - lo);
            fb = f(b);
        }
    }
    let mut best = Min1d {
        x: 0.5 * (lo + hi),
        value: f(0.5 * (lo + hi)),
    };
    for (x, v) in [(a, fa), (b, fb)] {
        if v < best.value {
            best = Min1d { x, value: v };
        }
    }
    best
}

/// Minimizes a convex `f` on `[lo, hi]` and moves the minimizer toward 0 as far
/// as the value allows, so flat minima resolve to the point of smallest |x|.
pub fn convex_min_toward_zero(f: impl Fn(f64) -> f64, lo: f64, hi: f64, tol: f64) -> Min1d {
    let m = golden_min(&f, lo, hi, tol);
    let slack = 1e-14 * m.value.abs().max(1.0);
    let level = m.value + slack;
    if lo <= 0.0 && 0.0 <= hi {
        let f0 = f(0.0);
        if f0 <= level {
            return Min1d {
                x: 0.0,
                value: f0.min(m.value),
            };
        }
    }
    // The sublevel set is an interval containing m.x; find its end nearest 0.
    let target = if lo > 0.0 {
        lo
    } else if hi < 0.0 {
        hi
    } else {
        0.0
    };
    let (mut inside, mut outside) = (m.x, target);
    if f(outside) <= level {
        return Min1d {
            x: outside,
            value: m.value,
        };
    }
    while (inside - outside).abs() > tol {
        let mid = 0.5 * (inside + outside);
        if f(mid) <= level {
            inside = mid;
        } else {
            outside = mid;
        }
    }
    Min1d {
        x: inside,
        value: m.value,
    }
}
