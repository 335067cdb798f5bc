//! Small dense linear algebra over any [`Scalar`].

use std::cmp::Ordering;

use crate::scalar::Scalar;

pub fn dot<S: Scalar>(a: &[S], b: &[S]) -> S {
    a.iter()
        .zip(b)
        .fold(S::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

pub fn add<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
}

pub fn sub<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

pub fn scale<S: Scalar>(a: &[S], k: &S) -> Vec<S> {
    a.iter().map(|x| x.clone() * k.clone()).collect()
}

pub fn neg<S: Scalar>(a: &[S]) -> Vec<S> {
    a.iter().map(|x| -x.clone()).collect()
}

/// `a + k * b`
pub fn axpy<S: Scalar>(a: &[S], k: &S, b: &[S]) -> Vec<S> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.clone() + k.clone() * y.clone())
        .collect()
}

pub fn is_zero<S: Scalar>(a: &[S], tol: f64) -> bool {
    a.iter().all(|x| x.sign_tol(tol) == Ordering::Equal)
}

pub fn approx_eq<S: Scalar>(a: &[S], b: &[S], tol: f64) -> bool {
    a.len() == b.len()
        && a.iter()
            .zip(b)
            .all(|(x, y)| (x.clone() - y.clone()).sign_tol(tol) == Ordering::Equal)
}

pub fn to_f64<S: Scalar>(a: &[S]) -> Vec<f64> {
    a.iter().map(S::to_f64).collect()
}

pub fn from_f64<S: Scalar>(a: &[f64]) -> Vec<S> {
    a.iter().map(|&x| S::from_f64(x)).collect()
}

/// Centroid of a nonempty list of points.
pub fn centroid<S: Scalar>(points: &[&[S]]) -> Vec<S> {
    let n = S::from_usize(points.len());
    let mut acc = vec![S::zero(); points[0].len()];
    for p in points {
        for (a, x) in acc.iter_mut().zip(p.iter()) {
            *a = a.clone() + x.clone();
        }
    }
    acc.into_iter().map(|a| a / n.clone()).collect()
}

/// Row-reduces `m` in place and returns the pivot columns.
fn row_reduce<S: Scalar>(m: &mut [Vec<S>], tol: f64) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        // Largest magnitude pivot keeps the float path stable; any nonzero works exactly.
        let mut best: Option<usize> = None;
        for i in r..rows {
            if m[i][c].sign_tol(tol) != Ordering::Equal {
                match best {
                    Some(b) if S::EXACT || m[i][c].abs() <= m[b][c].abs() => {}
                    _ => best = Some(i),
                }
                if S::EXACT {
                    break;
                }
            }
        }
        let Some(p) = best else { continue };
        m.swap(r, p);
        let piv = m[r][c].clone();
        for x in m[r].iter_mut() {
            *x = x.clone() / piv.clone();
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let k = m[i][c].clone();
                let pivot_row = m[r].clone();
                for (x, p) in m[i].iter_mut().zip(&pivot_row) {
                    *x = x.clone() - k.clone() * p.clone();
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<S: Scalar>(rows: &[Vec<S>], tol: f64) -> usize {
    let mut m = rows.to_vec();
    row_reduce(&mut m, tol).len()
}

/// Solves the square system `a x = b`, or `None` when `a` is singular.
pub fn solve<S: Scalar>(a: &[Vec<S>], b: &[S], tol: f64) -> Option<Vec<S>> {
    let n = a.len();
    let mut m: Vec<Vec<S>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = row_reduce(&mut m, tol);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &c)| i != c) {
        return None;
    }
    Some(m.into_iter().map(|r| r[n].clone()).collect())
}

/// Basis of the null space `{x : rows · x = 0}`.
pub fn null_space<S: Scalar>(rows: &[Vec<S>], dim: usize, tol: f64) -> Vec<Vec<S>> {
    if rows.is_empty() {
        return (0..dim)
            .map(|i| (0..dim).map(|j| if i == j { S::one() } else { S::zero() }).collect())
            .collect();
    }
    let mut m = rows.to_vec();
    let pivots = row_reduce(&mut m, tol);
    let free: Vec<usize> = (0..dim).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![S::zero(); dim];
            v[f] = S::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[r][f].clone();
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;
    use num_traits::Zero;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    #[test]
    fn solves_facet_system_exactly() {
        // f·(2,2) = 1, f·(2,-2) = 1
        let a = vec![vec![q(2, 1), q(2, 1)], vec![q(2, 1), q(-2, 1)]];
        let f = solve(&a, &[q(1, 1), q(1, 1)], 0.0).unwrap();
        assert_eq!(f, vec![q(1, 2), q(0, 1)]);
    }

    #[test]
    fn singular_system_has_no_solution() {
        let a = vec![vec![q(1, 1), q(2, 1)], vec![q(2, 1), q(4, 1)]];
        assert!(solve(&a, &[q(1, 1), q(1, 1)], 0.0).is_none());
        assert_eq!(rank(&a, 0.0), 1);
    }

    #[test]
    fn null_space_is_orthogonal_to_rows() {
        let rows = vec![vec![q(1, 1), q(1, 1), q(0, 1)]];
        let ns = null_space(&rows, 3, 0.0);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(dot(&rows[0], v).is_zero());
        }
    }

    #[test]
    fn float_rank_uses_tolerance() {
        let a = vec![vec![1.0, 1.0], vec![1.0, 1.0 + 1e-13]];
        assert_eq!(rank(&a, 1e-9), 1);
        assert_eq!(rank(&a, 0.0), 2);
    }
}
