//! Dense two-phase simplex with Bland's rule.
//!
//! Problems here are tiny (a handful of face vertices plus one slack), so a
//! dense tableau is the simplest correct choice. Over [`Rational`](crate::Rational)
//! every pivot is exact and Bland's rule guarantees termination.

use std::cmp::Ordering;

use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

#[derive(Debug, Clone)]
pub struct Constraint<S> {
    pub coeffs: Vec<S>,
    pub rel: Relation,
    pub rhs: S,
}

impl<S> Constraint<S> {
    pub fn new(coeffs: Vec<S>, rel: Relation, rhs: S) -> Self {
        Constraint { coeffs, rel, rhs }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome<S> {
    Optimal { x: Vec<S>, value: S },
    Infeasible,
    Unbounded,
}

impl<S> LpOutcome<S> {
    pub fn optimal(self) -> Option<(Vec<S>, S)> {
        match self {
            LpOutcome::Optimal { x, value } => Some((x, value)),
            _ => None,
        }
    }
}

struct Tableau<S> {
    rows: Vec<Vec<S>>,
    basis: Vec<usize>,
    ncols: usize,
    tol: f64,
}

impl<S: Scalar> Tableau<S> {
    fn rhs(&self, i: usize) -> &S {
        &self.rows[i][self.ncols]
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let piv = self.rows[r][c].clone();
        for x in self.rows[r].iter_mut() {
            *x = x.clone() / piv.clone();
        }
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][c].is_zero() {
                continue;
            }
            let k = self.rows[i][c].clone();
            for j in 0..=self.ncols {
                let d = k.clone() * self.rows[r][j].clone();
                self.rows[i][j] = self.rows[i][j].clone() - d;
            }
            if !S::EXACT {
                self.rows[i][c] = S::zero();
            }
        }
        self.basis[r] = c;
    }

    fn reduced_cost(&self, cost: &[S], j: usize) -> S {
        let mut rc = cost[j].clone();
        for (i, &b) in self.basis.iter().enumerate() {
            if !cost[b].is_zero() {
                rc = rc - cost[b].clone() * self.rows[i][j].clone();
            }
        }
        rc
    }

    /// Maximizes `cost · x` over columns `0..allowed`; returns false if unbounded.
    fn optimize(&mut self, cost: &[S], allowed: usize) -> bool {
        loop {
            let entering = (0..allowed).find(|&j| {
                !self.basis.contains(&j)
                    && self.reduced_cost(cost, j).sign_tol(self.tol) == Ordering::Greater
            });
            let Some(c) = entering else { return true };
            let mut leave: Option<(usize, S)> = None;
            for i in 0..self.rows.len() {
                if self.rows[i][c].sign_tol(self.tol) != Ordering::Greater {
                    continue;
                }
                let ratio = self.rhs(i).clone() / self.rows[i][c].clone();
                leave = match leave {
                    None => Some((i, ratio)),
                    Some((bi, br)) => match (ratio.clone() - br.clone()).sign_tol(self.tol) {
                        Ordering::Less => Some((i, ratio)),
                        Ordering::Equal if self.basis[i] < self.basis[bi] => Some((i, ratio)),
                        _ => Some((bi, br)),
                    },
                };
            }
            let Some((r, _)) = leave else { return false };
            self.pivot(r, c);
        }
    }

    fn objective(&self, cost: &[S]) -> S {
        self.basis
            .iter()
            .enumerate()
            .fold(S::zero(), |acc, (i, &b)| acc + cost[b].clone() * self.rhs(i).clone())
    }
}

/// Maximizes `c · x` subject to `constraints` and `x >= 0`.
pub fn maximize<S: Scalar>(c: &[S], constraints: &[Constraint<S>], tol: f64) -> LpOutcome<S> {
    let n = c.len();
    let m = constraints.len();
    let n_slack = constraints.iter().filter(|k| k.rel != Relation::Eq).count();
    // Normalize rows to nonnegative right-hand sides first.
    let rows: Vec<(Vec<S>, Relation, S)> = constraints
        .iter()
        .map(|k| {
            if k.rhs.is_negative() {
                let rel = match k.rel {
                    Relation::Le => Relation::Ge,
                    Relation::Ge => Relation::Le,
                    Relation::Eq => Relation::Eq,
                };
                (k.coeffs.iter().map(|a| -a.clone()).collect(), rel, -k.rhs.clone())
            } else {
                (k.coeffs.clone(), k.rel, k.rhs.clone())
            }
        })
        .collect();
    let n_art = rows.iter().filter(|r| r.1 != Relation::Le).count();
    let ncols = n + n_slack + n_art;
    let mut tab = Tableau {
        rows: Vec::with_capacity(m),
        basis: Vec::with_capacity(m),
        ncols,
        tol,
    };
    let (mut s_idx, mut a_idx) = (n, n + n_slack);
    for (coeffs, rel, rhs) in rows {
        let mut row = vec![S::zero(); ncols + 1];
        row[..n].clone_from_slice(&coeffs);
        row[ncols] = rhs;
        match rel {
            Relation::Le => {
                row[s_idx] = S::one();
                tab.basis.push(s_idx);
                s_idx += 1;
            }
            Relation::Ge => {
                row[s_idx] = -S::one();
                s_idx += 1;
                row[a_idx] = S::one();
                tab.basis.push(a_idx);
                a_idx += 1;
            }
            Relation::Eq => {
                row[a_idx] = S::one();
                tab.basis.push(a_idx);
                a_idx += 1;
            }
        }
        tab.rows.push(row);
    }

    let first_art = n + n_slack;
    if n_art > 0 {
        let mut cost1 = vec![S::zero(); ncols];
        for c1 in cost1.iter_mut().skip(first_art) {
            *c1 = -S::one();
        }
        tab.optimize(&cost1, ncols);
        if tab.objective(&cost1).sign_tol(tol) == Ordering::Less {
            return LpOutcome::Infeasible;
        }
        // Drive remaining artificial variables out of the basis where possible.
        for i in 0..tab.rows.len() {
            if tab.basis[i] >= first_art {
                if let Some(j) =
                    (0..first_art).find(|&j| tab.rows[i][j].sign_tol(tol) != Ordering::Equal)
                {
                    tab.pivot(i, j);
                }
            }
        }
    }

    let mut cost2 = vec![S::zero(); ncols];
    cost2[..n].clone_from_slice(c);
    if !tab.optimize(&cost2, first_art) {
        return LpOutcome::Unbounded;
    }
    let mut x = vec![S::zero(); n];
    for (i, &b) in tab.basis.iter().enumerate() {
        if b < n {
            x[b] = tab.rhs(i).clone();
        }
    }
    let value = crate::linalg::dot(c, &x);
    LpOutcome::Optimal { x, value }
}
