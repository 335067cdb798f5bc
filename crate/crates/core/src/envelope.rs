//! Exact minimization of an upper envelope of lines `λ ↦ max_i (a_i + b_i λ)`.
//!
//! The value is obtained from the dual of `min t s.t. t >= a_i + b_i λ`: its
//! vertices use either one zero-slope line or two lines of opposite slope.

use std::cmp::Ordering;

use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
pub struct EnvelopeMin<S> {
    /// Minimizer of smallest absolute value.
    pub lambda: S,
    pub value: S,
    /// Minimizer interval `[lo, hi]`; `None` means unbounded on that side.
    pub lo: Option<S>,
    pub hi: Option<S>,
}

/// Returns `None` when the envelope is unbounded below.
pub fn minimize<S: Scalar>(lines: &[(S, S)]) -> Option<EnvelopeMin<S>> {
    // Keep only the highest intercept per slope.
    let mut by_slope: Vec<(S, S)> = Vec::new();
    {
        let mut sorted: Vec<&(S, S)> = lines.iter().collect();
        sorted.sort_by(|p, q| p.1.partial_cmp(&q.1).unwrap_or(Ordering::Equal));
        for (a, b) in sorted {
            match by_slope.last_mut() {
                Some((la, lb)) if lb == b => {
                    if a > la {
                        *la = a.clone();
                    }
                }
                _ => by_slope.push((a.clone(), b.clone())),
            }
        }
    }
    let neg: Vec<&(S, S)> = by_slope.iter().filter(|l| l.1.is_negative()).collect();
    let pos: Vec<&(S, S)> = by_slope.iter().filter(|l| l.1.is_positive()).collect();
    let flat = by_slope.iter().find(|l| l.1.is_zero());
    if flat.is_none() && (neg.is_empty() || pos.is_empty()) {
        return None;
    }
    let mut value: Option<S> = flat.map(|l| l.0.clone());
    for (ai, bi) in &neg {
        for (aj, bj) in &pos {
            let h = (ai.clone() * bj.clone() - aj.clone() * bi.clone()) / (bj.clone() - bi.clone());
            if value.as_ref().is_none_or(|v| h > *v) {
                value = Some(h);
            }
        }
    }
    let value = value?;
    let lo = neg
        .iter()
        .map(|(a, b)| (value.clone() - a.clone()) / b.clone())
        .fold(None, |m: Option<S>, t| match m {
            Some(m) if m >= t => Some(m),
            _ => Some(t),
        });
    let hi = pos
        .iter()
        .map(|(a, b)| (value.clone() - a.clone()) / b.clone())
        .fold(None, |m: Option<S>, t| match m {
            Some(m) if m <= t => Some(m),
            _ => Some(t),
        });
    let lambda = match (&lo, &hi) {
        (Some(l), _) if l.is_positive() => l.clone(),
        (_, Some(h)) if h.is_negative() => h.clone(),
        _ => S::zero(),
    };
    Some(EnvelopeMin {
        lambda,
        value,
        lo,
        hi,
    })
}
