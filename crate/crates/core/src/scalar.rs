//! Scalar abstraction shared by the exact (rational) and floating-point paths.
//!
//! Polyhedral spaces with rational data run on [`Rational`]; analytic norms and
//! polygons with irrational vertices run on `f64`. Every comparison goes through
//! [`Scalar::sign_tol`], which is exact for rationals and uses an absolute
//! tolerance for floats.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always kept reduced.
pub type Rational = BigRational;

/// Default absolute tolerance for floating-point comparisons.
pub const DEFAULT_TOL: f64 = 1e-9;

pub trait Scalar:
    Num + Signed + Clone + PartialOrd + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    /// True when arithmetic is exact and tolerances are ignored.
    const EXACT: bool;

    fn from_ratio(num: i64, den: i64) -> Self;

    /// Exact binary expansion for rationals.
    fn from_f64(v: f64) -> Self;

    fn to_f64(&self) -> f64;

    /// Square root when it is representable (perfect squares for rationals).
    fn exact_sqrt(&self) -> Option<Self>;

    /// Report encoding: `"p/q"` for rationals, 17 significant digits for floats.
    fn to_report(&self) -> String;

    /// Parses `"p/q"`, integers and finite decimals such as `"3.5"`.
    fn parse_scalar(s: &str) -> Result<Self>;

    /// Sign of `self` with `|self| <= tol` treated as zero for floats.
    fn sign_tol(&self, tol: f64) -> Ordering;

    fn from_usize(n: usize) -> Self {
        Self::from_ratio(n as i64, 1)
    }
}

pub fn cmp_tol<S: Scalar>(a: &S, b: &S, tol: f64) -> Ordering {
    (a.clone() - b.clone()).sign_tol(tol)
}

pub fn eq_tol<S: Scalar>(a: &S, b: &S, tol: f64) -> bool {
    cmp_tol(a, b, tol) == Ordering::Equal
}

pub fn is_zero_tol<S: Scalar>(a: &S, tol: f64) -> bool {
    a.sign_tol(tol) == Ordering::Equal
}

/// Larger of two scalars (first wins on ties).
pub fn max_of<S: Scalar>(a: S, b: S) -> S {
    if b > a {
        b
    } else {
        a
    }
}

pub fn min_of<S: Scalar>(a: S, b: S) -> S {
    if b < a {
        b
    } else {
        a
    }
}

fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || Error::Parse(format!("malformed rational {s:?}"));
    if t.is_empty() {
        return Err(bad());
    }
    if let Some((num, den)) = t.split_once('/') {
        let n = BigInt::from_str(num.trim()).map_err(|_| bad())?;
        let d = BigInt::from_str(den.trim()).map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((int, frac)) = t.split_once('.') {
        let neg = int.trim_start().starts_with('-');
        let int_digits = int.trim_start_matches(['-', '+']);
        if !frac.chars().all(|c| c.is_ascii_digit())
            || !int_digits.chars().all(|c| c.is_ascii_digit())
            || (int_digits.is_empty() && frac.is_empty())
        {
            return Err(bad());
        }
        let digits = format!("{int_digits}{frac}");
        let n = BigInt::from_str(if digits.is_empty() { "0" } else { &digits }).map_err(|_| bad())?;
        let d = num_traits::pow(BigInt::from(10u32), frac.len());
        let r = Rational::new(n, d);
        return Ok(if neg { -r } else { r });
    }
    let n = BigInt::from_str(t).map_err(|_| bad())?;
    Ok(Rational::from_integer(n))
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn from_ratio(num: i64, den: i64) -> Self {
        Rational::new(BigInt::from(num), BigInt::from(den))
    }

    fn from_f64(v: f64) -> Self {
        <Rational as FromPrimitive>::from_f64(v).expect("finite float")
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn exact_sqrt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let n = self.numer().sqrt();
        let d = self.denom().sqrt();
        if &(&n * &n) == self.numer() && &(&d * &d) == self.denom() {
            Some(Rational::new(n, d))
        } else {
            None
        }
    }

    fn to_report(&self) -> String {
        self.to_string()
    }

    fn parse_scalar(s: &str) -> Result<Self> {
        parse_rational(s)
    }

    fn sign_tol(&self, _tol: f64) -> Ordering {
        self.cmp(&Rational::zero())
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }

    fn from_f64(v: f64) -> Self {
        v
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn exact_sqrt(&self) -> Option<Self> {
        (*self >= 0.0).then(|| self.sqrt())
    }

    fn to_report(&self) -> String {
        // `+ 0.0` folds -0 into 0.
        format!("{:.16e}", self + 0.0)
    }

    fn parse_scalar(s: &str) -> Result<Self> {
        parse_rational(s).map(|r| Scalar::to_f64(&r))
    }

    fn sign_tol(&self, tol: f64) -> Ordering {
        if self.abs() <= tol {
            Ordering::Equal
        } else if *self > 0.0 {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

/// Parses a comma-separated list of scalars such as `"-4/3,1"`.
pub fn parse_vector<S: Scalar>(s: &str) -> Result<Vec<S>> {
    s.split(',').map(S::parse_scalar).collect()
}

pub fn one<S: Scalar>() -> S {
    S::one()
}

pub fn zero<S: Scalar>() -> S {
    S::zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    #[test]
    fn parses_fractions_integers_and_decimals() {
        assert_eq!(Rational::parse_scalar("-4/3").unwrap(), q(-4, 3));
        assert_eq!(Rational::parse_scalar("6/4").unwrap(), q(3, 2));
        assert_eq!(Rational::parse_scalar("7").unwrap(), q(7, 1));
        assert_eq!(Rational::parse_scalar("3.5").unwrap(), q(7, 2));
        assert_eq!(Rational::parse_scalar("-0.25").unwrap(), q(-1, 4));
        assert!(Rational::parse_scalar("1/0").is_err());
        assert!(Rational::parse_scalar("abc").is_err());
        assert!(Rational::parse_scalar("").is_err());
    }

    #[test]
    fn rationals_are_reduced() {
        let r = Rational::parse_scalar("-6/-4").unwrap();
        assert_eq!(r.numer(), &BigInt::from(3));
        assert_eq!(r.denom(), &BigInt::from(2));
    }

    #[test]
    fn report_encoding() {
        assert_eq!(q(8, 7).to_report(), "8/7");
        assert_eq!(q(2, 1).to_report(), "2");
        assert_eq!(0.5f64.to_report(), "5.0000000000000000e-1");
    }

    #[test]
    fn exact_sqrt_of_perfect_squares() {
        assert_eq!(q(9, 4).exact_sqrt(), Some(q(3, 2)));
        assert_eq!(q(3, 4).exact_sqrt(), None);
        assert_eq!(q(-1, 4).exact_sqrt(), None);
    }

    #[test]
    fn tolerant_sign_for_floats_only() {
        assert_eq!(1e-12f64.sign_tol(1e-9), Ordering::Equal);
        assert_eq!(q(1, 1_000_000_000_000).sign_tol(1e-9), Ordering::Greater);
    }

    #[test]
    fn parse_vector_with_negative_entries() {
        let v: Vec<Rational> = parse_vector("-4/3,1").unwrap();
        assert_eq!(v, vec![q(-4, 3), q(1, 1)]);
    }
}
