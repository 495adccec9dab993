//! Number types shared by the polynomial and LP code.
//!
//! Everything that must be trustworthy as a proof (basis changes, linearization
//! coefficients, certificates with integral eigenvalues) runs over
//! [`BigRational`]. Irrational spectra fall back to `f64` with explicit
//! tolerances.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + PartialOrd
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    /// True when arithmetic is exact and tolerances collapse to zero.
    const EXACT: bool;

    fn from_i64(n: i64) -> Self;

    fn to_f64(&self) -> f64;

    fn abs_value(&self) -> Self;

    /// The tolerance `tol` expressed in this type: zero for exact types.
    fn slack(tol: f64) -> Self;

    /// Converts a numerically computed adjacency eigenvalue; exact types only
    /// accept values within `tol` of an integer.
    fn from_eigenvalue(x: f64, tol: f64) -> Option<Self>;
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_i64(n: i64) -> Self {
        n as f64
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn abs_value(&self) -> Self {
        self.abs()
    }

    fn slack(tol: f64) -> Self {
        tol
    }

    fn from_eigenvalue(x: f64, _tol: f64) -> Option<Self> {
        Some(x)
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn abs_value(&self) -> Self {
        self.abs()
    }

    fn slack(_tol: f64) -> Self {
        BigRational::zero()
    }

    fn from_eigenvalue(x: f64, tol: f64) -> Option<Self> {
        snap_to_integer(x, tol)
    }
}

/// Snaps a numerically computed eigenvalue to an exact integer.
///
/// Eigenvalues of an integer matrix are algebraic integers, so a rational
/// eigenvalue is always an integer. Returns `None` when `x` is farther than
/// `tol` from every integer.
pub fn snap_to_integer(x: f64, tol: f64) -> Option<BigRational> {
    let r = x.round();
    if (x - r).abs() <= tol && r.is_finite() {
        Some(BigRational::from_integer(BigInt::from(r as i64)))
    } else {
        None
    }
}

/// Parses a decimal literal such as `-2`, `2.9` or `1e-3` into an exact rational.
pub fn parse_decimal(text: &str) -> Option<BigRational> {
    let s = text.trim();
    if s.is_empty() {
        return None;
    }
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => (&s[..pos], s[pos + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = match digits.split_once('.') {
        Some((a, b)) => (a, b),
        None => (digits, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let all: String = format!("{int_part}{frac_part}");
    let numer: BigInt = if all.is_empty() { BigInt::zero() } else { all.parse().ok()? };
    let scale = exponent - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let mut value = BigRational::from_integer(numer);
    if scale >= 0 {
        value *= BigRational::from_integer(num_traits::pow(ten, scale as usize));
    } else {
        value /= BigRational::from_integer(num_traits::pow(ten, (-scale) as usize));
    }
    Some(if negative { -value } else { value })
}
