//! Number types the simplex and the LP evaluator can run over.
//!
//! The same pivoting code is instantiated with exact big rationals, where
//! every comparison is against zero, and with machine floats, where
//! comparisons go through a pivot tolerance.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, Signed, ToPrimitive, Zero};

pub use crate::rational::Rational;

pub trait Scalar: Clone + Debug + Display + PartialOrd + Num + Signed + Send + Sync {
    /// Whether arithmetic is exact: comparisons are against zero, not a tolerance.
    const EXACT: bool;

    fn from_rational(r: &Rational) -> Self;

    fn to_f64(&self) -> f64;

    /// Magnitudes at or below this count as zero.
    fn tolerance() -> Self;

    fn from_i64(v: i64) -> Self;

    fn is_pos(&self) -> bool {
        *self > Self::tolerance()
    }

    fn is_neg(&self) -> bool {
        *self < -Self::tolerance()
    }

    fn is_negligible(&self) -> bool {
        !self.is_pos() && !self.is_neg()
    }
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn to_f64(&self) -> f64 {
        Rational::to_f64(self)
    }

    fn tolerance() -> Self {
        Rational::zero()
    }

    fn from_i64(v: i64) -> Self {
        Rational::from_integer(v)
    }

    fn is_pos(&self) -> bool {
        self.is_positive()
    }

    fn is_neg(&self) -> bool {
        self.is_negative()
    }

    fn is_negligible(&self) -> bool {
        self.is_zero()
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_rational(r: &Rational) -> Self {
        r.to_f64()
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn tolerance() -> Self {
        1e-9
    }

    fn from_i64(v: i64) -> Self {
        v as f64
    }
}

impl Scalar for f32 {
    const EXACT: bool = false;

    fn from_rational(r: &Rational) -> Self {
        r.to_f64() as f32
    }

    fn to_f64(&self) -> f64 {
        f64::from(*self)
    }

    fn tolerance() -> Self {
        1e-5
    }

    fn from_i64(v: i64) -> Self {
        v as f32
    }
}

/// Converts without overflowing when numerator and denominator are both huge.
pub fn big_ratio_to_f64(r: &BigRational) -> f64 {
    if let (Some(n), Some(d)) = (r.numer().to_f64(), r.denom().to_f64()) {
        if n.is_finite() && d.is_finite() && d != 0.0 {
            return n / d;
        }
    }
    let shift = r.numer().bits().max(r.denom().bits()).saturating_sub(1000);
    let n = (r.numer() >> shift).to_f64().unwrap_or(f64::NAN);
    let d = (r.denom() >> shift).to_f64().unwrap_or(f64::NAN);
    n / d
}

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(num, den)
}

/// The exact value of a finite float.
pub fn rational_from_f64(f: f64) -> Option<Rational> {
    BigRational::from_float(f).map(Rational::from_big)
}

/// Renders `r` as a decimal with `places` digits after the point, rounding
/// half to even.
pub fn format_decimal(r: &Rational, places: usize) -> String {
    let scale = BigInt::from(10u32).pow(places as u32);
    let scaled = r.to_big() * BigRational::from_integer(scale);
    let floor = scaled.floor();
    let frac = &scaled - &floor;
    let half = BigRational::new(1.into(), 2.into());
    let mut digits = floor.to_integer();
    if frac > half || (frac == half && digits.clone() % 2 != BigInt::zero()) {
        digits += 1;
    }
    let negative = digits.is_negative();
    let abs = digits.abs().to_string();
    let abs = if abs.len() <= places {
        format!("{}{}", "0".repeat(places + 1 - abs.len()), abs)
    } else {
        abs
    };
    let (int_part, frac_part) = abs.split_at(abs.len() - places);
    let sign = if negative { "-" } else { "" };
    if places == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac_part}")
    }
}

/// Exact decimal expansion when the denominator has only factors 2 and 5.
pub fn terminating_decimal(r: &Rational) -> Option<String> {
    let mut d = r.denom();
    let two = BigInt::from(2);
    let five = BigInt::from(5);
    let (mut twos, mut fives) = (0usize, 0usize);
    while (&d % &two).is_zero() {
        d /= &two;
        twos += 1;
    }
    while (&d % &five).is_zero() {
        d /= &five;
        fives += 1;
    }
    if d != BigInt::from(1) {
        return None;
    }
    let s = format_decimal(r, twos.max(fives));
    if s.contains('.') {
        Some(s.trim_end_matches('0').trim_end_matches('.').to_string())
    } else {
        Some(s)
    }
}
