//! Exact rational scalars.
//!
//! Every coordinate, period and offset in the library is a [`Scalar`]. The
//! arithmetic is checked: an overflow of the underlying 128-bit integers
//! panics instead of silently producing a wrong value.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid rational `{0}`")]
pub struct ParseScalarError(pub String);

/// An exact rational number with a positive, coprime denominator.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scalar(Ratio<i128>);

impl Scalar {
    pub const ZERO: Scalar = Scalar(Ratio::new_raw(0, 1));
    pub const ONE: Scalar = Scalar(Ratio::new_raw(1, 1));
    pub const HALF: Scalar = Scalar(Ratio::new_raw(1, 2));

    /// Builds `numer / denom`, normalizing sign and common factors.
    ///
    /// Panics when `denom` is zero.
    pub fn new(numer: i128, denom: i128) -> Self {
        assert!(denom != 0, "zero denominator");
        Scalar(Ratio::new(numer, denom))
    }

    pub fn integer(n: i128) -> Self {
        Scalar(Ratio::from_integer(n))
    }

    pub fn numer(&self) -> i128 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i128 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(self) -> Self {
        Scalar(self.0.abs())
    }

    pub fn floor(self) -> i128 {
        Integer::div_floor(&self.numer(), &self.denom())
    }

    pub fn ceil(self) -> i128 {
        Integer::div_ceil(&self.numer(), &self.denom())
    }

    /// Nearest integer, ties rounded up (toward +∞).
    pub fn round_half_up(self) -> i128 {
        (self + Scalar::HALF).floor()
    }

    /// Nearest integer, ties rounded away from zero. Odd under negation.
    pub fn round_half_away(self) -> i128 {
        if self.is_negative() {
            -(-self).round_half_up()
        } else {
            self.round_half_up()
        }
    }

    /// Euclidean remainder: the unique `r` in `[0, |m|)` with `self - r` an
    /// integer multiple of `m`. Panics if `m` is zero.
    pub fn rem_euclid(self, m: Scalar) -> Scalar {
        assert!(!m.is_zero(), "remainder modulo zero");
        let m = m.abs();
        let q = (self / m).floor();
        self - m * Scalar::integer(q)
    }

    /// True when `self` is an integer multiple of `m` (only zero is a
    /// multiple of zero).
    pub fn is_multiple_of(self, m: Scalar) -> bool {
        if m.is_zero() {
            self.is_zero()
        } else {
            (self / m).is_integer()
        }
    }

    /// Non-negative generator of the additive subgroup spanned by `a` and `b`:
    /// `gcd(p/q, r/s) = gcd(ps, rq) / (qs)`. `gcd(0, 0) = 0`.
    pub fn gcd(a: Scalar, b: Scalar) -> Scalar {
        let (p, q) = (a.numer(), a.denom());
        let (r, s) = (b.numer(), b.denom());
        let ps = p.checked_mul(s).expect("rational overflow");
        let rq = r.checked_mul(q).expect("rational overflow");
        let qs = q.checked_mul(s).expect("rational overflow");
        Scalar::new(ps.gcd(&rq), qs)
    }

    pub fn to_f64(self) -> f64 {
        self.numer() as f64 / self.denom() as f64
    }

    /// Closest rational with the given denominator.
    pub fn from_f64_rounded(value: f64, denom: i128) -> Scalar {
        let scaled = value * denom as f64;
        let n = if scaled < 0.0 {
            -((-scaled + 0.5).floor())
        } else {
            (scaled + 0.5).floor()
        };
        Scalar::new(n as i128, denom)
    }

    pub fn min(self, other: Scalar) -> Scalar {
        std::cmp::min(self, other)
    }

    pub fn max(self, other: Scalar) -> Scalar {
        std::cmp::max(self, other)
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::ZERO
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::integer(n as i128)
    }
}

impl From<i32> for Scalar {
    fn from(n: i32) -> Self {
        Scalar::integer(n as i128)
    }
}

impl From<u32> for Scalar {
    fn from(n: u32) -> Self {
        Scalar::integer(n as i128)
    }
}

impl From<usize> for Scalar {
    fn from(n: usize) -> Self {
        Scalar::integer(n as i128)
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        Scalar(self.0.checked_add(&rhs.0).expect("rational overflow"))
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        Scalar(self.0.checked_sub(&rhs.0).expect("rational overflow"))
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        Scalar(self.0.checked_mul(&rhs.0).expect("rational overflow"))
    }
}

impl Div for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        assert!(!rhs.is_zero(), "division by zero");
        Scalar(self.0.checked_div(&rhs.0).expect("rational overflow"))
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self = *self + rhs;
    }
}

impl SubAssign for Scalar {
    fn sub_assign(&mut self, rhs: Scalar) {
        *self = *self - rhs;
    }
}

impl Mul<i128> for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: i128) -> Scalar {
        self * Scalar::integer(rhs)
    }
}

impl Div<i128> for Scalar {
    type Output = Scalar;
    fn div(self, rhs: i128) -> Scalar {
        self / Scalar::integer(rhs)
    }
}

impl PartialEq<i128> for Scalar {
    fn eq(&self, other: &i128) -> bool {
        self.is_integer() && self.numer() == *other
    }
}

impl PartialOrd<i128> for Scalar {
    fn partial_cmp(&self, other: &i128) -> Option<Ordering> {
        Some(self.cmp(&Scalar::integer(*other)))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Scalar {
    type Err = ParseScalarError;

    /// Accepts `n`, `-n`, `p/q` and `-p/q`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseScalarError(s.to_string());
        let t = s.trim();
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let num: i128 = num.parse().map_err(|_| err())?;
        let den: i128 = den.parse().map_err(|_| err())?;
        if den == 0 {
            return Err(err());
        }
        Ok(Scalar::new(num, den))
    }
}
