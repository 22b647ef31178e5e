//! Exact nonnegative rational weights.
//!
//! Every verdict in this crate hinges on strict inequalities between sums of
//! weights, so weights are arbitrary-precision rationals and never touch
//! floating point.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A nonnegative exact rational number.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(BigRational);

impl Weight {
    pub fn zero() -> Self {
        Weight(BigRational::zero())
    }

    pub fn one() -> Self {
        Weight(BigRational::one())
    }

    pub fn from_integer(value: u64) -> Self {
        Weight(BigRational::from_integer(BigInt::from(value)))
    }

    /// `numer / denom`; fails on a zero denominator.
    pub fn from_ratio(numer: u64, denom: u64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::InvalidWeight(format!("{numer}/0")));
        }
        Ok(Weight(BigRational::new(
            BigInt::from(numer),
            BigInt::from(denom),
        )))
    }

    /// Wraps a rational, rejecting negative values.
    pub fn new(value: BigRational) -> Result<Self> {
        if value.is_negative() {
            return Err(Error::NegativeWeight(value.to_string()));
        }
        Ok(Weight(value))
    }

    /// Clamps negative rationals to zero.
    pub fn clamped(value: BigRational) -> Self {
        if value.is_negative() {
            Weight::zero()
        } else {
            Weight(value)
        }
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }

    pub fn into_rational(self) -> BigRational {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// `self - rhs` if the result is nonnegative.
    pub fn checked_sub(&self, rhs: &Weight) -> Option<Weight> {
        if self >= rhs {
            Some(Weight(&self.0 - &rhs.0))
        } else {
            None
        }
    }

    /// Divides by a positive count, e.g. `delta / (n + 1)`.
    pub fn div_count(&self, count: usize) -> Weight {
        assert!(count > 0, "division by zero count");
        Weight(&self.0 / BigRational::from_integer(BigInt::from(count)))
    }

    pub fn mul_count(&self, count: usize) -> Weight {
        Weight(&self.0 * BigRational::from_integer(BigInt::from(count)))
    }

    /// Lossy approximation, for display only.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl Default for Weight {
    fn default() -> Self {
        Weight::zero()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Weight {
    type Err = Error;

    /// Accepts `7`, `2.25` and `3/4`. A leading `-` is reported as a
    /// negative weight rather than a malformed one.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let invalid = || Error::InvalidWeight(s.to_string());
        if let Some(rest) = s.strip_prefix('-') {
            let magnitude: Weight = rest.parse().map_err(|_| invalid())?;
            if magnitude.is_zero() {
                return Ok(magnitude);
            }
            return Err(Error::NegativeWeight(s.to_string()));
        }
        let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
        if let Some((p, q)) = s.split_once('/') {
            if !digits(p) || !digits(q) {
                return Err(invalid());
            }
            let p: BigUint = p.parse().map_err(|_| invalid())?;
            let q: BigUint = q.parse().map_err(|_| invalid())?;
            if q.is_zero() {
                return Err(invalid());
            }
            return Ok(Weight(BigRational::new(p.into(), q.into())));
        }
        let (int_part, frac_part) = match s.split_once('.') {
            Some((i, f)) => (i, f),
            None => (s, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(invalid());
        }
        if (!int_part.is_empty() && !digits(int_part))
            || (!frac_part.is_empty() && !digits(frac_part))
        {
            return Err(invalid());
        }
        let mantissa: BigUint = format!("{int_part}{frac_part}")
            .parse()
            .map_err(|_| invalid())?;
        let scale = num_traits::pow(BigUint::from(10u32), frac_part.len());
        Ok(Weight(BigRational::new(mantissa.into(), scale.into())))
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        Weight(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a Weight> for &'a Weight {
    type Output = Weight;
    fn add(self, rhs: &'a Weight) -> Weight {
        Weight(&self.0 + &rhs.0)
    }
}

impl AddAssign<&Weight> for Weight {
    fn add_assign(&mut self, rhs: &Weight) {
        self.0 += &rhs.0;
    }
}

impl AddAssign for Weight {
    fn add_assign(&mut self, rhs: Weight) {
        self.0 += rhs.0;
    }
}

impl<'a> Mul<&'a Weight> for &'a Weight {
    type Output = Weight;
    fn mul(self, rhs: &'a Weight) -> Weight {
        Weight(&self.0 * &rhs.0)
    }
}

impl Sum for Weight {
    fn sum<I: Iterator<Item = Weight>>(iter: I) -> Weight {
        iter.fold(Weight::zero(), |acc, w| acc + w)
    }
}

impl<'a> Sum<&'a Weight> for Weight {
    fn sum<I: Iterator<Item = &'a Weight>>(iter: I) -> Weight {
        let mut acc = Weight::zero();
        for w in iter {
            acc += w;
        }
        acc
    }
}

impl From<u64> for Weight {
    fn from(value: u64) -> Self {
        Weight::from_integer(value)
    }
}
