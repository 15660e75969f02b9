//! Exact non-negative rational numbers.
//!
//! Every score in this crate is a ratio of citation counts, so the whole
//! pipeline runs on exact rationals and only the report layer ever rounds.
//! [`Rational`] wraps an arbitrary-precision ratio and restricts it to the
//! operations that keep scores well defined: addition, multiplication and
//! division. There is deliberately no subtraction; citation counts and
//! expected values never go negative, and keeping the type closed under its
//! operators means a `Rational` is valid by construction.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul};
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Zero};

use crate::error::{Error, Result};

/// An exact rational number `>= 0`.
///
/// Values are always stored in lowest terms, so equality, ordering and
/// hashing all agree with numeric value.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `num / den`. Fails on a zero denominator.
    pub fn new(num: u64, den: u64) -> Result<Self> {
        if den == 0 {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self(BigRational::new(num.into(), den.into())))
    }

    /// Builds a whole number.
    #[must_use]
    pub fn from_integer(n: u64) -> Self {
        Self(BigRational::from_integer(n.into()))
    }

    /// Builds `num / den` from wide machine integers. Internal: the
    /// counterexample search compares word-sized fractions and only widens
    /// to `Rational` when cross-checking the two representations.
    #[cfg(test)]
    pub(crate) fn from_u128_ratio(num: u128, den: u128) -> Self {
        assert!(den > 0, "zero denominator");
        Self(BigRational::new(num.into(), den.into()))
    }

    #[must_use]
    pub fn zero() -> Self {
        Self(BigRational::zero())
    }

    #[must_use]
    pub fn one() -> Self {
        Self(BigRational::one())
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    #[must_use]
    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    /// Numerator in lowest terms.
    #[must_use]
    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    /// Denominator in lowest terms; always positive.
    #[must_use]
    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    /// Multiplicative inverse. Fails for zero.
    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self(self.0.recip()))
    }

    /// Division that hands back `None` instead of panicking on a zero
    /// divisor. Scoring code decides what `x / 0` means (usually via the
    /// zero-over-zero convention) before it ever divides.
    #[must_use]
    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            None
        } else {
            Some(Self(&self.0 / &rhs.0))
        }
    }

    /// Renders the value as a decimal string with `places` digits after the
    /// point, rounding half away from zero: `5/3` becomes `"1.67"` and
    /// `1/8` becomes `"0.13"`.
    #[must_use]
    pub fn to_decimal(&self, places: u32) -> String {
        let scale = BigInt::from(10u8).pow(places);
        let (mut q, r) = (self.numerator() * &scale).div_rem(self.denominator());
        if &(r * 2) >= self.denominator() {
            q += 1;
        }
        if places == 0 {
            return q.to_string();
        }
        let digits = q.to_string();
        let width = places as usize + 1;
        let padded = format!("{digits:0>width$}");
        let split = padded.len() - places as usize;
        format!("{}.{}", &padded[..split], &padded[split..])
    }
}

impl fmt::Display for Rational {
    /// `"n"` for whole numbers, `"n/d"` otherwise. Exact, unlike
    /// [`Rational::to_decimal`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.numerator())
        } else {
            write!(f, "{}/{}", self.numerator(), self.denominator())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts whole numbers (`"3"`), decimals (`"4.2"`) and fractions
    /// (`"21/5"`). All three parse exactly; `"4.2"` is `21/5`, not a float.
    fn from_str(s: &str) -> Result<Self> {
        let invalid = || Error::InvalidNumber(s.to_owned());
        let digits = |part: &str| -> Result<BigInt> {
            if part.is_empty() || !part.bytes().all(|b| b.is_ascii_digit()) {
                return Err(invalid());
            }
            part.parse().map_err(|_| invalid())
        };
        if let Some((num, den)) = s.split_once('/') {
            let den = digits(den)?;
            if den.is_zero() {
                return Err(Error::ZeroDenominator);
            }
            return Ok(Self(BigRational::new(digits(num)?, den)));
        }
        if let Some((whole, frac)) = s.split_once('.') {
            let whole = if whole.is_empty() {
                BigInt::zero()
            } else {
                digits(whole)?
            };
            let scale = BigInt::from(10u8).pow(frac.len() as u32);
            return Ok(Self(BigRational::new(whole * &scale + digits(frac)?, scale)));
        }
        Ok(Self(BigRational::from_integer(digits(s)?)))
    }
}

impl Add for Rational {
    type Output = Rational;

    fn add(self, rhs: Rational) -> Rational {
        Rational(self.0 + rhs.0)
    }
}

impl Add<&Rational> for &Rational {
    type Output = Rational;

    fn add(self, rhs: &Rational) -> Rational {
        Rational(&self.0 + &rhs.0)
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl Mul for Rational {
    type Output = Rational;

    fn mul(self, rhs: Rational) -> Rational {
        Rational(self.0 * rhs.0)
    }
}

impl Mul<&Rational> for &Rational {
    type Output = Rational;

    fn mul(self, rhs: &Rational) -> Rational {
        Rational(&self.0 * &rhs.0)
    }
}

impl Div for Rational {
    type Output = Rational;

    /// Panics on a zero divisor; use [`Rational::checked_div`] when the
    /// divisor can be zero.
    fn div(self, rhs: Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        Rational(self.0 / rhs.0)
    }
}

impl Div<&Rational> for &Rational {
    type Output = Rational;

    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        Rational(&self.0 / &rhs.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |mut acc, x| {
            acc += x;
            acc
        })
    }
}

impl From<u64> for Rational {
    fn from(n: u64) -> Self {
        Self::from_integer(n)
    }
}

/// Compares two ratios given as numerator/denominator pairs without building
/// `Rational`s: `a/b` vs `c/d` via `a*d` vs `c*b`. Both denominators must be
/// positive. Handy for callers that keep scores as machine-word fractions.
#[must_use]
pub fn cmp_fractions(a: u64, b: u64, c: u64, d: u64) -> Ordering {
    assert!(b > 0 && d > 0, "denominators must be positive");
    (a as u128 * d as u128).cmp(&(c as u128 * b as u128))
}
