//! Arbitrary-precision rational scalar.
//!
//! [`Scalar`] wraps [`BigRational`], which keeps every value in lowest terms
//! with a positive denominator. Equality and hashing are therefore structural.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Exact rational number in canonical form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Scalar(BigRational);

/// Error parsing a `"numerator/denominator"` string.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseScalarError {
    #[error("expected \"numerator/denominator\", got {0:?}")]
    Malformed(String),
    #[error("denominator must be positive in {0:?}")]
    BadDenominator(String),
    #[error("{0:?} is not in lowest terms")]
    NotReduced(String),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar(BigRational::from_integer(BigInt::from(n)))
    }

    /// `numer / denom`, reduced. Panics if `denom == 0`.
    pub fn ratio(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Scalar(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn from_bigints(numer: BigInt, denom: BigInt) -> Self {
        assert!(!denom.is_zero(), "zero denominator");
        Scalar(BigRational::new(numer, denom))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// -1, 0 or 1.
    pub fn signum(&self) -> i8 {
        if self.0.is_zero() {
            0
        } else if self.0.is_positive() {
            1
        } else {
            -1
        }
    }

    pub fn abs(&self) -> Self {
        Scalar(self.0.abs())
    }

    pub fn square(&self) -> Self {
        Scalar(&self.0 * &self.0)
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.0.is_zero() {
            None
        } else {
            Some(Scalar(self.0.recip()))
        }
    }

    pub fn half(&self) -> Self {
        Scalar(&self.0 / BigInt::from(2))
    }

    pub fn as_ratio(&self) -> &BigRational {
        &self.0
    }

    pub fn into_ratio(self) -> BigRational {
        self.0
    }

    /// Lossy conversion for rendering only.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Decimal string rounded half away from zero to `places` fractional digits.
    pub fn to_decimal(&self, places: usize) -> String {
        let scale = BigInt::from(10u32).pow(places as u32);
        let scaled = &self.0 * BigRational::from_integer(scale.clone());
        let twice: BigInt = scaled.numer() * BigInt::from(2);
        let den = scaled.denom() * 2;
        // round(|n/d|) = floor((2|n| + d) / 2d)
        let mag = (twice.abs() + scaled.denom()).div_floor(&den);
        let negative = scaled.is_negative() && !mag.is_zero();
        let digits = mag.to_string();
        let body = if places == 0 {
            digits
        } else {
            let padded = format!("{:0>width$}", digits, width = places + 1);
            let (int, frac) = padded.split_at(padded.len() - places);
            format!("{int}.{frac}")
        };
        if negative {
            format!("-{body}")
        } else {
            body
        }
    }

    /// `⌊√self · 10^places⌋ / 10^places`, for rendering lengths; `None` if negative.
    pub fn sqrt_floor(&self, places: usize) -> Option<Scalar> {
        if self.is_negative() {
            return None;
        }
        let scale = BigInt::from(10u32).pow(places as u32);
        let scaled = &self.0 * BigRational::from_integer(&scale * &scale);
        let root = scaled.floor().to_integer().sqrt();
        Some(Scalar::from_bigints(root, scale))
    }

    /// Canonical `"n/d"` text; the denominator is always written.
    pub fn to_ratio_string(&self) -> String {
        format!("{}/{}", self.0.numer(), self.0.denom())
    }

    /// Strict inverse of [`Scalar::to_ratio_string`]: lowest terms, positive denominator.
    pub fn parse_ratio(s: &str) -> Result<Self, ParseScalarError> {
        let malformed = || ParseScalarError::Malformed(s.to_string());
        let (n, d) = s.split_once('/').ok_or_else(malformed)?;
        let valid_digits = |t: &str, signed: bool| {
            let body = if signed { t.strip_prefix('-').unwrap_or(t) } else { t };
            !body.is_empty() && body.bytes().all(|b| b.is_ascii_digit())
        };
        if !valid_digits(n, true) || !valid_digits(d, false) {
            return Err(malformed());
        }
        let numer = BigInt::from_str(n).map_err(|_| malformed())?;
        let denom = BigInt::from_str(d).map_err(|_| malformed())?;
        if !denom.is_positive() {
            return Err(ParseScalarError::BadDenominator(s.to_string()));
        }
        if !numer.gcd(&denom).is_one() || (numer.is_zero() && !denom.is_one()) {
            return Err(ParseScalarError::NotReduced(s.to_string()));
        }
        // leading zeros / "-0" would break byte-level round trips
        if (n.len() > 1 && n.starts_with('0')) || n.starts_with("-0") || d.starts_with('0') {
            return Err(ParseScalarError::NotReduced(s.to_string()));
        }
        Ok(Scalar(BigRational::new_raw(numer, denom)))
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for Scalar {
    type Err = ParseScalarError;

    /// Lenient parse for user input: accepts `"n"`, `"n/d"` (any sign, unreduced).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let malformed = || ParseScalarError::Malformed(s.to_string());
        match s.split_once('/') {
            None => BigInt::from_str(s)
                .map(|n| Scalar(BigRational::from_integer(n)))
                .map_err(|_| malformed()),
            Some((n, d)) => {
                let numer = BigInt::from_str(n.trim()).map_err(|_| malformed())?;
                let denom = BigInt::from_str(d.trim()).map_err(|_| malformed())?;
                if denom.is_zero() {
                    return Err(ParseScalarError::BadDenominator(s.to_string()));
                }
                Ok(Scalar(BigRational::new(numer, denom)))
            }
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_ratio_string())
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        Scalar::parse_ratio(&s).map_err(serde::de::Error::custom)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar(r)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar(self.0.$method(rhs.0))
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar(self.0.$method(&rhs.0))
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar((&self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-&self.0)
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        self.0 *= &rhs.0;
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

/// Shorthand for `Scalar::ratio`.
pub fn q(numer: i64, denom: i64) -> Scalar {
    Scalar::ratio(numer, denom)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        assert_eq!(q(2, 4), q(1, 2));
        assert_eq!(q(3, -6), q(-1, 2));
        assert_eq!(q(0, 7), Scalar::zero());
        assert_eq!(q(0, 7).denom(), &BigInt::from(1));
        assert!(q(-1, 2).denom().is_positive());
    }

    #[test]
    fn sqrt_floor_truncates() {
        assert_eq!(q(5, 4).sqrt_floor(3), Some(q(1118, 1000)));
        assert_eq!(q(9, 4).sqrt_floor(2), Some(q(3, 2)));
        assert_eq!(q(-1, 1).sqrt_floor(2), None);
    }

    #[test]
    fn ratio_string_round_trip() {
        for s in [q(-7, 3), q(0, 1), q(5, 1), q(123456789, 1000)] {
            assert_eq!(Scalar::parse_ratio(&s.to_ratio_string()).unwrap(), s);
        }
        assert_eq!(q(5, 1).to_ratio_string(), "5/1");
        assert_eq!(Scalar::zero().to_ratio_string(), "0/1");
    }

    #[test]
    fn strict_parse_rejects_non_canonical() {
        assert!(matches!(Scalar::parse_ratio("2/4"), Err(ParseScalarError::NotReduced(_))));
        assert!(matches!(Scalar::parse_ratio("0/3"), Err(ParseScalarError::NotReduced(_))));
        assert!(matches!(Scalar::parse_ratio("1/-2"), Err(ParseScalarError::Malformed(_))));
        assert!(matches!(Scalar::parse_ratio("1/0"), Err(ParseScalarError::BadDenominator(_))));
        assert!(matches!(Scalar::parse_ratio("3"), Err(ParseScalarError::Malformed(_))));
        assert!(matches!(Scalar::parse_ratio("0.5/1"), Err(ParseScalarError::Malformed(_))));
        assert!(Scalar::parse_ratio("-0/1").is_err());
        assert!(Scalar::parse_ratio("01/2").is_err());
    }

    #[test]
    fn lenient_parse() {
        assert_eq!("-1".parse::<Scalar>().unwrap(), q(-1, 1));
        assert_eq!("2/4".parse::<Scalar>().unwrap(), q(1, 2));
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("x".parse::<Scalar>().is_err());
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(q(1, 3).to_decimal(4), "0.3333");
        assert_eq!(q(2, 3).to_decimal(2), "0.67");
        assert_eq!(q(-2, 3).to_decimal(2), "-0.67");
        assert_eq!(q(1, 2).to_decimal(0), "1");
        assert_eq!(q(-1, 1000).to_decimal(2), "0.00");
        assert_eq!(q(7, 1).to_decimal(3), "7.000");
        assert_eq!(q(-13, 4).to_decimal(1), "-3.3");
    }
}
