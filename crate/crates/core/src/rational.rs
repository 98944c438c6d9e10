//! Arbitrary-precision rational scalars.
//!
//! `Rational` is the universal number type of the crate: every sequence
//! entry, matrix entry and extremal value is one. The representation is
//! always normalized (positive denominator, reduced fraction) and the
//! wire format is `"p/q"` with `/q` omitted when the denominator is 1.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use crate::error::{Error, Result};

/// Exact rational number backed by big integers.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// `n/d`; panics if `d == 0`.
    pub fn new(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
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

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_nonnegative(&self) -> bool {
        !self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        Rational(self.0.recip())
    }

    pub fn min(self, other: Self) -> Self {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: Self) -> Self {
        if self >= other {
            self
        } else {
            other
        }
    }

    /// Integer power; negative exponents invert (panics on `0^-e`).
    pub fn pow(&self, exp: i64) -> Self {
        if exp < 0 {
            return self.recip().pow(-exp);
        }
        let e = u32::try_from(exp).expect("exponent too large");
        Rational(BigRational::new_raw(
            self.0.numer().pow(e),
            self.0.denom().pow(e),
        ))
    }

    /// Exact comparison of `self` with `base^(p/q)` via `self^q` vs `base^p`.
    /// Both sides must be nonnegative.
    pub fn cmp_pow(&self, base: &Rational, exp_num: i64, exp_den: i64) -> Ordering {
        assert!(exp_den > 0, "exponent denominator must be positive");
        assert!(
            self.is_nonnegative() && base.is_nonnegative(),
            "cmp_pow requires nonnegative operands"
        );
        self.pow(exp_den).cmp(&base.pow(exp_num))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse_int = |t: &str| -> Result<BigInt> {
            t.parse::<BigInt>()
                .map_err(|_| Error::Invalid(format!("cannot parse integer `{t}`")))
        };
        match s.split_once('/') {
            None => Ok(Rational(BigRational::from_integer(parse_int(s)?))),
            Some((p, q)) => {
                let num = parse_int(p)?;
                let den = parse_int(q)?;
                if den.is_zero() {
                    return Err(Error::Invalid(format!("zero denominator in `{s}`")));
                }
                Ok(Rational(BigRational::new(num, den)))
            }
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl de::Visitor<'_> for V {
            type Value = Rational;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a rational as \"p/q\" string or an integer")
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Rational, E> {
                v.parse().map_err(E::custom)
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Rational, E> {
                Ok(Rational::from_int(v))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Rational, E> {
                Ok(Rational::from_bigint(BigInt::from(v)))
            }
        }
        deserializer.deserialize_any(V)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $assign_trait:ident, $assign_method:ident) => {
        impl<'a> $trait<&'a Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                (&self).$method(rhs)
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                self.$method(&rhs)
            }
        }
        impl $assign_trait<&Rational> for Rational {
            fn $assign_method(&mut self, rhs: &Rational) {
                *self = (&*self).$method(rhs);
            }
        }
        impl $assign_trait<Rational> for Rational {
            fn $assign_method(&mut self, rhs: Rational) {
                *self = (&*self).$method(&rhs);
            }
        }
    };
}

binop!(Add, add, AddAssign, add_assign);
binop!(Sub, sub, SubAssign, sub_assign);
binop!(Mul, mul, MulAssign, mul_assign);
binop!(Div, div, DivAssign, div_assign);

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::one(), |acc, x| acc * x)
    }
}

impl<'a> Product<&'a Rational> for Rational {
    fn product<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        iter.fold(Rational::one(), |acc, x| acc * x)
    }
}

/// A value of the form `coeff * base^exponent` with a rational exponent.
///
/// Keeps geometric-progression minima exact when the exponent is not an
/// integer: comparisons raise both sides to the exponent's denominator
/// instead of ever taking a root.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExactPower {
    pub coeff: Rational,
    pub base: Rational,
    pub exponent: Rational,
}

impl ExactPower {
    pub fn new(coeff: Rational, base: Rational, exponent: Rational) -> Self {
        ExactPower {
            coeff,
            base,
            exponent,
        }
    }

    /// Materialize as a plain rational; `None` when the exponent is fractional.
    pub fn value(&self) -> Option<Rational> {
        if !self.exponent.is_integer() {
            return None;
        }
        let e = i64::try_from(self.exponent.numer()).ok()?;
        Some(&self.coeff * self.base.pow(e))
    }

    /// Exact equality with `rhs` (all parts nonnegative): compares
    /// `(coeff * base^(p/q))^q` against `rhs^q`.
    pub fn equals(&self, rhs: &Rational) -> bool {
        assert!(
            self.coeff.is_nonnegative() && self.base.is_nonnegative() && rhs.is_nonnegative(),
            "ExactPower::equals requires nonnegative values"
        );
        let p = i64::try_from(self.exponent.numer()).expect("exponent numerator too large");
        let q = i64::try_from(self.exponent.denom()).expect("exponent denominator too large");
        self.coeff.pow(q) * self.base.pow(p) == rhs.pow(q)
    }
}

impl fmt::Display for ExactPower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} * {}^({})", self.coeff, self.base, self.exponent)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn normalization_and_display() {
        assert_eq!(r(2, 4).to_string(), "1/2");
        assert_eq!(r(-2, -4).to_string(), "1/2");
        assert_eq!(r(2, -4).to_string(), "-1/2");
        assert_eq!(r(6, 3).to_string(), "2");
        assert_eq!(Rational::zero().to_string(), "0");
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0", "7", "-3", "1/2", "-22/7", "100/25"] {
            let v: Rational = s.parse().unwrap();
            let back: Rational = v.to_string().parse().unwrap();
            assert_eq!(v, back);
        }
        assert!("1/0".parse::<Rational>().is_err());
        assert!("a/b".parse::<Rational>().is_err());
    }

    #[test]
    fn pow_and_cmp_pow() {
        assert_eq!(r(2, 3).pow(3), r(8, 27));
        assert_eq!(r(2, 1).pow(-2), r(1, 4));
        assert_eq!(r(2, 1).pow(0), Rational::one());
        // 3 vs 2^(3/2): 9 > 8
        assert_eq!(r(3, 1).cmp_pow(&r(2, 1), 3, 2), Ordering::Greater);
        assert_eq!(r(2, 1).cmp_pow(&r(4, 1), 1, 2), Ordering::Equal);
    }

    #[test]
    fn exact_power_materialization() {
        let p = ExactPower::new(r(3, 1), r(2, 1), r(3, 1));
        assert_eq!(p.value(), Some(r(24, 1)));
        assert!(p.equals(&r(24, 1)));
        let frac = ExactPower::new(Rational::one(), r(2, 1), r(1, 2));
        assert_eq!(frac.value(), None);
        assert!(!frac.equals(&r(3, 2)));
    }

    #[test]
    fn serde_p_over_q() {
        let v = r(-7, 3);
        let js = serde_json::to_string(&v).unwrap();
        assert_eq!(js, "\"-7/3\"");
        let back: Rational = serde_json::from_str(&js).unwrap();
        assert_eq!(v, back);
        let from_int: Rational = serde_json::from_str("5").unwrap();
        assert_eq!(from_int, r(5, 1));
    }
}
