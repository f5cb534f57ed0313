//! Exact rational scalar used for every invariant value.
//!
//! A thin wrapper around an arbitrary-precision fraction, always stored
//! reduced with a positive denominator. No floating point enters any
//! computation path; the decimal rendering emitted in JSON is advisory.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Exact integer fraction.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rat(BigRational);

impl Rat {
    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_int(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_u64(n: u64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
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

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        Rat(self.0.recip())
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
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

    /// Advisory floating-point rendering; the fraction is the value.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn cmp_int(&self, n: i64) -> Ordering {
        self.0.cmp(&BigRational::from_integer(BigInt::from(n)))
    }

    /// Smallest integer >= self, as u64. Panics on negative values.
    pub fn ceil_u64(&self) -> u64 {
        assert!(!self.is_negative());
        self.0.ceil().to_integer().to_u64().expect("ceil out of u64 range")
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rat({self})")
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat(self.0.$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &'a Rat) -> Rat {
                Rat(self.0.$method(&rhs.0))
            }
        }
        impl<'a> $trait<Rat> for &'a Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((&self.0).$method(rhs.0))
            }
        }
        impl<'a, 'b> $trait<&'b Rat> for &'a Rat {
            type Output = Rat;
            fn $method(self, rhs: &'b Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |a, b| a + b)
    }
}

impl From<u32> for Rat {
    fn from(n: u32) -> Self {
        Rat::from_u64(n as u64)
    }
}

impl From<u64> for Rat {
    fn from(n: u64) -> Self {
        Rat::from_u64(n)
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::from_int(n)
    }
}

/// JSON form: `{"num": "...", "den": "...", "decimal": 0.5}`.
///
/// Numerator and denominator are decimal strings so that values of any size
/// round-trip exactly; `decimal` is advisory and ignored on input.
impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("Rat", 3)?;
        s.serialize_field("num", &self.numer().to_string())?;
        s.serialize_field("den", &self.denom().to_string())?;
        s.serialize_field("decimal", &self.to_f64())?;
        s.end()
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum IntOrString {
    Int(i64),
    Str(String),
}

impl IntOrString {
    fn to_bigint<E: serde::de::Error>(&self) -> std::result::Result<BigInt, E> {
        match self {
            IntOrString::Int(n) => Ok(BigInt::from(*n)),
            IntOrString::Str(s) => {
                BigInt::from_str(s).map_err(|e| E::custom(format!("bad integer {s:?}: {e}")))
            }
        }
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            num: IntOrString,
            den: IntOrString,
            #[serde(default)]
            #[allow(dead_code)]
            decimal: Option<f64>,
        }
        let repr = Repr::deserialize(deserializer)?;
        let num = repr.num.to_bigint()?;
        let den = repr.den.to_bigint()?;
        if den.is_zero() {
            return Err(D::Error::custom("zero denominator"));
        }
        Ok(Rat(BigRational::new(num, den)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_and_positive_denominator() {
        let r = Rat::new(-4, -6);
        assert_eq!(r, Rat::new(2, 3));
        assert_eq!(r.to_string(), "2/3");
        let s = Rat::new(3, -9);
        assert_eq!(s.to_string(), "-1/3");
        assert!(s.denom() > &BigInt::zero());
    }

    #[test]
    fn arithmetic() {
        let a = Rat::new(1, 2);
        let b = Rat::new(1, 3);
        assert_eq!(&a + &b, Rat::new(5, 6));
        assert_eq!(&a - &b, Rat::new(1, 6));
        assert_eq!(&a * &b, Rat::new(1, 6));
        assert_eq!(&a / &b, Rat::new(3, 2));
        assert_eq!((1..=4).map(Rat::from_int).sum::<Rat>(), Rat::from_int(10));
    }

    #[test]
    fn json_round_trip() {
        let r = Rat::new(10, 21);
        let text = serde_json::to_string(&r).unwrap();
        assert!(text.contains("\"num\":\"10\""));
        assert!(text.contains("\"den\":\"21\""));
        let back: Rat = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        // integers accepted too
        let from_ints: Rat = serde_json::from_str(r#"{"num": -3, "den": 6}"#).unwrap();
        assert_eq!(from_ints, Rat::new(-1, 2));
    }

    #[test]
    fn ceil_u64() {
        assert_eq!(Rat::new(26, 6).ceil_u64(), 5);
        assert_eq!(Rat::from_int(4).ceil_u64(), 4);
    }
}
