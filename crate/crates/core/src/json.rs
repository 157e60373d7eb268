//! Exact rational numbers in JSON: integers are written as JSON numbers
//! when they fit in an `i64` and as decimal strings otherwise.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum JsonInt {
    Small(i64),
    Big(String),
}

impl JsonInt {
    pub fn to_bigint(&self) -> Result<BigInt> {
        match self {
            JsonInt::Small(n) => Ok(BigInt::from(*n)),
            JsonInt::Big(s) => s
                .trim()
                .parse()
                .map_err(|_| Error::invalid(format!("not an integer: {s:?}"))),
        }
    }
}

impl From<&BigInt> for JsonInt {
    fn from(n: &BigInt) -> Self {
        match n.to_i64() {
            Some(k) => JsonInt::Small(k),
            None => JsonInt::Big(n.to_string()),
        }
    }
}

impl From<i64> for JsonInt {
    fn from(n: i64) -> Self {
        JsonInt::Small(n)
    }
}

/// A rational as a numerator/denominator pair; `den` defaults to 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonRational {
    pub num: JsonInt,
    #[serde(default = "one")]
    pub den: JsonInt,
}

fn one() -> JsonInt {
    JsonInt::Small(1)
}

impl JsonRational {
    pub fn to_rational(&self) -> Result<Rational> {
        make_rational(&self.num, &self.den)
    }
}

impl From<&Rational> for JsonRational {
    fn from(q: &Rational) -> Self {
        JsonRational {
            num: q.numer().into(),
            den: q.denom().into(),
        }
    }
}

pub fn make_rational(num: &JsonInt, den: &JsonInt) -> Result<Rational> {
    let d = den.to_bigint()?;
    if d.is_zero() {
        return Err(Error::invalid("zero denominator"));
    }
    Ok(Rational::new(num.to_bigint()?, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rat;

    #[test]
    fn round_trips_small_and_big() {
        let q = rat(-3, 4);
        let j = JsonRational::from(&q);
        let s = serde_json::to_string(&j).unwrap();
        assert_eq!(s, r#"{"num":-3,"den":4}"#);
        let back: JsonRational = serde_json::from_str(&s).unwrap();
        assert_eq!(back.to_rational().unwrap(), q);

        let big: Rational = Rational::from_integer(BigInt::from(10).pow(30));
        let j = JsonRational::from(&big);
        let s = serde_json::to_string(&j).unwrap();
        let back: JsonRational = serde_json::from_str(&s).unwrap();
        assert_eq!(back.to_rational().unwrap(), big);
    }

    #[test]
    fn defaults_and_errors() {
        let j: JsonRational = serde_json::from_str(r#"{"num": 5}"#).unwrap();
        assert_eq!(j.to_rational().unwrap(), rat(5, 1));
        let z: JsonRational = serde_json::from_str(r#"{"num": 1, "den": 0}"#).unwrap();
        assert!(z.to_rational().is_err());
    }
}
