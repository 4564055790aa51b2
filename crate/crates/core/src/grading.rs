//! Exact rational homological gradings.

use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// A homological grading. Half-integers occur for rational homology spheres,
/// so the value is stored as an exact fraction.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Grading(Rational64);

impl Grading {
    pub const ZERO: Grading = Grading(Rational64::new_raw(0, 1));

    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "grading with zero denominator");
        Grading(Rational64::new(numer, denom))
    }

    pub fn int(value: i64) -> Self {
        Grading(Rational64::from_integer(value))
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// `Some(k)` when `self` is the integer `k`.
    pub fn to_integer(&self) -> Option<i64> {
        self.0.is_integer().then(|| self.0.to_integer())
    }

    /// `Some(n)` when `self == 2n` for an integer `n`.
    pub fn half_integer(&self) -> Option<i64> {
        let k = self.to_integer()?;
        (k % 2 == 0).then_some(k / 2)
    }

    /// True when `self - other` is an even integer.
    pub fn same_parity(&self, other: &Grading) -> bool {
        (*self - *other).half_integer().is_some()
    }

    /// True when `self - other` is an integer.
    pub fn same_coset(&self, other: &Grading) -> bool {
        (*self - *other).is_integer()
    }

    pub fn abs(&self) -> Grading {
        Grading(self.0.abs())
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Shift down by `2n`, the grading change of multiplication by `U^n`.
    pub fn u_shift(&self, n: u32) -> Grading {
        *self - Grading::int(2 * i64::from(n))
    }
}

impl From<i64> for Grading {
    fn from(v: i64) -> Self {
        Grading::int(v)
    }
}

impl Add for Grading {
    type Output = Grading;
    fn add(self, rhs: Grading) -> Grading {
        Grading(self.0 + rhs.0)
    }
}

impl AddAssign for Grading {
    fn add_assign(&mut self, rhs: Grading) {
        self.0 += rhs.0;
    }
}

impl Sub for Grading {
    type Output = Grading;
    fn sub(self, rhs: Grading) -> Grading {
        Grading(self.0 - rhs.0)
    }
}

impl Neg for Grading {
    type Output = Grading;
    fn neg(self) -> Grading {
        Grading(-self.0)
    }
}

impl fmt::Display for Grading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Grading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Grading {
    type Err = Error;

    /// Accepts `p`, `p/q`, and the typographic minus sign `−`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse(format!("invalid grading {s:?}: expected \"p\" or \"p/q\""));
        let t = s.trim().replace('\u{2212}', "-");
        let (p, q) = match t.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (t.as_str(), "1"),
        };
        let p: i64 = p.parse().map_err(|_| bad())?;
        let q: i64 = q.parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        Ok(Grading::new(p, q))
    }
}

impl Serialize for Grading {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Grading {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        assert_eq!("-9/2".parse::<Grading>().unwrap(), Grading::new(-9, 2));
        assert_eq!("\u{2212}9/2".parse::<Grading>().unwrap(), Grading::new(-9, 2));
        assert_eq!("4/2".parse::<Grading>().unwrap(), Grading::int(2));
        assert_eq!(Grading::new(-9, 2).to_string(), "-9/2");
        assert_eq!(Grading::int(-3).to_string(), "-3");
        assert!("1/0".parse::<Grading>().is_err());
        assert!("".parse::<Grading>().is_err());
        assert!("a/2".parse::<Grading>().is_err());
    }

    #[test]
    fn parity() {
        let a = Grading::new(-5, 2);
        let b = Grading::new(-13, 2);
        assert!(a.same_parity(&b));
        assert!(!a.same_parity(&Grading::new(-11, 2)));
        assert!(a.same_coset(&Grading::new(-11, 2)));
        assert!(!a.same_coset(&Grading::int(0)));
        assert_eq!(a.u_shift(2), b);
    }
}
