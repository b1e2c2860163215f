use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};
use std::str::FromStr;

use crate::error::Error;

/// An exact element of ½ℤ, stored as twice its value.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt {
    doubled: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { doubled: 0 };
    pub const HALF: HalfInt = HalfInt { doubled: 1 };

    pub const fn from_doubled(doubled: i64) -> Self {
        Self { doubled }
    }

    pub const fn from_int(n: i64) -> Self {
        Self { doubled: 2 * n }
    }

    pub const fn doubled(self) -> i64 {
        self.doubled
    }

    pub const fn is_integer(self) -> bool {
        self.doubled % 2 == 0
    }

    /// True for values in ℤ + ½, the subscripts of a- and b-strings.
    pub const fn is_half_odd(self) -> bool {
        self.doubled % 2 != 0
    }

    pub fn to_int(self) -> Option<i64> {
        self.is_integer().then_some(self.doubled / 2)
    }

    pub fn abs(self) -> Self {
        Self { doubled: self.doubled.abs() }
    }

    pub fn signum(self) -> i64 {
        self.doubled.signum()
    }

    /// Largest integer not exceeding the value.
    pub fn floor(self) -> i64 {
        self.doubled.div_euclid(2)
    }
}

impl From<i64> for HalfInt {
    fn from(n: i64) -> Self {
        HalfInt::from_int(n)
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_doubled(self.doubled + rhs.doubled)
    }
}

impl Add<i64> for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: i64) -> HalfInt {
        HalfInt::from_doubled(self.doubled + 2 * rhs)
    }
}

impl AddAssign for HalfInt {
    fn add_assign(&mut self, rhs: HalfInt) {
        self.doubled += rhs.doubled;
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_doubled(self.doubled - rhs.doubled)
    }
}

impl Sub<i64> for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: i64) -> HalfInt {
        HalfInt::from_doubled(self.doubled - 2 * rhs)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt::from_doubled(-self.doubled)
    }
}

impl std::iter::Sum for HalfInt {
    fn sum<I: Iterator<Item = HalfInt>>(iter: I) -> HalfInt {
        iter.fold(HalfInt::ZERO, Add::add)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.doubled / 2)
        } else {
            write!(f, "{}/2", self.doubled)
        }
    }
}

impl FromStr for HalfInt {
    type Err = Error;

    /// Accepts `n` or `n/2` with an optional leading minus sign.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = |msg: &str| Error::Parse {
            pos: 0,
            msg: format!("{msg}: {s:?}"),
        };
        let s = s.trim();
        let (num, halved) = match s.split_once('/') {
            Some((n, d)) if d.trim() == "2" => (n.trim(), true),
            Some(_) => return Err(bad("only the denominator 2 is allowed")),
            None => (s, false),
        };
        let digits = num.strip_prefix('-').unwrap_or(num);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad("expected an integer or n/2"));
        }
        let n: i64 = num.parse().map_err(|_| bad("integer out of range"))?;
        Ok(if halved {
            HalfInt::from_doubled(n)
        } else {
            HalfInt::from_int(n)
        })
    }
}
