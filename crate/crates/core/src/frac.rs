//! Exact nonnegative rationals for size thresholds such as `0.48·n` or `7n/13`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Frac {
    num: u64,
    den: u64,
}

const fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Frac {
    pub const ZERO: Frac = Frac { num: 0, den: 1 };
    pub const ONE: Frac = Frac { num: 1, den: 1 };
    pub const HALF: Frac = Frac { num: 1, den: 2 };
    pub const QUARTER: Frac = Frac { num: 1, den: 4 };

    pub const fn new(num: u64, den: u64) -> Frac {
        assert!(den != 0, "zero denominator");
        let g = gcd(num, den);
        let g = if g == 0 { 1 } else { g };
        Frac {
            num: num / g,
            den: den / g,
        }
    }

    pub fn num(self) -> u64 {
        self.num
    }

    pub fn den(self) -> u64 {
        self.den
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// ⌊self · n⌋
    #[inline]
    pub fn floor_mul(self, n: usize) -> usize {
        (self.num * n as u64 / self.den) as usize
    }

    /// ⌈self · n⌉
    #[inline]
    pub fn ceil_mul(self, n: usize) -> usize {
        (self.num * n as u64).div_ceil(self.den) as usize
    }

    /// `self · n ≤ count`
    #[inline]
    pub fn at_most(self, n: usize, count: usize) -> bool {
        self.num * n as u64 <= count as u64 * self.den
    }

    /// `count ≤ self · n`
    #[inline]
    pub fn admits(self, n: usize, count: usize) -> bool {
        count as u64 * self.den <= self.num * n as u64
    }

    /// `count < self · n`
    #[inline]
    pub fn exceeds(self, n: usize, count: usize) -> bool {
        (count as u64) * self.den < self.num * n as u64
    }

    /// Parses `"0.27"`, `"7/13"` or `"1"`.
    pub fn parse(s: &str) -> Result<Frac> {
        let bad = || Error::InvalidAlpha(s.to_string());
        let s = s.trim();
        if let Some((a, b)) = s.split_once('/') {
            let num: u64 = a.trim().parse().map_err(|_| bad())?;
            let den: u64 = b.trim().parse().map_err(|_| bad())?;
            if den == 0 {
                return Err(bad());
            }
            return Ok(Frac::new(num, den));
        }
        let (int, frac) = s.split_once('.').unwrap_or((s, ""));
        if frac.len() > 12 || (int.is_empty() && frac.is_empty()) {
            return Err(bad());
        }
        let int: u64 = if int.is_empty() { 0 } else { int.parse().map_err(|_| bad())? };
        let den = 10u64.pow(frac.len() as u32);
        let fpart: u64 = if frac.is_empty() { 0 } else { frac.parse().map_err(|_| bad())? };
        Ok(Frac::new(int * den + fpart, den))
    }

    /// A table depth: a rational in `[0, 1]`.
    pub fn alpha(s: &str) -> Result<Frac> {
        let a = Frac::parse(s)?;
        if a > Frac::ONE {
            return Err(Error::InvalidAlpha(s.to_string()));
        }
        Ok(a)
    }
}

impl PartialOrd for Frac {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Frac {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl fmt::Debug for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Display for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for Frac {
    type Err = Error;

    fn from_str(s: &str) -> Result<Frac> {
        Frac::parse(s)
    }
}

impl Serialize for Frac {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(Frac::parse("0.27").unwrap(), Frac::new(27, 100));
        assert_eq!(Frac::parse("7/13").unwrap(), Frac::new(7, 13));
        assert_eq!(Frac::parse("1").unwrap(), Frac::ONE);
        assert_eq!(Frac::parse(".25").unwrap(), Frac::QUARTER);
        assert!(Frac::parse("x").is_err());
        assert!(Frac::alpha("1.5").is_err());
    }

    #[test]
    fn floors_and_comparisons() {
        let a = Frac::new(27, 100);
        assert_eq!(a.floor_mul(14), 3);
        assert_eq!(a.ceil_mul(14), 4);
        assert!(Frac::new(48, 100).at_most(25, 12));
        assert!(!Frac::new(48, 100).at_most(25, 11));
        assert!(Frac::new(7, 13).exceeds(13, 6));
        assert!(!Frac::new(7, 13).exceeds(13, 7));
        assert!(Frac::QUARTER.admits(7, 1));
        assert!(!Frac::QUARTER.admits(7, 2));
    }
}
