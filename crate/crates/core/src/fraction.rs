use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A nonnegative exact rational used for every "fraction of n" threshold.
///
/// Comparisons are cross-multiplied in `u128`, so ties are exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fraction {
    numerator: u64,
    denominator: u64,
}

impl Fraction {
    pub fn new(numerator: u64, denominator: u64) -> Result<Self> {
        if denominator == 0 {
            return Err(Error::Argument("fraction with zero denominator".into()));
        }
        Ok(Self {
            numerator,
            denominator,
        })
    }

    pub const fn from_parts(numerator: u64, denominator: u64) -> Self {
        assert!(denominator > 0);
        Self {
            numerator,
            denominator,
        }
    }

    pub fn numerator(&self) -> u64 {
        self.numerator
    }

    pub fn denominator(&self) -> u64 {
        self.denominator
    }

    /// `count >= self * n`
    #[inline]
    pub fn le_count(&self, count: usize, n: usize) -> bool {
        self.denominator as u128 * count as u128 >= self.numerator as u128 * n as u128
    }

    /// `count < self * n`
    #[inline]
    pub fn gt_count(&self, count: usize, n: usize) -> bool {
        !self.le_count(count, n)
    }

    /// `floor(self * n)`
    pub fn floor_of(&self, n: usize) -> usize {
        (self.numerator as u128 * n as u128 / self.denominator as u128) as usize
    }

    /// Whether the fraction lies in `[0, 1]`.
    pub fn is_unit(&self) -> bool {
        self.numerator <= self.denominator
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

impl FromStr for Fraction {
    type Err = Error;

    /// Accepts `P/Q` or a bare integer.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Argument(format!("expected a fraction P/Q, found `{s}`"));
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (s.trim(), "1"),
        };
        let p = p.parse().map_err(|_| bad())?;
        let q = q.parse().map_err(|_| bad())?;
        Self::new(p, q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn comparisons_are_exact_at_ties() {
        let f = Fraction::new(1, 20).unwrap();
        assert!(f.le_count(1, 20));
        assert!(!f.le_count(0, 20));
        assert!(f.le_count(2, 21));
        assert!(f.gt_count(1, 21));
        assert_eq!(Fraction::new(4, 10).unwrap().floor_of(10), 4);
        assert_eq!(Fraction::new(4, 10).unwrap().floor_of(9), 3);
    }

    #[test]
    fn parses() {
        assert_eq!(
            "1/60".parse::<Fraction>().unwrap(),
            Fraction::from_parts(1, 60)
        );
        assert_eq!("1".parse::<Fraction>().unwrap(), Fraction::from_parts(1, 1));
        assert!("1/0".parse::<Fraction>().is_err());
        assert!("a/b".parse::<Fraction>().is_err());
    }
}
