//! Exact rational numbers restricted to the unit interval.
//!
//! Every membership degree in this crate is a [`UnitRational`]: a reduced
//! fraction `num/den` with `0 <= num <= den`. All comparisons are exact
//! (128-bit cross multiplication), so order-theoretic predicates never
//! suffer the boundary misclassifications a float epsilon would introduce.
//!
//! The text forms accepted by [`UnitRational::parse`] are plain decimals
//! (`"0"`, `"1"`, `"0.35"`) and fractions (`"7/20"`). Values render back as
//! the shortest exact decimal when the reduced denominator divides a power
//! of ten, and as `"n/m"` otherwise, so serialization round-trips exactly.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Largest number of fractional digits accepted in a decimal literal.
///
/// Keeps numerators and denominators inside `u64` (10^18 < 2^63), which in
/// turn keeps the 128-bit cross products used for comparison overflow-free.
pub const MAX_DECIMAL_DIGITS: usize = 18;

/// Rejection reasons for values that are not exact unit-interval rationals.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumberError {
    /// The text is not `digits`, `digits.digits`, or `digits/digits`, or a
    /// component does not fit the supported precision.
    #[error("MalformedNumber: {0:?} is not a decimal or n/m fraction")]
    Malformed(String),
    /// Syntactically fine, but the value lies outside `[0, 1]`.
    #[error("OutOfUnitRange: {0:?} is outside [0,1]")]
    OutOfUnitRange(String),
}

/// An exact rational in `[0, 1]`, stored in lowest terms.
///
/// Canonical form makes structural equality coincide with numeric equality,
/// so the derived `Eq`/`Hash` are sound.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct UnitRational {
    num: u64,
    den: u64,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl UnitRational {
    pub const ZERO: UnitRational = UnitRational { num: 0, den: 1 };
    pub const ONE: UnitRational = UnitRational { num: 1, den: 1 };

    /// Builds `num/den`, reducing to lowest terms.
    pub fn new(num: u64, den: u64) -> Result<Self, NumberError> {
        if den == 0 {
            return Err(NumberError::Malformed(format!("{num}/{den}")));
        }
        if num > den {
            return Err(NumberError::OutOfUnitRange(format!("{num}/{den}")));
        }
        let g = gcd(num, den);
        Ok(UnitRational {
            num: num / g,
            den: den / g,
        })
    }

    /// Parses a decimal (`"0.35"`) or fraction (`"7/20"`) literal exactly.
    pub fn parse(text: &str) -> Result<Self, NumberError> {
        let malformed = || NumberError::Malformed(text.to_string());
        let digits = |s: &str| -> Result<u64, NumberError> {
            if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
                return Err(malformed());
            }
            s.parse::<u64>().map_err(|_| malformed())
        };
        if let Some((n, m)) = text.split_once('/') {
            let num = digits(n)?;
            let den = digits(m)?;
            if den == 0 {
                return Err(malformed());
            }
            if num > den {
                return Err(NumberError::OutOfUnitRange(text.to_string()));
            }
            return Self::new(num, den);
        }
        if let Some((int_part, frac_part)) = text.split_once('.') {
            let int = digits(int_part)?;
            if frac_part.is_empty()
                || frac_part.len() > MAX_DECIMAL_DIGITS
                || !frac_part.bytes().all(|b| b.is_ascii_digit())
            {
                return Err(malformed());
            }
            let den = 10u64.pow(frac_part.len() as u32);
            let frac: u64 = frac_part.parse().map_err(|_| malformed())?;
            let num = int
                .checked_mul(den)
                .and_then(|v| v.checked_add(frac))
                .ok_or_else(malformed)?;
            if num > den {
                return Err(NumberError::OutOfUnitRange(text.to_string()));
            }
            return Self::new(num, den);
        }
        let int = digits(text)?;
        if int > 1 {
            return Err(NumberError::OutOfUnitRange(text.to_string()));
        }
        Ok(if int == 0 { Self::ZERO } else { Self::ONE })
    }

    pub fn numerator(&self) -> u64 {
        self.num
    }

    pub fn denominator(&self) -> u64 {
        self.den
    }

    /// `1 - self`. Stays reduced: `gcd(den - num, den) = gcd(num, den)`.
    #[must_use]
    pub fn one_minus(&self) -> Self {
        UnitRational {
            num: self.den - self.num,
            den: self.den,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    /// Renders as the shortest exact decimal if the reduced denominator is
    /// `2^a * 5^b`, otherwise as `"n/m"`.
    fn render(&self) -> String {
        if self.den == 1 {
            return self.num.to_string();
        }
        let mut rest = self.den;
        let mut twos = 0u32;
        while rest.is_multiple_of(2) {
            rest /= 2;
            twos += 1;
        }
        let mut fives = 0u32;
        while rest.is_multiple_of(5) {
            rest /= 5;
            fives += 1;
        }
        if rest != 1 {
            return format!("{}/{}", self.num, self.den);
        }
        // den | 10^scale with scale minimal, so no trailing zeros appear.
        let scale = twos.max(fives);
        let mut out = String::from("0.");
        let mut rem = self.num as u128;
        for _ in 0..scale {
            rem *= 10;
            let digit = rem / self.den as u128;
            rem %= self.den as u128;
            out.push(char::from(b'0' + digit as u8));
        }
        out
    }
}

impl Ord for UnitRational {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.num as u128 * other.den as u128;
        let rhs = other.num as u128 * self.den as u128;
        lhs.cmp(&rhs)
    }
}

impl PartialOrd for UnitRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for UnitRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for UnitRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl FromStr for UnitRational {
    type Err = NumberError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

impl Serialize for UnitRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.render())
    }
}

impl<'de> Deserialize<'de> for UnitRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        UnitRational::parse(&text).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(text: &str) -> UnitRational {
        UnitRational::parse(text).unwrap()
    }

    #[test]
    fn parses_worked_decimals_exactly() {
        assert_eq!(q("0.35"), UnitRational::new(7, 20).unwrap());
        assert_eq!(q("1"), UnitRational::ONE);
        assert_eq!(q("0.333333"), UnitRational::new(333_333, 1_000_000).unwrap());
        assert_eq!(q("0.5"), q("1/2"));
    }

    #[test]
    fn parse_is_exact_not_binary_float() {
        // 0.1 as a binary float is not 1/10; the rational parse must be.
        let tenth = q("0.1");
        assert_eq!(tenth.numerator(), 1);
        assert_eq!(tenth.denominator(), 10);
    }

    #[test]
    fn rejects_out_of_range_and_malformed() {
        assert!(matches!(
            UnitRational::parse("8"),
            Err(NumberError::OutOfUnitRange(_))
        ));
        assert!(matches!(
            UnitRational::parse("1.5"),
            Err(NumberError::OutOfUnitRange(_))
        ));
        assert!(matches!(
            UnitRational::parse("5/4"),
            Err(NumberError::OutOfUnitRange(_))
        ));
        for bad in ["", ".", "0.", ".5", "-0.1", "1/0", "a", "1e-3", "0..1", "1/ 2"] {
            assert!(
                matches!(UnitRational::parse(bad), Err(NumberError::Malformed(_))),
                "{bad:?} should be malformed"
            );
        }
    }

    #[test]
    fn renders_shortest_decimal_or_fraction() {
        assert_eq!(q("0.35").to_string(), "0.35");
        assert_eq!(q("0.50").to_string(), "0.5");
        assert_eq!(q("1/2").to_string(), "0.5");
        assert_eq!(q("1/3").to_string(), "1/3");
        assert_eq!(q("2/6").to_string(), "1/3");
        assert_eq!(q("0").to_string(), "0");
        assert_eq!(q("1").to_string(), "1");
        assert_eq!(q("1/8").to_string(), "0.125");
        assert_eq!(q("1/64").to_string(), "0.015625");
    }

    #[test]
    fn ordering_is_exact() {
        assert!(q("1/3") < q("0.34"));
        assert!(q("1/3") > q("0.33"));
        assert_eq!(q("0.2"), q("1/5"));
        assert!(q("0.999999999999999999") < UnitRational::ONE);
    }

    #[test]
    fn complement_round_trips() {
        assert_eq!(q("0.35").one_minus(), q("0.65"));
        assert_eq!(q("1/3").one_minus(), q("2/3"));
        assert_eq!(q("0").one_minus(), q("1"));
        assert_eq!(q("0.7").one_minus().one_minus(), q("0.7"));
    }
}
