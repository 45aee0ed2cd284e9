//! Exact rational helpers. Every number that reaches a verdict is a
//! `Ratio<BigInt>`; floats never appear on those paths.

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = Ratio<BigInt>;

pub fn int(n: i64) -> Rational {
    Ratio::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Ratio::new(BigInt::from(num), BigInt::from(den))
}

/// Renders a rational the way all outputs expect it: `p/q` reduced, plain
/// `p` when the denominator is one.
pub fn render(r: &Rational) -> String {
    r.to_string()
}

/// Parses `p/q` or a bare integer.
pub fn parse(s: &str) -> Result<Rational> {
    let invalid = || Error::InvalidDocument {
        detail: format!("cannot parse rational from {s:?}"),
    };
    match s.split_once('/') {
        Some((num, den)) => {
            let num: BigInt = num.trim().parse().map_err(|_| invalid())?;
            let den: BigInt = den.trim().parse().map_err(|_| invalid())?;
            if den.is_zero() {
                return Err(invalid());
            }
            Ok(Ratio::new(num, den))
        }
        None => {
            let num: BigInt = s.trim().parse().map_err(|_| invalid())?;
            Ok(Ratio::from_integer(num))
        }
    }
}

/// True when `value` is an integer multiple of `step`.
pub fn divides(step: &Rational, value: &Rational) -> bool {
    if step.is_zero() {
        return value.is_zero();
    }
    (value / step).is_integer()
}

/// Nearest integer, halves rounded up (`round(-1/2) = 0`). This is the
/// rounding every enumeration start uses, so witnesses are reproducible.
pub fn round_half_up(r: &Rational) -> BigInt {
    let shifted = r + Ratio::new(BigInt::one(), BigInt::from(2));
    shifted.floor().to_integer()
}

/// Ceiling of the square root of a non-negative rational, as an integer.
pub fn sqrt_ceil(r: &Rational) -> BigInt {
    assert!(!r.is_negative(), "sqrt of negative rational");
    let n = r.ceil().to_integer();
    if n.is_zero() {
        return BigInt::zero();
    }
    let root = n.sqrt();
    if &root * &root == n {
        root
    } else {
        root + 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_reduced() {
        assert_eq!(render(&ratio(8, -22)), "-4/11");
        assert_eq!(render(&ratio(6, 3)), "2");
        assert_eq!(render(&int(0)), "0");
    }

    #[test]
    fn parse_round_trips() {
        for s in ["-4/11", "2", "0", "35/22"] {
            assert_eq!(render(&parse(s).unwrap()), s);
        }
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
    }

    #[test]
    fn rounding_half_up() {
        assert_eq!(round_half_up(&ratio(-1, 2)), BigInt::from(0));
        assert_eq!(round_half_up(&ratio(1, 2)), BigInt::from(1));
        assert_eq!(round_half_up(&ratio(-3, 2)), BigInt::from(-1));
        assert_eq!(round_half_up(&ratio(7, 3)), BigInt::from(2));
    }

    #[test]
    fn sqrt_ceil_bounds() {
        assert_eq!(sqrt_ceil(&int(0)), BigInt::zero());
        assert_eq!(sqrt_ceil(&int(16)), BigInt::from(4));
        assert_eq!(sqrt_ceil(&ratio(17, 2)), BigInt::from(3));
    }
}
