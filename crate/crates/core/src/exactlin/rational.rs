use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Arbitrary precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// The integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The fraction `n/d`, reduced.
///
/// # Panics
///
/// Panics if `d == 0`.
pub fn frac(n: i64, d: i64) -> Rational {
    assert!(d != 0, "zero denominator");
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"` or `"n"`. Surrounding whitespace is ignored.
///
/// ```
/// use lie2::exactlin::{frac, parse_rational};
/// assert_eq!(parse_rational("-6/4").unwrap(), frac(-3, 2));
/// assert!(parse_rational("1/0").is_err());
/// ```
pub fn parse_rational(s: &str) -> Result<Rational> {
    let err = || Error::ParseRational(s.to_string());
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err())?;
    let den: BigInt = den.parse().map_err(|_| err())?;
    if den.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(num, den))
}

/// Formats as `"p/q"`, or `"n"` when the denominator is one.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normal_form() {
        let q = frac(4, -6);
        assert_eq!(q.numer(), &BigInt::from(-2));
        assert_eq!(q.denom(), &BigInt::from(3));
        assert_eq!(format_rational(&q), "-2/3");
        assert_eq!(format_rational(&frac(0, 5)), "0");
        assert_eq!(format_rational(&int(7)), "7");
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0", "-1", "3/7", "-12/5", "1234567890123456789012345678901/2"] {
            assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
        }
        assert_eq!(parse_rational(" 2/4 ").unwrap(), frac(1, 2));
        for bad in ["", "a", "1/", "/2", "1/0", "1.5"] {
            assert!(parse_rational(bad).is_err(), "{bad}");
        }
    }
}
