//! Exact rational arithmetic.
//!
//! Every quantity that feeds a verdict (Euler characteristics, piece ratios,
//! angle coefficients, curvatures) is a [`Rational`].  Floating point appears
//! in this crate only inside the Gram-matrix cross-check and in Monte Carlo
//! rate summaries, neither of which decides anything exact.

use num_bigint::BigInt;

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// The fraction `n / d`.  Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `p` or `p/q` with arbitrary-precision integers.  `None` on
/// malformed input or a zero denominator.
pub fn parse_ratio(text: &str) -> Option<Rational> {
    let (numerator, denominator) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let numerator: BigInt = numerator.parse().ok()?;
    let denominator: BigInt = denominator.parse().ok()?;
    (denominator != BigInt::from(0)).then(|| Rational::new(numerator, denominator))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Signed, Zero};

    #[test]
    fn construction_normalizes() {
        assert_eq!(rat(2, 4), rat(1, 2));
        assert_eq!(rat(3, -6), rat(-1, 2));
        assert_eq!(rat(0, 7), int(0));
        assert!(rat(1, 40).is_positive());
        assert!(int(0).is_zero());
        assert!(rat(7, 7).is_one());
    }

    #[test]
    fn rendering_is_lowest_terms() {
        assert_eq!(rat(-1, 40).to_string(), "-1/40");
        assert_eq!(rat(10, 5).to_string(), "2");
        assert_eq!(int(0).to_string(), "0");
    }

    #[test]
    fn arithmetic_is_exact() {
        let sum = rat(1, 2) + rat(1, 4) + rat(1, 5);
        assert_eq!(sum, rat(19, 20));
        let chi = int(1) - rat(3, 2) + rat(1, 4) + rat(1, 8) + rat(1, 10);
        assert_eq!(chi, rat(-1, 40));
    }

    #[test]
    fn parsing_fractions() {
        assert_eq!(parse_ratio("3/4"), Some(rat(3, 4)));
        assert_eq!(parse_ratio("-1/6"), Some(rat(-1, 6)));
        assert_eq!(parse_ratio("5"), Some(int(5)));
        assert_eq!(parse_ratio("2/4"), Some(rat(1, 2)));
        assert_eq!(parse_ratio("1/0"), None);
        assert_eq!(parse_ratio(""), None);
        assert_eq!(parse_ratio("x/2"), None);
        assert_eq!(parse_ratio("1/2/3"), None);
    }
}
