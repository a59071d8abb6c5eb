//! Exact rational scalars used throughout the crate.
//!
//! All arithmetic that feeds a rank decision, a separation check or an LP
//! pivot is done over arbitrary-precision rationals; no floating point
//! appears anywhere in the crate.

use num_bigint::BigInt;
use num_rational::BigRational;

/// Arbitrary-precision rational number, always stored in reduced form with
/// a positive denominator.
pub type Rational = BigRational;

/// Rational from an integer.
pub fn rat(value: i64) -> Rational {
    Rational::from(BigInt::from(value))
}

/// Rational from a numerator/denominator pair.
///
/// Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    assert!(den != 0, "zero denominator");
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Renders a rational as `p` or `p/q` for logs and reports.
pub fn display(value: &Rational) -> String {
    use num_traits::One;
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn ratio_reduces() {
        assert_eq!(ratio(2, 4), ratio(1, 2));
        assert_eq!(ratio(-3, -6), ratio(1, 2));
        assert!(ratio(0, 5).is_zero());
    }

    #[test]
    fn display_forms() {
        assert_eq!(display(&rat(7)), "7");
        assert_eq!(display(&ratio(1, 3)), "1/3");
        assert_eq!(display(&ratio(-5, 10)), "-1/2");
    }
}
