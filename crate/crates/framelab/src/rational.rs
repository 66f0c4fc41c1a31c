//! Coefficient domain: arbitrary-precision rationals.
//!
//! Backed by `num_rational::BigRational`, which maintains the invariants the
//! rest of the crate relies on: gcd(|numerator|, denominator) = 1 and
//! denominator ≥ 1, with the sign carried by the numerator.

use num_bigint::BigInt;

pub type Rational = num_rational::BigRational;

/// `num / den` as a reduced rational. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// The integer `n` as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}
