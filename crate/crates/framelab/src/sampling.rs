//! Seeded random test vectors.
//!
//! Entries are Gaussian rationals a + b·i with numerators drawn uniformly
//! from [−10, 10] and denominators from [1, 10], real and imaginary parts
//! independent. Generation is ChaCha-based so a recorded seed reproduces the
//! exact vector on any platform.

use num_bigint::BigInt;
use rand::Rng;

use crate::cyclotomic::CycloNum;
use crate::rational::Rational;

pub fn random_rational(rng: &mut impl Rng) -> Rational {
    let num = rng.gen_range(-10i64..=10);
    let den = rng.gen_range(1i64..=10);
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// A random Gaussian rational a + b·i inside ℚ(ζ_N); requires 4 | N.
pub fn random_gaussian_rational(conductor: u32, rng: &mut impl Rng) -> CycloNum {
    let re = CycloNum::from_rational(conductor, random_rational(rng));
    let im = CycloNum::imaginary_unit(conductor).scale(&random_rational(rng));
    &re + &im
}

/// A random element with every power-basis coefficient drawn from
/// [−range, range] (integer numerators, denominator 1).
pub fn random_cyclotomic(conductor: u32, range: i64, rng: &mut impl Rng) -> CycloNum {
    let phi = crate::cyclotomic::euler_phi(conductor) as usize;
    let coeffs = (0..phi)
        .map(|_| Rational::from_integer(BigInt::from(rng.gen_range(-range..=range))))
        .collect();
    CycloNum::from_coeffs(conductor, coeffs)
}

/// A random vector with Gaussian-rational entries, resampled until nonzero.
pub fn random_vector(dim: usize, conductor: u32, rng: &mut impl Rng) -> Vec<CycloNum> {
    loop {
        let v: Vec<CycloNum> = (0..dim)
            .map(|_| random_gaussian_rational(conductor, rng))
            .collect();
        if v.iter().any(|x| !x.is_zero()) {
            return v;
        }
    }
}

/// A random vector with every entry nonzero (e.g. the v₁v₂ ≠ 0 requirement
/// of the two-dimensional representation audits).
pub fn random_vector_nonzero_entries(
    dim: usize,
    conductor: u32,
    rng: &mut impl Rng,
) -> Vec<CycloNum> {
    (0..dim)
        .map(|_| loop {
            let x = random_gaussian_rational(conductor, rng);
            if !x.is_zero() {
                break x;
            }
        })
        .collect()
}
