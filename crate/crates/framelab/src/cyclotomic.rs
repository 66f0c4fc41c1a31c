//! Exact arithmetic in the cyclotomic field ℚ(ζ_N).
//!
//! Elements are stored in the power basis {1, ζ, …, ζ^{φ(N)−1}} reduced
//! modulo the cyclotomic polynomial Φ_N. Reduction mod Φ_N (rather than
//! x^N − 1) makes the representation canonical, so the zero test — all
//! coefficients zero — is exact. That zero test is what every certificate in
//! this crate ultimately rests on.
//!
//! For order-n problems the conductor is N = lcm(n, 4), so that both
//! ω = ζ_N^{N/n} and i = ζ_N^{N/4} live in the same field.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use once_cell::sync::Lazy;

use crate::rational::Rational;

/// Euler's totient of `n`.
pub fn euler_phi(n: u32) -> u32 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Conductor used for order-`n` dihedral problems: lcm(n, 4).
pub fn conductor_for(n: u32) -> u32 {
    n.lcm(&4)
}

fn divisors(n: u32) -> Vec<u32> {
    let mut divs = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            divs.push(i);
            if i != n / i {
                divs.push(n / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    divs
}

// ---------------------------------------------------------------------------
// Univariate polynomials over ℚ
// ---------------------------------------------------------------------------

/// Dense univariate polynomial over ℚ, ascending degree order.
///
/// Canonical form: empty coefficient vector for the zero polynomial,
/// nonzero leading coefficient otherwise. Used to realize Φ_N and the
/// extended-gcd inversion behind [`CycloNum::inverse`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloPoly {
    coeffs: Vec<Rational>,
}

impl CycloPoly {
    pub fn zero() -> Self {
        CycloPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        CycloPoly {
            coeffs: vec![Rational::one()],
        }
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut p = CycloPoly { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    /// x^n − 1.
    fn x_pow_minus_one(n: u32) -> Self {
        let mut coeffs = vec![Rational::zero(); n as usize + 1];
        coeffs[0] = -Rational::one();
        coeffs[n as usize] = Rational::one();
        CycloPoly { coeffs }
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Self::from_coeffs(out)
    }

    fn scale(&self, q: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c * q).collect())
    }

    fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![Rational::zero(); len];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] -= c;
        }
        Self::from_coeffs(out)
    }

    /// Quotient and remainder; panics if `divisor` is zero.
    fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let dd = divisor.degree().unwrap();
        let mut rem = self.clone();
        let mut quo = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        let lead_inv = Rational::one() / divisor.leading();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let factor = rem.leading() * &lead_inv;
            let shift = rd - dd;
            quo[shift] = factor.clone();
            for (i, c) in divisor.coeffs.iter().enumerate() {
                let delta = c * &factor;
                rem.coeffs[shift + i] -= delta;
            }
            rem.normalize();
        }
        (Self::from_coeffs(quo), rem)
    }

    /// Exact division; panics if the remainder is nonzero.
    pub fn exact_div(&self, divisor: &Self) -> Self {
        let (q, r) = self.div_rem(divisor);
        assert!(r.is_zero(), "polynomial division was not exact");
        q
    }
}

/// The N-th cyclotomic polynomial Φ_N, by exact division of x^N − 1 by the
/// Φ_d over proper divisors d of N. Integer coefficients, degree φ(N).
pub fn cyclotomic_polynomial(n: u32) -> CycloPoly {
    assert!(n >= 1, "cyclotomic_polynomial: N must be positive");
    if n == 1 {
        return CycloPoly::from_i64_coeffs(&[-1, 1]);
    }
    let mut result = CycloPoly::x_pow_minus_one(n);
    for d in divisors(n) {
        if d != n {
            result = result.exact_div(&cyclotomic_polynomial(d));
        }
    }
    result
}

// ---------------------------------------------------------------------------
// Per-conductor context
// ---------------------------------------------------------------------------

/// Precomputed reduction data for one conductor, shared via a global cache.
pub(crate) struct CycloCtx {
    pub(crate) phi: usize,
    /// Power-basis representation of ζ^k for 0 ≤ k < max(N, 2φ−1).
    /// Entries are integer vectors of length φ.
    pub(crate) power_table: Vec<Vec<BigInt>>,
}

impl CycloCtx {
    fn new(conductor: u32) -> Self {
        let phi = euler_phi(conductor) as usize;
        let phi_poly = cyclotomic_polynomial(conductor);
        let phi_ints: Vec<BigInt> = phi_poly
            .coeffs()
            .iter()
            .map(|c| {
                debug_assert!(c.denom().is_one());
                c.numer().clone()
            })
            .collect();
        // ζ^φ = −(Φ_N − x^φ), i.e. negate the lower coefficients of Φ_N.
        let zeta_phi: Vec<BigInt> = phi_ints[..phi].iter().map(|c| -c).collect();
        let table_len = (conductor as usize).max(2 * phi - 1);
        let mut power_table: Vec<Vec<BigInt>> = Vec::with_capacity(table_len);
        for k in 0..table_len {
            if k < phi {
                let mut row = vec![BigInt::zero(); phi];
                row[k] = BigInt::one();
                power_table.push(row);
            } else {
                let prev = &power_table[k - 1];
                let carry = prev[phi - 1].clone();
                let mut row = vec![BigInt::zero(); phi];
                row[1..phi].clone_from_slice(&prev[..phi - 1]);
                if !carry.is_zero() {
                    for t in 0..phi {
                        if !zeta_phi[t].is_zero() {
                            row[t] += &carry * &zeta_phi[t];
                        }
                    }
                }
                power_table.push(row);
            }
        }
        CycloCtx { phi, power_table }
    }

    /// Multiply two integer coefficient vectors and reduce mod Φ_N.
    pub(crate) fn zc_mul(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let phi = self.phi;
        let mut acc = vec![BigInt::zero(); 2 * phi - 1];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if !bj.is_zero() {
                    acc[i + j] += ai * bj;
                }
            }
        }
        self.zc_reduce(acc)
    }

    /// Fold coefficients of degree ≥ φ back into the power basis.
    pub(crate) fn zc_reduce(&self, mut acc: Vec<BigInt>) -> Vec<BigInt> {
        let phi = self.phi;
        for k in (phi..acc.len()).rev() {
            if acc[k].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut acc[k], BigInt::zero());
            let row = &self.power_table[k];
            for t in 0..phi {
                if !row[t].is_zero() {
                    acc[t] += &c * &row[t];
                }
            }
        }
        acc.truncate(phi);
        acc
    }
}

static CTX_CACHE: Lazy<std::sync::RwLock<HashMap<u32, Arc<CycloCtx>>>> =
    Lazy::new(|| std::sync::RwLock::new(HashMap::new()));

pub(crate) fn ctx(conductor: u32) -> Arc<CycloCtx> {
    assert!(conductor >= 1, "conductor must be positive");
    if let Some(c) = CTX_CACHE.read().unwrap().get(&conductor) {
        return Arc::clone(c);
    }
    let built = Arc::new(CycloCtx::new(conductor));
    let mut guard = CTX_CACHE.write().unwrap();
    Arc::clone(guard.entry(conductor).or_insert(built))
}

// ---------------------------------------------------------------------------
// Field elements
// ---------------------------------------------------------------------------

/// An element of ℚ(ζ_N) in the power basis modulo Φ_N.
///
/// Values are immutable after construction; arithmetic requires equal
/// conductors and panics on a mismatch.
#[derive(Clone, PartialEq, Eq)]
pub struct CycloNum {
    conductor: u32,
    coeffs: Vec<Rational>,
}

impl CycloNum {
    pub fn zero(conductor: u32) -> Self {
        let phi = euler_phi(conductor) as usize;
        CycloNum {
            conductor,
            coeffs: vec![Rational::zero(); phi],
        }
    }

    pub fn one(conductor: u32) -> Self {
        Self::from_rational(conductor, Rational::one())
    }

    pub fn from_rational(conductor: u32, q: Rational) -> Self {
        let mut out = Self::zero(conductor);
        out.coeffs[0] = q;
        out
    }

    pub fn from_integer(conductor: u32, k: i64) -> Self {
        Self::from_rational(conductor, Rational::from_integer(BigInt::from(k)))
    }

    /// Construct from explicit power-basis coefficients (length φ(N)).
    pub fn from_coeffs(conductor: u32, coeffs: Vec<Rational>) -> Self {
        let phi = euler_phi(conductor) as usize;
        assert_eq!(
            coeffs.len(),
            phi,
            "coefficient vector must have length φ(N)"
        );
        CycloNum { conductor, coeffs }
    }

    pub(crate) fn from_int_coeffs(conductor: u32, ints: &[BigInt]) -> Self {
        CycloNum {
            conductor,
            coeffs: ints
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
        }
    }

    /// ζ_N^k reduced mod Φ_N; negative k allowed.
    pub fn root_of_unity(conductor: u32, k: i64) -> Self {
        let c = ctx(conductor);
        let r = k.rem_euclid(conductor as i64) as usize;
        Self::from_int_coeffs(conductor, &c.power_table[r])
    }

    /// The imaginary unit i = ζ_N^{N/4}. Panics unless 4 | N.
    pub fn imaginary_unit(conductor: u32) -> Self {
        assert!(conductor.is_multiple_of(4), "i requires 4 | N");
        Self::root_of_unity(conductor, (conductor / 4) as i64)
    }

    /// ω = e^{2πi/n} embedded in ℚ(ζ_N) with N = lcm(n, 4).
    pub fn omega(n: u32) -> Self {
        let conductor = conductor_for(n);
        Self::root_of_unity(conductor, (conductor / n) as i64)
    }

    /// ω^k for the order-n problem, in conductor lcm(n, 4).
    pub fn omega_pow(n: u32, k: i64) -> Self {
        let conductor = conductor_for(n);
        Self::root_of_unity(conductor, (conductor / n) as i64 * k)
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Canonical zero test: all reduced coefficients zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    fn assert_same_conductor(&self, other: &Self) {
        assert_eq!(
            self.conductor, other.conductor,
            "conductor mismatch: {} vs {}",
            self.conductor, other.conductor
        );
    }

    /// Clear denominators: integer coefficient vector plus the common scale d
    /// such that self · d has the returned integer coefficients.
    pub(crate) fn to_scaled_ints(&self) -> (Vec<BigInt>, BigInt) {
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let ints = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        (ints, den)
    }

    /// Field inverse, or `None` if self is zero.
    ///
    /// Computed by the half-extended Euclidean algorithm on the coefficient
    /// polynomial and Φ_N over ℚ; Φ_N is irreducible, so any nonzero element
    /// of degree < φ(N) is invertible.
    pub fn inverse(&self) -> Option<CycloNum> {
        if self.is_zero() {
            return None;
        }
        let c = ctx(self.conductor);
        let phi_poly = cyclotomic_polynomial(self.conductor);
        let a = CycloPoly::from_coeffs(self.coeffs.clone());
        // Invariant: r_k ≡ u_k · a (mod Φ_N). Remainders kept monic to tame
        // coefficient growth.
        let mut r0 = phi_poly;
        let mut u0 = CycloPoly::zero();
        let mut r1 = a;
        let mut u1 = CycloPoly::one();
        {
            let lc = r1.leading();
            let inv = Rational::one() / lc;
            r1 = r1.scale(&inv);
            u1 = u1.scale(&inv);
        }
        while r1.degree().is_some_and(|d| d > 0) {
            let (q, mut r2) = r0.div_rem(&r1);
            let mut u2 = u0.sub(&q.mul(&u1));
            if !r2.is_zero() {
                let inv = Rational::one() / r2.leading();
                r2 = r2.scale(&inv);
                u2 = u2.scale(&inv);
            }
            r0 = r1;
            u0 = u1;
            r1 = r2;
            u1 = u2;
        }
        // r1 is the monic gcd = 1; u1 is the Bézout coefficient of a.
        debug_assert!(r1.degree() == Some(0));
        let mut coeffs = u1.coeffs().to_vec();
        coeffs.resize(c.phi, Rational::zero());
        let inv = CycloNum {
            conductor: self.conductor,
            coeffs,
        };
        debug_assert!((&inv * self).is_one());
        Some(inv)
    }

    /// Complex conjugation: the field automorphism ζ_N ↦ ζ_N^{N−1}.
    pub fn conj(&self) -> CycloNum {
        let c = ctx(self.conductor);
        let n = self.conductor as usize;
        let mut out = vec![Rational::zero(); c.phi];
        for (j, coeff) in self.coeffs.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            let row = &c.power_table[(n - j) % n];
            for t in 0..c.phi {
                if !row[t].is_zero() {
                    out[t] += coeff * Rational::from_integer(row[t].clone());
                }
            }
        }
        CycloNum {
            conductor: self.conductor,
            coeffs: out,
        }
    }

    /// Numerical evaluation with ζ_N = exp(2πi/N).
    pub fn to_complex_float(&self) -> Complex64 {
        let n = self.conductor as f64;
        let mut acc = Complex64::new(0.0, 0.0);
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let angle = 2.0 * std::f64::consts::PI * (j as f64) / n;
            let x = c.to_f64().unwrap_or_else(|| {
                // Extremely large coefficients: fall back via string parse.
                c.numer().to_f64().unwrap() / c.denom().to_f64().unwrap()
            });
            acc += Complex64::new(angle.cos(), angle.sin()) * x;
        }
        acc
    }

    pub fn scale(&self, q: &Rational) -> CycloNum {
        CycloNum {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Render in the CLI literal grammar: a sum of terms `q`, `q*i`, `q*w^k`,
    /// `q*i*w^k` with `w` the order-`n` root ω. Requires the conductor to be
    /// lcm(n, 4).
    pub fn to_literal(&self, n: u32) -> String {
        let conductor = self.conductor;
        assert_eq!(
            conductor,
            conductor_for(n),
            "literal rendering needs conductor lcm(n, 4)"
        );
        if self.is_zero() {
            return "0".to_string();
        }
        // Values proportional to a single root i^a·w^b render as one term.
        if let Some(term) = self.single_monomial_literal(n) {
            return term;
        }
        // Otherwise express each basis index j as i^a * w^b, preferring small a.
        let c = ctx(conductor);
        let step_i = (conductor / 4) as usize;
        let step_w = (conductor / n) as usize;
        let mut index_form: Vec<Option<(u32, u32)>> = vec![None; c.phi];
        'outer: for a in 0..4u32 {
            for b in 0..n {
                let idx = (a as usize * step_i + b as usize * step_w) % conductor as usize;
                if idx < c.phi && index_form[idx].is_none() {
                    index_form[idx] = Some((a, b));
                    if index_form.iter().all(|e| e.is_some()) {
                        break 'outer;
                    }
                }
            }
        }
        let mut out = String::new();
        for (j, coeff) in self.coeffs.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            let (a, b) = index_form[j].expect("basis index not reachable from i and w");
            // Fold i^2 = -1, i^3 = -i into the sign of q.
            let (mut q, has_i) = match a {
                0 => (coeff.clone(), false),
                1 => (coeff.clone(), true),
                2 => (-coeff.clone(), false),
                _ => (-coeff.clone(), true),
            };
            let negative = q.is_negative();
            if negative {
                q = -q;
            }
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else if negative {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mut factors: Vec<String> = Vec::new();
            if !q.is_one() || (!has_i && b == 0) {
                factors.push(q.to_string());
            }
            if has_i {
                factors.push("i".to_string());
            }
            if b == 1 {
                factors.push("w".to_string());
            } else if b > 1 {
                factors.push(format!("w^{}", b));
            }
            out.push_str(&factors.join("*"));
        }
        out
    }

    fn single_monomial_literal(&self, n: u32) -> Option<String> {
        let conductor = self.conductor;
        for a in 0..4u32 {
            for b in 0..n {
                let exp = a as i64 * (conductor / 4) as i64 + b as i64 * (conductor / n) as i64;
                let root = CycloNum::root_of_unity(conductor, exp);
                let j = root
                    .coeffs
                    .iter()
                    .position(|c| !c.is_zero())
                    .expect("roots are nonzero");
                if self.coeffs[j].is_zero() {
                    continue;
                }
                let q = &self.coeffs[j] / &root.coeffs[j];
                if *self == root.scale(&q) {
                    let (mut q, has_i) = match a {
                        0 => (q, false),
                        1 => (q, true),
                        2 => (-q, false),
                        _ => (-q, true),
                    };
                    let negative = q.is_negative();
                    if negative {
                        q = -q;
                    }
                    let mut factors: Vec<String> = Vec::new();
                    if !q.is_one() || (!has_i && b == 0) {
                        factors.push(q.to_string());
                    }
                    if has_i {
                        factors.push("i".to_string());
                    }
                    if b == 1 {
                        factors.push("w".to_string());
                    } else if b > 1 {
                        factors.push(format!("w^{}", b));
                    }
                    let body = factors.join("*");
                    return Some(if negative { format!("-{}", body) } else { body });
                }
            }
        }
        None
    }
}

impl fmt::Debug for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloNum(N={}, {})", self.conductor, self)
    }
}

impl fmt::Display for CycloNum {
    /// Power-basis rendering; `z` stands for ζ_N.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if j == 0 {
                write!(f, "{}", mag)?;
            } else {
                if !mag.is_one() {
                    write!(f, "{}*", mag)?;
                }
                if j == 1 {
                    write!(f, "z")?;
                } else {
                    write!(f, "z^{}", j)?;
                }
            }
        }
        Ok(())
    }
}

impl Add for &CycloNum {
    type Output = CycloNum;
    fn add(self, rhs: &CycloNum) -> CycloNum {
        self.assert_same_conductor(rhs);
        CycloNum {
            conductor: self.conductor,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &CycloNum {
    type Output = CycloNum;
    fn sub(self, rhs: &CycloNum) -> CycloNum {
        self.assert_same_conductor(rhs);
        CycloNum {
            conductor: self.conductor,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        CycloNum {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &CycloNum {
    type Output = CycloNum;
    fn mul(self, rhs: &CycloNum) -> CycloNum {
        self.assert_same_conductor(rhs);
        let c = ctx(self.conductor);
        let (a_int, a_den) = self.to_scaled_ints();
        let (b_int, b_den) = rhs.to_scaled_ints();
        let prod = c.zc_mul(&a_int, &b_int);
        let den = a_den * b_den;
        CycloNum {
            conductor: self.conductor,
            coeffs: prod
                .into_iter()
                .map(|p| Rational::new(p, den.clone()))
                .collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for CycloNum {
            type Output = CycloNum;
            fn $method(self, rhs: CycloNum) -> CycloNum {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&CycloNum> for CycloNum {
            type Output = CycloNum;
            fn $method(self, rhs: &CycloNum) -> CycloNum {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        -&self
    }
}
