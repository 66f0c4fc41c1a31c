//! Exact determinants over ℚ(ζ_N) by modular evaluation.
//!
//! For primes p ≡ 1 (mod N), F_p contains an element θ of exact order N, and
//! ζ ↦ θ^a for each unit a of ℤ/N is a ring map into F_p. The determinant of
//! a matrix over ℤ[ζ] evaluated at θ^a equals the evaluation of the exact
//! determinant, so φ(N) evaluations pin the determinant's power-basis
//! coefficients modulo p (the evaluation matrix is a Vandermonde on distinct
//! nodes, hence invertible mod every such p). CRT over enough primes plus a
//! Hadamard-style coefficient bound recovers the integer coefficients
//! exactly.
//!
//! This is the engine behind `check_haar` and `chebotarev_check` in exact
//! mode; it is cross-validated against the Bareiss `det_exact` and the
//! cofactor oracle in the test suites.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use once_cell::sync::Lazy;

use crate::cyclotomic::{ctx, CycloNum};
use crate::dihedral::Matrix;
use crate::rational::Rational;

// -- u64 modular arithmetic --------------------------------------------------

#[inline]
fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    acc
}

#[inline]
fn invmod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

/// Deterministic Miller–Rabin for u64.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

// -- per-prime evaluation data ------------------------------------------------

struct ModPrime {
    p: u64,
    /// θ^k for 0 ≤ k < N, θ of exact multiplicative order N.
    theta_pows: Vec<u64>,
    /// Units of ℤ/N in ascending order; embedding j maps ζ ↦ θ^{units[j]}.
    units: Vec<u64>,
    /// Inverse of the φ×φ evaluation matrix V[j][t] = θ^{units[j]·t}, row-major.
    vinv: Vec<u64>,
}

impl ModPrime {
    fn new(p: u64, conductor: u32) -> Self {
        let n = conductor as u64;
        debug_assert_eq!((p - 1) % n, 0);
        // Find θ of exact order N.
        let factors = prime_factors(n);
        let mut g = 2u64;
        let theta = loop {
            let cand = powmod(g, (p - 1) / n, p);
            if cand != 1 && factors.iter().all(|&q| powmod(cand, n / q, p) != 1) {
                break cand;
            }
            g += 1;
        };
        let mut theta_pows = Vec::with_capacity(n as usize);
        let mut acc = 1u64;
        for _ in 0..n {
            theta_pows.push(acc);
            acc = mulmod(acc, theta, p);
        }
        let units: Vec<u64> = (1..n).filter(|a| a.gcd(&n) == 1).collect();
        let phi = units.len();
        // Build V and invert by Gauss-Jordan mod p.
        let mut v = vec![0u64; phi * phi];
        for (j, &a) in units.iter().enumerate() {
            for t in 0..phi {
                v[j * phi + t] = theta_pows[(a as usize * t) % n as usize];
            }
        }
        let vinv = invert_mod_matrix(&v, phi, p).expect("Vandermonde on distinct nodes");
        ModPrime {
            p,
            theta_pows,
            units,
            vinv,
        }
    }
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut q = 2;
    while q * q <= n {
        if n.is_multiple_of(q) {
            out.push(q);
            while n.is_multiple_of(q) {
                n /= q;
            }
        }
        q += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn invert_mod_matrix(m: &[u64], dim: usize, p: u64) -> Option<Vec<u64>> {
    let mut work = m.to_vec();
    let mut inv = vec![0u64; dim * dim];
    for i in 0..dim {
        inv[i * dim + i] = 1;
    }
    for col in 0..dim {
        let pivot_row = (col..dim).find(|&r| work[r * dim + col] != 0)?;
        if pivot_row != col {
            for j in 0..dim {
                work.swap(pivot_row * dim + j, col * dim + j);
                inv.swap(pivot_row * dim + j, col * dim + j);
            }
        }
        let pinv = invmod(work[col * dim + col], p);
        for j in 0..dim {
            work[col * dim + j] = mulmod(work[col * dim + j], pinv, p);
            inv[col * dim + j] = mulmod(inv[col * dim + j], pinv, p);
        }
        for r in 0..dim {
            if r == col || work[r * dim + col] == 0 {
                continue;
            }
            let f = work[r * dim + col];
            for j in 0..dim {
                let w = mulmod(f, work[col * dim + j], p);
                work[r * dim + j] = (work[r * dim + j] + p - w) % p;
                let v = mulmod(f, inv[col * dim + j], p);
                inv[r * dim + j] = (inv[r * dim + j] + p - v) % p;
            }
        }
    }
    Some(inv)
}

// -- prime cache ---------------------------------------------------------------

static PRIME_CACHE: Lazy<std::sync::Mutex<HashMap<u32, Vec<Arc<ModPrime>>>>> =
    Lazy::new(|| std::sync::Mutex::new(HashMap::new()));

/// First `count` primes p ≡ 1 (mod N) descending from 2^62.
fn primes_for(conductor: u32, count: usize) -> Vec<Arc<ModPrime>> {
    let mut cache = PRIME_CACHE.lock().unwrap();
    let list = cache.entry(conductor).or_default();
    while list.len() < count {
        let n = conductor as u64;
        let mut candidate = match list.last() {
            Some(last) => last.p - n,
            None => (1u64 << 62) / n * n + 1,
        };
        while !is_prime_u64(candidate) {
            candidate -= n;
        }
        list.push(Arc::new(ModPrime::new(candidate, conductor)));
    }
    list[..count].to_vec()
}

// -- the engine ------------------------------------------------------------------

/// Exact determinant engine for square submatrices of a fixed matrix of
/// cyclotomic numbers. Denominators are cleared row-wise up front; entry
/// evaluations mod each prime are shared across submatrix calls.
pub(crate) struct ExactDetEngine {
    conductor: u32,
    phi: usize,
    n_cols: usize,
    /// Per-row denominator scale (row of the scaled matrix = scale · row).
    row_scales: Vec<BigInt>,
    /// Upper bound on |entry| per (row, col).
    entry_bounds: Vec<f64>,
    primes: Vec<Arc<ModPrime>>,
    /// evals[prime][embedding][row·n_cols + col] = scaled entry image in F_p.
    evals: Vec<Vec<Vec<u64>>>,
}

impl ExactDetEngine {
    /// Build an engine for row/column subsets of the given rows, sized for
    /// determinants up to `max_dim` × `max_dim`.
    pub fn from_rows(rows: &[Vec<CycloNum>], max_dim: usize) -> Self {
        assert!(!rows.is_empty());
        let n_cols = rows[0].len();
        let conductor = rows[0][0].conductor();
        let c = ctx(conductor);
        let phi = c.phi;

        // Clear denominators row-wise and collect embedding bounds.
        let mut row_scales = Vec::with_capacity(rows.len());
        let mut scaled_rows: Vec<Vec<Vec<BigInt>>> = Vec::with_capacity(rows.len());
        let mut entry_bounds = Vec::with_capacity(rows.len() * n_cols);
        let mut row_norms = Vec::with_capacity(rows.len());
        for row in rows {
            assert_eq!(row.len(), n_cols);
            let mut den = BigInt::one();
            for x in row {
                for q in x.coeffs() {
                    den = den.lcm(q.denom());
                }
            }
            let mut scaled_row = Vec::with_capacity(n_cols);
            let mut norm_sq = 0.0f64;
            for x in row {
                let ints: Vec<BigInt> = x
                    .coeffs()
                    .iter()
                    .map(|q| q.numer() * (&den / q.denom()))
                    .collect();
                let bound: f64 = ints.iter().map(|v| bigint_to_f64_up(v).abs()).sum();
                entry_bounds.push(bound);
                norm_sq += bound * bound;
                scaled_row.push(ints);
            }
            row_norms.push(norm_sq.sqrt());
            row_scales.push(den);
            scaled_rows.push(scaled_row);
        }

        // Coefficient bound: |coeff_t(det)| ≤ C_N · Π (top max_dim row norms),
        // where C_N bounds the inverse embedding transform. Padded generously.
        let mut sorted_norms = row_norms.clone();
        sorted_norms.sort_by(|a, b| b.partial_cmp(a).unwrap());
        let mut log2_bound = embedding_inverse_log2(conductor);
        for v in sorted_norms.iter().take(max_dim.min(sorted_norms.len())) {
            log2_bound += v.max(1.0).log2();
        }
        let bits_needed = log2_bound + 24.0; // safety margin + sign bit
        let n_primes = ((bits_needed / 61.0).ceil() as usize).max(1);
        let primes = primes_for(conductor, n_primes);

        // Evaluate every scaled entry at every embedding for every prime.
        let mut evals = Vec::with_capacity(primes.len());
        for mp in &primes {
            let p = mp.p;
            let big_p = BigInt::from(p);
            // Reduce coefficients once per entry.
            let reduced: Vec<Vec<u64>> = scaled_rows
                .iter()
                .flat_map(|row| {
                    row.iter().map(|ints| {
                        ints.iter()
                            .map(|v| v.mod_floor(&big_p).to_u64().expect("residue fits u64"))
                            .collect::<Vec<u64>>()
                    })
                })
                .collect();
            let mut per_embed = Vec::with_capacity(mp.units.len());
            for &a in &mp.units {
                let mut entries = Vec::with_capacity(reduced.len());
                for coeffs in &reduced {
                    let mut acc = 0u64;
                    for (t, &ct) in coeffs.iter().enumerate() {
                        if ct != 0 {
                            let pw = mp.theta_pows[(a as usize * t) % conductor as usize];
                            acc = (acc + mulmod(ct, pw, p)) % p;
                        }
                    }
                    entries.push(acc);
                }
                per_embed.push(entries);
            }
            evals.push(per_embed);
        }

        ExactDetEngine {
            conductor,
            phi,
            n_cols,
            row_scales,
            entry_bounds,
            primes,
            evals,
        }
    }

    pub fn from_matrix(m: &Matrix, max_dim: usize) -> Self {
        let rows: Vec<Vec<CycloNum>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
        Self::from_rows(&rows, max_dim)
    }

    /// Exact determinant of the submatrix on `rows` × `cols` (equal lengths).
    pub fn det(&self, rows: &[usize], cols: &[usize]) -> CycloNum {
        assert_eq!(rows.len(), cols.len());
        let d = rows.len();
        let conductor = self.conductor;
        if d == 0 {
            return CycloNum::one(conductor);
        }
        // A zero row bound forces a zero determinant.
        for &r in rows {
            if cols
                .iter()
                .all(|&c| self.entry_bounds[r * self.n_cols + c] == 0.0)
            {
                return CycloNum::zero(conductor);
            }
        }
        let ints = self.det_scaled_ints(rows, cols);
        // Undo the row scaling.
        let mut scale = BigInt::one();
        for &r in rows {
            scale *= &self.row_scales[r];
        }
        let coeffs: Vec<Rational> = ints
            .into_iter()
            .map(|c| Rational::new(c, scale.clone()))
            .collect();
        CycloNum::from_coeffs(conductor, coeffs)
    }

    /// Exact zero test of the submatrix determinant.
    pub fn is_singular(&self, rows: &[usize], cols: &[usize]) -> bool {
        for &r in rows {
            if cols
                .iter()
                .all(|&c| self.entry_bounds[r * self.n_cols + c] == 0.0)
            {
                return true;
            }
        }
        self.det_scaled_ints(rows, cols).iter().all(|c| c.is_zero())
    }

    /// Power-basis integer coefficients of det(scaled submatrix).
    fn det_scaled_ints(&self, rows: &[usize], cols: &[usize]) -> Vec<BigInt> {
        let d = rows.len();
        let phi = self.phi;
        let mut per_prime: Vec<Vec<u64>> = Vec::with_capacity(self.primes.len());
        let mut scratch = vec![0u64; d * d];
        for (pi, mp) in self.primes.iter().enumerate() {
            let p = mp.p;
            // Evaluate det at each embedding.
            let mut det_evals = Vec::with_capacity(phi);
            for embed in &self.evals[pi] {
                for (i, &r) in rows.iter().enumerate() {
                    for (j, &c) in cols.iter().enumerate() {
                        scratch[i * d + j] = embed[r * self.n_cols + c];
                    }
                }
                det_evals.push(det_mod_p(&mut scratch, d, p));
            }
            // Interpolate power-basis coefficients: coeff = Vinv · det_evals.
            let mut coeffs = Vec::with_capacity(phi);
            for t in 0..phi {
                let mut acc = 0u64;
                for (j, ev) in det_evals.iter().enumerate() {
                    acc = (acc + mulmod(mp.vinv[t * phi + j], *ev, p)) % p;
                }
                coeffs.push(acc);
            }
            per_prime.push(coeffs);
        }
        // CRT across primes, balanced lift.
        let mut modulus = BigInt::one();
        for mp in &self.primes {
            modulus *= BigInt::from(mp.p);
        }
        let half = &modulus >> 1;
        (0..phi)
            .map(|t| {
                let mut x = BigInt::zero();
                let mut m_acc = BigInt::one();
                for (pi, mp) in self.primes.iter().enumerate() {
                    let p_big = BigInt::from(mp.p);
                    let r = BigInt::from(per_prime[pi][t]);
                    // Solve x' ≡ x (mod m_acc), x' ≡ r (mod p).
                    let x_mod_p = x.mod_floor(&p_big);
                    let diff = (&r - &x_mod_p).mod_floor(&p_big);
                    let m_inv = modinv_big(&m_acc, &p_big);
                    let k = (diff * m_inv).mod_floor(&p_big);
                    x += &m_acc * k;
                    m_acc *= p_big;
                }
                if x > half {
                    x -= &modulus;
                }
                x
            })
            .collect()
    }
}

fn modinv_big(a: &BigInt, p: &BigInt) -> BigInt {
    // p prime; Fermat is plenty for 63-bit moduli.
    let a = a.mod_floor(p);
    a.modpow(&(p - BigInt::from(2)), p)
}

fn bigint_to_f64_up(v: &BigInt) -> f64 {
    // f64 conversion rounds to nearest; nudge upward so the Hadamard bound
    // stays an upper bound.
    let x = v.abs().to_string().parse::<f64>().unwrap_or(f64::MAX);
    x * (1.0 + 1e-9) + 1e-9
}

/// log2 of a bound on the row sums of the inverse embedding matrix
/// (ζ^{a_j·t})⁻¹, computed numerically per conductor with padding.
fn embedding_inverse_log2(conductor: u32) -> f64 {
    static CACHE: Lazy<std::sync::Mutex<HashMap<u32, f64>>> =
        Lazy::new(|| std::sync::Mutex::new(HashMap::new()));
    if let Some(&v) = CACHE.lock().unwrap().get(&conductor) {
        return v;
    }
    let n = conductor as usize;
    let units: Vec<usize> = (1..n).filter(|a| a.gcd(&n) == 1).collect();
    let phi = units.len();
    let v = nalgebra::DMatrix::from_fn(phi, phi, |j, t| {
        let angle = 2.0 * std::f64::consts::PI * ((units[j] * t) % n) as f64 / n as f64;
        num_complex::Complex64::new(angle.cos(), angle.sin())
    });
    let vinv = v.try_inverse().expect("embedding matrix invertible");
    let mut max_row_sum = 0.0f64;
    for t in 0..phi {
        let s: f64 = (0..phi).map(|j| vinv[(t, j)].norm()).sum();
        max_row_sum = max_row_sum.max(s);
    }
    let out = (max_row_sum * 1.01 + 1.0).log2();
    CACHE.lock().unwrap().insert(conductor, out);
    out
}

/// Determinant of a d×d matrix over F_p by Gaussian elimination (in-place).
fn det_mod_p(m: &mut [u64], d: usize, p: u64) -> u64 {
    let mut det = 1u64;
    for col in 0..d {
        let pivot_row = match (col..d).find(|&r| m[r * d + col] != 0) {
            Some(r) => r,
            None => return 0,
        };
        if pivot_row != col {
            for j in col..d {
                m.swap(pivot_row * d + j, col * d + j);
            }
            det = p - det;
        }
        let pivot = m[col * d + col];
        det = mulmod(det, pivot, p);
        let pinv = invmod(pivot, p);
        for r in (col + 1)..d {
            let lead = m[r * d + col];
            if lead == 0 {
                continue;
            }
            let factor = mulmod(lead, pinv, p);
            m[r * d + col] = 0;
            for j in (col + 1)..d {
                let sub = mulmod(factor, m[col * d + j], p);
                m[r * d + j] = (m[r * d + j] + p - sub) % p;
            }
        }
    }
    det % p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::conductor_for;
    use crate::rational::rat;

    #[test]
    fn miller_rabin_sanity() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(61));
        assert!(is_prime_u64(4611686018427387847)); // near 2^62
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64(4611686018427387841));
        assert!(!is_prime_u64(3215031751)); // strong pseudoprime to 2,3,5,7
    }

    #[test]
    fn primes_found_for_common_conductors() {
        for n in [4u32, 12, 20, 28, 36] {
            let ps = primes_for(n, 2);
            assert_eq!(ps.len(), 2);
            for mp in ps {
                assert!(is_prime_u64(mp.p));
                assert_eq!((mp.p - 1) % n as u64, 0);
                // θ has exact order N.
                assert_eq!(mp.theta_pows.len(), n as usize);
                assert_eq!(
                    mulmod(mp.theta_pows[n as usize - 1], mp.theta_pows[1], mp.p),
                    1
                );
            }
        }
    }

    #[test]
    fn identity_and_simple_determinants() {
        let cond = conductor_for(5);
        let id = Matrix::identity(5, cond);
        let eng = ExactDetEngine::from_matrix(&id, 5);
        let idx: Vec<usize> = (0..5).collect();
        assert!(eng.det(&idx, &idx).is_one());
        assert!(!eng.is_singular(&idx, &idx));
    }

    #[test]
    fn repeated_row_is_singular() {
        let cond = conductor_for(3);
        let w = CycloNum::omega(3);
        let row = vec![CycloNum::one(cond), w.clone(), &w * &w];
        let rows = vec![row.clone(), row.clone(), vec![CycloNum::one(cond); 3]];
        let eng = ExactDetEngine::from_rows(&rows, 3);
        assert!(eng.is_singular(&[0, 1, 2], &[0, 1, 2]));
        assert!(eng.det(&[0, 1, 2], &[0, 1, 2]).is_zero());
    }

    #[test]
    fn rational_scaling_recovered() {
        // diag(3/2, -2/7) has determinant -3/7.
        let cond = 4;
        let m = Matrix::new(
            2,
            2,
            vec![
                CycloNum::from_rational(cond, rat(3, 2)),
                CycloNum::zero(cond),
                CycloNum::zero(cond),
                CycloNum::from_rational(cond, rat(-2, 7)),
            ],
        );
        let eng = ExactDetEngine::from_matrix(&m, 2);
        let det = eng.det(&[0, 1], &[0, 1]);
        assert_eq!(det, CycloNum::from_rational(cond, rat(-3, 7)));
    }

    #[test]
    fn engine_matches_bareiss_on_large_conductors() {
        // Exercises the prime search and bound machinery for phi(N) up to 16.
        use crate::minors::det_exact;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(321);
        for n in [9u32, 11, 15] {
            let cond = conductor_for(n);
            for trial in 0..4 {
                let d = 2 + trial % 3;
                let m = Matrix::from_fn(d, d, |_, _| {
                    crate::sampling::random_cyclotomic(cond, 7, &mut rng)
                });
                let eng = ExactDetEngine::from_matrix(&m, d);
                let idx: Vec<usize> = (0..d).collect();
                assert_eq!(eng.det(&idx, &idx), det_exact(&m), "n={} trial={}", n, trial);
            }
        }
    }
}
