//! Exact and floating-point determinants, Haar-property certification of
//! orbit matrices, the even-n dependence certificate, and Chebotarev
//! verification of DFT minors.
//!
//! A family of 2n orbit vectors in ℂ^d has the Haar property when every d of
//! them form a basis, i.e. every d×d minor of the orbit matrix is nonzero.
//! Exact mode decides each minor with a zero test in ℚ(ζ_N); float mode only
//! reports numerical nonsingularity and never constitutes a certificate.

use std::fmt;

use itertools::Itertools;
use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::cyclotomic::{ctx, CycloNum};
use crate::dihedral::{DihedralError, GroupElement, Matrix, RepKind, RepLike, Representation};
use crate::modular::ExactDetEngine;
use crate::rational::Rational;
use crate::threads;

#[derive(Debug, Error)]
pub enum MinorsError {
    #[error("vector has length {got}, representation dimension is {want}")]
    DimMismatch { want: usize, got: usize },
    #[error("vector entries must live in conductor {want}, got {got}")]
    ConductorMismatch { want: u32, got: u32 },
    #[error("n must be even and greater than 2, got {0}")]
    NotEvenOrder(u32),
    #[error(transparent)]
    Rep(#[from] DihedralError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exact,
    Float,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Exact => write!(f, "exact"),
            Mode::Float => write!(f, "float"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Pass => write!(f, "PASS"),
            Status::Fail => write!(f, "FAIL"),
        }
    }
}

// ---------------------------------------------------------------------------
// Orbit matrices
// ---------------------------------------------------------------------------

/// The 2n×d matrix whose rows are ρ(g)v over the fixed element order
/// e, r, …, r^{n−1}, s, rs, …, r^{n−1}s.
#[derive(Clone)]
pub struct OrbitMatrix {
    n: u32,
    dim: usize,
    conductor: u32,
    labels: Vec<GroupElement>,
    rows: Vec<Vec<CycloNum>>,
}

/// Build the orbit matrix of `v` under `rep`.
pub fn orbit_matrix(rep: &impl RepLike, v: &[CycloNum]) -> Result<OrbitMatrix, MinorsError> {
    if v.len() != rep.dim() {
        return Err(MinorsError::DimMismatch {
            want: rep.dim(),
            got: v.len(),
        });
    }
    for x in v {
        if x.conductor() != rep.conductor() {
            return Err(MinorsError::ConductorMismatch {
                want: rep.conductor(),
                got: x.conductor(),
            });
        }
    }
    let n = rep.group_order();
    let labels = GroupElement::enumerate(n);
    let rows = labels.iter().map(|&g| rep.matrix(g).apply(v)).collect();
    Ok(OrbitMatrix {
        n,
        dim: rep.dim(),
        conductor: rep.conductor(),
        labels,
        rows,
    })
}

impl OrbitMatrix {
    pub fn group_order(&self) -> u32 {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn labels(&self) -> &[GroupElement] {
        &self.labels
    }

    pub fn rows(&self) -> &[Vec<CycloNum>] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[CycloNum] {
        &self.rows[i]
    }

    pub fn to_complex(&self) -> DMatrix<Complex64> {
        DMatrix::from_fn(self.rows.len(), self.dim, |i, j| {
            self.rows[i][j].to_complex_float()
        })
    }
}

// ---------------------------------------------------------------------------
// Determinants
// ---------------------------------------------------------------------------

fn zc_is_zero(a: &[BigInt]) -> bool {
    a.iter().all(|c| c.is_zero())
}

fn zc_sub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Exact division by a fixed nonzero element of ℤ[ζ], realized as
/// multiplication by d·x⁻¹ followed by exact integer division by d.
struct ZDivisor {
    num: Vec<BigInt>,
    den: BigInt,
}

impl ZDivisor {
    fn new(conductor: u32, pivot: &[BigInt]) -> Self {
        let inv = CycloNum::from_int_coeffs(conductor, pivot)
            .inverse()
            .expect("pivot is nonzero");
        let mut den = BigInt::one();
        for c in inv.coeffs() {
            den = den.lcm(c.denom());
        }
        let num = inv
            .coeffs()
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        ZDivisor { num, den }
    }

    fn exact_div(&self, conductor: u32, a: &[BigInt]) -> Vec<BigInt> {
        let prod = ctx(conductor).zc_mul(a, &self.num);
        prod.into_iter()
            .map(|c| {
                let (q, r) = c.div_rem(&self.den);
                assert!(r.is_zero(), "Bareiss division was not exact");
                q
            })
            .collect()
    }
}

/// Exact determinant by Bareiss fraction-free elimination over ℚ(ζ_N).
///
/// Denominators are cleared row-wise first; every intermediate value stays
/// integral (the k-step entries are (k+1)-minors of the scaled matrix), and
/// the scale is divided back out of the final value.
pub fn det_exact(m: &Matrix) -> CycloNum {
    assert_eq!(m.rows(), m.cols(), "determinant of a non-square matrix");
    let d = m.rows();
    let conductor = m.get(0, 0).conductor();
    let c = ctx(conductor);

    let mut scale = BigInt::one();
    let mut rows: Vec<Vec<Vec<BigInt>>> = Vec::with_capacity(d);
    for i in 0..d {
        let mut den = BigInt::one();
        for x in m.row(i) {
            for q in x.coeffs() {
                den = den.lcm(q.denom());
            }
        }
        let row = m
            .row(i)
            .iter()
            .map(|x| {
                x.coeffs()
                    .iter()
                    .map(|q| q.numer() * (&den / q.denom()))
                    .collect::<Vec<BigInt>>()
            })
            .collect();
        scale *= &den;
        rows.push(row);
    }

    let mut negated = false;
    let mut prev_pivot: Option<Vec<BigInt>> = None;
    for step in 0..d.saturating_sub(1) {
        let pivot_row = match (step..d).find(|&r| !zc_is_zero(&rows[r][step])) {
            Some(r) => r,
            None => return CycloNum::zero(conductor),
        };
        if pivot_row != step {
            rows.swap(pivot_row, step);
            negated = !negated;
        }
        let divisor = prev_pivot.as_ref().map(|p| ZDivisor::new(conductor, p));
        for j in (step + 1)..d {
            for k in (step + 1)..d {
                let num = zc_sub(
                    &c.zc_mul(&rows[j][k], &rows[step][step]),
                    &c.zc_mul(&rows[j][step], &rows[step][k]),
                );
                rows[j][k] = match &divisor {
                    Some(dv) => dv.exact_div(conductor, &num),
                    None => num,
                };
            }
        }
        prev_pivot = Some(rows[step][step].clone());
    }

    let mut det = rows[d - 1][d - 1].clone();
    if negated {
        for v in det.iter_mut() {
            *v = -std::mem::take(v);
        }
    }
    let coeffs: Vec<Rational> = det
        .into_iter()
        .map(|v| Rational::new(v, scale.clone()))
        .collect();
    CycloNum::from_coeffs(conductor, coeffs)
}

/// Cofactor-expansion determinant: the independent cross-check oracle for
/// [`det_exact`] and the modular engine.
pub fn det_cofactor(m: &Matrix) -> CycloNum {
    assert_eq!(m.rows(), m.cols());
    let d = m.rows();
    let conductor = m.get(0, 0).conductor();
    if d == 1 {
        return m.get(0, 0).clone();
    }
    let mut acc = CycloNum::zero(conductor);
    for j in 0..d {
        if m.get(0, j).is_zero() {
            continue;
        }
        let minor = Matrix::from_fn(d - 1, d - 1, |r, c| {
            m.get(r + 1, if c < j { c } else { c + 1 }).clone()
        });
        let term = m.get(0, j) * &det_cofactor(&minor);
        if j % 2 == 0 {
            acc = &acc + &term;
        } else {
            acc = &acc - &term;
        }
    }
    acc
}

#[derive(Clone, Copy, Debug)]
pub struct FloatDet {
    pub value: Complex64,
    pub singular: bool,
}

/// LU determinant with partial pivoting; SINGULAR iff
/// |det| ≤ 1e−9 · Π row 2-norms (Hadamard-scaled threshold).
pub fn det_float(m: &DMatrix<Complex64>) -> FloatDet {
    assert_eq!(m.nrows(), m.ncols());
    let hadamard: f64 = (0..m.nrows())
        .map(|i| m.row(i).iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt())
        .product();
    let value = m.clone().lu().determinant();
    FloatDet {
        value,
        singular: value.norm() <= 1e-9 * hadamard,
    }
}

// ---------------------------------------------------------------------------
// Haar certification
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub enum Witness {
    Exact(Vec<CycloNum>),
    Float(Vec<Complex64>),
}

/// Outcome of checking all C(2n, d) row subsets of an orbit matrix.
///
/// On FAIL the witness holds row-combination coefficients for the failing
/// subset: Σ_i wᵢ · rowᵢ = 0, normalized so the first nonzero coordinate
/// is 1. `subsets_checked` is the lexicographic rank of the failing subset
/// plus one (or the full count on PASS).
#[derive(Clone, Debug)]
pub struct HaarCertificate {
    pub status: Status,
    pub mode: Mode,
    pub subsets_checked: usize,
    pub failing_subset: Option<Vec<GroupElement>>,
    pub kernel_witness: Option<Witness>,
}

/// Certify the Haar property of an orbit matrix.
///
/// Subsets are scanned in lexicographic order over row indices in the fixed
/// element order; evaluation fans out to worker threads in blocks, and the
/// reported failure is always the lexicographically least failing subset.
pub fn check_haar(m: &OrbitMatrix, mode: Mode) -> HaarCertificate {
    let d = m.dim;
    let total_rows = m.rows.len();
    assert!(total_rows >= d, "orbit must have at least dim rows");
    match mode {
        Mode::Exact => {
            let engine = ExactDetEngine::from_rows(&m.rows, d);
            let cols: Vec<usize> = (0..d).collect();
            let first_failure = threads::run(|| {
                scan_subsets(total_rows, d, |subset| engine.is_singular(subset, &cols))
            });
            match first_failure {
                None => HaarCertificate {
                    status: Status::Pass,
                    mode,
                    subsets_checked: binomial(total_rows, d),
                    failing_subset: None,
                    kernel_witness: None,
                },
                Some((rank, subset)) => {
                    debug_assert!(engine.det(&subset, &cols).is_zero());
                    let witness = exact_row_kernel(m, &subset);
                    HaarCertificate {
                        status: Status::Fail,
                        mode,
                        subsets_checked: rank + 1,
                        failing_subset: Some(subset.iter().map(|&i| m.labels[i]).collect()),
                        kernel_witness: Some(Witness::Exact(witness)),
                    }
                }
            }
        }
        Mode::Float => check_haar_complex(&m.to_complex(), m.n, mode),
    }
}

/// Float-path Haar scan over an explicit complex row matrix (2n rows); used
/// by `check_haar` in float mode and directly for families that exist only
/// numerically (e.g. conjugation by a random unitary).
pub fn check_haar_complex(rows: &DMatrix<Complex64>, n: u32, mode: Mode) -> HaarCertificate {
    let d = rows.ncols();
    let total_rows = rows.nrows();
    let labels = GroupElement::enumerate(n);
    assert_eq!(labels.len(), total_rows);
    let first_failure = threads::run(|| {
        scan_subsets(total_rows, d, |subset| {
            let sub = DMatrix::from_fn(d, d, |i, j| rows[(subset[i], j)]);
            det_float(&sub).singular
        })
    });
    match first_failure {
        None => HaarCertificate {
            status: Status::Pass,
            mode: Mode::Float,
            subsets_checked: binomial(total_rows, d),
            failing_subset: None,
            kernel_witness: None,
        },
        Some((rank, subset)) => {
            let sub_t = DMatrix::from_fn(d, d, |i, j| rows[(subset[j], i)]);
            let witness = float_kernel_vector(&sub_t);
            HaarCertificate {
                status: Status::Fail,
                mode,
                subsets_checked: rank + 1,
                failing_subset: Some(subset.iter().map(|&i| labels[i]).collect()),
                kernel_witness: Some(Witness::Float(witness)),
            }
        }
    }
}

/// Scan lexicographic d-subsets of 0..total in parallel blocks; return the
/// first (lowest-rank) subset where `is_bad` holds.
fn scan_subsets(
    total: usize,
    d: usize,
    is_bad: impl Fn(&[usize]) -> bool + Sync,
) -> Option<(usize, Vec<usize>)> {
    const BLOCK: usize = 1024;
    let mut iter = (0..total).combinations(d).enumerate();
    loop {
        let block: Vec<(usize, Vec<usize>)> = iter.by_ref().take(BLOCK).collect();
        if block.is_empty() {
            return None;
        }
        let hit = block
            .par_iter()
            .filter(|(_, subset)| is_bad(subset))
            .min_by_key(|(rank, _)| *rank);
        if let Some((rank, subset)) = hit {
            return Some((*rank, subset.clone()));
        }
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

/// Exact row-combination kernel vector of a singular row subset:
/// fraction-free elimination of the transposed submatrix to echelon form,
/// then back-substitution over the field, normalized to leading coefficient 1.
fn exact_row_kernel(m: &OrbitMatrix, subset: &[usize]) -> Vec<CycloNum> {
    let d = subset.len();
    let conductor = m.conductor;
    let c = ctx(conductor);
    // T[i][j] = column i of the submatrix at subset row j, i.e. T is the
    // transposed submatrix. Each T row is cleared to integers by one common
    // factor; uniform row scaling leaves the kernel unchanged.
    let mut t: Vec<Vec<Vec<BigInt>>> = (0..d)
        .map(|i| {
            let mut den = BigInt::one();
            for &r in subset {
                for q in m.rows[r][i].coeffs() {
                    den = den.lcm(q.denom());
                }
            }
            subset
                .iter()
                .map(|&r| {
                    m.rows[r][i]
                        .coeffs()
                        .iter()
                        .map(|q| q.numer() * (&den / q.denom()))
                        .collect::<Vec<BigInt>>()
                })
                .collect()
        })
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut rank = 0usize;
    for col in 0..d {
        if rank == d {
            break;
        }
        let pivot_row = match (rank..d).find(|&r| !zc_is_zero(&t[r][col])) {
            Some(r) => r,
            None => continue,
        };
        t.swap(pivot_row, rank);
        for j in (rank + 1)..d {
            if zc_is_zero(&t[j][col]) {
                continue;
            }
            for k in (col + 1)..d {
                t[j][k] = zc_sub(
                    &c.zc_mul(&t[j][k], &t[rank][col]),
                    &c.zc_mul(&t[j][col], &t[rank][k]),
                );
            }
            t[j][col] = vec![BigInt::zero(); c.phi];
        }
        pivots.push((rank, col));
        rank += 1;
    }
    assert!(rank < d, "kernel extraction called on a nonsingular subset");
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let free = (0..d)
        .find(|c| !pivot_cols.contains(c))
        .expect("rank deficiency yields a free column");
    let mut x = vec![CycloNum::zero(conductor); d];
    x[free] = CycloNum::one(conductor);
    for &(row, col) in pivots.iter().rev() {
        let mut acc = CycloNum::zero(conductor);
        for k in (col + 1)..d {
            if x[k].is_zero() || zc_is_zero(&t[row][k]) {
                continue;
            }
            acc = &acc + &(&CycloNum::from_int_coeffs(conductor, &t[row][k]) * &x[k]);
        }
        let pivot_inv = CycloNum::from_int_coeffs(conductor, &t[row][col])
            .inverse()
            .expect("pivot entries are nonzero");
        x[col] = -&(&acc * &pivot_inv);
    }
    let lead = x
        .iter()
        .position(|v| !v.is_zero())
        .expect("kernel vector is nonzero");
    let lead_inv = x[lead].inverse().unwrap();
    let witness: Vec<CycloNum> = x.iter().map(|v| v * &lead_inv).collect();
    debug_assert!(validate_row_kernel(m, subset, &witness));
    witness
}

/// Check Σ_i wᵢ · rowᵢ = 0 exactly.
pub fn validate_row_kernel(m: &OrbitMatrix, subset: &[usize], witness: &[CycloNum]) -> bool {
    let conductor = m.conductor;
    (0..m.dim).all(|j| {
        let mut acc = CycloNum::zero(conductor);
        for (w, &r) in witness.iter().zip(subset) {
            acc = &acc + &(w * &m.rows[r][j]);
        }
        acc.is_zero()
    })
}

fn float_kernel_vector(sub_t: &DMatrix<Complex64>) -> Vec<Complex64> {
    let svd = sub_t.clone().svd(true, true);
    let (mut min_idx, mut min_val) = (0usize, f64::INFINITY);
    for (i, s) in svd.singular_values.iter().enumerate() {
        if *s < min_val {
            min_val = *s;
            min_idx = i;
        }
    }
    let v_t = svd.v_t.expect("svd computed");
    let x: Vec<Complex64> = (0..sub_t.ncols())
        .map(|j| v_t[(min_idx, j)].conj())
        .collect();
    let lead_mag = x.iter().map(|z| z.norm()).fold(0.0f64, f64::max);
    let lead = x
        .iter()
        .find(|z| z.norm() > 1e-8 * lead_mag)
        .copied()
        .unwrap_or(Complex64::new(1.0, 0.0));
    x.iter().map(|z| z / lead).collect()
}

// ---------------------------------------------------------------------------
// The even-n dependence certificate
// ---------------------------------------------------------------------------

/// The subset {r^{2k}} ∪ {r^{2k}s} with coefficients (+1, …, −1, …) whose
/// dependence defeats the Haar property for every vector when n is even.
#[derive(Clone, Debug)]
pub struct DependenceCertificate {
    pub n: u32,
    pub plus_set: Vec<GroupElement>,
    pub minus_set: Vec<GroupElement>,
    pub identity: String,
}

/// Verify Σ_{k=0}^{(n−2)/2} A^{2k} = Σ_{k=0}^{(n−2)/2} A^{2k}B entrywise in
/// exact arithmetic and return the certificate.
pub fn even_dependence_certificate(n: u32) -> Result<DependenceCertificate, MinorsError> {
    if !n.is_multiple_of(2) || n <= 2 {
        return Err(MinorsError::NotEvenOrder(n));
    }
    let kappa = Representation::new(RepKind::Kappa, n)?;
    let dim = n as usize;
    let conductor = kappa.conductor();
    let mut lhs = Matrix::zeros(dim, dim, conductor);
    let mut rhs = Matrix::zeros(dim, dim, conductor);
    let mut plus_set = Vec::new();
    let mut minus_set = Vec::new();
    for k in 0..=(n - 2) / 2 {
        let rot = GroupElement::rotation(2 * k, n);
        let refl = GroupElement::reflection(2 * k, n);
        lhs = lhs.add(&kappa.matrix(rot));
        rhs = rhs.add(&kappa.matrix(refl));
        plus_set.push(rot);
        minus_set.push(refl);
    }
    assert_eq!(
        lhs, rhs,
        "even-order dependence identity must hold entrywise"
    );
    let lhs_terms: Vec<String> = plus_set
        .iter()
        .map(|g| match g.power {
            0 => "I".to_string(),
            k => format!("A^{}", k),
        })
        .collect();
    let rhs_terms: Vec<String> = minus_set
        .iter()
        .map(|g| match g.power {
            0 => "B".to_string(),
            k => format!("A^{}*B", k),
        })
        .collect();
    Ok(DependenceCertificate {
        n,
        plus_set,
        minus_set,
        identity: format!("{} = {}", lhs_terms.join(" + "), rhs_terms.join(" + ")),
    })
}

impl DependenceCertificate {
    /// The canonical witness over plus_set ∪ minus_set: (+1, …, +1, −1, …, −1).
    pub fn canonical_witness(&self, conductor: u32) -> Vec<CycloNum> {
        let mut w = vec![CycloNum::one(conductor); self.plus_set.len()];
        w.extend(vec![
            CycloNum::from_integer(conductor, -1);
            self.minus_set.len()
        ]);
        w
    }

    /// Row indices of plus_set ∪ minus_set in the fixed enumeration order.
    pub fn subset_indices(&self) -> Vec<usize> {
        let n = self.n as usize;
        self.plus_set
            .iter()
            .map(|g| g.power as usize)
            .chain(self.minus_set.iter().map(|g| n + g.power as usize))
            .collect()
    }
}

// ---------------------------------------------------------------------------
// Chebotarev check
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct ChebotarevReport {
    pub n: u32,
    pub mode: Mode,
    pub all_nonzero: bool,
    /// Rows and columns of the first zero minor found (size ascending, then
    /// lexicographic rows, then lexicographic columns).
    pub zero_minor_witness: Option<(Vec<usize>, Vec<usize>)>,
    pub minors_checked: usize,
}

/// Enumerate every square minor (all sizes 1..=n) of the unnormalized DFT
/// matrix. Exact mode is mandatory for a certificate-grade pass verdict.
pub fn chebotarev_check(n: u32, mode: Mode) -> ChebotarevReport {
    let f = crate::dihedral::dft_matrix(n);
    let nn = n as usize;
    let mut checked = 0usize;
    let engine = match mode {
        Mode::Exact => Some(ExactDetEngine::from_matrix(&f, nn)),
        Mode::Float => None,
    };
    let fc = f.to_complex();
    for size in 1..=nn {
        for rows in (0..nn).combinations(size) {
            for cols in (0..nn).combinations(size) {
                checked += 1;
                let zero = match &engine {
                    Some(eng) => eng.is_singular(&rows, &cols),
                    None => {
                        let sub = DMatrix::from_fn(size, size, |i, j| fc[(rows[i], cols[j])]);
                        det_float(&sub).singular
                    }
                };
                if zero {
                    return ChebotarevReport {
                        n,
                        mode,
                        all_nonzero: false,
                        zero_minor_witness: Some((rows, cols)),
                        minors_checked: checked,
                    };
                }
            }
        }
    }
    ChebotarevReport {
        n,
        mode,
        all_nonzero: true,
        zero_minor_witness: None,
        minors_checked: checked,
    }
}

// ---------------------------------------------------------------------------
// Pairwise independence for the two-dimensional representations
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairKind {
    RotationRotation,
    RotationReflection,
    ReflectionReflection,
}

#[derive(Clone, Debug)]
pub struct PairResult {
    pub g: GroupElement,
    pub h: GroupElement,
    pub kind: PairKind,
    pub determinant: CycloNum,
}

#[derive(Clone, Debug)]
pub struct PairIndependenceReport {
    pub n: u32,
    pub j: u32,
    pub pairs: Vec<PairResult>,
}

impl PairIndependenceReport {
    pub fn dependent_pairs(&self) -> Vec<(GroupElement, GroupElement)> {
        self.pairs
            .iter()
            .filter(|p| p.determinant.is_zero())
            .map(|p| (p.g, p.h))
            .collect()
    }

    pub fn all_independent(&self) -> bool {
        self.pairs.iter().all(|p| !p.determinant.is_zero())
    }
}

/// For every unordered pair {g, h} of group elements, compute
/// det(τ_j(g)v | τ_j(h)v) exactly and classify which closed form applies:
/// rotation/rotation and reflection/reflection give 2i·v₁v₂·sin(2πjΔ/n),
/// rotation/reflection gives (v₁²−v₂²)cos + i(v₁²+v₂²)sin.
pub fn pair_independence_tau(
    n: u32,
    j: u32,
    v: &[CycloNum; 2],
) -> Result<PairIndependenceReport, MinorsError> {
    let rep = Representation::new(RepKind::Tau(j), n)?;
    for x in v {
        if x.conductor() != rep.conductor() {
            return Err(MinorsError::ConductorMismatch {
                want: rep.conductor(),
                got: x.conductor(),
            });
        }
    }
    let elements = GroupElement::enumerate(n);
    let images: Vec<Vec<CycloNum>> = elements
        .iter()
        .map(|&g| rep.matrix(g).apply(&v[..]))
        .collect();
    let mut pairs = Vec::with_capacity(elements.len() * (elements.len() - 1) / 2);
    for a in 0..elements.len() {
        for b in (a + 1)..elements.len() {
            let det = &(&images[a][0] * &images[b][1]) - &(&images[a][1] * &images[b][0]);
            let kind = match (elements[a].reflect, elements[b].reflect) {
                (false, false) => PairKind::RotationRotation,
                (true, true) => PairKind::ReflectionReflection,
                _ => PairKind::RotationReflection,
            };
            pairs.push(PairResult {
                g: elements[a],
                h: elements[b],
                kind,
                determinant: det,
            });
        }
    }
    Ok(PairIndependenceReport { n, j, pairs })
}
