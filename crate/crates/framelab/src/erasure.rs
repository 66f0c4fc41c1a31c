//! Frame-theoretic numerics: frame bounds, encoding by frame coefficients,
//! erasure patterns, and least-squares reconstruction.
//!
//! Everything here runs in floating point — condition numbers are inherently
//! approximate, and exactness claims belong to the `minors` certificates. A
//! maximal erasure pattern removes 2n − d rows; the orbit survives every such
//! pattern exactly when the orbit matrix has the Haar property.

use std::io::{self, Write};

use itertools::Itertools;
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rayon::prelude::*;

use crate::minors::OrbitMatrix;
use crate::threads;

/// Relative σ_min/σ_max threshold below which a surviving system is treated
/// as rank-deficient.
const SINGULAR_TOL: f64 = 1e-10;

/// Extreme eigenvalues a ≤ b of the frame operator: a‖u‖² ≤ Σ|⟨u,u_k⟩|² ≤ b‖u‖².
#[derive(Clone, Copy, Debug)]
pub struct FrameBounds {
    pub lower: f64,
    pub upper: f64,
}

impl FrameBounds {
    /// The rows span ℂ^d, i.e. the lower bound is bounded away from zero.
    pub fn is_frame(&self) -> bool {
        self.upper > 0.0 && self.lower > SINGULAR_TOL * self.upper
    }
}

/// Frame bounds as squared extreme singular values of the 2n×d analysis map.
pub fn frame_bounds(m: &OrbitMatrix) -> FrameBounds {
    let a = m.to_complex();
    let svd = a.svd(false, false);
    let mut lo = f64::INFINITY;
    let mut hi = 0.0f64;
    for s in svd.singular_values.iter() {
        lo = lo.min(*s);
        hi = hi.max(*s);
    }
    if !lo.is_finite() {
        lo = 0.0;
    }
    FrameBounds {
        lower: lo * lo,
        upper: hi * hi,
    }
}

/// Frame coefficients c_k = ⟨u, row_k⟩ with the inner product
/// conjugate-linear in the second argument.
pub fn encode(m: &OrbitMatrix, u: &[Complex64]) -> Vec<Complex64> {
    assert_eq!(u.len(), m.dim(), "signal dimension mismatch");
    let a = m.to_complex();
    (0..a.nrows())
        .map(|k| (0..a.ncols()).map(|j| u[j] * a[(k, j)].conj()).sum())
        .collect()
}

/// Outcome of one erase-and-reconstruct experiment.
#[derive(Clone, Debug)]
pub struct ErasureReport {
    pub pattern: Vec<usize>,
    /// Relative 2-norm error ‖û − u‖/‖u‖ (infinite when singular).
    pub reconstruction_error: f64,
    /// Condition number σ_max/σ_min of the surviving analysis submatrix.
    pub condition_number: f64,
    pub singular: bool,
}

/// Delete `pattern` rows from the analysis map and solve the least-squares
/// system on the surviving coefficients via SVD. A rank-deficient surviving
/// system (σ_min ≤ 1e−10·σ_max) reports error = ∞ with the SINGULAR flag —
/// the numerical detection of a Haar failure.
pub fn erase_and_reconstruct(m: &OrbitMatrix, u: &[Complex64], pattern: &[usize]) -> ErasureReport {
    let total = m.num_rows();
    let d = m.dim();
    assert!(
        pattern.len() <= total - d,
        "pattern of size {} leaves fewer than d = {} rows",
        pattern.len(),
        d
    );
    assert!(
        pattern.iter().all(|&r| r < total),
        "pattern row out of range"
    );
    let survivors: Vec<usize> = (0..total).filter(|r| !pattern.contains(r)).collect();
    let full = m.to_complex();
    // Analysis rows are conjugated orbit rows: c = Ā u.
    let a = DMatrix::from_fn(survivors.len(), d, |i, j| full[(survivors[i], j)].conj());
    let c = DVector::from_fn(survivors.len(), |i, _| {
        (0..d).map(|j| u[j] * a[(i, j)]).sum()
    });
    let svd = a.svd(true, true);
    let mut s_min = f64::INFINITY;
    let mut s_max = 0.0f64;
    for s in svd.singular_values.iter() {
        s_min = s_min.min(*s);
        s_max = s_max.max(*s);
    }
    if s_max == 0.0 || s_min <= SINGULAR_TOL * s_max {
        return ErasureReport {
            pattern: pattern.to_vec(),
            reconstruction_error: f64::INFINITY,
            condition_number: if s_min > 0.0 {
                s_max / s_min
            } else {
                f64::INFINITY
            },
            singular: true,
        };
    }
    let u_hat = svd.solve(&c, 0.0).expect("svd solve with computed factors");
    let u_vec = DVector::from_column_slice(u);
    let u_norm = u_vec.norm();
    let err = (&u_hat - &u_vec).norm();
    ErasureReport {
        pattern: pattern.to_vec(),
        reconstruction_error: if u_norm > 0.0 { err / u_norm } else { err },
        condition_number: s_max / s_min,
        singular: false,
    }
}

/// Aggregate over all maximal erasure patterns.
#[derive(Clone, Copy, Debug)]
pub struct ErasureAuditSummary {
    /// Worst relative error among nonsingular patterns.
    pub worst_error: f64,
    /// Worst condition number among nonsingular patterns.
    pub worst_condition: f64,
    pub singular_patterns: usize,
    pub patterns_checked: usize,
}

impl ErasureAuditSummary {
    fn merge(self, other: Self) -> Self {
        ErasureAuditSummary {
            worst_error: self.worst_error.max(other.worst_error),
            worst_condition: self.worst_condition.max(other.worst_condition),
            singular_patterns: self.singular_patterns + other.singular_patterns,
            patterns_checked: self.patterns_checked + other.patterns_checked,
        }
    }

    fn from_report(r: &ErasureReport) -> Self {
        if r.singular {
            ErasureAuditSummary {
                worst_error: 0.0,
                worst_condition: 0.0,
                singular_patterns: 1,
                patterns_checked: 1,
            }
        } else {
            ErasureAuditSummary {
                worst_error: r.reconstruction_error,
                worst_condition: r.condition_number,
                singular_patterns: 0,
                patterns_checked: 1,
            }
        }
    }

    const EMPTY: ErasureAuditSummary = ErasureAuditSummary {
        worst_error: 0.0,
        worst_condition: 0.0,
        singular_patterns: 0,
        patterns_checked: 0,
    };
}

/// Run [`erase_and_reconstruct`] over every maximal pattern (all 2n − d
/// erasures). `singular_patterns == 0` iff `check_haar` passes in exact mode,
/// up to float tolerance.
pub fn exhaustive_erasure_audit(m: &OrbitMatrix, u: &[Complex64]) -> ErasureAuditSummary {
    let total = m.num_rows();
    let erase = total - m.dim();
    threads::run(|| {
        let patterns: Vec<Vec<usize>> = (0..total).combinations(erase).collect();
        patterns
            .par_iter()
            .map(|p| ErasureAuditSummary::from_report(&erase_and_reconstruct(m, u, p)))
            .reduce(|| ErasureAuditSummary::EMPTY, ErasureAuditSummary::merge)
    })
}

/// Stream per-pattern reports as `pattern;condition;error` CSV lines in
/// lexicographic pattern order, returning the same aggregate as
/// [`exhaustive_erasure_audit`].
pub fn audit_patterns_csv<W: Write>(
    m: &OrbitMatrix,
    u: &[Complex64],
    out: &mut W,
) -> io::Result<ErasureAuditSummary> {
    let total = m.num_rows();
    let erase = total - m.dim();
    writeln!(out, "pattern;condition;error")?;
    let mut summary = ErasureAuditSummary::EMPTY;
    for pattern in (0..total).combinations(erase) {
        let report = erase_and_reconstruct(m, u, &pattern);
        let indices: Vec<String> = pattern.iter().map(|i| i.to_string()).collect();
        writeln!(
            out,
            "{};{:e};{:e}",
            indices.join(" "),
            report.condition_number,
            report.reconstruction_error
        )?;
        summary = summary.merge(ErasureAuditSummary::from_report(&report));
    }
    Ok(summary)
}
