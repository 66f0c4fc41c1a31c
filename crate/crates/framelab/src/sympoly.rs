//! Sparse multivariate polynomials over ℚ(ζ_N) and the symbolic determinant
//! machinery: δ_Λ(f) as a matrix of linear forms, Laplace expansion along a
//! column block, the isolated monomial r(f), and the inverse-closed
//! partition search that underpins its uniqueness.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use thiserror::Error;

use crate::cyclotomic::{conductor_for, CycloNum};
use crate::dihedral::{GroupElement, RepKind, Representation};

#[derive(Debug, Error)]
pub enum SympolyError {
    #[error("subset must contain exactly {want} distinct elements, got {got}")]
    BadSubsetSize { want: usize, got: usize },
    #[error("subset contains a repeated element: {0}")]
    RepeatedElement(GroupElement),
    #[error("symbolic orbit rows are defined for the Kappa and Sigma representations")]
    UnsupportedRepresentation,
    #[error("representation order {rep_n} does not match requested order {n}")]
    OrderMismatch { rep_n: u32, n: u32 },
    #[error("split point m must satisfy 1 <= m < n, got m={m}, n={n}")]
    BadSplitPoint { m: u32, n: u32 },
}

// ---------------------------------------------------------------------------
// Sparse multivariate polynomials
// ---------------------------------------------------------------------------

/// Sparse multivariate polynomial in f₀, …, f_{n−1} over ℚ(ζ_N).
/// No zero coefficients are stored; display order is graded-lexicographic.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    n_vars: usize,
    conductor: u32,
    terms: BTreeMap<Vec<u32>, CycloNum>,
}

impl MultiPoly {
    pub fn zero(n_vars: usize, conductor: u32) -> Self {
        MultiPoly {
            n_vars,
            conductor,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n_vars: usize, value: CycloNum) -> Self {
        let conductor = value.conductor();
        let mut p = Self::zero(n_vars, conductor);
        p.add_term(vec![0; n_vars], value);
        p
    }

    pub fn monomial(n_vars: usize, exponents: Vec<u32>, coeff: CycloNum) -> Self {
        assert_eq!(exponents.len(), n_vars);
        let conductor = coeff.conductor();
        let mut p = Self::zero(n_vars, conductor);
        p.add_term(exponents, coeff);
        p
    }

    /// The variable f_k.
    pub fn variable(n_vars: usize, k: usize, conductor: u32) -> Self {
        let mut exps = vec![0u32; n_vars];
        exps[k] = 1;
        Self::monomial(n_vars, exps, CycloNum::one(conductor))
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, coeff: CycloNum) {
        assert_eq!(exponents.len(), self.n_vars);
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exponents) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// The stored coefficient of a monomial, or zero.
    pub fn coefficient_of(&self, monomial: &[u32]) -> CycloNum {
        self.terms
            .get(monomial)
            .cloned()
            .unwrap_or_else(|| CycloNum::zero(self.conductor))
    }

    pub fn add(&self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.n_vars, rhs.n_vars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            n_vars: self.n_vars,
            conductor: self.conductor,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, rhs: &MultiPoly) -> MultiPoly {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.n_vars, rhs.n_vars);
        let mut out = MultiPoly::zero(self.n_vars, self.conductor);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let exps: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(exps, c1 * c2);
            }
        }
        out
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Every stored term has total degree exactly `degree` (vacuously true
    /// for the zero polynomial).
    pub fn is_homogeneous(&self, degree: u32) -> bool {
        self.terms.keys().all(|e| e.iter().sum::<u32>() == degree)
    }

    /// Terms in graded-lexicographic display order (degree descending, then
    /// exponent-vector descending).
    pub fn terms_graded_lex(&self) -> Vec<(&Vec<u32>, &CycloNum)> {
        let mut out: Vec<_> = self.terms.iter().collect();
        out.sort_by(|(ea, _), (eb, _)| {
            let da: u32 = ea.iter().sum();
            let db: u32 = eb.iter().sum();
            db.cmp(&da).then_with(|| eb.cmp(ea))
        });
        out
    }

    /// Evaluation homomorphism at concrete field values.
    pub fn substitute(&self, values: &[CycloNum]) -> CycloNum {
        assert_eq!(values.len(), self.n_vars);
        let max_exp: Vec<u32> = (0..self.n_vars)
            .map(|i| self.terms.keys().map(|e| e[i]).max().unwrap_or(0))
            .collect();
        // Power tables per variable.
        let pows: Vec<Vec<CycloNum>> = values
            .iter()
            .zip(&max_exp)
            .map(|(v, &m)| {
                let mut row = Vec::with_capacity(m as usize + 1);
                row.push(CycloNum::one(self.conductor));
                for _ in 0..m {
                    let next = row.last().unwrap() * v;
                    row.push(next);
                }
                row
            })
            .collect();
        let mut acc = CycloNum::zero(self.conductor);
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &ei) in e.iter().enumerate() {
                if ei > 0 {
                    term = &term * &pows[i][ei as usize];
                }
            }
            acc = &acc + &term;
        }
        acc
    }

    /// Evaluation at univariate polynomials, e.g. f = (1, z, z⁴).
    pub fn substitute_univariate(&self, values: &[UniPoly]) -> UniPoly {
        assert_eq!(values.len(), self.n_vars);
        let max_exp: Vec<u32> = (0..self.n_vars)
            .map(|i| self.terms.keys().map(|e| e[i]).max().unwrap_or(0))
            .collect();
        let pows: Vec<Vec<UniPoly>> = values
            .iter()
            .zip(&max_exp)
            .map(|(v, &m)| {
                let mut row = Vec::with_capacity(m as usize + 1);
                row.push(UniPoly::one(self.conductor));
                for _ in 0..m {
                    let next = row.last().unwrap().mul(v);
                    row.push(next);
                }
                row
            })
            .collect();
        let mut acc = UniPoly::zero(self.conductor);
        for (e, c) in &self.terms {
            let mut term = UniPoly::constant(c.clone());
            for (i, &ei) in e.iter().enumerate() {
                if ei > 0 {
                    term = term.mul(&pows[i][ei as usize]);
                }
            }
            acc = acc.add(&term);
        }
        acc
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let n = self.n_vars as u32;
        let literal_ok = self.conductor == conductor_for(n);
        let mut first = true;
        for (exps, coeff) in self.terms_graded_lex() {
            let mut c = if literal_ok {
                coeff.to_literal(n)
            } else {
                coeff.to_string()
            };
            // Single-term negative coefficients fold into the separator.
            let negative = !c.contains(' ') && c.starts_with('-');
            if negative {
                c = c[1..].to_string();
            }
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            let is_constant_term = exps.iter().all(|&e| e == 0);
            if c != "1" || is_constant_term {
                if c.contains(' ') {
                    factors.push(format!("({})", c));
                } else {
                    factors.push(c);
                }
            }
            for (i, &e) in exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("f{}", i)),
                    _ => factors.push(format!("f{}^{}", i, e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({})", self)
    }
}

// ---------------------------------------------------------------------------
// Univariate polynomials over the field (for indeterminate substitutions)
// ---------------------------------------------------------------------------

/// Dense univariate polynomial over ℚ(ζ_N), ascending degree order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UniPoly {
    conductor: u32,
    coeffs: Vec<CycloNum>,
}

impl UniPoly {
    pub fn zero(conductor: u32) -> Self {
        UniPoly {
            conductor,
            coeffs: Vec::new(),
        }
    }

    pub fn one(conductor: u32) -> Self {
        Self::constant(CycloNum::one(conductor))
    }

    pub fn constant(value: CycloNum) -> Self {
        let conductor = value.conductor();
        let mut p = UniPoly {
            conductor,
            coeffs: vec![value],
        };
        p.normalize();
        p
    }

    /// c·z^deg.
    pub fn monomial(coeff: CycloNum, deg: usize) -> Self {
        let conductor = coeff.conductor();
        let mut coeffs = vec![CycloNum::zero(conductor); deg + 1];
        coeffs[deg] = coeff;
        let mut p = UniPoly { conductor, coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[CycloNum] {
        &self.coeffs
    }

    pub fn add(&self, rhs: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![CycloNum::zero(self.conductor); len];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] = &out[i] + c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[i] = &out[i] + c;
        }
        let mut p = UniPoly {
            conductor: self.conductor,
            coeffs: out,
        };
        p.normalize();
        p
    }

    pub fn mul(&self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero(self.conductor);
        }
        let mut out =
            vec![CycloNum::zero(self.conductor); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        let mut p = UniPoly {
            conductor: self.conductor,
            coeffs: out,
        };
        p.normalize();
        p
    }
}

// ---------------------------------------------------------------------------
// Minor indices
// ---------------------------------------------------------------------------

/// A strictly increasing row tuple s and column tuple t selecting a minor,
/// with the Laplace weight |s| + |t|.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorIndex {
    rows: Vec<usize>,
    cols: Vec<usize>,
}

impl MinorIndex {
    pub fn new(rows: Vec<usize>, cols: Vec<usize>) -> Self {
        assert_eq!(rows.len(), cols.len());
        assert!(rows.windows(2).all(|w| w[0] < w[1]), "rows must increase");
        assert!(cols.windows(2).all(|w| w[0] < w[1]), "cols must increase");
        MinorIndex { rows, cols }
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    /// Σ rows + Σ cols; its parity is the Laplace sign (the 0-based and
    /// 1-based conventions agree mod 2).
    pub fn weight(&self) -> usize {
        self.rows.iter().sum::<usize>() + self.cols.iter().sum::<usize>()
    }
}

// ---------------------------------------------------------------------------
// Symbolic orbit matrices and determinants
// ---------------------------------------------------------------------------

/// δ_Λ(f): row i is γ_{k_i}·(f₀, …, f_{n−1}) as degree-1 polynomials.
pub fn symbolic_orbit_matrix(
    lambda: &[GroupElement],
    rep: &Representation,
    n: u32,
) -> Result<Vec<Vec<MultiPoly>>, SympolyError> {
    if !matches!(rep.kind(), RepKind::Kappa | RepKind::Sigma) {
        return Err(SympolyError::UnsupportedRepresentation);
    }
    if rep.group_order() != n {
        return Err(SympolyError::OrderMismatch {
            rep_n: rep.group_order(),
            n,
        });
    }
    for (i, g) in lambda.iter().enumerate() {
        if lambda[..i].contains(g) {
            return Err(SympolyError::RepeatedElement(*g));
        }
    }
    let nn = n as usize;
    let conductor = rep.conductor();
    let mut out = Vec::with_capacity(lambda.len());
    for &g in lambda {
        let m = rep.matrix(g);
        let mut row = Vec::with_capacity(nn);
        for col in 0..nn {
            let mut entry = MultiPoly::zero(nn, conductor);
            for var in 0..nn {
                let coeff = m.get(col, var);
                if !coeff.is_zero() {
                    let mut exps = vec![0u32; nn];
                    exps[var] = 1;
                    entry.add_term(exps, coeff.clone());
                }
            }
            row.push(entry);
        }
        out.push(row);
    }
    Ok(out)
}

fn submatrix(m: &[Vec<MultiPoly>], rows: &[usize], cols: &[usize]) -> Vec<Vec<MultiPoly>> {
    rows.iter()
        .map(|&r| cols.iter().map(|&c| m[r][c].clone()).collect())
        .collect()
}

fn det_cofactor_poly(m: &[Vec<MultiPoly>]) -> MultiPoly {
    let d = m.len();
    let proto = &m[0][0];
    if d == 1 {
        return m[0][0].clone();
    }
    let mut acc = MultiPoly::zero(proto.n_vars(), proto.conductor());
    for j in 0..d {
        if m[0][j].is_zero() {
            continue;
        }
        let rows: Vec<usize> = (1..d).collect();
        let cols: Vec<usize> = (0..d).filter(|&c| c != j).collect();
        let minor = det_cofactor_poly(&submatrix(m, &rows, &cols));
        let term = m[0][j].mul(&minor);
        acc = if j % 2 == 0 {
            acc.add(&term)
        } else {
            acc.sub(&term)
        };
    }
    acc
}

/// Symbolic determinant, cofactor expansion for small blocks and Laplace
/// expansion along the leading column block otherwise.
pub fn det_poly(m: &[Vec<MultiPoly>]) -> MultiPoly {
    let d = m.len();
    assert!(d >= 1 && m.iter().all(|r| r.len() == d), "square matrix");
    if d <= 3 {
        det_cofactor_poly(m)
    } else {
        let t: Vec<usize> = (0..d / 2).collect();
        det_laplace(m, &t)
    }
}

/// Laplace expansion along the column block `t`:
/// det = Σ_{s ∈ T(n,p)} (−1)^{|s|+|t|} det(M(s,t))·det(M(s,t)ᶜ).
/// The result does not depend on the choice of `t`.
pub fn det_laplace(m: &[Vec<MultiPoly>], t: &[usize]) -> MultiPoly {
    let d = m.len();
    assert!(d >= 1 && m.iter().all(|r| r.len() == d), "square matrix");
    let p = t.len();
    assert!(p >= 1 && p <= d, "column block must be nonempty");
    assert!(
        t.windows(2).all(|w| w[0] < w[1]),
        "column block must increase"
    );
    assert!(t.iter().all(|&c| c < d), "column block out of range");
    let proto = &m[0][0];
    if p == d {
        return det_cofactor_or_split(m);
    }
    let comp_cols: Vec<usize> = (0..d).filter(|c| !t.contains(c)).collect();
    let t_weight: usize = t.iter().sum();
    let mut acc = MultiPoly::zero(proto.n_vars(), proto.conductor());
    for s in (0..d).combinations(p) {
        let main = submatrix(m, &s, t);
        let comp_rows: Vec<usize> = (0..d).filter(|r| !s.contains(r)).collect();
        let comp = submatrix(m, &comp_rows, &comp_cols);
        let term = det_cofactor_or_split(&main).mul(&det_cofactor_or_split(&comp));
        let weight = s.iter().sum::<usize>() + t_weight;
        acc = if weight.is_multiple_of(2) {
            acc.add(&term)
        } else {
            acc.sub(&term)
        };
    }
    acc
}

fn det_cofactor_or_split(m: &[Vec<MultiPoly>]) -> MultiPoly {
    if m.len() <= 3 {
        det_cofactor_poly(m)
    } else {
        let t: Vec<usize> = (0..m.len() / 2).collect();
        det_laplace(m, &t)
    }
}

// ---------------------------------------------------------------------------
// The isolated monomial and the prime-case audit
// ---------------------------------------------------------------------------

/// Exponent vector of r(f) = Π_{k=0}^{m−1} f_k · Π_{j=1}^{n−m} f_j for a
/// subset with m rotations; total degree n.
pub fn isolated_monomial(m: usize, n: usize) -> Vec<u32> {
    assert!(m >= 1 && m < n, "need 1 <= m < n");
    let mut exps = vec![0u32; n];
    for e in exps.iter_mut().take(m) {
        *e += 1;
    }
    for e in exps[1..=(n - m)].iter_mut() {
        *e += 1;
    }
    exps
}

/// Report of the symbolic nonvanishing audit for one size-n subset of Σ.
#[derive(Clone, Debug)]
pub struct PrimeCaseReport {
    /// The witness coefficient is nonzero (and hence det δ_Λ(f) ≠ 0).
    pub nonzero: bool,
    /// Every term of det δ_Λ(f) has total degree exactly n.
    pub homogeneous: bool,
    pub witness_monomial: Vec<u32>,
    pub witness_coefficient: CycloNum,
    pub determinant: MultiPoly,
}

/// Compute det δ_Λ(f) fully symbolically and locate the witness coefficient:
/// the isolated monomial r(f) for mixed subsets, Π f_j for all-rotation or
/// all-reflection subsets. Composite n is accepted (the even case serves as
/// a vanishing control).
pub fn prime_case_audit(n: u32, lambda: &[GroupElement]) -> Result<PrimeCaseReport, SympolyError> {
    let nn = n as usize;
    if lambda.len() != nn {
        return Err(SympolyError::BadSubsetSize {
            want: nn,
            got: lambda.len(),
        });
    }
    let sigma = Representation::new(RepKind::Sigma, n).expect("n >= 3");
    let matrix = symbolic_orbit_matrix(lambda, &sigma, n)?;
    let det = det_poly(&matrix);
    let m_rot = lambda.iter().filter(|g| !g.reflect).count();
    let witness_monomial = if m_rot == 0 || m_rot == nn {
        vec![1u32; nn]
    } else {
        isolated_monomial(m_rot, nn)
    };
    let witness_coefficient = det.coefficient_of(&witness_monomial);
    Ok(PrimeCaseReport {
        nonzero: !witness_coefficient.is_zero(),
        homogeneous: det.is_homogeneous(n),
        witness_monomial,
        witness_coefficient,
        determinant: det,
    })
}

// ---------------------------------------------------------------------------
// Inverse-closed partition search
// ---------------------------------------------------------------------------

/// `set`⁻¹ = `set` under k ↦ (n−k) mod n.
pub fn is_inverse_closed(set: &[u32], n: u32) -> bool {
    set.iter().all(|&k| set.contains(&((n - k % n) % n)))
}

#[derive(Clone, Debug)]
pub struct PartitionSearchReport {
    pub found: bool,
    pub witness: Option<(Vec<u32>, Vec<u32>)>,
}

/// Brute-force all pairs B₁ ⊆ {0..m−1}, B₂ ⊆ {m..n−1} with equal cardinality
/// ≥ 1 and B₁⁻¹ = B₁, B₂⁻¹ = B₂. For odd n no such pair exists; even n is
/// accepted as a control (e.g. n=4, m=2 yields B₁={0}, B₂={2}).
pub fn inverse_closed_partition_search(
    n: u32,
    m: u32,
) -> Result<PartitionSearchReport, SympolyError> {
    if m < 1 || m >= n {
        return Err(SympolyError::BadSplitPoint { m, n });
    }
    assert!(n <= 25, "exhaustive search is sized for small n");
    let left: Vec<u32> = (0..m).collect();
    let right: Vec<u32> = (m..n).collect();
    let closed_subsets = |universe: &[u32]| -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        for mask in 1u32..(1 << universe.len()) {
            let subset: Vec<u32> = universe
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &v)| v)
                .collect();
            if is_inverse_closed(&subset, n) {
                out.push(subset);
            }
        }
        out
    };
    let b1s = closed_subsets(&left);
    let b2s = closed_subsets(&right);
    // Deterministic witness: smallest cardinality, then lexicographic.
    let mut best: Option<(Vec<u32>, Vec<u32>)> = None;
    for b1 in &b1s {
        for b2 in &b2s {
            if b1.len() != b2.len() {
                continue;
            }
            let cand = (b1.clone(), b2.clone());
            let better = match &best {
                None => true,
                Some((c1, c2)) => (cand.0.len(), &cand.0, &cand.1) < (c1.len(), c1, c2),
            };
            if better {
                best = Some(cand);
            }
        }
    }
    Ok(PartitionSearchReport {
        found: best.is_some(),
        witness: best,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::conductor_for;
    use crate::dihedral::Matrix;
    use crate::minors::det_exact;
    use crate::sampling;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn sigma(n: u32) -> Representation {
        Representation::new(RepKind::Sigma, n).unwrap()
    }

    fn two_by_two() -> Vec<Vec<MultiPoly>> {
        // [[f0, f1], [f1, f0]]
        let cond = conductor_for(2);
        let f0 = MultiPoly::variable(2, 0, cond);
        let f1 = MultiPoly::variable(2, 1, cond);
        vec![vec![f0.clone(), f1.clone()], vec![f1, f0]]
    }

    #[test]
    fn laplace_two_by_two() {
        let m = two_by_two();
        let det = det_laplace(&m, &[0]);
        let cond = conductor_for(2);
        let mut expect = MultiPoly::zero(2, cond);
        expect.add_term(vec![2, 0], CycloNum::one(cond));
        expect.add_term(vec![0, 2], CycloNum::from_integer(cond, -1));
        assert_eq!(det, expect);
        // Independence of the column block.
        assert_eq!(det_laplace(&m, &[1]), expect);
    }

    #[test]
    fn laplace_block_independence_random_4x4_5x5() {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        for n in [4u32, 5] {
            let nn = n as usize;
            let elements = GroupElement::enumerate(n);
            let lambda: Vec<GroupElement> =
                elements.choose_multiple(&mut rng, nn).copied().collect();
            let m = symbolic_orbit_matrix(&lambda, &sigma(n), n).unwrap();
            let reference = det_laplace(&m, &[0]);
            for p in 1..nn {
                for t in (0..nn).combinations(p) {
                    assert_eq!(det_laplace(&m, &t), reference, "n={} t={:?}", n, t);
                }
            }
        }
    }

    #[test]
    fn symbolic_rows_match_sigma_structure() {
        let n = 5;
        let cond = conductor_for(n);
        // Identity row is (f0, ..., f4).
        let m = symbolic_orbit_matrix(&[GroupElement::identity()], &sigma(n), n).unwrap();
        for (col, entry) in m[0].iter().enumerate() {
            assert_eq!(*entry, MultiPoly::variable(5, col, cond));
        }
        // A^k row: ω^{col·k} f_col.
        let k = 2u32;
        let m = symbolic_orbit_matrix(&[GroupElement::rotation(k, n)], &sigma(n), n).unwrap();
        for col in 0..5usize {
            let mut expect = MultiPoly::zero(5, cond);
            let mut exps = vec![0u32; 5];
            exps[col] = 1;
            expect.add_term(exps, CycloNum::omega_pow(n, col as i64 * k as i64));
            assert_eq!(m[0][col], expect);
        }
        // A^l B row: ω^{col·l} f_{(n−col) mod n}.
        let l = 3u32;
        let m = symbolic_orbit_matrix(&[GroupElement::reflection(l, n)], &sigma(n), n).unwrap();
        for col in 0..5usize {
            let mut expect = MultiPoly::zero(5, cond);
            let mut exps = vec![0u32; 5];
            exps[(5 - col) % 5] = 1;
            expect.add_term(exps, CycloNum::omega_pow(n, col as i64 * l as i64));
            assert_eq!(m[0][col], expect);
        }
    }

    #[test]
    fn all_rotation_determinant_is_vandermonde_times_product() {
        // n=3, Λ = {A^0, A^1, A^2}: det = a′·f0f1f2 with a′ the Vandermonde
        // determinant in (1, ω, ω²), via the cofactor oracle.
        let n = 3;
        let lambda: Vec<GroupElement> = (0..3).map(|k| GroupElement::rotation(k, n)).collect();
        let m = symbolic_orbit_matrix(&lambda, &sigma(n), n).unwrap();
        let det = det_poly(&m);
        let vandermonde = Matrix::from_fn(3, 3, |i, j| CycloNum::omega_pow(n, i as i64 * j as i64));
        let a_prime = crate::minors::det_cofactor(&vandermonde);
        let mut expect = MultiPoly::zero(3, conductor_for(n));
        expect.add_term(vec![1, 1, 1], a_prime);
        assert_eq!(det, expect);
    }

    #[test]
    fn coefficient_of_examples() {
        let m = two_by_two();
        let det = det_laplace(&m, &[0]);
        assert!(det.coefficient_of(&[2, 0]).is_one());
        assert!(det.coefficient_of(&[1, 1]).is_zero());
    }

    #[test]
    fn isolated_monomial_examples() {
        assert_eq!(isolated_monomial(4, 7), vec![1, 2, 2, 2, 0, 0, 0]);
        assert_eq!(isolated_monomial(1, 5), vec![1, 1, 1, 1, 1]);
        for n in 3..=9usize {
            for m in 1..n {
                let total: u32 = isolated_monomial(m, n).iter().sum();
                assert_eq!(total as usize, n);
            }
        }
    }

    #[test]
    fn prime_case_audit_n3_all_subsets_nonzero() {
        let n = 3;
        let elements = GroupElement::enumerate(n);
        let mut count = 0;
        for lambda in elements.iter().copied().combinations(3) {
            let report = prime_case_audit(n, &lambda).unwrap();
            assert!(report.nonzero, "subset {:?}", lambda);
            assert!(report.homogeneous, "subset {:?}", lambda);
            count += 1;
        }
        assert_eq!(count, 20);
    }

    #[test]
    fn prime_case_audit_n5_all_rotations() {
        let n = 5;
        let lambda: Vec<GroupElement> = (0..5).map(|k| GroupElement::rotation(k, n)).collect();
        let report = prime_case_audit(n, &lambda).unwrap();
        assert!(report.nonzero && report.homogeneous);
        assert_eq!(report.witness_monomial, vec![1; 5]);
        // Coefficient = the full DFT determinant (a Vandermonde minor).
        let f = crate::dihedral::dft_matrix(n);
        assert_eq!(report.witness_coefficient, det_exact(&f));
    }

    #[test]
    fn prime_case_audit_n4_control_is_zero_polynomial() {
        let n = 4;
        let lambda = vec![
            GroupElement::identity(),
            GroupElement::rotation(2, n),
            GroupElement::reflection(0, n),
            GroupElement::reflection(2, n),
        ];
        let report = prime_case_audit(n, &lambda).unwrap();
        assert!(!report.nonzero);
        assert!(report.determinant.is_zero());
    }

    #[test]
    fn audit_rejects_bad_subsets() {
        let n = 3;
        assert!(matches!(
            prime_case_audit(n, &[GroupElement::identity()]),
            Err(SympolyError::BadSubsetSize { .. })
        ));
        let lam = vec![
            GroupElement::identity(),
            GroupElement::identity(),
            GroupElement::rotation(1, n),
        ];
        assert!(matches!(
            prime_case_audit(n, &lam),
            Err(SympolyError::RepeatedElement(_))
        ));
    }

    #[test]
    fn homogeneity_over_random_subsets() {
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        for n in 3..=5u32 {
            let elements = GroupElement::enumerate(n);
            for _ in 0..4 {
                let lambda: Vec<GroupElement> = elements
                    .choose_multiple(&mut rng, n as usize)
                    .copied()
                    .collect();
                let m = symbolic_orbit_matrix(&lambda, &sigma(n), n).unwrap();
                let det = det_poly(&m);
                assert!(det.is_homogeneous(n), "n={} Λ={:?}", n, lambda);
            }
        }
    }

    #[test]
    fn substitution_is_evaluation_homomorphism() {
        // substitute ∘ det_poly = det_exact ∘ substitute-entrywise.
        let mut rng = ChaCha8Rng::seed_from_u64(123);
        for n in [3u32, 5] {
            let cond = conductor_for(n);
            let elements = GroupElement::enumerate(n);
            for _ in 0..5 {
                let lambda: Vec<GroupElement> = elements
                    .choose_multiple(&mut rng, n as usize)
                    .copied()
                    .collect();
                let rep = sigma(n);
                let m = symbolic_orbit_matrix(&lambda, &rep, n).unwrap();
                let det_sym = det_poly(&m);
                let v = sampling::random_vector(n as usize, cond, &mut rng);
                let lhs = det_sym.substitute(&v);
                let rows = Matrix::from_fn(n as usize, n as usize, |i, j| {
                    rep.matrix(lambda[i]).apply(&v)[j].clone()
                });
                let rhs = det_exact(&rows);
                assert_eq!(lhs, rhs, "n={} Λ={:?}", n, lambda);
            }
        }
    }

    #[test]
    fn substitute_simple_cases() {
        let m = two_by_two();
        let det = det_laplace(&m, &[0]);
        let cond = conductor_for(2);
        let one = CycloNum::one(cond);
        assert!(det.substitute(&[one.clone(), one]).is_zero());
    }

    #[test]
    fn univariate_substitution_n3_example_shape() {
        // One subset of Σ for n=3: substituting f = (1, z, z⁴) gives a nonzero
        // polynomial of degree ≤ 8.
        let n = 3;
        let cond = conductor_for(n);
        let lambda = vec![
            GroupElement::identity(),
            GroupElement::reflection(1, n),
            GroupElement::rotation(2, n),
        ];
        let m = symbolic_orbit_matrix(&lambda, &sigma(n), n).unwrap();
        let det = det_poly(&m);
        let z_vals = [
            UniPoly::one(cond),
            UniPoly::monomial(CycloNum::one(cond), 1),
            UniPoly::monomial(CycloNum::one(cond), 4),
        ];
        let p = det.substitute_univariate(&z_vals);
        assert!(!p.is_zero());
        assert!(p.degree().unwrap() <= 8);
    }

    #[test]
    fn inverse_closed_search_odd_orders_find_nothing() {
        for n in (3..=15u32).step_by(2) {
            for m in 1..n {
                let report = inverse_closed_partition_search(n, m).unwrap();
                assert!(!report.found, "n={} m={}", n, m);
            }
        }
    }

    #[test]
    fn inverse_closed_search_even_control() {
        let report = inverse_closed_partition_search(4, 2).unwrap();
        assert!(report.found);
        assert_eq!(report.witness, Some((vec![0], vec![2])));
    }

    #[test]
    fn near_miss_example_n7() {
        // B₂ = {3,4} is inverse-closed mod 7 but B₁ = {0,1} is not.
        assert!(is_inverse_closed(&[3, 4], 7));
        assert!(!is_inverse_closed(&[0, 1], 7));
        assert!(is_inverse_closed(&[0], 7));
        let report = inverse_closed_partition_search(7, 3).unwrap();
        assert!(!report.found);
    }

    #[test]
    fn split_point_validation() {
        assert!(inverse_closed_partition_search(7, 0).is_err());
        assert!(inverse_closed_partition_search(7, 7).is_err());
    }

    #[test]
    fn display_renders_graded_lex() {
        let m = two_by_two();
        let det = det_laplace(&m, &[0]);
        assert_eq!(det.to_string(), "f0^2 - f1^2");
    }
}
