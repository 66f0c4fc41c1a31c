//! Dihedral group elements and concrete matrix representations.
//!
//! D_2n = ⟨r, s : r^n = s^2 = 1, srs = r^{n−1}⟩. The representations built
//! here are the permutation representation κ (A = κ(r) the cyclic shift,
//! B = κ(s) the index reversal), its Fourier conjugate Σ with 𝐀 = FAF⁻¹
//! diagonal and 𝐁 = B, the two-dimensional irreducibles τ_j, and the
//! one-dimensional characters. All entries live in ℚ(ζ_N) with N = lcm(n, 4).

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use thiserror::Error;

use crate::cyclotomic::{conductor_for, CycloNum};
use crate::rational::Rational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DihedralError {
    #[error("group order must be at least 2, got {0}")]
    OrderTooSmall(u32),
    #[error("tau parameter j={j} is reducible for n={n} (j ≡ 0 mod n, or j = n/2 for even n)")]
    ReducibleTau { n: u32, j: u32 },
    #[error("character {0:?} requires even n, got n={1}")]
    OddOrderCharacter(RepKind, u32),
    #[error("matrix dimensions do not match: {0}x{1} vs {2}x{3}")]
    DimMismatch(usize, usize, usize, usize),
    #[error("matrix is singular")]
    Singular,
    #[error("cannot parse group element from {0:?}")]
    ElementParse(String),
}

// ---------------------------------------------------------------------------
// Group elements
// ---------------------------------------------------------------------------

/// A dihedral element r^power (reflect = false) or r^power·s (reflect = true).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroupElement {
    pub reflect: bool,
    pub power: u32,
}

impl GroupElement {
    pub fn identity() -> Self {
        GroupElement {
            reflect: false,
            power: 0,
        }
    }

    pub fn rotation(k: u32, n: u32) -> Self {
        GroupElement {
            reflect: false,
            power: k % n,
        }
    }

    pub fn reflection(k: u32, n: u32) -> Self {
        GroupElement {
            reflect: true,
            power: k % n,
        }
    }

    /// Group product under srs = r^{n−1}:
    /// r^a·r^b = r^{a+b}, r^a s·r^b = r^{a−b} s, r^a·r^b s = r^{a+b} s,
    /// r^a s·r^b s = r^{a−b}.
    pub fn mul(self, rhs: GroupElement, n: u32) -> GroupElement {
        let rhs_power = if self.reflect {
            (n - rhs.power % n) % n
        } else {
            rhs.power % n
        };
        GroupElement {
            reflect: self.reflect ^ rhs.reflect,
            power: (self.power + rhs_power) % n,
        }
    }

    pub fn inverse(self, n: u32) -> GroupElement {
        if self.reflect {
            // (r^k s)^2 = e
            self
        } else {
            GroupElement {
                reflect: false,
                power: (n - self.power % n) % n,
            }
        }
    }

    /// The fixed enumeration order: e, r, …, r^{n−1}, s, rs, …, r^{n−1}s.
    /// All orbit matrices and certificates index rows by this order.
    pub fn enumerate(n: u32) -> Vec<GroupElement> {
        let mut out = Vec::with_capacity(2 * n as usize);
        for k in 0..n {
            out.push(GroupElement::rotation(k, n));
        }
        for k in 0..n {
            out.push(GroupElement::reflection(k, n));
        }
        out
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.reflect, self.power) {
            (false, 0) => write!(f, "e"),
            (false, 1) => write!(f, "r"),
            (false, k) => write!(f, "r^{}", k),
            (true, 0) => write!(f, "s"),
            (true, 1) => write!(f, "r*s"),
            (true, k) => write!(f, "r^{}*s", k),
        }
    }
}

impl FromStr for GroupElement {
    type Err = DihedralError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let err = || DihedralError::ElementParse(s.to_string());
        match t {
            "e" => return Ok(GroupElement::identity()),
            "s" => {
                return Ok(GroupElement {
                    reflect: true,
                    power: 0,
                })
            }
            _ => {}
        }
        let (rot_part, reflect) = match t.strip_suffix("*s") {
            Some(head) => (head, true),
            None => (t, false),
        };
        let power = if rot_part == "r" {
            1
        } else {
            rot_part
                .strip_prefix("r^")
                .ok_or_else(err)?
                .parse::<u32>()
                .map_err(|_| err())?
        };
        Ok(GroupElement { reflect, power })
    }
}

// ---------------------------------------------------------------------------
// Matrices over the cyclotomic field
// ---------------------------------------------------------------------------

/// Dense matrix of cyclotomic numbers, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<CycloNum>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<CycloNum>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Matrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize, conductor: u32) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![CycloNum::zero(conductor); rows * cols],
        }
    }

    pub fn identity(dim: usize, conductor: u32) -> Self {
        let mut m = Self::zeros(dim, dim, conductor);
        for i in 0..dim {
            *m.get_mut(i, i) = CycloNum::one(conductor);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> CycloNum) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &CycloNum {
        &self.data[i * self.cols + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut CycloNum {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[CycloNum] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(
            self.cols, rhs.rows,
            "matrix product dimension mismatch: {}x{} * {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        let conductor = self.data[0].conductor();
        Matrix::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = CycloNum::zero(conductor);
            for k in 0..self.cols {
                let term = self.get(i, k) * rhs.get(k, j);
                acc = &acc + &term;
            }
            acc
        })
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn apply(&self, v: &[CycloNum]) -> Vec<CycloNum> {
        assert_eq!(self.cols, v.len());
        let conductor = self.data[0].conductor();
        (0..self.rows)
            .map(|i| {
                let mut acc = CycloNum::zero(conductor);
                for (k, vk) in v.iter().enumerate() {
                    acc = &acc + &(self.get(i, k) * vk);
                }
                acc
            })
            .collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Conjugate transpose (entrywise complex conjugation).
    pub fn conj_transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    pub fn scale(&self, q: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.scale(q)).collect(),
        }
    }

    /// Exact inverse by Gauss–Jordan elimination over the field, or `None`
    /// if singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let d = self.rows;
        let conductor = self.data[0].conductor();
        let mut work = self.clone();
        let mut inv = Matrix::identity(d, conductor);
        for col in 0..d {
            let pivot_row = (col..d).find(|&r| !work.get(r, col).is_zero())?;
            if pivot_row != col {
                for j in 0..d {
                    let a = work.get(pivot_row, j).clone();
                    let b = work.get(col, j).clone();
                    *work.get_mut(pivot_row, j) = b;
                    *work.get_mut(col, j) = a;
                    let a = inv.get(pivot_row, j).clone();
                    let b = inv.get(col, j).clone();
                    *inv.get_mut(pivot_row, j) = b;
                    *inv.get_mut(col, j) = a;
                }
            }
            let pivot_inv = work.get(col, col).inverse().expect("nonzero pivot");
            for j in 0..d {
                *work.get_mut(col, j) = work.get(col, j) * &pivot_inv;
                *inv.get_mut(col, j) = inv.get(col, j) * &pivot_inv;
            }
            for r in 0..d {
                if r == col || work.get(r, col).is_zero() {
                    continue;
                }
                let factor = work.get(r, col).clone();
                for j in 0..d {
                    let w = work.get(r, j) - &(&factor * work.get(col, j));
                    *work.get_mut(r, j) = w;
                    let v = inv.get(r, j) - &(&factor * inv.get(col, j));
                    *inv.get_mut(r, j) = v;
                }
            }
        }
        Some(inv)
    }

    pub fn to_complex(&self) -> nalgebra::DMatrix<Complex64> {
        nalgebra::DMatrix::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, j).to_complex_float()
        })
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

// ---------------------------------------------------------------------------
// Representations
// ---------------------------------------------------------------------------

/// Which concrete representation to realize.
///
/// Characters: `CharTrivial` (r ↦ 1, s ↦ 1) and `CharSign` (r ↦ 1, s ↦ −1)
/// exist for every n; `CharRot` (r ↦ −1, s ↦ 1) and `CharRotSign`
/// (r ↦ −1, s ↦ −1) only for even n.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RepKind {
    Kappa,
    Sigma,
    Tau(u32),
    CharTrivial,
    CharSign,
    CharRot,
    CharRotSign,
}

/// A concrete matrix representation of D_2n over ℚ(ζ_N), N = lcm(n, 4).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Representation {
    kind: RepKind,
    n: u32,
    dim: usize,
    conductor: u32,
}

impl Representation {
    pub fn new(kind: RepKind, n: u32) -> Result<Self, DihedralError> {
        if n < 2 {
            return Err(DihedralError::OrderTooSmall(n));
        }
        let dim = match kind {
            RepKind::Kappa | RepKind::Sigma => n as usize,
            RepKind::Tau(j) => {
                // Reducible parameters are rejected: j ≡ 0, and j = n/2 when
                // n is even (τ_j(r) would be ±I).
                if j % n == 0 || (n.is_multiple_of(2) && j % n == n / 2) {
                    return Err(DihedralError::ReducibleTau { n, j });
                }
                2
            }
            RepKind::CharTrivial | RepKind::CharSign => 1,
            RepKind::CharRot | RepKind::CharRotSign => {
                if !n.is_multiple_of(2) {
                    return Err(DihedralError::OddOrderCharacter(kind, n));
                }
                1
            }
        };
        Ok(Representation {
            kind,
            n,
            dim,
            conductor: conductor_for(n),
        })
    }

    pub fn kind(&self) -> RepKind {
        self.kind
    }

    pub fn group_order(&self) -> u32 {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// The matrix ρ(g).
    pub fn matrix(&self, g: GroupElement) -> Matrix {
        let n = self.n;
        let nn = n as usize;
        let cond = self.conductor;
        let k = g.power % n;
        match self.kind {
            RepKind::Kappa => {
                // (κ(r^k) v)(j) = v((j−k) mod n); (κ(r^k s) v)(j) = v((k−j) mod n).
                let mut m = Matrix::zeros(nn, nn, cond);
                for j in 0..nn {
                    let col = if g.reflect {
                        (k as usize + nn - j) % nn
                    } else {
                        (j + nn - k as usize) % nn
                    };
                    *m.get_mut(j, col) = CycloNum::one(cond);
                }
                m
            }
            RepKind::Sigma => {
                // 𝐀^k = diag(ω^{jk}); 𝐀^k 𝐁 has entry ω^{jk} at (j, (n−j) mod n).
                let mut m = Matrix::zeros(nn, nn, cond);
                for j in 0..nn {
                    let col = if g.reflect { (nn - j) % nn } else { j };
                    *m.get_mut(j, col) = CycloNum::omega_pow(n, (j as i64) * (k as i64));
                }
                m
            }
            RepKind::Tau(j) => {
                let j = j as i64;
                let up = CycloNum::omega_pow(n, j * k as i64);
                let down = CycloNum::omega_pow(n, -j * k as i64);
                let zero = CycloNum::zero(cond);
                if g.reflect {
                    Matrix::new(2, 2, vec![zero.clone(), up, down, zero])
                } else {
                    Matrix::new(2, 2, vec![up, zero.clone(), zero, down])
                }
            }
            RepKind::CharTrivial | RepKind::CharSign | RepKind::CharRot | RepKind::CharRotSign => {
                let rot_sign = matches!(self.kind, RepKind::CharRot | RepKind::CharRotSign);
                let refl_sign = matches!(self.kind, RepKind::CharSign | RepKind::CharRotSign);
                let mut value = 1i64;
                if rot_sign && k % 2 == 1 {
                    value = -value;
                }
                if refl_sign && g.reflect {
                    value = -value;
                }
                Matrix::new(1, 1, vec![CycloNum::from_integer(cond, value)])
            }
        }
    }
}

/// Common interface for an exact matrix family indexed by group elements;
/// implemented by [`Representation`] and by conjugated families.
pub trait RepLike {
    fn group_order(&self) -> u32;
    fn dim(&self) -> usize;
    fn conductor(&self) -> u32;
    fn matrix(&self, g: GroupElement) -> Matrix;
}

impl RepLike for Representation {
    fn group_order(&self) -> u32 {
        self.n
    }
    fn dim(&self) -> usize {
        self.dim
    }
    fn conductor(&self) -> u32 {
        self.conductor
    }
    fn matrix(&self, g: GroupElement) -> Matrix {
        Representation::matrix(self, g)
    }
}

/// The family g ↦ U·ρ(g)·U⁻¹ for an invertible U.
pub struct ConjugatedRep {
    base: Representation,
    u: Matrix,
    u_inv: Matrix,
}

/// Conjugate a representation by an invertible matrix; errors when U is
/// singular or of the wrong size.
pub fn conjugate_representation(
    rep: &Representation,
    u: &Matrix,
) -> Result<ConjugatedRep, DihedralError> {
    if u.rows() != rep.dim() || u.cols() != rep.dim() {
        return Err(DihedralError::DimMismatch(
            u.rows(),
            u.cols(),
            rep.dim(),
            rep.dim(),
        ));
    }
    let u_inv = u.inverse().ok_or(DihedralError::Singular)?;
    Ok(ConjugatedRep {
        base: *rep,
        u: u.clone(),
        u_inv,
    })
}

impl RepLike for ConjugatedRep {
    fn group_order(&self) -> u32 {
        self.base.group_order()
    }
    fn dim(&self) -> usize {
        self.base.dim()
    }
    fn conductor(&self) -> u32 {
        self.base.conductor()
    }
    fn matrix(&self, g: GroupElement) -> Matrix {
        self.u.mul(&self.base.matrix(g)).mul(&self.u_inv)
    }
}

// ---------------------------------------------------------------------------
// The discrete Fourier matrix
// ---------------------------------------------------------------------------

/// The unnormalized DFT matrix: entry (ξ, k) = ζ_n^{kξ}, in conductor
/// lcm(n, 4). The true transform carries an n^{−1/2} factor which is
/// irrational; minor-nonvanishing and Haar verdicts are invariant under that
/// scaling, so the exact path works with this matrix and the float path
/// multiplies by [`dft_scale`].
pub fn dft_matrix(n: u32) -> Matrix {
    let nn = n as usize;
    Matrix::from_fn(nn, nn, |xi, k| {
        CycloNum::omega_pow(n, (k as i64) * (xi as i64))
    })
}

/// The n^{−1/2} scale tag that turns [`dft_matrix`] into the unitary
/// transform on the float path.
pub fn dft_scale(n: u32) -> f64 {
    1.0 / (n as f64).sqrt()
}

/// Check the intertwining identities F·A = 𝐀·F and F·B = 𝐁·F = B·F
/// entrywise in ℚ(ζ_N).
pub fn verify_fab(n: u32) -> bool {
    let kappa = Representation::new(RepKind::Kappa, n).expect("n >= 3");
    let sigma = Representation::new(RepKind::Sigma, n).expect("n >= 3");
    let f = dft_matrix(n);
    let r = GroupElement::rotation(1, n);
    let s = GroupElement::reflection(0, n);
    let fa = f.mul(&kappa.matrix(r));
    let af = sigma.matrix(r).mul(&f);
    let fb = f.mul(&kappa.matrix(s));
    let bf = sigma.matrix(s).mul(&f);
    fa == af && fb == bf
}
