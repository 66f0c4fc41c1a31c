//! Dihedral-group frames in ℂⁿ.
//!
//! Constructs orbits of a vector under matrix representations of the dihedral
//! group D_2n, certifies the Haar property (every d of the 2n orbit vectors
//! form a basis) in exact cyclotomic arithmetic, reproduces the dependence
//! certificates and symbolic determinant identities behind the even/prime
//! dichotomy, and simulates erasure-robust encoding and reconstruction.
//!
//! Modules:
//! - [`cyclotomic`]: exact field arithmetic in ℚ(ζ_N), N = lcm(n, 4)
//! - [`dihedral`]: group elements, the κ/Σ/τ_j/character representations, DFT
//! - [`minors`]: exact and float determinants, Haar certification, Chebotarev
//! - [`sympoly`]: sparse multivariate polynomials, Laplace expansion, the
//!   monomial-isolation identity and the inverse-closed partition search
//! - [`erasure`]: frame bounds, encoding, erasure patterns, least-squares
//!   reconstruction
//! - [`sampling`]: seeded Gaussian-rational test vectors

pub mod cyclotomic;
pub mod dihedral;
pub mod erasure;
pub mod minors;
mod modular;
pub mod rational;
pub mod sampling;
pub mod sympoly;
mod threads;

pub use cyclotomic::{conductor_for, CycloNum, CycloPoly};
pub use dihedral::{GroupElement, Matrix, RepKind, Representation};
pub use minors::{check_haar, orbit_matrix, HaarCertificate, Mode, OrbitMatrix, Status};
pub use rational::Rational;
