//! Exact integral homology of real partial flag manifolds of type A.
//!
//! A real partial flag manifold `F(k1, k2-k1, ..., n-kr)` carries a CW
//! structure whose cells are Schubert cells, indexed by the minimal coset
//! representatives of a parabolic quotient of the symmetric group S_n. The
//! boundary map of the resulting cellular chain complex has coefficients in
//! {0, +2, -2}, given by a closed sign formula in terms of Lehmer codes and
//! Bruhat covers. This crate:
//!
//! * builds that chain complex exactly, for any rank `n` and any subset Θ of
//!   the simple roots ([`complex`]);
//! * evaluates the closed-form boundary coefficient, removal index, degree
//!   sign, and commutation/braid move counts ([`coeff`], [`bruhat`]);
//! * computes integral homology by exact Smith normal form ([`snf`]);
//! * evaluates the closed-form mod-2, free, and torsion Poincaré polynomials
//!   ([`poincare`]);
//! * materializes the explicit low-degree cycle generators and the closed
//!   torsion-rank formulas for H₃ and H₄ ([`closedform`]);
//! * numerically certifies the rotation-matrix identities behind the degree
//!   signs ([`geomcheck`]);
//! * exposes everything through a command-line interface ([`cli`]).
//!
//! All combinatorial and homological computation is exact integer arithmetic;
//! floating point appears only in the self-contained geometric verification.

pub mod bruhat;
pub mod cli;
pub mod closedform;
pub mod coeff;
pub mod complex;
pub mod geomcheck;
pub mod perm;
pub mod poincare;
pub mod snf;

pub use perm::{CodeSpectrum, LehmerCode, Permutation, ReducedWord, ThetaSet};

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid Lehmer code: {0}")]
    InvalidCode(String),
    #[error("invalid simple-root subset: {0}")]
    InvalidTheta(String),
    #[error("invalid code spectrum: {0}")]
    InvalidSpectrum(String),
    #[error("index out of range: {0}")]
    IndexRange(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("integrity failure: {0}")]
    Integrity(String),
    #[error("refused: {0}")]
    Refused(String),
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
