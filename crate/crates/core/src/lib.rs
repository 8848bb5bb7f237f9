//! Spectral diagonalization of reversible Markov chains on `{0, 1, 2, ...}`.
//!
//! A reversible chain with transition operator `P` admits a spectral
//! representation
//!
//! ```text
//! p_t(i, j) = pi_j * Integral( lambda^t Q_i(lambda) Q_j(lambda) dpsi(lambda) )
//! ```
//!
//! where `Q_j` are polynomials generated by the eigenvector recurrence of `P`,
//! `pi` are the reversibility weights and `psi` is a probability measure on
//! `[-1, 1]` (the Karlin-McGregor representation). This crate builds all the
//! pieces of that formula and cross-validates them against exact
//! matrix-power oracles:
//!
//! - [`chain`]: banded reversible transition operators, truncations,
//!   reversibility weights and symmetrizations;
//! - [`orthopoly`]: the polynomial system `Q_j`, monic/orthonormal rescalings
//!   and the zeros of `Q_n`;
//! - [`measure`]: discrete Gauss measures `psi_n`, closed-form limit
//!   densities, two-sided contour measures, moments and Cauchy transforms;
//! - [`jacobi`]: the spectral map from a banded chain to its moment sequence
//!   and the equivalent Jacobi (symmetric tridiagonal) operator, by two
//!   independent routes;
//! - [`kernel`]: transition probabilities and generating functions from
//!   spectral data, plus the orthonormal `Q_j(P) e_0` basis;
//! - [`banded`]: vector solution families for bandwidth `m > 1`, branch
//!   selection and the contour diagonalization of the pentadiagonal example;
//! - [`rh`]: numerical verification of the Fokas-Its-Kitaev Riemann-Hilbert
//!   characterization of the orthogonal polynomials.
//!
//! The crate is `no_std`-compatible (requires `alloc`); disable the default
//! `std` feature for embedded use. All types are immutable after construction
//! and safe to share across threads.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod banded;
pub mod chain;
pub mod jacobi;
pub mod kernel;
pub mod linalg;
pub mod measure;
pub mod orthopoly;
pub mod quad;
pub mod rational;
pub mod rh;

mod error;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
