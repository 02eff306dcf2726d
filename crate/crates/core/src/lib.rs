//! Exact algebraic solution of the two-photon and k-photon Jaynes-Cummings
//! models.
//!
//! The interaction Hamiltonian `Δ·J₀ + λ(σ₊a^k + σ₋(a†)^k)` splits into 2×2
//! blocks on `{|n, e⟩, |n+k, g⟩}`. An SU(2) tilting transformation
//! `D†(ξ)·H·D(ξ)` with a block-dependent angle diagonalizes each block, which
//! yields the dressed energies
//!
//! ```text
//! E_n = ω(2n + k)/2 ± ½·√(Δ² + 4λ²·(n+k)!/n!)
//! ```
//!
//! and the matching eigenspinors. Every closed form is checked against
//! [`eigensolver::hermitian_eigen`], a self-contained complex Jacobi solver.
//!
//! Modules:
//! - [`fock`]: truncated ladder operators, ordered products, pseudo-inverses
//! - [`su2`]: Pauli realization, displacement operator, tilting identities,
//!   Gaussian decomposition, Perelomov states
//! - [`model`]: Hamiltonians, block structure, analytic spectra and spinors
//! - [`eigensolver`]: the Jacobi oracle
//! - [`dynamics`]: exact time evolution, atomic inversion
//! - [`validate`]: the invariant suite behind `kjc validate`
//! - [`cli`]: the `kjc` command-line front end

pub mod cli;
pub mod dynamics;
pub mod eigensolver;
pub mod error;
pub mod fock;
pub mod matrix;
pub mod model;
pub mod su2;
pub mod validate;

pub use error::{Error, Result};
pub use matrix::{c64, DenseMatrix, C64};
