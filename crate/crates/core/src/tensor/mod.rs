// Copyright 2026 The ybe-l1 Contributors
// SPDX-License-Identifier: Apache-2.0

//! Dense complex linear algebra for the small (≤ 16-dimensional) spaces
//! used throughout the crate.
//!
//! Conventions are fixed here once: σˣ=[[0,1],[1,0]], σʸ=[[0,−i],[i,0]],
//! σᶻ=diag(1,−1), |0⟩=(1,0)ᵀ, and qubit 0 is the most significant bit of
//! a computational-basis index.

mod expm;
mod matrix;
pub mod pauli;
mod state;

pub use expm::{expm_involutive, expm_series};
pub use matrix::{partial_trace, ComplexMatrix, UnitarityCheck};
pub use state::StateVector;

/// Complex scalar used everywhere.
#[allow(non_camel_case_types)]
pub type c64 = num_complex::Complex64;

/// Residual bound for algebraic identities at 64-bit precision.
pub const ALGEBRAIC_TOL: f64 = 1e-12;
/// Residual bound after iterated products and exponentials.
pub const ITERATED_TOL: f64 = 1e-9;

#[inline]
pub fn re(x: f64) -> c64 {
    c64::new(x, 0.0)
}

#[inline]
pub fn im(x: f64) -> c64 {
    c64::new(0.0, x)
}

/// `e^{iθ}`.
#[inline]
pub fn cis(theta: f64) -> c64 {
    c64::from_polar(1.0, theta)
}

/// Kronecker product of a sequence of matrices, left to right.
pub fn kron_all<'a, I>(factors: I) -> ComplexMatrix
where
    I: IntoIterator<Item = &'a ComplexMatrix>,
{
    factors
        .into_iter()
        .fold(ComplexMatrix::identity(1), |acc, m| acc.kron(m))
}

/// Embeds a two-site operator acting on sites `site, site+1` of an
/// `n_sites` chain with local dimension `site_dim`.
pub fn lift_two_site(local: &ComplexMatrix, site_dim: usize, site: usize, n_sites: usize) -> ComplexMatrix {
    assert!(site + 2 <= n_sites, "two-site operator at {site} does not fit {n_sites} sites");
    assert_eq!(local.rows(), site_dim * site_dim);
    let left = ComplexMatrix::identity(site_dim.pow(site as u32));
    let right = ComplexMatrix::identity(site_dim.pow((n_sites - site - 2) as u32));
    left.kron(local).kron(&right)
}
