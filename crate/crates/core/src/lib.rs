// Copyright 2026 The ybe-l1 Contributors
// SPDX-License-Identifier: Apache-2.0

//! Yang-Baxter systems and the ℓ1-norm.
//!
//! The crate is organised bottom-up:
//!
//! * [`tensor`]: small dense complex matrices and state vectors.
//! * [`braid`]: Temperley-Lieb and braid-group representations.
//! * [`yang_baxter`]: parametrized R-matrix families and YBE residuals.
//! * [`smatrix`]: the factorized three-body S-matrix and its (η, β) form.
//! * [`entanglement`]: ℓ1-norms, entropies, 3-tangle, SLOCC labels.
//! * [`landscape`]: grids, sections and critical-point search.
//! * [`topobasis`]: four-strand topological bases and 2×2 reductions.
//!
//! Grid sampling and randomized sweeps run on rayon when the `parallel`
//! feature is enabled (the default); see [`exec`].

pub mod braid;
pub mod entanglement;
pub mod error;
pub mod exec;
pub mod landscape;
pub mod smatrix;
pub mod tensor;
pub mod topobasis;
pub mod yang_baxter;

pub use error::{Error, Result};
pub use tensor::{c64, ComplexMatrix, StateVector};
