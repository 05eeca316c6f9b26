// Copyright 2026 The ybe-l1 Contributors
// SPDX-License-Identifier: Apache-2.0

//! Two independent routes to a matrix exponential: the closed form for
//! generators with `M² = −I`, and a general scaling-and-squaring Taylor
//! series used to cross-check it.

use super::{c64, ComplexMatrix};
use crate::{Error, Result};

/// Largest `‖M² + I‖_max` accepted as an involutive generator.
pub const INVOLUTION_TOL: f64 = 1e-10;

/// `exp(t·M) = cos t · I + sin t · M`, valid when `M² = −I`.
pub fn expm_involutive(m: &ComplexMatrix, t: f64) -> Result<ComplexMatrix> {
    let residual = m.involution_residual()?;
    if residual > INVOLUTION_TOL {
        return Err(Error::NotInvolutive { residual });
    }
    let n = m.rows();
    Ok(&ComplexMatrix::identity(n).scale_re(t.cos()) + &m.scale_re(t.sin()))
}

/// `exp(A)` by scaling and squaring with a truncated Taylor series.
pub fn expm_series(a: &ComplexMatrix) -> Result<ComplexMatrix> {
    let n = a.ensure_square()?;
    // ∞-norm bound, scaled down to ≤ 1/2
    let norm = (0..n)
        .map(|i| a.row(i).iter().map(|z| z.norm()).sum::<f64>())
        .fold(0.0, f64::max);
    let squarings = if norm > 0.5 { (norm / 0.5).log2().ceil() as u32 } else { 0 };
    let scaled = a.scale_re(0.5f64.powi(squarings as i32));

    let mut result = ComplexMatrix::identity(n);
    let mut term = ComplexMatrix::identity(n);
    for k in 1..=40 {
        term = (&term * &scaled).scale(c64::new(1.0 / k as f64, 0.0));
        result = &result + &term;
        if term.max_abs() < 1e-20 {
            break;
        }
    }
    for _ in 0..squarings {
        result = &result * &result;
    }
    Ok(result)
}
