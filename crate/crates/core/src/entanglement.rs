// Copyright 2026 The ybe-l1 Contributors
// SPDX-License-Identifier: Apache-2.0

//! ℓ1-norms, von Neumann entropies, the 3-tangle and SLOCC labels.
//!
//! All entropies are in bits, with 0·log 0 = 0.

use std::fmt;

use crate::smatrix::{build_sprime, SParams};
use crate::tensor::{ComplexMatrix, StateVector};
use crate::yang_baxter::type2_r4;
use crate::{Error, Result};

/// Default cutoff for the 3-tangle and for "zero" entropies.
pub const DEFAULT_CLASS_TOL: f64 = 1e-6;

/// `Σᵢ |cᵢ|`
pub fn l1_norm_state(psi: &StateVector) -> f64 {
    psi.amplitudes().iter().map(|z| z.norm()).sum()
}

/// `(1/(2j+1)) Σ |D_mn|`, implemented for j = 1/2 only (`two_j = 1`).
pub fn l1_norm_wigner(d: &ComplexMatrix, two_j: u32) -> Result<f64> {
    if two_j != 1 {
        return Err(Error::UnsupportedSpin(two_j));
    }
    if d.rows() != 2 || d.cols() != 2 {
        return Err(Error::DimensionMismatch(format!("spin-1/2 matrix must be 2x2, got {}x{}", d.rows(), d.cols())));
    }
    Ok(d.as_slice().iter().map(|z| z.norm()).sum::<f64>() / 2.0)
}

/// `|cos η| + √2|cos β sin η| + |sin β sin η|`
pub fn l1_norm_s3(p: &SParams) -> f64 {
    let (se, ce) = p.eta.sin_cos();
    let (sb, cb) = p.beta.sin_cos();
    ce.abs() + std::f64::consts::SQRT_2 * (cb * se).abs() + (sb * se).abs()
}

/// ℓ1-norm of the first row of S′ with each entry split into its real
/// and imaginary parts, `Σⱼ |Re S′₀ⱼ| + |Im S′₀ⱼ|`.
///
/// Under this reading the value coincides with [`l1_norm_s3`]; with the
/// complex modulus instead it would be √2 at the GHZ point, not 2.
pub fn l1_norm_sprime(p: &SParams) -> f64 {
    let s = build_sprime(p);
    [s[(0, 0)], s[(0, 1)]].iter().map(|z| z.re.abs() + z.im.abs()).sum()
}

/// `−p log₂ p − (1−p) log₂(1−p)`
pub fn binary_entropy(p: f64) -> f64 {
    let h = |x: f64| if x <= 0.0 { 0.0 } else { -x * x.log2() };
    h(p) + h(1.0 - p)
}

/// Shannon entropy (bits) of a spectrum; tiny negative eigenvalues from
/// roundoff are dropped.
pub fn spectrum_entropy(eigenvalues: &[f64]) -> f64 {
    eigenvalues.iter().filter(|&&x| x > 0.0).map(|&x| -x * x.log2()).sum()
}

fn validate_cut(n_qubits: usize, side: &[usize]) -> Result<()> {
    if side.is_empty() || side.len() >= n_qubits {
        return Err(Error::InvalidCut(format!("{side:?} is not a proper bipartition of {n_qubits} qubits")));
    }
    let mut seen = vec![false; n_qubits];
    for &q in side {
        if q >= n_qubits || std::mem::replace(&mut seen[q], true) {
            return Err(Error::InvalidCut(format!("{side:?} on {n_qubits} qubits")));
        }
    }
    Ok(())
}

/// Entanglement entropy across the cut `side | rest`.
pub fn vn_entropy(psi: &StateVector, side: &[usize]) -> Result<f64> {
    validate_cut(psi.n_qubits(), side)?;
    let rho = psi.reduced_density(side)?;
    Ok(spectrum_entropy(&rho.hermitian_eigenvalues()?))
}

/// Binary entropy of |S′₁₁|².
pub fn vn_entropy_sprime(p: &SParams) -> f64 {
    binary_entropy(build_sprime(p)[(0, 0)].norm_sqr())
}

/// |ξ(θ)⟩ = R̆(θ)|00⟩.
pub fn xi_state(theta: f64) -> StateVector {
    type2_r4(theta, 0.0).apply(&StateVector::basis(2, 0))
}

/// Cayley hyperdeterminant form `τ = 4|d₁ − 2d₂ + 4d₃|`.
pub fn three_tangle(psi: &StateVector) -> Result<f64> {
    if psi.dim() != 8 {
        return Err(Error::DimensionMismatch(format!("3-tangle needs 3 qubits, got dim {}", psi.dim())));
    }
    let c = psi.amplitudes();
    let d1 = c[0] * c[0] * c[7] * c[7] + c[1] * c[1] * c[6] * c[6] + c[2] * c[2] * c[5] * c[5] + c[4] * c[4] * c[3] * c[3];
    let d2 = c[0] * c[7] * c[3] * c[4]
        + c[0] * c[7] * c[5] * c[2]
        + c[0] * c[7] * c[6] * c[1]
        + c[3] * c[4] * c[5] * c[2]
        + c[3] * c[4] * c[6] * c[1]
        + c[5] * c[2] * c[6] * c[1];
    let d3 = c[0] * c[6] * c[5] * c[3] + c[7] * c[1] * c[2] * c[4];
    Ok(4.0 * (d1 - d2 * 2.0 + d3 * 4.0).norm())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SloccClass {
    Product,
    Biseparable,
    WClass,
    GhzClass,
}

impl fmt::Display for SloccClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SloccClass::Product => "product",
            SloccClass::Biseparable => "biseparable",
            SloccClass::WClass => "W-class",
            SloccClass::GhzClass => "GHZ-class",
        })
    }
}

fn single_qubit_entropies(psi: &StateVector) -> Result<Vec<f64>> {
    (0..psi.n_qubits()).map(|q| vn_entropy(psi, &[q])).collect()
}

fn classify(tangle: f64, entropies: &[f64], tol: f64) -> SloccClass {
    if tangle > tol {
        return SloccClass::GhzClass;
    }
    match entropies.iter().filter(|&&s| s <= tol).count() {
        0 => SloccClass::WClass,
        n if n == entropies.len() => SloccClass::Product,
        _ => SloccClass::Biseparable,
    }
}

/// SLOCC class of a three-qubit pure state.
pub fn slocc_class(psi: &StateVector, tol: f64) -> Result<SloccClass> {
    let tangle = three_tangle(psi)?;
    Ok(classify(tangle, &single_qubit_entropies(psi)?, tol))
}

#[derive(Debug, Clone, PartialEq)]
pub struct EntanglementReport {
    pub l1: f64,
    /// Entropy of each single-qubit cut `{q} | rest`, in bits.
    pub vn_entropies: Vec<f64>,
    pub three_tangle: f64,
    pub slocc_class: SloccClass,
}

impl EntanglementReport {
    pub fn of(psi: &StateVector, tol: f64) -> Result<Self> {
        let three_tangle = three_tangle(psi)?;
        let vn_entropies = single_qubit_entropies(psi)?;
        let slocc_class = classify(three_tangle, &vn_entropies, tol);
        Ok(Self { l1: l1_norm_state(psi), vn_entropies, three_tangle, slocc_class })
    }
}
