// Copyright 2026 The ybe-l1 Contributors
// SPDX-License-Identifier: Apache-2.0

use super::{c64, ComplexMatrix};
use crate::{Error, Result};

/// A ket over the computational basis of `n` qubits.
///
/// Normalization is not enforced on construction; physical states are
/// checked with [`StateVector::is_normalized`] where it matters.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amps: Vec<c64>,
}

impl StateVector {
    pub fn new(amps: Vec<c64>) -> Result<Self> {
        if amps.is_empty() || !amps.len().is_power_of_two() {
            return Err(Error::DimensionMismatch(format!(
                "state dimension {} is not a power of two",
                amps.len()
            )));
        }
        Ok(Self { amps })
    }

    pub(crate) fn from_amplitudes_unchecked(amps: Vec<c64>) -> Self {
        Self { amps }
    }

    /// `|index⟩` on `n_qubits` qubits.
    pub fn basis(n_qubits: usize, index: usize) -> Self {
        let dim = 1usize << n_qubits;
        assert!(index < dim, "basis index {index} out of range for {n_qubits} qubits");
        let mut amps = vec![c64::new(0.0, 0.0); dim];
        amps[index] = c64::new(1.0, 0.0);
        Self { amps }
    }

    /// Basis state from a bit string such as `"011"` (qubit 0 leftmost).
    pub fn from_bits(bits: &str) -> Result<Self> {
        let index = usize::from_str_radix(bits, 2)
            .map_err(|_| Error::DimensionMismatch(format!("not a bit string: {bits:?}")))?;
        Ok(Self::basis(bits.len(), index))
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn n_qubits(&self) -> usize {
        self.amps.len().trailing_zeros() as usize
    }

    pub fn amplitudes(&self) -> &[c64] {
        &self.amps
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn is_normalized(&self, tol: f64) -> bool {
        (self.norm() - 1.0).abs() <= tol
    }

    pub fn normalized(&self) -> Self {
        let n = self.norm();
        Self { amps: self.amps.iter().map(|z| z / n).collect() }
    }

    /// `⟨self|other⟩`
    pub fn inner(&self, other: &Self) -> c64 {
        assert_eq!(self.dim(), other.dim(), "inner product dimension mismatch");
        self.amps.iter().zip(&other.amps).map(|(a, b)| a.conj() * b).sum()
    }

    pub fn tensor(&self, other: &Self) -> Self {
        let amps = self
            .amps
            .iter()
            .flat_map(|a| other.amps.iter().map(move |b| a * b))
            .collect();
        Self { amps }
    }

    pub fn scale(&self, s: c64) -> Self {
        Self { amps: self.amps.iter().map(|z| z * s).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        Self { amps: self.amps.iter().zip(&other.amps).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        Self { amps: self.amps.iter().zip(&other.amps).map(|(a, b)| a - b).collect() }
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim(), other.dim());
        self.amps.iter().zip(&other.amps).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    /// Amplitude moduli `|cᵢ|`.
    pub fn magnitudes(&self) -> Vec<f64> {
        self.amps.iter().map(|z| z.norm()).collect()
    }

    /// `|ψ⟩⟨ψ|`
    pub fn density(&self) -> ComplexMatrix {
        ComplexMatrix::outer(self, self)
    }

    /// Reduced density matrix on the listed qubits.
    pub fn reduced_density(&self, keep: &[usize]) -> Result<ComplexMatrix> {
        let dims = vec![2; self.n_qubits()];
        super::partial_trace(&self.density(), &dims, keep)
    }
}
