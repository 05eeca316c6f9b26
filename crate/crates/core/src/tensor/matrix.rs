// Copyright 2026 The ybe-l1 Contributors
// SPDX-License-Identifier: Apache-2.0

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use nalgebra::DMatrix;

use super::{c64, StateVector};
use crate::{Error, Result};

/// Row-major dense complex matrix.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<c64>,
}

/// Outcome of [`ComplexMatrix::is_unitary`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitarityCheck {
    pub unitary: bool,
    /// `‖M†M − I‖_max`
    pub deviation: f64,
}

impl ComplexMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<c64>) -> Result<Self> {
        if rows * cols != data.len() {
            return Err(Error::DimensionMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![c64::new(0.0, 0.0); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = c64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> c64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_rows<const C: usize>(rows: &[[c64; C]]) -> Self {
        let data = rows.iter().flat_map(|r| r.iter().copied()).collect();
        Self { rows: rows.len(), cols: C, data }
    }

    /// Real-valued convenience constructor.
    pub fn from_real_rows<const C: usize>(rows: &[[f64; C]]) -> Self {
        let data = rows.iter().flat_map(|r| r.iter().map(|&x| c64::new(x, 0.0))).collect();
        Self { rows: rows.len(), cols: C, data }
    }

    pub fn diag(entries: &[c64]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, &e) in entries.iter().enumerate() {
            m[(i, i)] = e;
        }
        m
    }

    /// `|a⟩⟨b|`
    pub fn outer(a: &StateVector, b: &StateVector) -> Self {
        Self::from_fn(a.dim(), b.dim(), |i, j| a.amplitudes()[i] * b.amplitudes()[j].conj())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn as_slice(&self) -> &[c64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[c64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn ensure_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare { rows: self.rows, cols: self.cols })
        }
    }

    pub fn map(&self, f: impl Fn(c64) -> c64) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&z| f(z)).collect() }
    }

    pub fn scale(&self, s: c64) -> Self {
        self.map(|z| z * s)
    }

    pub fn scale_re(&self, s: f64) -> Self {
        self.map(|z| z * s)
    }

    pub fn conj(&self) -> Self {
        self.map(|z| z.conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn trace(&self) -> c64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Self) -> Self {
        let (r1, c1, r2, c2) = (self.rows, self.cols, other.rows, other.cols);
        Self::from_fn(r1 * r2, c1 * c2, |i, j| self[(i / r2, j / c2)] * other[(i % r2, j % c2)])
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == c64::new(0.0, 0.0) {
                    continue;
                }
                let row = &rhs.data[k * rhs.cols..(k + 1) * rhs.cols];
                let dst = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
                for (d, &b) in dst.iter_mut().zip(row) {
                    *d += a * b;
                }
            }
        }
        Ok(out)
    }

    /// Product of a sequence of matrices, left to right.
    pub fn product<'a>(factors: impl IntoIterator<Item = &'a ComplexMatrix>) -> Self {
        let mut it = factors.into_iter();
        let first = it.next().expect("empty product").clone();
        it.fold(first, |acc, m| &acc * m)
    }

    pub fn apply(&self, v: &StateVector) -> StateVector {
        assert_eq!(self.cols, v.dim(), "matrix-vector dimension mismatch");
        let amps = (0..self.rows)
            .map(|i| self.row(i).iter().zip(v.amplitudes()).map(|(a, b)| a * b).sum())
            .collect();
        StateVector::from_amplitudes_unchecked(amps)
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Entrywise `max |self − other|`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        self.data.iter().zip(&other.data).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    /// Entrywise distance after multiplying `self` by the unit phase that
    /// matches `other` on the largest-modulus entry of `self`.
    pub fn phase_aligned_diff(&self, other: &Self) -> f64 {
        let (k, pivot) = self
            .data
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.norm().total_cmp(&b.1.norm()))
            .expect("empty matrix");
        if pivot.norm() == 0.0 || other.data[k].norm() == 0.0 {
            return self.max_abs_diff(other);
        }
        let phase = other.data[k] / pivot;
        let phase = phase / phase.norm();
        self.scale(phase).max_abs_diff(other)
    }

    /// `‖M² + I‖_max`, the distance from being an involutive generator.
    pub fn involution_residual(&self) -> Result<f64> {
        let n = self.ensure_square()?;
        Ok((&(self * self) + &Self::identity(n)).max_abs())
    }

    pub fn is_unitary(&self, tol: f64) -> Result<UnitarityCheck> {
        let n = self.ensure_square()?;
        let deviation = (&self.adjoint() * self).max_abs_diff(&Self::identity(n));
        Ok(UnitarityCheck { unitary: deviation <= tol, deviation })
    }

    pub fn hermiticity_residual(&self) -> f64 {
        self.max_abs_diff(&self.adjoint())
    }

    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    pub fn anticommutator(&self, other: &Self) -> Self {
        &(self * other) + &(other * self)
    }

    fn to_nalgebra(&self) -> DMatrix<c64> {
        DMatrix::from_row_slice(self.rows, self.cols, &self.data)
    }

    pub fn determinant(&self) -> Result<c64> {
        self.ensure_square()?;
        Ok(self.to_nalgebra().determinant())
    }

    /// Eigenvalues of a Hermitian matrix, ascending.
    pub fn hermitian_eigenvalues(&self) -> Result<Vec<f64>> {
        self.ensure_square()?;
        let eig = self.to_nalgebra().symmetric_eigen();
        let mut vals: Vec<f64> = eig.eigenvalues.iter().copied().collect();
        vals.sort_by(f64::total_cmp);
        Ok(vals)
    }
}

/// Reduced matrix on the subsystems in `keep` (in the given order of
/// `dims`, regardless of the order in `keep`).
pub fn partial_trace(rho: &ComplexMatrix, dims: &[usize], keep: &[usize]) -> Result<ComplexMatrix> {
    let n = rho.ensure_square()?;
    let total: usize = dims.iter().product();
    if total != n {
        return Err(Error::DimensionMismatch(format!(
            "subsystem dims {dims:?} multiply to {total}, matrix is {n}x{n}"
        )));
    }
    let mut kept = vec![false; dims.len()];
    for &k in keep {
        if k >= dims.len() || kept[k] {
            return Err(Error::DimensionMismatch(format!("invalid keep list {keep:?} for {} subsystems", dims.len())));
        }
        kept[k] = true;
    }

    // Split every full index into (kept index, traced index).
    let split: Vec<(usize, usize)> = (0..n)
        .map(|mut idx| {
            let (mut k, mut t, mut kw, mut tw) = (0, 0, 1, 1);
            for (s, &d) in dims.iter().enumerate().rev() {
                let digit = idx % d;
                idx /= d;
                if kept[s] {
                    k += digit * kw;
                    kw *= d;
                } else {
                    t += digit * tw;
                    tw *= d;
                }
            }
            (k, t)
        })
        .collect();
    let out_dim: usize = dims.iter().zip(&kept).filter(|(_, &k)| k).map(|(d, _)| d).product();

    let mut out = ComplexMatrix::zeros(out_dim, out_dim);
    for i in 0..n {
        let (ki, ti) = split[i];
        for j in 0..n {
            let (kj, tj) = split[j];
            if ti == tj {
                out[(ki, kj)] += rho[(i, j)];
            }
        }
    }
    Ok(out)
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = c64;
    fn index(&self, (i, j): (usize, usize)) -> &c64 {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut c64 {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect();
        ComplexMatrix { rows: self.rows, cols: self.cols, data }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect();
        ComplexMatrix { rows: self.rows, cols: self.cols, data }
    }
}

impl Neg for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn neg(self) -> ComplexMatrix {
        self.map(|z| -z)
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for z in self.row(i) {
                write!(f, "{:>9.5}{:+.5}i  ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::super::{im, pauli, re};
    use super::*;

    #[test]
    fn new_checks_entry_count() {
        assert!(ComplexMatrix::new(2, 2, vec![re(1.0); 3]).is_err());
        assert!(ComplexMatrix::new(2, 3, vec![re(1.0); 6]).is_ok());
    }

    #[test]
    fn kron_identity() {
        let i4 = ComplexMatrix::identity(2).kron(&ComplexMatrix::identity(2));
        assert_eq!(i4, ComplexMatrix::identity(4));
    }

    #[test]
    fn kron_y_x_antidiagonal() {
        // σʸ⊗σˣ: rows (0,0,0,−i), (0,0,−i,0), (0,i,0,0), (i,0,0,0)
        let m = pauli::y().kron(&pauli::x());
        let expected = ComplexMatrix::from_rows(&[
            [re(0.0), re(0.0), re(0.0), im(-1.0)],
            [re(0.0), re(0.0), im(-1.0), re(0.0)],
            [re(0.0), im(1.0), re(0.0), re(0.0)],
            [im(1.0), re(0.0), re(0.0), re(0.0)],
        ]);
        assert_eq!(m, expected);
    }

    #[test]
    fn adjoint_is_involution() {
        let m = ComplexMatrix::from_fn(3, 2, |i, j| c64::new(i as f64 + 0.5, j as f64 - 1.5));
        assert_eq!(m.adjoint().adjoint(), m);
    }

    #[test]
    fn unitary_checks() {
        let r = ComplexMatrix::identity(8).is_unitary(1e-14).unwrap();
        assert!(r.unitary);
        assert_eq!(r.deviation, 0.0);
        assert!(matches!(
            ComplexMatrix::zeros(2, 3).is_unitary(1e-12),
            Err(Error::NotSquare { rows: 2, cols: 3 })
        ));
        let not_unitary = ComplexMatrix::identity(2).scale_re(1.1);
        assert!(!not_unitary.is_unitary(1e-12).unwrap().unitary);
    }

    #[test]
    fn partial_trace_product_state() {
        let zero = StateVector::basis(1, 0);
        let one = StateVector::basis(1, 1);
        let rho = ComplexMatrix::outer(&zero, &zero).kron(&ComplexMatrix::outer(&one, &one));
        let red = partial_trace(&rho, &[2, 2], &[0]).unwrap();
        assert_eq!(red, ComplexMatrix::outer(&zero, &zero));
        let red = partial_trace(&rho, &[2, 2], &[1]).unwrap();
        assert_eq!(red, ComplexMatrix::outer(&one, &one));
    }

    #[test]
    fn partial_trace_bell_is_maximally_mixed() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let bell = StateVector::new(vec![re(h), re(0.0), re(0.0), re(h)]).unwrap();
        let rho = bell.density();
        let half = ComplexMatrix::identity(2).scale_re(0.5);
        for keep in [0, 1] {
            let red = partial_trace(&rho, &[2, 2], &[keep]).unwrap();
            assert!(red.max_abs_diff(&half) < 1e-15);
        }
    }

    #[test]
    fn partial_trace_dimension_errors() {
        let rho = ComplexMatrix::identity(4);
        assert!(partial_trace(&rho, &[2, 3], &[0]).is_err());
        assert!(partial_trace(&rho, &[2, 2], &[2]).is_err());
        assert!(partial_trace(&rho, &[2, 2], &[0, 0]).is_err());
        assert!(partial_trace(&ComplexMatrix::zeros(2, 4), &[2, 2], &[0]).is_err());
    }

    #[test]
    fn partial_trace_respects_subsystem_order() {
        // |0⟩⊗|1⟩⊗|+⟩, keep {2, 0} → ρ₀ ⊗ ρ₂ in subsystem order
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let plus = StateVector::new(vec![re(h), re(h)]).unwrap();
        let psi = StateVector::basis(1, 0).tensor(&StateVector::basis(1, 1)).tensor(&plus);
        let red = partial_trace(&psi.density(), &[2, 2, 2], &[2, 0]).unwrap();
        let expected = StateVector::basis(1, 0).tensor(&plus).density();
        assert!(red.max_abs_diff(&expected) < 1e-15);
    }

    #[test]
    fn phase_alignment() {
        let m = pauli::x();
        let shifted = m.scale(c64::from_polar(1.0, 0.7));
        assert!(m.phase_aligned_diff(&shifted) < 1e-15);
        assert!(m.phase_aligned_diff(&pauli::z()) > 0.5);
    }

    #[test]
    fn hermitian_eigenvalues_of_pauli() {
        let ev = pauli::y().hermitian_eigenvalues().unwrap();
        assert!((ev[0] + 1.0).abs() < 1e-14 && (ev[1] - 1.0).abs() < 1e-14);
        let d = pauli::y().determinant().unwrap();
        assert!((d - re(-1.0)).norm() < 1e-15);
    }
}
