// Copyright 2026 The ybe-l1 Contributors
// SPDX-License-Identifier: Apache-2.0

//! Four-strand topological bases and 2×2 reductions.
//!
//! Each basis is a pair of orthonormal 4-qubit states spanning a subspace
//! left invariant by every TL and braid generator of its type. Reduced
//! matrices use `M_ij = ⟨e_i|Op|e_j⟩`.
//!
//! Strand k is qubit k−1, and two-qubit states |χ_ij⟩ list strand i first.

use std::f64::consts::FRAC_1_SQRT_2;

use crate::smatrix::{build_s123_product, build_sprime, thetas_to_params, SParams, ThetaTriple};
use crate::tensor::{c64, cis, im, lift_two_site, re, ComplexMatrix, StateVector};
use crate::{Error, Result};

/// Loop value tag for a basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisType {
    TypeI,
    TypeII,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TopoBasis {
    pub e1: StateVector,
    pub e2: StateVector,
    pub d: f64,
    pub kind: BasisType,
    /// Norm of the Gram-Schmidt correction applied to e₂ (0 when the
    /// printed vectors are already orthonormal to 1e−13).
    pub correction: f64,
}

impl TopoBasis {
    /// Largest deviation of the Gram matrix from I₂.
    pub fn orthonormality_residual(&self) -> f64 {
        let one = re(1.0);
        [
            (self.e1.inner(&self.e1) - one).norm(),
            (self.e2.inner(&self.e2) - one).norm(),
            self.e1.inner(&self.e2).norm(),
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }

    pub fn vectors(&self) -> [&StateVector; 2] {
        [&self.e1, &self.e2]
    }
}

/// Four-qubit product of pair states on strands (a, b) and (c, d), 1-based.
/// Each pair amplitude array is indexed by `2·bit_first + bit_second`.
fn pair_product(first: (usize, usize), a: &[c64; 4], second: (usize, usize), b: &[c64; 4]) -> StateVector {
    let amps = (0..16usize)
        .map(|idx| {
            let bit = |strand: usize| (idx >> (4 - strand)) & 1;
            a[2 * bit(first.0) + bit(first.1)] * b[2 * bit(second.0) + bit(second.1)]
        })
        .collect();
    StateVector::from_amplitudes_unchecked(amps)
}

fn orthonormalize(e1: StateVector, e2: StateVector) -> (StateVector, StateVector, f64) {
    let e1n = e1.normalized();
    let projected = e2.sub(&e1n.scale(e1n.inner(&e2)));
    let e2n = projected.normalized();
    let correction = e2n.sub(&e2).norm();
    if correction < 1e-13 {
        (e1n, e2, 0.0)
    } else {
        (e1n, e2n, correction)
    }
}

/// Singlet-based basis for the swap representation (d = 2).
pub fn build_type1_basis() -> TopoBasis {
    let h = FRAC_1_SQRT_2;
    let singlet = [re(0.0), re(h), re(-h), re(0.0)];
    let e1 = pair_product((1, 2), &singlet, (3, 4), &singlet);
    let e2 = pair_product((4, 1), &singlet, (2, 3), &singlet)
        .scale(re(2.0))
        .sub(&e1)
        .scale(re(1.0 / 3f64.sqrt()));
    let (e1, e2, correction) = orthonormalize(e1, e2);
    TopoBasis { e1, e2, d: crate::braid::TYPE1_LOOP, kind: BasisType::TypeI, correction }
}

/// Bell-state basis for the type-II representation (d = √2).
pub fn build_type2_basis(varphi: f64) -> TopoBasis {
    let h = FRAC_1_SQRT_2;
    let z = re(0.0);
    let psi = [re(h), z, z, im(-h) * cis(-varphi)];
    let phi = [z, re(h), im(-h), z];
    let e1 = pair_product((1, 2), &psi, (3, 4), &psi)
        .add(&pair_product((1, 2), &phi, (3, 4), &phi))
        .scale(re(h));
    let e2 = pair_product((2, 3), &psi, (4, 1), &psi)
        .scale(re(1.0) + cis(varphi))
        .sub(&pair_product((2, 3), &phi, (4, 1), &phi).scale(re(1.0) - cis(-varphi)))
        .scale(re(h))
        .sub(&e1);
    let (e1, e2, correction) = orthonormalize(e1, e2);
    TopoBasis { e1, e2, d: crate::braid::TYPE2_LOOP, kind: BasisType::TypeII, correction }
}

/// Lifts a 4×4 two-strand operator onto strands (k, k+1) of four, 1-based.
pub fn lift_to_strands(local: &ComplexMatrix, k: usize) -> ComplexMatrix {
    lift_two_site(local, 2, k - 1, 4)
}

/// `⟨e_i|Op|e_j⟩`, after checking that Op maps the span into itself.
pub fn reduce_operator(op: &ComplexMatrix, basis: &TopoBasis, tol: f64) -> Result<ComplexMatrix> {
    if op.rows() != 16 || op.cols() != 16 {
        return Err(Error::DimensionMismatch(format!("expected 16x16 operator, got {}x{}", op.rows(), op.cols())));
    }
    let vs = basis.vectors();
    let mut reduced = ComplexMatrix::zeros(2, 2);
    let mut leakage: f64 = 0.0;
    for (j, ej) in vs.iter().enumerate() {
        let image = op.apply(ej);
        let mut residual = image.clone();
        for (i, ei) in vs.iter().enumerate() {
            let c = ei.inner(&image);
            reduced[(i, j)] = c;
            residual = residual.sub(&ei.scale(c));
        }
        leakage = leakage.max(residual.norm());
    }
    if leakage > tol {
        return Err(Error::Leakage { leakage, tol });
    }
    Ok(reduced)
}

/// Outcome of [`verify_s_reduction`].
#[derive(Debug, Clone, PartialEq)]
pub struct ReductionCheck {
    pub params: SParams,
    /// S̆₁₂₃ ⊗ I reduced on the type-II basis.
    pub reduced: ComplexMatrix,
    /// The closed 2×2 form at the same (η, β).
    pub sprime: ComplexMatrix,
    /// Phase-aligned distance between `reduced` and `conj(sprime)`.
    pub residual: f64,
    /// Phase-aligned distance between `reduced` and `sprime` itself.
    pub literal_residual: f64,
}

/// Reduces the 8×8 product on the first three strands of the type-II
/// basis and compares with the closed 2×2 form.
///
/// The printed basis carries the conjugate representation of the 2×2
/// pair from which the closed form is multiplied out, so the reduction
/// matches `conj(S′(η, β))`; `literal_residual` records the direct
/// comparison.
pub fn verify_s_reduction(t: &ThetaTriple, tol: f64) -> Result<ReductionCheck> {
    let params = thetas_to_params(t, tol.max(crate::smatrix::CONSTRAINT_TOL))?;
    let s3 = build_s123_product(t, tol.max(crate::smatrix::CONSTRAINT_TOL))?;
    let lifted = s3.kron(&ComplexMatrix::identity(2));
    let reduced = reduce_operator(&lifted, &build_type2_basis(0.0), tol)?;
    let sprime = build_sprime(&params);
    let residual = reduced.phase_aligned_diff(&sprime.conj());
    let literal_residual = reduced.phase_aligned_diff(&sprime);
    Ok(ReductionCheck { params, reduced, sprime, residual, literal_residual })
}

#[cfg(test)]
mod tests {
    use std::f64::consts::{FRAC_PI_4, SQRT_2};

    use super::*;
    use crate::braid::{type1_braid, type1_tl, type2_braid, type2_tl, TYPE2_LOOP};

    fn assert_close(a: &ComplexMatrix, b: &ComplexMatrix, tol: f64) {
        let d = a.max_abs_diff(b);
        assert!(d < tol, "diff {d}\n{a:?}\n{b:?}");
    }

    #[test]
    fn bases_are_orthonormal() {
        assert!(build_type1_basis().orthonormality_residual() < 1e-14);
        for &v in &[0.0, 0.4, 2.0] {
            let b = build_type2_basis(v);
            assert!(b.orthonormality_residual() < 1e-13);
            assert_eq!(b.correction, 0.0);
        }
    }

    #[test]
    fn type1_tl_action() {
        let b = build_type1_basis();
        let t1 = lift_to_strands(&type1_tl(), 1);
        let t2 = lift_to_strands(&type1_tl(), 2);
        assert!(t1.apply(&b.e1).max_abs_diff(&b.e1.scale(re(2.0))) < 1e-14);
        assert!(t1.apply(&b.e2).norm() < 1e-14);
        let want = b.e1.add(&b.e2.scale(re(3f64.sqrt()))).scale(re(0.5));
        assert!(t2.apply(&b.e1).max_abs_diff(&want) < 1e-14);
    }

    #[test]
    fn type2_tl_action() {
        let b = build_type2_basis(0.0);
        let t1 = lift_to_strands(&type2_tl(0.0), 1);
        let t2 = lift_to_strands(&type2_tl(0.0), 2);
        assert!(t1.apply(&b.e1).max_abs_diff(&b.e1.scale(re(SQRT_2))) < 1e-14);
        assert!(t1.apply(&b.e2).norm() < 1e-14);
        let want = b.e1.add(&b.e2).scale(re(FRAC_1_SQRT_2));
        assert!(t2.apply(&b.e1).max_abs_diff(&want) < 1e-14);
        assert!(t2.apply(&b.e2).max_abs_diff(&want) < 1e-14);
    }

    #[test]
    fn reduced_generators() {
        let b2 = build_type2_basis(0.0);
        let r = reduce_operator(&lift_to_strands(&type2_braid(0.0), 1), &b2, 1e-12).unwrap();
        assert_close(&r, &ComplexMatrix::diag(&[re(1.0), im(1.0)]).scale(cis(-FRAC_PI_4)), 1e-14);
        let b1 = build_type1_basis();
        let r = reduce_operator(&lift_to_strands(&type1_braid(), 2), &b1, 1e-12).unwrap();
        let s3 = 3f64.sqrt();
        assert_close(&r, &ComplexMatrix::from_real_rows(&[[1.0, -s3], [-s3, -1.0]]).scale_re(0.5), 1e-14);
        assert_close(&reduce_operator(&ComplexMatrix::identity(16), &b1, 1e-12).unwrap(), &ComplexMatrix::identity(2), 1e-15);
    }

    #[test]
    fn reduced_tl_matches_fixture() {
        let basis = build_type2_basis(0.0);
        let fixture = crate::braid::type2_reduced_tl();
        for (k, want) in (1..=3).zip(fixture.generators()) {
            let r = reduce_operator(&lift_to_strands(&type2_tl(0.0), k), &basis, 1e-12).unwrap();
            assert_close(&r, want, 1e-14);
        }
        assert_eq!(fixture.d(), TYPE2_LOOP);
    }

    #[test]
    fn nonzero_varphi_is_still_invariant() {
        let v = 0.9;
        let basis = build_type2_basis(v);
        for k in 1..=3 {
            reduce_operator(&lift_to_strands(&type2_tl(v), k), &basis, 1e-12).unwrap();
            reduce_operator(&lift_to_strands(&type2_braid(v), k), &basis, 1e-12).unwrap();
        }
    }

    #[test]
    fn leakage_reported() {
        let x0 = crate::tensor::kron_all([
            &crate::tensor::pauli::x(),
            &ComplexMatrix::identity(2),
            &ComplexMatrix::identity(2),
            &ComplexMatrix::identity(2),
        ]);
        match reduce_operator(&x0, &build_type2_basis(0.0), 1e-12) {
            Err(Error::Leakage { leakage, .. }) => assert!(leakage > 0.5),
            other => panic!("expected leakage, got {other:?}"),
        }
        assert!(reduce_operator(&ComplexMatrix::identity(8), &build_type1_basis(), 1e-12).is_err());
    }

    #[test]
    fn s_reduction_at_special_points() {
        for t in [ThetaTriple::ghz(), ThetaTriple::w(), ThetaTriple::constrained(0.7, -1.3)] {
            let check = verify_s_reduction(&t, 1e-11).unwrap();
            assert!(check.residual < 1e-13, "{check:?}");
        }
    }

    #[test]
    fn literal_comparison_is_order_one() {
        let check = verify_s_reduction(&ThetaTriple::ghz(), 1e-11).unwrap();
        assert!(check.literal_residual > 0.5);
    }

    #[test]
    fn s_reduction_rejects_unconstrained() {
        let err = verify_s_reduction(&ThetaTriple::new(0.1, 0.2, 0.3), 1e-11);
        assert!(matches!(err, Err(Error::ConstraintViolated { .. })));
    }
}
