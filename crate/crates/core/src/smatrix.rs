// Copyright 2026 The ybe-l1 Contributors
// SPDX-License-Identifier: Apache-2.0

//! The factorized three-body S-matrix.
//!
//! Two coordinates describe the same object. A constrained angle triple
//! (θ₁, θ₂, θ₃) gives the product R̆₁₂(θ₁) R̆₂₃(θ₂) R̆₁₂(θ₃) of type-II
//! R-matrices at φ = 0; the pair (η, β) gives the closed form
//! `exp(η n⃗·Λ⃗)` with n⃗ = (cos β/√2, cos β/√2, sin β). The two agree
//! exactly (no residual phase) under [`thetas_to_params`].
//!
//! Λ⃗ is the generator triple of the R-matrix itself:
//! Λ₁ = iσʸσˣI, Λ₂ = iIσʸσˣ, Λ₃ = iσʸσᶻσˣ.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, FRAC_PI_8, PI, SQRT_2, TAU};

use crate::tensor::{expm_involutive, im, kron_all, lift_two_site, pauli, re, ComplexMatrix, StateVector};
use crate::yang_baxter::{type2_r2_first, type2_r2_second, type2_r4};
use crate::{Error, Result};

/// arccot √2 = arctan(1/√2).
pub const BETA_STAR: f64 = 0.615_479_708_670_387_4;

/// Default tolerance on the triple constraint.
pub const CONSTRAINT_TOL: f64 = 1e-9;

/// Point in the (η, β) plane, canonicalized to η ∈ [0, 2π), β ∈ [−π, π).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SParams {
    pub eta: f64,
    pub beta: f64,
}

impl SParams {
    pub fn new(eta: f64, beta: f64) -> Self {
        Self { eta: eta.rem_euclid(TAU), beta: (beta + PI).rem_euclid(TAU) - PI }
    }

    /// (π/3, arccot √2), where S̆|000⟩ is a GHZ-class state.
    pub fn ghz() -> Self {
        Self::new(FRAC_PI_3, BETA_STAR)
    }

    /// (π/2, arccot √2), where S̆|000⟩ is the W state.
    pub fn w() -> Self {
        Self::new(FRAC_PI_2, BETA_STAR)
    }

    /// `n⃗ = (cos β/√2, cos β/√2, sin β)`
    pub fn direction(&self) -> [f64; 3] {
        let (s, c) = self.beta.sin_cos();
        [c * FRAC_1_SQRT_2, c * FRAC_1_SQRT_2, s]
    }
}

/// Three spectral angles of the factorized product.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThetaTriple {
    pub theta1: f64,
    pub theta2: f64,
    pub theta3: f64,
}

impl ThetaTriple {
    /// Unchecked triple; see [`ThetaTriple::checked`].
    pub fn new(theta1: f64, theta2: f64, theta3: f64) -> Self {
        Self { theta1, theta2, theta3 }
    }

    /// Rejects triples off the constraint surface by more than `tol`.
    pub fn checked(theta1: f64, theta2: f64, theta3: f64, tol: f64) -> Result<Self> {
        let t = Self::new(theta1, theta2, theta3);
        t.ensure_constrained(tol)?;
        Ok(t)
    }

    /// The triple with θ₂ solved from θ₁, θ₃.
    pub fn constrained(theta1: f64, theta3: f64) -> Self {
        let theta2 = (theta1 + theta3).sin().atan2((theta1 - theta3).cos());
        Self::new(theta1, theta2, theta3)
    }

    /// Preimage of the GHZ point: (0, π/4, π/4).
    pub fn ghz() -> Self {
        Self::new(0.0, FRAC_PI_4, FRAC_PI_4)
    }

    /// Preimage of the W point: (π/8, arctan √2, 3π/8).
    pub fn w() -> Self {
        Self::new(FRAC_PI_8, SQRT_2.atan(), 3.0 * FRAC_PI_8)
    }

    /// `|sin θ₂ cos(θ₁ − θ₃) − cos θ₂ sin(θ₁ + θ₃)|`
    pub fn constraint_residual(&self) -> f64 {
        let (s2, c2) = self.theta2.sin_cos();
        (s2 * (self.theta1 - self.theta3).cos() - c2 * (self.theta1 + self.theta3).sin()).abs()
    }

    pub fn ensure_constrained(&self, tol: f64) -> Result<()> {
        let residual = self.constraint_residual();
        if residual > tol {
            return Err(Error::ConstraintViolated { residual, tol });
        }
        Ok(())
    }
}

/// (θ₁, θ₂, θ₃) ↦ (η, β), with
/// cos η = cos θ₂ cos(θ₁+θ₃), sin η = sin θ₂ √(1 + cos²(θ₁−θ₃)),
/// and (cos β, sin β) ∝ (√2 cos(θ₁−θ₃), −sin(θ₁−θ₃)).
pub fn thetas_to_params(t: &ThetaTriple, tol: f64) -> Result<SParams> {
    t.ensure_constrained(tol)?;
    let diff = t.theta1 - t.theta3;
    let (s2, c2) = t.theta2.sin_cos();
    let eta = (s2 * (1.0 + diff.cos().powi(2)).sqrt()).atan2(c2 * (t.theta1 + t.theta3).cos());
    let beta = (-diff.sin()).atan2(SQRT_2 * diff.cos());
    Ok(SParams::new(eta, beta))
}

/// Λ₁, Λ₂, Λ₃ as 8×8 matrices.
pub fn lambda_generators() -> [ComplexMatrix; 3] {
    let (i2, x, y, z) = (pauli::identity(), pauli::x(), pauli::y(), pauli::z());
    let i = im(1.0);
    [
        kron_all([&y, &x, &i2]).scale(i),
        kron_all([&i2, &y, &x]).scale(i),
        kron_all([&y, &z, &x]).scale(i),
    ]
}

/// `n⃗·Λ⃗`; squares to −I.
pub fn s123_generator(p: &SParams) -> ComplexMatrix {
    let n = p.direction();
    let [l1, l2, l3] = lambda_generators();
    &(&l1.scale_re(n[0]) + &l2.scale_re(n[1])) + &l3.scale_re(n[2])
}

/// `exp(η n⃗·Λ⃗)`
pub fn build_s123_closed(p: &SParams) -> ComplexMatrix {
    expm_involutive(&s123_generator(p), p.eta).expect("n·Λ squares to −I for every β")
}

/// R̆₁₂(θ₁) R̆₂₃(θ₂) R̆₁₂(θ₃) on three qubits.
pub fn build_s123_product(t: &ThetaTriple, tol: f64) -> Result<ComplexMatrix> {
    t.ensure_constrained(tol)?;
    Ok(s123_product_unchecked(t))
}

pub(crate) fn s123_product_unchecked(t: &ThetaTriple) -> ComplexMatrix {
    let r12 = |th: f64| lift_two_site(&type2_r4(th, 0.0), 2, 0, 3);
    let r23 = |th: f64| lift_two_site(&type2_r4(th, 0.0), 2, 1, 3);
    ComplexMatrix::product([&r12(t.theta1), &r23(t.theta2), &r12(t.theta3)])
}

/// The other ordering, R̆₂₃(θ₃) R̆₁₂(θ₂) R̆₂₃(θ₁), without a constraint check.
pub fn s123_product_reversed(t: &ThetaTriple) -> ComplexMatrix {
    let r12 = |th: f64| lift_two_site(&type2_r4(th, 0.0), 2, 0, 3);
    let r23 = |th: f64| lift_two_site(&type2_r4(th, 0.0), 2, 1, 3);
    ComplexMatrix::product([&r23(t.theta3), &r12(t.theta2), &r23(t.theta1)])
}

/// Ψ(η, β) = cos η|000⟩ − (cos β sin η/√2)(|011⟩ + |110⟩) − sin β sin η|101⟩.
pub fn psi_from_params(p: &SParams) -> StateVector {
    let (se, ce) = p.eta.sin_cos();
    let (sb, cb) = p.beta.sin_cos();
    let mut amps = vec![re(0.0); 8];
    amps[0b000] = re(ce);
    amps[0b011] = re(-cb * se * FRAC_1_SQRT_2);
    amps[0b110] = re(-cb * se * FRAC_1_SQRT_2);
    amps[0b101] = re(-sb * se);
    StateVector::from_amplitudes_unchecked(amps)
}

/// Traceless generator G of the reduced S-matrix, `S′ = cos η I + sin η G`.
pub fn sprime_generator(beta: f64) -> ComplexMatrix {
    let (s, c) = beta.sin_cos();
    let a = im(c * FRAC_1_SQRT_2);
    ComplexMatrix::from_rows(&[[a, a + s], [a - s, -a]])
}

/// The 2×2 reduced S-matrix in the anyon fusion basis.
pub fn build_sprime(p: &SParams) -> ComplexMatrix {
    let g = sprime_generator(p.beta);
    &ComplexMatrix::identity(2).scale_re(p.eta.cos()) + &g.scale_re(p.eta.sin())
}

/// A(θ₁) B(θ₂) A(θ₃) from the full-angle 2×2 type-II pair.
pub fn sprime_product(t: &ThetaTriple) -> ComplexMatrix {
    ComplexMatrix::product([&type2_r2_first(t.theta1), &type2_r2_second(t.theta2), &type2_r2_first(t.theta3)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::{c64, expm_series};

    #[test]
    fn beta_star_value() {
        assert!((BETA_STAR - (1.0 / SQRT_2).atan()).abs() < 2e-16);
        assert!((BETA_STAR.cos() - (2.0f64 / 3.0).sqrt()).abs() < 1e-15);
    }

    #[test]
    fn canonical_ranges() {
        let p = SParams::new(-0.5, 4.0);
        assert!((p.eta - (TAU - 0.5)).abs() < 1e-15);
        assert!((p.beta - (4.0 - TAU)).abs() < 1e-15);
        assert_eq!(SParams::new(0.0, -PI).beta, -PI);
    }

    #[test]
    fn lambda_algebra() {
        let ls = lambda_generators();
        let minus_i = ComplexMatrix::identity(8).scale_re(-1.0);
        for (a, la) in ls.iter().enumerate() {
            assert!((la * la).max_abs_diff(&minus_i) < 1e-15);
            for lb in &ls[a + 1..] {
                assert!(la.anticommutator(lb).max_abs() < 1e-15);
            }
        }
        // Λ₁ = i·(σʸ⊗σˣ⊗I), hand-assembled from its nonzero entries
        let mut oracle = ComplexMatrix::zeros(8, 8);
        for col in 0..8usize {
            let (b0, b1, b2) = (col >> 2 & 1, col >> 1 & 1, col & 1);
            let row = ((1 - b0) << 2) | ((1 - b1) << 1) | b2;
            // σʸ|b⟩ = i(−1)^b |1−b⟩ ; times i
            let sign = if b0 == 0 { -1.0 } else { 1.0 };
            oracle[(row, col)] = re(sign);
        }
        assert_eq!(ls[0], oracle);
    }

    #[test]
    fn closed_form_matches_series() {
        for &(eta, beta) in &[(FRAC_PI_3, BETA_STAR), (1.3, -2.2), (5.0, 0.4)] {
            let p = SParams::new(eta, beta);
            let series = expm_series(&s123_generator(&p).scale_re(p.eta)).unwrap();
            assert!(build_s123_closed(&p).max_abs_diff(&series) < 1e-12);
        }
    }

    #[test]
    fn identity_at_zero_eta() {
        let p = SParams::new(0.0, 0.7);
        assert!(build_s123_closed(&p).max_abs_diff(&ComplexMatrix::identity(8)) < 1e-16);
        assert!(build_sprime(&p).max_abs_diff(&ComplexMatrix::identity(2)) < 1e-16);
        assert_eq!(psi_from_params(&p), StateVector::basis(3, 0));
    }

    #[test]
    fn special_preimages() {
        let ghz = thetas_to_params(&ThetaTriple::ghz(), CONSTRAINT_TOL).unwrap();
        assert!((ghz.eta - FRAC_PI_3).abs() < 1e-15 && (ghz.beta - BETA_STAR).abs() < 1e-15);
        let w = thetas_to_params(&ThetaTriple::w(), CONSTRAINT_TOL).unwrap();
        assert!((w.eta - FRAC_PI_2).abs() < 1e-15 && (w.beta - BETA_STAR).abs() < 1e-15);
        let sym = thetas_to_params(&ThetaTriple::constrained(0.4, 0.4), CONSTRAINT_TOL).unwrap();
        assert_eq!(sym.beta, 0.0);
    }

    #[test]
    fn off_constraint_rejected() {
        let t = ThetaTriple::new(0.1, 0.2, 0.3);
        assert!(matches!(thetas_to_params(&t, CONSTRAINT_TOL), Err(Error::ConstraintViolated { .. })));
        assert!(build_s123_product(&t, CONSTRAINT_TOL).is_err());
        assert!(ThetaTriple::checked(0.0, FRAC_PI_4, FRAC_PI_4, 1e-12).is_ok());
    }

    #[test]
    fn product_matches_closed_form() {
        for t in [ThetaTriple::ghz(), ThetaTriple::w(), ThetaTriple::constrained(-2.0, 0.9)] {
            let prod = build_s123_product(&t, CONSTRAINT_TOL).unwrap();
            let closed = build_s123_closed(&thetas_to_params(&t, CONSTRAINT_TOL).unwrap());
            assert!(prod.max_abs_diff(&closed) < 1e-14);
            assert!(prod.max_abs_diff(&s123_product_reversed(&t)) < 1e-14);
        }
    }

    #[test]
    fn psi_is_closed_form_on_000() {
        for &(eta, beta) in &[(FRAC_PI_3, BETA_STAR), (0.9, -1.7), (4.4, 2.9)] {
            let p = SParams::new(eta, beta);
            let applied = build_s123_closed(&p).apply(&StateVector::basis(3, 0));
            assert!(applied.max_abs_diff(&psi_from_params(&p)) < 1e-15);
        }
    }

    #[test]
    fn ghz_and_w_states() {
        let ghz = psi_from_params(&SParams::ghz());
        let want = [0.5, 0.0, 0.0, -0.5, 0.0, -0.5, -0.5, 0.0];
        for (a, w) in ghz.amplitudes().iter().zip(want) {
            assert!((a - re(w)).norm() < 1e-15);
        }
        let w = psi_from_params(&SParams::w()).magnitudes();
        let third = 1.0 / 3f64.sqrt();
        for (k, m) in w.iter().enumerate() {
            let expected = if [0b011, 0b101, 0b110].contains(&k) { third } else { 0.0 };
            assert!((m - expected).abs() < 1e-15);
        }
    }

    #[test]
    fn sprime_at_ghz() {
        let s = build_sprime(&SParams::ghz());
        assert!((s[(0, 0)] - c64::new(0.5, 0.5)).norm() < 1e-15);
        assert!((s[(0, 0)].norm_sqr() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn sprime_is_exponential_of_its_generator() {
        let p = SParams::new(2.1, -0.3);
        let g = sprime_generator(p.beta);
        assert!(g.trace().norm() < 1e-16);
        assert!(expm_involutive(&g, p.eta).unwrap().max_abs_diff(&build_sprime(&p)) < 1e-15);
        let check = build_sprime(&p).is_unitary(1e-14).unwrap();
        assert!(check.unitary);
    }

    #[test]
    fn sprime_matches_two_by_two_product() {
        for t in [ThetaTriple::ghz(), ThetaTriple::w(), ThetaTriple::constrained(1.1, -0.4)] {
            let p = thetas_to_params(&t, CONSTRAINT_TOL).unwrap();
            assert!(sprime_product(&t).max_abs_diff(&build_sprime(&p)) < 1e-14);
        }
    }
}
