// Copyright 2026 The ybe-l1 Contributors
// SPDX-License-Identifier: Apache-2.0

//! Parametrized solutions of the Yang-Baxter equation
//!
//! ```text
//! R̆₁₂(θ₁) R̆₂₃(θ₂) R̆₁₂(θ₃) = R̆₂₃(θ₃) R̆₁₂(θ₂) R̆₂₃(θ₁)
//! ```
//!
//! and the parameter relations that make them work. A family provides the
//! two "roles" R̆₁₂ and R̆₂₃: for 4×4 matrices these are R̆⊗I and I⊗R̆ on
//! three qubits, for the 2×2 topological-basis forms they are two distinct
//! matrices. The middle parameter θ₂ always comes from the family's
//! [`Additivity`].
//!
//! The 2×2 type-II pair uses the full angle, A(θ) = diag(e^{iθ}, e^{−iθ}),
//! which is the normalization under which the three-body product
//! multiplies out to the closed (η, β) form.

use std::f64::consts::FRAC_1_SQRT_2;

use crate::braid::{type1_tl, type2_tl, TYPE1_LOOP, TYPE2_LOOP};
use crate::tensor::{c64, cis, im, lift_two_site, pauli, re, ComplexMatrix};
use crate::{Error, Result};

/// Angles closer than this to π/2 + kπ are treated as tangent poles.
pub const TAN_POLE_TOL: f64 = 1e-8;

/// Default free parameter of the rational scheme.
pub const DEFAULT_A0: f64 = -1.0;

fn checked_tan(angle: f64) -> Result<f64> {
    if angle.cos().abs() < TAN_POLE_TOL {
        return Err(Error::TangentPole { angle });
    }
    Ok(angle.tan())
}

/// How the middle spectral parameter is fixed by the outer two.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Additivity {
    /// `μ₂ = μ₁ + μ₃` (rational parameter; μ = tan θ).
    Galilean,
    /// `tan θ₂ = (tan θ₁ + tan θ₃) / (1 + tan θ₁ tan θ₃)`.
    Lorentzian,
    /// `f(μ, ν) = (μ + ν) / (1 + β²μν)` of the rational scheme.
    Rational { beta_sq: f64 },
}

impl Additivity {
    pub fn compose(&self, first: f64, third: f64) -> Result<f64> {
        match *self {
            Additivity::Galilean => Ok(first + third),
            Additivity::Lorentzian => {
                let (t1, t3) = (checked_tan(first)?, checked_tan(third)?);
                // atan2 keeps the 1 + t₁t₃ = 0 case (θ₂ = π/2) finite; the
                // branch is irrelevant because R̆(θ+π) = −R̆(θ).
                Ok((t1 + t3).atan2(1.0 + t1 * t3))
            }
            Additivity::Rational { beta_sq } => {
                let den = 1.0 + beta_sq * first * third;
                if den.abs() < TAN_POLE_TOL {
                    return Err(Error::TangentPole { angle: first });
                }
                Ok((first + third) / den)
            }
        }
    }
}

/// `β² = (d² − 4) / (2a₀)²`
pub fn rational_beta_sq(d: f64, a0: f64) -> f64 {
    (d * d - 4.0) / (2.0 * a0).powi(2)
}

/// `G(μ) = μ / (a₀ − dμ/2)`
pub fn rational_g(mu: c64, d: f64, a0: f64) -> c64 {
    mu / (re(a0) - mu * (d / 2.0))
}

/// `I + G(μ)·T` (normalization ρ = 1).
pub fn rational_r(tl: &ComplexMatrix, d: f64, a0: f64, mu: c64) -> ComplexMatrix {
    let n = tl.rows();
    &ComplexMatrix::identity(n) + &tl.scale(rational_g(mu, d, a0))
}

/// Trigonometric type-II 4×4 solution; equals exp[iθ σʸ⊗σˣ] at φ = 0.
pub fn type2_r4(theta: f64, varphi: f64) -> ComplexMatrix {
    let (s, c) = theta.sin_cos();
    let e = cis(varphi);
    let z = re(0.0);
    ComplexMatrix::from_rows(&[
        [re(c), z, z, e * s],
        [z, re(c), re(s), z],
        [z, re(-s), re(c), z],
        [-e.conj() * s, z, z, re(c)],
    ])
}

/// Rational type-I 4×4 solution `(I + μP)/√|1 − μ²|`.
pub fn type1_r4(mu: f64) -> Result<ComplexMatrix> {
    let norm = (1.0 - mu * mu).abs().sqrt();
    if norm < 1e-12 {
        return Err(Error::SingularNormalization { mu });
    }
    Ok((&ComplexMatrix::identity(4) + &pauli::swap().scale_re(mu)).scale_re(1.0 / norm))
}

/// 2×2 type-II, first role: diag(e^{iθ}, e^{−iθ}).
pub fn type2_r2_first(theta: f64) -> ComplexMatrix {
    ComplexMatrix::diag(&[cis(theta), cis(-theta)])
}

/// 2×2 type-II, second role: [[cos θ, i sin θ], [i sin θ, cos θ]].
pub fn type2_r2_second(theta: f64) -> ComplexMatrix {
    let (s, c) = theta.sin_cos();
    ComplexMatrix::from_rows(&[[re(c), im(s)], [im(s), re(c)]])
}

fn type1_norm(mu: f64) -> Result<f64> {
    let norm = (1.0 - mu * mu).abs().sqrt();
    if norm < 1e-12 {
        return Err(Error::SingularNormalization { mu });
    }
    Ok(norm)
}

/// 2×2 type-I, first role.
pub fn type1_r2_first(mu: f64) -> Result<ComplexMatrix> {
    let n = type1_norm(mu)?;
    Ok(ComplexMatrix::from_real_rows(&[[1.0 - mu, 0.0], [0.0, 1.0 + mu]]).scale_re(1.0 / n))
}

/// 2×2 type-I, second role.
pub fn type1_r2_second(mu: f64) -> Result<ComplexMatrix> {
    let n = type1_norm(mu)?;
    let s3 = 3f64.sqrt();
    Ok(ComplexMatrix::from_real_rows(&[[2.0 + mu, -s3 * mu], [-s3 * mu, 2.0 - mu]]).scale_re(0.5 / n))
}

/// Spin-½ Wigner matrix [[cos θ, −sin θ e^{−iφ}], [sin θ e^{iφ}, cos θ]].
pub fn wigner_d_half(theta: f64, phi: f64) -> ComplexMatrix {
    let (s, c) = theta.sin_cos();
    ComplexMatrix::from_rows(&[[re(c), -cis(-phi) * s], [cis(phi) * s, re(c)]])
}

/// V = (1/√2)[[1, i], [i, 1]].
pub fn v_matrix() -> ComplexMatrix {
    ComplexMatrix::from_rows(&[[re(1.0), im(1.0)], [im(1.0), re(1.0)]]).scale_re(FRAC_1_SQRT_2)
}

/// `V·M·V†` for a 2×2 `M`.
pub fn conjugate_by_v(m: &ComplexMatrix) -> Result<ComplexMatrix> {
    if m.rows() != 2 || m.cols() != 2 {
        return Err(Error::DimensionMismatch(format!("expected 2x2, got {}x{}", m.rows(), m.cols())));
    }
    let v = v_matrix();
    Ok(ComplexMatrix::product([&v, m, &v.adjoint()]))
}

fn principal_arccos(ratio: f64) -> Result<f64> {
    if !ratio.is_finite() || ratio.abs() > 1.0 + 1e-12 {
        return Err(Error::NoSolution { ratio });
    }
    Ok(ratio.clamp(-1.0, 1.0).acos())
}

/// φ with `cos φ = cos 2θ / (1 − cos 2θ)`, the braid-relation constraint
/// for D(θ,0), D(θ,φ).
pub fn phi_from_theta(theta: f64) -> Result<f64> {
    let c = (2.0 * theta).cos();
    principal_arccos(c / (1.0 - c))
}

/// φ solving the YBE for D(θ₁,0) D(θ₂,φ) D(θ₃,0) = D(θ₃,φ) D(θ₂,0) D(θ₁,φ).
pub fn phi_from_three_thetas(theta1: f64, theta2: f64, theta3: f64) -> Result<f64> {
    let mut t = [0.0; 3];
    for (slot, angle) in t.iter_mut().zip([theta1, theta2, theta3]) {
        *slot = checked_tan(angle)?;
        if slot.abs() < 1e-12 {
            return Err(Error::TangentPole { angle });
        }
    }
    let [t1, t2, t3] = t;
    principal_arccos(0.5 * (((t1 + t3) - t2) / (t1 * t2 * t3) - 1.0))
}

/// Residual of the D-function YBE with φ from [`phi_from_three_thetas`].
pub fn wigner_ybe_residual(theta1: f64, theta2: f64, theta3: f64) -> Result<(f64, f64)> {
    let phi = phi_from_three_thetas(theta1, theta2, theta3)?;
    let d = wigner_d_half;
    let lhs = ComplexMatrix::product([&d(theta1, 0.0), &d(theta2, phi), &d(theta3, 0.0)]);
    let rhs = ComplexMatrix::product([&d(theta3, phi), &d(theta2, 0.0), &d(theta1, phi)]);
    Ok((phi, lhs.max_abs_diff(&rhs)))
}

/// Residual of the D-function braid relation with φ from [`phi_from_theta`].
pub fn wigner_braid_residual(theta: f64) -> Result<(f64, f64)> {
    let phi = phi_from_theta(theta)?;
    let (a, b) = (wigner_d_half(theta, 0.0), wigner_d_half(theta, phi));
    let lhs = ComplexMatrix::product([&a, &b, &a]);
    let rhs = ComplexMatrix::product([&b, &a, &b]);
    Ok((phi, lhs.max_abs_diff(&rhs)))
}

#[derive(Debug, Clone, PartialEq)]
enum FamilyKind {
    Type2Tensor { varphi: f64 },
    Type1Tensor,
    Type2Reduced,
    Type1Reduced,
    Rational { tl: ComplexMatrix, d: f64, a0: f64 },
}

/// A parametrized YBE solution together with its additivity rule.
#[derive(Debug, Clone, PartialEq)]
pub struct RMatrixFamily {
    name: &'static str,
    kind: FamilyKind,
    additivity: Additivity,
}

impl RMatrixFamily {
    pub fn type2_tensor(varphi: f64) -> Self {
        Self { name: "type2-4x4", kind: FamilyKind::Type2Tensor { varphi }, additivity: Additivity::Lorentzian }
    }

    pub fn type1_tensor() -> Self {
        Self { name: "type1-4x4", kind: FamilyKind::Type1Tensor, additivity: Additivity::Galilean }
    }

    pub fn type2_reduced() -> Self {
        Self { name: "type2-2x2", kind: FamilyKind::Type2Reduced, additivity: Additivity::Lorentzian }
    }

    pub fn type1_reduced() -> Self {
        Self { name: "type1-2x2", kind: FamilyKind::Type1Reduced, additivity: Additivity::Galilean }
    }

    /// `R̆(μ) = I + G(μ)T` for a 4×4 TL generator with loop value `d`.
    pub fn rational(name: &'static str, tl: ComplexMatrix, d: f64, a0: f64) -> Self {
        let additivity = Additivity::Rational { beta_sq: rational_beta_sq(d, a0) };
        Self { name, kind: FamilyKind::Rational { tl, d, a0 }, additivity }
    }

    pub fn rational_type1(a0: f64) -> Self {
        Self::rational("rational-type1", type1_tl(), TYPE1_LOOP, a0)
    }

    pub fn rational_type2(a0: f64) -> Self {
        Self::rational("rational-type2", type2_tl(0.0), TYPE2_LOOP, a0)
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn additivity(&self) -> Additivity {
        self.additivity
    }

    /// Dimension of the local matrix (4 for two-site forms, 2 for reduced).
    pub fn local_dim(&self) -> usize {
        match self.kind {
            FamilyKind::Type2Reduced | FamilyKind::Type1Reduced => 2,
            _ => 4,
        }
    }

    fn local(&self, x: f64) -> Result<ComplexMatrix> {
        match &self.kind {
            FamilyKind::Type2Tensor { varphi } => Ok(type2_r4(x, *varphi)),
            FamilyKind::Type1Tensor => type1_r4(x),
            FamilyKind::Rational { tl, d, a0 } => Ok(rational_r(tl, *d, *a0, re(x))),
            FamilyKind::Type2Reduced => Ok(type2_r2_first(x)),
            FamilyKind::Type1Reduced => type1_r2_first(x),
        }
    }

    /// The R̆₁₂ role on the full space (8×8 or 2×2).
    pub fn first(&self, x: f64) -> Result<ComplexMatrix> {
        let local = self.local(x)?;
        Ok(match self.local_dim() {
            4 => lift_two_site(&local, 2, 0, 3),
            _ => local,
        })
    }

    /// The R̆₂₃ role on the full space.
    pub fn second(&self, x: f64) -> Result<ComplexMatrix> {
        match self.kind {
            FamilyKind::Type2Reduced => Ok(type2_r2_second(x)),
            FamilyKind::Type1Reduced => type1_r2_second(x),
            _ => Ok(lift_two_site(&self.local(x)?, 2, 1, 3)),
        }
    }
}

/// Outcome of [`check_ybe`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct YbeCheck {
    /// Middle parameter from the additivity rule.
    pub middle: f64,
    pub residual: f64,
}

/// Max-abs difference between the two sides of the YBE, with the middle
/// parameter fixed by the family's additivity.
pub fn check_ybe(family: &RMatrixFamily, first: f64, third: f64) -> Result<YbeCheck> {
    let middle = family.additivity.compose(first, third)?;
    let lhs = ComplexMatrix::product([&family.first(first)?, &family.second(middle)?, &family.first(third)?]);
    let rhs = ComplexMatrix::product([&family.second(third)?, &family.first(middle)?, &family.second(first)?]);
    Ok(YbeCheck { middle, residual: lhs.max_abs_diff(&rhs) })
}

/// YBE residual for an explicit middle parameter (no additivity applied).
pub fn ybe_residual_with_middle(family: &RMatrixFamily, first: f64, middle: f64, third: f64) -> Result<f64> {
    let lhs = ComplexMatrix::product([&family.first(first)?, &family.second(middle)?, &family.first(third)?]);
    let rhs = ComplexMatrix::product([&family.second(third)?, &family.first(middle)?, &family.second(first)?]);
    Ok(lhs.max_abs_diff(&rhs))
}

#[cfg(test)]
mod tests {
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

    use super::*;
    use crate::braid::type2_braid;
    use crate::tensor::{expm_series, StateVector};

    #[test]
    fn type2_identity_and_braid_point() {
        assert!(type2_r4(0.0, 0.3).max_abs_diff(&ComplexMatrix::identity(4)) < 1e-16);
        assert!(type2_r4(FRAC_PI_4, 0.0).max_abs_diff(&type2_braid(0.0)) < 1e-15);
    }

    #[test]
    fn type2_is_exponential_of_y_x() {
        let gen = pauli::y().kron(&pauli::x()).scale(im(1.0));
        for &t in &[0.2, 1.1, -2.3] {
            let e = expm_series(&gen.scale_re(t)).unwrap();
            assert!(type2_r4(t, 0.0).max_abs_diff(&e) < 1e-13);
        }
    }

    #[test]
    fn type2_on_00_magnitudes() {
        let theta = 0.37;
        let out = type2_r4(theta, 0.0).apply(&StateVector::basis(2, 0));
        let m = out.magnitudes();
        assert!((m[0] - theta.cos().abs()).abs() < 1e-15);
        assert!((m[3] - theta.sin().abs()).abs() < 1e-15);
        assert!(m[1] < 1e-16 && m[2] < 1e-16);
    }

    #[test]
    fn type1_values() {
        assert!(type1_r4(0.0).unwrap().max_abs_diff(&ComplexMatrix::identity(4)) < 1e-16);
        assert!(matches!(type1_r4(1.0), Err(Error::SingularNormalization { .. })));
        assert!(matches!(type1_r4(-1.0), Err(Error::SingularNormalization { .. })));
        assert!(!type1_r4(0.5).unwrap().is_unitary(1e-6).unwrap().unitary);
    }

    #[test]
    fn type1_galilean() {
        let r = ybe_residual_with_middle(&RMatrixFamily::type1_tensor(), 0.3, 0.7, 0.4).unwrap();
        assert!(r < 1e-12);
        let bad = ybe_residual_with_middle(&RMatrixFamily::type1_tensor(), 0.3, 0.6, 0.4).unwrap();
        assert!(bad > 1e-3);
    }

    #[test]
    fn type2_braid_point_ybe() {
        let c = check_ybe(&RMatrixFamily::type2_tensor(0.0), FRAC_PI_4, FRAC_PI_4);
        // tan θ₁ tan θ₃ = 1 → θ₂ = π/2 − but additivity stays finite
        let c = c.unwrap();
        assert!(c.residual < 1e-13);
    }

    #[test]
    fn tangent_pole_rejected() {
        let err = Additivity::Lorentzian.compose(FRAC_PI_2, 0.1);
        assert!(matches!(err, Err(Error::TangentPole { .. })));
    }

    #[test]
    fn rational_type1_is_scaled_type1() {
        // I + μ/(a₀ − μ)·T with a₀ = −1 equals (I + μP)/(1 + μ)
        for &mu in &[0.2, -0.45, 0.8] {
            let r = rational_r(&type1_tl(), TYPE1_LOOP, DEFAULT_A0, re(mu));
            let expected = type1_r4(mu).unwrap().scale_re((1.0 - mu * mu).abs().sqrt() / (1.0 + mu));
            assert!(r.max_abs_diff(&expected) < 1e-14);
        }
        assert_eq!(rational_beta_sq(TYPE1_LOOP, DEFAULT_A0), 0.0);
    }

    #[test]
    fn rational_type2_is_scaled_trigonometric() {
        // tan θ = iμd/(2a₀); the opposite sign gives R̆(−θ)
        for &theta in &[0.3, -0.9, 1.2] {
            let mu = re(2.0 * DEFAULT_A0 * f64::tan(theta)) / im(TYPE2_LOOP);
            for (mu, target) in [(mu, type2_r4(theta, 0.0)), (-mu, type2_r4(-theta, 0.0))] {
                let r = rational_r(&type2_tl(0.0), TYPE2_LOOP, DEFAULT_A0, mu);
                let scale = target[(0, 0)] / r[(0, 0)];
                assert!(r.scale(scale).max_abs_diff(&target) < 1e-13, "theta={theta}");
            }
        }
        // β² = −1/2 turns f into the Lorentzian rule under μ ∝ tan θ
        assert!((rational_beta_sq(TYPE2_LOOP, DEFAULT_A0) + 0.5).abs() < 1e-15);
    }

    #[test]
    fn rational_families_satisfy_ybe() {
        for fam in [RMatrixFamily::rational_type1(-1.0), RMatrixFamily::rational_type2(-1.0), RMatrixFamily::rational_type2(0.7)] {
            let c = check_ybe(&fam, 0.31, -0.22).unwrap();
            assert!(c.residual < 1e-13, "{} {c:?}", fam.name());
        }
    }

    #[test]
    fn wigner_identity() {
        assert!(wigner_d_half(0.0, 1.3).max_abs_diff(&ComplexMatrix::identity(2)) < 1e-16);
        assert!(wigner_d_half(0.4, 2.0).is_unitary(1e-14).unwrap().unitary);
    }

    #[test]
    fn v_conjugation() {
        assert!(conjugate_by_v(&ComplexMatrix::identity(2)).unwrap().max_abs_diff(&ComplexMatrix::identity(2)) < 1e-15);
        let theta = 0.63;
        let a = conjugate_by_v(&wigner_d_half(theta, 0.0)).unwrap();
        assert!(a.max_abs_diff(&type2_r2_first(theta)) < 1e-15);
        let b = conjugate_by_v(&wigner_d_half(theta, FRAC_PI_2)).unwrap();
        assert!(b.max_abs_diff(&type2_r2_second(theta)) < 1e-15);
        assert!(conjugate_by_v(&ComplexMatrix::identity(4)).is_err());
    }

    #[test]
    fn v_conjugation_at_braid_points() {
        // type II: θ = π/4, φ = π/2 gives the reduced Bell generators
        let b = conjugate_by_v(&wigner_d_half(FRAC_PI_4, FRAC_PI_2)).unwrap();
        let expected = ComplexMatrix::from_rows(&[[re(1.0), im(1.0)], [im(1.0), re(1.0)]]).scale_re(FRAC_1_SQRT_2);
        assert!(b.max_abs_diff(&expected) < 1e-15);
        // type I: θ = π/2, φ = 2π/3
        let s3 = 3f64.sqrt();
        let a = conjugate_by_v(&wigner_d_half(FRAC_PI_2, 2.0 * PI / 3.0)).unwrap();
        let b = conjugate_by_v(&wigner_d_half(FRAC_PI_2, 0.0)).unwrap();
        assert!(b.max_abs_diff(&ComplexMatrix::diag(&[im(1.0), im(-1.0)])) < 1e-15);
        let expected = ComplexMatrix::from_real_rows(&[[1.0, -s3], [-s3, -1.0]]).scale(im(-0.5));
        assert!(a.max_abs_diff(&expected) < 1e-15);
    }

    #[test]
    fn phi_constraints() {
        assert!((phi_from_theta(FRAC_PI_4).unwrap() - FRAC_PI_2).abs() < 1e-12);
        assert!((phi_from_theta(FRAC_PI_2).unwrap() - 2.0 * PI / 3.0).abs() < 1e-12);
        assert!(matches!(phi_from_theta(0.1), Err(Error::NoSolution { .. })));
        assert!(matches!(phi_from_theta(0.0), Err(Error::NoSolution { .. })));
        let q = FRAC_PI_4;
        assert!((phi_from_three_thetas(q, q, q).unwrap() - FRAC_PI_2).abs() < 1e-12);
        assert!(phi_from_three_thetas(0.0, 0.3, 0.4).is_err());
        assert!(phi_from_three_thetas(FRAC_PI_2, 0.3, 0.4).is_err());
    }

    #[test]
    fn wigner_relations_hold_with_their_phi() {
        for &t in &[FRAC_PI_4, FRAC_PI_2, 1.0] {
            let (_, r) = wigner_braid_residual(t).unwrap();
            assert!(r < 1e-14);
        }
        let (_, r) = wigner_ybe_residual(0.4, 0.9, 0.7).unwrap();
        assert!(r < 1e-14);
    }

    #[test]
    fn reduced_pairs_satisfy_ybe() {
        let c = check_ybe(&RMatrixFamily::type2_reduced(), 0.3, 0.5).unwrap();
        assert!(c.residual < 1e-14);
        let c = check_ybe(&RMatrixFamily::type1_reduced(), 0.3, 0.4).unwrap();
        assert!((c.middle - 0.7).abs() < 1e-15);
        assert!(c.residual < 1e-14);
    }
}
