// Copyright 2026 The ybe-l1 Contributors
// SPDX-License-Identifier: Apache-2.0

//! Temperley-Lieb and braid-group representations.
//!
//! Two families are bundled. Type I is built on the two-qubit swap (loop
//! value d = 2, α = i); type II on the Bell matrix (d = √2, α = e^{i3π/8}).
//! Each comes as a local 4×4 matrix that can be lifted onto a qubit chain,
//! and as the 2×2 action on its four-strand topological basis.
//!
//! Relation checks return the max-abs residual of every relation rather
//! than a verdict, so callers pick their own thresholds.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4, FRAC_PI_8, SQRT_2};

use crate::tensor::{c64, cis, im, lift_two_site, pauli, re, ComplexMatrix};
use crate::{Error, Result};

pub const TYPE1_LOOP: f64 = 2.0;
pub const TYPE2_LOOP: f64 = SQRT_2;

/// α for the type-I family.
pub fn type1_alpha() -> c64 {
    im(1.0)
}

/// α for the type-II family.
pub fn type2_alpha() -> c64 {
    cis(3.0 * FRAC_PI_8)
}

/// `d = −α² − α⁻²`.
pub fn loop_value(alpha: c64) -> c64 {
    -(alpha * alpha) - (alpha * alpha).inv()
}

/// Local type-I TL generator `P`-complement: `I − P`.
pub fn type1_tl() -> ComplexMatrix {
    ComplexMatrix::from_real_rows(&[
        [0.0, 0.0, 0.0, 0.0],
        [0.0, 1.0, -1.0, 0.0],
        [0.0, -1.0, 1.0, 0.0],
        [0.0, 0.0, 0.0, 0.0],
    ])
}

/// Local type-II TL generator at phase `varphi`.
pub fn type2_tl(varphi: f64) -> ComplexMatrix {
    let e = cis(varphi);
    let z = re(0.0);
    let one = re(1.0);
    let i = im(1.0);
    ComplexMatrix::from_rows(&[
        [one, z, z, i * e],
        [z, one, i, z],
        [z, -i, one, z],
        [-i * e.conj(), z, z, one],
    ])
    .scale_re(FRAC_1_SQRT_2)
}

/// Type-I braid matrix: the swap.
pub fn type1_braid() -> ComplexMatrix {
    pauli::swap()
}

/// Type-II (Bell) braid matrix at phase `varphi`.
pub fn type2_braid(varphi: f64) -> ComplexMatrix {
    let e = cis(varphi);
    let z = re(0.0);
    let one = re(1.0);
    ComplexMatrix::from_rows(&[
        [one, z, z, e],
        [z, one, one, z],
        [z, -one, one, z],
        [-e.conj(), z, z, one],
    ])
    .scale_re(FRAC_1_SQRT_2)
}

/// Type-I TL generators on the four-strand basis {e₁, e₂}; T₃ = T₁.
pub fn type1_reduced_tl() -> TlRep {
    let s3 = 3f64.sqrt();
    let t1 = ComplexMatrix::from_real_rows(&[[2.0, 0.0], [0.0, 0.0]]);
    let t2 = ComplexMatrix::from_real_rows(&[[0.5, s3 / 2.0], [s3 / 2.0, 1.5]]);
    TlRep { generators: vec![t1.clone(), t2, t1], d: TYPE1_LOOP }
}

/// Type-II TL generators on the four-strand basis {e₁, e₂}; T₃ = T₁.
pub fn type2_reduced_tl() -> TlRep {
    let t1 = ComplexMatrix::from_real_rows(&[[SQRT_2, 0.0], [0.0, 0.0]]);
    let t2 = ComplexMatrix::from_real_rows(&[[1.0, 1.0], [1.0, 1.0]]).scale_re(FRAC_1_SQRT_2);
    TlRep { generators: vec![t1.clone(), t2, t1], d: TYPE2_LOOP }
}

/// Type-I braid generators on the four-strand basis.
pub fn type1_reduced_braids() -> BraidRep {
    let s3 = 3f64.sqrt();
    let b1 = ComplexMatrix::from_real_rows(&[[-1.0, 0.0], [0.0, 1.0]]);
    let b2 = ComplexMatrix::from_real_rows(&[[1.0, -s3], [-s3, -1.0]]).scale_re(0.5);
    BraidRep { generators: vec![b1.clone(), b2, b1], alpha: None }
}

/// Type-II braid generators on the four-strand basis.
pub fn type2_reduced_braids() -> BraidRep {
    let b1 = ComplexMatrix::diag(&[re(1.0), im(1.0)]).scale(cis(-FRAC_PI_4));
    let b2 = ComplexMatrix::from_rows(&[[re(1.0), im(-1.0)], [im(-1.0), re(1.0)]]).scale_re(FRAC_1_SQRT_2);
    BraidRep { generators: vec![b1.clone(), b2, b1], alpha: None }
}

fn check_generators(generators: &[ComplexMatrix]) -> Result<usize> {
    let first = generators.first().ok_or_else(|| Error::DimensionMismatch("no generators".into()))?;
    let n = first.ensure_square()?;
    for g in generators {
        if g.ensure_square()? != n {
            return Err(Error::DimensionMismatch(format!(
                "generators of sizes {n} and {} in one representation",
                g.rows()
            )));
        }
    }
    Ok(n)
}

/// A representation of TL_N: generators T₁..T_{N−1} with loop value d.
#[derive(Debug, Clone, PartialEq)]
pub struct TlRep {
    generators: Vec<ComplexMatrix>,
    d: f64,
}

impl TlRep {
    pub fn new(generators: Vec<ComplexMatrix>, d: f64) -> Result<Self> {
        check_generators(&generators)?;
        Ok(Self { generators, d })
    }

    /// Lifts a local two-site generator onto `strands` sites of dimension
    /// `site_dim`: Tᵢ = I⊗…⊗T⊗…⊗I.
    pub fn lifted(local: &ComplexMatrix, site_dim: usize, strands: usize, d: f64) -> Self {
        let generators = (0..strands - 1)
            .map(|i| lift_two_site(local, site_dim, i, strands))
            .collect();
        Self { generators, d }
    }

    pub fn type1(strands: usize) -> Self {
        Self::lifted(&type1_tl(), 2, strands, TYPE1_LOOP)
    }

    pub fn type2(strands: usize, varphi: f64) -> Self {
        Self::lifted(&type2_tl(varphi), 2, strands, TYPE2_LOOP)
    }

    pub fn generators(&self) -> &[ComplexMatrix] {
        &self.generators
    }

    pub fn d(&self) -> f64 {
        self.d
    }

    pub fn strands(&self) -> usize {
        self.generators.len() + 1
    }

    pub fn dim(&self) -> usize {
        self.generators[0].rows()
    }
}

/// Max residual of each TL relation.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct TlReport {
    /// `‖Tᵢ² − d·Tᵢ‖`
    pub idempotent: f64,
    /// `‖TᵢTᵢ±₁Tᵢ − Tᵢ‖`
    pub adjacent: f64,
    /// `‖TᵢTⱼ − TⱼTᵢ‖`, |i−j| > 1
    pub far: f64,
}

impl TlReport {
    pub fn max(&self) -> f64 {
        self.idempotent.max(self.adjacent).max(self.far)
    }

    pub fn passes(&self, tol: f64) -> bool {
        self.max() <= tol
    }
}

pub fn check_tl_relations(rep: &TlRep) -> Result<TlReport> {
    check_generators(&rep.generators)?;
    let g = &rep.generators;
    let mut report = TlReport::default();
    for (i, t) in g.iter().enumerate() {
        report.idempotent = report.idempotent.max((t * t).max_abs_diff(&t.scale_re(rep.d)));
        if let Some(next) = g.get(i + 1) {
            let forward = ComplexMatrix::product([t, next, t]).max_abs_diff(t);
            let backward = ComplexMatrix::product([next, t, next]).max_abs_diff(next);
            report.adjacent = report.adjacent.max(forward).max(backward);
        }
        for other in g.iter().skip(i + 2) {
            report.far = report.far.max(t.commutator(other).max_abs());
        }
    }
    Ok(report)
}

/// A representation of the braid group B_N.
#[derive(Debug, Clone, PartialEq)]
pub struct BraidRep {
    generators: Vec<ComplexMatrix>,
    alpha: Option<c64>,
}

impl BraidRep {
    pub fn new(generators: Vec<ComplexMatrix>) -> Result<Self> {
        check_generators(&generators)?;
        Ok(Self { generators, alpha: None })
    }

    pub fn lifted(local: &ComplexMatrix, site_dim: usize, strands: usize) -> Self {
        let generators = (0..strands - 1)
            .map(|i| lift_two_site(local, site_dim, i, strands))
            .collect();
        Self { generators, alpha: None }
    }

    pub fn generators(&self) -> &[ComplexMatrix] {
        &self.generators
    }

    /// The α this representation was derived from, if any.
    pub fn alpha(&self) -> Option<c64> {
        self.alpha
    }
}

/// `Bᵢ = phase · (α·I + α⁻¹·Tᵢ)`; requires `|α| = 1` and `−α²−α⁻² = d`.
pub fn braid_from_tl(alpha: c64, rep: &TlRep, overall_phase: c64, tol: f64) -> Result<BraidRep> {
    if (alpha.norm() - 1.0).abs() > tol {
        return Err(Error::NonUnitAlpha(alpha.norm()));
    }
    let d = loop_value(alpha);
    if (d - re(rep.d)).norm() > tol {
        return Err(Error::AlphaMismatch { computed: d.re, expected: rep.d });
    }
    let n = rep.dim();
    let identity = ComplexMatrix::identity(n).scale(alpha);
    let generators = rep
        .generators
        .iter()
        .map(|t| (&identity + &t.scale(alpha.inv())).scale(overall_phase))
        .collect();
    Ok(BraidRep { generators, alpha: Some(alpha) })
}

/// Max residual of each braid relation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BraidReport {
    /// `‖BᵢBᵢ₊₁Bᵢ − Bᵢ₊₁BᵢBᵢ₊₁‖`
    pub braid: f64,
    /// `‖BᵢBⱼ − BⱼBᵢ‖`, |i−j| > 1
    pub far: f64,
    /// `min |det Bᵢ|`; zero means a generator is singular.
    pub min_abs_det: f64,
}

impl BraidReport {
    pub fn max(&self) -> f64 {
        self.braid.max(self.far)
    }

    pub fn passes(&self, tol: f64) -> bool {
        self.max() <= tol && self.min_abs_det > tol
    }
}

pub fn check_braid_relations(rep: &BraidRep) -> Result<BraidReport> {
    check_generators(&rep.generators)?;
    let g = &rep.generators;
    let mut braid: f64 = 0.0;
    let mut far: f64 = 0.0;
    let mut min_abs_det = f64::INFINITY;
    for (i, b) in g.iter().enumerate() {
        min_abs_det = min_abs_det.min(b.determinant()?.norm());
        if let Some(next) = g.get(i + 1) {
            let lhs = ComplexMatrix::product([b, next, b]);
            let rhs = ComplexMatrix::product([next, b, next]);
            braid = braid.max(lhs.max_abs_diff(&rhs));
        }
        for other in g.iter().skip(i + 2) {
            far = far.max(b.commutator(other).max_abs());
        }
    }
    Ok(BraidReport { braid, far, min_abs_det })
}
