// Copyright 2026 The ybe-l1 Contributors
// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("generator does not square to -I (max deviation {residual:e})")]
    NotInvolutive { residual: f64 },

    #[error("normalization 1/sqrt|1-mu^2| is singular at mu = {mu}")]
    SingularNormalization { mu: f64 },

    #[error("no real angle solves the constraint: cos(phi) = {ratio} lies outside [-1, 1]")]
    NoSolution { ratio: f64 },

    #[error("tangent undefined or zero at angle {angle}")]
    TangentPole { angle: f64 },

    #[error("three-body constraint violated: residual {residual:e} exceeds {tol:e}")]
    ConstraintViolated { residual: f64, tol: f64 },

    #[error("operator leaks out of the two-dimensional span: leakage {leakage:e} exceeds {tol:e}")]
    Leakage { leakage: f64, tol: f64 },

    #[error("alpha is inconsistent with the loop value: -alpha^2-alpha^-2 = {computed}, rep has d = {expected}")]
    AlphaMismatch { computed: f64, expected: f64 },

    #[error("alpha must have unit modulus, got |alpha| = {0}")]
    NonUnitAlpha(f64),

    #[error("only spin j = 1/2 is supported (got 2j = {0})")]
    UnsupportedSpin(u32),

    #[error("invalid bipartition: {0}")]
    InvalidCut(String),

    #[error("invalid range: {0}")]
    InvalidRange(String),

    #[error("empty search domain")]
    EmptyDomain,
}
