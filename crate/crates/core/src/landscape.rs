// Copyright 2026 The ybe-l1 Contributors
// SPDX-License-Identifier: Apache-2.0

//! Scalar landscapes over (η, β) or a single angle, and a kink-aware
//! critical-point search.
//!
//! The search never differentiates. A coarse grid is scanned for strict
//! discrete extrema and axis saddles, each candidate is refined by
//! alternating golden-section searches along the axes, and the refined
//! point is classified by comparing it with its eight (or two) probe
//! neighbours. This is what lets the V-shaped |cos η| ridge through the
//! W point register as a saddle.

use std::fmt;
use std::str::FromStr;

use crate::entanglement::{l1_norm_s3, l1_norm_sprime, l1_norm_wigner, vn_entropy, vn_entropy_sprime, xi_state};
use crate::exec::Execution;
use crate::smatrix::SParams;
use crate::yang_baxter::wigner_d_half;
use crate::{Error, Result};

/// Scalar functions that can be sampled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LandscapeFn {
    /// ℓ1-norm of S̆₁₂₃ over (η, β).
    L1S3,
    /// ℓ1-norm of S′ over (η, β).
    L1Sprime,
    /// Entropy of S′ over (η, β).
    VnSprime,
    /// ℓ1-norm of D^{1/2}(θ, 0).
    L1Wigner,
    /// Entanglement entropy of |ξ(θ)⟩.
    VnXi,
}

impl LandscapeFn {
    pub const ALL: [LandscapeFn; 5] =
        [LandscapeFn::L1S3, LandscapeFn::L1Sprime, LandscapeFn::VnSprime, LandscapeFn::L1Wigner, LandscapeFn::VnXi];

    pub fn tag(self) -> &'static str {
        match self {
            LandscapeFn::L1S3 => "l1_S3",
            LandscapeFn::L1Sprime => "l1_Sprime",
            LandscapeFn::VnSprime => "vn_Sprime",
            LandscapeFn::L1Wigner => "l1_wigner",
            LandscapeFn::VnXi => "vn_xi",
        }
    }

    /// Number of arguments: 2 for (η, β) functions, 1 for θ functions.
    pub fn arity(self) -> usize {
        match self {
            LandscapeFn::L1Wigner | LandscapeFn::VnXi => 1,
            _ => 2,
        }
    }

    /// Value at (η, β) for two-argument functions.
    pub fn eval2(self, eta: f64, beta: f64) -> Result<f64> {
        let p = SParams::new(eta, beta);
        match self {
            LandscapeFn::L1S3 => Ok(l1_norm_s3(&p)),
            LandscapeFn::L1Sprime => Ok(l1_norm_sprime(&p)),
            LandscapeFn::VnSprime => Ok(vn_entropy_sprime(&p)),
            _ => Err(self.arity_error(2)),
        }
    }

    /// Value at θ for one-argument functions.
    pub fn eval1(self, theta: f64) -> Result<f64> {
        match self {
            LandscapeFn::L1Wigner => l1_norm_wigner(&wigner_d_half(theta, 0.0), 1),
            LandscapeFn::VnXi => vn_entropy(&xi_state(theta), &[0]),
            _ => Err(self.arity_error(1)),
        }
    }

    fn arity_error(self, wanted: usize) -> Error {
        Error::DimensionMismatch(format!("{} takes {} argument(s), not {wanted}", self.tag(), self.arity()))
    }
}

impl fmt::Display for LandscapeFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for LandscapeFn {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|f| f.tag() == s)
            .ok_or_else(|| Error::InvalidRange(format!("unknown function tag {s:?}")))
    }
}

/// Inclusive, evenly spaced axis `start, …, stop` with `n` samples.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisSpec {
    pub start: f64,
    pub stop: f64,
    pub n: usize,
}

impl AxisSpec {
    pub fn new(start: f64, stop: f64, n: usize) -> Result<Self> {
        let spec = Self { start, stop, n };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if !self.start.is_finite() || !self.stop.is_finite() {
            return Err(Error::InvalidRange(format!("non-finite bounds {}:{}", self.start, self.stop)));
        }
        if self.n == 0 {
            return Err(Error::InvalidRange("axis with zero samples".into()));
        }
        if self.n > 1 && self.stop <= self.start {
            return Err(Error::InvalidRange(format!("empty interval {}:{}", self.start, self.stop)));
        }
        Ok(())
    }

    pub fn step(&self) -> f64 {
        if self.n < 2 {
            0.0
        } else {
            (self.stop - self.start) / (self.n - 1) as f64
        }
    }

    pub fn point(&self, i: usize) -> f64 {
        if i + 1 == self.n {
            self.stop
        } else {
            self.start + i as f64 * self.step()
        }
    }

    pub fn points(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.point(i)).collect()
    }
}

/// Values of a two-argument function on an η × β grid, η-major.
#[derive(Debug, Clone, PartialEq)]
pub struct LandscapeGrid {
    pub function: LandscapeFn,
    pub eta: AxisSpec,
    pub beta: AxisSpec,
    pub values: Vec<f64>,
}

impl LandscapeGrid {
    pub fn value(&self, i_eta: usize, i_beta: usize) -> f64 {
        self.values[i_eta * self.beta.n + i_beta]
    }

    /// `(i_eta, i_beta, value)` of the largest sample (first on ties).
    pub fn argmax(&self) -> (usize, usize, f64) {
        let (k, v) = self
            .values
            .iter()
            .enumerate()
            .fold((0, f64::NEG_INFINITY), |best, (k, &v)| if v > best.1 { (k, v) } else { best });
        (k / self.beta.n, k % self.beta.n, v)
    }
}

pub fn sample_surface(function: LandscapeFn, eta: AxisSpec, beta: AxisSpec) -> Result<LandscapeGrid> {
    sample_surface_with(Execution::default(), function, eta, beta)
}

pub fn sample_surface_with(exec: Execution, function: LandscapeFn, eta: AxisSpec, beta: AxisSpec) -> Result<LandscapeGrid> {
    if function.arity() != 2 {
        return Err(function.arity_error(2));
    }
    for axis in [&eta, &beta] {
        axis.validate()?;
        if axis.n < 3 {
            return Err(Error::InvalidRange(format!("surface axes need at least 3 samples, got {}", axis.n)));
        }
    }
    let values = exec.map(eta.n * beta.n, |k| {
        function.eval2(eta.point(k / beta.n), beta.point(k % beta.n)).expect("arity checked")
    });
    if let Some(bad) = values.iter().find(|v| !v.is_finite()) {
        return Err(Error::InvalidRange(format!("non-finite sample {bad}")));
    }
    Ok(LandscapeGrid { function, eta, beta, values })
}

/// Which coordinate a section holds fixed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FixedAxis {
    Eta(f64),
    Beta(f64),
}

impl FixedAxis {
    /// Name of the axis that varies along the section.
    pub fn free_axis(&self) -> &'static str {
        match self {
            FixedAxis::Eta(_) => "beta",
            FixedAxis::Beta(_) => "eta",
        }
    }
}

impl FromStr for FixedAxis {
    type Err = Error;

    /// Parses `eta=<value>` or `beta=<value>`.
    fn from_str(s: &str) -> Result<Self> {
        let (name, value) = s
            .split_once('=')
            .ok_or_else(|| Error::InvalidRange(format!("section must look like beta=0.6, got {s:?}")))?;
        let value: f64 = value
            .trim()
            .parse()
            .map_err(|_| Error::InvalidRange(format!("bad section value {value:?}")))?;
        match name.trim() {
            "eta" => Ok(FixedAxis::Eta(value)),
            "beta" => Ok(FixedAxis::Beta(value)),
            other => Err(Error::InvalidRange(format!("unknown axis {other:?}"))),
        }
    }
}

/// One-dimensional samples: a section of a surface, or a curve of a
/// one-argument function (`fixed = None`).
#[derive(Debug, Clone, PartialEq)]
pub struct Section {
    pub function: LandscapeFn,
    pub fixed: Option<FixedAxis>,
    pub axis: AxisSpec,
    pub values: Vec<f64>,
}

impl Section {
    pub fn points(&self) -> Vec<f64> {
        self.axis.points()
    }
}

/// Evaluates a two-argument function along a slice.
pub fn section(function: LandscapeFn, fixed: FixedAxis, range: AxisSpec) -> Result<Section> {
    if function.arity() != 2 {
        return Err(function.arity_error(2));
    }
    range.validate()?;
    let values = range
        .points()
        .into_iter()
        .map(|x| match fixed {
            FixedAxis::Eta(eta) => function.eval2(eta, x),
            FixedAxis::Beta(beta) => function.eval2(x, beta),
        })
        .collect::<Result<_>>()?;
    Ok(Section { function, fixed: Some(fixed), axis: range, values })
}

/// Samples a one-argument function.
pub fn curve(function: LandscapeFn, range: AxisSpec) -> Result<Section> {
    range.validate()?;
    let values = range.points().into_iter().map(|x| function.eval1(x)).collect::<Result<_>>()?;
    Ok(Section { function, fixed: None, axis: range, values })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CriticalKind {
    LocalMax,
    LocalMin,
    Saddle,
}

impl fmt::Display for CriticalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CriticalKind::LocalMax => "local-max",
            CriticalKind::LocalMin => "local-min",
            CriticalKind::Saddle => "saddle",
        })
    }
}

/// A refined critical point. `coords` is (η, β) or (θ).
#[derive(Debug, Clone, PartialEq)]
pub struct CriticalPoint {
    pub coords: Vec<f64>,
    pub value: f64,
    pub kind: CriticalKind,
    /// Per axis: is the function V-shaped (non-differentiable) there.
    pub kinks: Vec<bool>,
    /// For saddles, the axis along which the point is a maximum.
    pub max_axis: Option<usize>,
}

impl CriticalPoint {
    pub fn smooth(&self) -> bool {
        !self.kinks.iter().any(|&k| k)
    }

    pub fn distance_to(&self, other: &[f64]) -> f64 {
        self.coords.iter().zip(other).map(|(a, b)| (a - b).powi(2)).sum::<f64>().sqrt()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchOptions {
    /// Golden-section tolerance for refined coordinates.
    pub refine_tol: f64,
    /// Neighbour offset used to classify a refined point.
    pub probe: f64,
    /// Differences below this count as ties.
    pub plateau_tol: f64,
    /// Refined points closer than this (and of equal kind) are merged.
    pub dedup_radius: f64,
    pub execution: Execution,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self { refine_tol: 1e-10, probe: 1e-6, plateau_tol: 1e-12, dedup_radius: 1e-6, execution: Execution::default() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Goal {
    Max,
    Min,
}

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Golden-section optimum of a unimodal function on [lo, hi].
fn golden(mut lo: f64, mut hi: f64, tol: f64, goal: Goal, f: impl Fn(f64) -> f64) -> f64 {
    let better = |a: f64, b: f64| match goal {
        Goal::Max => a > b,
        Goal::Min => a < b,
    };
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    while hi - lo > tol {
        if better(f1, f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        }
    }
    let mid = 0.5 * (lo + hi);
    let mut best = mid;
    for x in [x1, x2] {
        if better(f(x), f(best)) {
            best = x;
        }
    }
    best
}

/// Two-scale second-difference test for a V-shaped kink at `x`.
fn is_kink(f: impl Fn(f64) -> f64, x: f64) -> bool {
    const H: f64 = 1e-4;
    let curvature = |h: f64| (f(x + h) + f(x - h) - 2.0 * f(x)).abs() / h;
    let coarse = curvature(H);
    coarse > 1e-6 && curvature(H / 10.0) >= 0.5 * coarse
}

fn compare(center: f64, neighbour: f64, tol: f64) -> std::cmp::Ordering {
    if center - neighbour > tol {
        std::cmp::Ordering::Greater
    } else if neighbour - center > tol {
        std::cmp::Ordering::Less
    } else {
        std::cmp::Ordering::Equal
    }
}

fn goal_for(kind: CriticalKind, axis: usize, max_axis: Option<usize>) -> Goal {
    match kind {
        CriticalKind::LocalMax => Goal::Max,
        CriticalKind::LocalMin => Goal::Min,
        CriticalKind::Saddle if max_axis == Some(axis) => Goal::Max,
        CriticalKind::Saddle => Goal::Min,
    }
}

/// Discrete label of grid point `center` against axis neighbour pairs
/// and extra (diagonal) neighbours.
fn discrete_kind(center: f64, axis_pairs: &[[f64; 2]], diagonals: &[f64], tol: f64) -> Option<(CriticalKind, Option<usize>)> {
    use std::cmp::Ordering::*;
    let per_axis: Vec<Option<std::cmp::Ordering>> = axis_pairs
        .iter()
        .map(|pair| {
            let (a, b) = (compare(center, pair[0], tol), compare(center, pair[1], tol));
            (a == b && a != Equal).then_some(a)
        })
        .collect();
    if per_axis.iter().any(Option::is_none) {
        return None;
    }
    let diag_all = |o| diagonals.iter().all(|&d| compare(center, d, tol) == o);
    if per_axis.iter().all(|&o| o == Some(Greater)) && diag_all(Greater) {
        return Some((CriticalKind::LocalMax, None));
    }
    if per_axis.iter().all(|&o| o == Some(Less)) && diag_all(Less) {
        return Some((CriticalKind::LocalMin, None));
    }
    if axis_pairs.len() == 2 && per_axis[0] != per_axis[1] {
        let max_axis = if per_axis[0] == Some(Greater) { 0 } else { 1 };
        return Some((CriticalKind::Saddle, Some(max_axis)));
    }
    None
}

fn dedup(mut points: Vec<CriticalPoint>, radius: f64) -> Vec<CriticalPoint> {
    let mut kept: Vec<CriticalPoint> = Vec::new();
    points.sort_by(|a, b| {
        a.coords.iter().zip(&b.coords).map(|(x, y)| x.total_cmp(y)).find(|o| o.is_ne()).unwrap_or(std::cmp::Ordering::Equal)
    });
    for p in points {
        if !kept.iter().any(|q| q.kind == p.kind && q.distance_to(&p.coords) < radius) {
            kept.push(p);
        }
    }
    kept
}

/// Critical points of `f(x, y)` over a grid. Boundary samples are never
/// candidates; refinement stays inside the axis ranges.
pub fn critical_points_2d<F>(f: F, x_axis: AxisSpec, y_axis: AxisSpec, opts: &SearchOptions) -> Result<Vec<CriticalPoint>>
where
    F: Fn(f64, f64) -> f64 + Sync,
{
    for axis in [&x_axis, &y_axis] {
        axis.validate().map_err(|_| Error::EmptyDomain)?;
        if axis.n < 3 {
            return Err(Error::EmptyDomain);
        }
    }
    let (nx, ny) = (x_axis.n, y_axis.n);
    let grid = opts.execution.map(nx * ny, |k| f(x_axis.point(k / ny), y_axis.point(k % ny)));
    let at = |i: usize, j: usize| grid[i * ny + j];

    let mut candidates = Vec::new();
    for i in 1..nx - 1 {
        for j in 1..ny - 1 {
            let c = at(i, j);
            let pairs = [[at(i - 1, j), at(i + 1, j)], [at(i, j - 1), at(i, j + 1)]];
            let diag = [at(i - 1, j - 1), at(i - 1, j + 1), at(i + 1, j - 1), at(i + 1, j + 1)];
            if let Some((kind, max_axis)) = discrete_kind(c, &pairs, &diag, opts.plateau_tol) {
                candidates.push((i, j, kind, max_axis));
            }
        }
    }

    let (hx, hy) = (x_axis.step(), y_axis.step());
    let refined = opts.execution.map_slice(&candidates, |&(i, j, kind, max_axis)| {
        let (mut x, mut y) = (x_axis.point(i), y_axis.point(j));
        for _ in 0..200 {
            let gx = goal_for(kind, 0, max_axis);
            let nxv = golden((x - hx).max(x_axis.start), (x + hx).min(x_axis.stop), opts.refine_tol, gx, |t| f(t, y));
            let gy = goal_for(kind, 1, max_axis);
            let nyv = golden((y - hy).max(y_axis.start), (y + hy).min(y_axis.stop), opts.refine_tol, gy, |t| f(nxv, t));
            let moved = (nxv - x).abs().max((nyv - y).abs());
            x = nxv;
            y = nyv;
            if moved < opts.refine_tol {
                break;
            }
        }
        let p = opts.probe;
        let c = f(x, y);
        let pairs = [[f(x - p, y), f(x + p, y)], [f(x, y - p), f(x, y + p)]];
        let diag = [f(x - p, y - p), f(x - p, y + p), f(x + p, y - p), f(x + p, y + p)];
        let diag: &[f64] = if kind == CriticalKind::Saddle { &[] } else { &diag };
        discrete_kind(c, &pairs, diag, 0.0).filter(|&(k, m)| k == kind && m == max_axis).map(|_| CriticalPoint {
            coords: vec![x, y],
            value: c,
            kind,
            kinks: vec![is_kink(|t| f(t, y), x), is_kink(|t| f(x, t), y)],
            max_axis,
        })
    });
    Ok(dedup(refined.into_iter().flatten().collect(), opts.dedup_radius))
}

/// Critical points of `f(x)` over an axis.
pub fn critical_points_1d<F>(f: F, axis: AxisSpec, opts: &SearchOptions) -> Result<Vec<CriticalPoint>>
where
    F: Fn(f64) -> f64 + Sync,
{
    axis.validate().map_err(|_| Error::EmptyDomain)?;
    if axis.n < 3 {
        return Err(Error::EmptyDomain);
    }
    let samples = opts.execution.map(axis.n, |i| f(axis.point(i)));
    let candidates: Vec<(usize, CriticalKind)> = (1..axis.n - 1)
        .filter_map(|i| {
            discrete_kind(samples[i], &[[samples[i - 1], samples[i + 1]]], &[], opts.plateau_tol).map(|(k, _)| (i, k))
        })
        .collect();
    let h = axis.step();
    let refined = opts.execution.map_slice(&candidates, |&(i, kind)| {
        let x0 = axis.point(i);
        let goal = goal_for(kind, 0, None);
        let x = golden((x0 - h).max(axis.start), (x0 + h).min(axis.stop), opts.refine_tol, goal, &f);
        let c = f(x);
        let p = opts.probe;
        discrete_kind(c, &[[f(x - p), f(x + p)]], &[], 0.0).filter(|&(k, _)| k == kind).map(|_| CriticalPoint {
            coords: vec![x],
            value: c,
            kind,
            kinks: vec![is_kink(&f, x)],
            max_axis: None,
        })
    });
    Ok(dedup(refined.into_iter().flatten().collect(), opts.dedup_radius))
}

/// Search domain for [`find_critical_points`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Domain {
    Plane { eta: AxisSpec, beta: AxisSpec },
    Line(AxisSpec),
}

impl Domain {
    /// η ∈ [0, 2π], β ∈ [−π/2, π/2] at `n` samples per axis.
    pub fn default_plane(n: usize) -> Self {
        use std::f64::consts::{FRAC_PI_2, TAU};
        Domain::Plane { eta: AxisSpec { start: 0.0, stop: TAU, n }, beta: AxisSpec { start: -FRAC_PI_2, stop: FRAC_PI_2, n } }
    }
}

/// Critical points of a tagged function. The domain's dimension must
/// match the function's arity.
pub fn find_critical_points(function: LandscapeFn, domain: &Domain, opts: &SearchOptions) -> Result<Vec<CriticalPoint>> {
    match (*domain, function.arity()) {
        (Domain::Plane { eta, beta }, 2) => {
            critical_points_2d(|a, b| function.eval2(a, b).expect("arity checked"), eta, beta, opts)
        }
        (Domain::Line(axis), 1) => critical_points_1d(|t| function.eval1(t).expect("arity checked"), axis, opts),
        (_, arity) => Err(function.arity_error(if arity == 2 { 1 } else { 2 })),
    }
}
