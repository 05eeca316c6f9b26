// Copyright 2026 The ybe-l1 Contributors
// SPDX-License-Identifier: Apache-2.0

//! Command-line grammar and value parsers.

use std::f64::consts::{FRAC_PI_2, PI, TAU};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ybe_core::landscape::{AxisSpec, FixedAxis, LandscapeFn};
use ybe_core::smatrix::BETA_STAR;

/// Tolerance on the three-body angle constraint for typed-in angles.
/// Five significant digits (as in `0.3927,0.95532,1.1781`) leave a
/// residual of a few 1e-6.
pub const INPUT_CONSTRAINT_TOL: f64 = 1e-4;

#[derive(Debug, Parser)]
#[command(name = "ybe", version, about = "Yang-Baxter relations, S-matrix states and l1-norm landscapes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run relation suites and report residuals.
    Verify(VerifyArgs),
    /// Sample a landscape function on a grid, section or curve.
    Landscape(LandscapeArgs),
    /// Locate and classify critical points.
    Extrema(ExtremaArgs),
    /// Report the state S|000> and its entanglement.
    State(StateArgs),
    /// Reduce the three-body S-matrix onto the four-strand basis.
    Reduce(ReduceArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Tl,
    Braid,
    Ybe,
    Constraint,
    Smatrix,
    Reduction,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    All,
    Type1,
    Type2,
}

impl Family {
    pub fn includes_type1(self) -> bool {
        self != Family::Type2
    }

    pub fn includes_type2(self) -> bool {
        self != Family::Type1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub suite: Suite,
    #[arg(long, value_enum, default_value = "all")]
    pub family: Family,
    /// Random parameter triples per randomized relation.
    #[arg(long, default_value_t = 1000, value_parser = parse_samples)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1e-12, value_parser = parse_tol)]
    pub tol: f64,
    /// Add this to entry (0,0) of the type-I local T and B matrices.
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub perturb: f64,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Output file (written atomically); stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Defaults to json for `.json` paths and csv otherwise.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

impl Output {
    pub fn format(&self) -> Format {
        self.format.unwrap_or_else(|| match &self.out {
            Some(p) if p.extension().is_some_and(|e| e.eq_ignore_ascii_case("json")) => Format::Json,
            _ => Format::Csv,
        })
    }
}

#[derive(Debug, Args)]
pub struct LandscapeArgs {
    #[arg(long = "fn", value_parser = parse_fn)]
    pub function: LandscapeFn,
    /// η axis as start:stop:n (inclusive).
    #[arg(long, value_parser = parse_axis, allow_hyphen_values = true)]
    pub eta: Option<AxisSpec>,
    /// β axis as start:stop:n (inclusive).
    #[arg(long, value_parser = parse_axis, allow_hyphen_values = true)]
    pub beta: Option<AxisSpec>,
    /// θ axis for one-argument functions.
    #[arg(long, value_parser = parse_axis, allow_hyphen_values = true)]
    pub theta: Option<AxisSpec>,
    /// Fix one axis, e.g. beta=0.61548 or beta=beta_star.
    #[arg(long, value_parser = parse_section)]
    pub section: Option<FixedAxis>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct ExtremaArgs {
    #[arg(long = "fn", value_parser = parse_fn, default_value = "l1_S3")]
    pub function: LandscapeFn,
    #[arg(long, value_parser = parse_axis, allow_hyphen_values = true)]
    pub eta: Option<AxisSpec>,
    #[arg(long, value_parser = parse_axis, allow_hyphen_values = true)]
    pub beta: Option<AxisSpec>,
    #[arg(long, value_parser = parse_axis, allow_hyphen_values = true)]
    pub theta: Option<AxisSpec>,
    /// Tolerance for the SLOCC classification of each point.
    #[arg(long = "class-tol", default_value_t = ybe_core::entanglement::DEFAULT_CLASS_TOL, value_parser = parse_tol)]
    pub class_tol: f64,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("input").required(true).args(["eta", "thetas"])))]
pub struct StateArgs {
    #[arg(long, value_parser = parse_angle, requires = "beta", allow_hyphen_values = true)]
    pub eta: Option<f64>,
    #[arg(long, value_parser = parse_angle, requires = "eta", allow_hyphen_values = true)]
    pub beta: Option<f64>,
    /// θ₁,θ₂,θ₃ satisfying the three-body constraint.
    #[arg(long, value_parser = parse_thetas, allow_hyphen_values = true)]
    pub thetas: Option<[f64; 3]>,
    #[arg(long = "constraint-tol", default_value_t = INPUT_CONSTRAINT_TOL, value_parser = parse_tol)]
    pub constraint_tol: f64,
    /// Tolerance for the SLOCC classification.
    #[arg(long = "class-tol", default_value_t = 1e-4, value_parser = parse_tol)]
    pub class_tol: f64,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("input").required(true).args(["thetas", "random"])))]
pub struct ReduceArgs {
    #[arg(long, value_parser = parse_thetas, allow_hyphen_values = true)]
    pub thetas: Option<[f64; 3]>,
    /// Number of random constrained triples.
    #[arg(long, value_parser = parse_samples)]
    pub random: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Pass/fail threshold on the reduction residual.
    #[arg(long, default_value_t = 1e-10, value_parser = parse_tol)]
    pub tol: f64,
    #[arg(long = "constraint-tol", default_value_t = INPUT_CONSTRAINT_TOL, value_parser = parse_tol)]
    pub constraint_tol: f64,
}

pub fn default_eta() -> AxisSpec {
    AxisSpec { start: 0.0, stop: TAU, n: 200 }
}

pub fn default_beta() -> AxisSpec {
    AxisSpec { start: -FRAC_PI_2, stop: FRAC_PI_2, n: 200 }
}

pub fn default_theta() -> AxisSpec {
    AxisSpec { start: 0.0, stop: FRAC_PI_2, n: 401 }
}

/// A radian value: a decimal number, `beta_star`, or a multiple of `pi`
/// such as `pi/3`, `2pi`, `-pi/2`, `1.5*pi`.
pub fn parse_angle(s: &str) -> Result<f64, String> {
    let t = s.trim().to_ascii_lowercase();
    if let Ok(x) = t.parse::<f64>() {
        return if x.is_finite() { Ok(x) } else { Err(format!("angle must be finite, got {s:?}")) };
    }
    let (sign, body) = match t.strip_prefix('-') {
        Some(rest) => (-1.0, rest),
        None => (1.0, t.as_str()),
    };
    if body == "beta_star" {
        return Ok(sign * BETA_STAR);
    }
    let bad = || format!("cannot read {s:?} as an angle (try 1.0472, pi/3 or beta_star)");
    let (coef, rest) = body.split_once("pi").ok_or_else(bad)?;
    let coef = match coef.trim_end_matches('*') {
        "" => 1.0,
        c => c.parse::<f64>().map_err(|_| bad())?,
    };
    let div = match rest {
        "" => 1.0,
        r => r.strip_prefix('/').and_then(|d| d.parse::<f64>().ok()).filter(|d| *d != 0.0).ok_or_else(bad)?,
    };
    Ok(sign * coef * PI / div)
}

/// `start:stop:n` with n ≥ 3 and start < stop.
pub fn parse_axis(s: &str) -> Result<AxisSpec, String> {
    let parts: Vec<&str> = s.split(':').collect();
    let [start, stop, n] = parts[..] else {
        return Err(format!("axis must be start:stop:n, got {s:?}"));
    };
    let n: usize = n.trim().parse().map_err(|_| format!("bad sample count {n:?}"))?;
    if n < 3 {
        return Err(format!("axis needs at least 3 samples, got {n}"));
    }
    AxisSpec::new(parse_angle(start)?, parse_angle(stop)?, n).map_err(|e| e.to_string())
}

pub fn parse_section(s: &str) -> Result<FixedAxis, String> {
    let (name, value) = s.split_once('=').ok_or_else(|| format!("section must look like beta=0.6, got {s:?}"))?;
    let value = parse_angle(value)?;
    match name.trim() {
        "eta" => Ok(FixedAxis::Eta(value)),
        "beta" => Ok(FixedAxis::Beta(value)),
        other => Err(format!("unknown section axis {other:?} (expected eta or beta)")),
    }
}

pub fn parse_thetas(s: &str) -> Result<[f64; 3], String> {
    let v = s.split(',').map(parse_angle).collect::<Result<Vec<_>, _>>()?;
    v.try_into().map_err(|v: Vec<f64>| format!("expected three comma-separated angles, got {}", v.len()))
}

pub fn parse_fn(s: &str) -> Result<LandscapeFn, String> {
    s.parse::<LandscapeFn>().map_err(|_| {
        let tags: Vec<_> = LandscapeFn::ALL.iter().map(|f| f.tag()).collect();
        format!("unknown function {s:?}; expected one of {}", tags.join(", "))
    })
}

pub fn parse_tol(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(t) if t > 0.0 && t.is_finite() => Ok(t),
        _ => Err(format!("tolerance must be a positive number, got {s:?}")),
    }
}

fn parse_samples(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(n) if n > 0 => Ok(n),
        _ => Err(format!("sample count must be a positive integer, got {s:?}")),
    }
}
