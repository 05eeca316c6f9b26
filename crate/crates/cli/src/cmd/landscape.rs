// Copyright 2026 The ybe-l1 Contributors
// SPDX-License-Identifier: Apache-2.0

//! `ybe landscape`: grid, section and curve samples.

use serde::Serialize;
use serde_json::value::RawValue;
use ybe_core::landscape::{curve, sample_surface, section, AxisSpec, FixedAxis, LandscapeFn};

use crate::args::{default_beta, default_eta, default_theta, Format, LandscapeArgs};
use crate::error::CliError;
use crate::output::{emit, json_nums, num, to_json, Axis, Csv, Meta};

#[derive(Serialize)]
struct Document {
    #[serde(rename = "fn")]
    function: &'static str,
    axes: Vec<Axis>,
    values: Vec<Box<RawValue>>,
    meta: Meta,
}

/// Column-major description of the samples: named coordinate columns
/// plus the value column.
struct Samples {
    function: LandscapeFn,
    axes: Vec<(&'static str, AxisSpec)>,
    values: Vec<f64>,
}

impl Samples {
    fn csv(&self) -> String {
        let mut header: Vec<&str> = self.axes.iter().map(|(n, _)| *n).collect();
        header.push("value");
        let mut csv = Csv::new(&header);
        let points: Vec<Vec<f64>> = self.axes.iter().map(|(_, a)| a.points()).collect();
        // The last axis varies fastest.
        let mut idx = vec![0usize; self.axes.len()];
        for &v in &self.values {
            let mut row: Vec<String> = idx.iter().zip(&points).map(|(&i, p)| num(p[i])).collect();
            row.push(num(v));
            csv.row(&row);
            for k in (0..idx.len()).rev() {
                idx[k] += 1;
                if idx[k] < points[k].len() {
                    break;
                }
                idx[k] = 0;
            }
        }
        csv.finish()
    }

    fn json(&self) -> String {
        let axes = self.axes.iter().map(|(name, a)| Axis::new(name, a.start, a.stop, a.n)).collect();
        to_json(&Document { function: self.function.tag(), axes, values: json_nums(&self.values), meta: Meta::new(None, None) })
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn collect(args: &LandscapeArgs) -> Result<Samples, CliError> {
    let f = args.function;
    if f.arity() == 1 {
        if args.eta.is_some() || args.beta.is_some() || args.section.is_some() {
            return Err(usage(format!("{f} takes one angle; use --theta start:stop:n")));
        }
        let c = curve(f, args.theta.unwrap_or_else(default_theta))?;
        return Ok(Samples { function: f, axes: vec![("theta", c.axis)], values: c.values });
    }
    if args.theta.is_some() {
        return Err(usage(format!("{f} is a function of (eta, beta); use --eta and --beta")));
    }
    let eta = args.eta.unwrap_or_else(default_eta);
    let beta = args.beta.unwrap_or_else(default_beta);
    match args.section {
        None => {
            let g = sample_surface(f, eta, beta)?;
            Ok(Samples { function: f, axes: vec![("eta", eta), ("beta", beta)], values: g.values })
        }
        Some(fixed) => {
            let (axes, range) = match fixed {
                FixedAxis::Beta(b) => {
                    if args.beta.is_some() {
                        return Err(usage("--beta conflicts with --section beta=..."));
                    }
                    (vec![("eta", eta), ("beta", AxisSpec { start: b, stop: b, n: 1 })], eta)
                }
                FixedAxis::Eta(e) => {
                    if args.eta.is_some() {
                        return Err(usage("--eta conflicts with --section eta=..."));
                    }
                    (vec![("eta", AxisSpec { start: e, stop: e, n: 1 }), ("beta", beta)], beta)
                }
            };
            let s = section(f, fixed, range)?;
            Ok(Samples { function: f, axes, values: s.values })
        }
    }
}

pub fn run(args: &LandscapeArgs) -> Result<(), CliError> {
    let samples = collect(args)?;
    let text = match args.output.format() {
        Format::Csv => samples.csv(),
        Format::Json => samples.json(),
    };
    emit(args.output.out.as_deref(), &text)
}
