// Copyright 2026 The ybe-l1 Contributors
// SPDX-License-Identifier: Apache-2.0

//! `ybe extrema`: critical points with their SLOCC class.

use serde::Serialize;
use serde_json::value::RawValue;
use ybe_core::entanglement::slocc_class;
use ybe_core::landscape::{find_critical_points, AxisSpec, CriticalPoint, Domain, SearchOptions};
use ybe_core::smatrix::{psi_from_params, SParams};

use crate::args::{default_beta, default_eta, default_theta, ExtremaArgs, Format};
use crate::error::CliError;
use crate::output::{emit, json_num, json_nums, num, to_json, Axis, Csv, Meta};

/// Default samples per axis for the (η, β) plane. Odd, so β = 0 and
/// η = π are grid points and the extrema on them are not split into ties.
const PLANE_SAMPLES: usize = 401;

#[derive(Serialize)]
struct Point {
    coords: Vec<Box<RawValue>>,
    value: Box<RawValue>,
    kind: String,
    kinks: Vec<bool>,
    max_axis: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    class: Option<String>,
}

#[derive(Serialize)]
struct Document {
    #[serde(rename = "fn")]
    function: &'static str,
    axes: Vec<Axis>,
    points: Vec<Point>,
    meta: Meta,
}

const AXIS_NAMES: [&str; 2] = ["eta", "beta"];

pub fn run(args: &ExtremaArgs) -> Result<(), CliError> {
    let f = args.function;
    let domain = if f.arity() == 1 {
        if args.eta.is_some() || args.beta.is_some() {
            return Err(CliError::Usage(format!("{f} takes one angle; use --theta start:stop:n")));
        }
        Domain::Line(args.theta.unwrap_or_else(default_theta))
    } else {
        if args.theta.is_some() {
            return Err(CliError::Usage(format!("{f} is a function of (eta, beta); use --eta and --beta")));
        }
        let with_n = |a: AxisSpec| AxisSpec { n: PLANE_SAMPLES, ..a };
        Domain::Plane {
            eta: args.eta.unwrap_or_else(|| with_n(default_eta())),
            beta: args.beta.unwrap_or_else(|| with_n(default_beta())),
        }
    };
    let points = find_critical_points(f, &domain, &SearchOptions::default())?;
    let classes = points
        .iter()
        .map(|c| match domain {
            Domain::Plane { .. } => {
                slocc_class(&psi_from_params(&SParams::new(c.coords[0], c.coords[1])), args.class_tol).map(|k| Some(k.to_string()))
            }
            Domain::Line(_) => Ok(None),
        })
        .collect::<ybe_core::Result<Vec<_>>>()?;

    let text = match args.output.format() {
        Format::Csv => csv(&domain, &points, &classes),
        Format::Json => {
            let axes = match domain {
                Domain::Plane { eta, beta } => {
                    vec![Axis::new("eta", eta.start, eta.stop, eta.n), Axis::new("beta", beta.start, beta.stop, beta.n)]
                }
                Domain::Line(t) => vec![Axis::new("theta", t.start, t.stop, t.n)],
            };
            let points = points
                .iter()
                .zip(classes)
                .map(|(c, class)| Point {
                    coords: json_nums(&c.coords),
                    value: json_num(c.value),
                    kind: c.kind.to_string(),
                    kinks: c.kinks.clone(),
                    max_axis: c.max_axis.map(|a| AXIS_NAMES[a]),
                    class,
                })
                .collect();
            to_json(&Document { function: f.tag(), axes, points, meta: Meta::new(None, Some(args.class_tol)) })
        }
    };
    emit(args.output.out.as_deref(), &text)
}

fn csv(domain: &Domain, points: &[CriticalPoint], classes: &[Option<String>]) -> String {
    match domain {
        Domain::Plane { .. } => {
            let mut csv = Csv::new(&["eta", "beta", "value", "kind", "max_axis", "kink_eta", "kink_beta", "class"]);
            for (c, class) in points.iter().zip(classes) {
                csv.row(&[
                    num(c.coords[0]),
                    num(c.coords[1]),
                    num(c.value),
                    c.kind.to_string(),
                    c.max_axis.map_or("", |a| AXIS_NAMES[a]).to_string(),
                    c.kinks[0].to_string(),
                    c.kinks[1].to_string(),
                    class.clone().unwrap_or_default(),
                ]);
            }
            csv.finish()
        }
        Domain::Line(_) => {
            let mut csv = Csv::new(&["theta", "value", "kind", "kink"]);
            for c in points {
                csv.row(&[num(c.coords[0]), num(c.value), c.kind.to_string(), c.kinks[0].to_string()]);
            }
            csv.finish()
        }
    }
}
