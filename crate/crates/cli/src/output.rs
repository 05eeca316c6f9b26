// Copyright 2026 The ybe-l1 Contributors
// SPDX-License-Identifier: Apache-2.0

//! Number formatting, CSV/JSON rendering and atomic file output.

use std::io::Write;
use std::path::Path;

use serde::Serialize;
use serde_json::value::RawValue;
use tempfile::NamedTempFile;

use crate::error::CliError;

/// Seventeen significant digits, enough to round-trip any f64.
pub fn num(x: f64) -> String {
    format!("{x:.16e}")
}

/// A JSON number in the same fixed format as [`num`].
pub fn json_num(x: f64) -> Box<RawValue> {
    let text = if x.is_finite() { num(x) } else { "null".into() };
    RawValue::from_string(text).expect("formatted float is valid JSON")
}

pub fn json_nums(xs: &[f64]) -> Vec<Box<RawValue>> {
    xs.iter().map(|&x| json_num(x)).collect()
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable output");
    s.push('\n');
    s
}

/// CSV with a header row. Fields are emitted verbatim, so callers only
/// pass numbers and fixed identifiers.
pub struct Csv {
    text: String,
}

impl Csv {
    pub fn new(header: &[&str]) -> Self {
        let mut text = header.join(",");
        text.push('\n');
        Self { text }
    }

    pub fn row(&mut self, fields: &[String]) {
        self.text.push_str(&fields.join(","));
        self.text.push('\n');
    }

    pub fn finish(self) -> String {
        self.text
    }
}

#[derive(Debug, Serialize)]
pub struct Axis {
    pub name: &'static str,
    pub start: Box<RawValue>,
    pub stop: Box<RawValue>,
    pub n: usize,
}

impl Axis {
    pub fn new(name: &'static str, start: f64, stop: f64, n: usize) -> Self {
        Self { name, start: json_num(start), stop: json_num(stop), n }
    }
}

#[derive(Debug, Serialize)]
pub struct Meta {
    pub seed: Option<u64>,
    pub tol: Option<Box<RawValue>>,
    pub version: &'static str,
}

impl Meta {
    pub fn new(seed: Option<u64>, tol: Option<f64>) -> Self {
        Self { seed, tol: tol.map(json_num), version: env!("CARGO_PKG_VERSION") }
    }
}

/// Writes to stdout, or to `path` through a temporary file in the same
/// directory that is renamed into place.
pub fn emit(path: Option<&Path>, content: &str) -> Result<(), CliError> {
    let Some(path) = path else {
        let mut out = std::io::stdout().lock();
        return out.write_all(content.as_bytes()).and_then(|_| out.flush()).map_err(CliError::stdout);
    };
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let io = |e: std::io::Error| CliError::Output { path: path.to_path_buf(), source: e };
    let mut tmp = NamedTempFile::new_in(dir).map_err(io)?;
    tmp.write_all(content.as_bytes()).map_err(io)?;
    tmp.as_file().sync_all().map_err(io)?;
    tmp.persist(path).map_err(|e| io(e.error))?;
    Ok(())
}
