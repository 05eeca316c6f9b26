// Copyright 2026 The ybe-l1 Contributors
// SPDX-License-Identifier: Apache-2.0

use std::path::PathBuf;
use std::process::ExitCode;

use thiserror::Error;
use ybe_core::Error as CoreError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    /// Residuals above tolerance. The report has already been printed.
    #[error("{0}")]
    Tolerance(String),

    #[error(transparent)]
    Core(#[from] CoreError),

    #[error("cannot write {path}: {source}")]
    Output { path: PathBuf, source: std::io::Error },

    #[error("cannot write to stdout: {0}")]
    Stdout(std::io::Error),
}

impl CliError {
    pub fn stdout(e: std::io::Error) -> Self {
        CliError::Stdout(e)
    }

    /// 0 success, 1 tolerance or numerical failure, 2 usage or configuration.
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            CliError::Tolerance(_) | CliError::Stdout(_) => 1,
            CliError::Core(e) if !is_input_error(e) => 1,
            _ => 2,
        })
    }
}

/// Core errors caused by the parameters the user supplied.
fn is_input_error(e: &CoreError) -> bool {
    matches!(
        e,
        CoreError::ConstraintViolated { .. }
            | CoreError::EmptyDomain
            | CoreError::InvalidRange(_)
            | CoreError::NoSolution { .. }
            | CoreError::TangentPole { .. }
            | CoreError::SingularNormalization { .. }
    )
}
