// Copyright 2026 The ybe-l1 Contributors
// SPDX-License-Identifier: Apache-2.0

pub mod extrema;
pub mod landscape;
pub mod reduce;
pub mod state;
pub mod verify;
