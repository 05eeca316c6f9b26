// Copyright 2026 The ybe-l1 Contributors
// SPDX-License-Identifier: Apache-2.0

use super::{c64, im, re, ComplexMatrix};

pub fn identity() -> ComplexMatrix {
    ComplexMatrix::identity(2)
}

pub fn x() -> ComplexMatrix {
    ComplexMatrix::from_rows(&[[re(0.0), re(1.0)], [re(1.0), re(0.0)]])
}

pub fn y() -> ComplexMatrix {
    ComplexMatrix::from_rows(&[[re(0.0), im(-1.0)], [im(1.0), re(0.0)]])
}

pub fn z() -> ComplexMatrix {
    ComplexMatrix::diag(&[re(1.0), re(-1.0)])
}

/// Two-qubit swap (the type-I braid matrix).
pub fn swap() -> ComplexMatrix {
    let mut p = ComplexMatrix::zeros(4, 4);
    for (i, j) in [(0, 0), (1, 2), (2, 1), (3, 3)] {
        p[(i, j)] = c64::new(1.0, 0.0);
    }
    p
}
