// Copyright 2026 The ybe-l1 Contributors
// SPDX-License-Identifier: Apache-2.0

//! `ybe reduce`: S̆₁₂₃ ⊗ I on the type-II four-strand basis versus the
//! closed 2×2 form.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use ybe_core::smatrix::ThetaTriple;
use ybe_core::topobasis::{verify_s_reduction, ReductionCheck};
use ybe_core::ComplexMatrix;

use crate::args::ReduceArgs;
use crate::error::CliError;
use crate::output::{emit, num};

fn matrix(label: &str, m: &ComplexMatrix) -> String {
    let mut s = format!("{label}\n");
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(|z| format!("{} {}", num(z.re), num(z.im))).collect();
        s.push_str(&format!("  {}\n", row.join("   ")));
    }
    s
}

pub fn run(args: &ReduceArgs) -> Result<(), CliError> {
    let mut out = String::new();
    let worst = if let Some([t1, t2, t3]) = args.thetas {
        let t = ThetaTriple::checked(t1, t2, t3, args.constraint_tol)?;
        let check = verify_s_reduction(&t, args.constraint_tol)?;
        out.push_str(&format!("eta        {}\n", num(check.params.eta)));
        out.push_str(&format!("beta       {}\n", num(check.params.beta)));
        out.push_str(&matrix("reduced (re im per entry)", &check.reduced));
        out.push_str(&matrix("conj S'(eta, beta)", &check.sprime.conj()));
        out.push_str(&format!("residual   {}\n", num(check.residual)));
        out.push_str(&format!("literal    {}\n", num(check.literal_residual)));
        check.residual
    } else {
        let n = args.random.expect("clap requires --thetas or --random");
        let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
        let triples: Vec<ThetaTriple> =
            (0..n).map(|_| ThetaTriple::constrained(rng.random_range(-PI..PI), rng.random_range(-PI..PI))).collect();
        let checks: Vec<ReductionCheck> =
            triples.par_iter().map(|t| verify_s_reduction(t, args.constraint_tol)).collect::<ybe_core::Result<_>>()?;
        out.push_str("theta1 theta2 theta3 residual\n");
        for (t, c) in triples.iter().zip(&checks) {
            out.push_str(&format!("{} {} {} {}\n", num(t.theta1), num(t.theta2), num(t.theta3), num(c.residual)));
        }
        let worst = checks.iter().map(|c| c.residual).fold(0.0, f64::max);
        out.push_str(&format!("max residual {} over {n} triples\n", num(worst)));
        worst
    };
    emit(None, &out)?;
    // NaN residuals fail too.
    if worst.is_nan() || worst > args.tol {
        return Err(CliError::Tolerance(format!("reduction residual {worst:e} exceeds tol {:e}", args.tol)));
    }
    Ok(())
}
