// Copyright 2026 The ybe-l1 Contributors
// SPDX-License-Identifier: Apache-2.0

//! `ybe state`: Ψ = S̆₁₂₃|000⟩ and its entanglement.

use ybe_core::entanglement::EntanglementReport;
use ybe_core::smatrix::{build_s123_closed, build_s123_product, thetas_to_params, SParams, ThetaTriple};
use ybe_core::StateVector;

use crate::args::StateArgs;
use crate::error::CliError;
use crate::output::{emit, num};

pub fn run(args: &StateArgs) -> Result<(), CliError> {
    let zero = StateVector::basis(3, 0);
    let (params, psi, thetas) = match (args.thetas, args.eta, args.beta) {
        (Some([t1, t2, t3]), ..) => {
            let t = ThetaTriple::checked(t1, t2, t3, args.constraint_tol)?;
            let p = thetas_to_params(&t, args.constraint_tol)?;
            (p, build_s123_product(&t, args.constraint_tol)?.apply(&zero), Some(t))
        }
        (None, Some(eta), Some(beta)) => {
            let p = SParams::new(eta, beta);
            (p, build_s123_closed(&p).apply(&zero), None)
        }
        _ => return Err(CliError::Usage("give --eta and --beta, or --thetas".into())),
    };
    let report = EntanglementReport::of(&psi, args.class_tol)?;

    let mut out = String::new();
    if let Some(t) = thetas {
        out.push_str(&format!("thetas       {} {} {}\n", num(t.theta1), num(t.theta2), num(t.theta3)));
        out.push_str(&format!("constraint   {}\n", num(t.constraint_residual())));
    }
    out.push_str(&format!("eta          {}\n", num(params.eta)));
    out.push_str(&format!("beta         {}\n", num(params.beta)));
    out.push_str("amplitudes   basis re im abs\n");
    for (k, a) in psi.amplitudes().iter().enumerate() {
        out.push_str(&format!("  |{k:03b}>      {} {} {}\n", num(a.re), num(a.im), num(a.norm())));
    }
    out.push_str(&format!("l1           {}\n", num(report.l1)));
    let cuts: Vec<String> = report.vn_entropies.iter().map(|&s| num(s)).collect();
    out.push_str(&format!("entropy      {}\n", cuts.join(" ")));
    out.push_str(&format!("tangle       {}\n", num(report.three_tangle)));
    out.push_str(&format!("class        {}\n", report.slocc_class));
    emit(None, &out)
}
