// Copyright 2026 The ybe-l1 Contributors
// SPDX-License-Identifier: Apache-2.0

//! `ybe verify`: relation suites with one residual per relation.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, FRAC_PI_6, PI};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use ybe_core::braid::{
    check_braid_relations, check_tl_relations, loop_value, type1_alpha, type1_braid, type1_reduced_braids,
    type1_reduced_tl, type1_tl, type2_alpha, type2_braid, type2_reduced_braids, type2_reduced_tl, type2_tl, BraidRep,
    TlRep, TYPE1_LOOP, TYPE2_LOOP,
};
use ybe_core::smatrix::{
    build_s123_closed, build_s123_product, s123_generator, thetas_to_params, SParams, ThetaTriple, CONSTRAINT_TOL,
};
use ybe_core::tensor::{expm_series, re};
use ybe_core::topobasis::{build_type1_basis, build_type2_basis, lift_to_strands, reduce_operator, verify_s_reduction};
use ybe_core::yang_baxter::{
    check_ybe, phi_from_theta, phi_from_three_thetas, wigner_braid_residual, wigner_ybe_residual, RMatrixFamily,
    DEFAULT_A0,
};
use ybe_core::{ComplexMatrix, Result};

use crate::args::{Family, Suite, VerifyArgs};
use crate::error::CliError;
use crate::output::{emit, num};

struct Check {
    suite: &'static str,
    relation: String,
    residual: f64,
}

type SuiteFn = fn(&mut Runner) -> Result<()>;

struct Runner<'a> {
    args: &'a VerifyArgs,
    checks: Vec<Check>,
}

impl Runner<'_> {
    fn push(&mut self, suite: &'static str, relation: impl Into<String>, residual: f64) {
        self.checks.push(Check { suite, relation: relation.into(), residual });
    }

    /// Independent stream per suite, so results do not depend on which
    /// other suites ran.
    fn rng(&self, stream: u64) -> ChaCha8Rng {
        let mut r = ChaCha8Rng::seed_from_u64(self.args.seed);
        r.set_stream(stream);
        r
    }

    fn perturbed(&self, m: ComplexMatrix) -> ComplexMatrix {
        let mut m = m;
        m[(0, 0)] += re(self.args.perturb);
        m
    }
}

/// Largest value of `f` over `inputs`, evaluated in parallel.
fn max_over<T: Sync>(inputs: &[T], f: impl Fn(&T) -> Result<f64> + Sync) -> Result<f64> {
    let values: Vec<f64> = inputs.par_iter().map(&f).collect::<Result<_>>()?;
    Ok(values.into_iter().fold(0.0, f64::max))
}

fn tl_suite(r: &mut Runner) -> Result<()> {
    let fam = r.args.family;
    let mut reps = Vec::new();
    if fam.includes_type1() {
        let local = r.perturbed(type1_tl());
        for n in [3, 4] {
            reps.push((format!("type1 {n} strands"), TlRep::lifted(&local, 2, n, TYPE1_LOOP)));
        }
        reps.push(("type1 reduced".into(), type1_reduced_tl()));
    }
    if fam.includes_type2() {
        for n in [3, 4] {
            reps.push((format!("type2 {n} strands"), TlRep::type2(n, 0.0)));
        }
        reps.push(("type2 reduced".into(), type2_reduced_tl()));
    }
    for (name, rep) in reps {
        let report = check_tl_relations(&rep)?;
        r.push("tl", format!("{name}: T_i^2 = d T_i"), report.idempotent);
        r.push("tl", format!("{name}: T_i T_i+-1 T_i = T_i"), report.adjacent);
        r.push("tl", format!("{name}: far T_i commute"), report.far);
    }
    if fam.includes_type1() {
        r.push("tl", "type1: -alpha^2 - alpha^-2 = d", (loop_value(type1_alpha()) - re(TYPE1_LOOP)).norm());
    }
    if fam.includes_type2() {
        r.push("tl", "type2: -alpha^2 - alpha^-2 = d", (loop_value(type2_alpha()) - re(TYPE2_LOOP)).norm());
    }
    Ok(())
}

fn braid_suite(r: &mut Runner) -> Result<()> {
    let fam = r.args.family;
    let mut reps = Vec::new();
    if fam.includes_type1() {
        let local = r.perturbed(type1_braid());
        for n in [3, 4] {
            reps.push((format!("type1 {n} strands"), BraidRep::lifted(&local, 2, n)));
        }
        reps.push(("type1 reduced".into(), type1_reduced_braids()));
    }
    if fam.includes_type2() {
        for n in [3, 4] {
            reps.push((format!("type2 {n} strands"), BraidRep::lifted(&type2_braid(0.0), 2, n)));
        }
        reps.push(("type2 reduced".into(), type2_reduced_braids()));
    }
    for (name, rep) in reps {
        let report = check_braid_relations(&rep)?;
        r.push("braid", format!("{name}: B_i B_i+1 B_i = B_i+1 B_i B_i+1"), report.braid);
        r.push("braid", format!("{name}: far B_i commute"), report.far);
    }
    Ok(())
}

fn ybe_suite(r: &mut Runner) -> Result<()> {
    let fam = r.args.family;
    let n = r.args.samples;
    let mut families = Vec::new();
    if fam.includes_type1() {
        families.push(RMatrixFamily::type1_tensor());
        families.push(RMatrixFamily::type1_reduced());
        families.push(RMatrixFamily::rational_type1(DEFAULT_A0));
    }
    if fam.includes_type2() {
        families.push(RMatrixFamily::type2_tensor(0.0));
        families.push(RMatrixFamily::type2_reduced());
        families.push(RMatrixFamily::rational_type2(DEFAULT_A0));
    }
    let mut rng = r.rng(3);
    for family in &families {
        let pairs: Vec<(f64, f64)> = match family.name() {
            "type2-4x4" | "type2-2x2" => {
                let a = FRAC_PI_2 - 0.05;
                (0..n).map(|_| (rng.random_range(-a..a), rng.random_range(-a..a))).collect()
            }
            "type1-4x4" | "type1-2x2" => {
                // Stay clear of |mu| = 1, where the normalization vanishes.
                let mut v = Vec::with_capacity(n);
                while v.len() < n {
                    let (a, b) = (rng.random_range(-0.9..0.9f64), rng.random_range(-0.9..0.9f64));
                    if ((a + b).abs() - 1.0).abs() >= 0.05 {
                        v.push((a, b));
                    }
                }
                v
            }
            _ => (0..n).map(|_| (rng.random_range(-0.4..0.4), rng.random_range(-0.4..0.4))).collect(),
        };
        let res = max_over(&pairs, |&(a, b)| Ok(check_ybe(family, a, b)?.residual))?;
        r.push("ybe", format!("{}: R12(x) R23(x o y) R12(y) = R23(y) R12(x o y) R23(x), {n} samples", family.name()), res);
    }
    if fam == Family::All {
        let triples: Vec<(f64, f64)> =
            (0..n).map(|_| (rng.random_range(0.1..1.4f64), rng.random_range(0.1..1.4f64))).collect();
        let res = max_over(&triples, |&(a, b)| {
            let (t1, t3) = (a.tan(), b.tan());
            Ok(wigner_ybe_residual(a, ((t1 + t3) / (1.0 + t1 * t3)).atan(), b)?.1)
        })?;
        r.push("ybe", format!("wigner D(t1,0) D(t2,phi) D(t3,0) = D(t3,phi) D(t2,0) D(t1,phi), {n} samples"), res);
        let thetas: Vec<f64> = (0..n).map(|_| rng.random_range(FRAC_PI_6 + 0.01..FRAC_PI_2)).collect();
        let res = max_over(&thetas, |&t| Ok(wigner_braid_residual(t)?.1))?;
        r.push("ybe", format!("wigner D(t,0) D(t,phi) D(t,0) = D(t,phi) D(t,0) D(t,phi), {n} samples"), res);
    }
    Ok(())
}

fn constraint_suite(r: &mut Runner) -> Result<()> {
    let n = r.args.samples;
    r.push("constraint", "phi(pi/4) = pi/2", (phi_from_theta(FRAC_PI_4)? - FRAC_PI_2).abs());
    r.push("constraint", "phi(pi/2) = 2pi/3", (phi_from_theta(FRAC_PI_2)? - 2.0 * PI / 3.0).abs());
    let mut rng = r.rng(4);
    let pairs: Vec<(f64, f64)> = (0..n).map(|_| (rng.random_range(0.1..1.4f64), rng.random_range(0.1..1.4f64))).collect();
    let galilean = max_over(&pairs, |&(a, b)| {
        let mid = (a.tan() + b.tan()).atan();
        Ok((phi_from_three_thetas(a, mid, b)? - 2.0 * PI / 3.0).abs())
    })?;
    r.push("constraint", format!("phi = 2pi/3 on galilean triples, {n} samples"), galilean);
    let lorentzian = max_over(&pairs, |&(a, b)| {
        let (t1, t3) = (a.tan(), b.tan());
        let mid = ((t1 + t3) / (1.0 + t1 * t3)).atan();
        Ok((phi_from_three_thetas(a, mid, b)? - FRAC_PI_2).abs())
    })?;
    r.push("constraint", format!("phi = pi/2 on lorentzian triples, {n} samples"), lorentzian);
    Ok(())
}

fn random_triples(rng: &mut ChaCha8Rng, n: usize) -> Vec<ThetaTriple> {
    (0..n).map(|_| ThetaTriple::constrained(rng.random_range(-PI..PI), rng.random_range(-PI..PI))).collect()
}

fn smatrix_suite(r: &mut Runner) -> Result<()> {
    let n = r.args.samples;
    let mut rng = r.rng(5);
    let triples = random_triples(&mut rng, n);
    let res = max_over(&triples, |t| {
        let p = thetas_to_params(t, CONSTRAINT_TOL)?;
        Ok(build_s123_closed(&p).phase_aligned_diff(&build_s123_product(t, CONSTRAINT_TOL)?))
    })?;
    r.push("smatrix", format!("closed form = product up to phase, {n} samples"), res);
    let params: Vec<SParams> =
        (0..n.min(100)).map(|_| SParams::new(rng.random_range(0.0..2.0 * PI), rng.random_range(-FRAC_PI_2..FRAC_PI_2))).collect();
    let res = max_over(&params, |p| {
        Ok(expm_series(&s123_generator(p).scale_re(p.eta))?.max_abs_diff(&build_s123_closed(p)))
    })?;
    r.push("smatrix", format!("closed form = exponential series, {} samples", params.len()), res);
    Ok(())
}

fn reduction_suite(r: &mut Runner) -> Result<()> {
    let fam = r.args.family;
    let tol = 1e-9;
    let mut cases = Vec::new();
    if fam.includes_type1() {
        let b = build_type1_basis();
        cases.push(("type1 T", type1_tl(), type1_reduced_tl().generators().to_vec(), b.clone()));
        cases.push(("type1 B", type1_braid(), type1_reduced_braids().generators().to_vec(), b));
    }
    if fam.includes_type2() {
        let b = build_type2_basis(0.0);
        cases.push(("type2 T", type2_tl(0.0), type2_reduced_tl().generators().to_vec(), b.clone()));
        cases.push(("type2 B", type2_braid(0.0), type2_reduced_braids().generators().to_vec(), b));
    }
    for (name, local, fixtures, basis) in cases {
        let mut worst = 0f64;
        for (k, want) in (1..=3).zip(&fixtures) {
            worst = worst.max(reduce_operator(&lift_to_strands(&local, k), &basis, tol)?.max_abs_diff(want));
        }
        r.push("reduction", format!("{name}_k on the 4-strand basis = 2x2 fixture"), worst);
    }
    if fam.includes_type2() {
        let n = r.args.samples;
        let mut rng = r.rng(6);
        let mut triples = vec![ThetaTriple::ghz(), ThetaTriple::w()];
        triples.extend(random_triples(&mut rng, n));
        let res = max_over(&triples, |t| Ok(verify_s_reduction(t, tol)?.residual))?;
        r.push("reduction", format!("reduced S123 = conj S'(eta, beta), GHZ + W + {n} samples"), res);
    }
    Ok(())
}

pub fn run(args: &VerifyArgs) -> std::result::Result<(), CliError> {
    let mut runner = Runner { args, checks: Vec::new() };
    let all = args.suite == Suite::All;
    let suites: [(Suite, SuiteFn); 6] = [
        (Suite::Tl, tl_suite),
        (Suite::Braid, braid_suite),
        (Suite::Ybe, ybe_suite),
        (Suite::Constraint, constraint_suite),
        (Suite::Smatrix, smatrix_suite),
        (Suite::Reduction, reduction_suite),
    ];
    for (suite, f) in suites {
        if all || args.suite == suite {
            f(&mut runner)?;
        }
    }

    let width = runner.checks.iter().map(|c| c.relation.len()).max().unwrap_or(0);
    let mut text = String::new();
    let mut failed = 0;
    for c in &runner.checks {
        let ok = c.residual.is_finite() && c.residual <= args.tol;
        failed += usize::from(!ok);
        let status = if ok { "ok" } else { "FAIL" };
        text.push_str(&format!("{:<4} {:<10} {:<width$} {}\n", status, c.suite, c.relation, num(c.residual)));
    }
    text.push_str(&format!("{} relations, {failed} above tol {}\n", runner.checks.len(), num(args.tol)));
    emit(None, &text)?;
    if failed > 0 {
        return Err(CliError::Tolerance(format!("{failed} relation(s) exceed tol {:e}", args.tol)));
    }
    Ok(())
}
