//! Acceptance suite: every shipped claim, one test per criterion, each
//! printing a pass/fail line (run with `-- --nocapture` to see them).
//!
//! Tolerances are pinned here, not tuned elsewhere:
//!
//! 1. elliptic identities at 1e-12 over a 200 x 50 (x, k) grid;
//! 2. phase-plane table exact, ring energy to 1e-13 relative;
//! 3. formula audit: clean families <= 1e-10, width variants adjudicated
//!    per point including |g| != 1, report internally consistent;
//! 4. leapfrog tracks the dn wave over a period to 1e-6, secular energy
//!    drift <= 1e-9 over 1e6 steps, measured periods to 1e-6 relative;
//! 5. operator identities converge at second order over n = 128/256/512;
//! 6. hierarchy coefficients: quarter-v_xxx normalization matches at
//!    second order and the half-v_xxx variant is recorded failing;
//! 7. PDE translate/periodicity fidelity at 1e-4, L2 drift <= 1e-8,
//!    gauge-independent m trajectories at discretization accuracy;
//! 8. the residual check does not converge on a non-solution.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use nkdv_core::closed_form::{audit_all, default_regime_samples, CaseId};
use nkdv_core::closed_form::{Branch, ProfileConstants, WaveProfile};
use nkdv_core::elliptic::{complete_k, jacobi, Modulus};
use nkdv_core::grid::{BoundaryMode, Grid, GridFunction};
use nkdv_core::hamiltonian_ode::{integrate, measure_period, Method, OdeState};
use nkdv_core::operator_lab::certification_report;
use nkdv_core::pde_sim::{m_field, residual_check, run_simulation, Gauge, GridSpec, SimConfig};
use nkdv_core::phase_plane::{
    classify, hamiltonian, quartic_roots, EquilibriumKind, Panel, TravelingWaveParams,
};
use nkdv_core::report::Verdict;

fn report(criterion: &str, outcome: Result<String, String>) {
    match outcome {
        Ok(detail) => println!("acceptance {criterion}: PASS ({detail})"),
        Err(detail) => {
            println!("acceptance {criterion}: FAIL ({detail})");
            panic!("acceptance {criterion} failed: {detail}");
        }
    }
}

fn params(c: f64, g: f64) -> TravelingWaveParams {
    TravelingWaveParams::new(c, g).unwrap()
}

fn dn_profile() -> WaveProfile {
    WaveProfile::new(
        params(-1.0, 1.0),
        CaseId::Dn26,
        Branch::Plus,
        ProfileConstants::default().with_h(-0.125),
    )
    .unwrap()
}

#[test]
fn criterion_1_elliptic_identities() {
    let run = || -> Result<String, String> {
        let mut worst = 0.0_f64;
        for i in 0..200 {
            let x = -50.0 + 100.0 * i as f64 / 199.0;
            for j in 0..50 {
                let k = 0.999 * j as f64 / 49.0;
                let v = jacobi(x, Modulus::new(k).unwrap()).map_err(|e| e.to_string())?;
                let e1 = (v.sn * v.sn + v.cn * v.cn - 1.0).abs();
                let e2 = (v.dn * v.dn - (1.0 - k * k * v.sn * v.sn)).abs();
                worst = worst.max(e1).max(e2);
                if e1 > 1e-12 || e2 > 1e-12 {
                    return Err(format!("identity residual {e1:e}/{e2:e} at x={x}, k={k}"));
                }
            }
        }
        for i in 0..200 {
            let x = -50.0 + 100.0 * i as f64 / 199.0;
            let v0 = jacobi(x, Modulus::new(0.0).unwrap()).map_err(|e| e.to_string())?;
            let v1 = jacobi(x, Modulus::new(1.0).unwrap()).map_err(|e| e.to_string())?;
            let sech = x.cosh().recip();
            for (got, want, name) in [
                (v0.sn, x.sin(), "sn@k=0"),
                (v0.cn, x.cos(), "cn@k=0"),
                (v0.dn, 1.0, "dn@k=0"),
                (v1.sn, x.tanh(), "sn@k=1"),
                (v1.cn, sech, "cn@k=1"),
                (v1.dn, sech, "dn@k=1"),
            ] {
                if (got - want).abs() > 1e-12 {
                    return Err(format!(
                        "degenerate {name} off by {:e} at x={x}",
                        (got - want).abs()
                    ));
                }
            }
        }
        Ok(format!(
            "worst identity residual {worst:.2e} over 200x50 grid"
        ))
    };
    report("criterion 1 (elliptic identities)", run());
}

#[test]
fn criterion_2_phase_plane_table() {
    let run = || -> Result<String, String> {
        let table = [
            (1.0, 0.0, Panel::F1_1, 1),
            (1.0, 1.0, Panel::F1_2, 1),
            (-1.0, 1.0, Panel::F1_3, 3),
            (-1.0, 0.0, Panel::F1_4, 1),
            (-1.0, -1.0, Panel::F1_5, 1),
            (1.0, -1.0, Panel::F1_6, 3),
        ];
        for (c, g, panel, count) in table {
            let portrait = classify(params(c, g));
            if portrait.panel != panel {
                return Err(format!(
                    "(c={c}, g={g}): panel {:?}, expected {panel:?}",
                    portrait.panel
                ));
            }
            if portrait.equilibria.len() != count {
                return Err(format!(
                    "(c={c}, g={g}): {} equilibria, expected {count}",
                    portrait.equilibria.len()
                ));
            }
        }
        // saddle/center patterns of the three-equilibrium regimes
        let p3 = classify(params(-1.0, 1.0));
        let kinds: Vec<_> = p3.equilibria.iter().map(|e| e.kind).collect();
        if kinds
            != vec![
                EquilibriumKind::Center,
                EquilibriumKind::Saddle,
                EquilibriumKind::Center,
            ]
        {
            return Err(format!("g>0, c<0 pattern {kinds:?}"));
        }
        let p5 = classify(params(1.0, -1.0));
        let kinds: Vec<_> = p5.equilibria.iter().map(|e| e.kind).collect();
        if kinds
            != vec![
                EquilibriumKind::Saddle,
                EquilibriumKind::Center,
                EquilibriumKind::Saddle,
            ]
        {
            return Err(format!("g<0, c>0 pattern {kinds:?}"));
        }
        // Case 1 origin is the saddle-like degenerate point
        if classify(params(1.0, 0.0)).equilibria[0].kind != EquilibriumKind::Saddle {
            return Err("g=0, c>0 origin should classify as saddle".into());
        }

        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let mut worst = 0.0_f64;
        for _ in 0..100 {
            let c = rng.gen_range(0.1..3.0) * if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
            let g = rng.gen_range(0.1..3.0) * if c > 0.0 { -1.0 } else { 1.0 };
            let p = params(c, g);
            let ring = (c * g).abs().sqrt();
            let expected = c * g * g / 4.0;
            let rel = (hamiltonian(p, ring, 0.0) - expected).abs() / (1.0 + expected.abs());
            worst = worst.max(rel);
            if rel > 1e-13 {
                return Err(format!("ring energy off by {rel:e} at (c={c}, g={g})"));
            }
            let h1 = classify(p)
                .h1
                .ok_or_else(|| format!("missing h1 at (c={c}, g={g})"))?;
            if (h1 - expected).abs() > 1e-13 * (1.0 + expected.abs()) {
                return Err(format!("portrait h1 {h1} vs {expected}"));
            }
        }
        Ok(format!(
            "six panels exact; worst ring-energy residual {worst:.2e} over 100 draws"
        ))
    };
    report("criterion 2 (phase-plane table)", run());
}

#[test]
fn criterion_3_formula_audit() {
    let run = || -> Result<String, String> {
        let samples = default_regime_samples(5, 7);
        let report = audit_all(&samples);
        // clean families pass at 1e-10 at every audited point
        for e in &report.entries {
            if matches!(
                e.equation.as_str(),
                "eq23" | "eq24" | "eq26" | "eq27" | "eq29"
            ) && e.residual > 1e-10
            {
                return Err(format!(
                    "{} residual {:e} at c={:?}, g={:?}",
                    e.equation, e.residual, e.c, e.g
                ));
            }
        }
        // per-variant adjudication is present for the sech and tanh
        // families, including a kink point with |g| != 1
        for eq in ["eq25", "eq28"] {
            for variant in ["paper", "derived"] {
                if !report
                    .entries
                    .iter()
                    .any(|e| e.equation == eq && e.variant == variant)
                {
                    return Err(format!("missing {eq} variant {variant}"));
                }
            }
        }
        if !report
            .entries
            .iter()
            .any(|e| e.equation == "eq28" && e.g.map(|g| g.abs() > 1.5).unwrap_or(false))
        {
            return Err("no kink audit point with |g| far from 1".into());
        }
        // internal consistency: identical (equation, point, variant)
        // rows never disagree, and the derived widths always pass
        for a in &report.entries {
            for b in &report.entries {
                if a.equation == b.equation
                    && a.c == b.c
                    && a.g == b.g
                    && a.h == b.h
                    && a.variant == b.variant
                    && a.verdict != b.verdict
                {
                    return Err(format!("inconsistent verdicts for {a:?} vs {b:?}"));
                }
            }
        }
        if !report
            .entries
            .iter()
            .filter(|e| e.variant == "derived")
            .all(|e| e.verdict == Verdict::Pass)
        {
            return Err("a derived-width entry failed".into());
        }
        let n = report.entries.len();
        let flagged = report.flags.len();
        Ok(format!(
            "{n} entries, clean families <= 1e-10, {flagged} printed-width flags"
        ))
    };
    report("criterion 3 (formula audit)", run());
}

#[test]
fn criterion_4_ode_cross_validation() {
    let run = || -> Result<String, String> {
        let profile = dn_profile();
        let p = profile.params();
        let r1 = profile.eval(0.0).map_err(|e| e.to_string())?;
        let period = profile.spatial_period().unwrap();

        // (a) track the closed form over one period at dxi = 1e-3
        let steps = (period / 1e-3).ceil() as usize;
        let traj = integrate(
            p,
            OdeState {
                u: r1,
                y: 0.0,
                xi: 0.0,
            },
            1e-3,
            steps,
            Method::Leapfrog,
        )
        .map_err(|e| e.to_string())?;
        let mut track_err = 0.0_f64;
        for s in traj.states() {
            track_err = track_err.max((s.u - profile.eval(s.xi).unwrap()).abs());
        }
        if track_err > 1e-6 {
            return Err(format!("dn tracking error {track_err:e} > 1e-6"));
        }

        // (b) secular energy drift over 1e6 steps at dxi = 1e-3
        let long = integrate(
            p,
            OdeState {
                u: r1,
                y: 0.0,
                xi: 0.0,
            },
            1e-3,
            1_000_000,
            Method::Leapfrog,
        )
        .map_err(|e| e.to_string())?;
        let window = (period / 1e-3) as usize;
        let drift = long.secular_energy_drift(window);
        if drift > 1e-9 {
            return Err(format!("secular energy drift {drift:e} > 1e-9"));
        }

        // (c) measured periods vs 2K(k)sqrt(2|c|)/r1 and 4K(k)sqrt(2c)/z1
        let dn_expected = {
            let roots = quartic_roots(p, -0.125).unwrap();
            let r1 = roots.sq_plus.sqrt();
            let k =
                Modulus::new(((roots.sq_plus - roots.sq_minus) / roots.sq_plus).sqrt()).unwrap();
            2.0 * complete_k(k).unwrap() * 2.0_f64.sqrt() / r1
        };
        let dxi = 5e-4;
        let traj = integrate(
            p,
            OdeState {
                u: r1,
                y: 0.0,
                xi: 0.0,
            },
            dxi,
            (10.0 * dn_expected / dxi) as usize,
            Method::Leapfrog,
        )
        .map_err(|e| e.to_string())?;
        let dn_measured = measure_period(&traj).ok_or("no dn period measured")?;
        let dn_rel = (dn_measured - dn_expected).abs() / dn_expected;
        if dn_rel > 1e-6 {
            return Err(format!("dn period relative error {dn_rel:e}"));
        }

        let p5 = params(1.0, -1.0);
        let roots = quartic_roots(p5, 0.125).unwrap();
        let (z1, z2) = (roots.sq_plus.sqrt(), roots.sq_minus.sqrt());
        let sn_expected =
            4.0 * complete_k(Modulus::new(z2 / z1).unwrap()).unwrap() * 2.0_f64.sqrt() / z1;
        let y0 = z1 * z2 / 2.0_f64.sqrt();
        let traj = integrate(
            p5,
            OdeState {
                u: 0.0,
                y: y0,
                xi: 0.0,
            },
            dxi,
            (10.0 * sn_expected / dxi) as usize,
            Method::Leapfrog,
        )
        .map_err(|e| e.to_string())?;
        let sn_measured = measure_period(&traj).ok_or("no sn period measured")?;
        let sn_rel = (sn_measured - sn_expected).abs() / sn_expected;
        if sn_rel > 1e-6 {
            return Err(format!("sn period relative error {sn_rel:e}"));
        }
        Ok(format!(
            "tracking {track_err:.2e}, drift {drift:.2e}, period errors {dn_rel:.2e}/{sn_rel:.2e}"
        ))
    };
    report("criterion 4 (ODE cross-validation)", run());
}

fn second_order(name: &str, residuals: &[f64]) -> Result<(), String> {
    for w in residuals.windows(2) {
        let ratio = w[0] / w[1];
        if !(3.0..=6.0).contains(&ratio) {
            return Err(format!(
                "{name}: refinement ratio {ratio:.2} outside [3, 6] ({residuals:?})"
            ));
        }
    }
    Ok(())
}

#[test]
fn criterion_5_operator_certification() {
    let run = || -> Result<String, String> {
        let report = certification_report(128, 3).map_err(|e| e.to_string())?;
        if report.levels != vec![128, 256, 512] {
            return Err(format!("unexpected levels {:?}", report.levels));
        }
        for series in &report.series {
            second_order(&series.name, &series.residuals)?;
        }
        let finest: Vec<String> = report
            .series
            .iter()
            .map(|s| format!("{:.2e}", s.residuals.last().unwrap()))
            .collect();
        Ok(format!(
            "7 series second-order over 128/256/512; finest residuals {finest:?}"
        ))
    };
    report("criterion 5 (operator certification)", run());
}

#[test]
fn criterion_6_hierarchy_coefficients() {
    use nkdv_core::grid::{derivative, Accuracy};
    use nkdv_core::operator_lab::{
        apply_k, hierarchy_coefficient_audit, OperatorForm, PotentialData,
    };

    let run = || -> Result<String, String> {
        // v = cos x on a unit carrier; two grid levels to pin the order.
        let cos_data = |n: usize| -> Result<PotentialData, String> {
            let grid = Grid::periodic(0.0, 2.0 * std::f64::consts::PI, n).unwrap();
            PotentialData::from_parts(
                GridFunction::constant(grid, 1.0).unwrap(),
                GridFunction::from_fn(grid, f64::cos).unwrap(),
            )
            .map_err(|e| e.to_string())
        };
        let mut resids = Vec::new();
        let mut finest_audit = None;
        for n in [256_usize, 512] {
            let p = cos_data(n)?;
            // the first recursion step: K 2 = v_x exactly up to stencil error
            let two = GridFunction::constant(*p.grid(), 2.0).unwrap();
            let k2 = apply_k(&p, &two, OperatorForm::Sum).map_err(|e| e.to_string())?;
            let vx = derivative(p.v(), 1, Accuracy::Second).map_err(|e| e.to_string())?;
            let k2_err = k2.zip_with(&vx, |a, b| a - b).unwrap().sup_norm();
            if k2_err > 1e-11 {
                return Err(format!("K 2 != v_x: {k2_err:e}"));
            }
            let audit = hierarchy_coefficient_audit(&p).map_err(|e| e.to_string())?;
            let quarter = audit
                .entries
                .iter()
                .find(|e| e.variant.starts_with("(1/4)"))
                .ok_or("missing quarter candidate")?;
            resids.push(quarter.residual);
            finest_audit = Some(audit);
        }
        if resids[0] / resids[1] < 3.0 {
            return Err(format!("K G1 residual not second order: {resids:?}"));
        }
        let audit = finest_audit.unwrap();
        let quarter = audit
            .entries
            .iter()
            .find(|e| e.variant.starts_with("(1/4)"))
            .unwrap();
        let half = audit
            .entries
            .iter()
            .find(|e| e.variant.starts_with("(1/2)"))
            .ok_or("missing half candidate")?;
        if quarter.verdict != Verdict::Pass {
            return Err(format!("quarter normalization should pass: {quarter:?}"));
        }
        if half.verdict != Verdict::Fail || half.residual < 0.2 {
            return Err(format!(
                "half normalization should fail by ~v_xxx/4: {half:?}"
            ));
        }
        let (a, b) = audit.fit.ok_or("no least-squares fit")?;
        if (a - 0.25).abs() > 1e-3 || (b - 1.5).abs() > 1e-2 {
            return Err(format!("fit ({a}, {b}) far from (1/4, 3/2)"));
        }
        Ok(format!(
            "K G1 residual second order ({resids:?}), fit ({a:.4}, {b:.4}), half-coefficient variant recorded failing at {:.3}",
            half.residual
        ))
    };
    report("criterion 6 (hierarchy coefficients)", run());
}

#[test]
fn criterion_7_pde_simulation() {
    let run = || -> Result<String, String> {
        // (a) soliton translate fidelity at dx = 0.01, dt = 0.005
        let soliton_config = |dx: f64| SimConfig {
            case: "soliton25".into(),
            c: -1.0,
            g: 1.0,
            h: None,
            grid: GridSpec {
                x0: -25.0,
                dx,
                n: (50.0 / dx).round() as usize + 1,
            },
            closure: BoundaryMode::Decaying,
            gauge: Gauge::ConserveL2,
            dt: 0.005,
            t_end: 1.0,
            output_every: 1000,
        };
        let fine = run_simulation(&soliton_config(0.01)).map_err(|e| e.to_string())?;
        let err_fine = fine.summary.final_error_vs_translate;
        if err_fine > 1e-4 {
            return Err(format!("soliton translate error {err_fine:e} > 1e-4"));
        }
        if fine.summary.l2_drift > 1e-8 {
            return Err(format!(
                "soliton L2 drift {:e} > 1e-8",
                fine.summary.l2_drift
            ));
        }
        let coarse = run_simulation(&soliton_config(0.02)).map_err(|e| e.to_string())?;
        let gain = coarse.summary.final_error_vs_translate / err_fine;
        if gain < 3.0 {
            return Err(format!("halving dx gained only {gain:.2}x"));
        }

        // (b) dn wave returns after one temporal period
        let profile = dn_profile();
        let period = profile.spatial_period().unwrap();
        let n = 1024;
        let dn_config = SimConfig {
            case: "dn26".into(),
            c: -1.0,
            g: 1.0,
            h: Some(-0.125),
            grid: GridSpec {
                x0: 0.0,
                dx: period / n as f64,
                n,
            },
            closure: BoundaryMode::Periodic,
            gauge: Gauge::ConserveL2,
            dt: 0.002,
            t_end: period,
            output_every: 100_000,
        };
        let run_dn = run_simulation(&dn_config).map_err(|e| e.to_string())?;
        let first = &run_dn.slices[0];
        let last = run_dn.slices.last().unwrap();
        let return_err = first
            .values()
            .iter()
            .zip(last.values())
            .fold(0.0_f64, |m, (&a, &b)| m.max((a - b).abs()));
        if return_err > 1e-4 {
            return Err(format!("dn return error {return_err:e} > 1e-4"));
        }
        if run_dn.summary.l2_drift > 1e-8 {
            return Err(format!("dn L2 drift {:e} > 1e-8", run_dn.summary.l2_drift));
        }

        // (c) gauge choice leaves the m trajectory unchanged to
        // discretization accuracy (shrinks at the discretization order)
        let mut diffs = Vec::new();
        for n in [256_usize, 512] {
            let mk = |gauge: Gauge| SimConfig {
                case: "dn26".into(),
                c: -1.0,
                g: 1.0,
                h: Some(-0.125),
                grid: GridSpec {
                    x0: 0.0,
                    dx: period / n as f64,
                    n,
                },
                closure: BoundaryMode::Periodic,
                gauge,
                dt: 0.5 * period / n as f64,
                t_end: period / 4.0,
                output_every: 16,
            };
            let a = run_simulation(&mk(Gauge::Anchored)).map_err(|e| e.to_string())?;
            let b = run_simulation(&mk(Gauge::ConserveL2)).map_err(|e| e.to_string())?;
            let mut worst = 0.0_f64;
            for (ua, ub) in a.slices.iter().zip(&b.slices) {
                let ma = m_field(ua).map_err(|e| e.to_string())?;
                let mb = m_field(ub).map_err(|e| e.to_string())?;
                worst = worst.max(ma.zip_with(&mb, |x, y| x - y).unwrap().sup_norm());
            }
            diffs.push(worst);
        }
        if diffs[0] / diffs[1] < 2.5 || diffs[1] > 1e-4 {
            return Err(format!("m-field gauge dependence {diffs:?}"));
        }
        Ok(format!(
            "soliton err {err_fine:.2e} (gain {gain:.1}x), dn return {return_err:.2e}, m gauge-diff {:.2e} -> {:.2e}",
            diffs[0], diffs[1]
        ))
    };
    report("criterion 7 (PDE simulation)", run());
}

#[test]
fn criterion_8_negative_control() {
    let run = || -> Result<String, String> {
        let mut resids = Vec::new();
        for n in [64_usize, 128, 256] {
            let grid = Grid::periodic(0.0, 2.0 * std::f64::consts::PI, n).unwrap();
            let u = GridFunction::from_fn(grid, |x| 2.0 + x.cos()).unwrap();
            let slices = vec![u.clone(), u.clone(), u];
            resids.push(residual_check(&slices, 0.01).map_err(|e| e.to_string())?);
        }
        // a held-fixed non-solution keeps 2 u u_x of order one
        if resids.iter().any(|r| *r < 1.0) {
            return Err(format!("negative control converged: {resids:?}"));
        }
        let spread = (resids[0] - resids[2]).abs() / resids[0];
        if spread > 0.2 {
            return Err(format!("negative control should plateau: {resids:?}"));
        }
        Ok(format!(
            "non-solution residual stays at {:.2} under refinement",
            resids[2]
        ))
    };
    report("criterion 8 (negative control)", run());
}
