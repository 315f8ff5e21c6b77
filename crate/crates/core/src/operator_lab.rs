//! Numeric certification of the operator algebra behind the flow
//! (-u_xx/u)_t = 2 u u_x.
//!
//! With v = -u_xx/u the relevant operators and their product
//! factorizations are
//!
//! ```text
//! L = d^2 + v               = u^-1 d u^2 d u^-1
//! K = (1/4) d^3 + (1/2)(v d + d v)
//!                           = (1/4) u^-2 d u^2 d u^2 d u^-2
//! J = d
//! ```
//!
//! This module checks, on discretized data: agreement of the sum and
//! factored forms, the kernel seeds of K (u^2 exactly; the nested
//! antiderivative seeds approximately, interior-only), the squared-
//! eigenfunction relation K(psi^2) = lambda (psi^2)' for eigenpairs of
//! the discretized L, the low-order coefficients of the hierarchy
//! v_t = K G1, and the commutator residual ||v_t f - [V, L] f|| for the
//! negative-flow operator V = -(1/2) u d^-1 u.
//!
//! d^-1 is always realized as the zero-mean antiderivative here. That
//! pins the free integration constant; the leftover rank-one ambiguity
//! of the commutator couples to the mean of u f' and vanishes on the
//! symmetric data used for certification (even u, even f about the same
//! point), which is the configuration the refinement checks certify.
//! All checks run at second-order accuracy on strictly positive u.

use nalgebra::DMatrix;
use serde::Serialize;

use crate::closed_form::{Branch, CaseId, ProfileConstants, WaveProfile};
use crate::error::{Error, Result};
use crate::grid::{
    antiderivative, derivative, integrate, Accuracy, AntiderivativeConvention, BoundaryMode, Grid,
    GridFunction,
};
use crate::phase_plane::TravelingWaveParams;
use crate::report::{AuditEntry, Verdict};

/// Positivity floor for the potential field u: divisions by u and u^2
/// must stay well conditioned.
pub const U_FLOOR: f64 = 1e-8;

/// Grids past this size defeat the point of a dense desk-scale
/// eigensolver.
pub const MAX_EIGEN_N: usize = 1024;

/// Which realization of L or K to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OperatorForm {
    Sum,
    Factored,
}

/// A strictly positive field u with its Schroedinger potential
/// v = -u_xx/u, discretized with the same second-order stencil used by
/// the operators (so that L u = 0 holds exactly on the grid).
#[derive(Debug, Clone, PartialEq)]
pub struct PotentialData {
    u: GridFunction,
    v: GridFunction,
}

impl PotentialData {
    pub fn from_u(u: GridFunction) -> Result<Self> {
        if u.min() < U_FLOOR {
            return Err(Error::RejectedInput(format!(
                "u must stay above the positivity floor {U_FLOOR:e}, min is {:e}",
                u.min()
            )));
        }
        let uxx = derivative(&u, 2, Accuracy::Second)?;
        let v = uxx.zip_with(&u, |num, den| -num / den)?;
        Ok(PotentialData { u, v })
    }

    /// Pair a carrier u with a prescribed potential v instead of the
    /// derived -u_xx/u. Checks that depend on L u = 0 (the factored
    /// forms, the commutator) lose that exactness on such data; this is
    /// for analytic test potentials like v = cos x or v = const.
    pub fn from_parts(u: GridFunction, v: GridFunction) -> Result<Self> {
        if u.grid() != v.grid() {
            return Err(Error::RejectedInput("u and v must share one grid".into()));
        }
        if u.min() < U_FLOOR {
            return Err(Error::RejectedInput(format!(
                "u must stay above the positivity floor {U_FLOOR:e}, min is {:e}",
                u.min()
            )));
        }
        Ok(PotentialData { u, v })
    }

    pub fn u(&self) -> &GridFunction {
        &self.u
    }

    pub fn v(&self) -> &GridFunction {
        &self.v
    }

    pub fn grid(&self) -> &Grid {
        self.u.grid()
    }
}

fn d1(f: &GridFunction) -> Result<GridFunction> {
    derivative(f, 1, Accuracy::Second)
}

/// Apply L = d^2 + v (sum) or u^-1 d u^2 d u^-1 (factored).
pub fn apply_l(p: &PotentialData, f: &GridFunction, form: OperatorForm) -> Result<GridFunction> {
    match form {
        OperatorForm::Sum => {
            let fxx = derivative(f, 2, Accuracy::Second)?;
            fxx.zip_with(&p.v.zip_with(f, |v, f| v * f)?, |a, b| a + b)
        }
        OperatorForm::Factored => {
            let w = f.zip_with(&p.u, |f, u| f / u)?;
            let inner = d1(&w)?.zip_with(&p.u, |d, u| d * u * u)?;
            d1(&inner)?.zip_with(&p.u, |d, u| d / u)
        }
    }
}

/// Apply K = (1/4) d^3 + (1/2)(v d + d v) (sum) or
/// (1/4) u^-2 d u^2 d u^2 d u^-2 (factored).
pub fn apply_k(p: &PotentialData, f: &GridFunction, form: OperatorForm) -> Result<GridFunction> {
    match form {
        OperatorForm::Sum => {
            let fxxx = derivative(f, 3, Accuracy::Second)?;
            let vf = p.v.zip_with(f, |v, f| v * f)?;
            let term =
                p.v.zip_with(&d1(f)?, |v, d| v * d)?
                    .zip_with(&d1(&vf)?, |a, b| a + b)?;
            fxxx.zip_with(&term, |a, b| 0.25 * a + 0.5 * b)
        }
        OperatorForm::Factored => {
            let w = f.zip_with(&p.u, |f, u| f / (u * u))?;
            let s1 = d1(&w)?.zip_with(&p.u, |d, u| d * u * u)?;
            let s2 = d1(&s1)?.zip_with(&p.u, |d, u| d * u * u)?;
            d1(&s2)?.zip_with(&p.u, |d, u| 0.25 * d / (u * u))
        }
    }
}

/// An eigenpair of the discretized L = d^2 + v, with psi normalized to
/// unit integral of psi^2.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenPair {
    lambda: f64,
    psi: GridFunction,
}

impl EigenPair {
    /// Normalizes psi so that the grid integral of psi^2 is one.
    pub fn new(lambda: f64, psi: GridFunction) -> Result<Self> {
        let norm_sq = integrate(&psi.map(|v| v * v)?);
        if norm_sq <= 0.0 || !norm_sq.is_finite() {
            return Err(Error::RejectedInput("eigenfunction has no mass".into()));
        }
        let scale = norm_sq.sqrt().recip();
        Ok(EigenPair {
            lambda,
            psi: psi.map(|v| v * scale)?,
        })
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn psi(&self) -> &GridFunction {
        &self.psi
    }

    /// Sup-norm residual ||L psi - lambda psi|| of the discrete stencil
    /// equation (machine-level for pairs from [`eigen_smallest`]).
    pub fn residual(&self, p: &PotentialData) -> Result<f64> {
        let lpsi = apply_l(p, &self.psi, OperatorForm::Sum)?;
        Ok(lpsi
            .zip_with(&self.psi, |a, b| a - self.lambda * b)?
            .sup_norm())
    }
}

/// Lowest-|lambda| eigenpairs of the dense symmetric discretization of
/// d^2 + v on a periodic grid.
pub fn eigen_smallest(p: &PotentialData, count: usize) -> Result<Vec<EigenPair>> {
    let grid = *p.grid();
    if grid.boundary() != BoundaryMode::Periodic {
        return Err(Error::RejectedInput(
            "eigensolver expects a periodic grid".into(),
        ));
    }
    if count == 0 || count > 8 {
        return Err(Error::RejectedInput(format!(
            "eigenpair count must be in 1..=8, got {count}"
        )));
    }
    let n = grid.len();
    if n > MAX_EIGEN_N {
        return Err(Error::RejectedInput(format!(
            "dense eigensolver is capped at n = {MAX_EIGEN_N}, got {n}"
        )));
    }
    let dx2 = grid.dx() * grid.dx();
    let mut m = DMatrix::<f64>::zeros(n, n);
    for i in 0..n {
        m[(i, i)] = -2.0 / dx2 + p.v.values()[i];
        m[(i, (i + 1) % n)] += 1.0 / dx2;
        m[(i, (i + n - 1) % n)] += 1.0 / dx2;
    }
    let eig = m.try_symmetric_eigen(f64::EPSILON, 10_000).ok_or_else(|| {
        Error::NumericFailure("symmetric eigensolver hit its iteration cap".into())
    })?;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        eig.eigenvalues[a]
            .abs()
            .partial_cmp(&eig.eigenvalues[b].abs())
            .expect("finite eigenvalues")
    });
    let mut out = Vec::with_capacity(count);
    for &idx in order.iter().take(count) {
        let psi = GridFunction::new(grid, eig.eigenvectors.column(idx).iter().copied().collect())?;
        out.push(EigenPair::new(eig.eigenvalues[idx], psi)?);
    }
    Ok(out)
}

/// Residual of the squared-eigenfunction relation
/// K(psi^2) = lambda (psi^2)', normalized by ||psi^2||.
pub fn verify_lenard(p: &PotentialData, pair: &EigenPair) -> Result<f64> {
    let psi_sq = pair.psi().map(|v| v * v)?;
    let lhs = apply_k(p, &psi_sq, OperatorForm::Sum)?;
    let rhs = d1(&psi_sq)?;
    let resid = lhs.zip_with(&rhs, |a, b| a - pair.lambda() * b)?;
    Ok(resid.sup_norm() / psi_sq.sup_norm())
}

/// Outcome of the hierarchy coefficient audit: the second positive flow
/// computed from the recursion, fitted against candidate coefficient
/// normalizations of a v_xxx + b v v_x.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HierarchyAudit {
    /// One entry per candidate normalization.
    pub entries: Vec<AuditEntry>,
    /// Least-squares (a, b) fit of K G1 against (v_xxx, v v_x), absent
    /// on degenerate data.
    pub fit: Option<(f64, f64)>,
    pub notes: Vec<String>,
}

/// Drive the recursion one step up from G0 = 2: K G0 should be v_x,
/// G1 = d^-1(K G0) should be v up to its mean, and K G1 is the second
/// positive flow. The result is fitted against the two candidate
/// normalizations (1/2, 3/2) and (1/4, 3/2) of a v_xxx + b v v_x.
///
/// The zero-mean d^-1 makes G1 = v - mean(v), and K applied to the
/// constant -mean(v) contributes -(mean(v)/2) v_x; clean coefficient
/// identification therefore needs a zero-mean potential, and a note is
/// attached whenever mean(v) is not negligible.
pub fn hierarchy_coefficient_audit(p: &PotentialData) -> Result<HierarchyAudit> {
    let grid = *p.grid();
    let two = GridFunction::constant(grid, 2.0)?;
    let k_two = apply_k(p, &two, OperatorForm::Sum)?;
    let g1 = antiderivative(&k_two, AntiderivativeConvention::ZeroMean, Accuracy::Second)?;
    let kg1 = apply_k(p, &g1, OperatorForm::Sum)?;

    let v_xxx = derivative(&p.v, 3, Accuracy::Second)?;
    let v_vx = p.v.zip_with(&d1(&p.v)?, |v, d| v * d)?;

    let mut notes = vec![
        "G1 = d^-1(K 2) reproduces the potential v up to its mean; a seed reading G1 = u is consistent only with v in place of u".into(),
    ];
    let v_mean = crate::grid::mean(&p.v);
    if v_mean.abs() > 1e-10 * (1.0 + p.v.sup_norm()) {
        notes.push(format!(
            "mean(v) = {v_mean:.6e} is not zero: K G1 carries an extra -(mean(v)/2) v_x under the zero-mean d^-1 convention, so the two-candidate residuals include that term"
        ));
    }

    let scale = kg1.sup_norm().max(v_xxx.sup_norm()).max(v_vx.sup_norm());
    if scale < 1e-13 {
        return Ok(HierarchyAudit {
            entries: vec![AuditEntry {
                equation: "eq7".into(),
                c: None,
                g: None,
                h: None,
                variant: "flat data".into(),
                residual: 0.0,
                verdict: Verdict::Indeterminate,
            }],
            fit: None,
            notes,
        });
    }

    // Least-squares fit over the two-dimensional candidate space.
    let (mut a11, mut a12, mut a22, mut b1, mut b2) = (0.0, 0.0, 0.0, 0.0, 0.0);
    for ((&x1, &x2), &y) in v_xxx.values().iter().zip(v_vx.values()).zip(kg1.values()) {
        a11 += x1 * x1;
        a12 += x1 * x2;
        a22 += x2 * x2;
        b1 += x1 * y;
        b2 += x2 * y;
    }
    let det = a11 * a22 - a12 * a12;
    let fit = (det.abs() > 1e-12 * a11.max(a22).powi(2))
        .then(|| ((a22 * b1 - a12 * b2) / det, (a11 * b2 - a12 * b1) / det));

    // Discrete residuals are O(dx^2); the verdict threshold scales with it.
    let tol = 10.0 * grid.dx() * grid.dx() * scale;
    let mut entries = Vec::new();
    for (a, b, tag) in [
        (0.5, 1.5, "(1/2) v_xxx + (3/2) v v_x"),
        (0.25, 1.5, "(1/4) v_xxx + (3/2) v v_x"),
    ] {
        let resid = kg1
            .zip_with(
                &v_xxx.zip_with(&v_vx, |x1, x2| a * x1 + b * x2)?,
                |lhs, rhs| lhs - rhs,
            )?
            .sup_norm();
        entries.push(AuditEntry {
            equation: "eq7".into(),
            c: None,
            g: None,
            h: None,
            variant: tag.into(),
            residual: resid,
            verdict: Verdict::from_residual(resid, tol),
        });
    }
    Ok(HierarchyAudit {
        entries,
        fit,
        notes,
    })
}

/// Result of the negative-flow commutator check.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LaxResidual {
    /// ||v_t f - (V L - L V) f||_inf / ||f||_inf with v_t = 2 u u_x.
    pub residual: f64,
    /// Fraction of ||f|| removed by the zero-mean projection.
    pub removed_fraction: f64,
    /// Set when the projection removed more than 10% of ||f||.
    pub warning: bool,
}

/// Commutator residual of the negative flow: L_t = [V, L] with
/// V g = -(1/2) u d^-1 (u g), the time derivative of L acting as
/// multiplication by v_t = 2 u u_x.
///
/// f is first projected so that u f has zero grid mean (the
/// antiderivative inside V must be periodic); the removed fraction and
/// a >10% warning are reported alongside the residual.
pub fn lax_residual(p: &PotentialData, f: &GridFunction) -> Result<LaxResidual> {
    if p.grid().boundary() != BoundaryMode::Periodic {
        return Err(Error::RejectedInput(
            "the commutator check expects a periodic grid".into(),
        ));
    }
    let norm_f = f.sup_norm();
    if norm_f == 0.0 {
        return Err(Error::RejectedInput("test function must be nonzero".into()));
    }
    // Project out the u-component so that <u, f> = 0.
    let uf = p.u.zip_with(f, |u, f| u * f)?;
    let coeff = integrate(&uf) / integrate(&p.u.map(|u| u * u)?);
    let f_proj = f.zip_with(&p.u, |f, u| f - coeff * u)?;
    let removed = f_proj.zip_with(f, |a, b| a - b)?.sup_norm();
    let removed_fraction = removed / norm_f;
    let warning = removed_fraction > 0.10;

    let apply_v = |g: &GridFunction| -> Result<GridFunction> {
        let ug = p.u.zip_with(g, |u, g| u * g)?;
        let prim = antiderivative_zero_mean_lenient(&ug)?;
        p.u.zip_with(&prim, |u, p| -0.5 * u * p)
    };

    let lf = apply_l(p, &f_proj, OperatorForm::Sum)?;
    let vlf = apply_v(&lf)?;
    let vf = apply_v(&f_proj)?;
    let lvf = apply_l(p, &vf, OperatorForm::Sum)?;
    let commutator = vlf.zip_with(&lvf, |a, b| a - b)?;

    let ux = d1(&p.u)?;
    let vt_f =
        p.u.zip_with(&ux, |u, d| 2.0 * u * d)?
            .zip_with(&f_proj, |vt, f| vt * f)?;

    let residual = vt_f.zip_with(&commutator, |a, b| a - b)?.sup_norm() / f_proj.sup_norm();
    Ok(LaxResidual {
        residual,
        removed_fraction,
        warning,
    })
}

/// Zero-mean antiderivative that tolerates the O(dx^2) mean left by
/// discretization instead of the strict round-off tolerance.
fn antiderivative_zero_mean_lenient(f: &GridFunction) -> Result<GridFunction> {
    let dx = f.grid().dx();
    crate::grid::antiderivative_with_tolerance(
        f,
        AntiderivativeConvention::ZeroMean,
        Accuracy::Second,
        10.0 * dx * dx,
    )
}

/// Interior sup-norms of K applied to the nested-antiderivative kernel
/// seeds, on a decaying-mode grid where the anchored antiderivative is
/// well-posed.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KernelSeedCheck {
    /// sup |K (u^2 d^-1 u^-2)| over the interior.
    pub g2_residual: f64,
    /// sup |K (u^2 d^-1 u^-2 d^-1 u^-2)| over the interior.
    pub g3_residual: f64,
    /// Points trimmed at each end: stacked one-sided stencils do not
    /// converge at the ends, so this is a partial, interior-only check.
    pub trimmed: usize,
}

/// Check the second and third kernel seeds of K. u^2 itself is in the
/// kernel of the factored form identically; the seeds involving d^-1
/// are only checked interiorly (one-sided closures of thrice-stacked
/// derivatives lose their order at the ends) and on a decaying grid,
/// where the anchored antiderivative needs no periodicity.
pub fn kernel_seed_check(p: &PotentialData) -> Result<KernelSeedCheck> {
    if p.grid().boundary() != BoundaryMode::Decaying {
        return Err(Error::RejectedInput(
            "kernel seeds use the anchored antiderivative; sample u on a decaying-mode grid".into(),
        ));
    }
    let trimmed = 8.min(p.grid().len() / 4);
    let inv_sq = p.u.map(|u| 1.0 / (u * u))?;
    let prim1 = antiderivative(
        &inv_sq,
        AntiderivativeConvention::AnchoredLeft,
        Accuracy::Second,
    )?;
    let g2 = p.u.zip_with(&prim1, |u, s| u * u * s)?;
    let inner = inv_sq.zip_with(&prim1, |a, b| a * b)?;
    let prim2 = antiderivative(
        &inner,
        AntiderivativeConvention::AnchoredLeft,
        Accuracy::Second,
    )?;
    let g3 = p.u.zip_with(&prim2, |u, s| u * u * s)?;

    let interior_sup = |f: &GridFunction| -> f64 {
        f.values()[trimmed..f.len() - trimmed]
            .iter()
            .fold(0.0_f64, |m, v| m.max(v.abs()))
    };
    let kg2 = apply_k(p, &g2, OperatorForm::Factored)?;
    let kg3 = apply_k(p, &g3, OperatorForm::Factored)?;
    Ok(KernelSeedCheck {
        g2_residual: interior_sup(&kg2),
        g3_residual: interior_sup(&kg3),
        trimmed,
    })
}

/// One named residual tracked across refinement levels.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RefinementSeries {
    pub name: String,
    pub residuals: Vec<f64>,
}

/// Operator certification report: every check at every refinement level,
/// plus the hierarchy audit at the finest level.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OperatorReport {
    pub schema: &'static str,
    pub levels: Vec<usize>,
    pub series: Vec<RefinementSeries>,
    pub hierarchy: HierarchyAudit,
    pub notes: Vec<String>,
}

pub const OPERATOR_SCHEMA: &str = "nkdv.operators/1";

fn trig_potential(n: usize) -> Result<PotentialData> {
    let grid = Grid::periodic(0.0, 2.0 * std::f64::consts::PI, n)?;
    PotentialData::from_u(GridFunction::from_fn(grid, |x| 2.0 + x.cos())?)
}

fn trig_test_function(grid: Grid) -> Result<GridFunction> {
    GridFunction::from_fn(grid, |x| {
        (2.0 * x).sin() + 0.3 * (3.0 * x).cos() + 0.1 * (5.0 * x).sin()
    })
}

fn dn_potential(n: usize) -> Result<(PotentialData, GridFunction)> {
    let params = TravelingWaveParams::new(-1.0, 1.0)?;
    let profile = WaveProfile::new(
        params,
        CaseId::Dn26,
        Branch::Plus,
        ProfileConstants::default().with_h(-0.125),
    )?;
    let period = profile.spatial_period().expect("dn is periodic");
    let grid = Grid::periodic(0.0, period, n)?;
    let mut u = Vec::with_capacity(n);
    for x in grid.points() {
        u.push(profile.eval(x)?);
    }
    let u = GridFunction::new(grid, u)?;
    // First Fourier mode, even about the profile peak at x = 0 so the
    // commutator's zero-mean constant vanishes by symmetry.
    let f = GridFunction::from_fn(grid, |x| (2.0 * std::f64::consts::PI * x / period).cos())?;
    Ok((PotentialData::from_u(u)?, f))
}

/// Run every operator check at `refinements` grid levels starting from
/// `base_n` points (doubling each level).
pub fn certification_report(base_n: usize, refinements: usize) -> Result<OperatorReport> {
    if refinements == 0 {
        return Err(Error::RejectedInput(
            "need at least one refinement level".into(),
        ));
    }
    let levels: Vec<usize> = (0..refinements).map(|k| base_n << k).collect();
    if *levels.last().unwrap() > MAX_EIGEN_N {
        return Err(Error::RejectedInput(format!(
            "finest level {} exceeds the dense-eigensolver cap {MAX_EIGEN_N}",
            levels.last().unwrap()
        )));
    }
    let mut l_diff = Vec::new();
    let mut k_diff = Vec::new();
    let mut k_u_sq = Vec::new();
    let mut g2 = Vec::new();
    let mut g3 = Vec::new();
    let mut lenard = Vec::new();
    let mut lax = Vec::new();
    for &n in &levels {
        let p = trig_potential(n)?;
        let f = trig_test_function(*p.grid())?;
        let diff = |a: &GridFunction, b: &GridFunction| -> Result<f64> {
            Ok(a.zip_with(b, |x, y| x - y)?.sup_norm() / f.sup_norm())
        };
        l_diff.push(diff(
            &apply_l(&p, &f, OperatorForm::Sum)?,
            &apply_l(&p, &f, OperatorForm::Factored)?,
        )?);
        k_diff.push(diff(
            &apply_k(&p, &f, OperatorForm::Sum)?,
            &apply_k(&p, &f, OperatorForm::Factored)?,
        )?);
        let u_sq = p.u().map(|u| u * u)?;
        k_u_sq.push(apply_k(&p, &u_sq, OperatorForm::Sum)?.sup_norm());

        let decay_grid = Grid::decaying(0.0, 2.0 * std::f64::consts::PI, n + 1)?;
        let pd = PotentialData::from_u(GridFunction::from_fn(decay_grid, |x| 2.0 + x.cos())?)?;
        let seeds = kernel_seed_check(&pd)?;
        g2.push(seeds.g2_residual);
        g3.push(seeds.g3_residual);

        let pairs = eigen_smallest(&p, 2)?;
        lenard.push(verify_lenard(&p, &pairs[0])?);

        let (pdn, fdn) = dn_potential(n)?;
        lax.push(lax_residual(&pdn, &fdn)?.residual);
    }
    // The coefficient audit needs a zero-mean potential (see its docs);
    // the documented closed-form case v = cos x is used at the finest
    // level.
    let finest = Grid::periodic(0.0, 2.0 * std::f64::consts::PI, *levels.last().unwrap())?;
    let cos_case = PotentialData::from_parts(
        GridFunction::constant(finest, 1.0)?,
        GridFunction::from_fn(finest, f64::cos)?,
    )?;
    let hierarchy = hierarchy_coefficient_audit(&cos_case)?;
    let series = vec![
        RefinementSeries {
            name: "L sum vs factored".into(),
            residuals: l_diff,
        },
        RefinementSeries {
            name: "K sum vs factored".into(),
            residuals: k_diff,
        },
        RefinementSeries {
            name: "K(u^2) kernel seed".into(),
            residuals: k_u_sq,
        },
        RefinementSeries {
            name: "K(u^2 d^-1 u^-2) kernel seed, interior".into(),
            residuals: g2,
        },
        RefinementSeries {
            name: "K(u^2 d^-1 u^-2 d^-1 u^-2) kernel seed, interior".into(),
            residuals: g3,
        },
        RefinementSeries {
            name: "Lenard eigenpair K(psi^2) - lambda (psi^2)'".into(),
            residuals: lenard,
        },
        RefinementSeries {
            name: "negative-flow commutator v_t f - [V, L] f".into(),
            residuals: lax,
        },
    ];
    Ok(OperatorReport {
        schema: OPERATOR_SCHEMA,
        levels,
        series,
        hierarchy,
        notes: vec![
            "nested-antiderivative kernel seeds are certified interior-only on a decaying grid (partial check)".into(),
            "all residuals use second-order stencils; each series should shrink ~4x per halving of dx".into(),
        ],
    })
}
