//! Method-of-lines evolution of (-u_xx/u)_t = 2 u u_x for strictly
//! positive fields.
//!
//! Writing w = u_t, the equation is linear in w:
//!
//! ```text
//! u w_xx - u_xx w = -2 u^3 u_x,
//! ```
//!
//! and the left side is an exact derivative, (u w_x - u_x w)'. One
//! integration gives F(x) = u w_x - u_x w = F0 - (u^4(x) - u^4(x0))/2,
//! a second gives w = u (c0 + int_{x0}^x F/u^2). Each time step
//! therefore solves the reconstruction exactly in integral form and
//! advances u with classical RK4; only the two integration constants
//! need closing:
//!
//! * decaying closure: F0 = -u^4(x0)/2, so F = -u^4/2 and the integrand
//!   F/u^2 = -u^2/2 vanishes in both tails (no division by u at all);
//! * periodic closure: F0 is chosen so the full-circle integral of
//!   F/u^2 vanishes, making w periodic (here 1/u^2 appears, hence the
//!   strict positivity floor).
//!
//! The remaining constant c0 is gauge: adding a multiple of u to u_t
//! leaves m = -u_xx/u unchanged. It is fixed either by conserving the
//! integral of u^2 or by anchoring w to zero at the maximum of u.
//! Sign-changing waves (kink, sn, cn) are outside this evolution path;
//! they are covered by [`residual_check`] on analytic samples only.

use serde::{Deserialize, Serialize};

use crate::closed_form::{Branch, CaseId, ProfileConstants, WaveProfile};
use crate::error::{Error, Result};
use crate::grid::{
    antiderivative, derivative, integrate, Accuracy, AntiderivativeConvention, BoundaryMode, Grid,
    GridFunction,
};
use crate::phase_plane::TravelingWaveParams;

/// Default positivity floor for periodic closure (1/u^2 appears).
pub const DEFAULT_U_MIN_PERIODIC: f64 = 1e-6;

/// Decaying closure divides by nothing, so only strict positivity is
/// required; the tail-truncation rule pins the boundary scale instead.
pub const DEFAULT_U_MIN_DECAYING: f64 = 0.0;

/// Decaying grids must truncate where the tails have fallen below this
/// fraction of the maximum.
pub const TAIL_FRACTION: f64 = 1e-10;

/// Gauge rule fixing the free multiple of u in u_t.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Gauge {
    /// Pick c0 so that d/dt int u^2 = 0.
    ConserveL2,
    /// c0 = 0 with the anchor x0 at the grid maximum of u.
    Anchored,
}

/// Simulation state: a strictly positive field on a grid whose boundary
/// mode doubles as the closure rule.
#[derive(Debug, Clone, PartialEq)]
pub struct SimState {
    u: GridFunction,
    t: f64,
    gauge: Gauge,
    u_min: f64,
}

impl SimState {
    /// Validates positivity and, for decaying closure, the tail rule
    /// max(endpoint u) <= TAIL_FRACTION * max(u).
    pub fn new(u: GridFunction, t: f64, gauge: Gauge, u_min: Option<f64>) -> Result<Self> {
        let u_min = u_min.unwrap_or(match u.grid().boundary() {
            BoundaryMode::Periodic => DEFAULT_U_MIN_PERIODIC,
            BoundaryMode::Decaying => DEFAULT_U_MIN_DECAYING,
        });
        if u.min() <= 0.0 || u.min() < u_min {
            return Err(Error::RejectedInput(format!(
                "u must be strictly positive with min >= {u_min:e}, got min {:e}",
                u.min()
            )));
        }
        if u.grid().boundary() == BoundaryMode::Decaying {
            let max = u.sup_norm();
            let tail = u.values()[0].abs().max(u.values()[u.len() - 1].abs());
            if tail > TAIL_FRACTION * max {
                return Err(Error::RejectedInput(format!(
                    "decaying closure requires tails below {TAIL_FRACTION:e} of max(u); boundary value {tail:e} vs max {max:e}"
                )));
            }
        }
        Ok(SimState { u, t, gauge, u_min })
    }

    pub fn u(&self) -> &GridFunction {
        &self.u
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn gauge(&self) -> Gauge {
        self.gauge
    }

    pub fn u_min(&self) -> f64 {
        self.u_min
    }

    pub fn closure(&self) -> BoundaryMode {
        self.u.grid().boundary()
    }

    pub fn grid(&self) -> &Grid {
        self.u.grid()
    }

    fn with_field(&self, u: GridFunction, t: f64) -> SimState {
        SimState {
            u,
            t,
            gauge: self.gauge,
            u_min: self.u_min,
        }
    }
}

fn check_positivity(state: &SimState, u: &GridFunction, t: f64) -> Result<()> {
    let min_u = u.min();
    if min_u < state.u_min || min_u <= 0.0 {
        return Err(Error::PositivityLoss {
            t,
            min_u,
            u_min: state.u_min,
        });
    }
    Ok(())
}

fn reconstruct_w(state: &SimState, u: &GridFunction) -> Result<GridFunction> {
    let grid = *u.grid();
    // Integrand F/u^2 per closure; the decaying form never divides by u.
    let integrand = match grid.boundary() {
        BoundaryMode::Decaying => u.map(|u| -0.5 * u * u)?,
        BoundaryMode::Periodic => {
            let u_sq = u.map(|u| u * u)?;
            let inv_sq = u.map(|u| (u * u).recip())?;
            let c1 = 0.5 * integrate(&u_sq) / integrate(&inv_sq);
            u.map(|u| c1 / (u * u) - 0.5 * u * u)?
        }
    };
    let raw = antiderivative(
        &integrand,
        AntiderivativeConvention::AnchoredLeft,
        Accuracy::Second,
    )?;
    let i0 = u.argmax();
    let at_anchor = raw.values()[i0];
    let g = raw.map(|v| v - at_anchor)?;
    let c0 = match state.gauge {
        Gauge::Anchored => 0.0,
        Gauge::ConserveL2 => {
            let u_sq = u.map(|u| u * u)?;
            let weighted = u_sq.zip_with(&g, |a, b| a * b)?;
            -integrate(&weighted) / integrate(&u_sq)
        }
    };
    u.zip_with(&g, |u, g| u * (c0 + g))
}

/// u_t reconstructed from the current field.
pub fn time_derivative(state: &SimState) -> Result<GridFunction> {
    check_positivity(state, &state.u, state.t)?;
    reconstruct_w(state, &state.u)
}

/// One classical RK4 step of size `dt` (capped at dx for stability);
/// positivity is re-checked at every stage.
pub fn step(state: &SimState, dt: f64) -> Result<SimState> {
    if dt <= 0.0 || !dt.is_finite() {
        return Err(Error::RejectedInput(format!(
            "time step must be positive, got {dt}"
        )));
    }
    let dt_max = state.grid().dx();
    if dt > dt_max * (1.0 + 1e-12) {
        return Err(Error::RejectedInput(format!(
            "time step {dt} exceeds the stability bound dt <= dx = {dt_max}"
        )));
    }
    let u0 = &state.u;
    check_positivity(state, u0, state.t)?;
    let stage = |u: &GridFunction, shift: &GridFunction, factor: f64| -> Result<GridFunction> {
        u.zip_with(shift, |u, s| u + factor * s)
    };
    let k1 = reconstruct_w(state, u0)?;
    let u1 = stage(u0, &k1, 0.5 * dt)?;
    check_positivity(state, &u1, state.t + 0.5 * dt)?;
    let k2 = reconstruct_w(state, &u1)?;
    let u2 = stage(u0, &k2, 0.5 * dt)?;
    check_positivity(state, &u2, state.t + 0.5 * dt)?;
    let k3 = reconstruct_w(state, &u2)?;
    let u3 = stage(u0, &k3, dt)?;
    check_positivity(state, &u3, state.t + dt)?;
    let k4 = reconstruct_w(state, &u3)?;
    let mut vals = Vec::with_capacity(u0.len());
    for i in 0..u0.len() {
        vals.push(
            u0.values()[i]
                + dt / 6.0
                    * (k1.values()[i]
                        + 2.0 * k2.values()[i]
                        + 2.0 * k3.values()[i]
                        + k4.values()[i]),
        );
    }
    let u_new = GridFunction::new(*state.grid(), vals)?;
    let t_new = state.t + dt;
    check_positivity(state, &u_new, t_new)?;
    Ok(state.with_field(u_new, t_new))
}

/// The field m = -u_xx/u carried by a slice.
pub fn m_field(u: &GridFunction) -> Result<GridFunction> {
    derivative(u, 2, Accuracy::Second)?.zip_with(u, |num, den| -num / den)
}

/// State diagnostics: the conserved integral of u^2, the positivity
/// margin, and the m field.
#[derive(Debug, Clone, PartialEq)]
pub struct Diagnostics {
    pub l2: f64,
    pub min_u: f64,
    pub m_field: GridFunction,
}

pub fn diagnostics(state: &SimState) -> Result<Diagnostics> {
    Ok(Diagnostics {
        l2: integrate(&state.u.map(|u| u * u)?),
        min_u: state.u.min(),
        m_field: m_field(&state.u)?,
    })
}

/// Fraction of max|u| below which points are skipped in
/// [`residual_check`] (the m field is a 0/0 limit at zeros of u).
pub const RESIDUAL_SKIP_FRACTION: f64 = 0.05;

/// Max interior residual |(-u_xx/u)_t - 2 u u_x| over equally spaced
/// time slices, centered differences in t and x. Points where any of
/// the three participating slices is within [`RESIDUAL_SKIP_FRACTION`]
/// of zero are skipped, so sign-changing analytic samples can be
/// checked too.
pub fn residual_check(slices: &[GridFunction], dt: f64) -> Result<f64> {
    if slices.len() < 3 {
        return Err(Error::RejectedInput(format!(
            "need at least 3 time slices, got {}",
            slices.len()
        )));
    }
    if dt <= 0.0 || !dt.is_finite() {
        return Err(Error::RejectedInput(format!(
            "slice spacing must be positive, got {dt}"
        )));
    }
    let grid = *slices[0].grid();
    for s in slices {
        if *s.grid() != grid {
            return Err(Error::RejectedInput(
                "all slices must share one grid".into(),
            ));
        }
    }
    let ms: Vec<GridFunction> = slices
        .iter()
        .map(|u| {
            let uxx = derivative(u, 2, Accuracy::Second)?;
            // leave skipped points as zeros; they are masked below
            let floor = RESIDUAL_SKIP_FRACTION * u.sup_norm();
            uxx.zip_with(
                u,
                |num, den| if den.abs() < floor { 0.0 } else { -num / den },
            )
        })
        .collect::<Result<_>>()?;
    let mut worst = 0.0_f64;
    for j in 1..slices.len() - 1 {
        let u = &slices[j];
        let ux = derivative(u, 1, Accuracy::Second)?;
        let floor_prev = RESIDUAL_SKIP_FRACTION * slices[j - 1].sup_norm();
        let floor_mid = RESIDUAL_SKIP_FRACTION * u.sup_norm();
        let floor_next = RESIDUAL_SKIP_FRACTION * slices[j + 1].sup_norm();
        for i in 0..grid.len() {
            if slices[j - 1].values()[i].abs() < floor_prev
                || u.values()[i].abs() < floor_mid
                || slices[j + 1].values()[i].abs() < floor_next
            {
                continue;
            }
            let dm = (ms[j + 1].values()[i] - ms[j - 1].values()[i]) / (2.0 * dt);
            let rhs = 2.0 * u.values()[i] * ux.values()[i];
            worst = worst.max((dm - rhs).abs());
        }
    }
    Ok(worst)
}

/// Run configuration, deserialized from JSON. Unknown fields are
/// rejected.
#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct SimConfig {
    /// Initial profile family: only the strictly positive families
    /// (`soliton25`, `dn26`) can be evolved.
    pub case: String,
    pub c: f64,
    pub g: f64,
    #[serde(default)]
    pub h: Option<f64>,
    pub grid: GridSpec,
    pub closure: BoundaryMode,
    pub gauge: Gauge,
    pub dt: f64,
    pub t_end: f64,
    pub output_every: usize,
}

#[derive(Debug, Clone, Copy, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct GridSpec {
    pub x0: f64,
    pub dx: f64,
    pub n: usize,
}

/// JSON summary of a finished run.
#[derive(Debug, Clone, Serialize)]
pub struct SimSummary {
    pub schema: &'static str,
    pub final_error_vs_translate: f64,
    pub l2_drift: f64,
    pub min_u: f64,
}

pub const SUMMARY_SCHEMA: &str = "nkdv.sim-summary/1";

/// A finished run: recorded slices and the summary.
#[derive(Debug, Clone)]
pub struct SimRun {
    pub times: Vec<f64>,
    pub slices: Vec<GridFunction>,
    pub summary: SimSummary,
}

impl SimRun {
    /// CSV of all recorded slices: columns t, x, u, m.
    pub fn slices_to_csv(&self) -> Result<String> {
        let mut out = String::from("# schema: nkdv.sim-slices/1\nt,x,u,m\n");
        for (t, u) in self.times.iter().zip(&self.slices) {
            let m = m_field(u)?;
            for (i, x) in u.grid().points().enumerate() {
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    t,
                    x,
                    u.values()[i],
                    m.values()[i]
                ));
            }
        }
        Ok(out)
    }
}

/// Build the initial profile named by the config (derived-width, plus
/// branch) and return it with its parameters.
pub fn initial_profile(config: &SimConfig) -> Result<WaveProfile> {
    let params = TravelingWaveParams::new(config.c, config.g)?;
    let case: CaseId = config.case.parse()?;
    match case {
        CaseId::Soliton25 | CaseId::Dn26 => {}
        other => {
            return Err(Error::RejectedInput(format!(
                "case {} cannot be evolved: the integral-form reconstruction needs u of one sign and bounded",
                other.cli_name()
            )))
        }
    }
    let mut constants = ProfileConstants::default();
    if let Some(h) = config.h {
        constants = constants.with_h(h);
    }
    WaveProfile::new(params, case, Branch::Plus, constants)
}

/// Evolve the configured profile to t_end, recording every
/// `output_every` steps (plus the initial and final slices). The step
/// size is adjusted so an integer number of steps lands exactly on
/// t_end.
pub fn run_simulation(config: &SimConfig) -> Result<SimRun> {
    let profile = initial_profile(config)?;
    let grid = Grid::new(
        config.grid.x0,
        config.grid.dx,
        config.grid.n,
        config.closure,
    )?;
    let mut u0 = Vec::with_capacity(grid.len());
    for x in grid.points() {
        u0.push(profile.eval(x)?);
    }
    let state0 = SimState::new(GridFunction::new(grid, u0)?, 0.0, config.gauge, None)?;

    let steps = (config.t_end / config.dt).round().max(1.0) as usize;
    let dt = config.t_end / steps as f64;
    let every = config.output_every.max(1);

    let l2_initial = integrate(&state0.u().map(|u| u * u)?);
    let mut min_u = state0.u().min();
    let mut times = vec![0.0];
    let mut slices = vec![state0.u().clone()];
    let mut state = state0;
    for i in 0..steps {
        state = step(&state, dt)?;
        min_u = min_u.min(state.u().min());
        if (i + 1) % every == 0 || i + 1 == steps {
            times.push(state.t());
            slices.push(state.u().clone());
        }
    }

    let c = config.c;
    let t_end = state.t();
    let mut final_error = 0.0_f64;
    for (i, x) in grid.points().enumerate() {
        let exact = profile.eval(x - c * t_end)?;
        final_error = final_error.max((state.u().values()[i] - exact).abs());
    }
    let l2_final = integrate(&state.u().map(|u| u * u)?);
    Ok(SimRun {
        times,
        slices,
        summary: SimSummary {
            schema: SUMMARY_SCHEMA,
            final_error_vs_translate: final_error,
            l2_drift: (l2_final - l2_initial).abs() / l2_initial,
            min_u,
        },
    })
}
