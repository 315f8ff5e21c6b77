//! Closed-form traveling-wave families of (-u_xx/u)_t = 2 u u_x and the
//! residual audit that certifies them.
//!
//! Every profile U(xi) here solves the traveling-wave energy relation
//!
//! ```text
//! (U')^2 = 2h + g U^2 + U^4 / (2c)
//! ```
//!
//! on its orbit level h, which makes that relation an exact algebraic
//! oracle: substituting a correct formula gives a residual at round-off,
//! substituting a wrong one gives O(1). Two of the printed formulas in
//! circulation carry widths that fail this identity away from special
//! parameter values, so the sech and tanh families expose a
//! [`WidthVariant`] and the audit adjudicates both variants numerically
//! instead of silently picking one:
//!
//! * sech family: printed width sqrt(|c| g / 2) vs the identity-consistent
//!   sqrt(g) (they agree only at |c| = 2);
//! * tanh family: printed width 1/sqrt(2|g|) vs the identity-consistent
//!   sqrt(|g|/2) (they agree only at |g| = 1).
//!
//! Each profile carries analytic first and second derivatives so that
//! downstream consumers (samplers, simulators, integrators) never need
//! finite differences of the profile itself.

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::elliptic::{complete_k, jacobi, Modulus};
use crate::error::{Error, Result};
use crate::phase_plane::{quartic_roots, TravelingWaveParams};
use crate::report::{AuditEntry, AuditReport, Verdict, AUDIT_SCHEMA};

/// Identifier of a solution family. The numeric tags are stable API
/// names (they appear in CLI flags, JSON reports and serialized
/// portraits).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CaseId {
    #[serde(rename = "BREAKING_23")]
    Breaking23,
    #[serde(rename = "EXP_24")]
    Exp24,
    #[serde(rename = "SOLITON_25")]
    Soliton25,
    #[serde(rename = "DN_26")]
    Dn26,
    #[serde(rename = "CN_27")]
    Cn27,
    #[serde(rename = "KINK_28")]
    Kink28,
    #[serde(rename = "SN_29")]
    Sn29,
}

impl CaseId {
    /// Tag used in audit reports.
    pub fn equation_tag(self) -> &'static str {
        match self {
            CaseId::Breaking23 => "eq23",
            CaseId::Exp24 => "eq24",
            CaseId::Soliton25 => "eq25",
            CaseId::Dn26 => "eq26",
            CaseId::Cn27 => "eq27",
            CaseId::Kink28 => "eq28",
            CaseId::Sn29 => "eq29",
        }
    }

    pub fn cli_name(self) -> &'static str {
        match self {
            CaseId::Breaking23 => "breaking23",
            CaseId::Exp24 => "exp24",
            CaseId::Soliton25 => "soliton25",
            CaseId::Dn26 => "dn26",
            CaseId::Cn27 => "cn27",
            CaseId::Kink28 => "kink28",
            CaseId::Sn29 => "sn29",
        }
    }
}

impl FromStr for CaseId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "breaking23" => Ok(CaseId::Breaking23),
            "exp24" => Ok(CaseId::Exp24),
            "soliton25" => Ok(CaseId::Soliton25),
            "dn26" => Ok(CaseId::Dn26),
            "cn27" => Ok(CaseId::Cn27),
            "kink28" => Ok(CaseId::Kink28),
            "sn29" => Ok(CaseId::Sn29),
            other => Err(Error::RejectedInput(format!(
                "unknown solution case `{other}`"
            ))),
        }
    }
}

/// Sign branch of a family (most families come in +- pairs).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    Plus,
    Minus,
}

impl Branch {
    fn sign(self) -> f64 {
        match self {
            Branch::Plus => 1.0,
            Branch::Minus => -1.0,
        }
    }
}

/// Width selector for the sech and tanh families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WidthVariant {
    /// Width printed alongside the formulas: sqrt(|c| g / 2) for the
    /// sech family, 1/sqrt(2|g|) for the tanh family.
    Paper,
    /// Width required by the energy relation: sqrt(g), resp.
    /// sqrt(|g|/2). This is the default.
    #[default]
    Derived,
}

/// Free constants of a profile. `xi0` shifts every family; `a` is the
/// free constant of the exponential family; `h` is the orbit level of
/// the elliptic families; `width_variant` selects the sech/tanh width.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProfileConstants {
    pub xi0: f64,
    pub a: Option<f64>,
    pub h: Option<f64>,
    pub width_variant: WidthVariant,
}

impl Default for ProfileConstants {
    fn default() -> Self {
        ProfileConstants {
            xi0: 0.0,
            a: None,
            h: None,
            width_variant: WidthVariant::Derived,
        }
    }
}

impl ProfileConstants {
    pub fn with_xi0(mut self, xi0: f64) -> Self {
        self.xi0 = xi0;
        self
    }

    pub fn with_a(mut self, a: f64) -> Self {
        self.a = Some(a);
        self
    }

    pub fn with_h(mut self, h: f64) -> Self {
        self.h = Some(h);
        self
    }

    pub fn with_width_variant(mut self, v: WidthVariant) -> Self {
        self.width_variant = v;
        self
    }
}

/// Precomputed evaluator data per family.
#[derive(Debug, Clone, Copy, PartialEq)]
enum Form {
    /// U = -sign * sqrt(2c) / theta
    Breaking { amp: f64 },
    /// U = sign * 8Acg / (A^2 e^{s theta} - 8cg e^{-s theta})
    Exp {
        numerator: f64,
        a_sq: f64,
        coeff: f64,
        s: f64,
    },
    /// U = sign * amp * sech(width * theta)
    Soliton { amp: f64, width: f64 },
    /// U = sign * amp * dn(freq * theta, k)
    Dn { amp: f64, freq: f64, k: Modulus },
    /// U = sign * amp * cn(freq * theta, k)
    Cn { amp: f64, freq: f64, k: Modulus },
    /// U = sign * amp * tanh(width * theta)
    Kink { amp: f64, width: f64 },
    /// U = sign * amp * sn(freq * theta, k)
    Sn { amp: f64, freq: f64, k: Modulus },
}

/// An evaluatable traveling-wave profile with analytic derivatives.
#[derive(Debug, Clone, PartialEq)]
pub struct WaveProfile {
    params: TravelingWaveParams,
    case_id: CaseId,
    branch: Branch,
    constants: ProfileConstants,
    form: Form,
    singularities: Vec<f64>,
}

fn require(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::RejectedInput(format!(
            "parameter regime violated: requires {what}"
        )))
    }
}

impl WaveProfile {
    /// Construct a profile; rejects parameters outside the family's
    /// regime, naming the violated inequality.
    pub fn new(
        params: TravelingWaveParams,
        case_id: CaseId,
        branch: Branch,
        constants: ProfileConstants,
    ) -> Result<Self> {
        let (c, g) = (params.c, params.g);
        let h1 = params.h1();
        let (form, singularities) = match case_id {
            CaseId::Breaking23 => {
                require(c > 0.0, "c > 0")?;
                require(g == 0.0, "g = 0")?;
                (
                    Form::Breaking {
                        amp: (2.0 * c).sqrt(),
                    },
                    vec![-constants.xi0],
                )
            }
            CaseId::Exp24 => {
                require(c > 0.0, "c > 0")?;
                require(g > 0.0, "g > 0")?;
                let a = constants
                    .a
                    .ok_or_else(|| Error::RejectedInput("exp24 needs the constant A".into()))?;
                require(a != 0.0 && a.is_finite(), "A finite and nonzero")?;
                let s = g.sqrt();
                let coeff = 8.0 * c * g;
                // Denominator root: A^2 e^{2 s theta} = 8cg, real iff the
                // ratio is positive (always, in this regime).
                let mut sing = Vec::new();
                let ratio = coeff / (a * a);
                if ratio > 0.0 {
                    sing.push(ratio.ln() / (2.0 * s) - constants.xi0);
                }
                (
                    Form::Exp {
                        numerator: 8.0 * a * c * g,
                        a_sq: a * a,
                        coeff,
                        s,
                    },
                    sing,
                )
            }
            CaseId::Soliton25 => {
                require(c < 0.0, "c < 0")?;
                require(g > 0.0, "g > 0")?;
                let amp = (2.0 * c.abs() * g).sqrt();
                let width = match constants.width_variant {
                    WidthVariant::Derived => g.sqrt(),
                    WidthVariant::Paper => (c.abs() * g / 2.0).sqrt(),
                };
                (Form::Soliton { amp, width }, vec![])
            }
            CaseId::Dn26 => {
                require(c < 0.0, "c < 0")?;
                require(g > 0.0, "g > 0")?;
                let h = constants
                    .h
                    .ok_or_else(|| Error::RejectedInput("dn26 needs the level h".into()))?;
                require(h > h1 && h < 0.0, "h in (c g^2/4, 0)")?;
                let roots =
                    quartic_roots(params, h).expect("discriminant positive inside the dn window");
                let amp = roots.sq_plus.sqrt();
                let freq = amp / (2.0 * c.abs()).sqrt();
                let k = Modulus::new(((roots.sq_plus - roots.sq_minus) / roots.sq_plus).sqrt())?;
                (Form::Dn { amp, freq, k }, vec![])
            }
            CaseId::Cn27 => {
                require(c < 0.0, "c < 0")?;
                let h = constants
                    .h
                    .ok_or_else(|| Error::RejectedInput("cn27 needs the level h".into()))?;
                require(h > 0.0, "h > 0")?;
                let roots =
                    quartic_roots(params, h).expect("discriminant positive for h > 0, c < 0");
                let amp = roots.sq_plus.sqrt();
                let span = roots.sq_plus - roots.sq_minus;
                let freq = (span / (2.0 * c.abs())).sqrt();
                let k = Modulus::new((roots.sq_plus / span).sqrt())?;
                (Form::Cn { amp, freq, k }, vec![])
            }
            CaseId::Kink28 => {
                require(c > 0.0, "c > 0")?;
                require(g < 0.0, "g < 0")?;
                let amp = (c * g.abs()).sqrt();
                let width = match constants.width_variant {
                    WidthVariant::Derived => (g.abs() / 2.0).sqrt(),
                    WidthVariant::Paper => (2.0 * g.abs()).sqrt().recip(),
                };
                (Form::Kink { amp, width }, vec![])
            }
            CaseId::Sn29 => {
                require(c > 0.0, "c > 0")?;
                require(g < 0.0, "g < 0")?;
                let h = constants
                    .h
                    .ok_or_else(|| Error::RejectedInput("sn29 needs the level h".into()))?;
                require(h > 0.0 && h < h1, "h in (0, c g^2/4)")?;
                let roots =
                    quartic_roots(params, h).expect("discriminant positive inside the sn window");
                let z1 = roots.sq_plus.sqrt();
                let amp = roots.sq_minus.sqrt();
                let freq = z1 / (2.0 * c).sqrt();
                let k = Modulus::new(amp / z1)?;
                (Form::Sn { amp, freq, k }, vec![])
            }
        };
        Ok(WaveProfile {
            params,
            case_id,
            branch,
            constants,
            form,
            singularities,
        })
    }

    pub fn params(&self) -> TravelingWaveParams {
        self.params
    }

    pub fn case_id(&self) -> CaseId {
        self.case_id
    }

    pub fn branch(&self) -> Branch {
        self.branch
    }

    pub fn constants(&self) -> ProfileConstants {
        self.constants
    }

    /// Singular points in xi, in increasing order.
    pub fn singularities(&self) -> &[f64] {
        &self.singularities
    }

    /// Orbit level of the energy relation this profile lives on.
    pub fn orbit_level(&self) -> f64 {
        match self.case_id {
            CaseId::Breaking23 | CaseId::Exp24 | CaseId::Soliton25 => 0.0,
            CaseId::Kink28 => self.params.h1(),
            CaseId::Dn26 | CaseId::Cn27 | CaseId::Sn29 => {
                self.constants.h.expect("elliptic profiles store h")
            }
        }
    }

    /// Spatial period for the periodic families, `None` otherwise.
    pub fn spatial_period(&self) -> Option<f64> {
        match self.form {
            Form::Dn { freq, k, .. } => Some(2.0 * complete_k(k).expect("k < 1 in regime") / freq),
            Form::Cn { freq, k, .. } | Form::Sn { freq, k, .. } => {
                Some(4.0 * complete_k(k).expect("k < 1 in regime") / freq)
            }
            _ => None,
        }
    }

    fn default_guard(&self, s: f64) -> f64 {
        10.0 * f64::EPSILON * s.abs().max(1.0)
    }

    fn check_singularity(&self, xi: f64, guard: f64) -> Result<()> {
        for &s in &self.singularities {
            let dist = (xi - s).abs();
            if dist <= guard.max(self.default_guard(s)) {
                return Err(Error::Singularity { nearest_xi: s });
            }
        }
        Ok(())
    }

    /// U, U', U'' at `xi`, rejecting points within `guard` of a singular
    /// point (grid samplers pass dx/2).
    pub fn eval_all_with_guard(&self, xi: f64, guard: f64) -> Result<(f64, f64, f64)> {
        if !xi.is_finite() {
            return Err(Error::RejectedInput(format!("non-finite xi {xi}")));
        }
        self.check_singularity(xi, guard)?;
        let sign = self.branch.sign();
        let theta = xi + self.constants.xi0;
        let out = match self.form {
            Form::Breaking { amp } => {
                let u = -sign * amp / theta;
                (
                    u,
                    sign * amp / (theta * theta),
                    -2.0 * sign * amp / theta.powi(3),
                )
            }
            Form::Exp {
                numerator,
                a_sq,
                coeff,
                s,
            } => {
                let ep = (s * theta).exp();
                let em = (-s * theta).exp();
                let d = a_sq * ep - coeff * em;
                let dp = s * (a_sq * ep + coeff * em);
                let u = sign * numerator / d;
                let du = -sign * numerator * dp / (d * d);
                let ddu = -sign * numerator * (s * s * d * d - 2.0 * dp * dp) / d.powi(3);
                (u, du, ddu)
            }
            Form::Soliton { amp, width } => {
                let e = (width * theta).cosh().recip();
                let t = (width * theta).tanh();
                (
                    sign * amp * e,
                    -sign * amp * width * e * t,
                    sign * amp * width * width * e * (t * t - e * e),
                )
            }
            Form::Dn { amp, freq, k } => {
                let j = jacobi(freq * theta, k)?;
                let ksq = k.parameter();
                (
                    sign * amp * j.dn,
                    -sign * amp * freq * ksq * j.sn * j.cn,
                    -sign * amp * freq * freq * ksq * j.dn * (j.cn * j.cn - j.sn * j.sn),
                )
            }
            Form::Cn { amp, freq, k } => {
                let j = jacobi(freq * theta, k)?;
                let ksq = k.parameter();
                (
                    sign * amp * j.cn,
                    -sign * amp * freq * j.sn * j.dn,
                    -sign * amp * freq * freq * j.cn * (j.dn * j.dn - ksq * j.sn * j.sn),
                )
            }
            Form::Kink { amp, width } => {
                let e = (width * theta).cosh().recip();
                let t = (width * theta).tanh();
                (
                    sign * amp * t,
                    sign * amp * width * e * e,
                    -2.0 * sign * amp * width * width * e * e * t,
                )
            }
            Form::Sn { amp, freq, k } => {
                let j = jacobi(freq * theta, k)?;
                let ksq = k.parameter();
                (
                    sign * amp * j.sn,
                    sign * amp * freq * j.cn * j.dn,
                    -sign * amp * freq * freq * j.sn * (j.dn * j.dn + ksq * j.cn * j.cn),
                )
            }
        };
        Ok(out)
    }

    pub fn eval_all(&self, xi: f64) -> Result<(f64, f64, f64)> {
        self.eval_all_with_guard(xi, 0.0)
    }

    pub fn eval(&self, xi: f64) -> Result<f64> {
        Ok(self.eval_all(xi)?.0)
    }

    pub fn eval_d1(&self, xi: f64) -> Result<f64> {
        Ok(self.eval_all(xi)?.1)
    }

    pub fn eval_d2(&self, xi: f64) -> Result<f64> {
        Ok(self.eval_all(xi)?.2)
    }

    /// Representative in-domain sample points: one full period for the
    /// periodic families, a multi-width window for the localized ones,
    /// and singularity-avoiding windows for the unbounded ones.
    pub fn default_samples(&self, count: usize) -> Vec<f64> {
        let count = count.max(2);
        let lin = |lo: f64, hi: f64| -> Vec<f64> {
            (0..count)
                .map(|i| lo + (hi - lo) * i as f64 / (count - 1) as f64)
                .collect()
        };
        match self.form {
            Form::Breaking { .. } | Form::Exp { .. } => {
                let s = self.singularities.first().copied().unwrap_or(0.0);
                let mut pts = lin(s - 6.0, s - 0.5);
                pts.extend(lin(s + 0.5, s + 6.0));
                pts
            }
            Form::Soliton { width, .. } | Form::Kink { width, .. } => {
                lin(-6.0 / width, 6.0 / width)
            }
            Form::Dn { .. } | Form::Cn { .. } | Form::Sn { .. } => {
                let t = self.spatial_period().expect("periodic family");
                lin(-0.5 * t, 0.5 * t)
            }
        }
    }
}

/// Residuals of one profile against the governing equation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OdeResidual {
    /// max |c (U''/U)' - 2 U U'| with the outer derivative by central
    /// differences (carries the O(delta^2) differencing error).
    pub pde_form: f64,
    /// max |(U')^2 - 2h - g U^2 - U^4/(2c)|, pure algebra.
    pub level_set: f64,
    /// Samples skipped because they sat on a singularity or a zero of U.
    pub skipped: usize,
}

/// Evaluate both residual forms of a profile over the given samples.
pub fn ode_residual(profile: &WaveProfile, xi_samples: &[f64]) -> OdeResidual {
    const DELTA: f64 = 1e-4;
    let p = profile.params();
    let h = profile.orbit_level();
    let mut pde_form = 0.0_f64;
    let mut level_set = 0.0_f64;
    let mut skipped = 0;
    for &xi in xi_samples {
        let vals = match profile.eval_all_with_guard(xi, DELTA) {
            Ok(v) => v,
            Err(_) => {
                skipped += 1;
                continue;
            }
        };
        let (u, du, _) = vals;
        let algebraic = du * du - 2.0 * h - p.g * u * u - u.powi(4) / (2.0 * p.c);
        level_set = level_set.max(algebraic.abs());

        // c (U''/U)' - 2 U U', with q = U''/U differenced across xi.
        let scale = profile
            .eval(0.0)
            .map(|v| v.abs())
            .unwrap_or(1.0)
            .max(u.abs());
        if u.abs() < 1e-8 * scale.max(1.0) {
            skipped += 1;
            continue;
        }
        let plus = profile.eval_all_with_guard(xi + DELTA, 0.0);
        let minus = profile.eval_all_with_guard(xi - DELTA, 0.0);
        match (plus, minus) {
            (Ok((up, _, ddup)), Ok((um, _, ddum))) if up.abs() > 0.0 && um.abs() > 0.0 => {
                let q_plus = ddup / up;
                let q_minus = ddum / um;
                let resid = p.c * (q_plus - q_minus) / (2.0 * DELTA) - 2.0 * u * du;
                pde_form = pde_form.max(resid.abs());
            }
            _ => skipped += 1,
        }
    }
    OdeResidual {
        pde_form,
        level_set,
        skipped,
    }
}

/// Residual below which an audit entry counts as passing.
pub const AUDIT_PASS_TOL: f64 = 1e-8;

const AUDIT_SAMPLE_COUNT: usize = 200;

fn audit_entry(profile: &WaveProfile, variant: &str) -> AuditEntry {
    let res = ode_residual(profile, &profile.default_samples(AUDIT_SAMPLE_COUNT));
    AuditEntry {
        equation: profile.case_id().equation_tag().to_string(),
        c: Some(profile.params().c),
        g: Some(profile.params().g),
        h: profile.constants().h,
        variant: variant.to_string(),
        residual: res.level_set,
        verdict: Verdict::from_residual(res.level_set, AUDIT_PASS_TOL),
    }
}

/// Substitute every family that fits each parameter point into the
/// energy relation and tabulate the residuals. Width-variant families
/// contribute one entry per variant; the exponential family is exercised
/// at both signs of its free constant.
pub fn audit_all(regime_samples: &[TravelingWaveParams]) -> AuditReport {
    let mut entries = Vec::new();
    for &p in regime_samples {
        let (c, g) = (p.c, p.g);
        let h1 = p.h1();
        if c > 0.0 && g == 0.0 {
            let prof = WaveProfile::new(
                p,
                CaseId::Breaking23,
                Branch::Minus,
                ProfileConstants::default(),
            )
            .expect("regime checked");
            entries.push(audit_entry(&prof, "printed"));
        } else if c > 0.0 && g > 0.0 {
            for (a, tag) in [
                (1.3 * (8.0 * c * g).sqrt(), "printed A>0"),
                (-0.6 * (8.0 * c * g).sqrt(), "printed A<0"),
            ] {
                let prof = WaveProfile::new(
                    p,
                    CaseId::Exp24,
                    Branch::Plus,
                    ProfileConstants::default().with_a(a),
                )
                .expect("regime checked");
                entries.push(audit_entry(&prof, tag));
            }
        } else if c < 0.0 && g > 0.0 {
            for variant in [WidthVariant::Paper, WidthVariant::Derived] {
                let prof = WaveProfile::new(
                    p,
                    CaseId::Soliton25,
                    Branch::Plus,
                    ProfileConstants::default().with_width_variant(variant),
                )
                .expect("regime checked");
                let tag = match variant {
                    WidthVariant::Paper => "paper",
                    WidthVariant::Derived => "derived",
                };
                entries.push(audit_entry(&prof, tag));
            }
            let dn = WaveProfile::new(
                p,
                CaseId::Dn26,
                Branch::Plus,
                ProfileConstants::default().with_h(h1 / 2.0),
            )
            .expect("regime checked");
            entries.push(audit_entry(&dn, "printed"));
            let cn = WaveProfile::new(
                p,
                CaseId::Cn27,
                Branch::Plus,
                ProfileConstants::default().with_h(0.4 * (1.0 + h1.abs())),
            )
            .expect("regime checked");
            entries.push(audit_entry(&cn, "printed"));
        } else if c < 0.0 {
            let cn = WaveProfile::new(
                p,
                CaseId::Cn27,
                Branch::Plus,
                ProfileConstants::default().with_h(0.4 * (1.0 + h1.abs())),
            )
            .expect("regime checked");
            entries.push(audit_entry(&cn, "printed"));
        } else {
            for variant in [WidthVariant::Paper, WidthVariant::Derived] {
                let prof = WaveProfile::new(
                    p,
                    CaseId::Kink28,
                    Branch::Plus,
                    ProfileConstants::default().with_width_variant(variant),
                )
                .expect("regime checked");
                let tag = match variant {
                    WidthVariant::Paper => "paper",
                    WidthVariant::Derived => "derived",
                };
                entries.push(audit_entry(&prof, tag));
            }
            let sn = WaveProfile::new(
                p,
                CaseId::Sn29,
                Branch::Plus,
                ProfileConstants::default().with_h(h1 / 2.0),
            )
            .expect("regime checked");
            entries.push(audit_entry(&sn, "printed"));
        }
    }

    // Flag printed widths that fail where the derived width passes at
    // the same parameter point.
    let mut flags = Vec::new();
    for e in entries
        .iter()
        .filter(|e| e.variant == "paper" && e.verdict == Verdict::Fail)
    {
        let fixed = entries.iter().any(|d| {
            d.equation == e.equation
                && d.variant == "derived"
                && d.c == e.c
                && d.g == e.g
                && d.verdict == Verdict::Pass
        });
        if fixed {
            flags.push(format!(
                "{} printed width fails the energy relation at c={}, g={} (residual {:.3e}) while the derived width passes",
                e.equation,
                e.c.unwrap(),
                e.g.unwrap(),
                e.residual
            ));
        }
    }

    AuditReport {
        schema: AUDIT_SCHEMA,
        entries,
        flags,
        notes: vec![
            "eq27 is normalized to the capitalized profile symbol; eq29's amplitude symbol is normalized to z2".into(),
            "the level factorizations use U^2 = -cg +- sqrt(c^2 g^2 - 4 c h) derived from the energy function; printed radical forms with |c| inside differ by a sign convention".into(),
            "the sech width sqrt(|c|g/2) coincides with the derived sqrt(g) only at |c| = 2; the tanh width 1/sqrt(2|g|) coincides with sqrt(|g|/2) only at |g| = 1".into(),
        ],
    }
}

/// Deterministic parameter points covering all six sign regimes,
/// `per_regime` points each, suitable for [`audit_all`]. Magnitudes stay
/// in [0.3, 2.3] so the algebraic residuals remain well scaled.
pub fn default_regime_samples(per_regime: usize, seed: u64) -> Vec<TravelingWaveParams> {
    // Small deterministic generator (splitmix64) so the default report
    // is reproducible without pulling an RNG dependency into the crate.
    let mut state = seed.wrapping_add(0x9e3779b97f4a7c15);
    let mut next = move || {
        state = state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z = z ^ (z >> 31);
        0.3 + 2.0 * (z >> 11) as f64 / (1u64 << 53) as f64
    };
    let mut out = Vec::new();
    for _ in 0..per_regime {
        for (sc, sg) in [
            (1.0, 0.0),
            (1.0, 1.0),
            (-1.0, 1.0),
            (-1.0, 0.0),
            (-1.0, -1.0),
            (1.0, -1.0),
        ] {
            let c = sc * next();
            let g = if sg == 0.0 { 0.0 } else { sg * next() };
            out.push(TravelingWaveParams::new(c, g).expect("c drawn nonzero"));
        }
    }
    // The tanh-width disagreement is invisible at |g| = 1, so pin one
    // point with |g| far from 1 in the kink regime.
    out.push(TravelingWaveParams::new(1.0, -4.0).expect("valid"));
    out
}
