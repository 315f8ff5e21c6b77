//! Phase-plane classification of the traveling-wave system
//!
//! ```text
//! dU/dxi = y,    dy/dxi = g U + U^3 / c,
//! H(U, y) = y^2/2 - g U^2/2 - U^4/(4c),
//! ```
//!
//! the reduction of (-u_xx/u)_t = 2 u u_x under u(x, t) = U(x - c t).
//! For each admissible (c, g) this module reports the equilibria with
//! their linearization types, the energy levels h0 = 0 and
//! h1 = c g^2 / 4, the orbit-family inventory, and the portrait panel id.
//!
//! On a level set H = h the turning points solve the biquadratic
//! U^4 + 2 c g U^2 + 4 c h = 0, so U^2 = -c g +- sqrt(c^2 g^2 - 4 c h).
//! One of the two signed squares may be negative (the cn-type families);
//! they are stored as real "signed squares" and no square root of a
//! negative quantity is ever taken.

use serde::{Deserialize, Serialize};

use crate::closed_form::CaseId;
use crate::error::{Error, Result};

pub const PORTRAIT_SCHEMA: &str = "nkdv.portrait/1";

/// Wave speed c and integration constant g of the traveling-wave
/// reduction. The reduction requires c != 0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TravelingWaveParams {
    pub c: f64,
    pub g: f64,
}

impl TravelingWaveParams {
    pub fn new(c: f64, g: f64) -> Result<Self> {
        if !c.is_finite() || !g.is_finite() {
            return Err(Error::RejectedInput(format!(
                "parameters must be finite, got c={c}, g={g}"
            )));
        }
        if c == 0.0 {
            return Err(Error::RejectedInput("wave speed c must be nonzero".into()));
        }
        Ok(TravelingWaveParams { c, g })
    }

    /// Right-hand side of the traveling-wave system at (U, y).
    pub fn vector_field(&self, u: f64, y: f64) -> (f64, f64) {
        (y, self.g * u + u * u * u / self.c)
    }

    /// Energy of the saddle/center ring h1 = c g^2 / 4, meaningful when
    /// c g < 0 (three equilibria).
    pub fn h1(&self) -> f64 {
        self.c * self.g * self.g / 4.0
    }
}

/// H(U, y) = y^2/2 - g U^2/2 - U^4/(4c).
pub fn hamiltonian(params: TravelingWaveParams, u: f64, y: f64) -> f64 {
    0.5 * y * y - 0.5 * params.g * u * u - u.powi(4) / (4.0 * params.c)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EquilibriumKind {
    Saddle,
    Center,
    /// Zero linearization with inconclusive level-set structure. The
    /// g = 0 origin is nilpotent but its level sets decide saddle/center,
    /// so classification never actually emits this.
    Degenerate,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Equilibrium {
    pub u: f64,
    pub y: f64,
    pub kind: EquilibriumKind,
}

/// Portrait panel in the (c, g) parameter plane.
#[allow(non_camel_case_types)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Panel {
    F1_1,
    F1_2,
    F1_3,
    F1_4,
    F1_5,
    F1_6,
}

/// Orbit families that carry explicit solutions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrbitKind {
    UnboundedBreaking,
    SaddleLevelExponential,
    HomoclinicSoliton,
    PeriodicDn,
    PeriodicCnOuter,
    HeteroclinicKink,
    PeriodicSnInner,
}

/// Signed squares of the biquadratic turning-point equation
/// U^2 = -c g +- sqrt(c^2 g^2 - 4 c h). `sq_plus` takes the plus sign.
/// These are the (r1^2, r2^2) pair for c < 0 and the (z1^2, z2^2) pair
/// for c > 0, g < 0; `sq_minus` may legitimately be negative.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuarticRoots {
    pub sq_plus: f64,
    pub sq_minus: f64,
}

/// Signed squares of the level-h turning points, or `None` when the
/// discriminant c^2 g^2 - 4 c h is negative and no real factorization
/// exists.
pub fn quartic_roots(params: TravelingWaveParams, h: f64) -> Option<QuarticRoots> {
    let disc = params.c * params.c * params.g * params.g - 4.0 * params.c * h;
    if disc < 0.0 {
        return None;
    }
    let s = disc.sqrt();
    Some(QuarticRoots {
        sq_plus: -params.c * params.g + s,
        sq_minus: -params.c * params.g - s,
    })
}

/// One orbit family of a portrait: its kind, the (open) energy interval
/// it fills (`h_max = None` means unbounded above), the solution family
/// realizing it, and, when produced by [`orbit_for_level`], the signed
/// squares of the turning points at that particular level.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrbitFamily {
    pub kind: OrbitKind,
    pub h_min: f64,
    pub h_max: Option<f64>,
    pub solution_case: CaseId,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub roots: Option<QuarticRoots>,
}

impl OrbitFamily {
    fn new(kind: OrbitKind, h_min: f64, h_max: Option<f64>, solution_case: CaseId) -> Self {
        OrbitFamily {
            kind,
            h_min,
            h_max,
            solution_case,
            roots: None,
        }
    }
}

/// Full classification of the traveling-wave system at one (c, g).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PhasePortrait {
    pub schema: &'static str,
    #[serde(flatten)]
    pub params: TravelingWaveParams,
    pub h0: f64,
    /// Present exactly when c g < 0 (three equilibria).
    pub h1: Option<f64>,
    pub panel: Panel,
    pub equilibria: Vec<Equilibrium>,
    pub families: Vec<OrbitFamily>,
}

fn panel_for(params: TravelingWaveParams) -> Panel {
    match (params.g, params.c) {
        (g, c) if g == 0.0 && c > 0.0 => Panel::F1_1,
        (g, c) if g > 0.0 && c > 0.0 => Panel::F1_2,
        (g, c) if g > 0.0 && c < 0.0 => Panel::F1_3,
        (g, c) if g == 0.0 && c < 0.0 => Panel::F1_4,
        (g, c) if g < 0.0 && c < 0.0 => Panel::F1_5,
        _ => Panel::F1_6,
    }
}

fn equilibria_for(params: TravelingWaveParams) -> Vec<Equilibrium> {
    let (c, g) = (params.c, params.g);
    // Linearization at (U*, 0): eigenvalues +-sqrt(g + 3 U*^2 / c).
    // Origin: +-sqrt(g). Ring U*^2 = |cg|: +-sqrt(-2g).
    let origin_kind = if g > 0.0 {
        EquilibriumKind::Saddle
    } else if g < 0.0 {
        EquilibriumKind::Center
    } else {
        // Nilpotent linearization; the zero level set decides. For c > 0
        // it carries the open orbits y = +-U^2/sqrt(2c) through the
        // origin (saddle-like); for c < 0 the origin is isolated in its
        // level (center-like).
        if c > 0.0 {
            EquilibriumKind::Saddle
        } else {
            EquilibriumKind::Center
        }
    };
    let mut eq = Vec::new();
    if c * g < 0.0 {
        let ring = (c * g).abs().sqrt();
        let ring_kind = if g > 0.0 {
            EquilibriumKind::Center
        } else {
            EquilibriumKind::Saddle
        };
        eq.push(Equilibrium {
            u: -ring,
            y: 0.0,
            kind: ring_kind,
        });
        eq.push(Equilibrium {
            u: 0.0,
            y: 0.0,
            kind: origin_kind,
        });
        eq.push(Equilibrium {
            u: ring,
            y: 0.0,
            kind: ring_kind,
        });
    } else {
        eq.push(Equilibrium {
            u: 0.0,
            y: 0.0,
            kind: origin_kind,
        });
    }
    eq
}

fn families_for(params: TravelingWaveParams) -> Vec<OrbitFamily> {
    let (c, g) = (params.c, params.g);
    let h1 = params.h1();
    if c > 0.0 && g == 0.0 {
        vec![OrbitFamily::new(
            OrbitKind::UnboundedBreaking,
            0.0,
            Some(0.0),
            CaseId::Breaking23,
        )]
    } else if c > 0.0 && g > 0.0 {
        vec![OrbitFamily::new(
            OrbitKind::SaddleLevelExponential,
            0.0,
            Some(0.0),
            CaseId::Exp24,
        )]
    } else if c < 0.0 && g > 0.0 {
        vec![
            OrbitFamily::new(
                OrbitKind::HomoclinicSoliton,
                0.0,
                Some(0.0),
                CaseId::Soliton25,
            ),
            OrbitFamily::new(OrbitKind::PeriodicDn, h1, Some(0.0), CaseId::Dn26),
            OrbitFamily::new(OrbitKind::PeriodicCnOuter, 0.0, None, CaseId::Cn27),
        ]
    } else if c < 0.0 {
        vec![OrbitFamily::new(
            OrbitKind::PeriodicCnOuter,
            0.0,
            None,
            CaseId::Cn27,
        )]
    } else {
        vec![
            OrbitFamily::new(OrbitKind::HeteroclinicKink, h1, Some(h1), CaseId::Kink28),
            OrbitFamily::new(OrbitKind::PeriodicSnInner, 0.0, Some(h1), CaseId::Sn29),
        ]
    }
}

/// Classify the system at (c, g): equilibria, energy levels, panel and
/// orbit-family inventory.
pub fn classify(params: TravelingWaveParams) -> PhasePortrait {
    let h1 = (params.c * params.g < 0.0).then(|| params.h1());
    PhasePortrait {
        schema: PORTRAIT_SCHEMA,
        params,
        h0: 0.0,
        h1,
        panel: panel_for(params),
        equilibria: equilibria_for(params),
        families: families_for(params),
    }
}

/// The orbit family containing the level H = h, with the signed squares
/// of its turning points attached, or `None` when the level carries no
/// catalogued family (empty level, bare equilibria, or an unbounded
/// level outside the inventory).
pub fn orbit_for_level(params: TravelingWaveParams, h: f64) -> Option<OrbitFamily> {
    let (c, g) = (params.c, params.g);
    let h1 = params.h1();
    let with_roots = |mut fam: OrbitFamily| {
        fam.roots = quartic_roots(params, h);
        fam
    };
    if c > 0.0 && g == 0.0 {
        return (h == 0.0).then(|| {
            OrbitFamily::new(
                OrbitKind::UnboundedBreaking,
                0.0,
                Some(0.0),
                CaseId::Breaking23,
            )
        });
    }
    if c > 0.0 && g > 0.0 {
        return (h == 0.0).then(|| {
            OrbitFamily::new(
                OrbitKind::SaddleLevelExponential,
                0.0,
                Some(0.0),
                CaseId::Exp24,
            )
        });
    }
    if c < 0.0 && g > 0.0 {
        if h == 0.0 {
            return Some(with_roots(OrbitFamily::new(
                OrbitKind::HomoclinicSoliton,
                0.0,
                Some(0.0),
                CaseId::Soliton25,
            )));
        }
        if h > h1 && h < 0.0 {
            return Some(with_roots(OrbitFamily::new(
                OrbitKind::PeriodicDn,
                h1,
                Some(0.0),
                CaseId::Dn26,
            )));
        }
        if h > 0.0 {
            return Some(with_roots(OrbitFamily::new(
                OrbitKind::PeriodicCnOuter,
                0.0,
                None,
                CaseId::Cn27,
            )));
        }
        return None; // h = h1 is the bare center pair, h < h1 is empty
    }
    if c < 0.0 {
        return (h > 0.0).then(|| {
            with_roots(OrbitFamily::new(
                OrbitKind::PeriodicCnOuter,
                0.0,
                None,
                CaseId::Cn27,
            ))
        });
    }
    // c > 0, g < 0
    if h == h1 {
        return Some(with_roots(OrbitFamily::new(
            OrbitKind::HeteroclinicKink,
            h1,
            Some(h1),
            CaseId::Kink28,
        )));
    }
    if h > 0.0 && h < h1 {
        return Some(with_roots(OrbitFamily::new(
            OrbitKind::PeriodicSnInner,
            0.0,
            Some(h1),
            CaseId::Sn29,
        )));
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(c: f64, g: f64) -> TravelingWaveParams {
        TravelingWaveParams::new(c, g).unwrap()
    }

    #[test]
    fn zero_wave_speed_rejected() {
        assert!(TravelingWaveParams::new(0.0, 1.0).is_err());
    }

    #[test]
    fn hamiltonian_reference_values() {
        assert_eq!(hamiltonian(params(1.0, 1.0), 0.0, 0.0), 0.0);
        // H(1, 0) at c = -1, g = 1 equals c g^2 / 4 = -1/4.
        let p = params(-1.0, 1.0);
        assert!((hamiltonian(p, 1.0, 0.0) + 0.25).abs() < 1e-15);
        assert!((hamiltonian(p, 1.0, 0.0) - p.h1()).abs() < 1e-15);
        // Direct substitution at c = 2, g = 0: 1/2 - 1/8 = 3/8.
        assert!((hamiltonian(params(2.0, 0.0), 1.0, 1.0) - 0.375).abs() < 1e-15);
    }

    #[test]
    fn case1_portrait() {
        let p = classify(params(1.0, 0.0));
        assert_eq!(p.panel, Panel::F1_1);
        assert_eq!(p.equilibria.len(), 1);
        assert_eq!(p.equilibria[0].kind, EquilibriumKind::Saddle);
        assert_eq!(p.h0, 0.0);
        assert!(p.h1.is_none());
        assert_eq!(p.families.len(), 1);
        assert_eq!(p.families[0].kind, OrbitKind::UnboundedBreaking);
        assert_eq!(p.families[0].h_min, 0.0);
    }

    #[test]
    fn case3_portrait() {
        let p = classify(params(-1.0, 1.0));
        assert_eq!(p.panel, Panel::F1_3);
        assert_eq!(p.equilibria.len(), 3);
        assert_eq!(p.equilibria[1].kind, EquilibriumKind::Saddle); // origin
        assert_eq!(p.equilibria[0].kind, EquilibriumKind::Center);
        assert_eq!(p.equilibria[2].kind, EquilibriumKind::Center);
        assert!((p.h1.unwrap() + 0.25).abs() < 1e-15);
        let kinds: Vec<_> = p.families.iter().map(|f| f.kind).collect();
        assert_eq!(
            kinds,
            vec![
                OrbitKind::HomoclinicSoliton,
                OrbitKind::PeriodicDn,
                OrbitKind::PeriodicCnOuter
            ]
        );
        let dn = &p.families[1];
        assert!((dn.h_min + 0.25).abs() < 1e-15);
        assert_eq!(dn.h_max, Some(0.0));
        assert!(p.families[2].h_max.is_none());
    }

    #[test]
    fn case5_portrait() {
        let p = classify(params(1.0, -1.0));
        assert_eq!(p.panel, Panel::F1_6);
        assert_eq!(p.equilibria.len(), 3);
        assert_eq!(p.equilibria[1].kind, EquilibriumKind::Center);
        assert_eq!(p.equilibria[0].kind, EquilibriumKind::Saddle);
        assert_eq!(p.equilibria[2].kind, EquilibriumKind::Saddle);
        assert!((p.h1.unwrap() - 0.25).abs() < 1e-15);
        let kinds: Vec<_> = p.families.iter().map(|f| f.kind).collect();
        assert_eq!(
            kinds,
            vec![OrbitKind::HeteroclinicKink, OrbitKind::PeriodicSnInner]
        );
    }

    #[test]
    fn case4_portraits_reuse_cn_family() {
        for g in [0.0, -0.7] {
            let p = classify(params(-2.0, g));
            assert_eq!(p.equilibria.len(), 1);
            assert_eq!(p.equilibria[0].kind, EquilibriumKind::Center);
            assert_eq!(p.families.len(), 1);
            assert_eq!(p.families[0].kind, OrbitKind::PeriodicCnOuter);
            assert_eq!(p.families[0].solution_case, CaseId::Cn27);
        }
        assert_eq!(classify(params(-2.0, 0.0)).panel, Panel::F1_4);
        assert_eq!(classify(params(-2.0, -0.7)).panel, Panel::F1_5);
    }

    #[test]
    fn vector_field_vanishes_at_equilibria() {
        for (c, g) in [
            (1.0, 0.0),
            (2.0, 3.0),
            (-1.0, 1.0),
            (1.0, -1.0),
            (-0.5, -2.0),
        ] {
            let p = params(c, g);
            for eq in classify(p).equilibria {
                let (du, dy) = p.vector_field(eq.u, eq.y);
                assert!(
                    du.abs() < 1e-13 && dy.abs() < 1e-13,
                    "({c},{g}) at U={}",
                    eq.u
                );
            }
        }
    }

    #[test]
    fn orbit_levels_case3() {
        let p = params(-1.0, 1.0);
        assert_eq!(
            orbit_for_level(p, 0.0).unwrap().kind,
            OrbitKind::HomoclinicSoliton
        );
        let dn = orbit_for_level(p, -0.125).unwrap();
        assert_eq!(dn.kind, OrbitKind::PeriodicDn);
        let roots = dn.roots.unwrap();
        // 1 +- sqrt(1/2), frozen from the turning-point equation.
        assert!((roots.sq_plus - 1.707_106_781_186_547_5).abs() < 1e-14);
        assert!((roots.sq_minus - 0.292_893_218_813_452_4).abs() < 1e-14);
        // The factorization reproduces y^2 from the energy relation.
        for i in 0..10 {
            let u = roots.sq_minus.sqrt()
                + (roots.sq_plus.sqrt() - roots.sq_minus.sqrt()) * (i as f64 + 0.5) / 10.0;
            let y_sq_level = 2.0 * (-0.125) + p.g * u * u + u.powi(4) / (2.0 * p.c);
            let y_sq_roots = (roots.sq_plus - u * u) * (u * u - roots.sq_minus) / (2.0 * p.c.abs());
            assert!((y_sq_level - y_sq_roots).abs() < 1e-14);
        }
        assert_eq!(
            orbit_for_level(p, 1.3).unwrap().kind,
            OrbitKind::PeriodicCnOuter
        );
        assert!(orbit_for_level(p, p.h1()).is_none());
        assert!(orbit_for_level(p, -5.0).is_none());
    }

    #[test]
    fn orbit_levels_case5() {
        let p = params(1.0, -1.0);
        assert_eq!(
            orbit_for_level(p, 0.25).unwrap().kind,
            OrbitKind::HeteroclinicKink
        );
        let sn = orbit_for_level(p, 0.125).unwrap();
        assert_eq!(sn.kind, OrbitKind::PeriodicSnInner);
        let roots = sn.roots.unwrap();
        assert!((roots.sq_plus + roots.sq_minus - 2.0 * p.c * p.g.abs()).abs() < 1e-13);
        assert!((roots.sq_plus * roots.sq_minus - 4.0 * p.c * 0.125).abs() < 1e-13);
        assert!(orbit_for_level(p, 0.0).is_none());
        assert!(orbit_for_level(p, 0.4).is_none());
    }

    #[test]
    fn cn_levels_store_signed_squares() {
        let fam = orbit_for_level(params(-1.0, 1.0), 0.5).unwrap();
        let roots = fam.roots.unwrap();
        assert!(roots.sq_plus > 0.0 && roots.sq_minus < 0.0);
    }

    #[test]
    fn panel_is_scale_invariant() {
        for (c, g) in [
            (1.0, 0.0),
            (1.0, 2.0),
            (-1.0, 2.0),
            (-1.0, 0.0),
            (-3.0, -1.0),
            (0.5, -0.2),
        ] {
            let base = panel_for(params(c, g));
            for lambda in [0.25, 3.0, 117.0] {
                assert_eq!(panel_for(params(lambda * c, lambda * g)), base);
            }
        }
    }

    #[test]
    fn portrait_json_shape() {
        let json = serde_json::to_value(classify(params(-1.0, 1.0))).unwrap();
        for field in [
            "schema",
            "c",
            "g",
            "h0",
            "h1",
            "panel",
            "equilibria",
            "families",
        ] {
            assert!(json.get(field).is_some(), "missing field {field}");
        }
        assert_eq!(json["panel"], "F1_3");
        assert_eq!(json["equilibria"].as_array().unwrap().len(), 3);
    }
}
