//! Jacobi elliptic functions sn, cn, dn and the complete elliptic
//! integral K(k).
//!
//! Everything is expressed in the modulus k, not the parameter m = k^2;
//! [`Modulus::from_parameter`] converts. K(k) uses the arithmetic-
//! geometric mean, which converges quadratically to machine precision.
//! The triple (sn, cn, dn) is evaluated by a descending Landen/AGM
//! ladder with a backward recurrence on dn; arguments within 1e-12 of
//! k = 1 are routed to the hyperbolic degenerate forms to avoid
//! cancellation in 1 - k^2.

use crate::error::{Error, Result};

/// Hard cap on AGM iterations. Quadratic convergence reaches machine
/// epsilon in well under 10 steps for any k < 1.
const AGM_MAX_ITER: usize = 64;

/// Moduli closer to 1 than this are degenerate for all practical
/// purposes and handled by the k = 1 hyperbolic formulas.
const NEAR_ONE: f64 = 1e-12;

/// Elliptic modulus k in [0, 1].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Modulus(f64);

impl Modulus {
    pub fn new(k: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&k) {
            return Err(Error::RejectedInput(format!(
                "modulus must lie in [0, 1], got {k}"
            )));
        }
        Ok(Modulus(k))
    }

    /// Build from the parameter m = k^2.
    pub fn from_parameter(m: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&m) {
            return Err(Error::RejectedInput(format!(
                "parameter must lie in [0, 1], got {m}"
            )));
        }
        Ok(Modulus(m.sqrt()))
    }

    pub fn k(self) -> f64 {
        self.0
    }

    /// The parameter m = k^2.
    pub fn parameter(self) -> f64 {
        self.0 * self.0
    }

    /// Complementary parameter 1 - k^2, computed as (1-k)(1+k) to keep
    /// accuracy near k = 1.
    pub fn complementary_parameter(self) -> f64 {
        (1.0 - self.0) * (1.0 + self.0)
    }
}

/// The values sn(x, k), cn(x, k), dn(x, k).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiValues {
    pub sn: f64,
    pub cn: f64,
    pub dn: f64,
}

/// Complete elliptic integral of the first kind, K(k) = pi / (2 agm(1, k')).
///
/// Relative error is at machine-epsilon level for k bounded away from 1;
/// k = 1 is rejected because K diverges there.
pub fn complete_k(k: Modulus) -> Result<f64> {
    if k.k() >= 1.0 {
        return Err(Error::DivergentQuantity("K(k) diverges as k -> 1".into()));
    }
    let mut a = 1.0_f64;
    let mut b = k.complementary_parameter().sqrt();
    for _ in 0..AGM_MAX_ITER {
        if (a - b).abs() <= f64::EPSILON * a {
            break;
        }
        let an = 0.5 * (a + b);
        b = (a * b).sqrt();
        a = an;
    }
    Ok(std::f64::consts::FRAC_PI_2 / a)
}

/// Simultaneous sn, cn, dn at real argument `x`.
pub fn jacobi(x: f64, k: Modulus) -> Result<JacobiValues> {
    if !x.is_finite() {
        return Err(Error::RejectedInput(format!("non-finite argument {x}")));
    }
    if k.k() == 0.0 {
        return Ok(JacobiValues {
            sn: x.sin(),
            cn: x.cos(),
            dn: 1.0,
        });
    }
    if 1.0 - k.k() < NEAR_ONE {
        let sech = x.cosh().recip();
        return Ok(JacobiValues {
            sn: x.tanh(),
            cn: sech,
            dn: sech,
        });
    }
    Ok(sncndn(x, k.complementary_parameter()))
}

/// AGM ladder with backward recurrence on dn (the `sncndn` scheme).
/// `emc` is the complementary parameter 1 - k^2, here always in (0, 1).
fn sncndn(x: f64, emc: f64) -> JacobiValues {
    // Tolerance on the AGM gap; the achieved accuracy is its square.
    const CA: f64 = 1.0e-8;

    let mut emc = emc;
    let mut a = 1.0_f64;
    let mut dn = 1.0_f64;
    let mut em = [0.0_f64; AGM_MAX_ITER];
    let mut en = [0.0_f64; AGM_MAX_ITER];
    let mut c = 0.0_f64;
    let mut l = 0;
    for i in 0..AGM_MAX_ITER {
        l = i;
        em[i] = a;
        emc = emc.sqrt();
        en[i] = emc;
        c = 0.5 * (a + emc);
        if (a - emc).abs() <= CA * a {
            break;
        }
        emc *= a;
        a = c;
    }

    let u = c * x;
    let mut sn = u.sin();
    let mut cn = u.cos();
    if sn.abs() > 0.0 {
        let mut aa = cn / sn;
        c *= aa;
        for i in (0..=l).rev() {
            let b = em[i];
            aa *= c;
            c *= dn;
            dn = (en[i] + aa) / (b + aa);
            aa = c / b;
        }
        let norm = 1.0 / (c * c + 1.0).sqrt();
        sn = if sn >= 0.0 { norm } else { -norm };
        cn = c * sn;
    }
    JacobiValues { sn, cn, dn }
}
