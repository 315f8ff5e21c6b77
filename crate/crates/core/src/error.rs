//! Error types shared by every module of the crate.

use thiserror::Error;

use crate::hamiltonian_ode::OdeState;

/// Errors produced by grid operations, solution constructors, integrators
/// and the PDE stepper.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// The input violates a documented precondition (wrong parameter
    /// regime, invalid order/accuracy combination, non-finite data, ...).
    #[error("rejected input: {0}")]
    RejectedInput(String),

    /// The inputs are individually valid but mutually inconsistent, e.g.
    /// a periodic zero-mean antiderivative of a function whose mean is
    /// not zero. The offending residual is reported.
    #[error("inconsistent input: {message} (residual mean {residual_mean:e})")]
    InconsistentInput { message: String, residual_mean: f64 },

    /// A quantity is mathematically infinite (K(k) at k = 1).
    #[error("divergent quantity: {0}")]
    DivergentQuantity(String),

    /// Evaluation was requested at (or within the guard distance of) a
    /// singular point of a wave profile.
    #[error("evaluation at singularity: nearest singular point xi = {nearest_xi}")]
    Singularity { nearest_xi: f64 },

    /// A trajectory left the overflow guard; the last state inside the
    /// guard is carried so callers can inspect the pre-blowup window.
    #[error("trajectory diverged after {steps_taken} steps at xi = {}", last_state.xi)]
    Divergence {
        last_state: OdeState,
        steps_taken: usize,
    },

    /// The simulated field dropped below its positivity floor.
    #[error("positivity loss at t = {t}: min(u) = {min_u:e} < {u_min:e}")]
    PositivityLoss { t: f64, min_u: f64, u_min: f64 },

    /// An iterative numerical procedure failed to converge.
    #[error("numeric failure: {0}")]
    NumericFailure(String),
}

pub type Result<T> = std::result::Result<T, Error>;
