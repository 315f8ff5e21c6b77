//! Traveling-wave solutions and numerical certification of the
//! negative-order KdV equation
//!
//! ```text
//! (-u_xx / u)_t = 2 u u_x.
//! ```
//!
//! The crate classifies the traveling-wave phase plane over the
//! (wave speed, integration constant) parameter plane, constructs every
//! explicit solution family (rational breaking waves, exponential
//! saddle-level profiles, sech solitons, tanh kinks, and dn/cn/sn
//! elliptic waves), and certifies the surrounding integrable structure
//! numerically: operator factorizations, the squared-eigenfunction
//! recursion, hierarchy coefficients, and the negative-flow commutator
//! identity, all on discretized data with measured convergence orders.
//!
//! Modules:
//!
//! * [`grid`] - finite-difference calculus on uniform grids;
//! * [`elliptic`] - Jacobi sn/cn/dn and the complete integral K;
//! * [`phase_plane`] - equilibria, energy levels, orbit families;
//! * [`closed_form`] - the solution families plus the formula audit;
//! * [`hamiltonian_ode`] - symplectic integration of the wave ODE;
//! * [`operator_lab`] - operator identities on grid data;
//! * [`pde_sim`] - method-of-lines evolution of the flow itself;
//! * [`report`] - shared audit-report shapes.

pub mod closed_form;
pub mod elliptic;
pub mod error;
pub mod grid;
pub mod hamiltonian_ode;
pub mod operator_lab;
pub mod pde_sim;
pub mod phase_plane;
pub mod report;

pub use error::{Error, Result};
