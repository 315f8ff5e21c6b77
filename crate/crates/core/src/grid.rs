//! Discrete calculus on uniform 1-D grids.
//!
//! Derivatives are stencil applications with weights generated by
//! Fornberg's algorithm, so central and one-sided closures share one code
//! path at a guaranteed order of accuracy. Antiderivatives are cumulative
//! quadrature (trapezoid at second order, a Gregory-corrected rule at
//! fourth order). Periodic grids wrap; decaying grids use one-sided
//! stencils of matching order at the ends.
//!
//! Everything here is a pure function of its inputs; `Grid` and
//! `GridFunction` are immutable after construction.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Boundary handling for a grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundaryMode {
    /// The interval has length `n * dx`, the right endpoint is excluded,
    /// and all indices wrap.
    Periodic,
    /// The field is assumed negligible beyond the endpoints; one-sided
    /// stencils close the derivative there.
    Decaying,
}

/// Finite-difference accuracy order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Accuracy {
    Second,
    Fourth,
}

impl Accuracy {
    pub fn order(self) -> usize {
        match self {
            Accuracy::Second => 2,
            Accuracy::Fourth => 4,
        }
    }
}

/// Anchoring convention for the discrete antiderivative.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AntiderivativeConvention {
    /// F(x0) = 0.
    AnchoredLeft,
    /// The mean of F over the grid is zero. On periodic grids this
    /// requires the input itself to have (numerically) zero mean.
    ZeroMean,
}

/// Default tolerance factor for the zero-mean precondition on periodic
/// grids: `|mean(f)| <= DEFAULT_ZERO_MEAN_TOL * max|f|`.
pub const DEFAULT_ZERO_MEAN_TOL: f64 = 1e-10;

/// A uniform 1-D grid.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    x0: f64,
    dx: f64,
    n: usize,
    boundary: BoundaryMode,
}

impl Grid {
    pub fn new(x0: f64, dx: f64, n: usize, boundary: BoundaryMode) -> Result<Self> {
        if !x0.is_finite() || !dx.is_finite() {
            return Err(Error::RejectedInput("grid endpoints must be finite".into()));
        }
        if dx <= 0.0 {
            return Err(Error::RejectedInput(format!(
                "grid spacing must be positive, got {dx}"
            )));
        }
        if n < 8 {
            return Err(Error::RejectedInput(format!(
                "grid needs at least 8 points, got {n}"
            )));
        }
        Ok(Grid {
            x0,
            dx,
            n,
            boundary,
        })
    }

    /// Periodic grid covering `[x0, x0 + length)` with `n` points.
    pub fn periodic(x0: f64, length: f64, n: usize) -> Result<Self> {
        Grid::new(x0, length / n as f64, n, BoundaryMode::Periodic)
    }

    /// Decaying grid covering `[x0, x1]` inclusively with `n` points.
    pub fn decaying(x0: f64, x1: f64, n: usize) -> Result<Self> {
        Grid::new(x0, (x1 - x0) / (n - 1) as f64, n, BoundaryMode::Decaying)
    }

    pub fn x0(&self) -> f64 {
        self.x0
    }

    pub fn dx(&self) -> f64 {
        self.dx
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn boundary(&self) -> BoundaryMode {
        self.boundary
    }

    pub fn point(&self, i: usize) -> f64 {
        self.x0 + i as f64 * self.dx
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n).map(|i| self.point(i))
    }

    /// Interval length: `n*dx` periodic (right endpoint excluded),
    /// `(n-1)*dx` decaying.
    pub fn length(&self) -> f64 {
        match self.boundary {
            BoundaryMode::Periodic => self.n as f64 * self.dx,
            BoundaryMode::Decaying => (self.n - 1) as f64 * self.dx,
        }
    }
}

/// A real field sampled on a [`Grid`].
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction {
    grid: Grid,
    values: Vec<f64>,
}

impl GridFunction {
    pub fn new(grid: Grid, values: Vec<f64>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::RejectedInput(format!(
                "value count {} does not match grid size {}",
                values.len(),
                grid.len()
            )));
        }
        if let Some(bad) = values.iter().find(|v| !v.is_finite()) {
            return Err(Error::RejectedInput(format!("non-finite sample {bad}")));
        }
        Ok(GridFunction { grid, values })
    }

    pub fn from_fn(grid: Grid, f: impl Fn(f64) -> f64) -> Result<Self> {
        let values = grid.points().map(f).collect();
        GridFunction::new(grid, values)
    }

    pub fn constant(grid: Grid, value: f64) -> Result<Self> {
        GridFunction::new(grid, vec![value; grid.len()])
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn sup_norm(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn min(&self) -> f64 {
        self.values.iter().fold(f64::INFINITY, |m, &v| m.min(v))
    }

    /// Index of the largest sample.
    pub fn argmax(&self) -> usize {
        let mut best = 0;
        for (i, &v) in self.values.iter().enumerate() {
            if v > self.values[best] {
                best = i;
            }
        }
        best
    }

    pub fn map(&self, f: impl Fn(f64) -> f64) -> Result<GridFunction> {
        GridFunction::new(self.grid, self.values.iter().map(|&v| f(v)).collect())
    }

    pub fn zip_with(
        &self,
        other: &GridFunction,
        f: impl Fn(f64, f64) -> f64,
    ) -> Result<GridFunction> {
        if self.grid != other.grid {
            return Err(Error::RejectedInput(
                "grid mismatch in pointwise combination".into(),
            ));
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(&a, &b)| f(a, b))
            .collect();
        GridFunction::new(self.grid, values)
    }
}

/// Fornberg weights for the m-th derivative at `xbar` given `nodes`.
///
/// Returns one weight per node. Nodes are in physical units; the weights
/// carry the 1/dx^m scaling implicitly.
fn fd_weights(xbar: f64, nodes: &[f64], m: usize) -> Vec<f64> {
    let n = nodes.len();
    let mut delta = vec![vec![0.0_f64; n]; m + 1];
    delta[0][0] = 1.0;
    let mut c1 = 1.0;
    let mut c4 = nodes[0] - xbar;
    for i in 1..n {
        let mn = i.min(m);
        let mut c2 = 1.0;
        let c5 = c4;
        c4 = nodes[i] - xbar;
        for j in 0..i {
            let c3 = nodes[i] - nodes[j];
            c2 *= c3;
            if j == i - 1 {
                for k in (1..=mn).rev() {
                    delta[k][i] = c1 * (k as f64 * delta[k - 1][i - 1] - c5 * delta[k][i - 1]) / c2;
                }
                delta[0][i] = -c1 * c5 * delta[0][i - 1] / c2;
            }
            for k in (1..=mn).rev() {
                delta[k][j] = (c4 * delta[k][j] - k as f64 * delta[k - 1][j]) / c3;
            }
            delta[0][j] = c4 * delta[0][j] / c3;
        }
        c1 = c2;
    }
    delta.swap_remove(m)
}

/// Central stencil half-width for (derivative order, accuracy).
fn central_half_width(order: usize, accuracy: Accuracy) -> usize {
    match (order, accuracy) {
        (1, Accuracy::Second) | (2, Accuracy::Second) => 1,
        (3, Accuracy::Second) | (1, Accuracy::Fourth) | (2, Accuracy::Fourth) => 2,
        (3, Accuracy::Fourth) => 3,
        _ => unreachable!("order validated before stencil selection"),
    }
}

/// One-sided stencil length achieving the requested order at a boundary.
fn one_sided_len(order: usize, accuracy: Accuracy) -> usize {
    order + accuracy.order()
}

/// Finite-difference derivative of the requested order and accuracy.
///
/// Periodic grids wrap; decaying grids switch to one-sided stencils of
/// the same accuracy near the ends.
pub fn derivative(f: &GridFunction, order: usize, accuracy: Accuracy) -> Result<GridFunction> {
    if !(1..=3).contains(&order) {
        return Err(Error::RejectedInput(format!(
            "derivative order must be 1, 2 or 3, got {order}"
        )));
    }
    let grid = *f.grid();
    let n = grid.len();
    let w = central_half_width(order, accuracy);
    let side = one_sided_len(order, accuracy);
    if n < side.max(2 * w + 1) {
        return Err(Error::RejectedInput(format!(
            "grid too small ({n} points) for order-{order} stencil"
        )));
    }
    let scale = grid.dx().powi(order as i32).recip();
    let offsets: Vec<f64> = (-(w as isize)..=w as isize).map(|k| k as f64).collect();
    let central: Vec<f64> = fd_weights(0.0, &offsets, order);

    let vals = f.values();
    let mut out = vec![0.0_f64; n];
    match grid.boundary() {
        BoundaryMode::Periodic => {
            for (i, slot) in out.iter_mut().enumerate() {
                let mut acc = 0.0;
                for (k, &c) in central.iter().enumerate() {
                    let j = (i + n + k - w) % n;
                    acc += c * vals[j];
                }
                *slot = acc * scale;
            }
        }
        BoundaryMode::Decaying => {
            let side_nodes: Vec<f64> = (0..side).map(|k| k as f64).collect();
            for i in 0..n {
                if i >= w && i + w < n {
                    let mut acc = 0.0;
                    for (k, &c) in central.iter().enumerate() {
                        acc += c * vals[i + k - w];
                    }
                    out[i] = acc * scale;
                } else if i < w {
                    let weights = fd_weights(i as f64, &side_nodes, order);
                    let mut acc = 0.0;
                    for (k, &c) in weights.iter().enumerate() {
                        acc += c * vals[k];
                    }
                    out[i] = acc * scale;
                } else {
                    let base = n - side;
                    let weights = fd_weights((i - base) as f64, &side_nodes, order);
                    let mut acc = 0.0;
                    for (k, &c) in weights.iter().enumerate() {
                        acc += c * vals[base + k];
                    }
                    out[i] = acc * scale;
                }
            }
        }
    }
    GridFunction::new(grid, out)
}

/// Integral of one grid segment `[x_i, x_{i+1}]`. The fourth-order rule is
/// the Gregory-corrected trapezoid; near the ends of a decaying grid it
/// falls back to the one-sided variants of the same order.
fn segment_integral(
    vals: &[f64],
    i: usize,
    dx: f64,
    accuracy: Accuracy,
    boundary: BoundaryMode,
) -> f64 {
    let n = vals.len();
    match accuracy {
        Accuracy::Second => dx * (vals[i] + vals[(i + 1) % n]) / 2.0,
        Accuracy::Fourth => match boundary {
            BoundaryMode::Periodic => {
                let im1 = (i + n - 1) % n;
                let ip1 = (i + 1) % n;
                let ip2 = (i + 2) % n;
                dx * (-vals[im1] + 13.0 * vals[i] + 13.0 * vals[ip1] - vals[ip2]) / 24.0
            }
            BoundaryMode::Decaying => {
                if i == 0 {
                    dx * (9.0 * vals[0] + 19.0 * vals[1] - 5.0 * vals[2] + vals[3]) / 24.0
                } else if i + 2 >= n {
                    dx * (9.0 * vals[n - 1] + 19.0 * vals[n - 2] - 5.0 * vals[n - 3] + vals[n - 4])
                        / 24.0
                } else {
                    dx * (-vals[i - 1] + 13.0 * vals[i] + 13.0 * vals[i + 1] - vals[i + 2]) / 24.0
                }
            }
        },
    }
}

/// Cumulative antiderivative of `f`, with the stated anchoring convention.
///
/// Uses the default zero-mean tolerance; see
/// [`antiderivative_with_tolerance`] for an explicit one.
pub fn antiderivative(
    f: &GridFunction,
    convention: AntiderivativeConvention,
    accuracy: Accuracy,
) -> Result<GridFunction> {
    antiderivative_with_tolerance(f, convention, accuracy, DEFAULT_ZERO_MEAN_TOL)
}

/// Cumulative antiderivative with an explicit zero-mean tolerance factor.
pub fn antiderivative_with_tolerance(
    f: &GridFunction,
    convention: AntiderivativeConvention,
    accuracy: Accuracy,
    zero_mean_tol: f64,
) -> Result<GridFunction> {
    let grid = *f.grid();
    if convention == AntiderivativeConvention::ZeroMean && grid.boundary() == BoundaryMode::Periodic
    {
        let mean = integrate(f) / grid.length();
        let bound = zero_mean_tol * f.sup_norm();
        if mean.abs() > bound {
            return Err(Error::InconsistentInput {
                message: "periodic zero-mean antiderivative needs a zero-mean input".into(),
                residual_mean: mean,
            });
        }
    }
    let vals = f.values();
    let n = vals.len();
    let mut acc = vec![0.0_f64; n];
    for i in 1..n {
        acc[i] = acc[i - 1] + segment_integral(vals, i - 1, grid.dx(), accuracy, grid.boundary());
    }
    let mut out = GridFunction::new(grid, acc)?;
    if convention == AntiderivativeConvention::ZeroMean {
        let mean = integrate(&out) / grid.length();
        out = out.map(|v| v - mean)?;
    }
    Ok(out)
}

/// Total integral over the grid: rectangle sum on periodic grids (exact
/// for the excluded-endpoint convention), trapezoid on decaying grids.
pub fn integrate(f: &GridFunction) -> f64 {
    let vals = f.values();
    let dx = f.grid().dx();
    match f.grid().boundary() {
        BoundaryMode::Periodic => dx * vals.iter().sum::<f64>(),
        BoundaryMode::Decaying => {
            let inner: f64 = vals[1..vals.len() - 1].iter().sum();
            dx * (0.5 * vals[0] + inner + 0.5 * vals[vals.len() - 1])
        }
    }
}

/// Mean value of `f` over the grid.
pub fn mean(f: &GridFunction) -> f64 {
    integrate(f) / f.grid().length()
}
