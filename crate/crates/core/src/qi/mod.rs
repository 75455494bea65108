//! Discrete quasi-interpolants `Q_d f = sum_j mu_j(f) B_j`, `2 <= d <= 5`.

mod lebesgue;
mod stencils;

pub use lebesgue::{lebesgue_profile, LebesgueProfile, DEFAULT_RESOLUTION};
pub use stencils::{is_mirror_symmetric, max_abs_weight_sum, weight_sums, Stencil, StencilTable};
#[cfg(test)]
pub(crate) use stencils::pow;

use crate::bspline::{SampleGrid, Spline, SplineSpace};
use crate::error::{Error, Result};
use crate::order::fit_order;
use crate::partition::{Degree, UniformPartition};

/// A quasi-interpolant bound to a partition.
#[derive(Debug, Clone)]
pub struct QuasiInterpolant {
    space: SplineSpace,
    table: StencilTable,
    grid: SampleGrid,
}

impl QuasiInterpolant {
    pub fn new(degree: Degree, partition: UniformPartition) -> Result<Self> {
        let space = SplineSpace::new(degree, partition)?;
        let table = StencilTable::build(degree, partition.n())?;
        let grid = space.sample_grid();
        Ok(QuasiInterpolant { space, table, grid })
    }

    pub fn space(&self) -> &SplineSpace {
        &self.space
    }

    pub fn table(&self) -> &StencilTable {
        &self.table
    }

    pub fn grid(&self) -> &SampleGrid {
        &self.grid
    }

    /// Coefficients `c_j = mu_j(f)` from samples on the sample grid.
    pub fn apply(&self, samples: &[f64]) -> Result<Spline> {
        if samples.len() != self.grid.len() {
            return Err(Error::LengthMismatch { expected: self.grid.len(), got: samples.len() });
        }
        let coeffs = self.table.stencils().iter().map(|s| s.apply(samples)).collect();
        self.space.spline(coeffs)
    }

    pub fn apply_fn(&self, f: impl Fn(f64) -> f64) -> Spline {
        let samples = self.grid.sample(f);
        self.apply(&samples).expect("sample count matches the grid")
    }
}

/// Schoenberg-Marsden operator `S_1 f = sum_j f(theta_j) B_j`.
pub fn schoenberg(space: &SplineSpace, samples_at_greville: &[f64]) -> Result<Spline> {
    space.spline(samples_at_greville.to_vec())
}

/// One row of a convergence study.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ApproximationRow {
    pub n: usize,
    pub max_error: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ApproximationReport {
    pub degree: Degree,
    pub rows: Vec<ApproximationRow>,
    /// Least-squares slope of `-log(error)` against `log(n)`; `None` when
    /// fewer than two rows carry a positive error.
    pub order: Option<f64>,
}

/// `max |f - Q_d f|` sampled at `per_interval` evenly spaced points per
/// subinterval (endpoints included).
pub fn max_error(qi: &QuasiInterpolant, f: &dyn Fn(f64) -> f64, per_interval: usize) -> f64 {
    let s = qi.apply_fn(f);
    let p = qi.space().partition();
    let mut worst = 0.0f64;
    for k in 1..=p.n() {
        let lo = p.knot(k as i64 - 1);
        let hi = p.knot(k as i64);
        for m in 0..=per_interval {
            let x = lo + (hi - lo) * m as f64 / per_interval as f64;
            let v = s.eval_on_interval(k, x, 0).expect("valid interval");
            worst = worst.max((f(x) - v).abs());
        }
    }
    worst
}

pub fn qi_error_report(
    degree: Degree,
    f: &dyn Fn(f64) -> f64,
    a: f64,
    b: f64,
    ns: &[usize],
) -> Result<ApproximationReport> {
    let mut rows = Vec::with_capacity(ns.len());
    for &n in ns {
        let qi = QuasiInterpolant::new(degree, UniformPartition::new(a, b, n)?)?;
        rows.push(ApproximationRow { n, max_error: max_error(&qi, f, 16) });
    }
    let order = fit_order(&rows.iter().map(|r| (r.n, r.max_error)).collect::<Vec<_>>());
    Ok(ApproximationReport { degree, rows, order })
}
