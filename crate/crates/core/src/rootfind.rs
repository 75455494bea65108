//! Zeros of a function located as the exact zeros of its quadratic
//! quasi-interpolant, solved piece by piece in Bernstein form.

use crate::bspline::Spline;
use crate::error::{Error, Result};
use crate::partition::{Degree, UniformPartition};
use crate::qi::QuasiInterpolant;

/// Bernstein coefficients `(b0, b1, b2)` of the piece of a quadratic spline
/// on `[x_{k-1}, x_k]`.
pub fn piece_bernstein(s: &Spline, k: usize) -> Result<[f64; 3]> {
    let space = s.space();
    if space.degree() != Degree::QUADRATIC {
        return Err(Error::Precondition(format!("expected a quadratic spline, got degree {}", space.degree())));
    }
    let p = space.partition();
    if k == 0 || k > p.n() {
        return Err(Error::IndexOutOfRange { index: k, min: 1, max: p.n() });
    }
    let (lo, hi) = (p.knot(k as i64 - 1), p.knot(k as i64));
    let b0 = s.eval_on_interval(k, lo, 0)?;
    let b2 = s.eval_on_interval(k, hi, 0)?;
    let b1 = b0 + 0.5 * (hi - lo) * s.eval_on_interval(k, lo, 1)?;
    Ok([b0, b1, b2])
}

/// de Casteljau evaluation at the local parameter `t` in `[0, 1]`.
pub fn bernstein_eval(b: [f64; 3], t: f64) -> f64 {
    let l0 = b[0] + t * (b[1] - b[0]);
    let l1 = b[1] + t * (b[2] - b[1]);
    l0 + t * (l1 - l0)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PieceRoot {
    pub x: f64,
    /// Set for a double root (vanishing discriminant).
    pub tangent: bool,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct PieceRoots {
    pub roots: Vec<PieceRoot>,
    /// The piece vanishes identically.
    pub degenerate: bool,
}

const PARAM_SLACK: f64 = 1e-12;

/// All real roots in `[x0, x1]` of the quadratic with Bernstein coefficients
/// `b`. Coefficients all at most `zero_tol` in magnitude mark the piece as
/// identically zero.
pub fn solve_piece(b: [f64; 3], interval: (f64, f64), zero_tol: f64) -> PieceRoots {
    let scale = b.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    if scale <= zero_tol {
        return PieceRoots { roots: Vec::new(), degenerate: true };
    }
    let (x0, x1) = interval;
    let a = b[0] - 2.0 * b[1] + b[2];
    let bb = 2.0 * (b[1] - b[0]);
    let c = b[0];
    let mut ts: Vec<(f64, bool)> = Vec::with_capacity(2);
    if a.abs() <= 1e-14 * scale {
        if bb != 0.0 {
            ts.push((-c / bb, false));
        }
    } else {
        // Quarter discriminant in Bernstein form.
        let disc = b[1] * b[1] - b[0] * b[2];
        let tol = 1e-12 * scale * scale;
        if disc.abs() <= tol {
            ts.push(((b[0] - b[1]) / a, true));
        } else if disc > 0.0 {
            let root = 2.0 * disc.sqrt();
            let qv = -0.5 * (bb + bb.signum() * root);
            let qv = if bb == 0.0 { 0.5 * root } else { qv };
            ts.push((qv / a, false));
            ts.push((c / qv, false));
        }
    }
    let mut roots: Vec<PieceRoot> = ts
        .into_iter()
        .filter(|(t, _)| (-PARAM_SLACK..=1.0 + PARAM_SLACK).contains(t))
        .map(|(t, tangent)| PieceRoot { x: x0 + t.clamp(0.0, 1.0) * (x1 - x0), tangent })
        .collect();
    roots.sort_by(|p, q| p.x.total_cmp(&q.x));
    PieceRoots { roots, degenerate: false }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Root {
    pub x: f64,
    /// 1-based index of the containing interval `[x_{k-1}, x_k]`.
    pub interval: usize,
    pub tangent: bool,
    /// Spline value at `x`.
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct RootReport {
    pub roots: Vec<Root>,
    /// Intervals on which the spline vanishes identically.
    pub degenerate: Vec<usize>,
}

/// Zeros of a quadratic spline, merged across shared knots.
pub fn spline_zeros(s: &Spline, zero_tol: f64) -> Result<RootReport> {
    let p = *s.space().partition();
    let dedup = 1e-12 * p.len();
    let mut report = RootReport::default();
    for k in 1..=p.n() {
        let b = piece_bernstein(s, k)?;
        let piece = solve_piece(b, (p.knot(k as i64 - 1), p.knot(k as i64)), zero_tol);
        if piece.degenerate {
            report.degenerate.push(k);
            continue;
        }
        for r in piece.roots {
            if report.roots.last().is_some_and(|last: &Root| (r.x - last.x).abs() <= dedup) {
                continue;
            }
            let residual = s.eval_on_interval(k, r.x, 0)?;
            report.roots.push(Root { x: r.x, interval: k, tangent: r.tangent, residual });
        }
    }
    Ok(report)
}

/// Builds `Q_2 f` from samples on the midpoint grid and returns its zeros.
pub fn find_zeros(partition: UniformPartition, samples: &[f64]) -> Result<RootReport> {
    let qi = QuasiInterpolant::new(Degree::QUADRATIC, partition)?;
    let s = qi.apply(samples)?;
    let scale = samples.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    spline_zeros(&s, 1e-15 * scale)
}

/// `target - nearest root` for each target; ties go to the smaller root.
pub fn nearest_root_errors(report: &RootReport, targets: &[f64]) -> Vec<Option<f64>> {
    targets
        .iter()
        .map(|&t| {
            report
                .roots
                .iter()
                .map(|r| r.x)
                .min_by(|a, b| (a - t).abs().total_cmp(&(b - t).abs()).then(a.total_cmp(b)))
                .map(|x| t - x)
        })
        .collect()
}

/// Newton steps on `f` starting from `x`, kept inside `[lo, hi]`.
pub fn refine(x: f64, f: impl Fn(f64) -> f64, df: impl Fn(f64) -> f64, (lo, hi): (f64, f64)) -> f64 {
    let mut x = x;
    for _ in 0..20 {
        let d = df(x);
        if d == 0.0 || !d.is_finite() {
            break;
        }
        let next = (x - f(x) / d).clamp(lo, hi);
        if (next - x).abs() <= 4.0 * f64::EPSILON * x.abs().max(1.0) {
            return next;
        }
        x = next;
    }
    x
}
