//! First-derivative estimates `(Q_d f)'` at the sample grid for `d = 2, 3`,
//! a centered-difference baseline, and error tables.

use std::collections::BTreeMap;

use num_rational::Rational64;
use num_traits::{Signed, Zero};

use crate::bspline::{basis_derivatives, lattice_knot, GridKind, SampleGrid};
use crate::error::{Error, Result};
use crate::functions::TestFunction;
use crate::order::fit_order;
use crate::partition::{Degree, UniformPartition};
use crate::qi::StencilTable;

fn q(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}

fn to_f64(r: Rational64) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// One nonzero band of a row: the first column and the entries from there.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Row {
    start: usize,
    entries: Vec<Rational64>,
}

/// Square matrix mapping grid samples to `(Q_d f)'` at the same grid,
/// tabulated for `h = 1`. Rows are stored as bands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffMatrix {
    degree: Degree,
    n: usize,
    rows: Vec<Row>,
}

fn check_degree(degree: Degree) -> Result<()> {
    match degree.get() {
        2 | 3 => Ok(()),
        d => Err(Error::UnsupportedDegree(d)),
    }
}

impl DiffMatrix {
    /// Differentiates the basis exactly at every lattice node and composes
    /// with the stencil table.
    pub fn build(degree: Degree, n: usize) -> Result<Self> {
        check_degree(degree)?;
        let table = StencilTable::build(degree, n)?;
        let d = degree.get();
        let knot = |i: i64| lattice_knot(n, i);
        let rows = GridKind::for_degree(degree)
            .lattice_offsets(n)
            .into_iter()
            .map(|s| {
                let k = (s.floor().to_integer() + 1).min(n as i64);
                let ders = basis_derivatives(d, k, s, knot, 1);
                let mut acc: BTreeMap<usize, Rational64> = BTreeMap::new();
                for (r, db) in ders[1].iter().enumerate() {
                    let st = table.stencil(k as usize + r);
                    for (&i, &w) in st.samples.iter().zip(&st.weights) {
                        *acc.entry(i).or_insert_with(Rational64::zero) += *db * w;
                    }
                }
                acc.retain(|_, v| !v.is_zero());
                band(acc)
            })
            .collect();
        Ok(DiffMatrix { degree, n, rows })
    }

    /// The tabulated matrices: explicit boundary rows, a five-point interior
    /// row, and the bottom rows by skew-persymmetry.
    pub fn closed_form(degree: Degree, n: usize) -> Result<Self> {
        check_degree(degree)?;
        degree.check_intervals(n)?;
        let (top, interior): (Vec<Vec<Rational64>>, [Rational64; 5]) = if degree.get() == 2 {
            (
                vec![
                    vec![q(-8, 3), q(3, 1), q(-1, 3)],
                    vec![q(-7, 6), q(11, 16), q(13, 24), q(-1, 16)],
                    vec![q(1, 6), q(-3, 4), q(1, 48), q(5, 8), q(-1, 16)],
                ],
                [q(1, 16), q(-5, 8), q(0, 1), q(5, 8), q(-1, 16)],
            )
        } else {
            (
                vec![vec![q(-11, 6), q(3, 1), q(-3, 2), q(1, 3)], vec![q(-1, 3), q(-1, 2), q(1, 1), q(-1, 6)]],
                [q(1, 12), q(-2, 3), q(0, 1), q(2, 3), q(-1, 12)],
            )
        };
        let dim = GridKind::for_degree(degree).len(n);
        let mut rows: Vec<Row> = top.iter().map(|e| Row { start: 0, entries: e.clone() }).collect();
        for i in top.len()..dim - top.len() {
            rows.push(Row { start: i - 2, entries: interior.to_vec() });
        }
        for e in top.iter().rev() {
            let entries: Vec<Rational64> = e.iter().rev().map(|v| -v).collect();
            rows.push(Row { start: dim - entries.len(), entries });
        }
        let mut m = DiffMatrix { degree, n, rows };
        m.rows.iter_mut().for_each(trim);
        Ok(m)
    }

    pub fn degree(&self) -> Degree {
        self.degree
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Entry at 0-based `(row, col)`.
    pub fn entry(&self, row: usize, col: usize) -> Rational64 {
        let r = &self.rows[row];
        if col < r.start {
            return Rational64::zero();
        }
        r.entries.get(col - r.start).copied().unwrap_or_else(Rational64::zero)
    }

    /// Nonzero band of row `i`: the first column and its entries.
    pub fn row(&self, i: usize) -> (usize, &[Rational64]) {
        (self.rows[i].start, &self.rows[i].entries)
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational64>> {
        let dim = self.dim();
        (0..dim).map(|i| (0..dim).map(|j| self.entry(i, j)).collect()).collect()
    }

    /// `(1/h) M y`.
    pub fn apply(&self, samples: &[f64], h: f64) -> Result<Vec<f64>> {
        if samples.len() != self.dim() {
            return Err(Error::LengthMismatch { expected: self.dim(), got: samples.len() });
        }
        if h.is_nan() || h <= 0.0 {
            return Err(Error::Precondition(format!("step must be positive, got {h}")));
        }
        Ok(self
            .rows
            .iter()
            .map(|r| r.entries.iter().zip(&samples[r.start..]).map(|(w, y)| to_f64(*w) * y).sum::<f64>() / h)
            .collect())
    }

    /// Exact product at `h = 1`.
    pub fn apply_exact(&self, samples: &[Rational64]) -> Result<Vec<Rational64>> {
        if samples.len() != self.dim() {
            return Err(Error::LengthMismatch { expected: self.dim(), got: samples.len() });
        }
        Ok(self.rows.iter().map(|r| r.entries.iter().zip(&samples[r.start..]).map(|(w, y)| w * y).sum()).collect())
    }

    pub fn is_skew_persymmetric(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            let (start, e) = self.row(i);
            (0..e.len()).all(|t| self.entry(i, start + t) == -self.entry(n - 1 - i, n - 1 - start - t))
        }) && (0..n).all(|i| {
            let (start, e) = self.row(n - 1 - i);
            (0..e.len()).all(|t| self.entry(n - 1 - i, start + t) == -self.entry(i, n - 1 - start - t))
        })
    }
}

fn band(acc: BTreeMap<usize, Rational64>) -> Row {
    let (Some(&lo), Some(&hi)) = (acc.keys().next(), acc.keys().next_back()) else {
        return Row { start: 0, entries: Vec::new() };
    };
    Row { start: lo, entries: (lo..=hi).map(|c| acc.get(&c).copied().unwrap_or_else(Rational64::zero)).collect() }
}

fn trim(r: &mut Row) {
    while r.entries.last().is_some_and(|v| v.is_zero()) {
        r.entries.pop();
    }
    while r.entries.first().is_some_and(|v| v.is_zero()) {
        r.entries.remove(0);
        r.start += 1;
    }
}

/// Derivative at `at` of the parabola through three points.
fn parabola_slope(x: [f64; 3], y: [f64; 3], at: f64) -> f64 {
    let [x0, x1, x2] = x;
    let w0 = ((at - x1) + (at - x2)) / ((x0 - x1) * (x0 - x2));
    let w1 = ((at - x0) + (at - x2)) / ((x1 - x0) * (x1 - x2));
    let w2 = ((at - x0) + (at - x1)) / ((x2 - x0) * (x2 - x1));
    w0 * y[0] + w1 * y[1] + w2 * y[2]
}

/// Second-order centered differences on a possibly nonuniform grid, with
/// one-sided three-point formulas at both ends.
pub fn centered_diff(nodes: &[f64], samples: &[f64]) -> Result<Vec<f64>> {
    if nodes.len() != samples.len() {
        return Err(Error::LengthMismatch { expected: nodes.len(), got: samples.len() });
    }
    let m = nodes.len();
    if m < 3 {
        return Err(Error::Precondition(format!("centered differences need at least 3 samples, got {m}")));
    }
    let window = |c: usize| ([nodes[c - 1], nodes[c], nodes[c + 1]], [samples[c - 1], samples[c], samples[c + 1]]);
    Ok((0..m)
        .map(|i| {
            let (x, y) = window(i.clamp(1, m - 2));
            parabola_slope(x, y, nodes[i])
        })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiffRow {
    pub n: usize,
    /// `max |f' - (Q_d f)'|` over the grid.
    pub qi_error: f64,
    /// `max |f' - delta f|` over the grid.
    pub centered_error: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DiffTable {
    pub degree: Degree,
    pub rows: Vec<DiffRow>,
    pub qi_order: Option<f64>,
    pub centered_order: Option<f64>,
}

/// Errors of both estimates on the grid of `Q_d`, for each `n`.
pub fn diff_error_table(degree: Degree, f: &TestFunction, a: f64, b: f64, ns: &[usize]) -> Result<DiffTable> {
    check_degree(degree)?;
    let mut rows = Vec::with_capacity(ns.len());
    for &n in ns {
        let p = UniformPartition::new(a, b, n)?;
        let m = DiffMatrix::build(degree, n)?;
        let grid = SampleGrid::new(GridKind::for_degree(degree), &p);
        let y = grid.sample(|x| f.eval(x));
        let exact: Vec<f64> = grid
            .nodes
            .iter()
            .map(|&x| f.derivative(x).ok_or_else(|| Error::Precondition(format!("no derivative known for {f}"))))
            .collect::<Result<_>>()?;
        let max_dev = |est: &[f64]| est.iter().zip(&exact).map(|(e, t)| (t - e).abs()).fold(0.0, f64::max);
        rows.push(DiffRow {
            n,
            qi_error: max_dev(&m.apply(&y, p.h())?),
            centered_error: max_dev(&centered_diff(&grid.nodes, &y)?),
        });
    }
    let qi_order = fit_order(&rows.iter().map(|r| (r.n, r.qi_error)).collect::<Vec<_>>());
    let centered_order = fit_order(&rows.iter().map(|r| (r.n, r.centered_error)).collect::<Vec<_>>());
    Ok(DiffTable { degree, rows, qi_order, centered_order })
}

/// Largest entry magnitude, a crude conditioning indicator.
pub fn max_abs_entry(m: &DiffMatrix) -> Rational64 {
    m.rows.iter().flat_map(|r| r.entries.iter().map(|v| v.abs())).max().unwrap_or_else(Rational64::zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qi::pow;

    fn offsets(degree: Degree, n: usize) -> Vec<Rational64> {
        GridKind::for_degree(degree).lattice_offsets(n)
    }

    #[test]
    fn built_matrices_equal_closed_forms() {
        for d in [Degree::QUADRATIC, Degree::CUBIC] {
            for n in [d.min_intervals(), d.min_intervals() + 1, 20, 64] {
                assert_eq!(DiffMatrix::build(d, n).unwrap(), DiffMatrix::closed_form(d, n).unwrap(), "d={d} n={n}");
            }
        }
    }

    #[test]
    fn first_rows() {
        let m = DiffMatrix::build(Degree::QUADRATIC, 10).unwrap();
        assert_eq!(m.row(0), (0, &[q(-8, 3), q(3, 1), q(-1, 3)][..]));
        assert_eq!(m.dim(), 12);
        let m = DiffMatrix::build(Degree::CUBIC, 10).unwrap();
        assert_eq!(m.row(5), (3, &[q(1, 12), q(-2, 3), q(0, 1), q(2, 3), q(-1, 12)][..]));
        assert_eq!(m.dim(), 11);
    }

    #[test]
    fn exact_on_polynomials_at_lattice_nodes() {
        for d in [Degree::QUADRATIC, Degree::CUBIC] {
            let n = 13;
            let m = DiffMatrix::build(d, n).unwrap();
            let t = offsets(d, n);
            for r in 0..=d.get() {
                let y: Vec<Rational64> = t.iter().map(|&s| pow(s, r)).collect();
                let dy = m.apply_exact(&y).unwrap();
                for (s, v) in t.iter().zip(dy) {
                    let expect = if r == 0 { Rational64::zero() } else { Rational64::from_integer(r as i64) * pow(*s, r - 1) };
                    assert_eq!(v, expect, "d={d} r={r} s={s}");
                }
            }
        }
    }

    #[test]
    fn skew_persymmetric() {
        for d in [Degree::QUADRATIC, Degree::CUBIC] {
            assert!(DiffMatrix::build(d, 17).unwrap().is_skew_persymmetric());
        }
    }

    #[test]
    fn rejects_other_degrees() {
        assert_eq!(DiffMatrix::build(Degree::QUARTIC, 20), Err(Error::UnsupportedDegree(4)));
        assert!(DiffMatrix::build(Degree::CUBIC, 4).is_err());
    }

    #[test]
    fn apply_scales_by_h() {
        let p = UniformPartition::new(-1.0, 1.0, 16).unwrap();
        let m = DiffMatrix::build(Degree::CUBIC, 16).unwrap();
        let xs = p.nodes();
        let y: Vec<f64> = xs.iter().map(|x| x * x).collect();
        for (x, v) in xs.iter().zip(m.apply(&y, p.h()).unwrap()) {
            assert!((v - 2.0 * x).abs() < 1e-12);
        }
        assert!(m.apply(&[3.0; 17], p.h()).unwrap().iter().all(|v| v.abs() < 1e-13));
        assert!(m.apply(&y[1..], p.h()).is_err());
        assert!(m.apply(&y, 0.0).is_err());
    }

    #[test]
    fn centered_differences() {
        let p = UniformPartition::new(-1.0, 1.0, 10).unwrap();
        let grid = SampleGrid::new(GridKind::Midpoints, &p);
        let ones = centered_diff(&grid.nodes, &grid.nodes).unwrap();
        assert!(ones.iter().all(|v| (v - 1.0).abs() < 1e-13));
        let sq: Vec<f64> = grid.nodes.iter().map(|x| x * x).collect();
        for (x, v) in grid.nodes.iter().zip(centered_diff(&grid.nodes, &sq).unwrap()) {
            assert!((v - 2.0 * x).abs() < 1e-13);
        }
        assert!(centered_diff(&[0.0, 1.0], &[0.0, 1.0]).is_err());
    }

    #[test]
    fn centered_error_on_cubic_is_second_order() {
        let f = TestFunction::Poly(vec![0.0, 0.0, 0.0, 1.0]);
        let t = diff_error_table(Degree::CUBIC, &f, -1.0, 1.0, &[16, 32, 64, 128]).unwrap();
        assert!((t.centered_order.unwrap() - 2.0).abs() < 0.05);
        assert!(t.rows.iter().all(|r| r.qi_error < 1e-11));
    }
}
