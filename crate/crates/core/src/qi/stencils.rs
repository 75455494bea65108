//! Coefficient functionals `mu_j` of the discrete quasi-interpolants.
//!
//! Sample indices are 0-based positions in the sample grid: for even degree
//! the grid is `t_1..t_{n+2}` (position `p - 1` holds `f_p`), for odd degree
//! it is `x_0..x_n` (position `p` holds `f_p`).

use num_rational::Rational64;
use num_traits::Zero;

use crate::bspline::{lattice_monomial_coeffs, GridKind};
use crate::error::Result;
use crate::partition::Degree;

fn q(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}

/// `mu_j(f) = sum_i weights[i] * f(node[samples[i]])`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stencil {
    pub samples: Vec<usize>,
    pub weights: Vec<Rational64>,
}

impl Stencil {
    fn new(first: usize, weights: Vec<Rational64>) -> Self {
        Stencil { samples: (first..first + weights.len()).collect(), weights }
    }

    fn single(at: usize) -> Self {
        Stencil { samples: vec![at], weights: vec![Rational64::from_integer(1)] }
    }

    /// Mirror image under sample reversal on a grid of `len` nodes.
    fn mirrored(&self, len: usize) -> Self {
        let mut pairs: Vec<(usize, Rational64)> =
            self.samples.iter().zip(&self.weights).map(|(&s, &w)| (len - 1 - s, w)).collect();
        pairs.sort_by_key(|p| p.0);
        Stencil { samples: pairs.iter().map(|p| p.0).collect(), weights: pairs.iter().map(|p| p.1).collect() }
    }

    pub fn weight_sum(&self) -> Rational64 {
        self.weights.iter().sum()
    }

    pub fn apply(&self, values: &[f64]) -> f64 {
        self.samples
            .iter()
            .zip(&self.weights)
            .map(|(&s, w)| values[s] * (*w.numer() as f64 / *w.denom() as f64))
            .sum()
    }

    pub fn apply_exact(&self, values: &[Rational64]) -> Rational64 {
        self.samples.iter().zip(&self.weights).map(|(&s, &w)| values[s] * w).sum()
    }
}

/// The functionals `mu_1..mu_{n+d}` of the degree-`d` quasi-interpolant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StencilTable {
    degree: Degree,
    n: usize,
    stencils: Vec<Stencil>,
}

impl StencilTable {
    pub fn build(degree: Degree, n: usize) -> Result<Self> {
        degree.check_intervals(n)?;
        let stencils = match degree.get() {
            2 => quadratic(n),
            3 => cubic(n),
            4 => quartic(n),
            _ => quintic(n),
        };
        debug_assert_eq!(stencils.len(), n + degree.get());
        Ok(StencilTable { degree, n, stencils })
    }

    pub fn degree(&self) -> Degree {
        self.degree
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn grid_kind(&self) -> GridKind {
        GridKind::for_degree(self.degree)
    }

    pub fn sample_count(&self) -> usize {
        self.grid_kind().len(self.n)
    }

    /// `mu_j` for `j = 1..=n+d`.
    pub fn stencil(&self, j: usize) -> &Stencil {
        &self.stencils[j - 1]
    }

    pub fn stencils(&self) -> &[Stencil] {
        &self.stencils
    }

    /// Entries `(j, r)` where `mu_j(e_r) != theta_j^{(r)}`, checked exactly on
    /// the lattice partition `a = 0, h = 1`. Empty for a correct table.
    pub fn moment_defects(&self) -> Vec<(usize, usize)> {
        let d = self.degree.get();
        let nodes = self.grid_kind().lattice_offsets(self.n);
        let mut defects = Vec::new();
        for r in 0..=d {
            let theta = lattice_monomial_coeffs(self.degree, self.n, r);
            let powered: Vec<Rational64> = nodes.iter().map(|t| pow(*t, r)).collect();
            for (j, st) in self.stencils.iter().enumerate() {
                if st.apply_exact(&powered) != theta[j] {
                    defects.push((j + 1, r));
                }
            }
        }
        defects
    }
}

pub(crate) fn pow(x: Rational64, r: usize) -> Rational64 {
    (0..r).fold(Rational64::from_integer(1), |acc, _| acc * x)
}

fn rationals(v: &[(i64, i64)]) -> Vec<Rational64> {
    v.iter().map(|&(a, b)| q(a, b)).collect()
}

/// Interior pattern centred on sample `centre`.
fn symmetric(centre: usize, outer: &[(i64, i64)], middle: (i64, i64)) -> Stencil {
    let half = outer.len();
    let mut w: Vec<Rational64> = outer.iter().map(|&(a, b)| q(a, b)).collect();
    w.push(q(middle.0, middle.1));
    w.extend(outer.iter().rev().map(|&(a, b)| q(a, b)));
    Stencil::new(centre - half, w)
}

fn quadratic(n: usize) -> Vec<Stencil> {
    // Grid positions: f_p sits at p - 1.
    let mut s = vec![Stencil::single(0), Stencil::new(0, rationals(&[(-2, 6), (9, 6), (-1, 6)]))];
    for j in 3..=n {
        s.push(symmetric(j - 1, &[(-1, 8)], (10, 8)));
    }
    s.push(Stencil::new(n - 1, rationals(&[(-1, 6), (9, 6), (-2, 6)])));
    s.push(Stencil::single(n + 1));
    s
}

fn cubic(n: usize) -> Vec<Stencil> {
    let mut s = vec![Stencil::single(0), Stencil::new(0, rationals(&[(7, 18), (18, 18), (-9, 18), (2, 18)]))];
    for j in 3..=n + 1 {
        s.push(symmetric(j - 2, &[(-1, 6)], (8, 6)));
    }
    s.push(Stencil::new(n - 3, rationals(&[(2, 18), (-9, 18), (18, 18), (7, 18)])));
    s.push(Stencil::single(n));
    s
}

const QUARTIC_LEFT: [[(i64, i64); 5]; 3] = [
    [(17, 105), (35, 32), (-35, 96), (21, 160), (-5, 224)],
    [(-19, 45), (377, 288), (61, 288), (-59, 480), (7, 288)],
    [(47, 315), (-77, 144), (251, 144), (-97, 240), (47, 1008)],
];

fn quartic(n: usize) -> Vec<Stencil> {
    // mu_2..mu_4 read f_1..f_5 (positions 0..4); the right end reads
    // f_{n+2} down to f_{n-2} with the same weights.
    let mut s = vec![Stencil::single(0)];
    for row in &QUARTIC_LEFT {
        s.push(Stencil::new(0, rationals(row)));
    }
    // Interior 5 <= j <= n is centred on f_{j-1}, i.e. position j - 2.
    for j in 5..=n {
        s.push(symmetric(j - 2, &[(47, 1152), (-107, 288)], (319, 192)));
    }
    for row in QUARTIC_LEFT.iter().rev() {
        let reversed: Vec<(i64, i64)> = row.iter().rev().copied().collect();
        s.push(Stencil::new(n - 3, rationals(&reversed)));
    }
    s.push(Stencil::single(n + 1));
    s
}

const QUINTIC_LEFT: [[(i64, i64); 6]; 3] = [
    [(163, 300), (1, 1), (-1, 1), (2, 3), (-1, 4), (1, 25)],
    [(1, 200), (103, 60), (-73, 60), (7, 10), (-29, 120), (11, 300)],
    [(-41, 400), (43, 60), (103, 120), (-7, 10), (13, 48), (-13, 300)],
];

fn quintic(n: usize) -> Vec<Stencil> {
    let len = n + 1;
    let mut s = vec![Stencil::single(0)];
    for row in &QUINTIC_LEFT {
        s.push(Stencil::new(0, rationals(row)));
    }
    // Interior 5 <= j <= n+1 is centred on f_{j-3}.
    for j in 5..=n + 1 {
        s.push(symmetric(j - 3, &[(13, 240), (-7, 15)], (73, 40)));
    }
    let right: Vec<Stencil> = s[1..4].iter().rev().map(|st| st.mirrored(len)).collect();
    s.extend(right);
    s.push(Stencil::single(n));
    s
}

/// Sum of the weights of every functional; all equal one.
pub fn weight_sums(table: &StencilTable) -> Vec<Rational64> {
    table.stencils.iter().map(|s| s.weight_sum()).collect()
}

/// True when `mu_{n+d+1-j}` is the mirror image of `mu_j` for every `j`.
pub fn is_mirror_symmetric(table: &StencilTable) -> bool {
    let len = table.sample_count();
    let m = table.stencils.len();
    (0..m).all(|j| table.stencils[m - 1 - j] == table.stencils[j].mirrored(len))
}

/// Largest `sum |w|` over all functionals, a crude bound on the operator norm.
pub fn max_abs_weight_sum(table: &StencilTable) -> Rational64 {
    table
        .stencils
        .iter()
        .map(|s| s.weights.iter().map(|w| if *w < Rational64::zero() { -*w } else { *w }).sum())
        .max()
        .unwrap_or_else(Rational64::zero)
}
