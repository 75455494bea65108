//! Quadrature rules obtained by integrating the quasi-interpolants, the
//! composite Simpson and Boole (Newton-Cotes degree 4) baselines, and the
//! extrapolated quadratic rule `(32 I_2 + 23 I_2^S) / 55`.

use std::fmt;

use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::bspline::{lattice_basis_integral, GridKind, SampleGrid};
use crate::error::{Error, Result};
use crate::extended::DoubleDouble;
use crate::functions::TestFunction;
use crate::order::fit_order;
use crate::partition::{Degree, UniformPartition};
use crate::qi::StencilTable;

fn q(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RuleKind {
    /// `int Q_d f`.
    QuasiInterpolant(Degree),
    /// Composite Simpson on the partition nodes.
    Simpson,
    /// Composite Boole rule on the partition nodes.
    NewtonCotes4,
}

/// `I(f) ~ h * sum_i w_i f(node_i)` with exact rational `w_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadratureRule {
    kind: RuleKind,
    n: usize,
    weights: Vec<Rational64>,
}

/// Boundary weights of the closed-form rules; interior weights are 1 and the
/// right end mirrors the left.
fn closed_form_boundary(degree: Degree) -> Vec<Rational64> {
    match degree.get() {
        2 => vec![q(1, 9), q(7, 8), q(73, 72)],
        3 => vec![q(23, 72), q(4, 3), q(19, 24), q(19, 18)],
        4 => vec![q(206, 1575), q(107, 128), q(6019, 5760), q(9467, 9600), q(13469, 13440)],
        _ => vec![q(157, 480), q(961, 720), q(133, 180), q(271, 240), q(1393, 1440), q(361, 360)],
    }
}

impl QuadratureRule {
    /// Accumulates `mu_j`'s weights times `int B_j` for every `j`.
    pub fn derive(degree: Degree, n: usize) -> Result<Self> {
        let table = StencilTable::build(degree, n)?;
        let mut weights = vec![Rational64::zero(); table.sample_count()];
        for (j, st) in table.stencils().iter().enumerate() {
            let integral = lattice_basis_integral(degree, n, j + 1);
            for (&i, &w) in st.samples.iter().zip(&st.weights) {
                weights[i] += w * integral;
            }
        }
        Ok(QuadratureRule { kind: RuleKind::QuasiInterpolant(degree), n, weights })
    }

    /// The same rule assembled from its tabulated boundary weights.
    pub fn closed_form(degree: Degree, n: usize) -> Result<Self> {
        degree.check_intervals(n)?;
        let len = GridKind::for_degree(degree).len(n);
        let mut weights = vec![Rational64::one(); len];
        for (i, w) in closed_form_boundary(degree).into_iter().enumerate() {
            weights[i] = w;
            weights[len - 1 - i] = w;
        }
        Ok(QuadratureRule { kind: RuleKind::QuasiInterpolant(degree), n, weights })
    }

    pub fn simpson(n: usize) -> Result<Self> {
        if n < 2 || !n.is_multiple_of(2) {
            return Err(Error::Precondition(format!("Simpson's rule needs an even n, got {n}")));
        }
        let weights = (0..=n)
            .map(|i| match i {
                0 => q(1, 3),
                i if i == n => q(1, 3),
                i if i % 2 == 1 => q(4, 3),
                _ => q(2, 3),
            })
            .collect();
        Ok(QuadratureRule { kind: RuleKind::Simpson, n, weights })
    }

    pub fn newton_cotes4(n: usize) -> Result<Self> {
        if n < 4 || !n.is_multiple_of(4) {
            return Err(Error::Precondition(format!("the Newton-Cotes rule of degree 4 needs n divisible by 4, got {n}")));
        }
        let panel = [q(28, 45), q(64, 45), q(24, 45), q(64, 45)];
        let mut weights: Vec<Rational64> = (0..=n).map(|i| panel[i % 4]).collect();
        weights[0] = q(14, 45);
        weights[n] = q(14, 45);
        Ok(QuadratureRule { kind: RuleKind::NewtonCotes4, n, weights })
    }

    pub fn kind(&self) -> RuleKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn grid_kind(&self) -> GridKind {
        match self.kind {
            RuleKind::QuasiInterpolant(d) => GridKind::for_degree(d),
            _ => GridKind::Nodes,
        }
    }

    pub fn grid(&self, partition: &UniformPartition) -> SampleGrid {
        SampleGrid::new(self.grid_kind(), partition)
    }

    /// Weights in units of `h`, one per sample node.
    pub fn weights(&self) -> &[Rational64] {
        &self.weights
    }

    pub fn weight_sum(&self) -> Rational64 {
        self.weights.iter().sum()
    }

    fn check(&self, partition: &UniformPartition, len: usize) -> Result<()> {
        if partition.n() != self.n {
            return Err(Error::Precondition(format!("rule built for n = {}, partition has n = {}", self.n, partition.n())));
        }
        if len != self.weights.len() {
            return Err(Error::LengthMismatch { expected: self.weights.len(), got: len });
        }
        Ok(())
    }

    /// `h * sum_i w_i f_i`, summed left to right.
    pub fn integrate(&self, partition: &UniformPartition, samples: &[f64]) -> Result<f64> {
        self.check(partition, samples.len())?;
        let mut acc = 0.0;
        for (w, f) in self.weights.iter().zip(samples) {
            acc += (*w.numer() as f64 / *w.denom() as f64) * f;
        }
        Ok(acc * partition.h())
    }

    pub fn integrate_extended(&self, partition: &UniformPartition, samples: &[DoubleDouble]) -> Result<DoubleDouble> {
        self.check(partition, samples.len())?;
        let acc: DoubleDouble = self.weights.iter().zip(samples).map(|(w, &f)| DoubleDouble::from_ratio(*w) * f).sum();
        Ok(acc * extended_h(partition))
    }
}

fn extended_h(p: &UniformPartition) -> DoubleDouble {
    (DoubleDouble::from(p.b()) - DoubleDouble::from(p.a())) / p.n() as f64
}

/// Sample nodes in double-double.
pub fn extended_nodes(kind: GridKind, p: &UniformPartition) -> Vec<DoubleDouble> {
    let h = extended_h(p);
    let n = p.n() as i64;
    kind.lattice_offsets(p.n())
        .into_iter()
        .map(|s| {
            if s <= Rational64::zero() {
                DoubleDouble::from(p.a())
            } else if s >= Rational64::from_integer(n) {
                DoubleDouble::from(p.b())
            } else {
                DoubleDouble::from(p.a()) + DoubleDouble::from_ratio(s) * h
            }
        })
        .collect()
}

/// Composite Simpson on the nodes `x_0..x_n`.
pub fn simpson(partition: &UniformPartition, samples: &[f64]) -> Result<f64> {
    QuadratureRule::simpson(partition.n())?.integrate(partition, samples)
}

/// Composite Boole rule on the nodes `x_0..x_n`.
pub fn newton_cotes4(partition: &UniformPartition, samples: &[f64]) -> Result<f64> {
    QuadratureRule::newton_cotes4(partition.n())?.integrate(partition, samples)
}

/// Affine weights of the extrapolated quadratic rule: `(32/55, 23/55)`.
pub const EXTRAPOLATION_WEIGHTS: (i64, i64, i64) = (32, 23, 55);

/// `(32 I_2(f) + 23 I_2^S(f)) / 55` from midpoint samples (for `I_2`) and
/// node samples (for Simpson) on the same partition.
pub fn extrapolated_i2(partition: &UniformPartition, midpoint_samples: &[f64], node_samples: &[f64]) -> Result<f64> {
    let i2 = QuadratureRule::derive(Degree::QUADRATIC, partition.n())?.integrate(partition, midpoint_samples)?;
    let s = simpson(partition, node_samples)?;
    let (w2, ws, total) = EXTRAPOLATION_WEIGHTS;
    Ok((w2 as f64 * i2 + ws as f64 * s) / total as f64)
}

/// Quadrature families available for error tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RuleFamily {
    QuasiInterpolant(Degree),
    Simpson,
    NewtonCotes4,
    ExtrapolatedQuadratic,
}

impl fmt::Display for RuleFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleFamily::QuasiInterpolant(d) => write!(f, "I{d}"),
            RuleFamily::Simpson => f.write_str("simpson"),
            RuleFamily::NewtonCotes4 => f.write_str("nc4"),
            RuleFamily::ExtrapolatedQuadratic => f.write_str("extrapolated-I2"),
        }
    }
}

impl RuleFamily {
    /// Value of the rule in double-double, sampling `f` in double-double.
    pub fn value_extended(self, f: &TestFunction, partition: &UniformPartition) -> Result<DoubleDouble> {
        let run = |rule: QuadratureRule| -> Result<DoubleDouble> {
            let samples: Vec<DoubleDouble> =
                extended_nodes(rule.grid_kind(), partition).into_iter().map(|x| f.eval_extended(x)).collect();
            rule.integrate_extended(partition, &samples)
        };
        let n = partition.n();
        match self {
            RuleFamily::QuasiInterpolant(d) => run(QuadratureRule::derive(d, n)?),
            RuleFamily::Simpson => run(QuadratureRule::simpson(n)?),
            RuleFamily::NewtonCotes4 => run(QuadratureRule::newton_cotes4(n)?),
            RuleFamily::ExtrapolatedQuadratic => {
                let i2 = run(QuadratureRule::derive(Degree::QUADRATIC, n)?)?;
                let s = run(QuadratureRule::simpson(n)?)?;
                let (w2, ws, total) = EXTRAPOLATION_WEIGHTS;
                Ok((i2 * w2 as f64 + s * ws as f64) / total as f64)
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorRow {
    pub n: usize,
    pub value: f64,
    /// `I(f) - rule(f)`, when the exact integral is known.
    pub error: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ErrorTable {
    pub family: RuleFamily,
    pub rows: Vec<ErrorRow>,
    pub order: Option<f64>,
}

/// Signed errors `I(f) - rule(f)` for each `n`, computed in double-double.
pub fn error_table(family: RuleFamily, f: &TestFunction, a: f64, b: f64, ns: &[usize]) -> Result<ErrorTable> {
    let exact = f.integral(a, b);
    let mut rows = Vec::with_capacity(ns.len());
    for &n in ns {
        let p = UniformPartition::new(a, b, n)?;
        let v = family.value_extended(f, &p)?;
        rows.push(ErrorRow { n, value: v.to_f64(), error: exact.map(|e| (e - v).to_f64()) });
    }
    let order = fit_order(&rows.iter().filter_map(|r| r.error.map(|e| (r.n, e))).collect::<Vec<_>>());
    Ok(ErrorTable { family, rows, order })
}
