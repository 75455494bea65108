use std::collections::BTreeMap;

use super::QuasiInterpolant;

pub const DEFAULT_RESOLUTION: usize = 256;

/// Samples of the Lebesgue function `Lambda(x) = sum_i |L_i(x)|`, where
/// `L_i = sum_j w_{j,i} B_j` is the fundamental function attached to the
/// `i`-th sample node.
#[derive(Debug, Clone, PartialEq)]
pub struct LebesgueProfile {
    pub xs: Vec<f64>,
    pub values: Vec<f64>,
    /// Largest sampled value, an estimate of the operator norm.
    pub sup: f64,
    /// Leftmost point where `sup` is attained.
    pub argmax: f64,
}

impl LebesgueProfile {
    pub fn min(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }
}

/// Evaluates `Lambda` at `resolution` evenly spaced points per subinterval
/// (plus the right end point `b`).
pub fn lebesgue_profile(qi: &QuasiInterpolant, resolution: usize) -> LebesgueProfile {
    assert!(resolution >= 1);
    let space = qi.space();
    let p = space.partition();
    let d = space.degree().get();
    let table = qi.table();

    let mut xs = Vec::with_capacity(p.n() * resolution + 1);
    let mut values = Vec::with_capacity(xs.capacity());
    let mut acc: BTreeMap<usize, f64> = BTreeMap::new();
    for k in 1..=p.n() {
        let lo = p.knot(k as i64 - 1);
        let hi = p.knot(k as i64);
        let last = if k == p.n() { resolution } else { resolution - 1 };
        for m in 0..=last {
            let x = if m == resolution { hi } else { lo + (hi - lo) * m as f64 / resolution as f64 };
            let basis = &space.derivatives_on(k, x, 0)[0];
            acc.clear();
            for (r, b) in basis.iter().enumerate().take(d + 1) {
                let st = table.stencil(k + r);
                for (&i, w) in st.samples.iter().zip(&st.weights) {
                    *acc.entry(i).or_insert(0.0) += b * (*w.numer() as f64 / *w.denom() as f64);
                }
            }
            xs.push(x);
            values.push(acc.values().map(|v| v.abs()).sum());
        }
    }
    let (mut sup, mut argmax) = (f64::NEG_INFINITY, p.a());
    for (&x, &v) in xs.iter().zip(&values) {
        if v > sup {
            sup = v;
            argmax = x;
        }
    }
    LebesgueProfile { xs, values, sup, argmax }
}
