//! Uniform clamped B-spline spaces.
//!
//! Knots are the partition nodes `x_0..x_n` with the end knots repeated to
//! multiplicity `d + 1`. Repeated knots are never stored: `x_i` for `i < 0`
//! is `a` and for `i > n` is `b`, so supports and Greville points are exact.
//! Basis functions are indexed `j = 1..=n+d` and `supp B_j = [x_{j-d-1}, x_j]`.

use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::{Degree, UniformPartition};

/// Arithmetic needed by the basis recurrences; implemented for `f64` and
/// for exact rationals so that tables at `h = 1` can be built exactly.
pub trait Scalar:
    Copy
    + Zero
    + One
    + PartialOrd
    + std::ops::Add<Output = Self>
    + std::ops::Sub<Output = Self>
    + std::ops::Mul<Output = Self>
    + std::ops::Div<Output = Self>
    + std::ops::Neg<Output = Self>
{
    fn from_i64(v: i64) -> Self;
}

impl Scalar for f64 {
    fn from_i64(v: i64) -> Self {
        v as f64
    }
}

impl Scalar for Rational64 {
    fn from_i64(v: i64) -> Self {
        Rational64::from_integer(v)
    }
}

/// Values and derivatives of the `d + 1` basis functions that do not vanish
/// on the subinterval `[knot(k-1), knot(k)]`.
///
/// `out[r][i]` is the `r`-th derivative of `B_{k+i}` at `x`, for
/// `r = 0..=nders`. The interval must be non-degenerate.
pub fn basis_derivatives<T: Scalar>(
    degree: usize,
    k: i64,
    x: T,
    knot: impl Fn(i64) -> T,
    nders: usize,
) -> Vec<Vec<T>> {
    let p = degree;
    let mut ndu = vec![vec![T::zero(); p + 1]; p + 1];
    let mut left = vec![T::zero(); p + 1];
    let mut right = vec![T::zero(); p + 1];
    ndu[0][0] = T::one();
    for j in 1..=p {
        left[j] = x - knot(k - j as i64);
        right[j] = knot(k - 1 + j as i64) - x;
        let mut saved = T::zero();
        for r in 0..j {
            ndu[j][r] = right[r + 1] + left[j - r];
            let temp = ndu[r][j - 1] / ndu[j][r];
            ndu[r][j] = saved + right[r + 1] * temp;
            saved = left[j - r] * temp;
        }
        ndu[j][j] = saved;
    }

    let nders = nders.min(p);
    let mut ders = vec![vec![T::zero(); p + 1]; nders + 1];
    for j in 0..=p {
        ders[0][j] = ndu[j][p];
    }

    let mut a = vec![vec![T::zero(); p + 1]; 2];
    for r in 0..=p {
        let (mut s1, mut s2) = (0usize, 1usize);
        a[0][0] = T::one();
        for kk in 1..=nders {
            let mut d = T::zero();
            let rk = r as i64 - kk as i64;
            let pk = p - kk;
            if r >= kk {
                let rk = rk as usize;
                a[s2][0] = a[s1][0] / ndu[pk + 1][rk];
                d = a[s2][0] * ndu[rk][pk];
            }
            let j1 = if rk >= -1 { 1 } else { (-rk) as usize };
            let j2 = if r as i64 - 1 <= pk as i64 { kk - 1 } else { p - r };
            for j in j1..=j2 {
                let idx = (rk + j as i64) as usize;
                a[s2][j] = (a[s1][j] - a[s1][j - 1]) / ndu[pk + 1][idx];
                d = d + a[s2][j] * ndu[idx][pk];
            }
            if r <= pk {
                a[s2][kk] = -a[s1][kk - 1] / ndu[pk + 1][r];
                d = d + a[s2][kk] * ndu[r][pk];
            }
            ders[kk][r] = d;
            std::mem::swap(&mut s1, &mut s2);
        }
    }

    let mut factor = p as i64;
    for (kk, row) in ders.iter_mut().enumerate().skip(1) {
        let f = T::from_i64(factor);
        for v in row.iter_mut() {
            *v = *v * f;
        }
        factor *= p as i64 - kk as i64;
    }
    ders
}

/// Elementary symmetric function of order `r` of `values`.
pub(crate) fn elementary_symmetric<T: Scalar>(values: &[T], r: usize) -> T {
    let mut e = vec![T::zero(); r + 1];
    e[0] = T::one();
    for &v in values {
        for k in (1..=r).rev() {
            e[k] = e[k] + e[k - 1] * v;
        }
    }
    e[r]
}

fn binomial(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i as i64 + 1))
}

/// Lattice knot `x_i` of a partition with `a = 0`, `h = 1`.
pub fn lattice_knot(n: usize, i: i64) -> Rational64 {
    Rational64::from_integer(i.clamp(0, n as i64))
}

/// Coefficients `theta_j^{(r)}` of `x^r` on the lattice partition (`a = 0`,
/// `h = 1`), for `j = 1..=n+d`.
pub fn lattice_monomial_coeffs(degree: Degree, n: usize, r: usize) -> Vec<Rational64> {
    let d = degree.get();
    let binom = Rational64::from_integer(binomial(d, r));
    (1..=(n + d) as i64)
        .map(|j| {
            let interior: Vec<Rational64> = (1..=d as i64).map(|l| lattice_knot(n, j - l)).collect();
            elementary_symmetric(&interior, r) / binom
        })
        .collect()
}

/// `int B_j` on the lattice partition, in units of `h`.
pub fn lattice_basis_integral(degree: Degree, n: usize, j: usize) -> Rational64 {
    let d = degree.get() as i64;
    let j = j as i64;
    (lattice_knot(n, j) - lattice_knot(n, j - d - 1)) / Rational64::from_integer(d + 1)
}

/// Which sampling set a quasi-interpolant reads: midpoints for even degree,
/// partition nodes for odd degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridKind {
    /// `t_1 = a`, `t_j = a + (j - 3/2) h` for `2 <= j <= n+1`, `t_{n+2} = b`.
    Midpoints,
    /// `x_0, ..., x_n`.
    Nodes,
}

impl GridKind {
    pub fn for_degree(degree: Degree) -> Self {
        if degree.is_even() {
            GridKind::Midpoints
        } else {
            GridKind::Nodes
        }
    }

    pub fn len(self, n: usize) -> usize {
        match self {
            GridKind::Midpoints => n + 2,
            GridKind::Nodes => n + 1,
        }
    }

    /// Node positions in units of `h` measured from `a`.
    pub fn lattice_offsets(self, n: usize) -> Vec<Rational64> {
        match self {
            GridKind::Nodes => (0..=n as i64).map(Rational64::from_integer).collect(),
            GridKind::Midpoints => {
                let mut v = Vec::with_capacity(n + 2);
                v.push(Rational64::zero());
                v.extend((2..=(n + 1) as i64).map(|j| Rational64::new(2 * j - 3, 2)));
                v.push(Rational64::from_integer(n as i64));
                v
            }
        }
    }
}

/// Sampling nodes of a quasi-interpolant.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleGrid {
    pub kind: GridKind,
    pub nodes: Vec<f64>,
}

impl SampleGrid {
    pub fn new(kind: GridKind, partition: &UniformPartition) -> Self {
        let nodes = kind
            .lattice_offsets(partition.n())
            .into_iter()
            .map(|s| partition.at_offset(*s.numer() as f64 / *s.denom() as f64))
            .collect();
        SampleGrid { kind, nodes }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn sample(&self, f: impl Fn(f64) -> f64) -> Vec<f64> {
        self.nodes.iter().map(|&x| f(x)).collect()
    }
}

/// The space `S_d` of `C^{d-1}` splines of degree `d` on a uniform partition.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SplineSpace {
    degree: Degree,
    partition: UniformPartition,
}

impl SplineSpace {
    /// Builds the space; `n` must be at least `degree.min_intervals()`.
    pub fn new(degree: Degree, partition: UniformPartition) -> Result<Self> {
        degree.check_intervals(partition.n())?;
        Ok(SplineSpace { degree, partition })
    }

    pub fn degree(&self) -> Degree {
        self.degree
    }

    pub fn partition(&self) -> &UniformPartition {
        &self.partition
    }

    pub fn n(&self) -> usize {
        self.partition.n()
    }

    /// Number of basis functions, `n + d`.
    pub fn dim(&self) -> usize {
        self.partition.n() + self.degree.get()
    }

    pub fn knot(&self, i: i64) -> f64 {
        self.partition.knot(i)
    }

    /// `[x_{j-d-1}, x_j]`.
    pub fn support(&self, j: usize) -> Result<(f64, f64)> {
        self.check_index(j)?;
        let d = self.degree.get() as i64;
        Ok((self.knot(j as i64 - d - 1), self.knot(j as i64)))
    }

    fn check_index(&self, j: usize) -> Result<()> {
        if j == 0 || j > self.dim() {
            Err(Error::IndexOutOfRange { index: j, min: 1, max: self.dim() })
        } else {
            Ok(())
        }
    }

    pub(crate) fn derivatives_on(&self, k: usize, x: f64, nders: usize) -> Vec<Vec<f64>> {
        basis_derivatives(self.degree.get(), k as i64, x, |i| self.knot(i), nders)
    }

    /// `B_j(x)`.
    pub fn eval_basis(&self, j: usize, x: f64) -> Result<f64> {
        self.check_index(j)?;
        let k = self.partition.interval_of(x)?;
        let d = self.degree.get();
        if j < k || j > k + d {
            return Ok(0.0);
        }
        Ok(self.derivatives_on(k, x, 0)[0][j - k])
    }

    /// Greville abscissae `theta_j = (x_{j-1} + ... + x_{j-d}) / d`.
    pub fn greville(&self) -> Vec<f64> {
        let d = self.degree.get() as i64;
        (1..=self.dim() as i64)
            .map(|j| (1..=d).map(|l| self.knot(j - l)).sum::<f64>() / d as f64)
            .collect()
    }

    /// Coefficients of `x^r` in the B-spline basis:
    /// `theta_j^{(r)} = symm_r(x_{j-d}, ..., x_{j-1}) / C(d, r)`.
    pub fn monomial_coeffs(&self, r: usize) -> Result<Vec<f64>> {
        let d = self.degree.get();
        if r > d {
            return Err(Error::IndexOutOfRange { index: r, min: 0, max: d });
        }
        let binom = binomial(d, r) as f64;
        Ok((1..=self.dim() as i64)
            .map(|j| {
                let interior: Vec<f64> = (1..=d as i64).map(|l| self.knot(j - l)).collect();
                elementary_symmetric(&interior, r) / binom
            })
            .collect())
    }

    /// `int_a^b B_j = (x_j - x_{j-d-1}) / (d + 1)`.
    pub fn integral_basis(&self, j: usize) -> Result<f64> {
        let (lo, hi) = self.support(j)?;
        Ok((hi - lo) / (self.degree.get() + 1) as f64)
    }

    pub fn grid_kind(&self) -> GridKind {
        GridKind::for_degree(self.degree)
    }

    pub fn sample_grid(&self) -> SampleGrid {
        SampleGrid::new(self.grid_kind(), &self.partition)
    }

    pub fn spline(&self, coeffs: Vec<f64>) -> Result<Spline> {
        if coeffs.len() != self.dim() {
            return Err(Error::LengthMismatch { expected: self.dim(), got: coeffs.len() });
        }
        Ok(Spline { space: *self, coeffs })
    }
}

/// `S = sum_j c_j B_j`.
#[derive(Debug, Clone, PartialEq)]
pub struct Spline {
    space: SplineSpace,
    coeffs: Vec<f64>,
}

impl Spline {
    pub fn space(&self) -> &SplineSpace {
        &self.space
    }

    /// `c_1..c_{n+d}` stored from index 0.
    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn eval(&self, x: f64) -> Result<f64> {
        self.eval_derivative(x, 0)
    }

    /// `S^{(order)}(x)`, right-continuous at interior knots.
    pub fn eval_derivative(&self, x: f64, order: usize) -> Result<f64> {
        let k = self.space.partition().interval_of(x)?;
        self.eval_on_interval(k, x, order)
    }

    /// Evaluates the polynomial piece of interval `k` (1-based) at `x`; `x`
    /// may be either endpoint of that interval.
    pub fn eval_on_interval(&self, k: usize, x: f64, order: usize) -> Result<f64> {
        let d = self.space.degree().get();
        if order > d {
            return Err(Error::DerivativeOrder { order, degree: d });
        }
        let n = self.space.n();
        if k == 0 || k > n {
            return Err(Error::IndexOutOfRange { index: k, min: 1, max: n });
        }
        let ders = self.space.derivatives_on(k, x, order);
        Ok(ders[order].iter().zip(&self.coeffs[k - 1..k + d]).map(|(b, c)| b * c).sum())
    }

    /// Reflection `S(a + b - x)` expressed in the same space.
    pub fn reflected(&self) -> Spline {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Spline { space: self.space, coeffs }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use rand::{Rng, SeedableRng};

    fn space(d: usize, a: f64, b: f64, n: usize) -> SplineSpace {
        SplineSpace::new(Degree::new(d).unwrap(), UniformPartition::new(a, b, n).unwrap()).unwrap()
    }

    /// Cardinal B-spline of degree `d` on `[0, d+1]` via truncated powers.
    fn cardinal_truncated_power(d: usize, u: f64) -> f64 {
        let fact: f64 = (1..=d).map(|i| i as f64).product();
        (0..=d + 1)
            .map(|i| {
                let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
                let t = (u - i as f64).max(0.0);
                sign * binomial(d + 1, i) as f64 * t.powi(d as i32)
            })
            .sum::<f64>()
            / fact
    }

    #[test]
    fn partition_of_unity() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for d in 2..=5 {
            let s = space(d, -1.3, 2.1, 13);
            for _ in 0..1000 {
                let x = rng.gen_range(-1.3..=2.1);
                let sum: f64 = (1..=s.dim()).map(|j| s.eval_basis(j, x).unwrap()).sum();
                assert!((sum - 1.0).abs() <= 1e-13, "d={d} x={x} sum={sum}");
            }
            let at_b: f64 = (1..=s.dim()).map(|j| s.eval_basis(j, 2.1).unwrap()).sum();
            assert_abs_diff_eq!(at_b, 1.0, epsilon = 1e-14);
        }
    }

    #[test]
    fn clamped_ends() {
        let s = space(2, 0.0, 1.0, 6);
        assert_eq!(s.eval_basis(1, 0.0).unwrap(), 1.0);
        for j in 2..=s.dim() {
            assert_eq!(s.eval_basis(j, 0.0).unwrap(), 0.0);
        }
        assert_eq!(s.eval_basis(s.dim(), 1.0).unwrap(), 1.0);
    }

    #[test]
    fn matches_truncated_power_oracle() {
        let s = space(3, 0.0, 8.0, 8);
        // B_j with 5 <= j <= 8 has four distinct simple knots.
        for j in 5..=8usize {
            let left = s.support(j).unwrap().0;
            for k in 1..=8 {
                let x = k as f64 - 0.5;
                let expect = cardinal_truncated_power(3, x - left);
                assert_abs_diff_eq!(s.eval_basis(j, x).unwrap(), expect, epsilon = 1e-14);
            }
        }
    }

    #[test]
    fn local_support() {
        let s = space(4, -1.0, 1.0, 12);
        for j in 1..=s.dim() {
            let (lo, hi) = s.support(j).unwrap();
            for i in 0..=480 {
                let x = -1.0 + i as f64 / 240.0;
                let v = s.eval_basis(j, x).unwrap();
                if x < lo || x > hi {
                    assert_eq!(v, 0.0);
                } else if x > lo && x < hi {
                    assert!(v > 0.0, "j={j} x={x}");
                }
            }
        }
    }

    #[test]
    fn domain_errors() {
        let s = space(2, 0.0, 1.0, 6);
        assert!(matches!(s.eval_basis(0, 0.5), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(s.eval_basis(9, 0.5), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(s.eval_basis(1, 1.5), Err(Error::OutOfDomain { .. })));
        let sp = s.spline(vec![1.0; 8]).unwrap();
        assert!(matches!(sp.eval_derivative(0.5, 3), Err(Error::DerivativeOrder { .. })));
        assert!(s.spline(vec![1.0; 7]).is_err());
        assert!(SplineSpace::new(Degree::QUADRATIC, UniformPartition::new(0.0, 1.0, 5).unwrap()).is_err());
    }

    #[test]
    fn greville_points() {
        let s = space(2, 0.0, 1.0, 6);
        let g = s.greville();
        assert_eq!(g.len(), 8);
        assert_eq!(g[0], 0.0);
        assert_abs_diff_eq!(g[1], 1.0 / 12.0, epsilon = 1e-16);
        assert_abs_diff_eq!(g[2], 0.25, epsilon = 1e-16);
        assert_eq!(g[7], 1.0);
        assert!(g.windows(2).all(|w| w[0] <= w[1]));

        let s = space(3, -1.0, 1.0, 8);
        let g = s.greville();
        for (l, r) in g.iter().zip(g.iter().rev()) {
            assert_abs_diff_eq!(*l, -*r, epsilon = 1e-15);
        }
    }

    #[test]
    fn greville_reproduce_identity() {
        for d in 2..=5 {
            let s = space(d, -0.5, 2.0, 17);
            let sp = s.spline(s.greville()).unwrap();
            for i in 0..=300 {
                let x = -0.5 + 2.5 * i as f64 / 300.0;
                assert_abs_diff_eq!(sp.eval(x).unwrap(), x, epsilon = 1e-14);
                assert_abs_diff_eq!(sp.eval_derivative(x, 1).unwrap(), 1.0, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn monomial_reproduction() {
        for d in 2..=5 {
            let (a, b) = (-1.5, 2.5);
            let s = space(d, a, b, 2 * d + 5);
            assert_eq!(s.monomial_coeffs(0).unwrap(), vec![1.0; s.dim()]);
            assert_eq!(s.monomial_coeffs(1).unwrap(), s.greville());
            assert!(s.monomial_coeffs(d + 1).is_err());
            let scale = 1f64.max(a.abs()).max(b.abs());
            for r in 0..=d {
                let sp = s.spline(s.monomial_coeffs(r).unwrap()).unwrap();
                let worst = (0..=2000)
                    .map(|i| a + (b - a) * i as f64 / 2000.0)
                    .map(|x| (sp.eval(x).unwrap() - x.powi(r as i32)).abs())
                    .fold(0.0, f64::max);
                assert!(worst <= 1e-11 * scale.powi(r as i32), "d={d} r={r} worst={worst}");
            }
        }
    }

    #[test]
    fn quadratic_second_moment_is_product_of_knots() {
        let s = space(2, 0.0, 1.0, 6);
        let t2 = s.monomial_coeffs(2).unwrap();
        for j in 3..=6usize {
            let expect = s.knot(j as i64 - 2) * s.knot(j as i64 - 1);
            assert_abs_diff_eq!(t2[j - 1], expect, epsilon = 1e-15);
        }
    }

    #[test]
    fn basis_integrals() {
        for d in 2..=5 {
            let s = space(d, -1.0, 1.0, 16);
            let h = s.partition().h();
            let total: f64 = (1..=s.dim()).map(|j| s.integral_basis(j).unwrap()).sum();
            assert_abs_diff_eq!(total, 2.0, epsilon = 1e-13);
            for j in d + 1..=16 {
                assert_eq!(s.integral_basis(j).unwrap(), h);
            }
        }
        let s = space(2, 0.0, 1.0, 6);
        assert_abs_diff_eq!(s.integral_basis(1).unwrap(), 1.0 / 18.0, epsilon = 1e-16);
    }

    #[test]
    fn basis_integral_matches_simpson_of_the_pieces() {
        // Each polynomial piece has degree <= 5; two-panel Simpson per piece
        // is not exact, so use Gauss-Legendre with 3 points (exact to degree 5).
        let gl = [(-0.774_596_669_241_483_4, 5.0 / 9.0), (0.0, 8.0 / 9.0), (0.774_596_669_241_483_4, 5.0 / 9.0)];
        for d in 2..=5 {
            let s = space(d, 0.0, 3.0, 14);
            let h = s.partition().h();
            for j in 1..=s.dim() {
                let mut acc = 0.0;
                for k in 1..=14 {
                    let mid = s.knot(k - 1) + h / 2.0;
                    for (t, w) in gl {
                        acc += w * h / 2.0 * s.eval_basis(j, mid + t * h / 2.0).unwrap();
                    }
                }
                assert_abs_diff_eq!(acc, s.integral_basis(j).unwrap(), epsilon = 1e-14);
            }
        }
    }

    #[test]
    fn sample_grids() {
        let s = space(2, -1.0, 1.0, 6);
        let p = UniformPartition::new(-1.0, 1.0, 4).unwrap();
        let g = SampleGrid::new(GridKind::Midpoints, &p);
        assert_eq!(g.nodes, vec![-1.0, -0.75, -0.25, 0.25, 0.75, 1.0]);
        let g = SampleGrid::new(GridKind::Nodes, &p);
        assert_eq!(g.nodes, vec![-1.0, -0.5, 0.0, 0.5, 1.0]);
        assert_eq!(s.sample_grid().kind, GridKind::Midpoints);
        assert_eq!(space(4, -1.0, 1.0, 10).sample_grid().len(), 12);
        assert_eq!(space(5, -1.0, 1.0, 12).sample_grid().len(), 13);
    }

    #[test]
    fn derivative_matches_central_differences() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        let s = space(3, 0.0, 1.0, 10);
        let c: Vec<f64> = (0..s.dim()).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let sp = s.spline(c).unwrap();
        let x = 0.437;
        let exact = sp.eval_derivative(x, 1).unwrap();
        let err = |step: f64| {
            let fd = (sp.eval(x + step).unwrap() - sp.eval(x - step).unwrap()) / (2.0 * step);
            (fd - exact).abs()
        };
        let (e1, e2) = (err(4e-3), err(2e-3));
        let order = (e1 / e2).log2();
        assert!((order - 2.0).abs() < 0.1, "order {order}");
    }

    #[test]
    fn exact_lattice_matches_float() {
        for d in Degree::ALL {
            let n = d.min_intervals() + 3;
            let s = SplineSpace::new(d, UniformPartition::new(0.0, n as f64, n).unwrap()).unwrap();
            for r in 0..=d.get() {
                let exact = lattice_monomial_coeffs(d, n, r);
                let float = s.monomial_coeffs(r).unwrap();
                for (e, f) in exact.iter().zip(&float) {
                    assert_abs_diff_eq!(*e.numer() as f64 / *e.denom() as f64, *f, epsilon = 1e-9);
                }
            }
            let total: Rational64 = (1..=n + d.get()).map(|j| lattice_basis_integral(d, n, j)).sum();
            assert_eq!(total, Rational64::from_integer(n as i64));
        }
    }
}
