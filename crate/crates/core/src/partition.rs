use std::fmt;

use crate::error::{Error, Result};

/// Spline degree supported by the quasi-interpolants (2 through 5).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Degree(usize);

impl Degree {
    pub const QUADRATIC: Degree = Degree(2);
    pub const CUBIC: Degree = Degree(3);
    pub const QUARTIC: Degree = Degree(4);
    pub const QUINTIC: Degree = Degree(5);

    pub const ALL: [Degree; 4] = [Self::QUADRATIC, Self::CUBIC, Self::QUARTIC, Self::QUINTIC];

    pub fn new(d: usize) -> Result<Self> {
        if (2..=5).contains(&d) {
            Ok(Degree(d))
        } else {
            Err(Error::UnsupportedDegree(d))
        }
    }

    pub fn get(self) -> usize {
        self.0
    }

    pub fn is_even(self) -> bool {
        self.0.is_multiple_of(2)
    }

    /// Smallest subinterval count for which the boundary and interior
    /// functionals of the quasi-interpolant do not overlap.
    pub fn min_intervals(self) -> usize {
        2 * self.0 + 2
    }

    pub fn check_intervals(self, n: usize) -> Result<()> {
        if n < self.min_intervals() {
            Err(Error::TooFewIntervals { degree: self.0, n, min: self.min_intervals() })
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Uniform partition `a = x_0 < x_1 < ... < x_n = b` of a bounded interval.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UniformPartition {
    a: f64,
    b: f64,
    n: usize,
}

impl UniformPartition {
    pub fn new(a: f64, b: f64, n: usize) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && a < b) {
            return Err(Error::InvalidInterval { a, b });
        }
        if n == 0 {
            return Err(Error::Precondition("the partition needs at least one subinterval".into()));
        }
        Ok(UniformPartition { a, b, n })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn h(&self) -> f64 {
        (self.b - self.a) / self.n as f64
    }

    pub fn len(&self) -> f64 {
        self.b - self.a
    }

    /// Knot `x_i` of the clamped knot sequence: indices below 0 map to `a`
    /// and indices above `n` map to `b`.
    pub fn knot(&self, i: i64) -> f64 {
        if i <= 0 {
            self.a
        } else if i >= self.n as i64 {
            self.b
        } else {
            self.a + i as f64 * self.h()
        }
    }

    /// The point `a + s*h` for a lattice offset `s` expressed in units of `h`.
    pub fn at_offset(&self, s: f64) -> f64 {
        if s <= 0.0 {
            self.a
        } else if s >= self.n as f64 {
            self.b
        } else {
            self.a + s * self.h()
        }
    }

    pub fn nodes(&self) -> Vec<f64> {
        (0..=self.n as i64).map(|i| self.knot(i)).collect()
    }

    pub fn contains(&self, x: f64) -> bool {
        x >= self.a && x <= self.b
    }

    /// Index `k` (1-based) of the subinterval `[x_{k-1}, x_k]` holding `x`.
    /// Subintervals are closed on the left; the last one is also closed on
    /// the right so that `x = b` falls into interval `n`.
    pub fn interval_of(&self, x: f64) -> Result<usize> {
        if !self.contains(x) {
            return Err(Error::OutOfDomain { x, a: self.a, b: self.b });
        }
        let n = self.n;
        let mut k = (((x - self.a) / self.h()).floor() as i64 + 1).clamp(1, n as i64) as usize;
        // Rounding in the division can land one interval off.
        while k > 1 && x < self.knot(k as i64 - 1) {
            k -= 1;
        }
        while k < n && x >= self.knot(k as i64) {
            k += 1;
        }
        Ok(k)
    }

    /// Midpoint reflection `x -> a + b - x`.
    pub fn reflect(&self, x: f64) -> f64 {
        self.a + self.b - x
    }
}
