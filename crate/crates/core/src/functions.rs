//! Named test functions with closed-form derivatives and integrals.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::extended::DoubleDouble;

/// `int_{-1}^{1} dx / (1 + 16 x^2) = arctan(4) / 2`, to 35 digits
/// 0.66290883183401623252961960521423782, split into two doubles.
const RUNGE16_INTEGRAL: (f64, f64) = (0.6629088318340163, -4.412214686975568e-17);

/// `int_{-1}^{1} e^{-x} sin(5 pi x) dx = -10 pi sinh(1) / (1 + 25 pi^2)`,
/// to 35 digits -0.14902727846675543569342523443814303.
const EXPSIN_INTEGRAL: (f64, f64) = (-0.14902727846675543, -1.0580858721203218e-17);

/// `int_{-1}^{1} e^{-x} sin(5 x) dx = [e^{-x}(-sin 5x - 5 cos 5x) / 26]`,
/// to 35 digits 0.24203832101745441180222820126595276.
const EXPSIN5_INTEGRAL: (f64, f64) = (0.2420383210174544, 1.2049406387048057e-17);

#[derive(Debug, Clone, PartialEq)]
pub enum TestFunction {
    /// `1 / (1 + 16 x^2)`.
    Runge16,
    /// `e^{-x} sin(5 pi x)`.
    ExpSin,
    /// `e^{-x} sin(5 x)`.
    ExpSin5,
    /// Legendre polynomial of degree 8.
    Legendre8,
    /// `c_0 + c_1 x + c_2 x^2 + ...`.
    Poly(Vec<f64>),
}

impl FromStr for TestFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "runge16" => Ok(TestFunction::Runge16),
            "expsin" => Ok(TestFunction::ExpSin),
            "expsin5" => Ok(TestFunction::ExpSin5),
            "legendre8" => Ok(TestFunction::Legendre8),
            _ => {
                let body = s.strip_prefix("poly:").ok_or_else(|| Error::UnknownFunction(s.into()))?;
                let coeffs = body
                    .split(',')
                    .map(|c| c.trim().parse::<f64>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| Error::UnknownFunction(s.into()))?;
                if coeffs.is_empty() || coeffs.iter().any(|c| !c.is_finite()) {
                    return Err(Error::UnknownFunction(s.into()));
                }
                Ok(TestFunction::Poly(coeffs))
            }
        }
    }
}

impl fmt::Display for TestFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TestFunction::Runge16 => f.write_str("runge16"),
            TestFunction::ExpSin => f.write_str("expsin"),
            TestFunction::ExpSin5 => f.write_str("expsin5"),
            TestFunction::Legendre8 => f.write_str("legendre8"),
            TestFunction::Poly(c) => {
                let parts: Vec<String> = c.iter().map(|v| v.to_string()).collect();
                write!(f, "poly:{}", parts.join(","))
            }
        }
    }
}

fn horner(c: &[f64], x: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, &ci| acc * x + ci)
}

fn horner_dd(c: &[f64], x: DoubleDouble) -> DoubleDouble {
    c.iter().rev().fold(DoubleDouble::ZERO, |acc, &ci| acc * x + ci)
}

fn exp_sin(freq: f64, x: f64) -> f64 {
    (-x).exp() * (freq * x).sin()
}

fn exp_sin_derivative(freq: f64, x: f64) -> f64 {
    (-x).exp() * (freq * (freq * x).cos() - (freq * x).sin())
}

fn exp_sin_antiderivative(freq: f64, x: f64) -> f64 {
    (-x).exp() * (-(freq * x).sin() - freq * (freq * x).cos()) / (1.0 + freq * freq)
}

/// `P_8(x)` by the three-term recurrence `(k+1) P_{k+1} = (2k+1) x P_k - k P_{k-1}`.
pub fn legendre_p8(x: f64) -> f64 {
    legendre(8, x).0
}

/// `(P_m(x), P_{m-1}(x))`.
pub fn legendre(m: usize, x: f64) -> (f64, f64) {
    let (mut prev, mut cur) = (1.0, x);
    if m == 0 {
        return (1.0, 0.0);
    }
    for k in 1..m {
        let next = ((2 * k + 1) as f64 * x * cur - k as f64 * prev) / (k + 1) as f64;
        prev = cur;
        cur = next;
    }
    (cur, prev)
}

fn legendre_dd(m: usize, x: DoubleDouble) -> DoubleDouble {
    let (mut prev, mut cur) = (DoubleDouble::ONE, x);
    if m == 0 {
        return prev;
    }
    for k in 1..m {
        let next = (x * cur * (2 * k + 1) as f64 - prev * k as f64) / (k + 1) as f64;
        prev = cur;
        cur = next;
    }
    cur
}

/// Positive zeros of `P_8`, ascending.
pub const LEGENDRE8_POSITIVE_ZEROS: [f64; 4] = [0.1834346425, 0.5255324099, 0.7966664774, 0.9602898565];

impl TestFunction {
    pub fn eval(&self, x: f64) -> f64 {
        match self {
            TestFunction::Runge16 => 1.0 / (1.0 + 16.0 * x * x),
            TestFunction::ExpSin => exp_sin(5.0 * PI, x),
            TestFunction::ExpSin5 => exp_sin(5.0, x),
            TestFunction::Legendre8 => legendre_p8(x),
            TestFunction::Poly(c) => horner(c, x),
        }
    }

    /// Value in double-double; transcendental functions fall back to `f64`.
    pub fn eval_extended(&self, x: DoubleDouble) -> DoubleDouble {
        match self {
            TestFunction::Runge16 => (DoubleDouble::ONE + x * x * 16.0).recip(),
            TestFunction::Legendre8 => legendre_dd(8, x),
            TestFunction::Poly(c) => horner_dd(c, x),
            TestFunction::ExpSin | TestFunction::ExpSin5 => DoubleDouble::from(self.eval(x.to_f64())),
        }
    }

    pub fn derivative(&self, x: f64) -> Option<f64> {
        Some(match self {
            TestFunction::Runge16 => {
                let q = 1.0 + 16.0 * x * x;
                -32.0 * x / (q * q)
            }
            TestFunction::ExpSin => exp_sin_derivative(5.0 * PI, x),
            TestFunction::ExpSin5 => exp_sin_derivative(5.0, x),
            TestFunction::Legendre8 => {
                // (1 - x^2) P_8' = 8 (P_7 - x P_8); use the recurrence form at |x| = 1.
                let (p8, p7) = legendre(8, x);
                if (1.0 - x * x).abs() < 1e-12 {
                    x.signum().powi(9) * 36.0
                } else {
                    8.0 * (p7 - x * p8) / (1.0 - x * x)
                }
            }
            TestFunction::Poly(c) => {
                let dc: Vec<f64> = c.iter().enumerate().skip(1).map(|(i, ci)| i as f64 * ci).collect();
                horner(&dc, x)
            }
        })
    }

    /// `int_a^b f`. Values on `[-1, 1]` for the transcendental functions use
    /// constants precomputed to 35 digits.
    pub fn integral(&self, a: f64, b: f64) -> Option<DoubleDouble> {
        let on_unit = a == -1.0 && b == 1.0;
        let pair = |(hi, lo): (f64, f64)| DoubleDouble::new(hi, lo);
        Some(match self {
            TestFunction::Runge16 if on_unit => pair(RUNGE16_INTEGRAL),
            TestFunction::ExpSin if on_unit => pair(EXPSIN_INTEGRAL),
            TestFunction::ExpSin5 if on_unit => pair(EXPSIN5_INTEGRAL),
            TestFunction::Runge16 => DoubleDouble::from(((4.0 * b).atan() - (4.0 * a).atan()) / 4.0),
            TestFunction::ExpSin => {
                DoubleDouble::from(exp_sin_antiderivative(5.0 * PI, b) - exp_sin_antiderivative(5.0 * PI, a))
            }
            TestFunction::ExpSin5 => {
                DoubleDouble::from(exp_sin_antiderivative(5.0, b) - exp_sin_antiderivative(5.0, a))
            }
            TestFunction::Legendre8 => {
                // int P_8 = (P_9 - P_7) / 17
                let prim = |x: f64| {
                    let x = DoubleDouble::from(x);
                    (legendre_dd(9, x) - legendre_dd(7, x)) / 17.0
                };
                prim(b) - prim(a)
            }
            TestFunction::Poly(c) => {
                let mut ic = vec![0.0];
                ic.extend(c.iter().enumerate().map(|(i, ci)| ci / (i + 1) as f64));
                horner_dd(&ic, DoubleDouble::from(b)) - horner_dd(&ic, DoubleDouble::from(a))
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use num_rational::Rational64;

    #[test]
    fn parse_and_display() {
        for name in ["runge16", "expsin", "expsin5", "legendre8", "poly:1,2.5,-3"] {
            let f: TestFunction = name.parse().unwrap();
            assert_eq!(f.to_string(), name);
        }
        assert!("sin".parse::<TestFunction>().is_err());
        assert!("poly:".parse::<TestFunction>().is_err());
        assert!("poly:1,x".parse::<TestFunction>().is_err());
    }

    #[test]
    fn legendre_values() {
        assert_abs_diff_eq!(legendre_p8(1.0), 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(legendre_p8(-1.0), 1.0, epsilon = 1e-15);
        for z in LEGENDRE8_POSITIVE_ZEROS {
            assert!(legendre_p8(z).abs() < 1e-9);
            assert!(legendre_p8(-z).abs() < 1e-9);
        }
        // Rational oracle for P_8(0).
        let mut prev = Rational64::from_integer(1);
        let mut cur = Rational64::from_integer(0);
        for k in 1..8i64 {
            let next = (-Rational64::from_integer(k) * prev) / (k + 1);
            prev = cur;
            cur = next;
        }
        assert_eq!(cur, Rational64::new(35, 128));
        assert_abs_diff_eq!(legendre_p8(0.0), 35.0 / 128.0, epsilon = 1e-16);
    }

    #[test]
    fn derivatives_match_finite_differences() {
        let fs = ["runge16", "expsin", "expsin5", "legendre8", "poly:1,-2,0.5,3"];
        for name in fs {
            let f: TestFunction = name.parse().unwrap();
            for &x in &[-0.93, -0.41, 0.0, 0.27, 0.88] {
                let step = 1e-5;
                let fd = (f.eval(x + step) - f.eval(x - step)) / (2.0 * step);
                let d = f.derivative(x).unwrap();
                assert!((fd - d).abs() < 1e-6 * (1.0 + d.abs()), "{name} at {x}: {fd} vs {d}");
            }
        }
        let p8: TestFunction = "legendre8".parse().unwrap();
        assert_abs_diff_eq!(p8.derivative(1.0).unwrap(), 36.0, epsilon = 1e-12);
        assert_abs_diff_eq!(p8.derivative(-1.0).unwrap(), -36.0, epsilon = 1e-12);
    }

    #[test]
    fn unit_interval_constants_agree_with_closed_forms() {
        let i1 = TestFunction::Runge16.integral(-1.0, 1.0).unwrap().to_f64();
        assert_abs_diff_eq!(i1, 4f64.atan() / 2.0, epsilon = 1e-16);
        let i2 = TestFunction::ExpSin.integral(-1.0, 1.0).unwrap().to_f64();
        let closed = -10.0 * PI * 1f64.sinh() / (1.0 + 25.0 * PI * PI);
        assert_abs_diff_eq!(i2, closed, epsilon = 1e-16);
        let i3 = TestFunction::ExpSin5.integral(-1.0, 1.0).unwrap().to_f64();
        let generic = exp_sin_antiderivative(5.0, 1.0) - exp_sin_antiderivative(5.0, -1.0);
        assert_abs_diff_eq!(i3, generic, epsilon = 1e-15);
    }

    #[test]
    fn polynomial_and_legendre_integrals() {
        let p: TestFunction = "poly:1,2,3".parse().unwrap();
        assert_abs_diff_eq!(p.integral(0.0, 2.0).unwrap().to_f64(), 2.0 + 4.0 + 8.0, epsilon = 1e-14);
        assert_abs_diff_eq!(TestFunction::Legendre8.integral(-1.0, 1.0).unwrap().to_f64(), 0.0, epsilon = 1e-15);
    }
}
