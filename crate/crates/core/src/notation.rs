//! Table notation: `0.73(-9)` means `0.73e-9`. Plain decimals such as
//! `-.007841` are also accepted.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A value as printed in a table, with the size of one unit in its last
/// printed digit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Printed {
    pub value: f64,
    pub unit: f64,
}

impl FromStr for Printed {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Precondition(format!("cannot read table value `{s}`"));
        let s = s.trim();
        let (mantissa, exponent) = match s.find('(') {
            Some(open) => {
                let close = s.strip_suffix(')').ok_or_else(bad)?;
                let head = s[..open].trim_end_matches(['E', 'e']);
                let exp: i32 = close[open + 1..].trim().parse().map_err(|_| bad())?;
                (head, exp)
            }
            None => (s, 0),
        };
        let digits = mantissa.trim_start_matches(['-', '+']);
        if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit() || c == '.') || digits.matches('.').count() > 1 {
            return Err(bad());
        }
        let decimals = digits.find('.').map_or(0, |p| digits.len() - p - 1) as i32;
        let m: f64 = mantissa.parse().map_err(|_| bad())?;
        let scale = 10f64.powi(exponent);
        Ok(Printed { value: m * scale, unit: 10f64.powi(exponent - decimals) })
    }
}

impl Printed {
    /// Within one unit of the last printed digit, and of the same sign.
    pub fn matches(&self, computed: f64) -> bool {
        let same_sign = self.value == 0.0 || computed.signum() == self.value.signum();
        same_sign && (computed - self.value).abs() <= self.unit * (1.0 + 1e-9)
    }

    /// Within `factor` of the printed value (either direction), same sign.
    pub fn within_factor(&self, computed: f64, factor: f64) -> bool {
        if self.value == 0.0 {
            return computed == 0.0;
        }
        let ratio = computed / self.value;
        ratio > 0.0 && ratio <= factor && ratio >= 1.0 / factor
    }
}

/// Formats `x` as `m(e)` with `0.1 <= |m| < 1` and `digits` mantissa digits.
pub fn mantissa_exp(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let mut e = x.abs().log10().floor() as i32 + 1;
    let mut m = x / 10f64.powi(e);
    let scale = 10f64.powi(digits as i32);
    if (m.abs() * scale).round() >= scale {
        e += 1;
        m = x / 10f64.powi(e);
    }
    format!("{m:.digits$}({e})")
}

/// Wrapper displaying in the table style with two digits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MantissaExp(pub f64);

impl fmt::Display for MantissaExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&mantissa_exp(self.0, 2))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Printed {
        s.parse().unwrap()
    }

    #[test]
    fn parses_table_forms() {
        let v = p("0.73(-9)");
        assert!((v.value - 0.73e-9).abs() < 1e-24);
        assert!((v.unit - 1e-11).abs() < 1e-26);
        let v = p("-.007841");
        assert!((v.value + 0.007841).abs() < 1e-18 && (v.unit - 1e-6).abs() < 1e-20);
        let v = p("1.8E(-4)");
        assert!((v.value - 1.8e-4).abs() < 1e-18 && (v.unit - 1e-5).abs() < 1e-20);
        let v = p("-1.62(-11)");
        assert!((v.unit - 1e-13).abs() < 1e-27);
        assert!("0;45(-10)".parse::<Printed>().is_err());
        assert!("".parse::<Printed>().is_err());
    }

    #[test]
    fn one_unit_rule() {
        let v = p("-0.55(-9)");
        assert!(v.matches(-0.5494e-9));
        assert!(v.matches(-0.56e-9));
        assert!(!v.matches(-0.5389e-9));
        assert!(!v.matches(0.55e-9));
        assert!(p("3.0(-3)").within_factor(3.03e-3, 1.3));
        assert!(!p("3.0(-3)").within_factor(-3.0e-3, 1.3));
    }

    #[test]
    fn formatting() {
        assert_eq!(mantissa_exp(7.303e-10, 2), "0.73(-9)");
        assert_eq!(mantissa_exp(-3.3573e-11, 2), "-0.34(-10)");
        assert_eq!(mantissa_exp(0.9999e-3, 2), "0.10(-2)");
        assert_eq!(MantissaExp(1.0).to_string(), "0.10(1)");
        assert_eq!(mantissa_exp(0.0, 2), "0");
    }
}
