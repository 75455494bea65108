use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use splineqi::order::doubling;
use splineqi::{Degree, TestFunction};

use crate::commands::Baseline;
use crate::table::Format;

#[derive(Debug, Parser)]
#[command(name = "splineqi", version, about = "Spline quasi-interpolation: approximation, quadrature, derivatives and zeros")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "csv")]
    pub format: Format,

    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct Interval {
    /// Left end of the interval.
    #[arg(long, default_value_t = -1.0, allow_negative_numbers = true)]
    pub a: f64,

    /// Right end of the interval.
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub b: f64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample Q_d f on a dense grid and compare with f.
    Approximate {
        #[arg(long, value_parser = parse_degree)]
        degree: Degree,
        #[arg(long)]
        n: usize,
        /// runge16, expsin, expsin5, legendre8 or poly:c0,c1,...
        #[arg(long = "fn", value_parser = parse_function)]
        function: TestFunction,
        #[command(flatten)]
        interval: Interval,
        /// Evaluation points per subinterval.
        #[arg(long, default_value_t = 8)]
        points: usize,
    },
    /// Quadrature errors of the rule integrating Q_d f.
    Integrate {
        #[arg(long, value_parser = parse_degree)]
        degree: Degree,
        /// Comma-separated list or a doubling range such as 128..1024.
        #[arg(long, value_parser = parse_ns)]
        n: NList,
        #[arg(long = "fn", value_parser = parse_function)]
        function: TestFunction,
        #[command(flatten)]
        interval: Interval,
        #[arg(long, value_enum)]
        baseline: Option<Baseline>,
        /// Add the extrapolated rule (32 I_2 + 23 Simpson) / 55.
        #[arg(long)]
        extrapolate: bool,
    },
    /// Errors of (Q_d f)' and of centered differences at the sample grid.
    Differentiate {
        #[arg(long, value_parser = parse_diff_degree)]
        degree: Degree,
        #[arg(long, value_parser = parse_ns)]
        n: NList,
        #[arg(long = "fn", value_parser = parse_function)]
        function: TestFunction,
        #[command(flatten)]
        interval: Interval,
    },
    /// Zeros of Q_2 f.
    Roots {
        #[arg(long)]
        n: usize,
        #[arg(long = "fn", value_parser = parse_function)]
        function: TestFunction,
        #[command(flatten)]
        interval: Interval,
        /// Polish each zero with Newton steps on f.
        #[arg(long)]
        refine: bool,
    },
    /// Estimate the infinity norm of Q_d from its Lebesgue function.
    Norms {
        /// Degree; all four when omitted.
        #[arg(long, value_parser = parse_degree)]
        degree: Option<Degree>,
        #[arg(long, default_value_t = 100)]
        n: usize,
        /// Samples per subinterval.
        #[arg(long, default_value_t = 256)]
        resolution: usize,
        #[command(flatten)]
        interval: Interval,
    },
    /// Recompute every published table and constant; exit 4 on any mismatch.
    ReproducePaper,
}

/// Parsed `--n` list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NList(pub Vec<usize>);

pub fn parse_ns(s: &str) -> Result<NList, String> {
    if let Some((lo, hi)) = s.split_once("..") {
        let lo: usize = lo.trim().parse().map_err(|_| format!("bad range start in `{s}`"))?;
        let hi: usize = hi.trim().parse().map_err(|_| format!("bad range end in `{s}`"))?;
        if lo == 0 || lo > hi {
            return Err(format!("empty range `{s}`"));
        }
        return Ok(NList(doubling(lo, hi)));
    }
    let ns = s
        .split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|_| format!("`{p}` is not a subinterval count")))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(NList(ns))
}

pub fn parse_degree(s: &str) -> Result<Degree, String> {
    let d: usize = s.parse().map_err(|_| format!("`{s}` is not a degree"))?;
    Degree::new(d).map_err(|e| e.to_string())
}

pub fn parse_diff_degree(s: &str) -> Result<Degree, String> {
    let d = parse_degree(s)?;
    if d.get() > 3 {
        return Err("matrices defined for d=2,3 only".into());
    }
    Ok(d)
}

pub fn parse_function(s: &str) -> Result<TestFunction, String> {
    s.parse::<TestFunction>().map_err(|e| e.to_string())
}
