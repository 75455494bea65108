//! Subcommand implementations. Each returns the tables to print.

use std::time::Instant;

use splineqi::functions::LEGENDRE8_POSITIVE_ZEROS;
use splineqi::notation::mantissa_exp;
use splineqi::rootfind::{nearest_root_errors, refine};
use splineqi::{
    diff_error_table, error_table, find_zeros, lebesgue_profile, Degree, ErrorTable, QuasiInterpolant, RuleFamily,
    SampleGrid, GridKind, TestFunction, UniformPartition,
};

use crate::error::CliError;
use crate::reproduce;
use crate::table::{Cell, Table};

fn partition(a: f64, b: f64, n: usize) -> Result<UniformPartition, CliError> {
    Ok(UniformPartition::new(a, b, n)?)
}

fn list(ns: &[usize]) -> String {
    ns.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

pub fn approximate(degree: Degree, n: usize, f: &TestFunction, a: f64, b: f64, points: usize) -> Result<Vec<Table>, CliError> {
    let p = partition(a, b, n)?;
    let qi = QuasiInterpolant::new(degree, p)?;
    let s = qi.apply_fn(|x| f.eval(x));
    let mut t = Table::new("approximation", &["x", "f", "qf", "error"]);
    let mut worst = 0.0f64;
    let per = points.max(1);
    for i in 0..=n * per {
        let x = p.at_offset(i as f64 / per as f64);
        let (fx, qx) = (f.eval(x), s.eval(x)?);
        worst = worst.max((fx - qx).abs());
        t.push(vec![x.into(), fx.into(), qx.into(), (fx - qx).into()]);
    }
    Ok(vec![t.meta("degree", degree).meta("n", n).meta("function", f).meta("max_error", format!("{worst:e}"))])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Baseline {
    Simpson,
    Nc4,
}

fn error_cells(t: &ErrorTable, i: usize) -> [Cell; 2] {
    let r = &t.rows[i];
    let v = r.error.unwrap_or(r.value);
    [v.into(), mantissa_exp(v, 2).into()]
}

pub fn integrate(
    degree: Degree,
    ns: &[usize],
    f: &TestFunction,
    a: f64,
    b: f64,
    baseline: Option<Baseline>,
    extrapolate: bool,
) -> Result<Vec<Table>, CliError> {
    let mut families = vec![RuleFamily::QuasiInterpolant(degree)];
    match baseline {
        Some(Baseline::Simpson) => families.push(RuleFamily::Simpson),
        Some(Baseline::Nc4) => families.push(RuleFamily::NewtonCotes4),
        None => {}
    }
    if extrapolate {
        families.push(RuleFamily::ExtrapolatedQuadratic);
    }
    let tables: Vec<ErrorTable> = families.iter().map(|&fam| error_table(fam, f, a, b, ns)).collect::<Result<_, _>>()?;
    let known = tables[0].rows.first().is_some_and(|r| r.error.is_some());
    let prefix = if known { "E" } else { "value" };
    let mut columns = vec!["n".to_string()];
    for fam in &families {
        columns.push(format!("{prefix} {fam}"));
        columns.push(format!("{prefix} {fam} (m(e))"));
    }
    let cols: Vec<&str> = columns.iter().map(String::as_str).collect();
    let mut t = Table::new("integration errors", &cols);
    for (i, &n) in ns.iter().enumerate() {
        let mut row = vec![Cell::from(n)];
        for et in &tables {
            row.extend(error_cells(et, i));
        }
        t.push(row);
    }
    if known {
        let mut row = vec![Cell::from("order")];
        for et in &tables {
            row.push(et.order.into());
            row.push(Cell::Empty);
        }
        t.push(row);
    }
    Ok(vec![t.meta("degree", degree).meta("n", list(ns)).meta("function", f).meta("interval", format!("[{a}, {b}]"))])
}

pub fn differentiate(degree: Degree, ns: &[usize], f: &TestFunction, a: f64, b: f64) -> Result<Vec<Table>, CliError> {
    let dt = diff_error_table(degree, f, a, b, ns)?;
    let mut t = Table::new("derivative errors", &["n", "eps", "eps (m(e))", "eps centered", "eps centered (m(e))"]);
    for r in &dt.rows {
        t.push(vec![
            r.n.into(),
            r.qi_error.into(),
            mantissa_exp(r.qi_error, 2).into(),
            r.centered_error.into(),
            mantissa_exp(r.centered_error, 2).into(),
        ]);
    }
    t.push(vec!["order".into(), dt.qi_order.into(), Cell::Empty, dt.centered_order.into(), Cell::Empty]);
    Ok(vec![t.meta("degree", degree).meta("n", list(ns)).meta("function", f)])
}

pub fn roots(n: usize, f: &TestFunction, a: f64, b: f64, refine_roots: bool) -> Result<Vec<Table>, CliError> {
    let p = partition(a, b, n)?;
    let samples = SampleGrid::new(GridKind::Midpoints, &p).sample(|x| f.eval(x));
    let rep = find_zeros(p, &samples)?;
    let mut cols = vec!["x", "interval", "tangent", "residual"];
    if refine_roots {
        cols.push("refined");
    }
    let mut t = Table::new("zeros", &cols);
    for r in &rep.roots {
        let mut row = vec![r.x.into(), r.interval.into(), r.tangent.into(), r.residual.into()];
        if refine_roots {
            let refined = f.derivative(r.x).map(|_| refine(r.x, |x| f.eval(x), |x| f.derivative(x).unwrap_or(0.0), (a, b)));
            row.push(refined.into());
        }
        t.push(row);
    }
    let degenerate = rep.degenerate.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
    let mut out = vec![t.meta("n", n).meta("function", f).meta("count", rep.roots.len()).meta("degenerate_intervals", degenerate)];
    if *f == TestFunction::Legendre8 && a == -1.0 && b == 1.0 {
        let mut e = Table::new("errors against the zeros of P8", &["k", "x_k", "eps", "eps (m(e))"]);
        for (k, (x, err)) in LEGENDRE8_POSITIVE_ZEROS.iter().zip(nearest_root_errors(&rep, &LEGENDRE8_POSITIVE_ZEROS)).enumerate() {
            e.push(vec![(k + 1).into(), (*x).into(), err.into(), err.map(|v| format!("{v:.6}")).into()]);
        }
        out.push(e.meta("n", n));
    }
    Ok(out)
}

pub fn norms(degrees: &[Degree], n: usize, resolution: usize, a: f64, b: f64) -> Result<Vec<Table>, CliError> {
    if resolution == 0 {
        return Err(CliError::Usage("--resolution must be at least 1".into()));
    }
    let p = partition(a, b, n)?;
    let mut t = Table::new("operator norms", &["degree", "norm", "argmax", "interval"]);
    for &d in degrees {
        let prof = lebesgue_profile(&QuasiInterpolant::new(d, p)?, resolution);
        t.push(vec![d.get().into(), prof.sup.into(), prof.argmax.into(), p.interval_of(prof.argmax)?.into()]);
    }
    Ok(vec![t.meta("n", n).meta("resolution", resolution)])
}

/// Runs every check. Returns the summary table, the detail lines and the
/// number of failed acceptance checks.
pub fn reproduce_paper() -> (Vec<Table>, Vec<String>, usize) {
    let start = Instant::now();
    let outcomes = reproduce::run_all();
    let total = start.elapsed();
    let mut t = Table::new("acceptance", &["id", "check", "status", "summary", "seconds"]);
    let mut details = Vec::new();
    let mut failed = 0;
    for o in &outcomes {
        failed += usize::from(!o.passed);
        details.push(o.line());
        details.extend(o.details.iter().map(|d| format!("       {d}")));
        t.push(vec![(o.id as usize).into(), o.title.into(), status(o.passed).into(), o.summary.clone().into(), o.elapsed.as_secs_f64().into()]);
    }
    let quick = total.as_secs_f64() < 60.0 && failed == 0;
    failed += usize::from(!quick);
    let summary = format!("{failed} failed check(s), {:.2} s in total", total.as_secs_f64());
    t.push(vec![11usize.into(), "complete run".into(), status(quick).into(), summary.into(), total.as_secs_f64().into()]);
    let inv = reproduce::root_convergence();
    details.push(inv.line());
    details.extend(inv.details.iter().map(|d| format!("       {d}")));
    t.push(vec![Cell::Empty, inv.title.into(), status(inv.passed).into(), inv.summary.clone().into(), inv.elapsed.as_secs_f64().into()]);
    (vec![t], details, failed)
}

fn status(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}
