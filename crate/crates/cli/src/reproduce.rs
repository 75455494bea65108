//! The acceptance checks: every published table and constant, recomputed.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use num_rational::Rational64;
use rand::{Rng, SeedableRng};
use splineqi::functions::LEGENDRE8_POSITIVE_ZEROS;
use splineqi::notation::{mantissa_exp, Printed};
use splineqi::order::doubling;
use splineqi::reference::{self, Func, Status, Tolerance};
use splineqi::rootfind::{nearest_root_errors, spline_zeros};
use splineqi::{
    diff_error_table, error_table, find_zeros, lebesgue_profile, Degree, DiffMatrix, GridKind, QuadratureRule,
    QuasiInterpolant, RuleFamily, SampleGrid, Spline, SplineSpace, StencilTable, TestFunction, UniformPartition,
};

const SEED: u64 = 0x5eed_2005;

#[derive(Debug, Clone)]
pub struct Outcome {
    pub id: u32,
    pub title: &'static str,
    pub passed: bool,
    pub summary: String,
    /// Individual mismatches and informational comparisons.
    pub details: Vec<String>,
    pub elapsed: Duration,
}

impl Outcome {
    pub fn line(&self) -> String {
        let id = if self.id == 0 { String::new() } else { self.id.to_string() };
        format!(
            "[{}] {:>2} {}: {} ({:.2} s)",
            if self.passed { "PASS" } else { "FAIL" },
            id,
            self.title,
            self.summary,
            self.elapsed.as_secs_f64()
        )
    }
}

struct Check {
    failures: Vec<String>,
    notes: Vec<String>,
    checked: usize,
}

impl Check {
    fn new() -> Self {
        Check { failures: Vec::new(), notes: Vec::new(), checked: 0 }
    }

    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn finish(self, id: u32, title: &'static str, start: Instant, limit: Option<Duration>) -> Outcome {
        let elapsed = start.elapsed();
        let mut failures = self.failures;
        if let Some(limit) = limit {
            if elapsed > limit {
                failures.push(format!("runtime {:.2} s exceeds {:.0} s", elapsed.as_secs_f64(), limit.as_secs_f64()));
            }
        }
        let passed = failures.is_empty();
        let summary = if passed {
            format!("{} checks", self.checked)
        } else {
            format!("{} of {} checks failed", failures.len(), self.checked)
        };
        let details = failures.into_iter().map(|f| format!("mismatch: {f}")).chain(self.notes).collect();
        Outcome { id, title, passed, summary, details, elapsed }
    }
}

fn ns_for(d: Degree) -> Vec<usize> {
    let m = d.min_intervals();
    vec![m, m + 1, 2 * m + 3, 64]
}

/// Moment conditions `mu_j(e_r) = theta_j^(r)` in rational arithmetic.
pub fn moment_conditions() -> Outcome {
    let start = Instant::now();
    let mut c = Check::new();
    for d in Degree::ALL {
        for n in ns_for(d) {
            let table = StencilTable::build(d, n).expect("admissible n");
            let defects = table.moment_defects();
            c.expect(defects.is_empty(), || format!("d={d} n={n}: (j, r) = {defects:?}"));
        }
    }
    c.finish(1, "moment conditions", start, Some(Duration::from_secs(1)))
}

/// Random polynomials of degree `d` are reproduced by `Q_d`.
pub fn polynomial_reproduction() -> Outcome {
    let start = Instant::now();
    let mut c = Check::new();
    let mut rng = rand::rngs::StdRng::seed_from_u64(SEED);
    let p = UniformPartition::new(-1.0, 1.0, 16).expect("valid partition");
    let xs: Vec<f64> = (0..1000).map(|i| -1.0 + 2.0 * i as f64 / 999.0).collect();
    let mut worst = 0.0f64;
    for d in Degree::ALL {
        let qi = QuasiInterpolant::new(d, p).expect("n = 16 is admissible");
        for _ in 0..20 {
            let coeffs: Vec<f64> = (0..=d.get()).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let poly = TestFunction::Poly(coeffs);
            let s = qi.apply_fn(|x| poly.eval(x));
            let norm = xs.iter().map(|&x| poly.eval(x).abs()).fold(0.0, f64::max);
            let err = xs.iter().map(|&x| (s.eval(x).expect("inside") - poly.eval(x)).abs()).fold(0.0, f64::max);
            worst = worst.max(err / norm);
            c.expect(err <= 1e-11 * norm, || format!("d={d} {poly}: error {err:e}, norm {norm:e}"));
        }
    }
    c.notes.push(format!("largest relative error {worst:e}"));
    c.finish(2, "polynomial reproduction", start, None)
}

/// Lebesgue constants at `n = 100`, 256 samples per interval.
pub fn norms() -> Outcome {
    let start = Instant::now();
    let mut c = Check::new();
    let p = UniformPartition::new(-1.0, 1.0, 100).expect("valid partition");
    let sup = |d: Degree| lebesgue_profile(&QuasiInterpolant::new(d, p).expect("admissible"), 256);
    for (d, want, tol) in reference::NORMS {
        let prof = sup(d);
        c.expect((prof.sup - want).abs() <= tol, || format!("d={d}: {:.5} vs {want} +- {tol}", prof.sup));
        c.notes.push(format!("d={d}: {:.5} at x = {:.5}", prof.sup, prof.argmax));
    }
    let q4 = sup(Degree::QUARTIC);
    c.expect(q4.sup <= reference::QUARTIC_NORM_BOUND, || format!("d=4: {:.5} above {}", q4.sup, reference::QUARTIC_NORM_BOUND));
    c.notes.push(format!("d=4: {:.5} at x = {:.5}", q4.sup, q4.argmax));
    c.finish(3, "operator norms", start, Some(Duration::from_secs(10)))
}

/// Weights derived from the stencils equal the tabulated ones.
pub fn weight_identity() -> Outcome {
    let start = Instant::now();
    let mut c = Check::new();
    for d in Degree::ALL {
        for n in ns_for(d) {
            let derived = QuadratureRule::derive(d, n).expect("admissible");
            let closed = QuadratureRule::closed_form(d, n).expect("admissible");
            c.expect(derived == closed, || format!("d={d} n={n}: derived weights differ"));
            c.expect(derived.weight_sum() == Rational64::from_integer(n as i64), || {
                format!("d={d} n={n}: weight sum {}", derived.weight_sum())
            });
        }
    }
    c.finish(4, "quadrature weights", start, None)
}

fn quadrature_errors(entries: &[reference::QuadratureEntry]) -> HashMap<(String, String, usize), f64> {
    let mut groups: HashMap<(String, String), (RuleFamily, Func, Vec<usize>)> = HashMap::new();
    for e in entries {
        let g = groups.entry((e.family.to_string(), format!("{:?}", e.func))).or_insert((e.family, e.func, Vec::new()));
        if !g.2.contains(&e.n) {
            g.2.push(e.n);
        }
    }
    let mut out = HashMap::new();
    for ((fam, func), (family, f, ns)) in groups {
        let t = error_table(family, &f.function(), -1.0, 1.0, &ns).expect("admissible table");
        for r in t.rows {
            out.insert((fam.clone(), func.clone(), r.n), r.error.expect("known integral"));
        }
    }
    out
}

/// Signed quadrature errors against the printed tables.
pub fn quadrature_tables() -> Outcome {
    let start = Instant::now();
    let mut c = Check::new();
    let entries = reference::quadrature_entries();
    let errors = quadrature_errors(&entries);
    for e in &entries {
        let got = errors[&(e.family.to_string(), format!("{:?}", e.func), e.n)];
        let label = format!("{} {} n={}: {} vs {}", e.family, e.func.function(), e.n, mantissa_exp(got, 2), e.printed);
        match e.status {
            Status::Hard => {
                let printed: Printed = e.printed.parse().expect("hard entries parse");
                c.expect(printed.matches(got), || format!("{label} (computed {got:.4e})"));
            }
            Status::Informational(why) => c.notes.push(format!("info: {label} ({why})")),
        }
    }
    c.finish(5, "integration tables", start, Some(Duration::from_secs(30)))
}

/// Fitted orders of the rules on `e^{-x} sin(5 pi x)`.
pub fn convergence_orders() -> Outcome {
    let start = Instant::now();
    let mut c = Check::new();
    let ns = doubling(64, 1024);
    let f = TestFunction::ExpSin;
    let cases = [
        (RuleFamily::QuasiInterpolant(Degree::QUADRATIC), 3.75, 4.25),
        (RuleFamily::QuasiInterpolant(Degree::CUBIC), 3.75, 4.25),
        (RuleFamily::QuasiInterpolant(Degree::QUARTIC), 5.7, 6.3),
        (RuleFamily::QuasiInterpolant(Degree::QUINTIC), 5.7, 6.3),
        (RuleFamily::ExtrapolatedQuadratic, 4.8, f64::INFINITY),
    ];
    for (family, lo, hi) in cases {
        let order = error_table(family, &f, -1.0, 1.0, &ns).expect("admissible").order.unwrap_or(f64::NAN);
        c.expect((lo..=hi).contains(&order), || format!("{family}: order {order:.3} outside [{lo}, {hi}]"));
        c.notes.push(format!("{family}: order {order:.3}"));
    }
    c.finish(6, "convergence orders", start, None)
}

/// Differentiation matrices against their tabulated forms.
pub fn diff_matrices() -> Outcome {
    let start = Instant::now();
    let mut c = Check::new();
    for d in [Degree::QUADRATIC, Degree::CUBIC] {
        for n in ns_for(d) {
            let m = DiffMatrix::build(d, n).expect("admissible");
            c.expect(m == DiffMatrix::closed_form(d, n).expect("admissible"), || format!("d={d} n={n}: entries differ"));
            let nodes: Vec<Rational64> = GridKind::for_degree(d).lattice_offsets(n);
            let ones = vec![Rational64::from_integer(1); m.dim()];
            let zero = m.apply_exact(&ones).expect("dimension");
            c.expect(zero.iter().all(|v| *v == Rational64::from_integer(0)), || format!("d={d} n={n}: nonzero row sum"));
            let id = m.apply_exact(&nodes).expect("dimension");
            c.expect(id.iter().all(|v| *v == Rational64::from_integer(1)), || format!("d={d} n={n}: node identity fails"));
        }
    }
    c.finish(7, "differentiation matrices", start, None)
}

/// Derivative error tables.
pub fn diff_tables() -> Outcome {
    let start = Instant::now();
    let mut c = Check::new();
    let ns = reference::DIFF_NS;
    let mut cache = HashMap::new();
    for e in reference::diff_entries() {
        let key = (e.degree, format!("{:?}", e.func));
        let table = cache
            .entry(key)
            .or_insert_with(|| diff_error_table(e.degree, &e.func.function(), -1.0, 1.0, &ns).expect("admissible"));
        let row = table.rows.iter().find(|r| r.n == e.n).expect("tabulated n");
        let got = if e.centered { row.centered_error } else { row.qi_error };
        let printed: Printed = e.printed.parse().expect("entries parse");
        let ok = match e.tolerance {
            Tolerance::LastDigit => printed.matches(got),
            Tolerance::Factor(k) => printed.within_factor(got, k),
        };
        let label = format!(
            "d={} {} n={} {}: {got:.6e} vs {}",
            e.degree,
            e.func.function(),
            e.n,
            if e.centered { "centered" } else { "spline" },
            e.printed
        );
        match e.status {
            Status::Hard => c.expect(ok, || label.clone()),
            Status::Informational(why) => c.notes.push(format!("info: {label} ({why})")),
        }
    }
    let cubic = &cache[&(Degree::CUBIC, format!("{:?}", Func::Runge16))];
    let order = cubic.qi_order.unwrap_or(f64::NAN);
    c.expect(order >= 3.7, || format!("cubic order on runge16 {order:.3} < 3.7"));
    c.notes.push(format!("cubic spline-derivative order on runge16: {order:.3}"));
    c.notes.push("second function evaluated as e^{-x} sin(5x)".to_string());
    c.finish(8, "differentiation tables", start, None)
}

/// Errors `x_k - nearest zero` of `Q_2 P_8` for each tabulated `n`.
pub fn legendre_root_errors(n: usize) -> (usize, f64, Vec<f64>) {
    let p = UniformPartition::new(-1.0, 1.0, n).expect("valid partition");
    let samples = SampleGrid::new(GridKind::Midpoints, &p).sample(splineqi::legendre_p8);
    let rep = find_zeros(p, &samples).expect("admissible n");
    let worst = rep.roots.iter().map(|r| r.residual.abs()).fold(0.0, f64::max);
    let errs = nearest_root_errors(&rep, &LEGENDRE8_POSITIVE_ZEROS).into_iter().map(|e| e.unwrap_or(f64::NAN)).collect();
    (rep.roots.len(), worst, errs)
}

/// Zeros of `P_8` located through `Q_2`.
pub fn roots() -> Outcome {
    let start = Instant::now();
    let mut c = Check::new();
    for (n, row) in reference::ROOT_NS.iter().zip(reference::ROOT_ERRORS) {
        let (count, residual, errs) = legendre_root_errors(*n);
        c.expect(count == 8, || format!("n={n}: {count} roots"));
        c.expect(residual <= 1e-12, || format!("n={n}: residual {residual:e}"));
        for (k, (got, printed)) in errs.iter().zip(row).enumerate() {
            let want: f64 = printed.parse::<Printed>().expect("entries parse").value;
            let tol = reference::root_tolerance(want);
            c.expect((got - want).abs() <= tol, || format!("n={n} eps_{}: {got:.6} vs {printed} (tolerance {tol:.1e})", k + 1));
        }
    }
    c.finish(9, "Legendre zeros", start, None)
}

/// Zeros of a quadratic spline from dense sign changes refined by bisection.
pub fn bisection_oracle(s: &Spline, samples_per_interval: usize) -> Vec<f64> {
    let p = *s.space().partition();
    let m = p.n() * samples_per_interval;
    let f = |x: f64| s.eval(x).expect("inside");
    let xs: Vec<f64> = (0..=m).map(|i| p.at_offset(i as f64 / samples_per_interval as f64)).collect();
    let mut out = Vec::new();
    for w in xs.windows(2) {
        let (mut lo, mut hi) = (w[0], w[1]);
        let flo = f(lo);
        if flo == 0.0 {
            out.push(lo);
            continue;
        }
        if flo * f(hi) >= 0.0 {
            continue;
        }
        while hi - lo > 1e-15 * (1.0 + lo.abs()) {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if f(lo) * f(mid) <= 0.0 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        out.push(0.5 * (lo + hi));
    }
    if f(p.b()) == 0.0 {
        out.push(p.b());
    }
    out
}

/// Piecewise solver against the bisection oracle on random splines.
pub fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut c = Check::new();
    let mut rng = rand::rngs::StdRng::seed_from_u64(SEED + 1);
    let space = SplineSpace::new(Degree::QUADRATIC, UniformPartition::new(-1.0, 1.0, 24).expect("valid"))
        .expect("admissible");
    let mut total = 0;
    for trial in 0..100 {
        let s = space.spline((0..space.dim()).map(|_| rng.gen_range(-1.0..1.0)).collect()).expect("dimension");
        let got: Vec<f64> = spline_zeros(&s, 0.0).expect("quadratic").roots.iter().map(|r| r.x).collect();
        let want = bisection_oracle(&s, 1000);
        total += got.len();
        let close = got.len() == want.len() && got.iter().zip(&want).all(|(g, w)| (g - w).abs() <= 1e-10);
        c.expect(close, || format!("trial {trial}: {} roots vs {} from the oracle", got.len(), want.len()));
    }
    c.notes.push(format!("{total} roots compared"));
    c.finish(10, "solver vs bisection oracle", start, None)
}

pub const CHECKS: [fn() -> Outcome; 10] = [
    moment_conditions,
    polynomial_reproduction,
    norms,
    weight_identity,
    quadrature_tables,
    convergence_orders,
    diff_matrices,
    diff_tables,
    roots,
    oracle_equivalence,
];

/// The largest `|eps_k|` must shrink by at least 8 per doubling of `n`.
pub fn root_convergence() -> Outcome {
    let start = Instant::now();
    let mut c = Check::new();
    let maxes: Vec<(usize, f64)> = reference::ROOT_NS
        .iter()
        .map(|&n| (n, legendre_root_errors(n).2.iter().map(|e| e.abs()).fold(0.0, f64::max)))
        .collect();
    for w in maxes.windows(2) {
        let factor = w[0].1 / w[1].1;
        c.expect(factor >= 8.0, || format!("n={} -> {}: factor {factor:.2}", w[0].0, w[1].0));
        c.notes.push(format!("n={} -> {}: max |eps| {:.6} -> {:.6}, factor {factor:.2}", w[0].0, w[1].0, w[0].1, w[1].1));
    }
    c.finish(0, "zero-finder convergence", start, None)
}

pub fn run_all() -> Vec<Outcome> {
    CHECKS.iter().map(|f| f()).collect()
}
