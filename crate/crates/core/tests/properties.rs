use proptest::prelude::*;
use splineqi::rootfind::{solve_piece, spline_zeros};
use splineqi::*;

fn degree() -> impl Strategy<Value = Degree> {
    (2usize..=5).prop_map(|d| Degree::new(d).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reproduces_polynomials(d in degree(), extra in 0usize..20, a in -5.0f64..5.0, len in 0.1f64..10.0,
                              coeffs in proptest::collection::vec(-3.0f64..3.0, 6)) {
        let n = d.min_intervals() + extra;
        let p = UniformPartition::new(a, a + len, n).unwrap();
        let c: Vec<f64> = coeffs[..=d.get()].to_vec();
        let mid = a + 0.5 * len;
        let f = |x: f64| c.iter().rev().fold(0.0, |acc, ci| acc * (x - mid) + ci);
        let s = QuasiInterpolant::new(d, p).unwrap().apply_fn(f);
        let scale = (0..=100).map(|i| f(a + len * i as f64 / 100.0).abs()).fold(1.0, f64::max);
        for i in 0..=50 {
            let x = (a + len * i as f64 / 50.0).min(p.b());
            prop_assert!((s.eval(x).unwrap() - f(x)).abs() <= 1e-11 * scale);
        }
    }

    #[test]
    fn integrates_polynomials_exactly(d in degree(), extra in 0usize..20, coeffs in proptest::collection::vec(-3.0f64..3.0, 6)) {
        let n = d.min_intervals() + extra;
        let p = UniformPartition::new(-1.0, 1.0, n).unwrap();
        let c: Vec<f64> = coeffs[..=d.get()].to_vec();
        let rule = QuadratureRule::derive(d, n).unwrap();
        let samples = rule.grid(&p).sample(|x| c.iter().rev().fold(0.0, |acc, ci| acc * x + ci));
        let exact = TestFunction::Poly(c.clone()).integral(-1.0, 1.0).unwrap().to_f64();
        prop_assert!((rule.integrate(&p, &samples).unwrap() - exact).abs() < 1e-12);
    }

    #[test]
    fn differentiation_rows_annihilate_constants(d in 2usize..=3, extra in 0usize..30) {
        let d = Degree::new(d).unwrap();
        let m = DiffMatrix::build(d, d.min_intervals() + extra).unwrap();
        for i in 0..m.dim() {
            let (_, row) = m.row(i);
            prop_assert_eq!(row.iter().sum::<num_rational::Rational64>(), num_rational::Rational64::from_integer(0));
        }
    }

    #[test]
    fn piece_roots_are_roots(b0 in -1.0f64..1.0, b1 in -1.0f64..1.0, b2 in -1.0f64..1.0) {
        let roots = solve_piece([b0, b1, b2], (0.0, 1.0), 0.0);
        for r in roots.roots {
            let t = r.x;
            let v = b0 * (1.0 - t) * (1.0 - t) + 2.0 * b1 * t * (1.0 - t) + b2 * t * t;
            prop_assert!(v.abs() < 1e-9, "value {v} at {t}");
        }
    }

    #[test]
    fn spline_roots_sorted_and_inside(coeffs in proptest::collection::vec(-1.0f64..1.0, 14)) {
        let space = SplineSpace::new(Degree::QUADRATIC, UniformPartition::new(-1.0, 1.0, 12).unwrap()).unwrap();
        let s = space.spline(coeffs).unwrap();
        let rep = spline_zeros(&s, 0.0).unwrap();
        for w in rep.roots.windows(2) {
            prop_assert!(w[0].x < w[1].x);
        }
        for r in &rep.roots {
            let p = space.partition();
            prop_assert!(p.knot(r.interval as i64 - 1) <= r.x && r.x <= p.knot(r.interval as i64));
            prop_assert!(r.residual.abs() <= 1e-12);
        }
    }
}

/// Zeros of a quadratic spline located by dense sign changes and bisection.
fn bisection_oracle(s: &Spline, samples_per_interval: usize) -> Vec<f64> {
    let p = *s.space().partition();
    let m = p.n() * samples_per_interval;
    let xs: Vec<f64> = (0..=m).map(|i| p.a() + p.len() * i as f64 / m as f64).collect();
    let f = |x: f64| s.eval(x).unwrap();
    let mut roots = Vec::new();
    for w in xs.windows(2) {
        let (mut lo, mut hi) = (w[0], w[1]);
        let (flo, fhi) = (f(lo), f(hi));
        if flo == 0.0 {
            roots.push(lo);
            continue;
        }
        if flo * fhi > 0.0 {
            continue;
        }
        if fhi == 0.0 {
            continue;
        }
        for _ in 0..200 {
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
        roots.push(0.5 * (lo + hi));
    }
    if f(p.b()) == 0.0 {
        roots.push(p.b());
    }
    roots
}

#[test]
fn piecewise_solver_matches_bisection() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand::rngs::StdRng::seed_from_u64(2024);
    let space = SplineSpace::new(Degree::QUADRATIC, UniformPartition::new(-1.0, 1.0, 20).unwrap()).unwrap();
    for _ in 0..100 {
        let s = space.spline((0..space.dim()).map(|_| rng.gen_range(-1.0..1.0)).collect()).unwrap();
        let got: Vec<f64> = spline_zeros(&s, 0.0).unwrap().roots.iter().map(|r| r.x).collect();
        let want = bisection_oracle(&s, 2000);
        assert_eq!(got.len(), want.len(), "{got:?} vs {want:?}");
        for (g, w) in got.iter().zip(&want) {
            assert!((g - w).abs() < 1e-10);
        }
    }
}
