/// Observed convergence order from `(n, error)` pairs: minus the
/// least-squares slope of `log(error)` against `log(n)`. Pairs with a
/// non-positive or non-finite error are skipped.
pub fn fit_order(rows: &[(usize, f64)]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = rows
        .iter()
        .filter(|(_, e)| e.is_finite() && e.abs() > 0.0)
        .map(|&(n, e)| ((n as f64).ln(), e.abs().ln()))
        .collect();
    if pts.len() < 2 {
        return None;
    }
    let m = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / m;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / m;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    if sxx == 0.0 {
        return None;
    }
    Some(-sxy / sxx)
}

/// Doubling sequence `start, 2*start, ...` up to and including `end`.
pub fn doubling(start: usize, end: usize) -> Vec<usize> {
    std::iter::successors(Some(start), |&n| Some(n * 2)).take_while(|&n| n <= end).collect()
}
