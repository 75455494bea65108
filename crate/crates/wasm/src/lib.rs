//! Browser bindings for three demo operations: the approximation curve of
//! `Q_d f`, the Lebesgue function of `Q_d`, and the zeros of `Q_2 f`.
//!
//! The `*_values` functions are plain Rust and carry the logic; the
//! `#[wasm_bindgen]` exports only convert errors.

use splineqi::{find_zeros, lebesgue_profile, Degree, GridKind, QuasiInterpolant, SampleGrid, TestFunction, UniformPartition};
use wasm_bindgen::prelude::*;

fn setup(degree: usize, n: usize, a: f64, b: f64) -> Result<QuasiInterpolant, String> {
    let d = Degree::new(degree).map_err(|e| e.to_string())?;
    let p = UniformPartition::new(a, b, n).map_err(|e| e.to_string())?;
    QuasiInterpolant::new(d, p).map_err(|e| e.to_string())
}

fn function(name: &str) -> Result<TestFunction, String> {
    name.parse().map_err(|e: splineqi::Error| e.to_string())
}

/// Triples `x, f(x), Q_d f(x)` flattened, `points` per subinterval.
pub fn curve_values(degree: usize, n: usize, name: &str, a: f64, b: f64, points: usize) -> Result<Vec<f64>, String> {
    let f = function(name)?;
    let qi = setup(degree, n, a, b)?;
    let s = qi.apply_fn(|x| f.eval(x));
    let p = qi.space().partition();
    let per = points.max(1);
    let mut out = Vec::with_capacity(3 * (n * per + 1));
    for i in 0..=n * per {
        let x = p.at_offset(i as f64 / per as f64);
        out.extend([x, f.eval(x), s.eval(x).map_err(|e| e.to_string())?]);
    }
    Ok(out)
}

/// Pairs `x, Lambda(x)` flattened; the last pair is `argmax, sup`.
pub fn lebesgue_values(degree: usize, n: usize, resolution: usize) -> Result<Vec<f64>, String> {
    if resolution == 0 {
        return Err("resolution must be at least 1".into());
    }
    let prof = lebesgue_profile(&setup(degree, n, -1.0, 1.0)?, resolution);
    let mut out: Vec<f64> = prof.xs.iter().zip(&prof.values).flat_map(|(x, v)| [*x, *v]).collect();
    out.extend([prof.argmax, prof.sup]);
    Ok(out)
}

/// Zeros of `Q_2 f` on `[a, b]`.
pub fn zero_values(name: &str, n: usize, a: f64, b: f64) -> Result<Vec<f64>, String> {
    let f = function(name)?;
    let p = UniformPartition::new(a, b, n).map_err(|e| e.to_string())?;
    let samples = SampleGrid::new(GridKind::Midpoints, &p).sample(|x| f.eval(x));
    let rep = find_zeros(p, &samples).map_err(|e| e.to_string())?;
    Ok(rep.roots.iter().map(|r| r.x).collect())
}

#[wasm_bindgen]
pub fn curve(degree: usize, n: usize, name: &str, a: f64, b: f64, points: usize) -> Result<Vec<f64>, JsValue> {
    curve_values(degree, n, name, a, b, points).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn lebesgue(degree: usize, n: usize, resolution: usize) -> Result<Vec<f64>, JsValue> {
    lebesgue_values(degree, n, resolution).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn zeros(name: &str, n: usize, a: f64, b: f64) -> Result<Vec<f64>, JsValue> {
    zero_values(name, n, a, b).map_err(|e| JsValue::from_str(&e))
}
