//! Browser bindings for the demo page in `www/`.
//!
//! Each export is a thin `wasm_bindgen` wrapper over a plain function
//! returning `Result<_, String>`, so the logic is testable natively.
//! Curves come back as flat `Float64Array`s of interleaved pairs.

use std::f64::consts::PI;

use num_complex::Complex64;
use wasm_bindgen::prelude::*;

use univalent::families::{boundary_image, sample_a_theta, AngleVariant};
use univalent::functionals::angle_grid;
use univalent::series::DEFAULT_ORDER;
use univalent::{check_membership, FunctionSource, FunctionalKind, NormalizedFunction};

/// Largest grid the page may request.
pub const MAX_GRID: usize = 1 << 16;

fn parse_source(source: &str) -> Result<NormalizedFunction, String> {
    let src: FunctionSource = source.trim().parse().map_err(|e| format!("{e}"))?;
    src.build(DEFAULT_ORDER).map_err(|e| e.to_string())
}

fn check_grid(grid: usize) -> Result<(), String> {
    if grid > MAX_GRID {
        return Err(format!("grid {grid} exceeds {MAX_GRID}"));
    }
    Ok(())
}

fn interleave(pairs: impl Iterator<Item = (f64, f64)>) -> Vec<f64> {
    pairs.flat_map(|(a, b)| [a, b]).collect()
}

/// `[re_0, im_0, re_1, im_1, ...]` of `f(r e^{i theta})`.
pub fn boundary_points(source: &str, r: f64, grid: usize) -> Result<Vec<f64>, String> {
    check_grid(grid)?;
    let f = parse_source(source)?;
    let pts = boundary_image(&f, r, grid).map_err(|e| e.to_string())?;
    Ok(interleave(pts.into_iter().map(|(_, w)| (w.re, w.im))))
}

/// `[theta_0, A_0, ...]` on `[0, pi]` for `ex31` or `ex34`.
pub fn a_theta_points(variant: &str, n: u32, samples: usize) -> Result<Vec<f64>, String> {
    check_grid(samples)?;
    let variant = match variant {
        "ex31" => AngleVariant::Ex31,
        "ex34" => AngleVariant::Ex34,
        other => return Err(format!("unknown variant {other:?}; expected ex31 or ex34")),
    };
    if n == 0 {
        return Err("n must be at least 1".into());
    }
    let grid = sample_a_theta(variant, n, 0.0, PI, samples);
    Ok(interleave(grid.thetas.into_iter().zip(grid.values)))
}

/// `[theta_0, Re(zf'/f)_0, ...]` along `|z| = r`.
pub fn starlike_points(source: &str, r: f64, grid: usize) -> Result<Vec<f64>, String> {
    check_grid(grid)?;
    if !(r > 0.0 && r < 1.0) {
        return Err(format!("radius {r} must lie in (0, 1)"));
    }
    let f = parse_source(source)?;
    let phi = f.phi();
    let mut out = Vec::with_capacity(2 * grid);
    for theta in angle_grid(grid) {
        let z = Complex64::from_polar(r, theta);
        let (p, dp) = phi.eval_with_derivative(z);
        let value = ((p - z * dp) / f.phi_at(z).map_err(|e| e.to_string())?).re;
        out.extend([theta, value]);
    }
    Ok(out)
}

/// Membership report as JSON text.
pub fn membership_report(source: &str, class: &str, r: f64, grid: usize) -> Result<String, String> {
    check_grid(grid)?;
    let kind: FunctionalKind = class.trim().parse().map_err(|e| format!("{e}"))?;
    let f = parse_source(source)?;
    let report = check_membership(kind, &f, &[r], grid).map_err(|e| e.to_string())?;
    serde_json::to_string_pretty(&report).map_err(|e| e.to_string())
}

#[wasm_bindgen(js_name = boundaryImage)]
pub fn boundary_image_js(source: &str, r: f64, grid: usize) -> Result<Vec<f64>, JsError> {
    boundary_points(source, r, grid).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = aThetaCurve)]
pub fn a_theta_curve_js(variant: &str, n: u32, samples: usize) -> Result<Vec<f64>, JsError> {
    a_theta_points(variant, n, samples).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = starlikeProfile)]
pub fn starlike_profile_js(source: &str, r: f64, grid: usize) -> Result<Vec<f64>, JsError> {
    starlike_points(source, r, grid).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = membership)]
pub fn membership_js(source: &str, class: &str, r: f64, grid: usize) -> Result<String, JsError> {
    membership_report(source, class, r, grid).map_err(|e| JsError::new(&e))
}
