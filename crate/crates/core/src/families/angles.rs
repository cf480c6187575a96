//! Closed forms for the numerator `A(theta)` of `Re(e^{it} f'(e^{it}) / f(e^{it}))`
//! for the trinomial families, the auxiliary `D(theta)`, and the `table1` rows.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::AngleVariant;
use crate::error::{Error, Result};
use crate::search::golden_section_min;

/// Reference values of `A(theta_n)` for `n = 1..=14`, as tabulated to 5-6 digits.
pub const TABLE1_REFERENCE: [f64; 14] = [
    -0.0258011,
    -0.0103986,
    -0.00437311,
    -0.00211511,
    -0.00113174,
    -0.00064961,
    -0.00039145,
    -0.000243709,
    -0.000154718,
    -0.0000989276,
    -0.0000628326,
    -0.0000388937,
    -0.000022708,
    -0.0000116051,
];

/// General trinomial form
/// `1 + (1-a)cos t - a(m-2)cos mt - a(1-a)(m-1)cos(m-1)t - a^2(m-1)`.
pub fn a_theta(variant: AngleVariant, n: u32, theta: f64) -> f64 {
    let (a, m) = variant.alpha_m(n);
    let mf = m as f64;
    1.0 + (1.0 - a) * theta.cos()
        - a * (mf - 2.0) * (mf * theta).cos()
        - a * (1.0 - a) * (mf - 1.0) * ((mf - 1.0) * theta).cos()
        - a * a * (mf - 1.0)
}

/// `A(theta)` via the family's `D(theta)`.
pub fn a_theta_reduced(variant: AngleVariant, n: u32, theta: f64) -> f64 {
    let d = d_theta(variant, n, theta);
    match variant {
        AngleVariant::Ex31 => {
            let m = (2 * n + 1) as f64;
            1.0 - 1.0 / (m - 1.0).powi(3) - m * (m - 2.0) / (m - 1.0).powi(2) * d
        }
        AngleVariant::Ex34 => {
            let nf = n as f64;
            let k = 2.0 * nf + 1.0;
            1.0 - 2.0 / (nf * k * k) + (2.0 * nf - 1.0) / (nf * k) * d
        }
    }
}

/// Factorized `n = 1` forms: `(1+c)^2 (5-4c)/4` and `(1+c)(11+4c-12c^2)/9`.
pub fn a_theta_factored_n1(variant: AngleVariant, theta: f64) -> f64 {
    let c = theta.cos();
    match variant {
        AngleVariant::Ex31 => 0.25 * (1.0 + c).powi(2) * (5.0 - 4.0 * c),
        AngleVariant::Ex34 => (1.0 + c) * (11.0 + 4.0 * c - 12.0 * c * c) / 9.0,
    }
}

pub fn d_theta(variant: AngleVariant, n: u32, theta: f64) -> f64 {
    let m = (2 * n + 1) as f64;
    match variant {
        AngleVariant::Ex31 => -theta.cos() + (m * theta).cos() / m + ((m - 1.0) * theta).cos() / (m - 1.0),
        AngleVariant::Ex34 => {
            let nf = n as f64;
            (nf + 1.0) * theta.cos()
                - (m * theta).cos()
                - 2.0 * (nf + 1.0) / m * ((m - 1.0) * theta).cos()
        }
    }
}

/// `D'(theta) = sin t - sin mt - sin(m-1)t = -4 cos(t/2) cos(m t/2) sin(n t)`
/// for the `Ex31` `D`, `m = 2n+1`.
pub fn d_prime_theta(n: u32, theta: f64) -> f64 {
    let m = (2 * n + 1) as f64;
    -4.0 * (theta / 2.0).cos() * (m * theta / 2.0).cos() * (n as f64 * theta).sin()
}

/// Interior critical points of the `Ex31` `D` on `(0, pi)`:
/// `((2j-1) pi/(2n+1), j = 1..=n)` and `(j pi/n, j = 1..n)`.
pub fn critical_points(n: u32) -> Result<(Vec<f64>, Vec<f64>)> {
    if n < 2 {
        return Err(Error::InvalidFamilyParams(format!("critical points need n >= 2, got {n}")));
    }
    let m = (2 * n + 1) as f64;
    let odd = (1..=n).map(|j| (2 * j - 1) as f64 * PI / m).collect();
    let even = (1..n).map(|j| j as f64 * PI / n as f64).collect();
    Ok((odd, even))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AngleGridResult {
    #[serde(serialize_with = "crate::numfmt::serialize_angles")]
    pub thetas: Vec<f64>,
    pub values: Vec<f64>,
    pub min_value: f64,
    #[serde(serialize_with = "crate::numfmt::serialize_angle")]
    pub argmin: f64,
}

/// `A(theta)` on `samples` uniform angles of `[lo, hi]` (both ends included).
pub fn sample_a_theta(variant: AngleVariant, n: u32, lo: f64, hi: f64, samples: usize) -> AngleGridResult {
    let samples = samples.max(2);
    let thetas: Vec<f64> = (0..samples)
        .map(|j| lo + (hi - lo) * j as f64 / (samples - 1) as f64)
        .collect();
    let values: Vec<f64> = thetas.iter().map(|&t| a_theta(variant, n, t)).collect();
    let (argmin, min_value) = thetas
        .iter()
        .zip(&values)
        .fold((thetas[0], values[0]), |best, (&t, &v)| if v < best.1 { (t, v) } else { best });
    AngleGridResult {
        thetas,
        values,
        min_value,
        argmin,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Table1Row {
    pub n: u32,
    #[serde(serialize_with = "crate::numfmt::serialize_angle")]
    pub theta: f64,
    #[serde(rename = "A_theta")]
    pub a_theta: f64,
}

/// `theta_n = 2(2n+1) pi / (4n+3)`.
pub fn table1_theta(n: u32) -> f64 {
    2.0 * (2 * n + 1) as f64 * PI / (4 * n + 3) as f64
}

/// `A(theta_n)` for `Ex34` written in `s = sin(pi / (2(4n+3)))`.
pub fn table1_sin_form(n: u32) -> f64 {
    let nf = n as f64;
    let k = 2.0 * nf + 1.0;
    let s = (PI / (2.0 * (4.0 * nf + 3.0))).sin();
    let bracket = 2.0 * (nf + 1.0) * s * s - (4.0 * nf + 5.0) / k * s + 8.0 * (nf + 1.0) / k * s.powi(3);
    1.0 - 2.0 / (nf * k * k) - 2.0 * (2.0 * nf - 1.0) * (nf + 1.0) / (2.0 * nf * k)
        + (2.0 * nf - 1.0) / (nf * k) * bracket
}

/// Rows `n_from..=n_to` at the fixed angles `theta_n`.
pub fn table1(n_from: u32, n_to: u32) -> Vec<Table1Row> {
    (n_from.max(1)..=n_to)
        .map(|n| {
            let theta = table1_theta(n);
            let value = table1_sin_form(n);
            debug_assert!((value - a_theta(AngleVariant::Ex34, n, theta)).abs() < 1e-12);
            Table1Row { n, theta, a_theta: value }
        })
        .collect()
}

/// Rows `n_from..=n_to` where `theta` is refined by golden-section
/// minimization of `A` around `theta_n`, within `pi/(2(2n+1))` and `pi`.
pub fn table1_extended(n_from: u32, n_to: u32) -> Vec<Table1Row> {
    (n_from.max(1)..=n_to)
        .map(|n| {
            let seed = table1_theta(n);
            let half_width = PI / (2.0 * (2 * n + 1) as f64);
            let (theta, value) = golden_section_min(
                |t| a_theta(AngleVariant::Ex34, n, t),
                seed - half_width,
                (seed + half_width).min(PI),
                1e-13,
                400,
            );
            Table1Row { n, theta, a_theta: value }
        })
        .collect()
}
