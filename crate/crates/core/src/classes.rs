//! Class membership, starlikeness scans and radius-of-class search.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::functionals::{
    angle_grid, check_grid, check_radius, functional_series, max_modulus_on_circle, sup_on_circle,
    FunctionalKind, NormalizedFunction, ScanReport,
};
use crate::search::bisect_predicate;

/// Radii probed by default when judging membership.
pub const DEFAULT_RADII: [f64; 3] = [0.9, 0.99, 0.999];

/// Default number of boundary angles.
pub const DEFAULT_GRID: usize = 4096;

/// A scan fails only when its margin drops below `-MARGIN_TOL`.
pub const MARGIN_TOL: f64 = 1e-9;

/// Rounding slack when comparing a coefficient sum against the class bound.
pub const COEFFICIENT_SLACK: f64 = 1e-12;

/// `Re(z f'/f) >= -STARLIKE_TOL` on the grid counts as starlike.
pub const STARLIKE_TOL: f64 = 1e-6;

const RADIUS_BRACKET: (f64, f64) = (1e-3, 1.0 - 1e-4);
const RADIUS_MAX_ITER: usize = 60;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    MemberByCoefficient,
    MemberNumeric,
    FailNumeric,
}

impl Verdict {
    pub fn is_member(self) -> bool {
        !matches!(self, Verdict::FailNumeric)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MembershipReport {
    pub kind: FunctionalKind,
    pub coefficient_sum: f64,
    pub scans: Vec<ScanReport>,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StarlikeReport {
    pub radii: Vec<f64>,
    pub min_value: f64,
    #[serde(serialize_with = "crate::numfmt::serialize_angle")]
    pub argmin_angle: f64,
    pub argmin_radius: f64,
    pub starlike_numeric: bool,
}

/// `sum_k weight(kind, k) |b_k|`, including any attached analytic tail.
/// For `P` the weight is `k(k-1)`; for `U`, `M`, `N` it is `(k-1)^p`.
pub fn coefficient_criterion(kind: FunctionalKind, f: &NormalizedFunction) -> f64 {
    let head: f64 = f
        .phi()
        .coeffs()
        .iter()
        .enumerate()
        .skip(2)
        .map(|(k, b)| kind.weight(k) * b.norm())
        .sum();
    head + f.tail_weight_sum(kind)
}

pub fn check_membership(
    kind: FunctionalKind,
    f: &NormalizedFunction,
    radii: &[f64],
    grid: usize,
) -> Result<MembershipReport> {
    let coefficient_sum = coefficient_criterion(kind, f);
    let scans = radii
        .iter()
        .map(|&r| sup_on_circle(kind, f, r, grid))
        .collect::<Result<Vec<_>>>()?;
    let verdict = if coefficient_sum <= kind.bound() + COEFFICIENT_SLACK {
        Verdict::MemberByCoefficient
    } else if scans.iter().all(ScanReport::passes) {
        Verdict::MemberNumeric
    } else {
        Verdict::FailNumeric
    };
    Ok(MembershipReport {
        kind,
        coefficient_sum,
        scans,
        verdict,
    })
}

/// Minimum of `Re(z f'(z)/f(z))` over the circles `|z| = r`.
///
/// `z f'/f = (phi - z phi')/phi`, so only the polynomial `phi` is
/// evaluated; `f` may have poles on the unit circle.
pub fn starlike_scan(f: &NormalizedFunction, radii: &[f64], grid: usize) -> Result<StarlikeReport> {
    check_grid(grid)?;
    let phi = f.phi();
    // phi - z phi' has coefficients (1 - k) b_k
    let numerator = phi.sub(&phi.derivative().with_order(phi.order()).shift_up(1));
    let mut best = (f64::INFINITY, 0.0, 0.0);
    for &r in radii {
        check_radius(r)?;
        for theta in angle_grid(grid) {
            let z = Complex64::from_polar(r, theta);
            let value = (numerator.eval(z) / f.phi_at(z)?).re;
            if value < best.0 {
                best = (value, theta, r);
            }
        }
    }
    Ok(StarlikeReport {
        radii: radii.to_vec(),
        min_value: best.0,
        argmin_angle: best.1,
        argmin_radius: best.2,
        starlike_numeric: best.0 >= -STARLIKE_TOL,
    })
}

/// Largest `r` up to which the functional stays within its bound on the
/// sampled circles, found by bisection to absolute tolerance `tol`.
/// Returns 1.0 when no violation is seen up to `r = 1 - 1e-4`.
pub fn class_radius(kind: FunctionalKind, f: &NormalizedFunction, tol: f64) -> f64 {
    class_radius_with_grid(kind, f, tol, DEFAULT_GRID)
}

pub fn class_radius_with_grid(kind: FunctionalKind, f: &NormalizedFunction, tol: f64, grid: usize) -> f64 {
    let series = functional_series(kind, f);
    let violated = |r: f64| max_modulus_on_circle(&series, r, grid).0 > kind.bound() + MARGIN_TOL;
    let (lo, hi) = RADIUS_BRACKET;
    if !violated(hi) {
        return 1.0;
    }
    if violated(lo) {
        return lo;
    }
    let (a, b) = bisect_predicate(violated, lo, hi, tol, RADIUS_MAX_ITER);
    0.5 * (a + b)
}
