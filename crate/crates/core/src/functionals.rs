//! The four differential functionals `U_f`, `P_f`, `M_f`, `N_f`.
//!
//! A normalized function is stored through `phi = z/f = 1 + sum b_k z^k`.
//! In these terms
//!
//! ```text
//! U_f = -sum (k-1)   b_k z^k
//! M_f =  sum (k-1)^2 b_k z^k
//! N_f = -sum (k-1)^3 b_k z^k
//! P_f =  sum k(k-1)  b_k z^(k-2)
//! ```
//!
//! [`functional_series`] uses these coefficient forms.
//! [`functional_eval_direct`] evaluates the defining expressions
//! `f'(z/f)^2 - 1`, `(z/f)''`, `z^2 (z/f)'' + ...` and `-z^3 (z/f)''' + ...`
//! pointwise, so the two can be checked against each other.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::ComplexSeries;
use crate::zeta::power_tail;

/// Tolerance on `phi(0) = 1` accepted by [`NormalizedFunction::from_phi`].
pub const NORMALIZATION_TOL: f64 = 1e-12;

/// `|phi(z)|` at or below this counts as a zero of `phi`.
pub const PHI_VANISH_EPS: f64 = 1e-9;

/// Minimum number of angles on a boundary grid.
pub const MIN_GRID: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FunctionalKind {
    U,
    P,
    M,
    N,
}

impl FunctionalKind {
    pub const ALL: [FunctionalKind; 4] = [Self::U, Self::P, Self::M, Self::N];

    /// Defining bound of the class: 2 for `P`, 1 otherwise.
    pub fn bound(self) -> f64 {
        match self {
            Self::P => 2.0,
            Self::U | Self::M | Self::N => 1.0,
        }
    }

    /// Coefficient weight attached to `b_k`, without sign.
    pub fn weight(self, k: usize) -> f64 {
        let j = k.saturating_sub(1) as f64;
        match self {
            Self::U => j,
            Self::M => j * j,
            Self::N => j * j * j,
            Self::P => k as f64 * j,
        }
    }
}

impl fmt::Display for FunctionalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::U => "U",
            Self::P => "P",
            Self::M => "M",
            Self::N => "N",
        };
        f.write_str(s)
    }
}

impl FromStr for FunctionalKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "U" | "u" => Ok(Self::U),
            "P" | "p" => Ok(Self::P),
            "M" | "m" => Ok(Self::M),
            "N" | "n" => Ok(Self::N),
            other => Err(Error::Parse(format!("unknown class `{other}` (expected U, P, M or N)"))),
        }
    }
}

/// Coefficients beyond the stored order of the form
/// `b_k = scale / (k-1)^power` for every `k > order`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PowerTail {
    pub scale: f64,
    pub power: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NormalizedFunction {
    pub label: String,
    phi: ComplexSeries,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    tail: Vec<PowerTail>,
}

impl NormalizedFunction {
    pub fn from_phi(phi: ComplexSeries) -> Result<Self> {
        Self::labelled(phi, "phi")
    }

    pub fn labelled(phi: ComplexSeries, label: impl Into<String>) -> Result<Self> {
        let constant = phi.coeff(0);
        if (constant - 1.0).norm() > NORMALIZATION_TOL {
            return Err(Error::NotNormalized { constant });
        }
        let mut coeffs = phi.coeffs().to_vec();
        coeffs[0] = Complex64::new(1.0, 0.0);
        Ok(Self {
            label: label.into(),
            phi: ComplexSeries::new(coeffs)?,
            tail: Vec::new(),
        })
    }

    /// `f(z) = z`.
    pub fn identity(order: usize) -> Self {
        Self {
            label: "identity".into(),
            phi: ComplexSeries::one(order),
            tail: Vec::new(),
        }
    }

    /// Attaches an analytically known coefficient tail.
    pub fn with_tail(mut self, tail: Vec<PowerTail>) -> Self {
        self.tail = tail;
        self
    }

    pub fn phi(&self) -> &ComplexSeries {
        &self.phi
    }

    pub fn tail(&self) -> &[PowerTail] {
        &self.tail
    }

    pub fn order(&self) -> usize {
        self.phi.order()
    }

    /// `b_k`, the coefficient of `z^k` in `phi`.
    pub fn b(&self, k: usize) -> Complex64 {
        self.phi.coeff(k)
    }

    /// Truncated series of `f = z / phi`, same order as `phi`.
    pub fn f_series(&self) -> Result<ComplexSeries> {
        let inv = self.phi.reciprocal()?;
        Ok(inv.shift_up(1))
    }

    pub fn phi_at(&self, z: Complex64) -> Result<Complex64> {
        let p = self.phi.eval(z);
        if p.norm() <= PHI_VANISH_EPS {
            return Err(Error::PhiVanishes { z, modulus: p.norm() });
        }
        Ok(p)
    }

    /// `f(z) = z / phi(z)`.
    pub fn f_at(&self, z: Complex64) -> Result<Complex64> {
        Ok(z / self.phi_at(z)?)
    }

    /// `f(rho z) / rho` for `|rho| = 1`, i.e. `phi(rho z)`.
    pub fn rotated(&self, rho: Complex64) -> Self {
        let mut power = Complex64::new(1.0, 0.0);
        let coeffs = self
            .phi
            .coeffs()
            .iter()
            .map(|c| {
                let v = c * power;
                power *= rho;
                v
            })
            .collect();
        Self {
            label: format!("{}@rot", self.label),
            phi: ComplexSeries::new(coeffs).expect("rotation keeps coefficients finite"),
            tail: self.tail.clone(),
        }
    }

    /// `sum_{k > order} weight(kind, k) |b_k|` over the attached tail terms.
    /// Exact for a single tail term, an upper bound otherwise.
    pub fn tail_weight_sum(&self, kind: FunctionalKind) -> f64 {
        let start = self.order() as u64; // first omitted k-1
        self.tail
            .iter()
            .map(|t| {
                let p = t.power as f64;
                let s = match kind {
                    FunctionalKind::U => power_tail(p - 1.0, start),
                    FunctionalKind::M => power_tail(p - 2.0, start),
                    FunctionalKind::N => power_tail(p - 3.0, start),
                    // k(k-1) = j^2 + j with j = k-1
                    FunctionalKind::P => power_tail(p - 2.0, start) + power_tail(p - 1.0, start),
                };
                t.scale.abs() * s
            })
            .sum()
    }
}

/// Exact truncated series of the selected functional.
pub fn functional_series(kind: FunctionalKind, f: &NormalizedFunction) -> ComplexSeries {
    let phi = f.phi();
    let n = phi.order();
    match kind {
        FunctionalKind::U | FunctionalKind::M | FunctionalKind::N => {
            let sign = if kind == FunctionalKind::M { 1.0 } else { -1.0 };
            // weight vanishes at k = 0 and k = 1; keep those as +0 rather than -0
            phi.map_indexed(|k| if k < 2 { 0.0 } else { sign * kind.weight(k) })
        }
        FunctionalKind::P => {
            if n < 2 {
                return ComplexSeries::zero(0);
            }
            let coeffs = (2..=n)
                .map(|k| phi.coeff(k) * kind.weight(k))
                .collect();
            ComplexSeries::new(coeffs).expect("weighted coefficients stay finite")
        }
    }
}

/// Evaluates the defining differential expression at `z` from pointwise
/// values of `phi` and its derivatives, with `f = z/phi` and
/// `f' = 1/phi - z phi'/phi^2`.
pub fn functional_eval_direct(
    kind: FunctionalKind,
    f: &NormalizedFunction,
    z: Complex64,
) -> Result<Complex64> {
    let d1 = f.phi().derivative();
    let d2 = d1.derivative();
    let phi_z = f.phi_at(z)?;
    let one = Complex64::new(1.0, 0.0);

    if kind == FunctionalKind::P {
        return Ok(d2.eval(z));
    }

    let f_z = z / phi_z;
    let df_z = one / phi_z - z * d1.eval(z) / (phi_z * phi_z);
    // z/f(z), with its limit phi(0) = 1 at the origin
    let z_over_f = if z == Complex64::new(0.0, 0.0) { one } else { z / f_z };
    let u = df_z * z_over_f * z_over_f - one;

    Ok(match kind {
        FunctionalKind::U => u,
        FunctionalKind::M => z * z * d2.eval(z) + u,
        FunctionalKind::N => -(z * z * z) * d2.derivative().eval(z) + u,
        FunctionalKind::P => unreachable!(),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanReport {
    pub kind: FunctionalKind,
    pub radius: f64,
    pub grid_size: usize,
    pub extremal_value: f64,
    #[serde(serialize_with = "crate::numfmt::serialize_angle")]
    pub extremal_angle: f64,
    pub margin: f64,
}

impl ScanReport {
    pub fn passes(&self) -> bool {
        self.margin >= -crate::classes::MARGIN_TOL
    }
}

/// `theta_j = 2 pi j / grid`, `j = 0..grid`.
pub fn angle_grid(grid: usize) -> impl Iterator<Item = f64> + Clone {
    (0..grid).map(move |j| 2.0 * PI * j as f64 / grid as f64)
}

pub(crate) fn check_radius(r: f64) -> Result<()> {
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::InvalidArgument(format!("radius {r} must lie in (0, 1)")));
    }
    Ok(())
}

pub(crate) fn check_grid(grid: usize) -> Result<()> {
    if grid < MIN_GRID {
        return Err(Error::InvalidArgument(format!("grid {grid} must be at least {MIN_GRID}")));
    }
    Ok(())
}

/// `(max, argmax)` of `|series|` on `|z| = r`; ties keep the smaller angle.
pub(crate) fn max_modulus_on_circle(series: &ComplexSeries, r: f64, grid: usize) -> (f64, f64) {
    let mut best = (f64::NEG_INFINITY, 0.0);
    for theta in angle_grid(grid) {
        let v = series.eval(Complex64::from_polar(r, theta)).norm();
        if v > best.0 {
            best = (v, theta);
        }
    }
    best
}

/// Largest `|functional|` on a uniform grid of the circle `|z| = r`.
pub fn sup_on_circle(
    kind: FunctionalKind,
    f: &NormalizedFunction,
    r: f64,
    grid: usize,
) -> Result<ScanReport> {
    check_radius(r)?;
    check_grid(grid)?;
    for theta in angle_grid(grid) {
        f.phi_at(Complex64::from_polar(r, theta))?;
    }
    let series = functional_series(kind, f);
    let (extremal_value, extremal_angle) = max_modulus_on_circle(&series, r, grid);
    Ok(ScanReport {
        kind,
        radius: r,
        grid_size: grid,
        extremal_value,
        extremal_angle,
        margin: kind.bound() - extremal_value,
    })
}
