//! The example families and their closed-form boundary machinery.
//!
//! * `Ex31`: `z/f = 1 + (1-a) z + a z^m`, `m = 2n+1`, `a (m-1)^2 = 1`.
//! * `Ex32`: `z/f = 1 + (1 - zeta(5)/zeta(3)) z + zeta(3)^{-1} sum_{k>=2} z^k/(k-1)^5`.
//! * `Ex33`: `z/f = 1 + i b z + e^{2 i beta} z^n / (n-1)`.
//! * `Ex34`: same shape as `Ex31` with `a m (m-1) = 2`.

mod angles;
mod ex32;

pub use angles::{
    a_theta, a_theta_factored_n1, a_theta_reduced, critical_points, d_prime_theta, d_theta,
    sample_a_theta, table1, table1_extended, table1_sin_form, table1_theta, AngleGridResult, Table1Row,
    TABLE1_REFERENCE,
};
pub use ex32::{ex32_integral_form, ex32_polylog_sum, ex32_zeta_ratio, EX32_QUADRATURE_NODES};

use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::functionals::{
    angle_grid, check_grid, check_radius, functional_eval_direct, FunctionalKind, NormalizedFunction,
    PowerTail,
};
use crate::series::{ComplexSeries, DEFAULT_ORDER};
use crate::zeta::zeta_constant;

/// Truncation order used for `Ex32` by default.
pub const EX32_ORDER: usize = 256;

/// Agreement required between the closed-form `Ex33` identity and the
/// direct functional evaluation.
pub const EX33_IDENTITY_TOL: f64 = 1e-9;

/// The two families whose boundary real part has a trigonometric closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum AngleVariant {
    Ex31,
    Ex34,
}

impl AngleVariant {
    /// `(alpha, m)` for parameter `n`.
    pub fn alpha_m(self, n: u32) -> (f64, u32) {
        let m = 2 * n + 1;
        let nf = n as f64;
        let alpha = match self {
            AngleVariant::Ex31 => 1.0 / (4.0 * nf * nf),
            AngleVariant::Ex34 => 1.0 / (nf * (2.0 * nf + 1.0)),
        };
        (alpha, m)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "variant")]
pub enum Family {
    Ex31 { n: u32 },
    Ex32,
    Ex33 { n: u32, b: f64, beta: f64 },
    Ex34 { n: u32 },
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Ex31 { n } => write!(f, "ex31:n={n}"),
            Family::Ex32 => write!(f, "ex32"),
            Family::Ex33 { n, b, beta } => write!(f, "ex33:n={n},b={b},beta={beta}"),
            Family::Ex34 { n } => write!(f, "ex34:n={n}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    /// Truncation order; raised as needed to hold the top coefficient.
    pub order: usize,
}

impl FamilySpec {
    pub fn new(family: Family) -> Self {
        let order = match family {
            Family::Ex32 => EX32_ORDER,
            _ => DEFAULT_ORDER,
        };
        Self { family, order }
    }

    pub fn with_order(family: Family, order: usize) -> Self {
        Self { family, order }
    }

    pub fn validate(&self) -> Result<()> {
        match self.family {
            Family::Ex31 { n } | Family::Ex34 { n } if n < 1 => {
                Err(Error::InvalidFamilyParams(format!("n = {n} must be at least 1")))
            }
            Family::Ex33 { n, b, beta } => validate_ex33(n, b, beta),
            Family::Ex32 if self.order < 2 => {
                Err(Error::InvalidFamilyParams("ex32 needs order >= 2".into()))
            }
            _ => Ok(()),
        }
    }
}

fn validate_ex33(n: u32, b: f64, beta: f64) -> Result<()> {
    if n < 3 {
        return Err(Error::InvalidFamilyParams(format!("ex33 needs n >= 3, got {n}")));
    }
    let limit = (n as f64 - 2.0) / (n as f64 - 1.0);
    if !(b.is_finite() && beta.is_finite()) || b.abs() > limit {
        return Err(Error::InvalidFamilyParams(format!(
            "ex33 needs |b| <= (n-2)/(n-1) = {limit} and finite beta, got b = {b}, beta = {beta}"
        )));
    }
    Ok(())
}

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

pub fn build(spec: &FamilySpec) -> Result<NormalizedFunction> {
    spec.validate()?;
    let label = spec.family.to_string();
    match spec.family {
        Family::Ex31 { n } => build_trinomial(AngleVariant::Ex31, n, spec.order, label),
        Family::Ex34 { n } => build_trinomial(AngleVariant::Ex34, n, spec.order, label),
        Family::Ex32 => {
            let z3 = zeta_constant(3);
            let z5 = zeta_constant(5);
            let mut coeffs = vec![real(1.0), real(1.0 - z5 / z3)];
            coeffs.extend((2..=spec.order).map(|k| real(1.0 / (z3 * ((k - 1) as f64).powi(5)))));
            let tail = vec![PowerTail { scale: 1.0 / z3, power: 5 }];
            Ok(NormalizedFunction::labelled(ComplexSeries::new(coeffs)?, label)?.with_tail(tail))
        }
        Family::Ex33 { n, b, beta } => {
            let order = spec.order.max(n as usize);
            let mut coeffs = vec![Complex64::new(0.0, 0.0); order + 1];
            coeffs[0] = real(1.0);
            coeffs[1] = Complex64::new(0.0, b);
            coeffs[n as usize] = Complex64::from_polar(1.0 / (n as f64 - 1.0), 2.0 * beta);
            NormalizedFunction::labelled(ComplexSeries::new(coeffs)?, label)
        }
    }
}

fn build_trinomial(variant: AngleVariant, n: u32, order: usize, label: String) -> Result<NormalizedFunction> {
    let (alpha, m) = variant.alpha_m(n);
    let order = order.max(m as usize);
    let mut coeffs = vec![Complex64::new(0.0, 0.0); order + 1];
    coeffs[0] = real(1.0);
    coeffs[1] = real(1.0 - alpha);
    coeffs[m as usize] = real(alpha);
    NormalizedFunction::labelled(ComplexSeries::new(coeffs)?, label)
}

/// `|z|^n`, the modulus of the `U` functional of the `Ex33` family, after
/// checking it against the direct evaluation of the functional.
pub fn ex33_functional_modulus(n: u32, b: f64, beta: f64, z: Complex64) -> Result<f64> {
    let f = build(&FamilySpec::with_order(Family::Ex33 { n, b, beta }, n as usize))?;
    let closed = z.norm().powi(n as i32);
    let direct = functional_eval_direct(FunctionalKind::U, &f, z)?.norm();
    let residual = (closed - direct).abs();
    if residual > EX33_IDENTITY_TOL {
        return Err(Error::IdentityMismatch { z, residual });
    }
    Ok(closed)
}

/// `Re(z f'/f)` at `z = 1` for the `Ex33` family, from its closed form.
pub fn ex33_re_at_1(n: u32, b: f64, beta: f64) -> Result<f64> {
    if n < 3 {
        return Err(Error::InvalidFamilyParams(format!("ex33 needs n >= 3, got {n}")));
    }
    let nf = n as f64;
    let numerator = (2.0 * (nf - 2.0) / (nf - 1.0) * beta.sin() - 2.0 * b * beta.cos()) * beta.sin();
    let denom = (Complex64::new(1.0, b) + Complex64::from_polar(1.0 / (nf - 1.0), 2.0 * beta)).norm_sqr();
    Ok(numerator / denom)
}

/// `f(r e^{i theta})` on a uniform closed-open angle grid.
pub fn boundary_image(f: &NormalizedFunction, r: f64, grid: usize) -> Result<Vec<(f64, Complex64)>> {
    check_radius(r)?;
    check_grid(grid)?;
    angle_grid(grid)
        .map(|theta| Ok((theta, f.f_at(Complex64::from_polar(r, theta))?)))
        .collect()
}
