//! Truncated power series with complex coefficients.
//!
//! A [`ComplexSeries`] of order `N` stores `c_0..=c_N` densely. Binary
//! operations truncate to the smaller operand order and never extend it.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Threshold on `|a_0|` below which [`ComplexSeries::reciprocal`] refuses.
pub const EPS_LEAD: f64 = 1e-12;

/// Default truncation order for constructed series.
pub const DEFAULT_ORDER: usize = 128;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Complex64>", into = "Vec<Complex64>")]
pub struct ComplexSeries {
    coeffs: Vec<Complex64>,
}

impl ComplexSeries {
    /// Builds a series from `c_0..=c_N`. An empty vector gives the zero
    /// series of order 0.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if let Some(degree) = coeffs.iter().position(|c| !(c.re.is_finite() && c.im.is_finite())) {
            return Err(Error::NonFinite { degree });
        }
        let coeffs = if coeffs.is_empty() {
            vec![Complex64::new(0.0, 0.0)]
        } else {
            coeffs
        };
        Ok(Self { coeffs })
    }

    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![Complex64::new(0.0, 0.0); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Complex64::new(1.0, 0.0);
        s
    }

    /// `1 + z + z^2 + ... + z^order`.
    pub fn geometric(order: usize) -> Self {
        Self {
            coeffs: vec![Complex64::new(1.0, 0.0); order + 1],
        }
    }

    /// Zero-extends or truncates to `order`. Zero extension is exact for a
    /// polynomial and is the only way order ever increases.
    pub fn with_order(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, Complex64::new(0.0, 0.0));
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of `z^k`, zero past the truncation order.
    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs.get(k).copied().unwrap_or_default()
    }

    /// Highest degree carrying a nonzero coefficient.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| *c != Complex64::new(0.0, 0.0))
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Multiplies by `z^shift`, dropping the terms pushed past the order.
    pub fn shift_up(&self, shift: usize) -> Self {
        let n = self.coeffs.len();
        let mut coeffs = vec![Complex64::new(0.0, 0.0); n];
        if shift < n {
            coeffs[shift..].copy_from_slice(&self.coeffs[..n - shift]);
        }
        Self { coeffs }
    }

    /// Replaces `c_k` by `weight(k) * c_k`.
    pub fn map_indexed(&self, weight: impl Fn(usize) -> f64) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| c * weight(k))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self {
            coeffs: (0..=n).map(|k| self.coeffs[k] + other.coeffs[k]).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self {
            coeffs: (0..=n).map(|k| self.coeffs[k] - other.coeffs[k]).collect(),
        }
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let coeffs = (0..=n)
            .map(|k| {
                (0..=k)
                    .map(|j| self.coeffs[j] * other.coeffs[k - j])
                    .sum::<Complex64>()
            })
            .collect();
        Self { coeffs }
    }

    /// Multiplicative inverse to the same order.
    pub fn reciprocal(&self) -> Result<Self> {
        let a0 = self.coeffs[0];
        if a0.norm() <= EPS_LEAD {
            return Err(Error::LeadingCoefficientNearZero {
                modulus: a0.norm(),
                threshold: EPS_LEAD,
            });
        }
        let inv_a0 = a0.inv();
        let n = self.order();
        let mut r = Vec::with_capacity(n + 1);
        r.push(inv_a0);
        for k in 1..=n {
            let acc: Complex64 = (1..=k).map(|j| self.coeffs[j] * r[k - j]).sum();
            r.push(-inv_a0 * acc);
        }
        Self::new(r)
    }

    /// Term-wise derivative; order drops by one (order 0 stays 0).
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        Self {
            coeffs: (1..self.coeffs.len())
                .map(|k| self.coeffs[k] * k as f64)
                .collect(),
        }
    }

    /// Horner evaluation.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c)
    }

    /// Value together with first derivative, one Horner pass.
    pub fn eval_with_derivative(&self, z: Complex64) -> (Complex64, Complex64) {
        let zero = Complex64::new(0.0, 0.0);
        self.coeffs.iter().rev().fold((zero, zero), |(p, dp), c| (p * z + c, dp * z + p))
    }

    /// `sum_k |c_k| r^k`.
    pub fn majorant(&self, r: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * r + c.norm())
    }
}

impl TryFrom<Vec<Complex64>> for ComplexSeries {
    type Error = Error;

    fn try_from(coeffs: Vec<Complex64>) -> Result<Self> {
        Self::new(coeffs)
    }
}

impl From<ComplexSeries> for Vec<Complex64> {
    fn from(s: ComplexSeries) -> Self {
        s.coeffs
    }
}

impl Add for &ComplexSeries {
    type Output = ComplexSeries;
    fn add(self, rhs: Self) -> ComplexSeries {
        ComplexSeries::add(self, rhs)
    }
}

impl Sub for &ComplexSeries {
    type Output = ComplexSeries;
    fn sub(self, rhs: Self) -> ComplexSeries {
        ComplexSeries::sub(self, rhs)
    }
}

impl Mul for &ComplexSeries {
    type Output = ComplexSeries;
    fn mul(self, rhs: Self) -> ComplexSeries {
        ComplexSeries::mul(self, rhs)
    }
}

impl Neg for &ComplexSeries {
    type Output = ComplexSeries;
    fn neg(self) -> ComplexSeries {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}
