//! The polylogarithmic part of the `Ex32` function and its integral form.

use num_complex::Complex64;

use crate::quadrature::GaussLaguerre;
use crate::zeta::zeta_constant;

pub const EX32_QUADRATURE_NODES: usize = 64;

/// `zeta(5) / zeta(3)`.
pub fn ex32_zeta_ratio() -> f64 {
    zeta_constant(5) / zeta_constant(3)
}

/// `sum_{k=2}^{terms+1} z^k / (k-1)^5`.
pub fn ex32_polylog_sum(z: Complex64, terms: usize) -> Complex64 {
    let mut power = z;
    let mut total = Complex64::new(0.0, 0.0);
    for j in 1..=terms {
        power *= z;
        total += power / (j as f64).powi(5);
    }
    total
}

/// `(z^2/4!) int_0^inf u^4 e^{-u} / (1 - z e^{-u}) du` by Gauss–Laguerre;
/// this is `int_0^1 (log 1/t)^4 / (1 - t z) dt` under `t = e^{-u}`.
pub fn ex32_integral_form(z: Complex64, rule: &GaussLaguerre) -> Complex64 {
    let integral = rule.integrate_complex(|u| u.powi(4) / (1.0 - z * (-u).exp()));
    z * z / 24.0 * integral
}
