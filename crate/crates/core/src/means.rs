//! Harmonic means `F = 2fg/(f+g)` of normalized functions.
//!
//! In the `phi = z/f` representation the harmonic mean is the plain
//! average `phi_F = (phi_f + phi_g)/2`, and every functional is linear in
//! the coefficients `b_k`, so `Functional(F) = (Functional(f) + Functional(g))/2`.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::functionals::{angle_grid, functional_eval_direct, FunctionalKind, NormalizedFunction, PowerTail};
use crate::series::ComplexSeries;

/// Refuse the mean when `|phi_f + phi_g|/2` drops to this on the probe grid.
pub const EPS_DENOM: f64 = 1e-6;

/// Probe circle for the nonvanishing hypothesis.
pub const PROBE_RADIUS: f64 = 0.999;
pub const PROBE_GRID: usize = 4096;

/// Radius of the disk sampled by [`verify_closure`].
pub const CLOSURE_SAMPLE_RADIUS: f64 = 0.95;
pub const DEFAULT_CLOSURE_SAMPLES: usize = 500;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MeanResult {
    pub mean: NormalizedFunction,
    /// Grid minimum of `|phi_f + phi_g|/2`; the nonvanishing hypothesis
    /// is only checked on this finite probe grid.
    pub min_denominator_modulus: f64,
}

pub fn harmonic_mean(f: &NormalizedFunction, g: &NormalizedFunction) -> Result<MeanResult> {
    let half = Complex64::new(0.5, 0.0);
    let phi: ComplexSeries = (f.phi() + g.phi()).scale(half);

    let values: Vec<(Complex64, Complex64)> = angle_grid(PROBE_GRID)
        .map(|theta| {
            let z = Complex64::from_polar(PROBE_RADIUS, theta);
            (z, phi.eval(z))
        })
        .collect();
    let (z_min, v_min) = values
        .iter()
        .copied()
        .fold(values[0], |best, p| if p.1.norm() < best.1.norm() { p } else { best });
    if v_min.norm() <= EPS_DENOM {
        return Err(Error::DenominatorVanishes { z: z_min, modulus: v_min.norm() });
    }
    // zeros strictly inside the probe circle show up as nonzero winding
    if winding_number(&values) != 0 {
        return Err(Error::DenominatorVanishes { z: z_min, modulus: v_min.norm() });
    }

    let tail = f
        .tail()
        .iter()
        .chain(g.tail())
        .map(|t| PowerTail { scale: 0.5 * t.scale, power: t.power })
        .collect();
    let mean = NormalizedFunction::labelled(phi, format!("hm({},{})", f.label, g.label))?.with_tail(tail);
    Ok(MeanResult {
        mean,
        min_denominator_modulus: v_min.norm(),
    })
}

/// Winding number about the origin of the closed polygon through `values`.
fn winding_number(values: &[(Complex64, Complex64)]) -> i64 {
    let n = values.len();
    let turn: f64 = (0..n)
        .map(|j| (values[(j + 1) % n].1 / values[j].1).arg())
        .sum();
    (turn / (2.0 * PI)).round() as i64
}

/// Largest deviation from `Functional(F) = (Functional(f) + Functional(g))/2`
/// over `samples` points drawn uniformly from `|z| <= 0.95`, each side
/// evaluated from the defining differential expression.
pub fn verify_closure<R: Rng + ?Sized>(
    kind: FunctionalKind,
    f: &NormalizedFunction,
    g: &NormalizedFunction,
    samples: usize,
    rng: &mut R,
) -> Result<f64> {
    let mean = harmonic_mean(f, g)?.mean;
    let mut worst: f64 = 0.0;
    for _ in 0..samples {
        let z = sample_disk(rng, CLOSURE_SAMPLE_RADIUS);
        let lhs = functional_eval_direct(kind, &mean, z)?;
        let rhs = 0.5 * (functional_eval_direct(kind, f, z)? + functional_eval_direct(kind, g, z)?);
        worst = worst.max((lhs - rhs).norm());
    }
    Ok(worst)
}

/// Uniform point in the disk `|z| <= radius`.
pub fn sample_disk<R: Rng + ?Sized>(rng: &mut R, radius: f64) -> Complex64 {
    let r = radius * rng.gen::<f64>().sqrt();
    let theta = 2.0 * PI * rng.gen::<f64>();
    Complex64::from_polar(r, theta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use crate::classes::{check_membership, DEFAULT_GRID, DEFAULT_RADII};

    fn real(coeffs: &[f64]) -> NormalizedFunction {
        NormalizedFunction::from_phi(ComplexSeries::from_real(coeffs).unwrap()).unwrap()
    }

    #[test]
    fn idempotent() {
        let f = real(&[1.0, 0.3, -0.2, 0.1]);
        let m = harmonic_mean(&f, &f).unwrap();
        assert_eq!(m.mean.phi(), f.phi());
    }

    #[test]
    fn symmetric_cancellation_gives_identity() {
        let m = harmonic_mean(&real(&[1.0, 1.0]), &real(&[1.0, -1.0])).unwrap();
        assert_eq!(m.mean.phi(), &ComplexSeries::one(1));
        assert_eq!(m.min_denominator_modulus, 1.0);
    }

    #[test]
    fn identity_with_one_plus_z() {
        let m = harmonic_mean(&NormalizedFunction::identity(1), &real(&[1.0, 1.0])).unwrap();
        assert_eq!(m.mean.phi(), &ComplexSeries::from_real(&[1.0, 0.5]).unwrap());
        let z = Complex64::new(0.4, -0.3);
        let direct = 2.0 * z / (2.0 + z);
        assert!((m.mean.f_at(z).unwrap() - direct).norm() < 1e-15);
    }

    #[test]
    fn commutative() {
        let f = real(&[1.0, 0.3, -0.2, 0.1]);
        let g = real(&[1.0, -0.1, 0.05, 0.0, 0.2]);
        assert_eq!(harmonic_mean(&f, &g).unwrap(), {
            let mut m = harmonic_mean(&g, &f).unwrap();
            m.mean.label = format!("hm({},{})", f.label, g.label);
            m
        });
    }

    #[test]
    fn refuses_vanishing_denominator() {
        // 1 + z vanishes at -1, outside the probe circle; |phi| >= 1e-3 on it
        let f = real(&[1.0, 1.0]);
        assert!(harmonic_mean(&f, &f).is_ok());
        // zero on the probe circle
        let g = real(&[1.0, 1.0 / PROBE_RADIUS]);
        let err = harmonic_mean(&g, &g).unwrap_err();
        assert!(matches!(err, Error::DenominatorVanishes { .. }));
        // zero at -1/2, strictly inside
        let h = real(&[1.0, 2.0]);
        let err = harmonic_mean(&h, &h).unwrap_err();
        assert!(matches!(err, Error::DenominatorVanishes { .. }));
        // the two functions are fine, their average 1 + 2z is not
        let a = real(&[1.0, 3.0, 0.0]);
        let b = real(&[1.0, 1.0, 0.0]);
        assert!(matches!(harmonic_mean(&a, &b), Err(Error::DenominatorVanishes { .. })));
    }

    #[test]
    fn closure_koebe_pair_is_exact() {
        let k = real(&[1.0, -2.0, 1.0]);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for kind in FunctionalKind::ALL {
            assert_eq!(verify_closure(kind, &k, &k, 100, &mut rng).unwrap(), 0.0);
        }
    }

    #[test]
    fn closure_u_example() {
        let f = real(&[1.0, 1.0, 0.0]);
        let g = real(&[1.0, 0.0, 0.25]);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let res = verify_closure(FunctionalKind::U, &f, &g, DEFAULT_CLOSURE_SAMPLES, &mut rng).unwrap();
        assert!(res <= 1e-10, "{res}");
        let mean = harmonic_mean(&f, &g).unwrap().mean;
        let rep = check_membership(FunctionalKind::U, &mean, &DEFAULT_RADII, DEFAULT_GRID).unwrap();
        assert!(rep.verdict.is_member());
    }

    #[test]
    fn tails_are_averaged() {
        let t = vec![PowerTail { scale: 2.0, power: 5 }];
        let f = NormalizedFunction::identity(3).with_tail(t.clone());
        let m = harmonic_mean(&f, &f).unwrap().mean;
        assert_eq!(m.tail().len(), 2);
        assert!(m.tail().iter().all(|p| p.scale == 1.0 && p.power == 5));
    }

    #[test]
    fn disk_samples_stay_inside() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..1000 {
            assert!(sample_disk(&mut rng, 0.95).norm() <= 0.95 + 1e-15);
        }
    }
}
