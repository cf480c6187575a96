use num_complex::Complex64;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("leading coefficient {modulus:e} is below {threshold:e}; series is not invertible")]
    LeadingCoefficientNearZero { modulus: f64, threshold: f64 },

    #[error("series coefficient at degree {degree} is not finite")]
    NonFinite { degree: usize },

    #[error("phi(0) = {constant} differs from 1; function is not normalized")]
    NotNormalized { constant: Complex64 },

    #[error("phi vanishes at z = {z} (|phi| = {modulus:e})")]
    PhiVanishes { z: Complex64, modulus: f64 },

    #[error("(phi_f + phi_g)/2 nearly vanishes at z = {z} (modulus {modulus:e}); harmonic mean refused")]
    DenominatorVanishes { z: Complex64, modulus: f64 },

    #[error("invalid family parameters: {0}")]
    InvalidFamilyParams(String),

    #[error("closed form and series evaluation disagree by {residual:e} at z = {z}")]
    IdentityMismatch { z: Complex64, residual: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),
}
