//! Number formatting shared by the JSON and CSV emitters.

use serde::Serializer;

/// Rounds to `digits` significant decimal digits.
pub fn round_sig(x: f64, digits: usize) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{:.*e}", digits.saturating_sub(1), x)
        .parse()
        .unwrap_or(x)
}

/// Angles are reported to 12 significant digits.
pub fn angle(x: f64) -> f64 {
    round_sig(x, 12)
}

pub(crate) fn serialize_angle<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(angle(*x))
}

pub(crate) fn serialize_angles<S: Serializer>(xs: &[f64], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(xs.iter().map(|x| angle(*x)))
}

/// Shortest round-trip decimal form.
pub fn shortest(x: f64) -> String {
    format!("{x}")
}
