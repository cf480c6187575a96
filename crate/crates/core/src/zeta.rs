//! Riemann zeta values and tails of `sum j^{-s}` via Euler–Maclaurin.

/// `B_2, B_4, ..., B_14`.
const BERNOULLI_EVEN: [f64; 7] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
];

/// Cut point after which the Euler–Maclaurin remainder is used.
const EM_CUTOFF: u64 = 16;

/// `sum_{j >= k} j^{-s}` by Euler–Maclaurin at `k`, valid for `k >= 16`.
fn euler_maclaurin_tail(s: f64, k: f64) -> f64 {
    let mut total = k.powf(1.0 - s) / (s - 1.0) + 0.5 * k.powf(-s);
    // rising factorial (s)_{2j-1} / (2j)!, times k^{-s-2j+1}
    let mut rising = s;
    let mut fact = 2.0;
    let mut power = k.powf(-s - 1.0);
    for (j, b) in BERNOULLI_EVEN.iter().enumerate() {
        total += b / fact * rising * power;
        let a = 2.0 * (j as f64 + 1.0);
        rising *= (s + a - 1.0) * (s + a);
        fact *= (a + 1.0) * (a + 2.0);
        power /= k * k;
    }
    total
}

/// `sum_{j >= start} j^{-s}` for real `s > 1` and `start >= 1`.
///
/// Returns `+inf` when `s <= 1`.
pub fn power_tail(s: f64, start: u64) -> f64 {
    assert!(start >= 1, "power_tail needs start >= 1");
    if s <= 1.0 {
        return f64::INFINITY;
    }
    let cut = start.max(EM_CUTOFF);
    let head: f64 = (start..cut).rev().map(|j| (j as f64).powf(-s)).sum();
    head + euler_maclaurin_tail(s, cut as f64)
}

/// Riemann zeta at an integer `s >= 2`, absolute error well below 1e-14.
pub fn zeta_constant(s: u32) -> f64 {
    assert!(s >= 2, "zeta_constant needs s >= 2, got {s}");
    power_tail(s as f64, 1)
}
