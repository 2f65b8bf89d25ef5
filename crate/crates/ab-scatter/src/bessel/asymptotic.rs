//! Large-argument Hankel expansions for `J_nu` and `N_nu`.
//!
//! The P/Q series is asymptotic, not convergent: it is trusted only when the
//! terms fall below the accuracy floor before they start growing again. The
//! router treats a `None` as "regime not applicable" and falls back to the
//! recurrence paths, so the pre-filter here can stay simple.

const ACCURACY_FLOOR: f64 = 1.2e-11;
const MAX_TERMS: usize = 60;
// Reject when intermediate terms grow large: their rounding would contaminate
// the O(1) sums even if the tail later reaches the floor.
const MAX_TERM_GUARD: f64 = 100.0;

/// Cheap admission rule: the expansion has a chance of reaching the floor.
/// Small orders converge from `x >= 12`; growing orders need `x` well past
/// `nu^2` territory.
pub(crate) fn applicable(nu: f64, x: f64) -> bool {
    x >= 12.0 && x >= 0.6 * nu * nu + 6.0
}

/// Evaluate `(J_nu(x), N_nu(x))` by the Hankel expansion, or `None` when the
/// series cannot reach the accuracy floor.
pub(crate) fn jn_asymptotic(nu: f64, x: f64) -> Option<(f64, f64)> {
    let mu = 4.0 * nu * nu;
    let eight_x = 8.0 * x;

    let mut p = 1.0f64;
    let mut q = 0.0f64;
    let mut term = 1.0f64;
    let mut converged = false;
    let mut prev = f64::INFINITY;
    for k in 1..=MAX_TERMS {
        let kf = k as f64;
        let odd = 2.0 * kf - 1.0;
        term *= (mu - odd * odd) / (kf * eight_x);
        let a = term.abs();
        if a > MAX_TERM_GUARD || (a >= prev && a > ACCURACY_FLOOR) {
            return None; // diverging before reaching the floor
        }
        // signs follow P = 1 - t2 + t4 - ..., Q = t1 - t3 + t5 - ...
        match k % 4 {
            0 => p += term,
            1 => q += term,
            2 => p -= term,
            _ => q -= term,
        }
        if a <= ACCURACY_FLOOR {
            converged = true;
            break;
        }
        prev = a;
    }
    if !converged {
        return None;
    }

    let omega = x - (0.5 * nu + 0.25) * std::f64::consts::PI;
    let (sin_o, cos_o) = omega.sin_cos();
    let scale = (2.0 / (std::f64::consts::PI * x)).sqrt();
    Some((
        scale * (p * cos_o - q * sin_o),
        scale * (p * sin_o + q * cos_o),
    ))
}
