//! Three-term recurrences: stable upward extension, Miller's downward
//! algorithm for `J` at large order, and the downward ladder for negative
//! orders used by the connection formula.
//!
//! Stability facts the routing relies on:
//! * upward in order is safe for `N` everywhere and for `J` while the order
//!   stays at or below the argument;
//! * downward is safe for `J` above the turning point (Miller) and for
//!   negative orders, where the magnitude grows as the order decreases.

use super::gamma::ln_gamma;
use super::BesselError;
use crate::kahan::Accumulator;

const RESCALE_THRESHOLD: f64 = 1e250;
const RESCALE_FACTOR: f64 = 1e-250;
const OVERFLOW_LIMIT: f64 = 1e306;

/// Extend a contiguous pair `(C_base, C_{base+1})` upward to order
/// `base + steps`, returning the final value. Errors on overflow (the `N_alpha`
/// order-dominated growth can exceed f64 range long before `alpha` ends).
pub(crate) fn upward(
    base: f64,
    x: f64,
    c_base: f64,
    c_base_plus_1: f64,
    steps: usize,
) -> Result<f64, BesselError> {
    if steps == 0 {
        return Ok(c_base);
    }
    let mut prev = c_base;
    let mut cur = c_base_plus_1;
    let mut nu = base + 1.0;
    for _ in 1..steps {
        let next = (2.0 * nu / x) * cur - prev;
        if !next.is_finite() || next.abs() > OVERFLOW_LIMIT {
            return Err(BesselError::Overflow { alpha: nu + 1.0, x });
        }
        prev = cur;
        cur = next;
        nu += 1.0;
    }
    Ok(cur)
}

/// `J_alpha(x)` for `alpha > x` by Miller's downward recurrence, normalised by
/// the series anchor `sum_k c_k J_{mu+2k}(x) = (x/2)^mu` with
/// `c_0 = Gamma(mu+1)`, `c_k = (mu+2k) Gamma(mu+k)/k!` and `mu = frac(alpha)`.
/// Returns 0 when the true value underflows.
pub(crate) fn miller_j(alpha: f64, x: f64) -> f64 {
    debug_assert!(alpha > x && alpha >= 1.0);
    let mu = alpha.fract();
    let n_alpha = (alpha - mu).round() as usize;

    // Start high enough that the contaminating solution decays by ~1e17
    // before reaching alpha: each step down multiplies the wanted/unwanted
    // ratio by exp(2*acosh(nu/x)).
    let mut start = n_alpha;
    let mut decay = 0.0f64;
    while decay < 40.0 {
        start += 1;
        let nu = mu + start as f64;
        decay += 2.0 * (nu / x).max(1.0).acosh().max(1e-3);
    }

    // Normalisation coefficients, generated downward:
    // g_k = Gamma(mu+k)/k!, g_{k-1} = g_k * k / (mu+k-1).
    let k_top = start / 2;
    let mut g = (ln_gamma(mu + k_top as f64) - ln_gamma(k_top as f64 + 1.0)).exp();

    let mut above = 0.0f64; // J~_{nu+1}
    let mut here = 1e-30f64; // J~_{nu}
    let mut j_alpha_scaled = if start == n_alpha { here } else { 0.0 };
    let mut norm = Accumulator::new();
    let mut k = k_top;
    if start % 2 == 0 {
        norm.add((mu + 2.0 * k as f64) * g * here);
        if k > 1 {
            g *= k as f64 / (mu + k as f64 - 1.0);
        }
        k = k.saturating_sub(1);
    }

    let mut j = start;
    while j > 0 {
        let nu = mu + j as f64;
        let below = (2.0 * nu / x) * here - above;
        above = here;
        here = below;
        j -= 1;

        if here.abs() > RESCALE_THRESHOLD {
            above *= RESCALE_FACTOR;
            here *= RESCALE_FACTOR;
            j_alpha_scaled *= RESCALE_FACTOR;
            let scaled = norm.total() * RESCALE_FACTOR;
            norm = Accumulator::new();
            norm.add(scaled);
        }
        if j == n_alpha {
            j_alpha_scaled = here;
        }
        if j % 2 == 0 {
            let coeff = if j == 0 {
                (ln_gamma(mu + 1.0)).exp()
            } else {
                (mu + j as f64) * g
            };
            norm.add(coeff * here);
            if k > 1 {
                g *= k as f64 / (mu + k as f64 - 1.0);
            }
            k = k.saturating_sub(1);
        }
    }

    let target = (0.5 * x).powf(mu);
    j_alpha_scaled * (target / norm.total())
}

/// Recur the contiguous pair `(C_{start+1}, C_start)` downward `steps` orders,
/// returning `C_{start-steps}`. Toward negative order the magnitude grows,
/// which is the stable direction; overflow is an honest error (the matching
/// `N_alpha` exceeds f64 range too).
pub(crate) fn downward(
    start: f64,
    x: f64,
    c_start_plus_1: f64,
    c_start: f64,
    steps: usize,
) -> Result<f64, BesselError> {
    let mut prev = c_start_plus_1;
    let mut cur = c_start;
    let mut nu = start;
    for _ in 0..steps {
        let next = (2.0 * nu / x) * cur - prev;
        if !next.is_finite() || next.abs() > OVERFLOW_LIMIT {
            return Err(BesselError::Overflow { alpha: -(nu - 1.0), x });
        }
        prev = cur;
        cur = next;
        nu -= 1.0;
    }
    Ok(cur)
}
