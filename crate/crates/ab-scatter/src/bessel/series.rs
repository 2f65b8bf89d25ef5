//! Ascending power series for `J_nu` and the logarithmic series for integer
//! `N_n` at small argument.
//!
//! The `J` series converges for every argument, but alternating-term
//! cancellation costs roughly `x * log10(e)` digits, so the router only uses
//! it for `x < 12`. In the order-dominated zone `x <= alpha` there is no
//! cancellation at all and the series is accurate for any `alpha`.

use super::gamma::{ln_gamma, EULER_GAMMA};
use crate::kahan::Accumulator;

const MAX_TERMS: usize = 600;

/// `J_nu(x)` by the defining series. Valid for `nu >= 0` and for non-integer
/// `nu` in `(-2, 0)` (needed by the connection formula at small order).
/// Underflow of the leading factor returns 0.
pub(crate) fn j_series(nu: f64, x: f64) -> f64 {
    debug_assert!(x > 0.0);
    debug_assert!(nu >= 0.0 || (nu > -2.0 && nu.fract() != 0.0));

    let half = 0.5 * x;
    let y = half * half;

    // Hypergeometric part sum_s (-y)^s / (s! (nu+1)_s).
    let mut sum = Accumulator::new();
    sum.add(1.0);
    let mut term = 1.0f64;
    let mut abs_scale = 1.0f64;
    let mut prev_abs = f64::INFINITY;
    for s in 0..MAX_TERMS {
        term *= -y / ((s as f64 + 1.0) * (nu + 1.0 + s as f64));
        sum.add(term);
        let a = term.abs();
        abs_scale = abs_scale.max(a);
        if a <= f64::EPSILON * 1e-2 * abs_scale && a <= prev_abs {
            break;
        }
        prev_abs = a;
    }
    let hyper = sum.total();

    // Leading factor (x/2)^nu / Gamma(nu+1), sign-aware for negative order.
    if nu >= 0.0 {
        // Exact factorial path keeps integer orders at full precision.
        if nu.fract() == 0.0 && nu <= 170.0 {
            let mut factorial = 1.0f64;
            let mut i = 2.0f64;
            while i <= nu {
                factorial *= i;
                i += 1.0;
            }
            return half.powi(nu as i32) / factorial * hyper;
        }
        let ln_lead = nu * half.ln() - ln_gamma(nu + 1.0);
        if ln_lead < -745.0 {
            return 0.0;
        }
        ln_lead.exp() * hyper
    } else {
        // Gamma(nu+1) = Gamma(nu+3) / ((nu+1)(nu+2)); nu+3 > 1 is safe.
        let lead = (nu * half.ln() - ln_gamma(nu + 3.0)).exp() * (nu + 1.0) * (nu + 2.0);
        lead * hyper
    }
}

/// `N_0(x)` by the logarithmic series; small-argument route only.
pub(crate) fn n0_series(x: f64) -> f64 {
    let y = 0.25 * x * x;
    let mut sum = Accumulator::new();
    let mut term = 1.0f64;
    let mut harmonic = 0.0f64;
    for k in 1..MAX_TERMS {
        let kf = k as f64;
        term *= -y / (kf * kf);
        harmonic += 1.0 / kf;
        let contrib = -term * harmonic; // (-1)^{k+1} H_k y^k / (k!)^2
        sum.add(contrib);
        if contrib.abs() <= f64::EPSILON * 1e-2 && k as f64 > x {
            break;
        }
    }
    let j0 = j_series(0.0, x);
    std::f64::consts::FRAC_2_PI * (((0.5 * x).ln() + EULER_GAMMA) * j0 + sum.total())
}

/// `N_1(x)` by the logarithmic series; small-argument route only.
pub(crate) fn n1_series(x: f64) -> f64 {
    let y = 0.25 * x * x;
    let mut sum = Accumulator::new();
    // sum_k (-1)^k (H_k + H_{k+1}) y^k / (k! (k+1)!)
    let mut term = 1.0f64;
    let mut h_k = 0.0f64;
    let mut h_k1 = 1.0f64;
    sum.add(h_k + h_k1);
    for k in 1..MAX_TERMS {
        let kf = k as f64;
        term *= -y / (kf * (kf + 1.0));
        h_k += 1.0 / kf;
        h_k1 += 1.0 / (kf + 1.0);
        let contrib = term * (h_k + h_k1);
        sum.add(contrib);
        if contrib.abs() <= f64::EPSILON * 1e-2 && k as f64 > x {
            break;
        }
    }
    let j1 = j_series(1.0, x);
    std::f64::consts::FRAC_2_PI
        * (((0.5 * x).ln() + EULER_GAMMA) * j1 - 1.0 / x - 0.25 * x * sum.total())
}
