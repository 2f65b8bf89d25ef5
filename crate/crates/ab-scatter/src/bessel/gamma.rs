//! Log-gamma and exact-reduction trigonometry used by the Bessel kernel.

pub(crate) const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

const HALF_LN_TWO_PI: f64 = 0.918_938_533_204_672_7;

// Stirling coefficients B_{2n} / (2n (2n-1)) for the asymptotic series of
// ln Gamma; truncation error below 1e-16 relative for x >= 12.
const STIRLING: [f64; 7] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
];

/// `ln Gamma(x)` for `x > 0` via the Stirling series with upward shift.
pub(crate) fn ln_gamma(x: f64) -> f64 {
    debug_assert!(x > 0.0, "ln_gamma requires a positive argument");
    let mut shift = 0.0;
    let mut y = x;
    while y < 12.0 {
        shift += y.ln();
        y += 1.0;
    }
    let inv = 1.0 / y;
    let inv2 = inv * inv;
    let mut series = 0.0;
    let mut p = inv;
    for c in STIRLING {
        series += c * p;
        p *= inv2;
    }
    (y - 0.5) * y.ln() - y + HALF_LN_TWO_PI + series - shift
}

/// `sin(pi x)` with exact argument reduction, so large near-integer `x`
/// keeps full precision.
pub(crate) fn sin_pi(x: f64) -> f64 {
    let n = x.round();
    let r = x - n;
    let s = (std::f64::consts::PI * r).sin();
    if (n as i64) & 1 == 0 {
        s
    } else {
        -s
    }
}

/// `cos(pi x)` with exact argument reduction.
pub(crate) fn cos_pi(x: f64) -> f64 {
    let n = x.round();
    let r = x - n;
    if r.abs() == 0.5 {
        return 0.0;
    }
    let c = (std::f64::consts::PI * r).cos();
    if (n as i64) & 1 == 0 {
        c
    } else {
        -c
    }
}
