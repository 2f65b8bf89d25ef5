//! Cylindrical Bessel functions `J_alpha(x)` and `N_alpha(x)` for real order
//! `alpha >= 0` and argument `x > 0`.
//!
//! No single expansion covers the `(alpha, x)` quarter-plane, so evaluation is
//! routed:
//!
//! * half-integer orders inside the recurrence-stable zone use the
//!   trigonometric closed forms;
//! * large arguments (relative to the order) use the Hankel expansion, which
//!   reports whether it actually reached its accuracy floor;
//! * otherwise `J` comes from the ascending series (`x < 12`), from upward
//!   recurrence off small-order Hankel primitives (`alpha <= x`), or from
//!   Miller's downward recurrence (`alpha > x`); and `N` comes from the
//!   connection formula `N_alpha = (J_alpha cos(alpha pi) - J_{-alpha}) /
//!   sin(alpha pi)`, except within `|alpha - round(alpha)| < 1e-6` of an
//!   integer, where the formula degenerates and the integer-order algorithm
//!   (logarithmic series for `N_0`, `N_1`, then upward recurrence) is used
//!   instead.
//!
//! `J` never rounds its order, so it is continuous in `alpha` across the
//! integer guard band; `N` inside the band is evaluated at the rounded
//! integer, an approximation of order `1e-6 * |dN/dnu|` that the band trades
//! for the total precision loss of the connection formula.
//!
//! Accuracy target: relative error at or below `1e-10` for `alpha <= 200`,
//! `x <= 1000` (near the oscillatory zeros, relative to the local envelope
//! `sqrt(2/(pi x))`). One stripe falls short of that target by construction:
//! within ~1e-2 of an integer order, the connection formula's numerator
//! cancels to `sin(alpha pi) * N_alpha`, so `N` carries an
//! `eps / |sin(alpha pi)|` error floor, reaching ~1e-8 just outside the guard
//! band, and inside the band the rounded-order evaluation costs
//! ~`1e-6 * |dN/dnu|`. Beyond the target domain the kernel degrades
//! gracefully: `J` underflows to zero and `N` reports
//! [`BesselError::Overflow`] once it leaves f64 range.

mod asymptotic;
mod gamma;
mod half_integer;
mod recurrence;
mod series;

pub(crate) use gamma::{cos_pi, sin_pi};

use thiserror::Error;

/// Half-width of the integer guard band for the `N` route.
const INTEGER_BAND: f64 = 1e-6;
/// Classification tolerance for [`BesselOrder::classify`].
const CLASSIFY_TOL: f64 = 1e-12;
/// The connection formula refuses to run below this `|sin(alpha pi)|`.
const SIN_GUARD: f64 = 3e-6;

/// Errors from the special-function kernel.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum BesselError {
    /// Invalid input: non-finite or out-of-domain argument or order.
    #[error("domain error: {reason}")]
    Domain { reason: String },
    /// `N_alpha(x)` exceeds f64 range (deep order-dominated regime).
    #[error("N_{alpha}({x}) overflows f64")]
    Overflow { alpha: f64, x: f64 },
    /// Internal: the connection formula was requested inside the integer
    /// degeneracy band. The router never does this; reaching it means a bug.
    #[error("connection formula degenerate at alpha = {alpha}")]
    PrecisionLoss { alpha: f64 },
}

/// Validated Bessel order: finite and non-negative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BesselOrder(f64);

/// How an order relates to the integer/half-integer lattice, within `1e-12`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderClass {
    Integer(u64),
    HalfInteger,
    Generic,
}

impl BesselOrder {
    pub fn new(alpha: f64) -> Result<Self, BesselError> {
        if !alpha.is_finite() || alpha < 0.0 {
            return Err(BesselError::Domain {
                reason: format!("order must be finite and non-negative, got {alpha}"),
            });
        }
        Ok(Self(alpha))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn classify(self) -> OrderClass {
        let a = self.0;
        if (a - a.round()).abs() <= CLASSIFY_TOL {
            OrderClass::Integer(a.round() as u64)
        } else if (a - 0.5 - (a - 0.5).round()).abs() <= CLASSIFY_TOL {
            OrderClass::HalfInteger
        } else {
            OrderClass::Generic
        }
    }
}

/// Which evaluation path produced a [`BesselPair`].
///
/// * `ClosedForm` — half-integer trigonometric forms;
/// * `Asymptotic` — Hankel expansion, either directly at the requested order
///   or through small-order primitives extended by stable recurrence
///   (`x >= 12`);
/// * `Series` — ascending series, including the logarithmic `N` series of the
///   integer guard band (`x < 12`);
/// * `Connection` — `N` from the `J_{+alpha}`/`J_{-alpha}` connection formula
///   (generic non-integer order, `J` from series or recurrence).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    Series,
    Connection,
    Asymptotic,
    ClosedForm,
}

/// A jointly evaluated `(J_alpha(x), N_alpha(x))` with its routing tag.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BesselPair {
    pub j: f64,
    pub n: f64,
    pub regime: Regime,
}

/// `J_alpha(x)` for real `alpha >= 0`, `x > 0`.
pub fn bessel_j(order: BesselOrder, x: f64) -> Result<f64, BesselError> {
    check_argument(x)?;
    let alpha = order.value();
    if let Some((j, _, _)) = route_closed_or_direct(alpha, x) {
        return Ok(j);
    }
    Ok(j_value(alpha, x))
}

/// `N_alpha(x)` (Bessel function of the second kind, also written `Y_alpha`)
/// for real `alpha >= 0`, `x > 0`.
pub fn bessel_n(order: BesselOrder, x: f64) -> Result<f64, BesselError> {
    check_argument(x)?;
    let alpha = order.value();
    if let Some((_, n, _)) = route_closed_or_direct(alpha, x) {
        return Ok(n);
    }
    n_value(alpha, x)
}

/// Jointly evaluated pair; `j` and `n` are bit-identical to the individual
/// operations.
pub fn bessel_pair(order: BesselOrder, x: f64) -> Result<BesselPair, BesselError> {
    check_argument(x)?;
    let alpha = order.value();
    if let Some((j, n, regime)) = route_closed_or_direct(alpha, x) {
        return Ok(BesselPair { j, n, regime });
    }
    let j = j_value(alpha, x);
    let n = n_value(alpha, x)?;
    let regime = if in_integer_band(alpha) {
        if x < 12.0 {
            Regime::Series
        } else {
            Regime::Asymptotic
        }
    } else {
        Regime::Connection
    };
    Ok(BesselPair { j, n, regime })
}

fn check_argument(x: f64) -> Result<(), BesselError> {
    if !x.is_finite() || x <= 0.0 {
        return Err(BesselError::Domain {
            reason: format!("argument must be finite and positive, got {x}"),
        });
    }
    Ok(())
}

fn in_integer_band(alpha: f64) -> bool {
    (alpha - alpha.round()).abs() < INTEGER_BAND
}

fn is_half_integer(alpha: f64) -> bool {
    (alpha - 0.5 - (alpha - 0.5).round()).abs() <= CLASSIFY_TOL
}

/// The two routes that evaluate `J` and `N` together: closed forms and the
/// direct Hankel expansion.
fn route_closed_or_direct(alpha: f64, x: f64) -> Option<(f64, f64, Regime)> {
    if is_half_integer(alpha) && half_integer::closed_form_ok(alpha, x) {
        // Evaluate at the exact half-integer; the classification tolerance
        // (1e-12) bounds the order snap.
        let snapped = (alpha - 0.5).round() + 0.5;
        let (j, n) = half_integer::jn_half_integer(snapped, x);
        return Some((j, n, Regime::ClosedForm));
    }
    if asymptotic::applicable(alpha, x) {
        if let Some((j, n)) = asymptotic::jn_asymptotic(alpha, x) {
            return Some((j, n, Regime::Asymptotic));
        }
    }
    None
}

/// `J_alpha` by series, upward recurrence off asymptotic primitives, or
/// Miller's algorithm. Never rounds the order, so it is continuous in
/// `alpha`. Infallible apart from graceful underflow to zero.
fn j_value(alpha: f64, x: f64) -> f64 {
    if x < 12.0 {
        return series::j_series(alpha, x);
    }
    if alpha > x {
        return recurrence::miller_j(alpha, x);
    }
    let mu = alpha.fract();
    let steps = (alpha - mu).round() as usize;
    let (j_mu, _) = primitive(mu, x);
    if steps == 0 {
        return j_mu;
    }
    let (j_mu1, _) = primitive(mu + 1.0, x);
    recurrence::upward(mu, x, j_mu, j_mu1, steps)
        .expect("upward J recurrence cannot overflow below the turning point")
}

/// `N_alpha` by the integer-band algorithm or the connection formula.
fn n_value(alpha: f64, x: f64) -> Result<f64, BesselError> {
    if in_integer_band(alpha) {
        let n = alpha.round() as usize;
        let (n0, n1) = if x < 12.0 {
            (series::n0_series(x), series::n1_series(x))
        } else {
            (primitive(0.0, x).1, primitive(1.0, x).1)
        };
        return recurrence::upward(0.0, x, n0, n1, n);
    }
    connection_n(alpha, x)
}

/// Small-order `(J_nu, N_nu)` primitive for the `x >= 12` recurrence bases;
/// `nu` stays in `[0, 2)` where the Hankel expansion always converges.
fn primitive(nu: f64, x: f64) -> (f64, f64) {
    debug_assert!((0.0..2.0).contains(&nu) && x >= 12.0);
    asymptotic::jn_asymptotic(nu, x)
        .expect("Hankel expansion converges for order < 2 at x >= 12")
}

/// Connection formula `N_alpha = (J_alpha cos(alpha pi) - J_{-alpha}) /
/// sin(alpha pi)` for non-integer order outside the guard band.
///
/// `J_{-alpha}` comes from the downward ladder seeded at the pair of orders
/// `(1 - d, -d)` with `d = alpha - round(alpha)` in `[-0.5, 0.5)`: both seeds
/// stay at least 1/2 away from the negative-integer poles of the series, so
/// no Pochhammer factor can spike however close `alpha` is to the band.
fn connection_n(alpha: f64, x: f64) -> Result<f64, BesselError> {
    let sin_a = sin_pi(alpha);
    if sin_a.abs() < SIN_GUARD {
        return Err(BesselError::PrecisionLoss { alpha });
    }

    let rounded = alpha.round();
    let d = alpha - rounded;
    let steps = rounded as usize;

    let j_at = |order: f64| -> f64 {
        if x < 12.0 {
            series::j_series(order, x)
        } else if order >= 0.0 {
            primitive(order, x).0
        } else {
            let a = -order;
            let (j, n) = primitive(a, x);
            cos_pi(a) * j - sin_pi(a) * n
        }
    };
    let seed_upper = j_at(1.0 - d); // J_{1-d}
    let seed_lower = j_at(-d); // J_{-d}
    if !seed_upper.is_finite() || !seed_lower.is_finite() {
        return Err(BesselError::Overflow { alpha, x });
    }

    let j_neg_alpha = recurrence::downward(-d, x, seed_upper, seed_lower, steps)?;
    let n = (j_value(alpha, x) * cos_pi(alpha) - j_neg_alpha) / sin_a;
    if !n.is_finite() {
        return Err(BesselError::Overflow { alpha, x });
    }
    Ok(n)
}

// Signed-order evaluations and the derivative recurrence, internal to the
// crate: the Wronskian and continuity property tests need them, the public
// surface does not.

pub(crate) fn j_signed(nu: f64, x: f64) -> Result<f64, BesselError> {
    if nu >= 0.0 {
        return bessel_j(BesselOrder::new(nu)?, x);
    }
    let a = -nu;
    if in_integer_band(a) {
        let j = bessel_j(BesselOrder::new(a.round())?, x)?;
        return Ok(if (a.round() as i64) % 2 == 0 { j } else { -j });
    }
    let pair = bessel_pair(BesselOrder::new(a)?, x)?;
    Ok(cos_pi(a) * pair.j - sin_pi(a) * pair.n)
}

pub(crate) fn n_signed(nu: f64, x: f64) -> Result<f64, BesselError> {
    if nu >= 0.0 {
        return bessel_n(BesselOrder::new(nu)?, x);
    }
    let a = -nu;
    if in_integer_band(a) {
        let n = bessel_n(BesselOrder::new(a.round())?, x)?;
        return Ok(if (a.round() as i64) % 2 == 0 { n } else { -n });
    }
    let pair = bessel_pair(BesselOrder::new(a)?, x)?;
    Ok(sin_pi(a) * pair.j + cos_pi(a) * pair.n)
}

/// `J'_alpha(x) = (J_{alpha-1} - J_{alpha+1}) / 2`.
pub(crate) fn j_derivative(alpha: f64, x: f64) -> Result<f64, BesselError> {
    Ok(0.5 * (j_signed(alpha - 1.0, x)? - j_signed(alpha + 1.0, x)?))
}

/// `N'_alpha(x) = (N_{alpha-1} - N_{alpha+1}) / 2`.
pub(crate) fn n_derivative(alpha: f64, x: f64) -> Result<f64, BesselError> {
    Ok(0.5 * (n_signed(alpha - 1.0, x)? - n_signed(alpha + 1.0, x)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(alpha: f64) -> BesselOrder {
        BesselOrder::new(alpha).unwrap()
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(
            BesselOrder::new(-0.5),
            Err(BesselError::Domain { .. })
        ));
        assert!(matches!(
            BesselOrder::new(f64::NAN),
            Err(BesselError::Domain { .. })
        ));
        assert!(matches!(
            bessel_j(order(1.0), 0.0),
            Err(BesselError::Domain { .. })
        ));
        assert!(matches!(
            bessel_j(order(1.0), -3.0),
            Err(BesselError::Domain { .. })
        ));
        assert!(matches!(
            bessel_n(order(1.0), f64::INFINITY),
            Err(BesselError::Domain { .. })
        ));
    }

    #[test]
    fn order_classification() {
        assert_eq!(order(3.0).classify(), OrderClass::Integer(3));
        assert_eq!(order(3.0 + 5e-13).classify(), OrderClass::Integer(3));
        assert_eq!(order(2.5).classify(), OrderClass::HalfInteger);
        assert_eq!(order(2.5 - 5e-13).classify(), OrderClass::HalfInteger);
        assert_eq!(order(2.3).classify(), OrderClass::Generic);
    }

    #[test]
    fn regime_tags_are_diagnosable() {
        assert_eq!(bessel_pair(order(0.5), 2.0).unwrap().regime, Regime::ClosedForm);
        assert_eq!(bessel_pair(order(0.3), 500.0).unwrap().regime, Regime::Asymptotic);
        assert_eq!(bessel_pair(order(2.3), 5.0).unwrap().regime, Regime::Connection);
        assert_eq!(bessel_pair(order(3.0), 5.0).unwrap().regime, Regime::Series);
        assert_eq!(bessel_pair(order(3.0), 20.0).unwrap().regime, Regime::Asymptotic);
        assert_eq!(bessel_pair(order(7.3), 14.0).unwrap().regime, Regime::Connection);
        // half-integer outside the stable closed-form zone routes generically
        assert_eq!(bessel_pair(order(20.5), 5.0).unwrap().regime, Regime::Connection);
    }

    #[test]
    fn pair_is_bit_identical_to_the_individual_operations() {
        for &(alpha, x) in &[
            (0.0, 1.0),
            (0.5, 1.57),
            (2.3, 5.0),
            (3.0, 0.5),
            (7.7, 19.5),
            (40.25, 35.0),
            (120.5, 100.0),
            (0.3, 500.0),
        ] {
            let pair = bessel_pair(order(alpha), x).unwrap();
            assert_eq!(pair.j, bessel_j(order(alpha), x).unwrap());
            assert_eq!(pair.n, bessel_n(order(alpha), x).unwrap());
        }
    }

    #[test]
    fn reference_values_from_extended_precision() {
        let cases = [
            // (alpha, x, J, N) at 22 significant digits
            (0.0, 1.0, 0.765_197_686_557_966_551_4, 0.088_256_964_215_676_957_98),
            (1.0, 1.0, 0.440_050_585_744_933_516, -0.781_212_821_300_288_716_5),
            (2.3, 5.0, 0.169_441_469_769_812_997, 0.335_540_080_653_553_997_3),
            (0.3, 14.0, 0.210_080_306_179_323_523_6, 0.036_341_368_785_635_548_61),
            (7.7, 19.5, -0.055_217_836_648_689_432_46, 0.180_152_415_265_495_593_6),
            (40.25, 35.0, 0.012_947_752_664_067_885_09, -1.265_449_418_022_375_527),
            (3.0, 0.5, 2.563_729_994_587_244_075e-3, -42.059_494_304_723_882_69),
            (120.5, 100.0, 8.337_379_642_661_562_184e-6, -568.392_799_738_737_207),
        ];
        for &(alpha, x, j_ref, n_ref) in &cases {
            let pair = bessel_pair(order(alpha), x).unwrap();
            let j_err = ((pair.j - j_ref) / j_ref).abs();
            let n_err = ((pair.n - n_ref) / n_ref).abs();
            assert!(j_err < 1e-10, "J({alpha},{x}): rel err {j_err:e}");
            assert!(n_err < 1e-10, "N({alpha},{x}): rel err {n_err:e}");
        }
    }

    #[test]
    fn wronskian_with_derivative_recurrence() {
        // J_a N'_a - J'_a N_a = 2/(pi x), derivatives from (C_{a-1}-C_{a+1})/2.
        let alphas = [0.0, 0.2, 0.5, 0.9, 1.0, 2.3, 5.5, 10.0, 17.25, 33.3, 50.0];
        let xs = [0.01, 0.1, 0.9, 2.0, 5.5, 11.0, 13.0, 42.0, 120.0, 499.5];
        for &a in &alphas {
            for &x in &xs {
                let pair = match bessel_pair(order(a), x) {
                    Ok(p) => p,
                    Err(BesselError::Overflow { .. }) => continue,
                    Err(e) => panic!("unexpected error at ({a},{x}): {e}"),
                };
                let jp = j_derivative(a, x).unwrap();
                let np = match n_derivative(a, x) {
                    Ok(v) => v,
                    Err(BesselError::Overflow { .. }) => continue,
                    Err(e) => panic!("unexpected error at ({a},{x}): {e}"),
                };
                let w = pair.j * np - jp * pair.n;
                let expect = 2.0 / (std::f64::consts::PI * x);
                assert!(
                    ((w - expect) / expect).abs() <= 1e-9,
                    "Wronskian off at alpha={a} x={x}: {w:e} vs {expect:e}"
                );
            }
        }
    }

    #[test]
    fn continuity_of_j_across_the_guard_band() {
        // J never reroutes on the integer band: as eps -> 0 the difference
        // must vanish (the genuine dJ/dnu variation is subtracted out by
        // shrinking eps), and straddling the N-route boundary at n + 1e-6
        // must not kink J either.
        for &x in &[0.7, 5.0, 13.0, 77.7] {
            for n in [1.0f64, 3.0, 7.0] {
                let inside = bessel_j(order(n), x).unwrap();
                for eps in [1e-9, 1e-12] {
                    for sign in [-1.0, 1.0] {
                        let outside = bessel_j(order(n + sign * eps), x).unwrap();
                        assert!(
                            (inside - outside).abs() < 1e-8,
                            "J jump at n={n} x={x} eps={eps} sign={sign}"
                        );
                    }
                }
                let below = bessel_j(order(n + 1e-6 - 1e-12), x).unwrap();
                let above = bessel_j(order(n + 1e-6 + 1e-12), x).unwrap();
                assert!(
                    (below - above).abs() < 1e-10,
                    "J kink at the N-band edge, n={n} x={x}"
                );
            }
        }
    }

    #[test]
    fn connection_formula_guard_band() {
        // The router must reroute inside the band...
        assert!(bessel_n(order(3.0 + 5e-7), 4.0).is_ok());
        // ...and the raw connection formula must refuse to run there.
        assert!(matches!(
            connection_n(3.0 + 5e-7, 4.0),
            Err(BesselError::PrecisionLoss { .. })
        ));
    }

    #[test]
    fn integer_band_n_matches_connection_outside() {
        // At 2e-6 past the integer the connection formula is live; the two
        // routes must agree to the band's documented accuracy.
        let x = 4.0;
        let inside = bessel_n(order(3.0), x).unwrap();
        let outside = bessel_n(order(3.0 + 2e-6), x).unwrap();
        assert!((inside - outside).abs() < 1e-5);
    }

    #[test]
    fn deep_order_dominated_regime() {
        // J underflows quietly; N overflows loudly.
        assert_eq!(bessel_j(order(300.0), 1.0).unwrap(), 0.0);
        assert!(matches!(
            bessel_n(order(300.0), 1.0),
            Err(BesselError::Overflow { .. })
        ));
        assert!(matches!(
            bessel_pair(order(300.3), 1.0),
            Err(BesselError::Overflow { .. })
        ));
    }

    #[test]
    fn recurrence_consistency() {
        // C_{a-1} + C_{a+1} = (2a/x) C_a for both kinds.
        for &(a, x) in &[(1.5, 3.0), (4.3, 7.0), (2.0, 30.0), (12.7, 40.0)] {
            let j_m = j_signed(a - 1.0, x).unwrap();
            let j_0 = j_signed(a, x).unwrap();
            let j_p = j_signed(a + 1.0, x).unwrap();
            assert!(
                (j_m + j_p - 2.0 * a / x * j_0).abs() < 1e-9 * j_0.abs().max(1e-3),
                "J recurrence at ({a},{x})"
            );
            let n_m = n_signed(a - 1.0, x).unwrap();
            let n_0 = n_signed(a, x).unwrap();
            let n_p = n_signed(a + 1.0, x).unwrap();
            assert!(
                (n_m + n_p - 2.0 * a / x * n_0).abs() < 1e-9 * n_0.abs().max(1e-3),
                "N recurrence at ({a},{x})"
            );
        }
    }
}
