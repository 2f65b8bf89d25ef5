//! Trigonometric closed forms for half-integer orders.
//!
//! `J_{1/2} = sqrt(2/(pi x)) sin x` and `N_{1/2} = -sqrt(2/(pi x)) cos x`
//! seed the three-term recurrence. Upward is stable for `N` everywhere and
//! for `J` only while the order stays at or below the argument, so the
//! router admits this path only inside that zone (see [`closed_form_ok`]).

/// Whether the closed-form ladder is numerically safe at `(alpha, x)`:
/// order 1/2 always is; higher half-integers need `x >= 0.5` (cancellation in
/// the first ladder step at tiny argument) and `alpha <= max(x, 2.5)`
/// (upward stability for `J`).
pub(crate) fn closed_form_ok(alpha: f64, x: f64) -> bool {
    alpha == 0.5 || (x >= 0.5 && alpha <= x.max(2.5))
}

/// `(J_alpha, N_alpha)` for `alpha = k + 1/2` by the trig forms plus the
/// upward ladder.
pub(crate) fn jn_half_integer(alpha: f64, x: f64) -> (f64, f64) {
    let scale = (2.0 / (std::f64::consts::PI * x)).sqrt();
    let (sin_x, cos_x) = x.sin_cos();

    // (J_{-1/2}, J_{1/2}) and (N_{-1/2}, N_{1/2})
    let mut j_prev = scale * cos_x;
    let mut j_cur = scale * sin_x;
    let mut n_prev = scale * sin_x;
    let mut n_cur = -scale * cos_x;

    let steps = (alpha - 0.5).round() as usize;
    let mut nu = 0.5;
    for _ in 0..steps {
        let j_next = (2.0 * nu / x) * j_cur - j_prev;
        let n_next = (2.0 * nu / x) * n_cur - n_prev;
        j_prev = j_cur;
        j_cur = j_next;
        n_prev = n_cur;
        n_cur = n_next;
        nu += 1.0;
    }
    (j_cur, n_cur)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn explicit_forms_for_the_first_three_orders() {
        let x = 2.3f64;
        let f = (2.0 / (std::f64::consts::PI * x)).sqrt();

        let (j, n) = jn_half_integer(0.5, x);
        assert!((j - f * x.sin()).abs() < 1e-15);
        assert!((n + f * x.cos()).abs() < 1e-15);

        let (j, n) = jn_half_integer(1.5, x);
        assert!((j - f * (x.sin() / x - x.cos())).abs() < 1e-14);
        assert!((n + f * (x.cos() / x + x.sin())).abs() < 1e-14);

        let (j, n) = jn_half_integer(2.5, x);
        let j_expect = f * ((3.0 / (x * x) - 1.0) * x.sin() - 3.0 * x.cos() / x);
        let n_expect = -f * ((3.0 / (x * x) - 1.0) * x.cos() + 3.0 * x.sin() / x);
        assert!((j - j_expect).abs() < 1e-14);
        assert!((n - n_expect).abs() < 1e-14);
    }

    #[test]
    fn admission_rules() {
        assert!(closed_form_ok(0.5, 1e-6));
        assert!(closed_form_ok(2.5, 0.7));
        assert!(closed_form_ok(20.5, 30.0));
        assert!(!closed_form_ok(20.5, 5.0)); // above the turning point
        assert!(!closed_form_ok(1.5, 0.1)); // cancellation at tiny x
    }
}
