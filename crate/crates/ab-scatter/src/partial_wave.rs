//! Phase shifts, amplitudes, and cross sections for a hard disk plus an
//! Aharonov-Bohm flux line.
//!
//! The flux shifts every angular channel's Bessel order to
//! `alpha = |m + mu0|`; the hard-disk boundary condition then gives
//! `tan(delta_alpha) = J_alpha(ka) / N_alpha(ka)`. Cross sections follow from
//! the channel sums
//!
//! ```text
//! sigma_t/a = (4/ka)  sum_{m}        sin^2(delta_alpha)   distinguishable
//! sigma_t/a = (16/ka) sum_{m even}   sin^2(delta_alpha)   bosons
//! sigma_t/a = (16/ka) sum_{m odd}    sin^2(delta_alpha)   fermions
//! ```
//!
//! and the scattering amplitude from
//! `f(phi) = (2pi k)^{-1/2} sum_m e^{i(delta-pi/4)} 2i sin(delta) e^{im phi}`,
//! with the identical-particle combinations `f(phi) +- f(phi+pi)`.
//!
//! All math runs in the dimensionless variable `ka` with the disk radius as
//! the unit of length, so `sigma_over_a` is sigma_t/a and `normalized` is
//! sigma_t/(4a).
//!
//! Observables are built from `sin^2(delta)` in the ratio form
//! `J^2/(J^2+N^2)`, never through `sin(atan2(...))`; the phase `delta` itself
//! is diagnostic output. Channels so far past the turning point that
//! `N_alpha(ka)` leaves f64 range contribute `sin^2 = 0` (their true
//! contribution is below 1e-600).

use crate::bessel::{self, bessel_pair, BesselError, BesselOrder};
use crate::kahan::Accumulator;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};
use thiserror::Error;

/// Default tail tolerance for automatic truncation.
pub const DEFAULT_TAIL_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PartialWaveError {
    #[error(transparent)]
    Bessel(#[from] BesselError),
    #[error("invalid input: {reason}")]
    InvalidInput { reason: String },
    #[error(
        "auto truncation failed: tail bound {tail_bound:e} above {tail_tol:e} at m_max = {m_cap}"
    )]
    TruncationFailure {
        tail_bound: f64,
        tail_tol: f64,
        m_cap: i32,
    },
}

/// Dimensionless flux `mu0 = -Phi/Phi0`. Any finite value; integer values
/// reproduce the flux-free disk.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FluxParameter(f64);

impl FluxParameter {
    pub fn new(mu0: f64) -> Result<Self, PartialWaveError> {
        if !mu0.is_finite() {
            return Err(PartialWaveError::InvalidInput {
                reason: format!("mu0 must be finite, got {mu0}"),
            });
        }
        Ok(Self(mu0))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// Channel order `alpha = |m + mu0|`.
    pub fn order_for_channel(self, m: i32) -> BesselOrder {
        BesselOrder::new((m as f64 + self.0).abs()).expect("|m + mu0| is finite and non-negative")
    }
}

/// Which particles scatter: one distinguishable particle, or identical
/// bosons/fermions (symmetrized amplitude, even/odd channel sums).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Statistics {
    Distinguishable,
    Boson,
    Fermion,
}

impl Statistics {
    fn includes(self, m: i32) -> bool {
        match self {
            Statistics::Distinguishable => true,
            Statistics::Boson => m.rem_euclid(2) == 0,
            Statistics::Fermion => m.rem_euclid(2) == 1,
        }
    }

    fn prefactor(self) -> f64 {
        match self {
            Statistics::Distinguishable => 4.0,
            Statistics::Boson | Statistics::Fermion => 16.0,
        }
    }
}

impl std::fmt::Display for Statistics {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Statistics::Distinguishable => "distinguishable",
            Statistics::Boson => "boson",
            Statistics::Fermion => "fermion",
        })
    }
}

impl std::str::FromStr for Statistics {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "distinguishable" => Ok(Statistics::Distinguishable),
            "boson" => Ok(Statistics::Boson),
            "fermion" => Ok(Statistics::Fermion),
            other => Err(format!(
                "unknown statistics '{other}' (expected distinguishable|boson|fermion)"
            )),
        }
    }
}

/// How the channel window `m in [-M, M]` is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum TruncationPolicy {
    /// Grow the window until the reported tail bound drops below `tail_tol`.
    Auto { tail_tol: f64 },
    /// Fixed window half-width.
    Fixed { m_max: u32 },
}

impl Default for TruncationPolicy {
    fn default() -> Self {
        TruncationPolicy::Auto {
            tail_tol: DEFAULT_TAIL_TOL,
        }
    }
}

impl TruncationPolicy {
    fn validate(&self) -> Result<(), PartialWaveError> {
        match *self {
            TruncationPolicy::Auto { tail_tol } => {
                if !(tail_tol > 0.0 && tail_tol.is_finite()) {
                    return Err(PartialWaveError::InvalidInput {
                        reason: format!("tail_tol must be positive and finite, got {tail_tol}"),
                    });
                }
            }
            TruncationPolicy::Fixed { m_max } => {
                if m_max == 0 {
                    return Err(PartialWaveError::InvalidInput {
                        reason: "m_max must be a positive integer".into(),
                    });
                }
            }
        }
        Ok(())
    }
}

/// One evaluation request: `(ka, mu0)`, the statistics mode, and the
/// truncation policy.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScatteringPoint {
    pub ka: f64,
    pub flux: FluxParameter,
    pub statistics: Statistics,
    pub truncation: TruncationPolicy,
}

impl ScatteringPoint {
    pub fn new(
        ka: f64,
        flux: FluxParameter,
        statistics: Statistics,
        truncation: TruncationPolicy,
    ) -> Result<Self, PartialWaveError> {
        if !(ka > 0.0 && ka.is_finite()) {
            return Err(PartialWaveError::InvalidInput {
                reason: format!("ka must be positive and finite, got {ka}"),
            });
        }
        truncation.validate()?;
        Ok(Self {
            ka,
            flux,
            statistics,
            truncation,
        })
    }
}

/// One angular channel: quantum number `m`, flux-shifted order, phase shift
/// on the `(-pi/2, pi/2]` branch, and `sin^2(delta)` in ratio form.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ChannelShift {
    pub m: i32,
    pub alpha: f64,
    pub delta: f64,
    pub sin2: f64,
}

/// Total cross section with its per-channel breakdown and truncation
/// diagnostics. `sigma_over_a` is sigma_t/a, `normalized` is sigma_t/(4a).
#[derive(Debug, Clone, PartialEq)]
pub struct CrossSectionResult {
    pub sigma_over_a: f64,
    pub normalized: f64,
    pub channels: Vec<ChannelShift>,
    pub m_used: i32,
    pub tail_bound: f64,
}

/// Scattering amplitude sample, in units where the disk radius is 1 (so `f`
/// carries units of sqrt(a)).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AmplitudeSample {
    pub phi: f64,
    pub f: Complex64,
}

/// Both sides of the optical theorem and their relative residual.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OpticalTheoremCheck {
    pub lhs: f64,
    pub rhs: f64,
    pub residual: f64,
}

/// Closed-form low/high-energy reference cross sections (units of a).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticReferences {
    /// `pi^2 / (ka ln^2(ka/2))`: the m = 0, flux-free low-energy limit of the
    /// channel sum.
    pub low_energy_sigma: f64,
    /// The low-energy reference is asymptotic; outside `ka < 0.5` it is
    /// meaningless and this flag is false.
    pub low_energy_valid: bool,
    /// Alternative printed form `(8/pi) / (ka ln(ka))` seen in the
    /// literature for this limit. It does not follow from the phase shift
    /// `tan(delta_0) ~ pi/(2 ln(ka/2))` (which yields `low_energy_sigma`);
    /// both are exposed so the two can be compared against the engine.
    pub low_energy_sigma_alt: f64,
    /// High-energy limit `sigma_t -> 4a`, i.e. 4 in units of a.
    pub high_energy_sigma: f64,
}

/// Anything that can produce a channel's phase shift. The hard disk is the
/// built-in provider; substituting another potential means implementing this
/// seam.
pub trait ChannelProvider: Sync {
    fn channel_shift(
        &self,
        m: i32,
        flux: FluxParameter,
        ka: f64,
    ) -> Result<ChannelShift, PartialWaveError>;
}

/// Hard disk of radius a: `tan(delta_alpha) = J_alpha(ka)/N_alpha(ka)`.
#[derive(Debug, Clone, Copy, Default)]
pub struct HardDisk;

impl ChannelProvider for HardDisk {
    fn channel_shift(
        &self,
        m: i32,
        flux: FluxParameter,
        ka: f64,
    ) -> Result<ChannelShift, PartialWaveError> {
        hard_disk_phase_shift(m, flux, ka)
    }
}

/// Phase shift of one hard-disk channel: `delta = atan2(J, N)` reduced to the
/// `(-pi/2, pi/2]` branch (`delta = pi/2` at zeros of `N`), with
/// `sin^2(delta)` computed in ratio form. Deep order-dominated channels whose
/// `N` overflows f64 return `delta = 0, sin2 = 0`.
pub fn hard_disk_phase_shift(
    m: i32,
    flux: FluxParameter,
    ka: f64,
) -> Result<ChannelShift, PartialWaveError> {
    check_ka(ka)?;
    let alpha = flux.order_for_channel(m);
    match bessel_pair(alpha, ka) {
        Ok(pair) => {
            let mut delta = pair.j.atan2(pair.n);
            if delta > FRAC_PI_2 {
                delta -= PI;
            } else if delta <= -FRAC_PI_2 {
                delta += PI;
            }
            let sin2 = pair.j * pair.j / (pair.j * pair.j + pair.n * pair.n);
            Ok(ChannelShift {
                m,
                alpha: alpha.value(),
                delta,
                sin2,
            })
        }
        // |N| > 1e306 with |J| <= 1: sin^2 < 1e-612 is zero in f64.
        Err(BesselError::Overflow { .. }) => Ok(ChannelShift {
            m,
            alpha: alpha.value(),
            delta: 0.0,
            sin2: 0.0,
        }),
        Err(e) => Err(e.into()),
    }
}

/// `sin^2(delta)` of one channel, `J^2/(J^2+N^2)`; always in `[0, 1]`.
pub fn channel_sin2(m: i32, flux: FluxParameter, ka: f64) -> Result<f64, PartialWaveError> {
    Ok(hard_disk_phase_shift(m, flux, ka)?.sin2)
}

fn check_ka(ka: f64) -> Result<(), PartialWaveError> {
    if !(ka > 0.0 && ka.is_finite()) {
        return Err(PartialWaveError::InvalidInput {
            reason: format!("ka must be positive and finite, got {ka}"),
        });
    }
    Ok(())
}

/// Hard cap on the auto-truncation window, `M <= 10 ka + 1000`.
fn m_cap(ka: f64) -> i32 {
    (10.0 * ka + 1000.0).min(i32::MAX as f64 / 2.0) as i32
}

/// Resolved channel window: half-width, per-channel shifts over
/// `m in [-M, M]` (all statistics; parity filtering happens at the sums), and
/// the tail bound on the excluded `sin^2` sum.
struct ResolvedWindow {
    m_used: i32,
    channels: Vec<ChannelShift>,
    tail_bound: f64,
}

/// Geometric majorant for the excluded tail: the first excluded channels'
/// sin^2, divided by `1 - rho` with `rho` the last observed decay ratio
/// (capped at 0.9). Superexponential decay past the turning point makes the
/// geometric extrapolation a true upper bound.
fn tail_bound_from_edges(
    provider: &dyn ChannelProvider,
    flux: FluxParameter,
    ka: f64,
    m: i32,
    last_pos: f64,
    last_neg: f64,
) -> Result<(f64, f64, f64), PartialWaveError> {
    let next_pos = provider.channel_shift(m + 1, flux, ka)?.sin2;
    let next_neg = provider.channel_shift(-(m + 1), flux, ka)?.sin2;
    let rho_pos = if last_pos > 0.0 { next_pos / last_pos } else { 0.0 };
    let rho_neg = if last_neg > 0.0 { next_neg / last_neg } else { 0.0 };
    let rho = rho_pos.max(rho_neg).min(0.9);
    let bound = (next_pos + next_neg) / (1.0 - rho);
    Ok((bound, next_pos, next_neg))
}

fn resolve_window(
    provider: &dyn ChannelProvider,
    point: &ScatteringPoint,
) -> Result<ResolvedWindow, PartialWaveError> {
    point.truncation.validate()?;
    check_ka(point.ka)?;
    let flux = point.flux;
    let ka = point.ka;

    match point.truncation {
        TruncationPolicy::Fixed { m_max } => {
            let m_used = m_max as i32;
            let mut channels = Vec::with_capacity(2 * m_max as usize + 1);
            for m in -m_used..=m_used {
                channels.push(provider.channel_shift(m, flux, ka)?);
            }
            let last_pos = channels[channels.len() - 1].sin2;
            let last_neg = channels[0].sin2;
            let (tail_bound, _, _) =
                tail_bound_from_edges(provider, flux, ka, m_used, last_pos, last_neg)?;
            Ok(ResolvedWindow {
                m_used,
                channels,
                tail_bound,
            })
        }
        TruncationPolicy::Auto { tail_tol } => {
            let cap = m_cap(ka);
            let mut m = (ka.ceil() as i32 + 8).min(cap);
            // channels[m + offset] indexed by m; rebuilt as the window grows
            let mut window: Vec<ChannelShift> = Vec::new();
            for mm in -m..=m {
                window.push(provider.channel_shift(mm, flux, ka)?);
            }
            loop {
                let last_pos = window[window.len() - 1].sin2;
                let last_neg = window[0].sin2;
                let (bound, next_pos, next_neg) =
                    tail_bound_from_edges(provider, flux, ka, m, last_pos, last_neg)?;
                let decreasing = next_pos <= last_pos && next_neg <= last_neg;
                if decreasing
                    && last_pos < tail_tol
                    && last_neg < tail_tol
                    && bound <= tail_tol
                {
                    return Ok(ResolvedWindow {
                        m_used: m,
                        channels: window,
                        tail_bound: bound,
                    });
                }
                if m >= cap {
                    return Err(PartialWaveError::TruncationFailure {
                        tail_bound: bound,
                        tail_tol,
                        m_cap: cap,
                    });
                }
                m += 1;
                window.insert(0, provider.channel_shift(-m, flux, ka)?);
                window.push(provider.channel_shift(m, flux, ka)?);
            }
        }
    }
}

/// Total cross section for the built-in hard disk.
pub fn total_cross_section(point: &ScatteringPoint) -> Result<CrossSectionResult, PartialWaveError> {
    total_cross_section_with(&HardDisk, point)
}

/// Total cross section through the provider seam.
pub fn total_cross_section_with(
    provider: &dyn ChannelProvider,
    point: &ScatteringPoint,
) -> Result<CrossSectionResult, PartialWaveError> {
    let window = resolve_window(provider, point)?;
    let mut sum = Accumulator::new();
    for ch in &window.channels {
        if point.statistics.includes(ch.m) {
            sum.add(ch.sin2);
        }
    }
    let sigma_over_a = point.statistics.prefactor() / point.ka * sum.total();
    Ok(CrossSectionResult {
        sigma_over_a,
        normalized: sigma_over_a / 4.0,
        channels: window.channels,
        m_used: window.m_used,
        tail_bound: window.tail_bound,
    })
}

/// Normalize an angle to `(-pi, pi]`.
fn wrap_angle(phi: f64) -> f64 {
    let mut p = phi.rem_euclid(2.0 * PI);
    if p > PI {
        p -= 2.0 * PI;
    }
    p
}

/// Bare (unsymmetrized) amplitude from a resolved window.
fn bare_amplitude(window: &ResolvedWindow, ka: f64, phi: f64) -> Complex64 {
    let mut f = Complex64::new(0.0, 0.0);
    for ch in &window.channels {
        // e^{i(delta - pi/4)} * 2i sin(delta) * e^{im phi}; invariant under
        // delta -> delta + pi, so the branch choice does not matter.
        let phase = Complex64::from_polar(1.0, ch.delta - FRAC_PI_4);
        let angular = Complex64::from_polar(1.0, ch.m as f64 * phi);
        f += phase * Complex64::new(0.0, 2.0 * ch.delta.sin()) * angular;
    }
    f / (2.0 * PI * ka).sqrt()
}

/// Scattering amplitude at angle `phi` (wrapped into `(-pi, pi]`). For
/// identical particles this is the symmetrized `f(phi) +- f(phi + pi)`.
pub fn amplitude(point: &ScatteringPoint, phi: f64) -> Result<AmplitudeSample, PartialWaveError> {
    amplitude_with(&HardDisk, point, phi)
}

/// Amplitude through the provider seam.
pub fn amplitude_with(
    provider: &dyn ChannelProvider,
    point: &ScatteringPoint,
    phi: f64,
) -> Result<AmplitudeSample, PartialWaveError> {
    if !phi.is_finite() {
        return Err(PartialWaveError::InvalidInput {
            reason: format!("phi must be finite, got {phi}"),
        });
    }
    let phi = wrap_angle(phi);
    let window = resolve_window(provider, point)?;
    let direct = bare_amplitude(&window, point.ka, phi);
    let f = match point.statistics {
        Statistics::Distinguishable => direct,
        Statistics::Boson => direct + bare_amplitude(&window, point.ka, wrap_angle(phi + PI)),
        Statistics::Fermion => direct - bare_amplitude(&window, point.ka, wrap_angle(phi + PI)),
    };
    Ok(AmplitudeSample { phi, f })
}

/// Differential cross section `|f|^2` (distinguishable) or
/// `|f(phi) +- f(phi+pi)|^2` (identical particles), units of a.
pub fn differential_cross_section(
    point: &ScatteringPoint,
    phi: f64,
) -> Result<f64, PartialWaveError> {
    differential_cross_section_with(&HardDisk, point, phi)
}

/// Differential cross section through the provider seam.
pub fn differential_cross_section_with(
    provider: &dyn ChannelProvider,
    point: &ScatteringPoint,
    phi: f64,
) -> Result<f64, PartialWaveError> {
    Ok(amplitude_with(provider, point, phi)?.f.norm_sqr())
}

/// Optical theorem: `sigma_t = (2 sqrt(2 pi) / sqrt(k)) Im[e^{-i pi/4} f(0)]`.
/// The explicit `e^{-i pi/4}` rotation makes this an exact identity for the
/// amplitude convention used here (per channel,
/// `Im[e^{-i pi/4} e^{i(delta-pi/4)} 2i sin(delta)] = 2 sin^2(delta)`).
/// Distinguishable statistics only.
pub fn optical_theorem_check(
    point: &ScatteringPoint,
) -> Result<OpticalTheoremCheck, PartialWaveError> {
    optical_theorem_check_with(&HardDisk, point)
}

/// Optical theorem through the provider seam.
pub fn optical_theorem_check_with(
    provider: &dyn ChannelProvider,
    point: &ScatteringPoint,
) -> Result<OpticalTheoremCheck, PartialWaveError> {
    if point.statistics != Statistics::Distinguishable {
        return Err(PartialWaveError::InvalidInput {
            reason: "optical theorem check requires distinguishable statistics".into(),
        });
    }
    let lhs = total_cross_section_with(provider, point)?.sigma_over_a;
    let forward = amplitude_with(provider, point, 0.0)?.f;
    let rotated = Complex64::from_polar(1.0, -FRAC_PI_4) * forward;
    let rhs = 2.0 * (2.0 * PI).sqrt() / point.ka.sqrt() * rotated.im;
    Ok(OpticalTheoremCheck {
        lhs,
        rhs,
        residual: (lhs - rhs).abs() / lhs,
    })
}

/// Closed-form low- and high-energy reference values (units of a).
pub fn asymptotic_references(ka: f64) -> Result<AsymptoticReferences, PartialWaveError> {
    check_ka(ka)?;
    let log_half = (0.5 * ka).ln();
    Ok(AsymptoticReferences {
        low_energy_sigma: PI * PI / (ka * log_half * log_half),
        low_energy_valid: ka < 0.5,
        low_energy_sigma_alt: 8.0 / (PI * ka * ka.ln().abs()),
        high_energy_sigma: 4.0,
    })
}
