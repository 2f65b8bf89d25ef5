//! Temporary kernel-only build for early validation.
pub mod bessel;
mod kahan;
pub use bessel::{bessel_j, bessel_n, bessel_pair, BesselError, BesselOrder, BesselPair, Regime};
