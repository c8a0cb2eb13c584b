//! The capacity gap `f(β)`, the AWGGN capacity sandwich, conditional
//! capacity given a fading gain, and ergodic bounds under α-μ fading.
//!
//! All rates are for a real channel, `½ log(1 + SNR)` per channel use. The
//! lower bound is the AWGN capacity at the same noise variance (Gaussian
//! noise is the worst case); the upper bound adds `f(β)`.

use std::f64::consts::{LN_2, PI};

use crate::alpha_mu::AlphaMuFading;
use crate::error::{ensure_nonnegative, ensure_positive, Result};
use crate::gg_noise::GGNoise;
use crate::numerics::{integrate, ln_gamma, Domain, QuadratureSpec};
use crate::units::Units;

/// A `(lower, upper)` pair of rates in the given units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CapacityBounds {
    pub lower: f64,
    pub upper: f64,
    pub units: Units,
}

impl CapacityBounds {
    /// Builds `(lower, lower + gap)`.
    fn from_lower_and_gap(lower: f64, gap: f64, units: Units) -> Self {
        CapacityBounds {
            lower,
            upper: lower + gap,
            units,
        }
    }

    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }

    pub fn contains(&self, rate: f64, slack: f64) -> bool {
        rate >= self.lower - slack && rate <= self.upper + slack
    }
}

/// Transmit power and the noise law of a memoryless additive channel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelConfig {
    signal_power: f64,
    noise: GGNoise,
}

impl ChannelConfig {
    pub fn new(signal_power: f64, noise: GGNoise) -> Result<Self> {
        ensure_nonnegative("signal power", signal_power)?;
        let cfg = ChannelConfig {
            signal_power,
            noise,
        };
        if !cfg.snr().is_finite() {
            return crate::error::domain("signal-to-noise ratio is not finite");
        }
        Ok(cfg)
    }

    /// Unit-variance noise of shape `beta` and power equal to `snr`.
    pub fn from_snr(snr: f64, beta: f64) -> Result<Self> {
        Self::new(snr, GGNoise::with_variance(beta, 1.0)?)
    }

    pub fn signal_power(&self) -> f64 {
        self.signal_power
    }

    pub fn noise(&self) -> &GGNoise {
        &self.noise
    }

    /// `P / σ_N²`.
    pub fn snr(&self) -> f64 {
        self.signal_power / self.noise.variance()
    }
}

/// `f(β)` in nats.
pub fn gap_nats(beta: f64) -> Result<f64> {
    ensure_positive("beta", beta)?;
    let log_arg = 2.0 * beta.ln() + PI.ln() + (1.0 - 2.0 / beta) + ln_gamma(3.0 / beta)
        - LN_2
        - 3.0 * ln_gamma(1.0 / beta);
    // Nonnegative by the maximum-entropy property; clip rounding noise near β = 2.
    Ok((0.5 * log_arg).max(0.0))
}

/// Additive capacity gap of GG noise with shape `beta` over Gaussian noise
/// of equal variance.
pub fn gap(beta: f64, units: Units) -> Result<f64> {
    gap_nats(beta).map(|g| units.from_nats(g))
}

/// `½ log(1 + snr)`.
pub fn awgn_capacity(snr: f64, units: Units) -> Result<f64> {
    ensure_nonnegative("snr", snr)?;
    Ok(units.from_nats(0.5 * snr.ln_1p()))
}

pub fn awggn_bounds(config: &ChannelConfig, units: Units) -> Result<CapacityBounds> {
    let lower = awgn_capacity(config.snr(), units)?;
    Ok(CapacityBounds::from_lower_and_gap(
        lower,
        gap(config.noise.beta(), units)?,
        units,
    ))
}

/// Bounds on the capacity given the fading gain `h` (power scaled by `h²`).
pub fn conditional_bounds(config: &ChannelConfig, h: f64, units: Units) -> Result<CapacityBounds> {
    ensure_nonnegative("channel gain", h)?;
    let lower = awgn_capacity(config.snr() * h * h, units)?;
    Ok(CapacityBounds::from_lower_and_gap(
        lower,
        gap(config.noise.beta(), units)?,
        units,
    ))
}

/// `E_h{½ log(1 + snr·h²)}` under `fading`, by adaptive quadrature against
/// the α-μ density.
///
/// Pass a unit-power law ([`AlphaMuFading::unit_power`]) to make `snr_avg`
/// the average received SNR.
pub fn ergodic_awgn_capacity(
    snr_avg: f64,
    fading: &AlphaMuFading,
    spec: &QuadratureSpec,
    units: Units,
) -> Result<f64> {
    ensure_nonnegative("average snr", snr_avg)?;
    if snr_avg == 0.0 {
        return Ok(0.0);
    }
    // Integrate over t = h/ĥ so the half-line map sees an O(1) scale.
    let root = fading.h_root();
    let unit = AlphaMuFading::new(fading.alpha(), fading.mu(), 1.0)?;
    let gain = snr_avg * root * root;
    let nats = integrate(
        |t| {
            let p = unit.pdf_unchecked(t);
            if p == 0.0 {
                0.0
            } else {
                0.5 * (gain * t * t).ln_1p() * p
            }
        },
        Domain::UpperHalf(0.0),
        spec,
    )?;
    Ok(units.from_nats(nats))
}

/// Ergodic capacity bounds: the fading-averaged AWGN capacity, plus `f(β)`
/// on the upper side.
pub fn ergodic_bounds(
    snr_avg: f64,
    fading: &AlphaMuFading,
    beta: f64,
    spec: &QuadratureSpec,
    units: Units,
) -> Result<CapacityBounds> {
    let gap = gap(beta, units)?;
    let lower = ergodic_awgn_capacity(snr_avg, fading, spec, units)?;
    Ok(CapacityBounds::from_lower_and_gap(lower, gap, units))
}
