//! Secrecy rates over a wiretap link pair whose receivers see generalized
//! Gaussian noise of (possibly) different shapes.
//!
//! The rate is the clamped difference of the capacity upper bounds of the
//! legitimate and eavesdropper links. For non-Gaussian noise this is a
//! bound-difference figure of merit, not a proven secrecy capacity.

use crate::capacity::gap_nats;
use crate::error::{ensure_nonnegative, ensure_positive, Result};
use crate::numerics::ln_gamma;
use crate::units::Units;

/// Link SNRs (linear) and noise shapes at the destination and at the
/// eavesdropper.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SecrecyScenario {
    pub snr_sd: f64,
    pub snr_se: f64,
    pub beta_sd: f64,
    pub beta_se: f64,
}

impl SecrecyScenario {
    pub fn new(snr_sd: f64, snr_se: f64, beta_sd: f64, beta_se: f64) -> Result<Self> {
        let s = SecrecyScenario {
            snr_sd,
            snr_se,
            beta_sd,
            beta_se,
        };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        ensure_nonnegative("snr_sd", self.snr_sd)?;
        ensure_nonnegative("snr_se", self.snr_se)?;
        ensure_positive("beta_sd", self.beta_sd)?;
        ensure_positive("beta_se", self.beta_se)
    }
}

/// Which form of the positivity condition to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PositivityRule {
    /// `e^{2f(β_SD)}(1+SNR_SD) > e^{2f(β_SE)}(1+SNR_SE)`, exactly the sign of
    /// the AWGGN secrecy rate.
    #[default]
    Derived,
    /// The same comparison with the per-link factor
    /// `β² e^{1−1/β} Γ(3/β) / Γ(1/β)³`, for comparison with a published form
    /// of the condition that carries `e^{1−1/β}` instead of `e^{1−2/β}`.
    AsPrinted,
}

/// `{½ log(1+SNR_SD) − ½ log(1+SNR_SE)}⁺`.
pub fn secrecy_rate_awgn(snr_sd: f64, snr_se: f64, units: Units) -> Result<f64> {
    ensure_nonnegative("snr_sd", snr_sd)?;
    ensure_nonnegative("snr_se", snr_se)?;
    let diff = 0.5 * snr_sd.ln_1p() - 0.5 * snr_se.ln_1p();
    Ok(units.from_nats(diff.max(0.0)))
}

/// Unclamped rate difference in nats. Grouped so that the gap term is
/// exactly zero when the shapes coincide.
fn rate_margin_nats(s: &SecrecyScenario) -> Result<f64> {
    s.validate()?;
    let links = 0.5 * s.snr_sd.ln_1p() - 0.5 * s.snr_se.ln_1p();
    let gaps = gap_nats(s.beta_sd)? - gap_nats(s.beta_se)?;
    Ok(links + gaps)
}

/// `{½ log(1+SNR_SD) + f(β_SD) − ½ log(1+SNR_SE) − f(β_SE)}⁺`.
pub fn secrecy_rate_awggn(scenario: &SecrecyScenario, units: Units) -> Result<f64> {
    Ok(units.from_nats(rate_margin_nats(scenario)?.max(0.0)))
}

/// Whether the AWGGN secrecy rate is strictly positive.
pub fn secrecy_positive(scenario: &SecrecyScenario) -> Result<bool> {
    secrecy_positive_with(scenario, PositivityRule::Derived)
}

pub fn secrecy_positive_with(scenario: &SecrecyScenario, rule: PositivityRule) -> Result<bool> {
    match rule {
        PositivityRule::Derived => Ok(rate_margin_nats(scenario)? > 0.0),
        PositivityRule::AsPrinted => {
            scenario.validate()?;
            let lhs = log_link_factor(scenario.beta_sd, rule)? + scenario.snr_sd.ln_1p();
            let rhs = log_link_factor(scenario.beta_se, rule)? + scenario.snr_se.ln_1p();
            Ok(lhs > rhs)
        }
    }
}

/// Natural log of the per-link factor `β² e^{1−c/β} Γ(3/β) / Γ(1/β)³` that
/// multiplies `(1 + SNR)` in the positivity condition; `c = 2` for the
/// derived rule and `c = 1` for the printed one.
pub fn log_link_factor(beta: f64, rule: PositivityRule) -> Result<f64> {
    ensure_positive("beta", beta)?;
    let c = match rule {
        PositivityRule::Derived => 2.0,
        PositivityRule::AsPrinted => 1.0,
    };
    Ok(2.0 * beta.ln() + 1.0 - c / beta + ln_gamma(3.0 / beta) - 3.0 * ln_gamma(1.0 / beta))
}

/// The legitimate-link SNR (linear) at which the AWGGN secrecy rate leaves
/// zero: `2^{2(f(β_SE) − f(β_SD))}(1 + SNR_SE) − 1`, clamped at zero.
///
/// When the unclamped value is negative the rate is positive for every
/// `SNR_SD ≥ 0`.
pub fn secrecy_threshold(beta_sd: f64, beta_se: f64, snr_se: f64) -> Result<f64> {
    ensure_nonnegative("snr_se", snr_se)?;
    let exponent = 2.0 * (gap_nats(beta_se)? - gap_nats(beta_sd)?);
    // snr_se + (1 + snr_se)(e^x − 1) keeps the equal-shape case exact.
    let threshold = snr_se + (1.0 + snr_se) * exponent.exp_m1();
    Ok(threshold.max(0.0))
}

/// The same threshold under the printed positivity condition.
pub fn secrecy_threshold_as_printed(beta_sd: f64, beta_se: f64, snr_se: f64) -> Result<f64> {
    ensure_nonnegative("snr_se", snr_se)?;
    let exponent = log_link_factor(beta_se, PositivityRule::AsPrinted)?
        - log_link_factor(beta_sd, PositivityRule::AsPrinted)?;
    Ok((snr_se + (1.0 + snr_se) * exponent.exp_m1()).max(0.0))
}

/// `2^{2f(β)}` written as `e^{2f(β)}`; the multiplier applied to `1 + SNR`.
pub fn snr_gain_factor(beta: f64) -> Result<f64> {
    Ok((2.0 * gap_nats(beta)?).exp())
}
