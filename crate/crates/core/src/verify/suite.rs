//! The full invariant suite behind `awggn verify`.

use rayon::prelude::*;

use super::{grid_entropy, mc_entropy, noise_density, output_density, sphere_packing_ratio};
use crate::capacity::{awggn_bounds, gap_nats, ChannelConfig};
use crate::error::Result;
use crate::gg_noise::GGNoise;
use crate::sim::SimConfig;
use crate::units::Units;

/// Shapes exercised by the entropy and sandwich checks.
pub const SUITE_BETAS: [f64; 6] = [0.5, 0.8, 1.0, 1.5, 2.0, 3.0];
/// Linear SNRs of the sandwich grid.
pub const SUITE_SNRS: [f64; 4] = [0.1, 1.0, 10.0, 100.0];

/// Slack on either side of the capacity sandwich, in bits.
pub const SANDWICH_SLACK_BITS: f64 = 1e-4;
/// Allowed distance between Gaussian-input MI and AWGN capacity at β = 2, bits.
pub const COLLAPSE_TOL_BITS: f64 = 1e-5;
/// Allowed error of the grid entropy identity, nats.
pub const IDENTITY_TOL_NATS: f64 = 1e-6;
/// Monte-Carlo acceptance band in standard errors.
pub const MC_SIGMAS: f64 = 4.0;

/// One line of the verification report: a measured value and the interval
/// it has to fall in.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub measured: f64,
    pub lower: f64,
    pub upper: f64,
    pub std_error: Option<f64>,
    pub passed: bool,
}

impl Check {
    fn within(name: String, measured: f64, lower: f64, upper: f64, std_error: Option<f64>) -> Self {
        let passed = measured >= lower && measured <= upper;
        Check {
            name,
            measured,
            lower,
            upper,
            std_error,
            passed,
        }
    }

    fn near(name: String, measured: f64, expected: f64, tol: f64) -> Self {
        Self::within(name, measured, expected - tol, expected + tol, None)
    }
}

/// Monte-Carlo resubstitution entropy against the closed form, per shape.
pub fn entropy_checks(config: &SimConfig) -> Result<Vec<Check>> {
    SUITE_BETAS
        .iter()
        .map(|&beta| {
            let law = GGNoise::with_variance(beta, 1.0)?;
            let est = mc_entropy(&law, config)?;
            let exact = law.entropy_nats();
            let band = MC_SIGMAS * est.std_error;
            Ok(Check::within(
                format!("mc_entropy beta={beta} [nats]"),
                est.estimate,
                exact - band,
                exact + band,
                Some(est.std_error),
            ))
        })
        .collect()
}

/// `h(Gaussian) − h(GG)` at unit variance on grids, against `f(β)`.
pub fn identity_checks() -> Result<Vec<Check>> {
    let gaussian = grid_entropy(&noise_density(&GGNoise::with_variance(2.0, 1.0)?)?);
    SUITE_BETAS
        .iter()
        .map(|&beta| {
            let h = grid_entropy(&noise_density(&GGNoise::with_variance(beta, 1.0)?)?);
            Ok(Check::near(
                format!("entropy_gap beta={beta} [nats]"),
                gaussian - h,
                gap_nats(beta)?,
                IDENTITY_TOL_NATS,
            ))
        })
        .collect()
}

/// Gaussian-input MI inside the sandwich, collapse at β = 2, and output
/// mass conservation, for every `(β, snr)` cell.
pub fn sandwich_checks() -> Result<Vec<Check>> {
    let cells: Vec<(f64, f64)> = SUITE_BETAS
        .iter()
        .flat_map(|&b| SUITE_SNRS.iter().map(move |&s| (b, s)))
        .collect();
    let per_cell: Vec<Result<Vec<Check>>> = cells
        .par_iter()
        .map(|&(beta, snr)| {
            let cfg = ChannelConfig::from_snr(snr, beta)?;
            let bounds = awggn_bounds(&cfg, Units::Bits)?;
            let grid = output_density(&cfg)?;
            let mi = Units::Bits.from_nats(grid_entropy(&grid) - cfg.noise().entropy_nats());
            let mut out = vec![Check::within(
                format!("sandwich beta={beta} snr={snr} [bits]"),
                mi,
                bounds.lower - SANDWICH_SLACK_BITS,
                bounds.upper + SANDWICH_SLACK_BITS,
                None,
            )];
            if beta == 2.0 {
                out.push(Check::near(
                    format!("awgn_collapse snr={snr} [bits]"),
                    mi,
                    bounds.lower,
                    COLLAPSE_TOL_BITS,
                ));
            }
            let t = grid.truncation_mass();
            out.push(Check::within(
                format!("output_mass beta={beta} snr={snr}"),
                grid.mass(),
                1.0 - 2.0 * t,
                1.0,
                None,
            ));
            Ok(out)
        })
        .collect();
    let mut checks = Vec::new();
    for cell in per_cell {
        checks.extend(cell?);
    }
    Ok(checks)
}

/// Packing ratio against the entropy-difference form `e^{K(h_G − h_GG)}`.
pub fn sphere_checks() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let gaussian = GGNoise::with_variance(2.0, 1.0)?.entropy_nats();
    for &beta in &SUITE_BETAS {
        let h = GGNoise::with_variance(beta, 1.0)?.entropy_nats();
        for k in [1u32, 10] {
            let expected = (k as f64 * (gaussian - h)).exp();
            checks.push(Check::near(
                format!("sphere_packing beta={beta} K={k}"),
                sphere_packing_ratio(beta, k)?,
                expected,
                1e-9 * expected,
            ));
        }
    }
    Ok(checks)
}

/// Runs every check; numerical failures abort with an error, check failures
/// are reported in the returned rows.
pub fn run_suite(config: &SimConfig) -> Result<Vec<Check>> {
    config.validate()?;
    let mut checks = entropy_checks(config)?;
    checks.extend(identity_checks()?);
    checks.extend(sandwich_checks()?);
    checks.extend(sphere_checks()?);
    Ok(checks)
}
