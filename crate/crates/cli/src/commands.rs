//! Subcommand implementations. Each one is a pure function of its
//! arguments and the global options, writing CSV to `out`.

use std::io::Write;

use rayon::prelude::*;

use awggn::capacity::{awggn_bounds, ergodic_bounds, gap};
use awggn::secrecy::{
    secrecy_positive_with, secrecy_rate_awggn, secrecy_threshold, secrecy_threshold_as_printed,
};
use awggn::units::{db_to_linear, linear_to_db};
use awggn::verify::suite::run_suite;
use awggn::{
    AlphaMuFading, ChannelConfig, GGNoise, PositivityRule, QuadratureSpec, SecrecyScenario,
    SimConfig, Units,
};

use crate::format::{sig9, Table};
use crate::grid::{parse_list, parse_range};
use crate::{CliError, Command, GlobalOpts, SampleLaw};

type CliResult<T> = Result<T, CliError>;

/// Builds the simulation config from the global flags.
pub fn sim_config(global: &GlobalOpts) -> CliResult<SimConfig> {
    let mut quadrature = QuadratureSpec::default();
    if let Some(rtol) = global.quad_rtol {
        quadrature = quadrature.with_relative_tolerance(rtol);
    }
    if let Some(n) = global.quad_max_subdivisions {
        quadrature = quadrature.with_max_subdivisions(n);
    }
    let config = SimConfig {
        seed: global.seed,
        samples: global.samples,
        chunks: global.chunks,
        quadrature,
        units: global.units,
    };
    config.validate()?;
    Ok(config)
}

/// Runs one subcommand. CSV goes to `out`, diagnostics to `diag`.
pub fn run(
    command: &Command,
    global: &GlobalOpts,
    out: &mut dyn Write,
    diag: &mut dyn Write,
) -> CliResult<()> {
    let config = sim_config(global)?;
    let table = match command {
        Command::Gap { betas } => cmd_gap(betas)?,
        Command::Capacity { beta, snr_db } => cmd_capacity(*beta, snr_db, config.units)?,
        Command::Ergodic {
            beta,
            alpha,
            mu,
            snr_db,
        } => cmd_ergodic(*beta, *alpha, *mu, snr_db, &config)?,
        Command::Secrecy {
            beta_sd,
            beta_se,
            snr_se_db,
            snr_sd_db,
            as_printed,
        } => {
            let rule = if *as_printed {
                PositivityRule::AsPrinted
            } else {
                PositivityRule::Derived
            };
            cmd_secrecy(
                *beta_sd,
                *beta_se,
                *snr_se_db,
                snr_sd_db,
                rule,
                config.units,
                diag,
            )?
        }
        Command::Verify => return cmd_verify(&config, out, diag),
        Command::Sample { law } => cmd_sample(law, &config)?,
    };
    table.write_to(out)?;
    out.flush()?;
    Ok(())
}

fn usage<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(CliError::Usage(msg.into()))
}

fn sweep(spec: &str, flag: &str) -> CliResult<Vec<f64>> {
    parse_range(spec).map_err(|e| CliError::Usage(format!("--{flag}: {e}")))
}

/// Evaluates `row` on every grid point in parallel, keeping grid order.
fn par_rows<F>(points: &[f64], row: F) -> CliResult<Vec<Vec<f64>>>
where
    F: Fn(f64) -> awggn::Result<Vec<f64>> + Sync,
{
    points
        .par_iter()
        .map(|&x| row(x).map_err(CliError::from))
        .collect()
}

pub fn cmd_gap(betas: &str) -> CliResult<Table> {
    let betas = parse_list(betas).map_err(|e| CliError::Usage(format!("--betas: {e}")))?;
    if let Some(bad) = betas.iter().find(|&&b| b <= 0.0) {
        return usage(format!("--betas: shape must be positive, got {bad}"));
    }
    let mut table = Table::new(&["beta", "gap_bits", "gap_nats"]);
    for beta in betas {
        table.push(vec![
            beta.into(),
            gap(beta, Units::Bits)?.into(),
            gap(beta, Units::Nats)?.into(),
        ]);
    }
    Ok(table)
}

pub fn cmd_capacity(beta: f64, snr_db: &str, units: Units) -> CliResult<Table> {
    let grid = sweep(snr_db, "snr-db")?;
    GGNoise::with_variance(beta, 1.0)?;
    let rows = par_rows(&grid, |db| {
        let snr = db_to_linear(db);
        let bounds = awggn_bounds(&ChannelConfig::from_snr(snr, beta)?, units)?;
        Ok(vec![db, bounds.lower, bounds.upper])
    })?;
    Ok(numeric_table(&["snr_db", "lower", "upper"], rows))
}

pub fn cmd_ergodic(
    beta: f64,
    alpha: f64,
    mu: f64,
    snr_db: &str,
    config: &SimConfig,
) -> CliResult<Table> {
    let grid = sweep(snr_db, "snr-db")?;
    let fading = AlphaMuFading::unit_power(alpha, mu)?;
    gap(beta, config.units)?;
    let rows = par_rows(&grid, |db| {
        let b = ergodic_bounds(
            db_to_linear(db),
            &fading,
            beta,
            &config.quadrature,
            config.units,
        )?;
        Ok(vec![db, b.lower, b.upper])
    })?;
    Ok(numeric_table(&["snr_db", "lower", "upper"], rows))
}

pub fn cmd_secrecy(
    beta_sd: f64,
    beta_se: f64,
    snr_se_db: f64,
    snr_sd_db: &str,
    rule: PositivityRule,
    units: Units,
    diag: &mut dyn Write,
) -> CliResult<Table> {
    if !snr_se_db.is_finite() {
        return usage("--snr-se-db must be finite");
    }
    let grid = sweep(snr_sd_db, "snr-sd-db")?;
    let snr_se = db_to_linear(snr_se_db);
    let threshold = secrecy_threshold(beta_sd, beta_se, snr_se)?;
    let printed = secrecy_threshold_as_printed(beta_sd, beta_se, snr_se)?;
    writeln!(
        diag,
        "threshold snr_sd = {} ({} dB); as-printed rule: {} ({} dB)",
        sig9(threshold),
        sig9(linear_to_db(threshold)),
        sig9(printed),
        sig9(linear_to_db(printed)),
    )?;

    let rows: Vec<(f64, f64, bool)> = grid
        .par_iter()
        .map(|&db| {
            let scenario = SecrecyScenario::new(db_to_linear(db), snr_se, beta_sd, beta_se)?;
            let rate = secrecy_rate_awggn(&scenario, units)?;
            let positive = secrecy_positive_with(&scenario, rule)?;
            Ok((db, rate, positive))
        })
        .collect::<awggn::Result<_>>()?;

    let mut table = Table::new(&["snr_sd_db", "secrecy_rate", "positive"]);
    for (db, rate, positive) in rows {
        table.push(vec![db.into(), rate.into(), positive.into()]);
    }
    Ok(table)
}

pub fn cmd_verify(config: &SimConfig, out: &mut dyn Write, diag: &mut dyn Write) -> CliResult<()> {
    let checks = run_suite(config)?;
    let mut table = Table::new(&[
        "check",
        "measured",
        "lower",
        "upper",
        "std_error",
        "verdict",
    ]);
    for c in &checks {
        table.push(vec![
            c.name.clone().into(),
            c.measured.into(),
            c.lower.into(),
            c.upper.into(),
            c.std_error.map_or_else(String::new, sig9).into(),
            if c.passed { "pass" } else { "FAIL" }.to_string().into(),
        ]);
    }
    table.write_to(out)?;
    out.flush()?;
    let failed = checks.iter().filter(|c| !c.passed).count();
    writeln!(
        diag,
        "{} of {} checks passed",
        checks.len() - failed,
        checks.len()
    )?;
    if failed > 0 {
        return Err(CliError::Verification(failed));
    }
    Ok(())
}

pub fn cmd_sample(law: &SampleLaw, config: &SimConfig) -> CliResult<Table> {
    let values = match *law {
        SampleLaw::Gg {
            beta,
            scale,
            variance,
            mean,
        } => {
            let base = match scale {
                Some(s) => GGNoise::new(beta, s)?,
                None => GGNoise::with_variance(beta, variance)?,
            };
            GGNoise::with_mean(beta, base.scale(), mean)?.sample_par(
                config.seed,
                config.samples,
                config.chunks,
            )
        }
        SampleLaw::AlphaMu { alpha, mu, h_root } => {
            let fading = match h_root {
                Some(r) => AlphaMuFading::new(alpha, mu, r)?,
                None => AlphaMuFading::unit_power(alpha, mu)?,
            };
            fading.sample_par(config.seed, config.samples, config.chunks)
        }
    };
    let mut table = Table::new(&["value"]);
    for v in values {
        table.push(vec![v.into()]);
    }
    Ok(table)
}

fn numeric_table(header: &[&str], rows: Vec<Vec<f64>>) -> Table {
    let mut table = Table::new(header);
    for row in rows {
        table.push(row.into_iter().map(Into::into).collect());
    }
    table
}
