//! Numerical checks that sandwich the analytic capacity bounds.
//!
//! The Gaussian-input mutual information `h(Y) − h(N)` is computed by
//! convolving the noise density with a Gaussian input density on a graded
//! grid and integrating `−f ln f`. It must fall between the AWGN capacity and
//! the AWGN capacity plus `f(β)`.

mod grid;
pub mod suite;

use std::f64::consts::{FRAC_1_SQRT_2, PI};

pub use grid::{grid_entropy, DensityGrid, DEFAULT_LOG_STEP};

use crate::capacity::{gap_nats, ChannelConfig};
use crate::error::{domain, ensure_positive, Result};
use crate::gg_noise::GGNoise;
use crate::numerics::{integrate, Domain, QuadratureSpec};
use crate::sim::SimConfig;
use crate::units::Units;

/// Target probability mass left outside a density grid.
pub const TRUNCATION_TARGET: f64 = 1e-10;

/// Gaussian input densities are cut at this many standard deviations inside
/// the convolution integral.
const GAUSS_WINDOW: f64 = 10.0;

// Inner radius of graded grids relative to the narrowest scale in play.
const INNER_FRACTION: f64 = 1e-10;

/// Tolerances for the per-point convolution integrals.
pub fn convolution_spec() -> QuadratureSpec {
    QuadratureSpec {
        relative_tolerance: 1e-12,
        absolute_tolerance: 0.0,
        max_subdivisions: 2000,
    }
}

/// A Monte-Carlo estimate with its standard error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McEstimate {
    pub estimate: f64,
    pub std_error: f64,
}

/// Resubstitution estimate of the differential entropy, in nats:
/// `−(1/n) Σ ln f(Nᵢ)` over draws from the law itself.
pub fn mc_entropy(law: &GGNoise, config: &SimConfig) -> Result<McEstimate> {
    config.validate()?;
    if config.samples < 1000 {
        return domain(format!(
            "entropy estimation needs at least 1000 samples, got {}",
            config.samples
        ));
    }
    let draws = law.sample_par(config.seed, config.samples, config.chunks);
    let n = draws.len() as f64;
    let surprisal: Vec<f64> = draws.iter().map(|&x| -law.log_pdf_unchecked(x)).collect();
    let mean = surprisal.iter().sum::<f64>() / n;
    let var = surprisal.iter().map(|s| (s - mean).powi(2)).sum::<f64>() / (n - 1.0);
    Ok(McEstimate {
        estimate: mean,
        std_error: (var / n).sqrt(),
    })
}

/// The noise density itself on a graded grid.
pub fn noise_density(law: &GGNoise) -> Result<DensityGrid> {
    let outer = law.tail_radius(TRUNCATION_TARGET)?;
    let truncation = law.tail_mass(outer)?;
    let inner = INNER_FRACTION * law.scale().min(law.std_dev());
    DensityGrid::symmetric_graded(
        law.mean(),
        inner,
        outer,
        DEFAULT_LOG_STEP,
        truncation,
        |x| law.pdf_unchecked(x),
    )
}

/// Density of `Y = X + N` for Gaussian `X` of power `P`, on a graded grid.
pub fn output_density(config: &ChannelConfig) -> Result<DensityGrid> {
    output_density_with(config, &convolution_spec())
}

pub fn output_density_with(config: &ChannelConfig, spec: &QuadratureSpec) -> Result<DensityGrid> {
    ensure_positive("signal power", config.signal_power())?;
    let noise = *config.noise();
    let sigma_x = config.signal_power().sqrt();
    let center = noise.mean();

    let (outer, truncation) = output_truncation(&noise, sigma_x)?;
    let inner = INNER_FRACTION * sigma_x.min(noise.scale()).min(noise.std_dev());

    // Evaluate all points, collecting the first failure.
    let failure = std::sync::Mutex::new(None);
    let grid =
        DensityGrid::symmetric_graded(center, inner, outer, DEFAULT_LOG_STEP, truncation, |y| {
            match convolve_at(&noise, sigma_x, y, spec) {
                Ok(v) => v,
                Err(e) => {
                    failure.lock().unwrap().get_or_insert(e);
                    0.0
                }
            }
        })?;
    if let Some(e) = failure.into_inner().unwrap() {
        return Err(e);
    }
    Ok(grid)
}

#[inline]
fn gaussian_pdf(x: f64, sigma: f64) -> f64 {
    (-0.5 * (x / sigma).powi(2)).exp() / (sigma * (2.0 * PI).sqrt())
}

/// `∫ f_N(n) φ_σ(y − n) dn` over the window where the Gaussian factor is
/// non-negligible, split at the noise mean.
fn convolve_at(noise: &GGNoise, sigma_x: f64, y: f64, spec: &QuadratureSpec) -> Result<f64> {
    let lo = y - GAUSS_WINDOW * sigma_x;
    let hi = y + GAUSS_WINDOW * sigma_x;
    let integrand = |n: f64| noise.pdf_unchecked(n) * gaussian_pdf(y - n, sigma_x);
    let c = noise.mean();
    if lo < c && c < hi {
        Ok(integrate(integrand, Domain::Finite(lo, c), spec)?
            + integrate(integrand, Domain::Finite(c, hi), spec)?)
    } else {
        integrate(integrand, Domain::Finite(lo, hi), spec)
    }
}

/// `P(Y − c > r)` for `Y = X + N`, `c` the noise mean.
fn output_upper_tail(noise: &GGNoise, sigma_x: f64, r: f64) -> Result<f64> {
    let spec = QuadratureSpec {
        relative_tolerance: 1e-8,
        absolute_tolerance: 0.0,
        max_subdivisions: 2000,
    };
    let c = noise.mean();
    // P(X > r − m) for noise offset m.
    let integrand =
        |m: f64| noise.pdf_unchecked(c + m) * 0.5 * libm::erfc((r - m) / sigma_x * FRAC_1_SQRT_2);
    let left = integrate(integrand, Domain::LowerHalf(0.0), &spec)?;
    let mid = integrate(integrand, Domain::Finite(0.0, r), &spec)?;
    let right = integrate(integrand, Domain::UpperHalf(r), &spec)?;
    Ok(left + mid + right)
}

/// Grid radius whose two-sided output tail mass lies in
/// `[TRUNCATION_TARGET/2, TRUNCATION_TARGET]`, and that exact mass.
fn output_truncation(noise: &GGNoise, sigma_x: f64) -> Result<(f64, f64)> {
    let target = TRUNCATION_TARGET;
    let gauss_radius = |mass: f64| -> Result<f64> {
        // P(|X| > r) = Q(1/2, r²/(2σ²))
        let g = crate::numerics::gamma_q_inverse(0.5, mass)?;
        Ok(sigma_x * (2.0 * g).sqrt())
    };
    // Union bound from above; the same-sign argument gives
    // P(|Y| > r) ≥ ½ max(P(|N| > r), P(|X| > r)) from below.
    let mut hi = noise.tail_radius(target / 2.0)? + gauss_radius(target / 2.0)?;
    let mut lo = noise
        .tail_radius(2.0 * target)?
        .max(gauss_radius(2.0 * target)?);
    let tail = |r: f64| -> Result<f64> { Ok(2.0 * output_upper_tail(noise, sigma_x, r)?) };

    let mut t_hi = tail(hi)?;
    for _ in 0..100 {
        if t_hi >= 0.5 * target {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let t_mid = tail(mid)?;
        if t_mid > target {
            lo = mid;
        } else {
            hi = mid;
            t_hi = t_mid;
        }
    }
    Ok((hi, t_hi))
}

/// `h(Y) − h(N)` with Gaussian input of power `P`: an achievable rate that
/// must lie inside the capacity sandwich.
pub fn gaussian_input_mi(config: &ChannelConfig, units: Units) -> Result<f64> {
    let grid = output_density(config)?;
    let nats = grid_entropy(&grid) - config.noise().entropy_nats();
    Ok(units.from_nats(nats))
}

/// Factor by which the number of packable noise spheres grows for
/// `dimensions`-long codewords under GG noise of shape `beta`, relative to
/// Gaussian noise of the same variance: `2^{K f(β)}` with `f` in bits.
pub fn sphere_packing_ratio(beta: f64, dimensions: u32) -> Result<f64> {
    if dimensions == 0 {
        return domain("dimension must be a positive integer");
    }
    Ok((dimensions as f64 * gap_nats(beta)?).exp())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::capacity::{awggn_bounds, awgn_capacity, gap};
    use std::f64::consts::E;

    #[test]
    fn mc_entropy_examples() {
        let cfg = SimConfig::default();
        for (law, exact) in [
            (GGNoise::new(2.0, 2f64.sqrt()).unwrap(), 1.418_938_53),
            (GGNoise::new(1.0, 1.0).unwrap(), 1.693_147_18),
            (GGNoise::new(0.5, 1.0).unwrap(), 2.0 + 4f64.ln()),
        ] {
            let est = mc_entropy(&law, &cfg).unwrap();
            assert!(
                (est.estimate - exact).abs() < 4.0 * est.std_error,
                "{law:?}: {est:?}"
            );
            assert!((law.entropy_nats() - exact).abs() < 1e-8);
        }
    }

    #[test]
    fn mc_entropy_needs_samples() {
        let cfg = SimConfig {
            samples: 999,
            ..SimConfig::default()
        };
        assert!(mc_entropy(&GGNoise::new(1.0, 1.0).unwrap(), &cfg).is_err());
    }

    #[test]
    fn noise_grid_entropy_matches_closed_form() {
        for beta in [0.5, 1.0, 2.0, 3.0] {
            let law = GGNoise::with_variance(beta, 1.0).unwrap();
            let grid = noise_density(&law).unwrap();
            // Truncation alone costs about t·|ln f(outer)| ≈ 3e-9 nats.
            assert!(
                (grid_entropy(&grid) - law.entropy_nats()).abs() < 1e-8,
                "beta={beta}"
            );
            let t = grid.truncation_mass();
            assert!(t <= TRUNCATION_TARGET && t > 0.0);
            let m = grid.mass();
            assert!(
                m <= 1.0 && m >= 1.0 - 2.0 * t,
                "beta={beta}: mass {m}, t {t}"
            );
        }
        let laplace = GGNoise::new(1.0, 1.0).unwrap();
        let h = grid_entropy(&noise_density(&laplace).unwrap());
        assert!((h - (1.0 + 2f64.ln())).abs() < 1e-6);
    }

    #[test]
    fn gaussian_noise_output_is_gaussian() {
        let cfg = ChannelConfig::new(2.5, GGNoise::with_variance(2.0, 1.0).unwrap()).unwrap();
        let grid = output_density(&cfg).unwrap();
        for (&y, &f) in grid.points().iter().zip(grid.values()) {
            assert!((f - gaussian_pdf(y, 3.5f64.sqrt())).abs() < 1e-8, "y={y}");
        }
        let h = grid_entropy(&grid);
        assert!((h - 0.5 * (2.0 * PI * E * 3.5).ln()).abs() < 1e-8);
    }

    #[test]
    fn vanishing_input_leaves_noise_density() {
        for beta in [1.0, 2.0, 3.0] {
            let noise = GGNoise::with_variance(beta, 1.0).unwrap();
            let cfg = ChannelConfig::new(1e-12, noise).unwrap();
            let grid = output_density(&cfg).unwrap();
            for (&y, &f) in grid.points().iter().zip(grid.values()) {
                assert!(
                    (f - noise.pdf(y).unwrap()).abs() < 1e-6,
                    "beta={beta} y={y}"
                );
            }
        }
    }

    #[test]
    fn output_mass_is_conserved() {
        let cfg = ChannelConfig::from_snr(1.0, 1.0).unwrap();
        let grid = output_density(&cfg).unwrap();
        let m = grid.mass();
        assert!((1.0 - 1e-9..=1.0).contains(&m), "{m}");
        let t = grid.truncation_mass();
        assert!(m >= 1.0 - 2.0 * t, "mass {m} truncation {t}");
    }

    #[test]
    fn gaussian_input_mi_examples() {
        for snr in [0.3, 4.0] {
            let cfg = ChannelConfig::from_snr(snr, 2.0).unwrap();
            let mi = gaussian_input_mi(&cfg, Units::Bits).unwrap();
            assert!((mi - awgn_capacity(snr, Units::Bits).unwrap()).abs() < 1e-5);
        }
        let cfg = ChannelConfig::from_snr(1.0, 1.0).unwrap();
        let mi = gaussian_input_mi(&cfg, Units::Bits).unwrap();
        assert!((0.5..=0.604_400_55).contains(&mi), "{mi}");
        assert!(awggn_bounds(&cfg, Units::Bits).unwrap().contains(mi, 0.0));

        let tiny = ChannelConfig::from_snr(1e-4, 2.0).unwrap();
        let mi = gaussian_input_mi(&tiny, Units::Bits).unwrap();
        assert!(mi.abs() < 1e-4, "{mi}");
        // For other shapes the small-power slope is the Fisher information:
        // I ≈ P·J/2 nats, with J = 2/σ² for Laplace noise.
        let laplace = ChannelConfig::from_snr(1e-4, 1.0).unwrap();
        let mi = gaussian_input_mi(&laplace, Units::Nats).unwrap();
        assert!((mi / 1e-4 - 1.0).abs() < 0.02, "{mi}");
        assert!(
            gaussian_input_mi(&ChannelConfig::from_snr(0.0, 1.0).unwrap(), Units::Bits).is_err()
        );
    }

    #[test]
    fn sphere_packing_examples() {
        assert!((sphere_packing_ratio(2.0, 7).unwrap() - 1.0).abs() < 1e-12);
        let one = sphere_packing_ratio(1.0, 1).unwrap();
        assert!((one - 2f64.powf(0.5 * (PI / E).log2())).abs() < 1e-12);
        assert!((one - 1.075_05).abs() < 1e-5);
        let ten = sphere_packing_ratio(1.0, 10).unwrap();
        assert!((ten / one.powi(10) - 1.0).abs() < 1e-12);
        let bits = gap(1.0, Units::Bits).unwrap();
        assert!((ten - 2f64.powf(10.0 * bits)).abs() < 1e-12);
        assert!(sphere_packing_ratio(1.0, 0).is_err());
        assert!(sphere_packing_ratio(-1.0, 1).is_err());
    }
}
