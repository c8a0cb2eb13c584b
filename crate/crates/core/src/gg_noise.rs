//! Generalized Gaussian noise: density, variance, differential entropy and
//! exact sampling.
//!
//! The density is
//!
//! ```text
//! f(n) = β / (2 s Γ(1/β)) · exp(−(|n − m| / s)^β)
//! ```
//!
//! with shape `β`, scale `s` and location `m`. `β = 2` is a Gaussian with
//! variance `s²/2`, `β = 1` a Laplacian. Smaller shapes give a sharper peak
//! and heavier tails.

use rand::distr::Distribution;
use rand::Rng;
use rand_distr::Gamma;

use crate::error::{domain, ensure_positive, Result};
use crate::numerics::{gamma_p, gamma_q, gamma_q_inverse, ln_gamma};
use crate::sim::sample_chunked;
use crate::units::Units;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GGNoise {
    beta: f64,
    scale: f64,
    mean: f64,
    // ln(β / (2 s Γ(1/β)))
    log_norm: f64,
    gamma: Gamma<f64>,
}

impl GGNoise {
    /// Zero-mean law with the given shape and scale.
    pub fn new(beta: f64, scale: f64) -> Result<Self> {
        Self::with_mean(beta, scale, 0.0)
    }

    pub fn with_mean(beta: f64, scale: f64, mean: f64) -> Result<Self> {
        ensure_positive("beta", beta)?;
        ensure_positive("scale", scale)?;
        if !mean.is_finite() {
            return domain(format!("mean must be finite, got {mean}"));
        }
        let log_norm = beta.ln() - std::f64::consts::LN_2 - scale.ln() - ln_gamma(1.0 / beta);
        let gamma = Gamma::new(1.0 / beta, 1.0)
            .map_err(|e| crate::Error::Domain(format!("gamma sampler: {e}")))?;
        if !log_norm.is_finite() {
            return domain(format!("shape {beta} is outside the representable range"));
        }
        Ok(GGNoise {
            beta,
            scale,
            mean,
            log_norm,
            gamma,
        })
    }

    /// Zero-mean law of shape `beta` whose variance equals `target_variance`.
    pub fn with_variance(beta: f64, target_variance: f64) -> Result<Self> {
        ensure_positive("beta", beta)?;
        ensure_positive("target_variance", target_variance)?;
        let log_scale = 0.5 * (target_variance.ln() + ln_gamma(1.0 / beta) - ln_gamma(3.0 / beta));
        Self::new(beta, log_scale.exp())
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    pub fn mean(&self) -> f64 {
        self.mean
    }

    pub fn log_pdf(&self, n: f64) -> Result<f64> {
        if !n.is_finite() {
            return domain(format!("pdf argument must be finite, got {n}"));
        }
        Ok(self.log_pdf_unchecked(n))
    }

    pub fn pdf(&self, n: f64) -> Result<f64> {
        self.log_pdf(n).map(f64::exp)
    }

    #[inline]
    pub(crate) fn log_pdf_unchecked(&self, n: f64) -> f64 {
        self.log_norm - ((n - self.mean).abs() / self.scale).powf(self.beta)
    }

    #[inline]
    pub(crate) fn pdf_unchecked(&self, n: f64) -> f64 {
        self.log_pdf_unchecked(n).exp()
    }

    /// `s² Γ(3/β) / Γ(1/β)`.
    pub fn variance(&self) -> f64 {
        (2.0 * self.scale.ln() + ln_gamma(3.0 / self.beta) - ln_gamma(1.0 / self.beta)).exp()
    }

    pub fn std_dev(&self) -> f64 {
        self.variance().sqrt()
    }

    /// Differential entropy in nats, `1/β + ln(2 s Γ(1/β) / β)`.
    pub fn entropy_nats(&self) -> f64 {
        1.0 / self.beta - self.log_norm
    }

    pub fn entropy(&self, units: Units) -> f64 {
        units.from_nats(self.entropy_nats())
    }

    pub fn cdf(&self, x: f64) -> Result<f64> {
        let z = (x - self.mean) / self.scale;
        let p = gamma_p(1.0 / self.beta, z.abs().powf(self.beta))?;
        Ok(if z >= 0.0 {
            0.5 + 0.5 * p
        } else {
            0.5 - 0.5 * p
        })
    }

    /// Probability that `|N − m|` exceeds `radius`.
    pub fn tail_mass(&self, radius: f64) -> Result<f64> {
        if radius.is_nan() || radius < 0.0 {
            return domain(format!("radius must be >= 0, got {radius}"));
        }
        gamma_q(1.0 / self.beta, (radius / self.scale).powf(self.beta))
    }

    /// Smallest radius whose two-sided tail mass is at most `mass`.
    pub fn tail_radius(&self, mass: f64) -> Result<f64> {
        let g = gamma_q_inverse(1.0 / self.beta, mass)?;
        Ok(self.scale * g.powf(1.0 / self.beta))
    }

    /// One draw `m + S·s·G^{1/β}`, `S` a fair sign and `G ~ Gamma(1/β, 1)`.
    pub fn draw<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        let g: f64 = self.gamma.sample(rng);
        let magnitude = self.scale * g.powf(1.0 / self.beta);
        if rng.random::<bool>() {
            self.mean + magnitude
        } else {
            self.mean - magnitude
        }
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R, count: usize) -> Vec<f64> {
        (0..count).map(|_| self.draw(rng)).collect()
    }

    /// `count` draws split over `chunks` independent streams derived from `seed`.
    pub fn sample_par(&self, seed: u64, count: usize, chunks: usize) -> Vec<f64> {
        sample_chunked(seed, count, chunks, |rng, n| self.sample(rng, n))
    }
}

impl Distribution<f64> for GGNoise {
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        self.draw(rng)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{integrate, Domain, QuadratureSpec};
    use crate::sim::chunk_rng;
    use std::f64::consts::{E, LN_2, PI, SQRT_2};

    const BETAS: [f64; 8] = [0.3, 0.5, 0.8, 1.0, 1.5, 2.0, 3.0, 5.0];

    #[test]
    fn pdf_examples() {
        let g = GGNoise::new(2.0, SQRT_2).unwrap();
        assert!((g.pdf(0.0).unwrap() - 1.0 / (2.0 * PI).sqrt()).abs() < 1e-15);
        let l = GGNoise::new(1.0, 1.0).unwrap();
        assert!((l.pdf(0.0).unwrap() - 0.5).abs() < 1e-15);
        let h = GGNoise::new(0.5, 1.0).unwrap();
        assert!((h.pdf(1.0).unwrap() - 0.25 / E).abs() < 1e-15);
        assert!((h.pdf(1.0).unwrap() - 0.091_969_86).abs() < 1e-8);
    }

    #[test]
    fn pdf_rejects_non_finite_argument() {
        let g = GGNoise::new(2.0, 1.0).unwrap();
        assert!(g.pdf(f64::NAN).is_err());
        assert!(g.log_pdf(f64::INFINITY).is_err());
    }

    #[test]
    fn invalid_laws() {
        assert!(GGNoise::new(0.0, 1.0).is_err());
        assert!(GGNoise::new(-1.0, 1.0).is_err());
        assert!(GGNoise::new(1.0, 0.0).is_err());
        assert!(GGNoise::new(f64::NAN, 1.0).is_err());
        assert!(GGNoise::with_mean(1.0, 1.0, f64::INFINITY).is_err());
        assert!(GGNoise::with_variance(1.0, 0.0).is_err());
        assert!(GGNoise::with_variance(-2.0, 1.0).is_err());
    }

    #[test]
    fn log_pdf_survives_where_pdf_underflows() {
        let g = GGNoise::new(2.0, 1.0).unwrap();
        assert_eq!(g.pdf(40.0).unwrap(), 0.0);
        let lp = g.log_pdf(40.0).unwrap();
        assert!((lp - (g.log_norm - 1600.0)).abs() < 1e-9);
    }

    #[test]
    fn variance_examples() {
        assert!((GGNoise::new(2.0, SQRT_2).unwrap().variance() - 1.0).abs() < 1e-14);
        assert!((GGNoise::new(1.0, 1.0).unwrap().variance() - 2.0).abs() < 1e-14);
        assert!((GGNoise::new(0.5, 1.0).unwrap().variance() - 120.0).abs() < 1e-11);
    }

    #[test]
    fn with_variance_examples_and_round_trip() {
        assert!((GGNoise::with_variance(2.0, 1.0).unwrap().scale() - SQRT_2).abs() < 1e-14);
        assert!((GGNoise::with_variance(1.0, 2.0).unwrap().scale() - 1.0).abs() < 1e-14);
        for beta in [0.1, 0.3, 0.5, 1.0, 3.0, 7.0, 20.0] {
            for v in [1e-6, 0.3, 1.0, 42.0, 1e8] {
                let law = GGNoise::with_variance(beta, v).unwrap();
                assert!(
                    (law.variance() / v - 1.0).abs() < 1e-12,
                    "beta={beta} v={v}"
                );
            }
        }
    }

    #[test]
    fn entropy_examples() {
        let g = GGNoise::new(2.0, SQRT_2).unwrap();
        assert!((g.entropy_nats() - 0.5 * (2.0 * PI * E).ln()).abs() < 1e-14);
        assert!((g.entropy_nats() - 1.418_938_53).abs() < 1e-8);
        let l = GGNoise::new(1.0, 1.0).unwrap();
        assert!((l.entropy_nats() - (1.0 + LN_2)).abs() < 1e-14);
        let h = GGNoise::new(0.5, 1.0).unwrap();
        assert!((h.entropy_nats() - (2.0 + 4f64.ln())).abs() < 1e-14);
        assert!((h.entropy(Units::Bits) - h.entropy_nats() / LN_2).abs() < 1e-15);
        let shifted = GGNoise::with_mean(0.5, 1.0, 17.0).unwrap();
        assert_eq!(shifted.entropy_nats(), h.entropy_nats());
    }

    #[test]
    fn pdf_integrates_to_one() {
        let spec = QuadratureSpec::default().with_max_subdivisions(400);
        for beta in BETAS {
            let law = GGNoise::new(beta, 1.0).unwrap();
            // Split at the mode where the density has a cusp for β ≤ 1.
            let total =
                2.0 * integrate(|n| law.pdf_unchecked(n), Domain::UpperHalf(0.0), &spec).unwrap();
            assert!((total - 1.0).abs() < 1e-8, "beta={beta}: {total}");
        }
    }

    #[test]
    fn peak_decreases_with_shape_at_unit_variance() {
        let peaks: Vec<f64> = [0.5, 1.0, 2.0, 4.0, 10.0]
            .iter()
            .map(|&b| GGNoise::with_variance(b, 1.0).unwrap().pdf(0.0).unwrap())
            .collect();
        assert!(peaks.windows(2).all(|w| w[0] > w[1]), "{peaks:?}");
    }

    #[test]
    fn sampling_is_deterministic() {
        let law = GGNoise::new(0.7, 2.0).unwrap();
        let a = law.sample(&mut chunk_rng(11, 0), 5);
        let b = law.sample(&mut chunk_rng(11, 0), 5);
        assert_eq!(a, b);
        assert_eq!(law.sample_par(3, 1000, 4), law.sample_par(3, 1000, 4));
    }

    #[test]
    fn gaussian_sample_variance() {
        let law = GGNoise::new(2.0, SQRT_2).unwrap();
        let xs = law.sample_par(101, 100_000, 8);
        let n = xs.len() as f64;
        let mean = xs.iter().sum::<f64>() / n;
        let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
        // Var of the sample variance for a Gaussian is 2σ⁴/(n−1).
        let se = (2.0 / (n - 1.0)).sqrt();
        assert!((var - 1.0).abs() < 4.0 * se, "{var}");
    }

    #[test]
    fn normalized_power_has_mean_one_over_beta() {
        for beta in [0.3, 0.5, 1.0, 2.0, 5.0] {
            let law = GGNoise::new(beta, 1.7).unwrap();
            let ys: Vec<f64> = law
                .sample_par(55, 100_000, 8)
                .into_iter()
                .map(|x| (x / 1.7).abs().powf(beta))
                .collect();
            let n = ys.len() as f64;
            let mean = ys.iter().sum::<f64>() / n;
            let sd = (ys.iter().map(|y| (y - mean).powi(2)).sum::<f64>() / (n - 1.0)).sqrt();
            assert!(
                (mean - 1.0 / beta).abs() < 4.0 * sd / n.sqrt(),
                "beta={beta}"
            );
        }
    }

    #[test]
    fn cdf_and_tail() {
        let law = GGNoise::with_mean(1.0, 2.0, 0.5).unwrap();
        assert!((law.cdf(0.5).unwrap() - 0.5).abs() < 1e-15);
        // Laplace CDF.
        let x: f64 = 3.0;
        assert!((law.cdf(x).unwrap() - (1.0 - 0.5 * (-(x - 0.5) / 2.0).exp())).abs() < 1e-13);
        let r = law.tail_radius(1e-10).unwrap();
        let m = law.tail_mass(r).unwrap();
        assert!(m <= 1e-10 && m > 0.999e-10);
    }
}
