//! α-μ fading envelope.
//!
//! ```text
//! f(h) = α μ^μ h^{αμ−1} / (ĥ^{αμ} Γ(μ)) · exp(−μ (h/ĥ)^α),   h ≥ 0
//! ```
//!
//! where `ĥ = E{h^α}^{1/α}` and `μ = E²{h^α} / V{h^α}`. Rayleigh, Nakagami-m
//! and Weibull envelopes are special cases.

use rand::distr::Distribution;
use rand::Rng;
use rand_distr::Gamma;

use crate::error::{domain, ensure_positive, Result};
use crate::numerics::{gamma_p, ln_gamma};
use crate::sim::sample_chunked;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaMuFading {
    alpha: f64,
    mu: f64,
    h_root: f64,
    gamma: Gamma<f64>,
}

/// Named members of the α-μ family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FadingCase {
    Rayleigh,
    Nakagami { m: f64 },
    Weibull { k: f64 },
}

impl AlphaMuFading {
    pub fn new(alpha: f64, mu: f64, h_root: f64) -> Result<Self> {
        ensure_positive("alpha", alpha)?;
        ensure_positive("mu", mu)?;
        ensure_positive("h_root", h_root)?;
        let gamma =
            Gamma::new(mu, 1.0).map_err(|e| crate::Error::Domain(format!("gamma sampler: {e}")))?;
        Ok(AlphaMuFading {
            alpha,
            mu,
            h_root,
            gamma,
        })
    }

    /// The law with `E{h²} = 1`, so that a nominal SNR is the average
    /// received SNR.
    pub fn unit_power(alpha: f64, mu: f64) -> Result<Self> {
        ensure_positive("alpha", alpha)?;
        ensure_positive("mu", mu)?;
        // E{h²} = ĥ² Γ(μ + 2/α) / (μ^{2/α} Γ(μ))
        let log_root = mu.ln() / alpha + 0.5 * (ln_gamma(mu) - ln_gamma(mu + 2.0 / alpha));
        Self::new(alpha, mu, log_root.exp())
    }

    pub fn special_case(case: FadingCase, h_root: f64) -> Result<Self> {
        let (alpha, mu) = case.parameters()?;
        Self::new(alpha, mu, h_root)
    }

    pub fn special_case_unit_power(case: FadingCase) -> Result<Self> {
        let (alpha, mu) = case.parameters()?;
        Self::unit_power(alpha, mu)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn h_root(&self) -> f64 {
        self.h_root
    }

    /// Log-density; `-∞` at `h = 0` when `αμ > 1`.
    pub fn log_pdf(&self, h: f64) -> Result<f64> {
        if h.is_nan() || h < 0.0 || h.is_infinite() {
            return domain(format!("fading gain must be finite and >= 0, got {h}"));
        }
        Ok(self.log_pdf_unchecked(h))
    }

    pub fn pdf(&self, h: f64) -> Result<f64> {
        self.log_pdf(h).map(f64::exp)
    }

    #[inline]
    pub(crate) fn log_pdf_unchecked(&self, h: f64) -> f64 {
        let am = self.alpha * self.mu;
        let t = h / self.h_root;
        let power_term = if h == 0.0 {
            match (am - 1.0).partial_cmp(&0.0) {
                Some(std::cmp::Ordering::Greater) => f64::NEG_INFINITY,
                Some(std::cmp::Ordering::Equal) => 0.0,
                _ => f64::INFINITY,
            }
        } else {
            (am - 1.0) * t.ln()
        };
        self.alpha.ln() + self.mu * self.mu.ln() - self.h_root.ln() - ln_gamma(self.mu) + power_term
            - self.mu * t.powf(self.alpha)
    }

    #[inline]
    pub(crate) fn pdf_unchecked(&self, h: f64) -> f64 {
        self.log_pdf_unchecked(h).exp()
    }

    /// `E{h^k} = ĥ^k Γ(μ + k/α) / (μ^{k/α} Γ(μ))`.
    pub fn moment(&self, k: f64) -> Result<f64> {
        ensure_positive("k", k)?;
        let ka = k / self.alpha;
        Ok(
            (k * self.h_root.ln() + ln_gamma(self.mu + ka) - ka * self.mu.ln() - ln_gamma(self.mu))
                .exp(),
        )
    }

    /// `P(μ, μ (h/ĥ)^α)`.
    pub fn cdf(&self, h: f64) -> Result<f64> {
        if h.is_nan() || h < 0.0 {
            return domain(format!("fading gain must be >= 0, got {h}"));
        }
        gamma_p(self.mu, self.mu * (h / self.h_root).powf(self.alpha))
    }

    /// One draw `ĥ (G/μ)^{1/α}` with `G ~ Gamma(μ, 1)`.
    pub fn draw<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        let g: f64 = self.gamma.sample(rng);
        self.h_root * (g / self.mu).powf(1.0 / self.alpha)
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R, count: usize) -> Vec<f64> {
        (0..count).map(|_| self.draw(rng)).collect()
    }

    pub fn sample_par(&self, seed: u64, count: usize, chunks: usize) -> Vec<f64> {
        sample_chunked(seed, count, chunks, |rng, n| self.sample(rng, n))
    }
}

impl Distribution<f64> for AlphaMuFading {
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        self.draw(rng)
    }
}

impl FadingCase {
    /// `(α, μ)` of the case.
    pub fn parameters(&self) -> Result<(f64, f64)> {
        match *self {
            FadingCase::Rayleigh => Ok((2.0, 1.0)),
            FadingCase::Nakagami { m } => {
                ensure_positive("nakagami m", m)?;
                Ok((2.0, m))
            }
            FadingCase::Weibull { k } => {
                ensure_positive("weibull k", k)?;
                Ok((k, 1.0))
            }
        }
    }
}
