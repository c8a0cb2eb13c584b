//! Sampled densities on graded grids.
//!
//! A symmetric grid places points at `c ± e^v` for `v` uniform in
//! `[ln inner, ln outer]`, plus the centre itself. Integrals use the
//! trapezoid rule in `v`, which converges geometrically for the smooth,
//! doubly-decaying integrands `f(c + e^v)·e^v` that arise here, and keeps a
//! cusp at the centre (GG shapes ≤ 1) out of the interior of any panel.

use rayon::prelude::*;

use crate::error::{domain, Result};

/// Log-spacing used by the grid builders in this crate.
pub const DEFAULT_LOG_STEP: f64 = 0.025;

#[derive(Debug, Clone, PartialEq)]
pub struct DensityGrid {
    points: Vec<f64>,
    values: Vec<f64>,
    weights: Vec<f64>,
    truncation_mass: f64,
}

impl DensityGrid {
    /// A grid on arbitrary strictly increasing `points`, integrated with the
    /// ordinary trapezoid rule.
    pub fn new(points: Vec<f64>, values: Vec<f64>, truncation_mass: f64) -> Result<Self> {
        if points.len() < 2 || points.len() != values.len() {
            return domain("a density grid needs at least two points and one value per point");
        }
        if points.iter().any(|p| !p.is_finite()) || points.windows(2).any(|w| w[0] >= w[1]) {
            return domain("grid points must be finite and strictly increasing");
        }
        let mut weights = vec![0.0; points.len()];
        for (i, w) in points.windows(2).enumerate() {
            let half = 0.5 * (w[1] - w[0]);
            weights[i] += half;
            weights[i + 1] += half;
        }
        Self::from_parts(points, values, weights, truncation_mass)
    }

    /// Samples `density` on the symmetric graded grid about `center`. Only
    /// the centre and right half are evaluated; the left half is mirrored.
    pub fn symmetric_graded<F>(
        center: f64,
        inner: f64,
        outer: f64,
        log_step: f64,
        truncation_mass: f64,
        density: F,
    ) -> Result<Self>
    where
        F: Fn(f64) -> f64 + Sync,
    {
        if !(inner > 0.0 && outer > inner && outer.is_finite() && log_step > 0.0) {
            return domain(format!(
                "invalid graded grid: inner {inner}, outer {outer}, step {log_step}"
            ));
        }
        let span = (outer / inner).ln();
        let steps = (span / log_step).ceil().max(2.0) as usize;
        let dv = span / steps as f64;
        let offsets: Vec<f64> = (0..=steps)
            .map(|j| (inner.ln() + j as f64 * dv).exp())
            .collect();

        let mut right_weights: Vec<f64> = offsets.iter().map(|r| r * dv).collect();
        right_weights[0] *= 0.5;
        right_weights[steps] *= 0.5;

        let center_value = density(center);
        let right_values: Vec<f64> = offsets.par_iter().map(|r| density(center + r)).collect();

        let n = 2 * offsets.len() + 1;
        let mut points = Vec::with_capacity(n);
        let mut values = Vec::with_capacity(n);
        let mut weights = Vec::with_capacity(n);
        for j in (0..offsets.len()).rev() {
            points.push(center - offsets[j]);
            values.push(right_values[j]);
            weights.push(right_weights[j]);
        }
        points.push(center);
        values.push(center_value);
        weights.push(2.0 * inner);
        for j in 0..offsets.len() {
            points.push(center + offsets[j]);
            values.push(right_values[j]);
            weights.push(right_weights[j]);
        }
        Self::from_parts(points, values, weights, truncation_mass)
    }

    fn from_parts(
        points: Vec<f64>,
        values: Vec<f64>,
        weights: Vec<f64>,
        truncation_mass: f64,
    ) -> Result<Self> {
        if values.iter().any(|v| !(v.is_finite() && *v >= 0.0)) {
            return domain("density values must be finite and nonnegative");
        }
        if points.windows(2).any(|w| w[0] >= w[1]) {
            return domain("grid points collapsed; inner radius too small for the centre");
        }
        if !(0.0..=1.0).contains(&truncation_mass) {
            return domain(format!(
                "truncation mass must lie in [0, 1], got {truncation_mass}"
            ));
        }
        Ok(DensityGrid {
            points,
            values,
            weights,
            truncation_mass,
        })
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Quadrature weights attached to each point.
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Probability mass lying outside the grid's span.
    pub fn truncation_mass(&self) -> f64 {
        self.truncation_mass
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// `Σ wᵢ f(xᵢ)`.
    pub fn mass(&self) -> f64 {
        self.integrate(|f| f)
    }

    /// `Σ wᵢ g(f(xᵢ))`.
    pub fn integrate<G: Fn(f64) -> f64>(&self, g: G) -> f64 {
        self.weights
            .iter()
            .zip(&self.values)
            .map(|(w, &f)| w * g(f))
            .sum()
    }
}

/// `−∫ f ln f` over the grid in nats, with `0·ln 0 = 0`.
pub fn grid_entropy(grid: &DensityGrid) -> f64 {
    -grid.integrate(|f| if f > 0.0 { f * f.ln() } else { 0.0 })
}
