//! Kolmogorov–Smirnov checks of the samplers against the closed-form CDFs.

use awggn::numerics::gamma_p;
use awggn::{AlphaMuFading, GGNoise};

const N: usize = 10_000;

// Asymptotic 1% critical value of the one-sample KS statistic.
fn critical() -> f64 {
    1.628 / (N as f64).sqrt()
}

fn ks_statistic(mut xs: Vec<f64>, cdf: impl Fn(f64) -> f64) -> f64 {
    xs.sort_by(f64::total_cmp);
    let n = xs.len() as f64;
    xs.iter()
        .enumerate()
        .map(|(i, &x)| {
            let f = cdf(x);
            (f - i as f64 / n).max((i + 1) as f64 / n - f)
        })
        .fold(0.0, f64::max)
}

#[test]
fn gamma_variates_through_the_noise_sampler() {
    // |N/s|^β ~ Gamma(1/β, 1), so β ∈ {5, 2, 0.5} covers shapes {0.2, 0.5, 2}.
    for (beta, seed) in [(5.0, 11u64), (2.0, 12), (0.5, 13)] {
        let law = GGNoise::new(beta, 1.0).unwrap();
        let shape = 1.0 / beta;
        let g: Vec<f64> = law
            .sample_par(seed, N, 8)
            .into_iter()
            .map(|x| x.abs().powf(beta))
            .collect();
        let d = ks_statistic(g, |x| gamma_p(shape, x).unwrap());
        assert!(d < critical(), "shape {shape}: D = {d}");
    }
}

#[test]
fn noise_sampler_matches_cdf() {
    for (beta, seed) in [(0.5, 21u64), (1.0, 22), (1.5, 23), (2.0, 24), (3.0, 25)] {
        let law = GGNoise::with_mean(beta, 0.7, -1.25).unwrap();
        let d = ks_statistic(law.sample_par(seed, N, 8), |x| law.cdf(x).unwrap());
        assert!(d < critical(), "beta {beta}: D = {d}");
    }
}

#[test]
fn fading_sampler_matches_cdf() {
    let cases = [(2.0, 1.0), (1.0, 1.0), (2.0, 2.0), (0.5, 3.0), (4.0, 0.5)];
    for (i, (alpha, mu)) in cases.into_iter().enumerate() {
        let law = AlphaMuFading::unit_power(alpha, mu).unwrap();
        let d = ks_statistic(law.sample_par(100 + i as u64, N, 8), |h| {
            law.cdf(h).unwrap()
        });
        assert!(d < critical(), "alpha {alpha} mu {mu}: D = {d}");
    }
}

#[test]
fn samples_do_not_depend_on_thread_count() {
    let law = GGNoise::new(0.8, 1.0).unwrap();
    let one = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap()
        .install(|| law.sample_par(7, 5_000, 8));
    let eight = rayon::ThreadPoolBuilder::new()
        .num_threads(8)
        .build()
        .unwrap()
        .install(|| law.sample_par(7, 5_000, 8));
    assert_eq!(
        one.iter().map(|x| x.to_bits()).collect::<Vec<_>>(),
        eight.iter().map(|x| x.to_bits()).collect::<Vec<_>>()
    );
}
