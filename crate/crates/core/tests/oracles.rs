//! Special functions and closed forms checked against independent
//! quadrature of their defining integrals.

use approx::assert_relative_eq;

use awggn::capacity::{ergodic_awgn_capacity, gap_nats};
use awggn::numerics::{exp_integral_e1, gamma_p, integrate, log_gamma, Domain, QuadratureSpec};
use awggn::{AlphaMuFading, GGNoise, Units};

fn tight() -> QuadratureSpec {
    QuadratureSpec::default()
        .with_relative_tolerance(1e-13)
        .with_absolute_tolerance(0.0)
        .with_max_subdivisions(2000)
}

#[test]
fn e1_matches_defining_integral() {
    assert_relative_eq!(
        exp_integral_e1(1.0).unwrap(),
        0.219_383_934_395_520_3,
        max_relative = 1e-10
    );
    assert_relative_eq!(
        exp_integral_e1(10.0).unwrap(),
        4.156_968_929_685_324e-6,
        max_relative = 1e-10
    );
    for x in [0.01, 0.1, 0.5, 2.0, 5.0, 20.0, 50.0] {
        // E1(x) = ∫_1^∞ e^{-xt}/t dt.
        let q = integrate(
            |t: f64| (-x * t).exp() / t,
            Domain::UpperHalf(1.0),
            &tight(),
        )
        .unwrap();
        assert_relative_eq!(exp_integral_e1(x).unwrap(), q, max_relative = 1e-10);
    }
}

#[test]
fn log_gamma_matches_euler_integral() {
    for a in [0.3, 0.5, 1.0, 1.7, 2.0, 3.5, 7.0] {
        let q = integrate(
            |t: f64| {
                if t == 0.0 {
                    0.0
                } else {
                    t.powf(a - 1.0) * (-t).exp()
                }
            },
            Domain::UpperHalf(0.0),
            &tight(),
        )
        .unwrap();
        assert_relative_eq!(log_gamma(a).unwrap().exp(), q, max_relative = 1e-10);
    }
}

#[test]
fn incomplete_gamma_matches_quadrature() {
    for (a, x) in [(0.2, 0.05), (0.5, 1.0), (2.0, 3.0), (5.0, 2.0)] {
        let q = integrate(
            |t: f64| {
                if t == 0.0 {
                    0.0
                } else {
                    t.powf(a - 1.0) * (-t).exp()
                }
            },
            Domain::Finite(0.0, x),
            &tight(),
        )
        .unwrap();
        let g = log_gamma(a).unwrap().exp();
        assert_relative_eq!(gamma_p(a, x).unwrap(), q / g, max_relative = 1e-9);
    }
}

#[test]
fn gap_equals_entropy_difference_by_quadrature() {
    for beta in [0.5, 0.8, 1.0, 1.5, 3.0] {
        let law = GGNoise::with_variance(beta, 1.0).unwrap();
        let h = integrate(
            |x| {
                let p = law.pdf(x).unwrap();
                if p > 0.0 {
                    -p * p.ln()
                } else {
                    0.0
                }
            },
            Domain::RealLine,
            &QuadratureSpec::default()
                .with_relative_tolerance(1e-12)
                .with_max_subdivisions(2000),
        )
        .unwrap();
        let gauss = 0.5 * (2.0 * std::f64::consts::PI * std::f64::consts::E).ln();
        assert_relative_eq!(gauss - h, gap_nats(beta).unwrap(), epsilon = 1e-9);
    }
}

#[test]
fn rayleigh_ergodic_capacity_closed_form() {
    let fading = AlphaMuFading::unit_power(2.0, 1.0).unwrap();
    for rho in [0.1f64, 1.0, 10.0] {
        let closed = (1.0 / rho).exp() * exp_integral_e1(1.0 / rho).unwrap()
            / (2.0 * std::f64::consts::LN_2);
        let q =
            ergodic_awgn_capacity(rho, &fading, &QuadratureSpec::default(), Units::Bits).unwrap();
        assert!((q - closed).abs() < 1e-8, "rho {rho}: {q} vs {closed}");
    }
}
