//! Special functions and adaptive quadrature shared by every other module.

mod quadrature;
mod special;

pub use quadrature::{integrate, integrate_with_error, Domain, Estimate, QuadratureSpec};
pub use special::{exp_integral_e1, gamma_p, gamma_q, gamma_q_inverse, gamma_ratio, log_gamma};

pub(crate) use special::ln_gamma;
