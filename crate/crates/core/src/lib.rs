//! Capacity bounds, ergodic capacity and secrecy rates for additive white
//! generalized Gaussian noise channels with α-μ fading.
//!
//! The central quantity is the gap [`capacity::gap`]: at equal noise
//! variance, generalized Gaussian noise of shape β has a capacity between the
//! AWGN capacity and the AWGN capacity plus `f(β)`, where
//!
//! ```text
//! f(β) = ½ log( β² π e^{1−2/β} Γ(3/β) / (2 Γ(1/β)³) ) ≥ 0.
//! ```
//!
//! The same additive gap carries over to the fading average and to secrecy
//! rates. The [`verify`] module checks the bounds against numerically
//! computed mutual information.

pub mod alpha_mu;
pub mod capacity;
pub mod error;
pub mod gg_noise;
pub mod numerics;
pub mod secrecy;
pub mod sim;
pub mod units;
pub mod verify;

pub use alpha_mu::{AlphaMuFading, FadingCase};
pub use capacity::{CapacityBounds, ChannelConfig};
pub use error::{Error, Result};
pub use gg_noise::GGNoise;
pub use numerics::QuadratureSpec;
pub use secrecy::{PositivityRule, SecrecyScenario};
pub use sim::SimConfig;
pub use units::Units;
