use std::f64::consts::LN_2;
use std::fmt;
use std::str::FromStr;

/// Logarithm base used when reporting entropies and rates.
///
/// Everything is computed in nats; conversion happens only when a value
/// leaves the library.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Units {
    #[default]
    Bits,
    Nats,
}

impl Units {
    /// Converts a quantity expressed in nats into these units.
    #[inline]
    pub fn from_nats(self, nats: f64) -> f64 {
        match self {
            Units::Bits => nats / LN_2,
            Units::Nats => nats,
        }
    }

    #[inline]
    pub fn to_nats(self, value: f64) -> f64 {
        match self {
            Units::Bits => value * LN_2,
            Units::Nats => value,
        }
    }
}

impl fmt::Display for Units {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Units::Bits => "bits",
            Units::Nats => "nats",
        })
    }
}

impl FromStr for Units {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "bits" | "bit" => Ok(Units::Bits),
            "nats" | "nat" => Ok(Units::Nats),
            other => Err(format!("unknown units '{other}', expected bits or nats")),
        }
    }
}

/// Converts a power ratio in decibels to a linear ratio.
pub fn db_to_linear(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}

pub fn linear_to_db(linear: f64) -> f64 {
    10.0 * linear.log10()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conversions() {
        assert_eq!(Units::Nats.from_nats(1.5), 1.5);
        assert!((Units::Bits.from_nats(LN_2) - 1.0).abs() < 1e-15);
        assert!((Units::Bits.to_nats(1.0) - LN_2).abs() < 1e-15);
        assert!((db_to_linear(10.0) - 10.0).abs() < 1e-12);
        assert!((linear_to_db(db_to_linear(-5.0)) + 5.0).abs() < 1e-12);
        assert_eq!("NATS".parse::<Units>().unwrap(), Units::Nats);
        assert!("dB".parse::<Units>().is_err());
    }
}
