use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Proton count and mass number of a nuclide, plus its element symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NuclideId {
    pub symbol: &'static str,
    pub z: u32,
    pub a: u32,
}

impl NuclideId {
    pub const fn new(symbol: &'static str, z: u32, a: u32) -> Self {
        Self { symbol, z, a }
    }

    pub fn neutrons(&self) -> u32 {
        self.a - self.z
    }

    /// Label such as `He-4`.
    pub fn label(&self) -> String {
        format!("{}-{}", self.symbol, self.a)
    }
}

impl fmt::Display for NuclideId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.symbol, self.a)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DecayMode {
    Stable,
    BetaMinus,
    BetaPlus,
    Alpha,
    Other,
}

impl DecayMode {
    pub fn token(self) -> &'static str {
        match self {
            DecayMode::Stable => "stable",
            DecayMode::BetaMinus => "beta_minus",
            DecayMode::BetaPlus => "beta_plus",
            DecayMode::Alpha => "alpha",
            DecayMode::Other => "other",
        }
    }
}

impl fmt::Display for DecayMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for DecayMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "stable" => Ok(DecayMode::Stable),
            "beta_minus" => Ok(DecayMode::BetaMinus),
            "beta_plus" => Ok(DecayMode::BetaPlus),
            "alpha" => Ok(DecayMode::Alpha),
            "other" => Ok(DecayMode::Other),
            other => Err(Error::Domain(format!("unknown decay mode `{other}`"))),
        }
    }
}

/// A nuclide with whatever measured properties are known for it.
///
/// Energies are MeV, half-lives seconds.
#[derive(Debug, Clone, PartialEq)]
pub struct Nuclide {
    pub symbol: String,
    pub z: u32,
    pub a: u32,
    pub binding_energy_exp: Option<f64>,
    pub half_life: Option<f64>,
    pub decay_mode: Option<DecayMode>,
}

impl Nuclide {
    pub fn new(symbol: impl Into<String>, z: u32, a: u32) -> Self {
        Self {
            symbol: symbol.into(),
            z,
            a,
            binding_energy_exp: None,
            half_life: None,
            decay_mode: None,
        }
    }

    pub fn label(&self) -> String {
        format!("{}-{}", self.symbol, self.a)
    }

    pub fn is_stable(&self) -> bool {
        self.decay_mode == Some(DecayMode::Stable)
    }

    /// Checks the structural invariants of a nuclide record.
    pub fn validate(&self) -> Result<()> {
        let fail = |reason: String| Error::Validation {
            subject: self.label(),
            reason,
        };
        if self.z < 1 || self.z > self.a {
            return Err(fail(format!("requires 1 <= z <= a, got z={} a={}", self.z, self.a)));
        }
        if let Some(be) = self.binding_energy_exp {
            if !be.is_finite() || be < 0.0 {
                return Err(fail(format!("binding energy must be finite and >= 0, got {be}")));
            }
        }
        if let Some(t) = self.half_life {
            if !t.is_finite() || t <= 0.0 {
                return Err(fail(format!("half-life must be finite and > 0, got {t}")));
            }
            if self.decay_mode == Some(DecayMode::Stable) {
                return Err(fail("a stable nuclide cannot carry a half-life".to_string()));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z_greater_than_a_rejected() {
        let n = Nuclide::new("X", 5, 4);
        let err = n.validate().unwrap_err();
        assert!(err.to_string().contains("X-4"), "{err}");
    }

    #[test]
    fn stable_with_half_life_rejected() {
        let mut n = Nuclide::new("H", 1, 3);
        n.half_life = Some(1.0);
        n.decay_mode = Some(DecayMode::Stable);
        assert!(n.validate().is_err());
        n.decay_mode = Some(DecayMode::BetaMinus);
        n.validate().unwrap();
    }

    #[test]
    fn negative_binding_energy_rejected() {
        let mut n = Nuclide::new("He", 2, 4);
        n.binding_energy_exp = Some(-1.0);
        assert!(n.validate().is_err());
    }

    #[test]
    fn decay_mode_tokens_roundtrip() {
        for m in [
            DecayMode::Stable,
            DecayMode::BetaMinus,
            DecayMode::BetaPlus,
            DecayMode::Alpha,
            DecayMode::Other,
        ] {
            assert_eq!(m.token().parse::<DecayMode>().unwrap(), m);
        }
    }
}
