//! Physical constants and model switches shared by every formula.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Nucleon masses, the mass-energy conversion factor and the dynamics constants.
///
/// Masses are in atomic mass units, `amu_to_mev` in MeV per u; `c` and
/// `gravitational` are SI.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    pub m_p: f64,
    pub m_n: f64,
    pub amu_to_mev: f64,
    pub c: f64,
    pub gravitational: f64,
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self {
            m_p: 1.007276,
            m_n: 1.008665,
            amu_to_mev: 931.04,
            c: 2.997_924_58e8,
            gravitational: 6.674e-11,
        }
    }
}

impl PhysicalConstants {
    pub fn validate(&self) -> Result<()> {
        let fields = [
            ("m_p", self.m_p),
            ("m_n", self.m_n),
            ("amu_to_mev", self.amu_to_mev),
            ("c", self.c),
            ("gravitational", self.gravitational),
        ];
        for (name, value) in fields {
            if !(value.is_finite() && value > 0.0) {
                return Err(Error::Validation {
                    subject: name.to_string(),
                    reason: format!("must be finite and strictly positive, got {value}"),
                });
            }
        }
        if self.m_n <= self.m_p {
            return Err(Error::Validation {
                subject: "m_n".to_string(),
                reason: format!("neutron mass {} must exceed proton mass {}", self.m_n, self.m_p),
            });
        }
        Ok(())
    }

    /// Free-nucleon mass sum `n_p·m_p + (A − n_p)·m_n` in u.
    pub fn nucleon_mass_sum(&self, a: u32, n_p: u32) -> f64 {
        f64::from(n_p) * self.m_p + f64::from(a - n_p) * self.m_n
    }
}

/// Leading constant of the coefficient formula `k = C·ΔE / (g·M)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LeadingConstant {
    /// `4π / amu_to_mev` at full precision, the exact inverse of the binding-energy form.
    #[default]
    Exact4Pi,
    /// The rounded literal `0.01349`.
    Literal01349,
}

impl LeadingConstant {
    pub const LITERAL: f64 = 0.01349;

    pub fn value(self, constants: &PhysicalConstants) -> f64 {
        match self {
            LeadingConstant::Exact4Pi => 4.0 * PI / constants.amu_to_mev,
            LeadingConstant::Literal01349 => Self::LITERAL,
        }
    }

    pub fn token(self) -> &'static str {
        match self {
            LeadingConstant::Exact4Pi => "exact-4pi",
            LeadingConstant::Literal01349 => "literal-01349",
        }
    }
}

impl std::str::FromStr for LeadingConstant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact-4pi" | "exact_4pi" => Ok(Self::Exact4Pi),
            "literal-01349" | "literal_01349" | "literal" => Ok(Self::Literal01349),
            other => Err(Error::Validation {
                subject: "eq53_constant_mode".to_string(),
                reason: format!("unknown mode `{other}` (expected exact-4pi or literal-01349)"),
            }),
        }
    }
}

/// Where the geometry factor switches from the 12+6(A−4) branch to the
/// 96+8(A−19) branch.
///
/// `Printed` places A = 19 on the third branch as the formula is written.
/// `Tabulated` places A = 19 on the second branch, which is how the
/// tabulated F-19 coefficient and binding energy were evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GeometryConvention {
    #[default]
    Printed,
    Tabulated,
}

impl GeometryConvention {
    pub fn token(self) -> &'static str {
        match self {
            GeometryConvention::Printed => "printed",
            GeometryConvention::Tabulated => "tabulated",
        }
    }
}

impl std::str::FromStr for GeometryConvention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "printed" => Ok(Self::Printed),
            "tabulated" => Ok(Self::Tabulated),
            other => Err(Error::Validation {
                subject: "geometry".to_string(),
                reason: format!("unknown convention `{other}` (expected printed or tabulated)"),
            }),
        }
    }
}

/// Everything the nuclear formulas need besides their per-nuclide inputs.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct EmissionModel {
    pub constants: PhysicalConstants,
    pub leading: LeadingConstant,
    pub geometry: GeometryConvention,
}

impl EmissionModel {
    pub fn with_geometry(mut self, geometry: GeometryConvention) -> Self {
        self.geometry = geometry;
        self
    }

    pub fn with_leading(mut self, leading: LeadingConstant) -> Self {
        self.leading = leading;
        self
    }

    pub fn leading_value(&self) -> f64 {
        self.leading.value(&self.constants)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_valid() {
        let c = PhysicalConstants::default();
        c.validate().unwrap();
        assert_eq!(c.amu_to_mev, 931.04);
    }

    #[test]
    fn exact_leading_constant_near_literal() {
        let v = LeadingConstant::Exact4Pi.value(&PhysicalConstants::default());
        assert!((v - 0.013_497_13).abs() < 5e-9, "{v}");
        assert!((v - LeadingConstant::LITERAL).abs() / v < 6e-4);
    }

    #[test]
    fn rejects_swapped_masses() {
        let c = PhysicalConstants {
            m_p: 1.01,
            m_n: 1.0,
            ..Default::default()
        };
        assert!(matches!(c.validate(), Err(Error::Validation { .. })));
    }

    #[test]
    fn rejects_nonpositive() {
        let c = PhysicalConstants {
            amu_to_mev: 0.0,
            ..Default::default()
        };
        assert!(c.validate().is_err());
    }

    #[test]
    fn parse_tokens() {
        assert_eq!(
            "literal-01349".parse::<LeadingConstant>().unwrap(),
            LeadingConstant::Literal01349
        );
        assert_eq!(
            "tabulated".parse::<GeometryConvention>().unwrap(),
            GeometryConvention::Tabulated
        );
        assert!("bogus".parse::<GeometryConvention>().is_err());
    }
}
