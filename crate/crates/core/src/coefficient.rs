//! Emission coefficients of nuclei from their binding energies.
//!
//! For a nucleus with `n_p` protons and `A` nucleons the binding energy and
//! the emission coefficient are related by
//!
//! ```text
//! ΔE = amu_to_mev · g(A) · k / (4π) · [n_p·m_p + (A − n_p)·m_n]
//! ```
//!
//! where `g(A)` is the piecewise geometry factor counting effective contact
//! neighbours per nucleon. The relation is stated for `2 < A ≤ 50`; values
//! outside that band are still computed but carry a [`ValidityWarning`].

use std::fmt;

use crate::constants::{EmissionModel, GeometryConvention};
use crate::error::{domain, Error, Result};

/// Upper bound of the neighbour count per nucleon, `floor(4π)`.
pub const MAX_NEIGHBOURS: u32 = 12;

/// Largest mass number for which the light-nucleus relation is stated.
pub const LIGHT_NUCLEUS_MAX_A: u32 = 50;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeometryBranch {
    /// `A ≤ 4`: every nucleon touches every other, `g = A − 1`.
    Compact,
    /// `[12 + 6(A − 4)] / A`.
    Shell,
    /// `[96 + 8(A − 19)] / A`.
    Dense,
    /// `[136 + 6(A − 24)] / A`.
    Heavy,
}

/// Geometry factor as an unreduced rational `numerator / denominator`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeometryFactor {
    pub a: u32,
    pub numerator: u32,
    pub denominator: u32,
    pub branch: GeometryBranch,
}

impl GeometryFactor {
    pub fn value(&self) -> f64 {
        f64::from(self.numerator) / f64::from(self.denominator)
    }
}

/// Geometry factor for mass number `a` using the formula as written.
pub fn geometry_factor(a: u32) -> Result<GeometryFactor> {
    geometry_factor_with(a, GeometryConvention::Printed)
}

pub fn geometry_factor_with(a: u32, convention: GeometryConvention) -> Result<GeometryFactor> {
    if a < 2 {
        return Err(domain(format!("geometry factor needs A >= 2, got {a}")));
    }
    let shell_upper = match convention {
        GeometryConvention::Printed => 18,
        GeometryConvention::Tabulated => 19,
    };
    let (numerator, denominator, branch) = match a {
        0..=4 => (a - 1, 1, GeometryBranch::Compact),
        _ if a <= shell_upper => (12 + 6 * (a - 4), a, GeometryBranch::Shell),
        _ if a <= 25 => (96 + 8 * (a - 19), a, GeometryBranch::Dense),
        _ => (136 + 6 * (a - 24), a, GeometryBranch::Heavy),
    };
    Ok(GeometryFactor {
        a,
        numerator,
        denominator,
        branch,
    })
}

/// Set when a formula is evaluated outside the mass range it is stated for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValidityWarning {
    /// `A = 2`; the relation is stated for `A > 2`.
    MassNumberTwo,
    /// `A > 50`; the relation is stated for light nuclei only.
    BeyondLightNuclei,
}

impl ValidityWarning {
    pub fn for_mass_number(a: u32) -> Option<Self> {
        if a <= 2 {
            Some(ValidityWarning::MassNumberTwo)
        } else if a > LIGHT_NUCLEUS_MAX_A {
            Some(ValidityWarning::BeyondLightNuclei)
        } else {
            None
        }
    }

    pub fn token(self) -> &'static str {
        match self {
            ValidityWarning::MassNumberTwo => "mass_number_two",
            ValidityWarning::BeyondLightNuclei => "beyond_light_nuclei",
        }
    }
}

impl fmt::Display for ValidityWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// Result of evaluating the coefficient formula for one nucleus.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoefficientEstimate {
    /// 1/s
    pub k: f64,
    pub geometry: GeometryFactor,
    pub warning: Option<ValidityWarning>,
}

pub(crate) fn check_nucleus(a: u32, n_p: u32) -> Result<()> {
    if n_p < 1 || n_p > a {
        return Err(domain(format!(
            "proton count must satisfy 1 <= n_p <= A, got n_p={n_p} A={a}"
        )));
    }
    Ok(())
}

impl EmissionModel {
    /// `k = C · ΔE / (g · [n_p·m_p + (A − n_p)·m_n])` with the configured
    /// leading constant `C`.
    pub fn emission_coefficient(&self, delta_e: f64, a: u32, n_p: u32) -> Result<CoefficientEstimate> {
        check_nucleus(a, n_p)?;
        if !(delta_e.is_finite() && delta_e >= 0.0) {
            return Err(domain(format!("binding energy must be finite and >= 0, got {delta_e}")));
        }
        let geometry = geometry_factor_with(a, self.geometry)?;
        let mass = self.constants.nucleon_mass_sum(a, n_p);
        let k = self.leading_value() * delta_e / (geometry.value() * mass);
        Ok(CoefficientEstimate {
            k,
            geometry,
            warning: ValidityWarning::for_mass_number(a),
        })
    }

    /// Inverse of [`EmissionModel::emission_coefficient`]: binding energy in MeV.
    pub fn binding_energy_from_k(&self, k: f64, a: u32, n_p: u32) -> Result<f64> {
        check_nucleus(a, n_p)?;
        if !(k.is_finite() && k >= 0.0) {
            return Err(domain(format!("emission coefficient must be finite and >= 0, got {k}")));
        }
        let geometry = geometry_factor_with(a, self.geometry)?;
        let mass = self.constants.nucleon_mass_sum(a, n_p);
        Ok(k * geometry.value() * mass / self.leading_value())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    ComputedFromBinding,
    InferredFromDecay,
    Fixture,
}

impl Provenance {
    pub fn token(self) -> &'static str {
        match self {
            Provenance::ComputedFromBinding => "computed_from_binding",
            Provenance::InferredFromDecay => "inferred_from_decay",
            Provenance::Fixture => "fixture",
        }
    }
}

/// A per-nuclide coefficient together with where it came from.
#[derive(Debug, Clone, PartialEq)]
pub struct EmissionCoefficient {
    pub nuclide: String,
    /// 1/s
    pub k: f64,
    pub provenance: Provenance,
}

impl EmissionCoefficient {
    pub fn new(nuclide: impl Into<String>, k: f64, provenance: Provenance) -> Self {
        Self {
            nuclide: nuclide.into(),
            k,
            provenance,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoefficientStats {
    pub count: usize,
    pub mean: f64,
    pub min: f64,
    pub max: f64,
}

/// Mean, min and max of a set of coefficients.
///
/// Values are summed in ascending order, so the mean does not depend on the
/// order of the input.
pub fn coefficient_stats<I: IntoIterator<Item = f64>>(ks: I) -> Result<CoefficientStats> {
    let mut values: Vec<f64> = ks.into_iter().collect();
    if values.is_empty() {
        return Err(Error::Empty("coefficient statistics need at least one value".into()));
    }
    if let Some(bad) = values.iter().find(|v| !v.is_finite()) {
        return Err(domain(format!("non-finite coefficient {bad}")));
    }
    values.sort_by(f64::total_cmp);
    let sum: f64 = values.iter().sum();
    let count = values.len();
    Ok(CoefficientStats {
        count,
        mean: sum / count as f64,
        min: values[0],
        max: values[count - 1],
    })
}

/// Coefficients grouped into clusters of mutually close values.
#[derive(Debug, Clone, PartialEq)]
pub struct Partition {
    /// Groups in ascending order of their values.
    pub groups: Vec<Vec<EmissionCoefficient>>,
    /// Index into `groups` of the group with the largest mean.
    pub chosen: usize,
}

impl Partition {
    pub fn chosen_group(&self) -> &[EmissionCoefficient] {
        &self.groups[self.chosen]
    }

    pub fn group_mean(group: &[EmissionCoefficient]) -> f64 {
        // groups are never empty and values were checked finite
        coefficient_stats(group.iter().map(|c| c.k))
            .map(|s| s.mean)
            .unwrap_or(f64::NAN)
    }
}

/// Partitions coefficients by single linkage over sorted values and picks
/// the group with the largest mean.
///
/// Neighbours `x ≤ y` share a group when `y − x ≤ tol · y`. Ties on the
/// mean go to the larger group, then to the group holding the largest value.
pub fn select_max_mean_subset(ks: &[EmissionCoefficient], relative_tolerance: f64) -> Result<Partition> {
    if ks.is_empty() {
        return Err(Error::Empty("subset selection needs at least one coefficient".into()));
    }
    if !(relative_tolerance.is_finite() && relative_tolerance > 0.0) {
        return Err(domain(format!(
            "relative tolerance must be > 0, got {relative_tolerance}"
        )));
    }
    if let Some(bad) = ks.iter().find(|c| !c.k.is_finite()) {
        return Err(domain(format!("non-finite coefficient for {}", bad.nuclide)));
    }

    let mut sorted: Vec<EmissionCoefficient> = ks.to_vec();
    sorted.sort_by(|x, y| x.k.total_cmp(&y.k));

    let mut groups: Vec<Vec<EmissionCoefficient>> = Vec::new();
    for c in sorted {
        match groups.last_mut() {
            Some(g) if close(g.last().expect("non-empty group").k, c.k, relative_tolerance) => g.push(c),
            _ => groups.push(vec![c]),
        }
    }

    let mut chosen = 0;
    for (i, g) in groups.iter().enumerate().skip(1) {
        let best = &groups[chosen];
        let (m, mb) = (Partition::group_mean(g), Partition::group_mean(best));
        // later groups always hold larger values, so `>=` on size breaks the
        // final tie toward the largest element
        if m > mb || (m == mb && g.len() >= best.len()) {
            chosen = i;
        }
    }
    Ok(Partition { groups, chosen })
}

fn close(lo: f64, hi: f64, tol: f64) -> bool {
    (hi - lo).abs() <= tol * lo.abs().max(hi.abs())
}
