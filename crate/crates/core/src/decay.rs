//! Stable-nucleus coefficients inferred from radioactive half-lives.
//!
//! Measuring a radioactive mass `m_i` against a stable reference `m_j`,
//! both shrinking exponentially, gives
//! `m_i/m_j = (m0_i/m0_j)·exp[(k_j − k_i)·t]`. Over one half-life the ratio
//! halves, hence `k_j = k_i + ln(0.5)/τ_i`.

use std::collections::BTreeSet;
use std::fmt;

use crate::coefficient::EmissionCoefficient;
use crate::error::{domain, Error, Result};
use crate::fixtures::Table3Row;
use crate::nuclide::DecayMode;
use crate::report::{Cell, Tabular};

/// `m_i/m_j` after time `t`.
pub fn mass_ratio(m0_i: f64, m0_j: f64, k_i: f64, k_j: f64, t: f64) -> Result<f64> {
    if !(m0_i > 0.0 && m0_j > 0.0) {
        return Err(domain(format!("masses must be > 0, got {m0_i} and {m0_j}")));
    }
    if t.is_nan() || t < 0.0 {
        return Err(domain(format!("time must be >= 0, got {t}")));
    }
    Ok(m0_i / m0_j * ((k_j - k_i) * t).exp())
}

/// `k_j = k_i + ln(0.5)/τ`.
///
/// The result is negative when τ is short compared with `1/k_i`; it is
/// returned as is.
pub fn infer_stable_k(k_i: f64, tau: f64) -> Result<f64> {
    if !(tau.is_finite() && tau > 0.0) {
        return Err(domain(format!("half-life must be finite and > 0, got {tau}")));
    }
    if !(k_i.is_finite() && k_i > 0.0) {
        return Err(domain(format!("k_i must be finite and > 0, got {k_i}")));
    }
    Ok(k_i + 0.5f64.ln() / tau)
}

#[derive(Debug, Clone, PartialEq)]
pub struct DecayInferenceRow {
    pub nuclide: String,
    /// 1/s
    pub k_i: f64,
    /// s
    pub tau: f64,
    /// 1/s
    pub k_j: f64,
    pub decay_mode: DecayMode,
}

impl DecayInferenceRow {
    pub fn infer(nuclide: impl Into<String>, k_i: f64, tau: f64, decay_mode: DecayMode) -> Result<Self> {
        Ok(Self {
            nuclide: nuclide.into(),
            k_i,
            tau,
            k_j: infer_stable_k(k_i, tau)?,
            decay_mode,
        })
    }

    /// Recomputes `k_j` for a tabulated row from its `k_i` and `τ`.
    pub fn from_table(row: &Table3Row) -> Result<Self> {
        Self::infer(row.id.label(), row.k_i, row.tau, row.decay_mode)
    }

    pub fn is_negative(&self) -> bool {
        self.k_j < 0.0
    }
}

impl Tabular for DecayInferenceRow {
    fn headers() -> Vec<&'static str> {
        vec!["nuclide", "decay_mode", "k_i", "tau_s", "k_j"]
    }

    fn cells(&self) -> Vec<Cell> {
        vec![
            self.nuclide.clone().into(),
            self.decay_mode.token().into(),
            self.k_i.into(),
            self.tau.into(),
            self.k_j.into(),
        ]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum RangeLabel {
    /// Stable coefficients.
    Chi,
    /// All inferred coefficients.
    Psi,
    /// Coefficients inferred from β− emitters only.
    Omega,
    /// All computed coefficients.
    R1,
}

impl RangeLabel {
    pub fn token(self) -> &'static str {
        match self {
            RangeLabel::Chi => "chi",
            RangeLabel::Psi => "psi",
            RangeLabel::Omega => "omega",
            RangeLabel::R1 => "r1",
        }
    }
}

impl fmt::Display for RangeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// Closed interval `[lo, hi]` of coefficients, 1/s.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoefficientRange {
    pub label: RangeLabel,
    pub lo: f64,
    pub hi: f64,
}

impl CoefficientRange {
    pub fn spanning<I: IntoIterator<Item = f64>>(label: RangeLabel, values: I) -> Option<Self> {
        values.into_iter().fold(None, |acc, v| {
            Some(match acc {
                None => CoefficientRange { label, lo: v, hi: v },
                Some(r) => CoefficientRange {
                    label,
                    lo: r.lo.min(v),
                    hi: r.hi.max(v),
                },
            })
        })
    }

    pub fn contains(&self, value: f64) -> bool {
        self.lo <= value && value <= self.hi
    }

    pub fn contains_range(&self, other: &CoefficientRange) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }
}

/// Rows with a repeated nuclide label are counted once.
fn dedup(rows: &[DecayInferenceRow]) -> Vec<&DecayInferenceRow> {
    let mut seen = BTreeSet::new();
    rows.iter().filter(|r| seen.insert(r.nuclide.as_str())).collect()
}

/// ψ: span of all inferred `k_j`.
pub fn psi_range(rows: &[DecayInferenceRow]) -> Result<CoefficientRange> {
    CoefficientRange::spanning(RangeLabel::Psi, dedup(rows).into_iter().map(|r| r.k_j))
        .ok_or_else(|| Error::Empty("psi range needs at least one inference row".into()))
}

/// ω: span of `k_j` inferred from β− emitters.
pub fn omega_range(rows: &[DecayInferenceRow]) -> Result<CoefficientRange> {
    CoefficientRange::spanning(
        RangeLabel::Omega,
        dedup(rows)
            .into_iter()
            .filter(|r| r.decay_mode == DecayMode::BetaMinus)
            .map(|r| r.k_j),
    )
    .ok_or_else(|| Error::MissingSubset("omega range needs at least one beta_minus row".into()))
}

/// χ: span of the stable coefficients.
pub fn chi_range(stable_ks: &[EmissionCoefficient]) -> Result<CoefficientRange> {
    CoefficientRange::spanning(RangeLabel::Chi, stable_ks.iter().map(|c| c.k))
        .ok_or_else(|| Error::MissingSubset("chi range needs at least one stable coefficient".into()))
}

/// ψ, ω and χ, in that order.
pub fn coefficient_ranges(
    rows: &[DecayInferenceRow],
    stable_ks: &[EmissionCoefficient],
) -> Result<Vec<CoefficientRange>> {
    if rows.is_empty() {
        return Err(Error::Empty(
            "coefficient ranges need at least one inference row".into(),
        ));
    }
    Ok(vec![psi_range(rows)?, omega_range(rows)?, chi_range(stable_ks)?])
}

#[derive(Debug, Clone, PartialEq)]
pub struct Containment {
    pub name: String,
    pub value: f64,
    pub range: RangeLabel,
    pub lo: f64,
    pub hi: f64,
    pub contained: bool,
}

impl Tabular for Containment {
    fn headers() -> Vec<&'static str> {
        vec!["value_name", "value", "range", "lo", "hi", "contained"]
    }

    fn cells(&self) -> Vec<Cell> {
        vec![
            self.name.clone().into(),
            self.value.into(),
            self.range.token().into(),
            self.lo.into(),
            self.hi.into(),
            self.contained.into(),
        ]
    }
}

/// For every named value and every range, whether the value lies inside.
pub fn containment_report(ranges: &[CoefficientRange], values: &[(&str, f64)]) -> Vec<Containment> {
    values
        .iter()
        .flat_map(|&(name, value)| {
            ranges.iter().map(move |r| Containment {
                name: name.to_string(),
                value,
                range: r.label,
                lo: r.lo,
                hi: r.hi,
                contained: r.contains(value),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use approx::assert_relative_eq;

    use super::*;
    use crate::coefficient::Provenance;

    #[test]
    fn mass_ratio_cases() {
        assert_eq!(mass_ratio(3.0, 2.0, 0.02, 0.01, 0.0).unwrap(), 1.5);
        assert_eq!(mass_ratio(3.0, 2.0, 0.02, 0.02, 1e6).unwrap(), 1.5);
        let tau = 126.0;
        let k_i = 0.01910168;
        let k_j = k_i + 0.5f64.ln() / tau;
        assert_relative_eq!(mass_ratio(1.0, 1.0, k_i, k_j, tau).unwrap(), 0.5, max_relative = 1e-12);
        assert!(mass_ratio(0.0, 1.0, 0.0, 0.0, 1.0).is_err());
        assert!(mass_ratio(1.0, 1.0, 0.0, 0.0, -1.0).is_err());
    }

    #[test]
    fn inference_values() {
        assert!((infer_stable_k(0.01910168, 126.0).unwrap() - 0.01360051).abs() < 1e-6);
        let h3 = infer_stable_k(0.01891915, 3.815856e8).unwrap();
        assert!((h3 - 0.01891915).abs() < 1e-8);
        assert!((infer_stable_k(0.01943093, 153.0).unwrap() - 0.01490055).abs() < 1e-6);
    }

    #[test]
    fn inference_errors_and_negative_result() {
        assert!(infer_stable_k(0.02, 0.0).is_err());
        assert!(infer_stable_k(0.02, -5.0).is_err());
        assert!(infer_stable_k(0.0, 5.0).is_err());
        let row = DecayInferenceRow::infer("X-1", 0.02, 1.0, DecayMode::BetaPlus).unwrap();
        assert!(row.is_negative());
    }

    #[test]
    fn single_row_range() {
        let row = DecayInferenceRow::infer("O-15", 0.01910168, 126.0, DecayMode::BetaPlus).unwrap();
        let psi = psi_range(std::slice::from_ref(&row)).unwrap();
        assert_eq!(psi.lo, psi.hi);
        assert!(matches!(omega_range(&[row]), Err(Error::MissingSubset(_))));
    }

    #[test]
    fn ranges_need_rows_and_stable_values() {
        assert!(coefficient_ranges(&[], &[]).is_err());
        let row = DecayInferenceRow::infer("H-3", 0.0189, 3.8e8, DecayMode::BetaMinus).unwrap();
        assert!(matches!(
            coefficient_ranges(std::slice::from_ref(&row), &[]),
            Err(Error::MissingSubset(_))
        ));
        let stable = [EmissionCoefficient::new("He-4", 0.0315, Provenance::Fixture)];
        let ranges = coefficient_ranges(&[row], &stable).unwrap();
        let labels: Vec<_> = ranges.iter().map(|r| r.label).collect();
        assert_eq!(labels, vec![RangeLabel::Psi, RangeLabel::Omega, RangeLabel::Chi]);
    }

    #[test]
    fn closed_interval_containment() {
        let r = CoefficientRange {
            label: RangeLabel::Omega,
            lo: 0.01770958,
            hi: 0.0198447,
        };
        let report = containment_report(&[r], &[("k**", 0.01972), ("edge", 0.0198447), ("low", 0.01)]);
        let flags: Vec<_> = report.iter().map(|c| c.contained).collect();
        assert_eq!(flags, vec![true, true, false]);
    }
}
