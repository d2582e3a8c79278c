//! Modified semi-empirical binding-energy formula.
//!
//! The volumetric summand of the classic formula is replaced by the
//! emission-coefficient term
//! `amu_to_mev · g(A) · k** / (4π) · [n_p·m_p + (A − n_p)·m_n]`;
//! the asymmetry/Coulomb (`s`), surface (`h`) and pairing (`y`) terms are
//! kept. All terms are in MeV with the coefficients used as written.

use crate::coefficient::{check_nucleus, geometry_factor_with};
use crate::constants::EmissionModel;
use crate::error::{domain, Error, Result};
use crate::fixtures::fixtures;
use crate::report::{Cell, Tabular};

/// Mean coefficient over the stable nuclides, the default `k_star`.
pub const K_STABLE_MEAN: f64 = 0.01972;

const PAIRING: f64 = 33.517;

/// Asymmetry and Coulomb corrections:
/// `s = −0.083·(A/2 − n_p)²/A − 627e−6·n_p(n_p − 1)/A^(1/3)`.
pub fn term_s(a: u32, n_p: u32) -> Result<f64> {
    check_terms_domain(a, n_p)?;
    let (af, zf) = (f64::from(a), f64::from(n_p));
    let asym = -0.083 * (af / 2.0 - zf).powi(2) / af;
    let coulomb = -627e-6 * zf * (zf - 1.0) / af.cbrt();
    Ok(asym + coulomb)
}

/// Surface correction `h = 0.14·A^(2/3) − 81e−5·n_p`.
pub fn term_h(a: u32, n_p: u32) -> Result<f64> {
    check_terms_domain(a, n_p)?;
    let af = f64::from(a);
    Ok(0.14 * af.cbrt().powi(2) - 81e-5 * f64::from(n_p))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    OddMass,
    EvenEven,
    OddOdd,
}

impl Parity {
    pub fn of(a: u32, n_p: u32) -> Self {
        let n = a - n_p;
        if a % 2 == 1 {
            Parity::OddMass
        } else if n_p.is_multiple_of(2) && n.is_multiple_of(2) {
            Parity::EvenEven
        } else {
            Parity::OddOdd
        }
    }
}

/// Pairing correction: 0 for odd A, `33.517/A^(3/4) − 2` for even-even and
/// `−33.517/A^(3/4)` for odd-odd nuclei.
pub fn term_y(a: u32, n_p: u32) -> Result<f64> {
    check_terms_domain(a, n_p)?;
    let scale = PAIRING / f64::from(a).powf(0.75);
    Ok(match Parity::of(a, n_p) {
        Parity::OddMass => 0.0,
        Parity::EvenEven => scale - 2.0,
        Parity::OddOdd => -scale,
    })
}

fn check_terms_domain(a: u32, n_p: u32) -> Result<()> {
    if a < 1 {
        return Err(domain("mass number must be >= 1"));
    }
    check_nucleus(a, n_p)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VolumetricSource {
    /// Emission-coefficient term with a given `k_star`.
    EmissionTerm,
    /// `a_V · [n_p·m_p + (A − n_p)·m_n]` with a supplied coefficient.
    Coefficient,
    /// Implied by a tabulated original-formula total.
    Tabulated,
}

/// Summands of a binding-energy estimate, MeV.
///
/// `total` is always `volumetric + s + h + y`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BindingEnergyBreakdown {
    pub a: u32,
    pub n_p: u32,
    pub volumetric: f64,
    pub s: f64,
    pub h: f64,
    pub y: f64,
    pub total: f64,
    pub source: VolumetricSource,
    pub validity_warning: bool,
}

impl BindingEnergyBreakdown {
    fn assemble(a: u32, n_p: u32, volumetric: f64, source: VolumetricSource) -> Result<Self> {
        let (s, h, y) = (term_s(a, n_p)?, term_h(a, n_p)?, term_y(a, n_p)?);
        Ok(Self {
            a,
            n_p,
            volumetric,
            s,
            h,
            y,
            total: volumetric + s + h + y,
            source,
            validity_warning: !(a > 2 && a < 50),
        })
    }
}

fn check_model_domain(a: u32, n_p: u32) -> Result<()> {
    if a < 2 {
        return Err(domain(format!("binding-energy formula needs A >= 2, got {a}")));
    }
    check_nucleus(a, n_p)
}

impl EmissionModel {
    /// Binding energy with the emission-coefficient volumetric term.
    ///
    /// `k_star = 0` is accepted and leaves only `s + h + y`.
    pub fn modified_binding_energy(&self, a: u32, n_p: u32, k_star: f64) -> Result<BindingEnergyBreakdown> {
        check_model_domain(a, n_p)?;
        if !(k_star.is_finite() && k_star >= 0.0) {
            return Err(domain(format!("k_star must be finite and >= 0, got {k_star}")));
        }
        let g = geometry_factor_with(a, self.geometry)?;
        let volumetric = k_star * g.value() * self.constants.nucleon_mass_sum(a, n_p) / self.leading_value();
        BindingEnergyBreakdown::assemble(a, n_p, volumetric, VolumetricSource::EmissionTerm)
    }

    /// Binding energy with the original formula's volumetric term.
    ///
    /// The original volumetric coefficient is not known, so either pass
    /// `a_v` (MeV per u of free-nucleon mass) or leave it `None` to fall back
    /// to the tabulated original-formula value for this nuclide.
    pub fn original_binding_energy(&self, a: u32, n_p: u32, a_v: Option<f64>) -> Result<BindingEnergyBreakdown> {
        check_model_domain(a, n_p)?;
        match a_v {
            Some(a_v) => {
                if !a_v.is_finite() {
                    return Err(domain(format!("a_V must be finite, got {a_v}")));
                }
                let volumetric = a_v * self.constants.nucleon_mass_sum(a, n_p);
                BindingEnergyBreakdown::assemble(a, n_p, volumetric, VolumetricSource::Coefficient)
            }
            None => {
                let row = fixtures()
                    .table2_row(n_p, a)
                    .ok_or_else(|| Error::Underdetermined(format!("Z={n_p} A={a}")))?;
                let (s, h, y) = (term_s(a, n_p)?, term_h(a, n_p)?, term_y(a, n_p)?);
                let volumetric = row.de_original - (s + h + y);
                BindingEnergyBreakdown::assemble(a, n_p, volumetric, VolumetricSource::Tabulated)
            }
        }
    }
}

/// Experimental value and the two model predictions for one nuclide.
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonInput {
    pub nuclide: String,
    pub de_exp: f64,
    pub de_modified: f64,
    pub de_original: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonRow {
    pub nuclide: String,
    pub de_exp: f64,
    pub de_modified: f64,
    pub de_original: f64,
    pub modified_wins: bool,
    pub abs_err_modified: f64,
    pub abs_err_original: f64,
}

impl Tabular for ComparisonRow {
    fn headers() -> Vec<&'static str> {
        vec![
            "nuclide",
            "de_exp",
            "de_modified",
            "de_original",
            "modified_wins",
            "abs_err_modified",
            "abs_err_original",
        ]
    }

    fn cells(&self) -> Vec<Cell> {
        vec![
            self.nuclide.clone().into(),
            self.de_exp.into(),
            self.de_modified.into(),
            self.de_original.into(),
            self.modified_wins.into(),
            self.abs_err_modified.into(),
            self.abs_err_original.into(),
        ]
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComparisonSummary {
    pub n_rows: usize,
    pub wins: usize,
    pub win_fraction: f64,
    pub mean_abs_err_modified: f64,
    pub mean_abs_err_original: f64,
    pub rms_err_modified: f64,
    pub rms_err_original: f64,
}

/// Scores the modified formula against the original one, row by row.
///
/// A row counts as a win when the modified prediction is at least as close
/// to experiment as the original one.
pub fn compare_models(rows: &[ComparisonInput]) -> Result<(Vec<ComparisonRow>, ComparisonSummary)> {
    if rows.is_empty() {
        return Err(Error::Empty("model comparison needs at least one row".into()));
    }
    let mut out = Vec::with_capacity(rows.len());
    for r in rows {
        if ![r.de_exp, r.de_modified, r.de_original].iter().all(|v| v.is_finite()) {
            return Err(domain(format!("non-finite energy in row {}", r.nuclide)));
        }
        let abs_err_modified = (r.de_exp - r.de_modified).abs();
        let abs_err_original = (r.de_exp - r.de_original).abs();
        out.push(ComparisonRow {
            nuclide: r.nuclide.clone(),
            de_exp: r.de_exp,
            de_modified: r.de_modified,
            de_original: r.de_original,
            modified_wins: abs_err_modified <= abs_err_original,
            abs_err_modified,
            abs_err_original,
        });
    }
    let n = out.len() as f64;
    let wins = out.iter().filter(|r| r.modified_wins).count();
    let mean = |f: fn(&ComparisonRow) -> f64| out.iter().map(f).sum::<f64>() / n;
    let summary = ComparisonSummary {
        n_rows: out.len(),
        wins,
        win_fraction: wins as f64 / n,
        mean_abs_err_modified: mean(|r| r.abs_err_modified),
        mean_abs_err_original: mean(|r| r.abs_err_original),
        rms_err_modified: mean(|r| r.abs_err_modified.powi(2)).sqrt(),
        rms_err_original: mean(|r| r.abs_err_original.powi(2)).sqrt(),
    };
    Ok((out, summary))
}

/// Comparison inputs straight from the tabulated values.
pub fn tabulated_comparison_inputs() -> Vec<ComparisonInput> {
    fixtures()
        .table2
        .iter()
        .map(|r| ComparisonInput {
            nuclide: r.id.label(),
            de_exp: r.de_exp,
            de_modified: r.de_modified,
            de_original: r.de_original,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use approx::assert_relative_eq;

    use super::*;

    #[test]
    fn s_term_values() {
        // -627e-6 * 2 / 4^(1/3)
        let expected = -627e-6 * 2.0 / 4f64.cbrt();
        assert_relative_eq!(term_s(4, 2).unwrap(), expected, max_relative = 1e-15);
        assert_relative_eq!(term_s(4, 2).unwrap(), -7.90e-4, max_relative = 1e-3);
        assert_eq!(term_s(2, 1).unwrap(), 0.0);
        assert_relative_eq!(term_s(56, 26).unwrap(), -0.1125, max_relative = 1e-3);
    }

    #[test]
    fn h_term_values() {
        assert_relative_eq!(term_h(4, 2).unwrap(), 0.351158, max_relative = 1e-4);
        assert_relative_eq!(term_h(1, 1).unwrap(), 0.13919, max_relative = 1e-12);
        assert_relative_eq!(term_h(12, 6).unwrap(), 0.7289, max_relative = 1e-4);
    }

    #[test]
    fn y_term_branches() {
        assert_eq!(term_y(13, 6).unwrap(), 0.0);
        assert_relative_eq!(term_y(4, 2).unwrap(), 9.85005, max_relative = 1e-4);
        assert_relative_eq!(term_y(2, 1).unwrap(), -19.9293, max_relative = 1e-4);
    }

    #[test]
    fn term_domain_errors() {
        assert!(term_s(4, 0).is_err());
        assert!(term_h(4, 5).is_err());
        assert!(term_y(0, 0).is_err());
    }

    #[test]
    fn modified_spot_values() {
        let m = EmissionModel::default();
        for (a, z, printed) in [(4, 2, 27.8039), (31, 15, 262.898), (56, 26, 482.7249)] {
            let b = m.modified_binding_energy(a, z, K_STABLE_MEAN).unwrap();
            assert_relative_eq!(b.total, printed, max_relative = 0.015);
            assert_eq!(b.total, b.volumetric + b.s + b.h + b.y);
        }
    }

    #[test]
    fn modified_validity_warning() {
        let m = EmissionModel::default();
        assert!(m.modified_binding_energy(2, 1, K_STABLE_MEAN).unwrap().validity_warning);
        assert!(!m.modified_binding_energy(4, 2, K_STABLE_MEAN).unwrap().validity_warning);
        assert!(
            m.modified_binding_energy(56, 26, K_STABLE_MEAN)
                .unwrap()
                .validity_warning
        );
        assert!(m.modified_binding_energy(1, 1, K_STABLE_MEAN).is_err());
        assert!(m.modified_binding_energy(4, 2, -0.1).is_err());
    }

    #[test]
    fn zero_k_star_leaves_corrections() {
        let b = EmissionModel::default().modified_binding_energy(12, 6, 0.0).unwrap();
        assert_eq!(b.volumetric, 0.0);
        assert_eq!(b.total, b.s + b.h + b.y);
    }

    #[test]
    fn original_with_fixture_fallback() {
        let m = EmissionModel::default();
        assert_relative_eq!(
            m.original_binding_energy(4, 2, None).unwrap().total,
            30.17239,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            m.original_binding_energy(12, 6, None).unwrap().total,
            92.88525,
            max_relative = 1e-12
        );
        assert!(matches!(
            m.original_binding_energy(100, 40, None),
            Err(Error::Underdetermined(_))
        ));
    }

    #[test]
    fn original_coincides_with_modified() {
        let m = EmissionModel::default();
        let modified = m.modified_binding_energy(27, 13, K_STABLE_MEAN).unwrap();
        let a_v = modified.volumetric / m.constants.nucleon_mass_sum(27, 13);
        let original = m.original_binding_energy(27, 13, Some(a_v)).unwrap();
        assert_relative_eq!(original.total, modified.total, max_relative = 1e-14);
    }

    fn input(exp: f64, modified: f64, original: f64) -> ComparisonInput {
        ComparisonInput {
            nuclide: "X".into(),
            de_exp: exp,
            de_modified: modified,
            de_original: original,
        }
    }

    #[test]
    fn comparison_counts() {
        let (_, s) = compare_models(&[input(10.0, 10.0, 11.0), input(20.0, 20.0, 19.0)]).unwrap();
        assert_eq!(s.win_fraction, 1.0);
        let (rows, s) = compare_models(&[input(10.0, 10.5, 11.0), input(20.0, 22.0, 21.0)]).unwrap();
        assert_eq!(s.win_fraction, 0.5);
        assert!(rows[0].modified_wins && !rows[1].modified_wins);
        assert!(compare_models(&[]).is_err());
        assert!(compare_models(&[input(f64::NAN, 1.0, 1.0)]).is_err());
    }

    #[test]
    fn comparison_error_metrics() {
        let (_, s) = compare_models(&[input(10.0, 11.0, 13.0), input(10.0, 7.0, 10.0)]).unwrap();
        assert_eq!(s.mean_abs_err_modified, 2.0);
        assert_eq!(s.mean_abs_err_original, 1.5);
        assert_relative_eq!(s.rms_err_modified, 5f64.sqrt(), max_relative = 1e-15);
        assert_relative_eq!(s.rms_err_original, 4.5f64.sqrt(), max_relative = 1e-15);
    }
}
