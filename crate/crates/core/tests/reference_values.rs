//! Values frozen from an independent double-precision evaluation.

use approx::assert_relative_eq;
use nucleon_emission::decay::{chi_range, omega_range, psi_range};
use nucleon_emission::semf::tabulated_comparison_inputs;
use nucleon_emission::*;

#[test]
fn coefficients_from_binding_energies() {
    let printed = EmissionModel::default();
    let tabulated = printed.with_geometry(GeometryConvention::Tabulated);
    let cases = [
        (28.2937, 4, 2, 0.031572007737882844, 0.031572007737882844),
        (492.2, 56, 26, 0.020092783034965762, 0.020092783034965762),
        (1801.69485, 238, 92, 0.016987079028495018, 0.016987079028495018),
        (147.80, 19, 9, 0.020614896299543158, 0.0194022553407465),
    ];
    for (de, a, z, k_printed, k_tabulated) in cases {
        assert_relative_eq!(
            printed.emission_coefficient(de, a, z).unwrap().k,
            k_printed,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            tabulated.emission_coefficient(de, a, z).unwrap().k,
            k_tabulated,
            max_relative = 1e-12
        );
    }
    let literal = printed.with_leading(LeadingConstant::Literal01349);
    assert_relative_eq!(
        literal.emission_coefficient(28.2937, 4, 2).unwrap().k,
        0.03155532271695122,
        max_relative = 1e-12
    );
}

#[test]
fn modified_binding_energies() {
    let printed = EmissionModel::default();
    let tabulated = printed.with_geometry(GeometryConvention::Tabulated);
    let cases = [
        (4, 2, 27.87277303068927, 27.87277303068927),
        (31, 15, 263.4725994667728, 263.4725994667728),
        (56, 26, 484.6211554438382, 484.6211554438382),
        (19, 9, 142.35552715473764, 151.19202564365008),
        (2, 1, -16.76250860371385, -16.76250860371385),
        (238, 92, 2094.3097336348924, 2094.3097336348924),
    ];
    for (a, z, e_printed, e_tabulated) in cases {
        let p = printed.modified_binding_energy(a, z, K_STABLE_MEAN).unwrap().total;
        let t = tabulated.modified_binding_energy(a, z, K_STABLE_MEAN).unwrap().total;
        assert_relative_eq!(p, e_printed, max_relative = 1e-12);
        assert_relative_eq!(t, e_tabulated, max_relative = 1e-12);
    }
}

#[test]
fn tabulated_comparison_wins() {
    let (_, summary) = compare_models(&tabulated_comparison_inputs()).unwrap();
    assert_eq!(summary.n_rows, 55);
    assert_eq!(summary.wins, 38);
}

#[test]
fn inferred_ranges() {
    let rows: Vec<_> = fixtures()
        .table3
        .iter()
        .map(|r| DecayInferenceRow::from_table(r).unwrap())
        .collect();
    let psi = psi_range(&rows).unwrap();
    let omega = omega_range(&rows).unwrap();
    assert!((psi.lo - 0.01360051).abs() < 1e-6 && (psi.hi - 0.0198447).abs() < 1e-6);
    assert!((omega.lo - 0.01770958).abs() < 1e-6 && (omega.hi - 0.0198447).abs() < 1e-6);

    let stable: Vec<_> = fixtures()
        .table1
        .iter()
        .filter(|r| r.stable && r.id.a > 2)
        .map(|r| EmissionCoefficient::new(r.id.label(), r.k, Provenance::Fixture))
        .collect();
    assert_eq!(stable.len(), 53);
    let chi = chi_range(&stable).unwrap();
    assert_eq!((chi.lo, chi.hi), (0.0167848, 0.03153671));
    let mean = coefficient_stats(stable.iter().map(|c| c.k)).unwrap().mean;
    assert!((mean - 0.0197319).abs() < 1e-7);
}

#[test]
fn fixture_coefficient_summary() {
    let s = coefficient_stats(fixtures().table1.iter().map(|r| r.k)).unwrap();
    assert_eq!(s.count, 80);
    assert!((s.mean - 0.0194146).abs() < 1e-7);
    assert_eq!((s.min, s.max), (0.01397156, 0.03153671));
}
