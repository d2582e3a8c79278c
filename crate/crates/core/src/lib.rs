//! Nuclear binding energies and body dynamics from a mass-emission model.
//!
//! Nucleons are taken to emit mass-energy continuously at a rate `k`
//! proportional to their content. From measured binding energies the model
//! recovers `k` per nucleus, builds a modified binding-energy formula around
//! the stable mean of `k`, infers stable coefficients from half-lives and
//! derives force and conservation laws for emitting bodies.

pub mod coefficient;
pub mod constants;
pub mod dataset;
pub mod decay;
pub mod dynamics;
pub mod error;
pub mod fixtures;
pub mod identities;
pub mod nuclide;
pub mod report;
pub mod semf;

pub use coefficient::{
    coefficient_stats, geometry_factor, geometry_factor_with, select_max_mean_subset, CoefficientEstimate,
    CoefficientStats, EmissionCoefficient, GeometryFactor, Partition, Provenance, ValidityWarning,
};
pub use constants::{EmissionModel, GeometryConvention, LeadingConstant, PhysicalConstants};
pub use dataset::{load_nuclide_dataset, write_nuclide_dataset};
pub use decay::{
    coefficient_ranges, containment_report, infer_stable_k, CoefficientRange, DecayInferenceRow, RangeLabel,
};
pub use error::{Error, Result};
pub use fixtures::fixtures;
pub use nuclide::{DecayMode, Nuclide, NuclideId};
pub use report::{write_report, write_sections, write_table, Cell, ReportFormat, Table, Tabular};
pub use semf::{
    compare_models, BindingEnergyBreakdown, ComparisonInput, ComparisonRow, ComparisonSummary, K_STABLE_MEAN,
};
