use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub const OUT_DIR_ENV: &str = "NEMIT_OUT_DIR";

#[derive(Debug, Parser)]
#[command(
    name = "nemit",
    version,
    about = "Emission-coefficient model of nuclei: coefficients, binding energies, half-life inference and dynamics checks"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Default, Args)]
pub struct GlobalArgs {
    /// `key = value` configuration file; flags take precedence.
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,
    /// Report format: csv or json.
    #[arg(long, global = true)]
    pub format: Option<String>,
    /// Write one file per report section here instead of to stdout.
    #[arg(long, global = true, env = OUT_DIR_ENV, value_name = "DIR")]
    pub out_dir: Option<PathBuf>,
    /// Proton mass, u.
    #[arg(long, global = true)]
    pub m_p: Option<f64>,
    /// Neutron mass, u.
    #[arg(long, global = true)]
    pub m_n: Option<f64>,
    /// MeV per u.
    #[arg(long, global = true)]
    pub amu_to_mev: Option<f64>,
    /// Leading constant of the coefficient formula: exact-4pi or literal-01349.
    #[arg(long, global = true)]
    pub leading_constant: Option<String>,
    /// Geometry factor at A = 19: printed or tabulated.
    #[arg(long, global = true)]
    pub geometry: Option<String>,
    /// Coefficient in the volumetric term of the modified formula, 1/s.
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub k_star: Option<f64>,
    /// Seed for randomized checks.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FixtureArg {
    Appendix1,
    Appendix2,
    Appendix3,
}

#[derive(Debug, Clone, Args)]
#[group(multiple = false)]
pub struct Source {
    /// Compiled-in table to evaluate.
    #[arg(long)]
    pub fixture: Option<FixtureArg>,
    /// Nuclide CSV: symbol,z,a,binding_energy_mev,half_life_s,decay_mode.
    #[arg(long, value_name = "CSV")]
    pub dataset: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum CompareMode {
    /// Score the tabulated predictions.
    #[default]
    Table,
    /// Score predictions recomputed with the current configuration.
    Recompute,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emission coefficient of each nucleus from its binding energy.
    KCoeff {
        #[command(flatten)]
        source: Source,
    },
    /// Modified binding-energy formula, term by term.
    Binding {
        #[command(flatten)]
        source: Source,
    },
    /// Modified against original formula, scored on experimental energies.
    Compare {
        #[arg(long, value_enum, default_value_t = CompareMode::Table)]
        mode: CompareMode,
        /// Restrict to these nuclides, e.g. He-4 (repeatable).
        #[arg(long = "nuclide", value_name = "LABEL")]
        nuclides: Vec<String>,
        #[arg(long)]
        min_a: Option<u32>,
        #[arg(long)]
        max_a: Option<u32>,
    },
    /// Stable coefficients inferred from half-lives, and their ranges.
    InferStable,
    /// Randomized check of the dynamics identities.
    DynamicsCheck {
        /// Random configurations per identity.
        #[arg(long)]
        trials: Option<usize>,
    },
}
