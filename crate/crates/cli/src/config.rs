//! Run configuration: defaults, then a `key = value` file, then flags.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use nucleon_emission::identities::{DEFAULT_SEED, DEFAULT_TRIALS};
use nucleon_emission::{
    EmissionModel, Error, GeometryConvention, LeadingConstant, PhysicalConstants, ReportFormat, Result, K_STABLE_MEAN,
};

use crate::cli::GlobalArgs;

pub const CONFIG_KEYS: [&str; 10] = [
    "m_p",
    "m_n",
    "amu_to_mev",
    "leading_constant",
    "geometry",
    "k_star",
    "seed",
    "trials",
    "format",
    "out_dir",
];

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub model: EmissionModel,
    /// 1/s
    pub k_star: f64,
    pub format: ReportFormat,
    pub out_dir: Option<PathBuf>,
    pub seed: u64,
    pub trials: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            model: EmissionModel::default(),
            k_star: K_STABLE_MEAN,
            format: ReportFormat::Csv,
            out_dir: None,
            seed: DEFAULT_SEED,
            trials: DEFAULT_TRIALS,
        }
    }
}

fn invalid(key: &str, reason: impl Into<String>) -> Error {
    Error::Validation {
        subject: key.to_string(),
        reason: reason.into(),
    }
}

fn parse<T: FromStr>(key: &str, value: &str) -> Result<T>
where
    T::Err: std::fmt::Display,
{
    value
        .parse()
        .map_err(|e: T::Err| invalid(key, format!("`{value}`: {e}")))
}

/// Reads `key = value` lines. Blank lines and lines starting with `#` are
/// ignored; unknown keys and repeated keys are errors.
pub fn parse_config_file(text: &str) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parse_err = |reason: String| Error::Parse {
            line: i as u64 + 1,
            column: "config".into(),
            reason,
        };
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| parse_err(format!("expected `key = value`, found `{line}`")))?;
        let (key, value) = (key.trim(), value.trim());
        if !CONFIG_KEYS.contains(&key) {
            return Err(parse_err(format!("unknown key `{key}`")));
        }
        if out.insert(key.to_string(), value.to_string()).is_some() {
            return Err(parse_err(format!("key `{key}` given twice")));
        }
    }
    Ok(out)
}

impl RunConfig {
    fn apply(&mut self, key: &str, value: &str) -> Result<()> {
        match key {
            "m_p" => self.model.constants.m_p = parse(key, value)?,
            "m_n" => self.model.constants.m_n = parse(key, value)?,
            "amu_to_mev" => self.model.constants.amu_to_mev = parse(key, value)?,
            "leading_constant" => self.model.leading = parse::<LeadingConstant>(key, value)?,
            "geometry" => self.model.geometry = parse::<GeometryConvention>(key, value)?,
            "k_star" => self.k_star = parse(key, value)?,
            "seed" => self.seed = parse(key, value)?,
            "trials" => self.trials = parse(key, value)?,
            "format" => self.format = value.parse()?,
            "out_dir" => self.out_dir = Some(PathBuf::from(value)),
            other => return Err(invalid(other, "unknown configuration key")),
        }
        Ok(())
    }

    /// Defaults, overridden by the config file, overridden by flags.
    pub fn resolve(args: &GlobalArgs) -> Result<Self> {
        let mut cfg = RunConfig::default();
        if let Some(path) = &args.config {
            for (k, v) in parse_config_file(&read(path)?)? {
                cfg.apply(&k, &v)?;
            }
        }
        let flags: [(&str, Option<String>); 9] = [
            ("m_p", args.m_p.map(|v| v.to_string())),
            ("m_n", args.m_n.map(|v| v.to_string())),
            ("amu_to_mev", args.amu_to_mev.map(|v| v.to_string())),
            ("leading_constant", args.leading_constant.clone()),
            ("geometry", args.geometry.clone()),
            ("k_star", args.k_star.map(|v| v.to_string())),
            ("seed", args.seed.map(|v| v.to_string())),
            ("format", args.format.clone()),
            ("out_dir", args.out_dir.as_ref().map(|p| p.display().to_string())),
        ];
        for (k, v) in flags {
            if let Some(v) = v {
                cfg.apply(k, &v)?;
            }
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        self.model.constants.validate()?;
        if !(self.k_star.is_finite() && self.k_star >= 0.0) {
            return Err(invalid(
                "k_star",
                format!("must be finite and >= 0, got {}", self.k_star),
            ));
        }
        if self.trials == 0 {
            return Err(invalid("trials", "must be >= 1"));
        }
        Ok(())
    }

    pub fn constants(&self) -> &PhysicalConstants {
        &self.model.constants
    }
}

pub fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}
