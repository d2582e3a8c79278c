use std::collections::BTreeSet;
use std::fs::File;
use std::path::{Path, PathBuf};

use nucleon_emission::decay::coefficient_ranges;
use nucleon_emission::fixtures::{fixtures, Table1Row};
use nucleon_emission::identities::{identity_suite, IdentityCheck};
use nucleon_emission::report::{Cell, Table, Tabular};
use nucleon_emission::semf::tabulated_comparison_inputs;
use nucleon_emission::*;

use crate::cli::{CompareMode, FixtureArg, Source};
use crate::config::RunConfig;

/// Named tables produced by one command.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: &'static str,
    pub sections: Vec<(String, Table)>,
    /// Set when a check command found a value outside its bound.
    pub threshold_violated: bool,
}

impl Report {
    fn new(command: &'static str) -> Self {
        Self {
            command,
            sections: Vec::new(),
            threshold_violated: false,
        }
    }

    fn section(mut self, name: &str, table: Table) -> Self {
        self.sections.push((name.to_string(), table));
        self
    }

    /// Renders to stdout bytes, or writes `<command>_<section>.<ext>` files
    /// into `out_dir` and returns nothing.
    pub fn emit(&self, cfg: &RunConfig) -> Result<Option<Vec<u8>>> {
        match &cfg.out_dir {
            None => write_sections(&self.sections, cfg.format).map(Some),
            Some(dir) => {
                std::fs::create_dir_all(dir).map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?;
                for (name, table) in &self.sections {
                    let path = out_path(dir, self.command, name, cfg);
                    std::fs::write(&path, write_table(table, cfg.format)?)
                        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                }
                Ok(None)
            }
        }
    }
}

fn key_values(rows: Vec<(&str, Cell)>) -> Table {
    let mut t = Table::new(&["quantity", "value"]);
    for (k, v) in rows {
        t.push(vec![k.into(), v]);
    }
    t
}

/// One nucleus to evaluate, with whatever the source knows about it.
#[derive(Debug, Clone)]
struct Target {
    label: String,
    z: u32,
    a: u32,
    binding: Option<(f64, &'static str)>,
    stable: bool,
}

fn table1_stable(z: u32, a: u32) -> bool {
    fixtures().table1_row(z, a).is_some_and(|r| r.stable)
}

fn from_id(id: &NuclideId) -> Target {
    Target {
        label: id.label(),
        z: id.z,
        a: id.a,
        binding: fixtures()
            .binding_energy_source(id.z, id.a)
            .map(|(e, src)| (e, src.token())),
        stable: table1_stable(id.z, id.a),
    }
}

fn load_targets(source: &Source, default: FixtureArg) -> Result<Vec<Target>> {
    let fx = fixtures();
    let targets: Vec<Target> = if let Some(path) = &source.dataset {
        let file = File::open(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        load_nuclide_dataset(file)?
            .into_iter()
            .map(|n| Target {
                label: n.label(),
                z: n.z,
                a: n.a,
                binding: n.binding_energy_exp.map(|e| (e, "dataset")),
                stable: n.is_stable(),
            })
            .collect()
    } else {
        match source.fixture.unwrap_or(default) {
            FixtureArg::Appendix1 => fx
                .table1
                .iter()
                .map(|r| Target {
                    stable: r.stable,
                    ..from_id(&r.id)
                })
                .collect(),
            FixtureArg::Appendix2 => fx
                .table2
                .iter()
                .map(|r| Target {
                    binding: Some((r.de_exp, "appendix2")),
                    ..from_id(&r.id)
                })
                .collect(),
            FixtureArg::Appendix3 => {
                let mut seen = BTreeSet::new();
                fx.table3
                    .iter()
                    .filter(|r| seen.insert((r.id.z, r.id.a)))
                    .map(|r| from_id(&r.id))
                    .collect()
            }
        }
    };
    if targets.is_empty() {
        return Err(Error::Empty("no nuclides selected".into()));
    }
    Ok(targets)
}

fn relative(x: f64, reference: f64) -> f64 {
    (x - reference) / reference
}

fn median(values: &mut [f64]) -> Option<f64> {
    if values.is_empty() {
        return None;
    }
    values.sort_by(f64::total_cmp);
    let n = values.len();
    Some(if n % 2 == 1 {
        values[n / 2]
    } else {
        (values[n / 2 - 1] + values[n / 2]) / 2.0
    })
}

fn skipped_table(skipped: &[(String, String)]) -> Table {
    let mut t = Table::new(&["nuclide", "reason"]);
    for (label, reason) in skipped {
        t.push(vec![label.as_str().into(), reason.as_str().into()]);
    }
    t
}

fn stable_subset_mean(ks: &[(f64, bool, u32)]) -> Option<CoefficientStats> {
    coefficient_stats(ks.iter().filter(|(_, stable, a)| *stable && *a > 2).map(|(k, _, _)| *k)).ok()
}

pub fn k_coeff(source: &Source, cfg: &RunConfig) -> Result<Report> {
    let targets = load_targets(source, FixtureArg::Appendix1)?;
    let mut table = Table::new(&[
        "nuclide",
        "z",
        "a",
        "stable",
        "de_exp",
        "de_source",
        "g",
        "k",
        "k_table",
        "rel_dev",
        "warning",
    ]);
    let mut skipped = Vec::new();
    let mut ks = Vec::new();
    let mut tabulated_ks = Vec::new();
    let mut max_dev: Option<f64> = None;
    for t in &targets {
        let Some((de, src)) = t.binding else {
            skipped.push((t.label.clone(), "missing binding energy".to_string()));
            continue;
        };
        let est = match cfg.model.emission_coefficient(de, t.a, t.z) {
            Ok(est) => est,
            Err(e) => {
                skipped.push((t.label.clone(), e.to_string()));
                continue;
            }
        };
        let tabulated = fixtures().table1_row(t.z, t.a).map(|r: &Table1Row| r.k);
        let dev = tabulated.map(|k| relative(est.k, k));
        if let Some(d) = dev {
            max_dev = Some(max_dev.map_or(d.abs(), |m| m.max(d.abs())));
        }
        ks.push((est.k, t.stable, t.a));
        if let Some(k) = tabulated {
            tabulated_ks.push((k, t.stable, t.a));
        }
        table.push(vec![
            t.label.as_str().into(),
            t.z.into(),
            t.a.into(),
            t.stable.into(),
            de.into(),
            src.into(),
            est.geometry.value().into(),
            est.k.into(),
            tabulated.into(),
            dev.into(),
            est.warning.map(|w| w.token()).into(),
        ]);
    }
    if ks.is_empty() {
        return Err(Error::Empty("no nuclide has a usable binding energy".into()));
    }
    let all = coefficient_stats(ks.iter().map(|(k, _, _)| *k))?;
    let stable = stable_subset_mean(&ks);
    let table_all = coefficient_stats(tabulated_ks.iter().map(|(k, _, _)| *k)).ok();
    let table_stable = stable_subset_mean(&tabulated_ks);
    let summary = key_values(vec![
        ("rows", all.count.into()),
        ("skipped", skipped.len().into()),
        ("k_star_mean", all.mean.into()),
        ("k_min", all.min.into()),
        ("k_max", all.max.into()),
        ("k_double_star_mean", stable.map(|s| s.mean).into()),
        ("k_double_star_count", stable.map_or(0, |s| s.count).into()),
        ("k_table_star_mean", table_all.map(|s| s.mean).into()),
        ("k_table_double_star_mean", table_stable.map(|s| s.mean).into()),
        ("max_abs_rel_dev", max_dev.into()),
        ("leading_constant", cfg.model.leading.token().into()),
        ("geometry", cfg.model.geometry.token().into()),
    ]);
    Ok(Report::new("k-coeff")
        .section("coefficients", table)
        .section("summary", summary)
        .section("skipped", skipped_table(&skipped)))
}

pub fn binding(source: &Source, cfg: &RunConfig) -> Result<Report> {
    let targets = load_targets(source, FixtureArg::Appendix2)?;
    let mut table = Table::new(&[
        "nuclide",
        "z",
        "a",
        "de_exp",
        "volumetric",
        "s",
        "h",
        "y",
        "total",
        "de_table",
        "rel_dev",
        "validity_warning",
    ]);
    let mut skipped = Vec::new();
    let mut devs = Vec::new();
    for t in &targets {
        let b = match cfg.model.modified_binding_energy(t.a, t.z, cfg.k_star) {
            Ok(b) => b,
            Err(e) => {
                skipped.push((t.label.clone(), e.to_string()));
                continue;
            }
        };
        let tabulated = fixtures().table2_row(t.z, t.a).map(|r| r.de_modified);
        let dev = tabulated.map(|e| relative(b.total, e));
        if let Some(d) = dev {
            if t.a > 2 && t.a <= 50 {
                devs.push(d.abs());
            }
        }
        table.push(vec![
            t.label.as_str().into(),
            t.z.into(),
            t.a.into(),
            t.binding.map(|(e, _)| e).into(),
            b.volumetric.into(),
            b.s.into(),
            b.h.into(),
            b.y.into(),
            b.total.into(),
            tabulated.into(),
            dev.into(),
            b.validity_warning.into(),
        ]);
    }
    if table.rows.is_empty() {
        return Err(Error::Empty("no nuclide is inside the formula's domain".into()));
    }
    let max = devs
        .iter()
        .copied()
        .fold(None, |m: Option<f64>, d| Some(m.map_or(d, |m| m.max(d))));
    let compared = devs.len();
    let summary = key_values(vec![
        ("rows", table.rows.len().into()),
        ("skipped", skipped.len().into()),
        ("k_star", cfg.k_star.into()),
        ("compared_rows", compared.into()),
        ("median_abs_rel_dev", median(&mut devs).into()),
        ("max_abs_rel_dev", max.into()),
        ("geometry", cfg.model.geometry.token().into()),
    ]);
    Ok(Report::new("binding")
        .section("breakdown", table)
        .section("summary", summary)
        .section("skipped", skipped_table(&skipped)))
}

pub struct Selection<'a> {
    pub nuclides: &'a [String],
    pub min_a: Option<u32>,
    pub max_a: Option<u32>,
}

impl Selection<'_> {
    fn keeps(&self, label: &str, a: u32) -> bool {
        (self.nuclides.is_empty() || self.nuclides.iter().any(|n| n == label))
            && self.min_a.is_none_or(|m| a >= m)
            && self.max_a.is_none_or(|m| a <= m)
    }
}

pub fn compare(mode: CompareMode, selection: &Selection<'_>, cfg: &RunConfig) -> Result<Report> {
    let rows = fixtures().table2;
    let inputs: Vec<ComparisonInput> = match mode {
        CompareMode::Table => tabulated_comparison_inputs(),
        CompareMode::Recompute => rows
            .iter()
            .map(|r| {
                Ok(ComparisonInput {
                    nuclide: r.id.label(),
                    de_exp: r.de_exp,
                    de_modified: cfg.model.modified_binding_energy(r.id.a, r.id.z, cfg.k_star)?.total,
                    de_original: cfg.model.original_binding_energy(r.id.a, r.id.z, None)?.total,
                })
            })
            .collect::<Result<_>>()?,
    };
    let selected: Vec<ComparisonInput> = inputs
        .into_iter()
        .zip(rows)
        .filter(|(input, r)| selection.keeps(&input.nuclide, r.id.a))
        .map(|(input, _)| input)
        .collect();
    if selected.is_empty() {
        return Err(Error::Empty("selection matches no nuclide".into()));
    }
    let (out, s) = compare_models(&selected)?;
    let mode_token = match mode {
        CompareMode::Table => "table",
        CompareMode::Recompute => "recompute",
    };
    let summary = key_values(vec![
        ("mode", mode_token.into()),
        ("rows", s.n_rows.into()),
        ("wins", s.wins.into()),
        ("win_fraction", s.win_fraction.into()),
        ("mean_abs_err_modified", s.mean_abs_err_modified.into()),
        ("mean_abs_err_original", s.mean_abs_err_original.into()),
        ("rms_err_modified", s.rms_err_modified.into()),
        ("rms_err_original", s.rms_err_original.into()),
    ]);
    Ok(Report::new("compare")
        .section("rows", Table::from_rows(&out))
        .section("summary", summary))
}

/// Tabulated coefficients of stable nuclei heavier than A = 2.
pub fn stable_coefficients() -> Vec<EmissionCoefficient> {
    fixtures()
        .table1
        .iter()
        .filter(|r| r.stable && r.id.a > 2)
        .map(|r| EmissionCoefficient::new(r.id.label(), r.k, Provenance::Fixture))
        .collect()
}

pub fn infer_stable(cfg: &RunConfig) -> Result<Report> {
    let fx = fixtures();
    let mut table = Table::new(&["nuclide", "decay_mode", "k_i", "tau_s", "k_j", "k_j_table", "abs_diff"]);
    let mut rows = Vec::new();
    for r in fx.table3 {
        let row = DecayInferenceRow::from_table(r)?;
        let mut cells = row.cells();
        cells.push(r.k_j.into());
        cells.push((row.k_j - r.k_j).abs().into());
        table.push(cells);
        rows.push(row);
    }
    let stable = stable_coefficients();
    let ranges = coefficient_ranges(&rows, &stable)?;
    let mut range_table = Table::new(&["range", "lo", "hi"]);
    for r in &ranges {
        range_table.push(vec![r.label.token().into(), r.lo.into(), r.hi.into()]);
    }
    let r1 = CoefficientRange::spanning(RangeLabel::R1, fx.table1.iter().map(|r| r.k))
        .ok_or_else(|| Error::Empty("no tabulated coefficients".into()))?;
    range_table.push(vec![r1.label.token().into(), r1.lo.into(), r1.hi.into()]);

    let k_star = coefficient_stats(fx.table1.iter().map(|r| r.k))?.mean;
    let k_double_star = coefficient_stats(stable.iter().map(|c| c.k))?.mean;
    let containment = containment_report(
        &ranges,
        &[
            ("k_star", k_star),
            ("k_double_star", k_double_star),
            ("k_configured", cfg.k_star),
        ],
    );
    Ok(Report::new("infer-stable")
        .section("inference", table)
        .section("ranges", range_table)
        .section("containment", Table::from_rows(&containment)))
}

pub fn dynamics_check(trials: usize, cfg: &RunConfig) -> Result<Report> {
    let checks: Vec<IdentityCheck> = identity_suite(trials, cfg.seed, cfg.constants())?;
    let mut report = Report::new("dynamics-check").section("identities", Table::from_rows(&checks));
    report.threshold_violated = checks.iter().any(|c| !c.passed());
    Ok(report)
}

/// File a report section is written to under `--out-dir`.
pub fn out_path(dir: &Path, command: &str, section: &str, cfg: &RunConfig) -> PathBuf {
    dir.join(format!("{command}_{section}.{}", cfg.format.extension()))
}
