use std::path::Path;
use std::process::{Command, Output};

const HEADER: &str = "symbol,z,a,binding_energy_mev,half_life_s,decay_mode\n";

fn nemit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nemit"))
        .args(args)
        .env_remove("NEMIT_OUT_DIR")
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn section<'a>(text: &'a str, name: &str) -> Vec<&'a str> {
    let marker = format!("# {name}");
    text.lines()
        .skip_while(|l| *l != marker)
        .skip(2)
        .take_while(|l| !l.is_empty())
        .collect()
}

fn summary_value(text: &str, key: &str) -> String {
    section(text, "summary")
        .into_iter()
        .find_map(|l| l.strip_prefix(&format!("{key},")))
        .unwrap_or_else(|| panic!("no {key} in summary"))
        .to_string()
}

fn write_dataset(dir: &Path, body: &str) -> String {
    let path = dir.join("nuclides.csv");
    std::fs::write(&path, format!("{HEADER}{body}")).unwrap();
    path.display().to_string()
}

#[test]
fn k_coeff_fixture_has_every_row() {
    let out = nemit(&["k-coeff", "--fixture", "appendix1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(section(&text, "coefficients").len(), 80);
    let mean: f64 = summary_value(&text, "k_table_star_mean").parse().unwrap();
    assert!((mean - 0.01945).abs() < 2e-4);
}

#[test]
fn k_coeff_dataset_skips_missing_energies() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_dataset(
        dir.path(),
        "He,2,4,28.2937,,stable\nH,1,3,,3.815856e8,beta_minus\nH,1,1,0,,stable\n",
    );
    let text = stdout(&nemit(&["k-coeff", "--dataset", &path]));
    assert_eq!(section(&text, "coefficients").len(), 1);
    assert_eq!(summary_value(&text, "skipped"), "2");
    assert_eq!(section(&text, "skipped").len(), 2);
    assert!(section(&text, "coefficients")[0].starts_with("He-4,2,4,true,28.2937,dataset,3,0.031572,"));
}

#[test]
fn empty_dataset_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_dataset(dir.path(), "");
    let out = nemit(&["k-coeff", "--dataset", &path]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
}

#[test]
fn malformed_dataset_reports_line_and_column() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_dataset(dir.path(), "He,2,4,28.2937,,stable\nLi,x,7,,,\n");
    let out = nemit(&["binding", "--dataset", &path]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 3") && err.contains('z'), "{err}");
}

#[test]
fn binding_fixture_and_helium_anchor() {
    let text = stdout(&nemit(&["binding", "--fixture", "appendix2"]));
    let rows = section(&text, "breakdown");
    assert_eq!(rows.len(), 55);
    let he4 = rows.iter().find(|r| r.starts_with("He-4,")).unwrap();
    let total: f64 = he4.split(',').nth(8).unwrap().parse().unwrap();
    assert!(((total - 27.8039) / 27.8039).abs() < 0.015);
}

#[test]
fn zero_k_star_leaves_corrections() {
    let text = stdout(&nemit(&["binding", "--k-star", "0", "--format", "json"]));
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    for row in v["breakdown"].as_array().unwrap() {
        assert_eq!(row["volumetric"], 0.0);
        let sum = row["s"].as_f64().unwrap() + row["h"].as_f64().unwrap() + row["y"].as_f64().unwrap();
        // serde_json parses floats to within one ulp
        assert!((row["total"].as_f64().unwrap() - sum).abs() <= 1e-12);
    }
}

#[test]
fn compare_modes() {
    let text = stdout(&nemit(&["compare", "--mode", "table"]));
    assert_eq!(summary_value(&text, "win_fraction"), "0.690909");
    let out = nemit(&["compare", "--mode", "recompute", "--max-a", "50"]);
    assert!(out.status.success());
    assert_eq!(summary_value(&stdout(&out), "mode"), "recompute");
    let one = stdout(&nemit(&["compare", "--nuclide", "He-4"]));
    assert_eq!(summary_value(&one, "rows"), "1");
    let none = nemit(&["compare", "--min-a", "300"]);
    assert_eq!(none.status.code(), Some(1));
}

#[test]
fn infer_stable_ranges_and_containment() {
    let text = stdout(&nemit(&["infer-stable"]));
    assert_eq!(section(&text, "inference").len(), 14);
    let ranges = section(&text, "ranges");
    assert!(ranges.contains(&"psi,0.0136005,0.0198447"));
    assert!(ranges.contains(&"omega,0.0177096,0.0198447"));
    let containment = section(&text, "containment");
    assert!(containment
        .iter()
        .any(|l| l.starts_with("k_double_star,") && l.contains(",omega,") && l.ends_with(",true")));
}

#[test]
fn dynamics_check_passes_and_is_seeded() {
    let a = nemit(&["dynamics-check", "--trials", "50", "--seed", "3"]);
    let b = nemit(&["dynamics-check", "--trials", "50", "--seed", "3"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    for name in ["energy_conservation", "impulse_conservation"] {
        let line = section(&text, "identities")
            .into_iter()
            .find(|l| l.starts_with(name))
            .unwrap();
        assert!(line.ends_with(",true"));
    }
    let c = nemit(&["dynamics-check", "--trials", "50", "--seed", "4"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn out_dir_from_flag_and_environment() {
    let dir = tempfile::tempdir().unwrap();
    let out = nemit(&[
        "infer-stable",
        "--out-dir",
        dir.path().to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert!(out.status.success() && out.stdout.is_empty());
    for section in ["inference", "ranges", "containment"] {
        let path = dir.path().join(format!("infer-stable_{section}.json"));
        let v: serde_json::Value = serde_json::from_slice(&std::fs::read(path).unwrap()).unwrap();
        assert!(v.is_array());
    }
    let env_dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_nemit"))
        .args(["compare"])
        .env("NEMIT_OUT_DIR", env_dir.path())
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(env_dir.path().join("compare_summary.csv").exists());
}

#[test]
fn config_file_and_flag_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let conf = dir.path().join("run.conf");
    std::fs::write(
        &conf,
        "# literal constant\nleading_constant = literal-01349\nk_star = 0.02\n",
    )
    .unwrap();
    let conf = conf.to_str().unwrap();
    let text = stdout(&nemit(&["k-coeff", "--config", conf]));
    assert_eq!(summary_value(&text, "leading_constant"), "literal-01349");
    let text = stdout(&nemit(&["binding", "--config", conf, "--k-star", "0.01972"]));
    assert_eq!(summary_value(&text, "k_star"), "0.01972");
    std::fs::write(dir.path().join("bad.conf"), "speed = 3\n").unwrap();
    let out = nemit(&["compare", "--config", dir.path().join("bad.conf").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn invalid_overrides_exit_one() {
    assert_eq!(nemit(&["k-coeff", "--m-p", "-1"]).status.code(), Some(1));
    assert_eq!(nemit(&["binding", "--k-star", "-0.1"]).status.code(), Some(1));
    assert_eq!(nemit(&["binding", "--format", "xml"]).status.code(), Some(1));
    assert_eq!(nemit(&["dynamics-check", "--trials", "0"]).status.code(), Some(1));
    assert_eq!(nemit(&["no-such-command"]).status.code(), Some(1));
    assert_eq!(nemit(&["--help"]).status.code(), Some(0));
}

#[test]
fn manual_page_covers_every_command_and_flag() {
    use clap::CommandFactory;
    let page = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/man/nemit.1")).unwrap();
    let page = page.replace("\\-", "-");
    let root = nucleon_emission_cli::cli::Cli::command();
    let mut missing = Vec::new();
    for cmd in std::iter::once(&root).chain(root.get_subcommands()) {
        if cmd.get_name() != "nemit" && !page.contains(cmd.get_name()) {
            missing.push(cmd.get_name().to_string());
        }
        for arg in cmd.get_arguments() {
            if let Some(long) = arg.get_long() {
                if !["help", "version"].contains(&long) && !page.contains(&format!("--{long}")) {
                    missing.push(format!("--{long}"));
                }
            }
        }
    }
    assert!(missing.is_empty(), "undocumented: {missing:?}");
    assert!(page.contains(nucleon_emission_cli::cli::OUT_DIR_ENV));
}
