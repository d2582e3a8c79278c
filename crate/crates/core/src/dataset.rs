//! CSV ingestion of nuclide datasets.
//!
//! Header: `symbol,z,a,binding_energy_mev,half_life_s,decay_mode`.
//! Empty optional cells mean the property is unknown.

use std::collections::HashMap;
use std::io::Read;

use crate::error::{Error, Result};
use crate::nuclide::{DecayMode, Nuclide};

pub const DATASET_HEADER: [&str; 6] = ["symbol", "z", "a", "binding_energy_mev", "half_life_s", "decay_mode"];

/// Parses a nuclide dataset, preserving file order.
pub fn load_nuclide_dataset<R: Read>(source: R) -> Result<Vec<Nuclide>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(source);

    let headers = reader.headers().map_err(|e| csv_error(e, "header"))?.clone();
    let found: Vec<&str> = headers.iter().collect();
    if found != DATASET_HEADER {
        return Err(Error::Parse {
            line: 1,
            column: "header".to_string(),
            reason: format!("expected `{}`, found `{}`", DATASET_HEADER.join(","), found.join(",")),
        });
    }

    let mut out = Vec::new();
    let mut seen: HashMap<(u32, u32), u64> = HashMap::new();
    for record in reader.records() {
        let record = record.map_err(|e| csv_error(e, "row"))?;
        let line = record.position().map_or(0, |p| p.line());
        let field = |i: usize| record.get(i).unwrap_or("");
        let parse_err = |col: usize, reason: String| Error::Parse {
            line,
            column: DATASET_HEADER[col].to_string(),
            reason,
        };

        let symbol = field(0);
        if symbol.is_empty() {
            return Err(parse_err(0, "symbol is required".into()));
        }
        let z: u32 = field(1)
            .parse()
            .map_err(|e| parse_err(1, format!("`{}`: {e}", field(1))))?;
        let a: u32 = field(2)
            .parse()
            .map_err(|e| parse_err(2, format!("`{}`: {e}", field(2))))?;
        let binding_energy_exp = optional_f64(field(3)).map_err(|r| parse_err(3, r))?;
        let half_life = optional_f64(field(4)).map_err(|r| parse_err(4, r))?;
        let decay_mode = match field(5) {
            "" => None,
            s => Some(s.parse::<DecayMode>().map_err(|e| parse_err(5, e.to_string()))?),
        };

        let nuclide = Nuclide {
            symbol: symbol.to_string(),
            z,
            a,
            binding_energy_exp,
            half_life,
            decay_mode,
        };
        nuclide.validate()?;
        if seen.insert((z, a), line).is_some() {
            return Err(Error::DuplicateNuclide { z, a, line });
        }
        out.push(nuclide);
    }
    Ok(out)
}

/// Serializes nuclides in the ingestion format. Floats use the shortest
/// round-tripping representation so that re-loading is lossless.
pub fn write_nuclide_dataset(nuclides: &[Nuclide]) -> Result<Vec<u8>> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    let io = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(DATASET_HEADER).map_err(io)?;
    for n in nuclides {
        let opt = |v: Option<f64>| v.map(|x| format!("{x:?}")).unwrap_or_default();
        w.write_record([
            n.symbol.clone(),
            n.z.to_string(),
            n.a.to_string(),
            opt(n.binding_energy_exp),
            opt(n.half_life),
            n.decay_mode.map(|m| m.token().to_string()).unwrap_or_default(),
        ])
        .map_err(io)?;
    }
    w.into_inner().map_err(|e| Error::Io(e.to_string()))
}

fn optional_f64(s: &str) -> std::result::Result<Option<f64>, String> {
    if s.is_empty() {
        return Ok(None);
    }
    let v: f64 = s.parse().map_err(|e| format!("`{s}`: {e}"))?;
    if !v.is_finite() {
        return Err(format!("`{s}` is not a finite number"));
    }
    Ok(Some(v))
}

fn csv_error(e: csv::Error, what: &str) -> Error {
    let line = e.position().map_or(0, |p| p.line());
    Error::Parse {
        line,
        column: what.to_string(),
        reason: e.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const HEADER: &str = "symbol,z,a,binding_energy_mev,half_life_s,decay_mode\n";

    fn load(body: &str) -> Result<Vec<Nuclide>> {
        load_nuclide_dataset(format!("{HEADER}{body}").as_bytes())
    }

    #[test]
    fn stable_helium() {
        let n = load("He,2,4,28.2937,,stable\n").unwrap();
        assert_eq!(n.len(), 1);
        assert_eq!((n[0].z, n[0].a), (2, 4));
        assert_eq!(n[0].binding_energy_exp, Some(28.2937));
        assert_eq!(n[0].half_life, None);
        assert!(n[0].is_stable());
    }

    #[test]
    fn tritium_half_life() {
        let n = load("H,1,3,,3.815856e8,beta_minus\n").unwrap();
        assert_eq!(n[0].half_life, Some(3.815856e8));
        assert_eq!(n[0].binding_energy_exp, None);
        assert_eq!(n[0].decay_mode, Some(DecayMode::BetaMinus));
    }

    #[test]
    fn header_only_is_empty() {
        assert!(load("").unwrap().is_empty());
    }

    #[test]
    fn malformed_row_names_line_and_column() {
        let err = load("He,2,4,28.2937,,stable\nLi,three,6,,,\n").unwrap_err();
        match err {
            Error::Parse { line, column, .. } => {
                assert_eq!(line, 3);
                assert_eq!(column, "z");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn bad_decay_mode_column() {
        let err = load("He,2,4,,,gamma\n").unwrap_err();
        assert!(matches!(err, Error::Parse { ref column, .. } if column == "decay_mode"));
    }

    #[test]
    fn z_above_a_is_validation_error() {
        let err = load("X,5,4,,,\n").unwrap_err();
        assert!(matches!(err, Error::Validation { ref subject, .. } if subject == "X-4"));
    }

    #[test]
    fn duplicates_rejected() {
        let err = load("He,2,4,,,\nHe,2,4,,,\n").unwrap_err();
        assert_eq!(err, Error::DuplicateNuclide { z: 2, a: 4, line: 3 });
    }

    #[test]
    fn wrong_header_rejected() {
        let err = load_nuclide_dataset("sym,z,a\nHe,2,4\n".as_bytes()).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
    }

    #[test]
    fn writer_emits_header() {
        let out = write_nuclide_dataset(&[]).unwrap();
        assert_eq!(String::from_utf8(out).unwrap(), HEADER);
    }
}
