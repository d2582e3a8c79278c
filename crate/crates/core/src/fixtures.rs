//! Compiled-in transcription of the three published tables.
//!
//! Values are stored exactly as printed (decimal commas converted to
//! points). Known printing anomalies are kept and marked rather than
//! corrected:
//!
//! * table 2 prints the Si-29 row twice under index 26; it is stored once.
//! * table 2 row 41 (Ti-45) repeats row 43's experimental energy and is
//!   flagged `suspect`.
//! * table 3 rows 6 and 13 are the same F-18 entry; both are kept.
//!
//! The `stable` flag on table 1 marks stable or primordial (K-40, U-238)
//! nuclides from standard nuclear data; the tables themselves only mark
//! stability by shading.

use crate::error::{Error, Result};
use crate::nuclide::{DecayMode, NuclideId};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Table1Row {
    pub index: u32,
    pub id: NuclideId,
    /// Emission coefficient, 1/s.
    pub k: f64,
    pub stable: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Table2Row {
    pub index: u32,
    pub id: NuclideId,
    /// Experimental binding energy, MeV.
    pub de_exp: f64,
    /// Modified-formula prediction, MeV.
    pub de_modified: f64,
    /// Original-formula prediction, MeV.
    pub de_original: f64,
    pub suspect: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Table3Row {
    pub index: u32,
    pub id: NuclideId,
    /// Coefficient of the radioactive nuclide, 1/s.
    pub k_i: f64,
    /// Half-life, s.
    pub tau: f64,
    /// Inferred coefficient of the stable reference, 1/s.
    pub k_j: f64,
    pub decay_mode: DecayMode,
}

/// Binding energy for a table-1 nuclide that has no table-2 entry.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExternalBindingEnergy {
    pub id: NuclideId,
    /// Total binding energy, MeV.
    pub binding_energy: f64,
}

/// Provenance of [`EXTERNAL_BINDING_ENERGIES`].
pub const EXTERNAL_SOURCE: &str = "AME2020 atomic mass evaluation, total binding energy rounded to 0.01 MeV";

#[derive(Debug, Clone, Copy)]
pub struct AppendixFixtures {
    pub table1: &'static [Table1Row],
    pub table2: &'static [Table2Row],
    pub table3: &'static [Table3Row],
}

impl AppendixFixtures {
    pub fn table1_row(&self, z: u32, a: u32) -> Option<&'static Table1Row> {
        self.table1.iter().find(|r| r.id.z == z && r.id.a == a)
    }

    pub fn table2_row(&self, z: u32, a: u32) -> Option<&'static Table2Row> {
        self.table2.iter().find(|r| r.id.z == z && r.id.a == a)
    }

    /// Experimental binding energy used to recompute a table-1 coefficient:
    /// the table-2 value when present, otherwise the external value.
    pub fn binding_energy_source(&self, z: u32, a: u32) -> Option<(f64, BindingSource)> {
        if let Some(row) = self.table2_row(z, a) {
            return Some((row.de_exp, BindingSource::Table2));
        }
        EXTERNAL_BINDING_ENERGIES
            .iter()
            .find(|e| e.id.z == z && e.id.a == a)
            .map(|e| (e.binding_energy, BindingSource::External))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BindingSource {
    Table2,
    External,
}

impl BindingSource {
    pub fn token(self) -> &'static str {
        match self {
            BindingSource::Table2 => "appendix2",
            BindingSource::External => "external",
        }
    }
}

pub fn fixtures() -> AppendixFixtures {
    AppendixFixtures {
        table1: &TABLE1,
        table2: &TABLE2,
        table3: &TABLE3,
    }
}

/// Selector for one of the compiled-in tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FixtureTable {
    Appendix1,
    Appendix2,
    Appendix3,
}

impl std::str::FromStr for FixtureTable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "appendix1" => Ok(Self::Appendix1),
            "appendix2" => Ok(Self::Appendix2),
            "appendix3" => Ok(Self::Appendix3),
            other => Err(Error::Validation {
                subject: "fixture".to_string(),
                reason: format!("unknown fixture `{other}` (expected appendix1, appendix2 or appendix3)"),
            }),
        }
    }
}

const fn t1(index: u32, symbol: &'static str, z: u32, a: u32, k: f64, stable: bool) -> Table1Row {
    Table1Row {
        index,
        id: NuclideId::new(symbol, z, a),
        k,
        stable,
    }
}

#[allow(clippy::too_many_arguments)]
const fn t2(
    index: u32,
    symbol: &'static str,
    z: u32,
    a: u32,
    de_exp: f64,
    de_modified: f64,
    de_original: f64,
    suspect: bool,
) -> Table2Row {
    Table2Row {
        index,
        id: NuclideId::new(symbol, z, a),
        de_exp,
        de_modified,
        de_original,
        suspect,
    }
}

#[allow(clippy::too_many_arguments)]
const fn t3(
    index: u32,
    symbol: &'static str,
    z: u32,
    a: u32,
    k_i: f64,
    tau: f64,
    k_j: f64,
    decay_mode: DecayMode,
) -> Table3Row {
    Table3Row {
        index,
        id: NuclideId::new(symbol, z, a),
        k_i,
        tau,
        k_j,
        decay_mode,
    }
}

const fn ext(symbol: &'static str, z: u32, a: u32, binding_energy: f64) -> ExternalBindingEnergy {
    ExternalBindingEnergy {
        id: NuclideId::new(symbol, z, a),
        binding_energy,
    }
}

pub static TABLE1: [Table1Row; 80] = [
    t1(1, "H", 1, 2, 0.01487415, true),
    t1(2, "H", 1, 3, 0.01891915, false),
    t1(3, "He", 2, 3, 0.0172217, true),
    t1(4, "He", 2, 4, 0.03153671, true),
    t1(5, "He", 2, 5, 0.02028438, false),
    t1(6, "He", 2, 6, 0.01610401, false),
    t1(7, "Li", 3, 6, 0.01782666, true),
    t1(8, "Li", 3, 7, 0.01749358, true),
    t1(9, "Be", 4, 7, 0.01664449, false),
    t1(10, "Be", 4, 8, 0.02086939, false),
    t1(11, "Be", 4, 9, 0.0185187, true),
    t1(12, "B", 5, 10, 0.01804123, true),
    t1(13, "B", 5, 11, 0.01887152, true),
    t1(14, "C", 6, 12, 0.02054377, true),
    t1(15, "C", 6, 13, 0.01967787, true),
    t1(16, "N", 7, 14, 0.01944138, true),
    t1(17, "N", 7, 15, 0.01969392, true),
    t1(18, "O", 8, 16, 0.0203198, true),
    t1(19, "O", 8, 17, 0.01958026, true),
    t1(20, "O", 8, 18, 0.01947679, true),
    t1(21, "F", 9, 18, 0.0190572, false),
    t1(22, "F", 9, 19, 0.01937953, true),
    t1(23, "Ne", 10, 20, 0.02065861, true),
    t1(24, "Ne", 10, 21, 0.0199899, true),
    t1(25, "Ne", 10, 22, 0.01981272, true),
    t1(26, "Si", 14, 31, 0.01953335, false),
    t1(27, "Na", 11, 22, 0.01946794, false),
    t1(28, "Na", 11, 23, 0.0194818, true),
    t1(29, "Mg", 12, 24, 0.01942585, true),
    t1(30, "Mg", 12, 25, 0.01982245, true),
    t1(31, "Al", 13, 29, 0.01943383, false),
    t1(32, "Al", 13, 27, 0.01953686, true),
    t1(33, "Si", 14, 28, 0.01977223, true),
    t1(34, "Si", 14, 29, 0.019577, true),
    t1(35, "P", 15, 30, 0.01943093, false),
    t1(36, "P", 15, 31, 0.01975465, true),
    t1(37, "S", 16, 32, 0.01975493, true),
    t1(38, "S", 16, 33, 0.01977075, true),
    t1(39, "S", 16, 35, 0.01977043, false),
    t1(40, "Cl", 17, 34, 0.01967553, false),
    t1(41, "Cl", 17, 35, 0.01974442, true),
    t1(42, "Cl", 17, 37, 0.01981747, true),
    t1(43, "Ar", 18, 36, 0.01972169, true),
    t1(44, "Ar", 18, 38, 0.01984931, true),
    t1(45, "K", 19, 38, 0.01949287, false),
    t1(46, "Ar", 18, 40, 0.0196945, true),
    t1(47, "K", 19, 39, 0.01973092, true),
    t1(48, "K", 19, 40, 0.01962977, true),
    t1(49, "Ca", 20, 40, 0.01971896, true),
    t1(50, "Ar", 18, 41, 0.01397156, false),
    t1(51, "Ca", 20, 42, 0.01978483, true),
    t1(52, "Ca", 20, 43, 0.01969448, true),
    t1(53, "Ca", 20, 45, 0.01984475, false),
    t1(54, "Sc", 21, 45, 0.01985941, true),
    t1(55, "Ti", 22, 46, 0.01982922, true),
    t1(56, "Ti", 22, 47, 0.01986394, true),
    t1(57, "Ti", 22, 48, 0.01990625, true),
    t1(58, "Ti", 22, 49, 0.0198121, true),
    t1(59, "Ti", 22, 50, 0.01989175, true),
    t1(60, "V", 23, 51, 0.02001475, true),
    t1(61, "Cr", 24, 52, 0.02002203, true),
    t1(62, "Cr", 24, 53, 0.0199929, true),
    t1(63, "Fe", 26, 54, 0.01986263, true),
    t1(64, "Fe", 26, 55, 0.01986871, false),
    t1(65, "Fe", 26, 56, 0.01982115, true),
    t1(66, "Fe", 26, 57, 0.01979011, true),
    t1(67, "Co", 27, 59, 0.02028432, true),
    t1(68, "Xe", 54, 130, 0.01900044, true),
    t1(69, "Sm", 62, 144, 0.01868499, true),
    t1(70, "U", 92, 238, 0.0167848, true),
    t1(71, "C", 6, 11, 0.01807981, false),
    t1(72, "N", 7, 13, 0.01896535, false),
    t1(73, "O", 8, 15, 0.01910168, false),
    t1(74, "P", 15, 32, 0.01968318, false),
    t1(75, "Cl", 17, 36, 0.01968651, false),
    t1(76, "Cl", 17, 39, 0.01956023, false),
    t1(77, "Ti", 22, 45, 0.0207741, false),
    t1(78, "Ga", 31, 69, 0.0198312, false),
    t1(79, "Li", 3, 8, 0.01520925, false),
    t1(80, "Al", 13, 26, 0.01924255, false),
];

pub static TABLE2: [Table2Row; 55] = [
    t2(1, "H", 1, 2, 2.2241, -16.77427, -16.31982, false),
    t2(2, "He", 2, 3, 7.7243, 9.082245, 2.157451, false),
    t2(3, "He", 2, 4, 28.2937, 27.8039, 30.17239, false),
    t2(4, "He", 2, 5, 27.3, 26.81005, 22.14478, false),
    t2(5, "Li", 3, 6, 31.987, 26.92148, 25.56065, false),
    t2(6, "Li", 3, 7, 39.239, 44.51587, 40.6302, false),
    t2(7, "Be", 4, 9, 58.153, 62.21107, 59.20402, false),
    t2(8, "B", 5, 10, 64.744, 65.09291, 63.43464, false),
    t2(9, "B", 5, 11, 76.192, 79.89884, 77.90697, false),
    t2(10, "C", 6, 12, 92.156, 91.93594, 92.88525, false),
    t2(11, "C", 6, 13, 97.102, 97.58096, 96.70341, false),
    t2(12, "N", 7, 14, 104.653, 101.7856, 101.2442, false),
    t2(13, "N", 7, 15, 115.485, 115.2586, 115.5511, false),
    t2(14, "O", 8, 16, 127.612, 126.2815, 128.6358, false),
    t2(15, "O", 8, 17, 131.754, 132.9324, 134.4133, false),
    t2(16, "O", 8, 18, 139.798, 143.6057, 145.9268, false),
    t2(17, "F", 9, 19, 147.79, 150.6031, 153.2602, false),
    t2(18, "Ne", 10, 20, 160.63, 155.1088, 164.9919, false),
    t2(19, "Ne", 10, 21, 167.39, 165.3371, 172.0682, false),
    t2(20, "Ne", 10, 22, 177.76, 178.4066, 184.0856, false),
    t2(21, "Na", 11, 23, 186.44, 188.8704, 190.8181, false),
    t2(22, "Mg", 12, 24, 197.52, 201.7219, 201.4773, false),
    t2(23, "Mg", 12, 25, 204.52, 209.4676, 209.4948, false),
    t2(24, "Al", 13, 27, 224.944, 227.1289, 228.0859, false),
    t2(25, "Si", 14, 28, 236.52, 236.7066, 237.8406, false),
    t2(26, "Si", 14, 29, 242.97, 244.7884, 246.5813, false),
    t2(27, "P", 15, 31, 262.898, 262.898, 264.9727, false),
    t2(28, "S", 16, 32, 271.76, 271.7596, 273.9333, false),
    t2(29, "S", 16, 33, 280.85, 280.0886, 283.2533, false),
    t2(30, "Cl", 17, 35, 298.19, 297.7577, 301.4175, false),
    t2(31, "Cl", 17, 37, 317.08, 315.4211, 321.7042, false),
    t2(32, "Ar", 18, 36, 306.69, 306.8586, 309.6619, false),
    t2(33, "Ar", 18, 38, 326.49, 324.4332, 332.5948, false),
    t2(34, "Ar", 18, 40, 341.62, 343.4461, 351.1033, false),
    t2(35, "K", 19, 38, 320.62, 322.0409, 322.9264, false),
    t2(36, "K", 19, 39, 333.39, 333.0637, 337.3782, false),
    t2(37, "Ca", 20, 40, 342.03, 341.9898, 344.9641, false),
    t2(38, "Ca", 20, 42, 360.93, 359.5778, 368.4792, false),
    t2(39, "Ca", 20, 43, 368.12, 368.3764, 376.6555, false),
    t2(40, "Sc", 21, 45, 389.02, 386.026, 394.6564, false),
    t2(41, "Ti", 22, 45, 406.93, 387.635, 390.3501, true),
    t2(42, "Ti", 22, 46, 397.32, 394.7425, 403.818, false),
    t2(43, "Ti", 22, 47, 406.93, 403.6745, 412.5005, false),
    t2(44, "Ti", 22, 48, 416.73, 412.3411, 424.0958, false),
    t2(45, "Ti", 22, 49, 423.65, 421.3308, 431.1398, false),
    t2(46, "Ti", 22, 50, 434.28, 429.99403, 441.0839, false),
    t2(47, "V", 23, 51, 445.94, 438.9781, 449.2482, false),
    t2(48, "Cr", 24, 52, 455.08, 447.528, 459.5895, false),
    t2(49, "Cr", 24, 53, 463.39, 456.6244, 467.1747, false),
    t2(50, "Fe", 26, 54, 469.27, 465.1136, 472.8117, false),
    t2(51, "Fe", 26, 56, 486.08, 482.7249, 494.4324, false),
    t2(52, "Fe", 26, 57, 494.2, 491.9146, 502.4948, false),
    t2(53, "Co", 27, 59, 524.74, 509.5585, 519.8936, false),
    t2(54, "Xe", 54, 130, 1195.87, 1257.869, 1189.607, false),
    t2(55, "Sm", 62, 144, 1780.0, 2086.011, 1790.972, false),
];

use DecayMode::{BetaMinus as BM, BetaPlus as BP};

pub static TABLE3: [Table3Row; 14] = [
    t3(1, "H", 1, 3, 0.01891915, 3.815856e8, 0.01891915, BM),
    t3(2, "Ca", 20, 45, 0.01984475, 1.31328e7, 0.0198447, BM),
    t3(3, "C", 6, 11, 0.01807981, 1340.04, 0.01756255, BP),
    t3(4, "N", 7, 13, 0.01896535, 597.9, 0.01780605, BP),
    t3(5, "O", 8, 15, 0.01910168, 126.0, 0.01360051, BP),
    t3(6, "F", 9, 18, 0.0190572, 6420.0, 0.01894924, BP),
    t3(7, "Al", 13, 26, 0.01924255, 2.26e13, 0.01924255, BP),
    t3(8, "Al", 13, 29, 0.01943383, 402.0, 0.01770958, BM),
    t3(9, "P", 15, 30, 0.01943093, 153.0, 0.01490055, BP),
    t3(10, "Si", 14, 31, 0.0195335, 9438.0, 0.01945991, BM),
    t3(11, "P", 15, 32, 0.01968318, 1232237.0, 0.01968262, BM),
    t3(12, "S", 16, 35, 0.01977043, 7560864.0, 0.01977034, BM),
    t3(13, "F", 9, 18, 0.0190572, 6420.0, 0.01894924, BP),
    t3(14, "Cl", 17, 39, 0.01956023, 3600.0, 0.01936769, BM),
];

pub static EXTERNAL_BINDING_ENERGIES: [ExternalBindingEnergy; 25] = [
    ext("H", 1, 3, 8.48),
    ext("He", 2, 6, 29.27),
    ext("Li", 3, 8, 41.28),
    ext("Be", 4, 7, 37.60),
    ext("Be", 4, 8, 56.50),
    ext("C", 6, 11, 73.44),
    ext("N", 7, 13, 94.11),
    ext("O", 8, 15, 111.96),
    ext("F", 9, 18, 137.37),
    ext("Na", 11, 22, 174.15),
    ext("Al", 13, 26, 211.89),
    ext("Al", 13, 29, 242.11),
    ext("Si", 14, 31, 262.21),
    ext("P", 15, 30, 250.61),
    ext("P", 15, 32, 270.85),
    ext("S", 16, 35, 298.83),
    ext("Cl", 17, 34, 285.57),
    ext("Cl", 17, 36, 306.79),
    ext("Cl", 17, 39, 331.28),
    ext("Ar", 18, 41, 349.91),
    ext("K", 19, 40, 341.52),
    ext("Ca", 20, 45, 388.37),
    ext("Fe", 26, 55, 481.06),
    ext("Ga", 31, 69, 601.99),
    ext("U", 92, 238, 1801.69),
];
