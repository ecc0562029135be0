//! Bundled reference data: the published polynomials and displacement tables
//! for the two example graphs (an 18-vertex nested split graph and a
//! reconstructed 8-vertex general graph), plus the committed reconstruction
//! fixture. The `reproduce` subcommand and the acceptance suite diff computed
//! results against these values.

use std::fmt;
use std::str::FromStr;

use serde::Deserialize;
use twinshift_core::{Error, Graph, Result};

/// Reference polynomials in their published factored forms.
pub mod printed {
    use twinshift_core::Polynomial;

    fn poly(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_ints(coeffs)
    }

    fn lambda_pow(k: usize) -> Polynomial {
        Polynomial::monomial(1.into(), k)
    }

    fn lambda_plus_one_pow(k: usize) -> Polynomial {
        Polynomial::lambda_plus(1).pow(k)
    }

    /// Charpoly of the 18-vertex NSG (2,2,2,2,2,2,2,2,1,1):
    /// λ⁴(λ+1)⁴·(degree-10 main factor).
    pub fn nsg18_charpoly() -> Polynomial {
        let main = poly(&[-256, 704, 336, -1368, -441, 860, 371, -128, -75, -4, 1]);
        &(&lambda_pow(4) * &lambda_plus_one_pow(4)) * &main
    }

    /// Adjugate entry h_{5,6} of the 18-vertex NSG.
    pub fn nsg18_h56() -> Polynomial {
        poly(&[
            0, 0, 0, 128, 224, -616, -1722, -489, 2124, 2220, 192, -758, -348, 20, 42, 7,
        ])
    }

    /// Adjugate entry h_{1,2} of the 18-vertex NSG.
    pub fn nsg18_h12() -> Polynomial {
        poly(&[
            0, 0, 0, 128, 128, -800, -1328, 793, 2840, 1228, -1304, -1370, -280, 140, 72, 9,
        ])
    }

    /// Adjugate entry h_{3,4} of the 18-vertex NSG.
    pub fn nsg18_h34() -> Polynomial {
        poly(&[
            0, 0, 0, 0, 128, 96, -736, -1062, 599, 1923, 888, -507, -596, -171, 4, 9, 1,
        ])
    }

    /// Charpoly after deleting vertex 5 (third cell): λ³(λ+1)⁴·(degree 10).
    pub fn nsg18_deleted_cell3() -> Polynomial {
        let main = poly(&[-128, 416, 104, -946, -202, 712, 293, -114, -68, -4, 1]);
        &(&lambda_pow(3) * &lambda_plus_one_pow(4)) * &main
    }

    /// Charpoly after deleting vertex 1 (first cell): λ³(λ+1)⁵·(degree 9).
    pub fn nsg18_deleted_cell1() -> Polynomial {
        let main = poly(&[-128, 448, -144, -632, 216, 344, -31, -61, -5, 1]);
        &(&lambda_pow(3) * &lambda_plus_one_pow(5)) * &main
    }

    /// Charpoly after deleting vertex 3 (second cell): λ⁴(λ+1)³·(degree 10).
    pub fn nsg18_deleted_cell2() -> Polynomial {
        let main = poly(&[-128, 416, 80, -926, -112, 726, 232, -145, -69, -3, 1]);
        &(&lambda_pow(4) * &lambda_plus_one_pow(3)) * &main
    }

    /// Charpoly of the 8-vertex example: λ(λ+1)(λ⁶ − λ⁵ − 9λ⁴ + 7λ³ + 19λ² − 13λ).
    pub fn g8_charpoly() -> Polynomial {
        let inner = poly(&[0, -13, 19, 7, -9, -1, 1]);
        &(&lambda_pow(1) * &lambda_plus_one_pow(1)) * &inner
    }

    /// Adjugate entry h_{1,2} of the 8-vertex example.
    pub fn g8_h12() -> Polynomial {
        poly(&[0, -2, 9, -5, -7, 1, 1])
    }

    /// Published h_{7,8} of the 8-vertex example. Inconsistent with the
    /// published deleted charpoly (see [`g8_deleted_dup`]); kept verbatim so
    /// the discrepancy can be reported against it.
    pub fn g8_h78_published() -> Polynomial {
        poly(&[2, 3, -4, -7, 0, 2])
    }

    /// Charpoly after removing co-duplicate vertex 1: λ(λ⁶ − 8λ⁴ + 14λ² − 4λ − 2).
    pub fn g8_deleted_codup() -> Polynomial {
        &lambda_pow(1) * &poly(&[-2, -4, 14, 0, -8, 0, 1])
    }

    /// Charpoly after removing duplicate vertex 7:
    /// (λ+1)(λ⁶ − λ⁵ − 7λ⁴ + 5λ³ + 11λ² − 7λ).
    pub fn g8_deleted_dup() -> Polynomial {
        &lambda_plus_one_pow(1) * &poly(&[0, -7, 11, 5, -7, -1, 1])
    }
}

/// The five bundled displacement tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableId {
    A1,
    A2,
    A3,
    B1,
    B2,
}

impl TableId {
    pub const ALL: [TableId; 5] = [TableId::A1, TableId::A2, TableId::A3, TableId::B1, TableId::B2];

    fn data(self) -> &'static str {
        match self {
            TableId::A1 => include_str!("../data/table_a1.json"),
            TableId::A2 => include_str!("../data/table_a2.json"),
            TableId::A3 => include_str!("../data/table_a3.json"),
            TableId::B1 => include_str!("../data/table_b1.json"),
            TableId::B2 => include_str!("../data/table_b2.json"),
        }
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for TableId {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_uppercase().as_str() {
            "A1" => Ok(TableId::A1),
            "A2" => Ok(TableId::A2),
            "A3" => Ok(TableId::A3),
            "B1" => Ok(TableId::B1),
            "B2" => Ok(TableId::B2),
            other => Err(format!("unknown table {other:?}; expected A1, A2, A3, B1 or B2")),
        }
    }
}

#[derive(Debug, Deserialize)]
pub struct TableFixture {
    pub table: String,
    pub graph: GraphSource,
    pub pair: (usize, usize),
    pub rows: Vec<FixtureRow>,
    /// Published h polynomial known to disagree with the deletion identity
    /// (ascending coefficients); present only for B2.
    #[serde(default)]
    pub discrepant_h: Option<Vec<i64>>,
}

#[derive(Debug, Deserialize)]
pub enum GraphSource {
    #[serde(rename = "nsg")]
    Nsg(String),
    #[serde(rename = "bundled")]
    Bundled(String),
}

fn default_count() -> u32 {
    1
}

/// One printed table row. Values are kept as printed strings so comparisons
/// can honour the printed precision (±1 unit in the last significant digit).
#[derive(Debug, Deserialize)]
pub struct FixtureRow {
    pub g: String,
    #[serde(default)]
    pub gp: Option<String>,
    #[serde(default)]
    pub actual: Option<String>,
    #[serde(default)]
    pub first: Option<String>,
    #[serde(default)]
    pub second: Option<FixtureSecond>,
    /// `repeated`, `removed`, `absorbed` or `pinned` for rows without
    /// estimates.
    #[serde(default)]
    pub skip: Option<String>,
    /// Printed actual value that contradicts the row's own eigenvalue cells;
    /// `actual` then holds the self-consistent difference and the printed
    /// value is reported as a documented inconsistency.
    #[serde(default)]
    pub printed_actual_discrepant: Option<String>,
    /// Number of identical expanded rows this entry stands for.
    #[serde(default = "default_count")]
    pub count: u32,
}

#[derive(Debug, Deserialize)]
#[serde(tag = "kind")]
pub enum FixtureSecond {
    #[serde(rename = "real_pair")]
    RealPair { roots: [String; 2], chosen: String },
    #[serde(rename = "conjugate")]
    Conjugate { re: String, im: String },
}

pub fn load_table(id: TableId) -> TableFixture {
    serde_json::from_str(id.data()).expect("bundled table fixture must parse")
}

/// The committed reconstruction fixture (first matching graph; the file also
/// records every other match).
pub fn g8_graph() -> Result<Graph> {
    Graph::from_json(include_str!("../data/g8.json"))
}

pub fn resolve_graph(source: &GraphSource) -> Result<Graph> {
    match source {
        GraphSource::Nsg(seq) => Ok(twinshift_core::build_nsg(
            &twinshift_core::CreationSequence::parse(seq)?,
        )),
        GraphSource::Bundled(name) if name == "g8" => g8_graph(),
        GraphSource::Bundled(name) => Err(Error::FixtureMissing(name.clone())),
    }
}

/// Parses a printed value such as `-4.45`, `0`, or `-2.03e-6`.
pub fn parse_printed(s: &str) -> f64 {
    s.parse::<f64>()
        .unwrap_or_else(|_| panic!("unparseable printed value {s:?}"))
}

/// One unit in the last significant printed digit, the comparison slack for
/// reproducing rounded tables.
pub fn printed_ulp(s: &str) -> f64 {
    let lower = s.trim().to_ascii_lowercase();
    if parse_printed(&lower) == 0.0 {
        return 1e-9;
    }
    let (mantissa, exp10) = match lower.split_once('e') {
        Some((m, e)) => (m.to_string(), e.parse::<i32>().unwrap_or(0)),
        None => (lower, 0),
    };
    let frac_digits = mantissa
        .split_once('.')
        .map_or(0, |(_, frac)| frac.len() as i32);
    10f64.powi(exp10 - frac_digits)
}

/// True when a computed value reproduces the printed one within one unit of
/// its last printed digit.
pub fn matches_printed(computed: f64, printed: &str) -> bool {
    (computed - parse_printed(printed)).abs() <= printed_ulp(printed) * 1.0000001
}
