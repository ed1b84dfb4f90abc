//! JSON documents written by the subcommands. Rationals are canonical `num/den` strings
//! (integers without a denominator), so every document round-trips losslessly and
//! identical inputs give byte-identical output.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use shintani_core::exact::PolyQ;
use shintani_core::lfun::{ClassNumberReport, DecompositionTerm, FrameReport};
use shintani_core::numfield::{FieldElement, ValidationReport};
use shintani_core::shintani::{build_genfun, ShintaniPoint};

use crate::fieldfile::FieldFile;
use crate::CliError;

pub const SCHEMA: &str = "shintani-report/1";

pub fn rat(x: &BigRational) -> String {
    x.to_string()
}

fn rats(xs: &[BigRational]) -> Vec<String> {
    xs.iter().map(rat).collect()
}

fn poly(p: &PolyQ) -> Vec<String> {
    rats(p.coeffs())
}

fn elem(e: &FieldElement) -> Vec<String> {
    rats(e.coords())
}

fn point(x: &ShintaniPoint) -> Vec<String> {
    rats(&x.coords)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Assumptions {
    /// The field's narrow class number is taken to be 1 without verification.
    pub narrow_class_number_one: bool,
    /// Q2 was not supplied on the command line and came from the field file's default.
    pub q2_from_field_file: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckDto {
    pub name: String,
    pub ok: bool,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationDoc {
    pub schema: String,
    pub command: String,
    pub field: String,
    pub valid: bool,
    pub index: Option<String>,
    pub checks: Vec<CheckDto>,
    pub warnings: Vec<String>,
}

impl ValidationDoc {
    pub fn new(name: &str, r: &ValidationReport) -> Self {
        ValidationDoc {
            schema: SCHEMA.into(),
            command: "validate".into(),
            field: name.into(),
            valid: r.valid,
            index: r.index.as_ref().map(ToString::to_string),
            checks: r
                .checks
                .iter()
                .map(|c| CheckDto { name: c.name.clone(), ok: c.ok, message: c.message.clone() })
                .collect(),
            warnings: r.warnings.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassNumberInputs {
    pub field_file: FieldFile,
    pub prime: u64,
    pub w_k: u64,
    pub q1: Option<u64>,
    pub q2: Option<u64>,
    pub precision_cap: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenFunDto {
    /// Ascending coefficients of the common denominator.
    pub denominator: Vec<String>,
    /// Ascending coefficients of the numerators of `X_1, ..., X_n`.
    pub numerators: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrameDto {
    pub tau: String,
    pub weight: i32,
    /// Power-basis coordinates of `f_1, ..., f_n`.
    pub f: Vec<Vec<String>>,
    pub kinds: Vec<String>,
    pub kernel: Vec<Vec<String>>,
    pub set_size: usize,
    /// `points[m-1][i-1]`, one row per `m = 1, ..., p^n - 1`.
    pub points: Vec<Vec<Vec<String>>>,
    /// `s[m-1][i-1] = S_tau(i, m)`.
    pub s: Vec<Vec<String>>,
    pub column_totals: Vec<String>,
    pub total: String,
}

impl FrameDto {
    fn new(f: &FrameReport) -> Self {
        FrameDto {
            tau: f.tau.label(),
            weight: f.weight,
            f: f.f.iter().map(elem).collect(),
            kinds: f.kinds.iter().map(|k| k.as_str().to_string()).collect(),
            kernel: f.kernel.iter().map(point).collect(),
            set_size: f.set_size,
            points: f.points.iter().map(|row| row.iter().map(point).collect()).collect(),
            s: f.s.iter().map(|row| rats(row)).collect(),
            column_totals: rats(&f.column_totals),
            total: rat(&f.total),
        }
    }
}

/// Full output of `classnumber`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub schema: String,
    pub command: String,
    pub inputs: ClassNumberInputs,
    pub assumptions: Assumptions,
    pub field: String,
    pub degree: usize,
    pub p: u64,
    pub w_k: u64,
    pub q1: u64,
    pub q2: u64,
    /// Integral-basis coordinates of the primitive element mod p.
    pub rho: Vec<u64>,
    /// Ascending coefficients of the minimal polynomial of `rho`.
    pub h_rho: Vec<String>,
    pub genfun: GenFunDto,
    /// `xbar(m)` for `m = 1, ..., p^n - 1`.
    pub xbar: Vec<Vec<u64>>,
    pub frames: Vec<FrameDto>,
    /// Weighted sum over frames of the row sums, one entry per `m`.
    pub row_totals: Vec<String>,
    pub weighted_total: String,
    pub h_k: String,
    pub integral: bool,
    pub warnings: Vec<String>,
}

impl RunReport {
    pub fn new(inputs: ClassNumberInputs, r: &ClassNumberReport) -> Result<Self, CliError> {
        let g = build_genfun(&r.h_rho)?;
        let rows = r.residues.len();
        let row_totals = (0..rows)
            .map(|m| {
                let mut t = BigRational::from_integer(0.into());
                for f in &r.frames {
                    let w = BigRational::from_integer(f.weight.into());
                    for x in f.s.get(m).into_iter().flatten() {
                        t += &w * x;
                    }
                }
                rat(&t)
            })
            .collect();
        Ok(RunReport {
            schema: SCHEMA.into(),
            command: "classnumber".into(),
            assumptions: Assumptions { narrow_class_number_one: true, q2_from_field_file: inputs.q2.is_none() },
            inputs,
            field: r.field.clone(),
            degree: r.degree,
            p: r.p,
            w_k: r.w_k,
            q1: r.q1,
            q2: r.q2,
            rho: r.rho.clone(),
            h_rho: poly(&r.h_rho),
            genfun: GenFunDto {
                denominator: poly(&g.denominator),
                numerators: g.x.iter().map(|x| poly(&x.numerator)).collect(),
            },
            xbar: r.residues.clone(),
            frames: r.frames.iter().map(FrameDto::new).collect(),
            row_totals,
            weighted_total: rat(&r.weighted_total),
            h_k: rat(&r.h_k),
            integral: r.integral,
            warnings: r.warnings.clone(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDto {
    pub tau: String,
    pub weight: i32,
    pub m: usize,
    /// `chi(rho^m) = exp(2 pi i numerator / order)`.
    pub character_value: RootDto,
    pub f: Vec<Vec<String>>,
    pub tuples: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootDto {
    pub numerator: u64,
    pub order: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionDoc {
    pub schema: String,
    pub command: String,
    pub field: String,
    pub p: u64,
    pub k: u64,
    pub d: u64,
    pub distinct_tokens: usize,
    pub terms: Vec<TermDto>,
}

impl DecompositionDoc {
    pub fn new(field: &str, p: u64, k: u64, d: u64, terms: &[DecompositionTerm]) -> Self {
        let mut tokens: Vec<(u64, u64)> =
            terms.iter().map(|t| (t.character_value.numerator, t.character_value.order)).collect();
        tokens.sort_unstable();
        tokens.dedup();
        DecompositionDoc {
            schema: SCHEMA.into(),
            command: "decompose".into(),
            field: field.into(),
            p,
            k,
            d,
            distinct_tokens: tokens.len(),
            terms: terms
                .iter()
                .map(|t| TermDto {
                    tau: t.tau.label(),
                    weight: t.weight,
                    m: t.m,
                    character_value: RootDto {
                        numerator: t.character_value.numerator,
                        order: t.character_value.order,
                    },
                    f: t.f.iter().map(elem).collect(),
                    tuples: t.tuples.iter().map(point).collect(),
                })
                .collect(),
        }
    }
}

/// One line of `table`. The CSV columns are exactly these fields, in this order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub p: u64,
    pub w_k: u64,
    /// Empty when the row failed before Q1 was known.
    pub q1: Option<u64>,
    pub q2: Option<u64>,
    /// `|R^tau(pO_F)|` per permutation in lexicographic order, joined with `;`.
    pub set_sizes: String,
    pub h_k: String,
    pub error: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDoc {
    pub schema: String,
    pub command: String,
    pub field: String,
    pub pmin: u64,
    pub pmax: u64,
    pub rows: Vec<TableRow>,
    pub notes: Vec<String>,
}

/// Serializes with two-space indentation and a trailing newline.
pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("report types serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::selftest::EXAMPLE1_FIELD;
    use shintani_core::lfun::{class_number_cm, ClassNumberParams};

    #[test]
    fn run_report_round_trips() {
        let file = FieldFile::parse(EXAMPLE1_FIELD).unwrap();
        let spec = file.to_spec().unwrap();
        let core = class_number_cm(&spec, &ClassNumberParams::new(3, 6)).unwrap();
        let inputs = ClassNumberInputs { field_file: file, prime: 3, w_k: 6, q1: None, q2: None, precision_cap: 4096 };
        let rep = RunReport::new(inputs, &core).unwrap();
        let text = to_json(&rep);
        let back: RunReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, rep);
        assert_eq!(to_json(&back), text);
        // every S-value string parses back to the exact rational
        for (f, fr) in core.frames.iter().zip(&rep.frames) {
            for (row, srow) in f.s.iter().zip(&fr.s) {
                for (x, sx) in row.iter().zip(srow) {
                    assert_eq!(&crate::fieldfile::parse_rational(sx).unwrap(), x);
                }
            }
        }
        assert_eq!(rep.row_totals[0], "1/9");
    }
}
