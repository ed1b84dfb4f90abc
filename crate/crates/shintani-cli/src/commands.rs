use std::collections::BTreeMap;
use std::path::Path;

use rayon::prelude::*;
use serde::Deserialize;
use shintani_core::lfun::{class_number_cm, decompose, ClassNumberParams, LFunError};
use shintani_core::numfield::{is_inert, is_prime, validate_field_spec, FieldSpec};
use shintani_core::realalg::{PrecisionBudget, DEFAULT_CAP_BITS};

use crate::fieldfile::FieldFile;
use crate::report::{
    rat, to_json, ClassNumberInputs, DecompositionDoc, RunReport, TableDoc, TableRow, ValidationDoc, SCHEMA,
};
use crate::CliError;

pub const PRECISION_ENV: &str = "SHINTANI_PRECISION_CAP";

/// A finished command: the document to write and the exit code. A nonzero code with a
/// document (invalid field, non-integral `h_K`) still writes the document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Done {
    pub doc: String,
    pub code: i32,
    pub message: Option<String>,
}

impl Done {
    fn ok(doc: String) -> Self {
        Done { doc, code: 0, message: None }
    }
}

/// The precision cap: the flag if given, else the environment variable, else 4096 bits.
pub fn precision_cap(flag: Option<u32>) -> Result<u32, CliError> {
    if let Some(c) = flag {
        return Ok(c);
    }
    match std::env::var(PRECISION_ENV) {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| CliError::Parse(format!("{PRECISION_ENV}={s:?} is not a bit count"))),
        Err(_) => Ok(DEFAULT_CAP_BITS),
    }
}

pub fn budget(cap: u32) -> Result<PrecisionBudget, CliError> {
    PrecisionBudget::with_cap(cap).map_err(|e| CliError::Parse(e.to_string()))
}

/// Loads a field file and insists that it validates.
pub fn load_valid(path: &Path, budget: PrecisionBudget) -> Result<(FieldFile, FieldSpec), CliError> {
    let file = FieldFile::read(path)?;
    let spec = file.to_spec()?;
    require_valid(&spec, budget)?;
    Ok((file, spec))
}

fn require_valid(spec: &FieldSpec, budget: PrecisionBudget) -> Result<(), CliError> {
    let rep = validate_field_spec(spec, budget);
    if rep.valid {
        return Ok(());
    }
    let msg: Vec<String> = rep.failures().map(|c| format!("{}: {}", c.name, c.message)).collect();
    if rep.undecided {
        Err(CliError::SignUndecided(msg.join("; ")))
    } else {
        Err(CliError::Invalid(msg.join("; ")))
    }
}

pub fn cmd_validate(path: &Path, cap: u32) -> Result<Done, CliError> {
    let file = FieldFile::read(path)?;
    let spec = file.to_spec()?;
    let rep = validate_field_spec(&spec, budget(cap)?);
    let doc = to_json(&ValidationDoc::new(&spec.name, &rep));
    if rep.valid {
        return Ok(Done::ok(doc));
    }
    let failed: Vec<&str> = rep.failures().map(|c| c.name.as_str()).collect();
    Ok(Done { doc, code: 2, message: Some(format!("invalid field: failed {}", failed.join(", "))) })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassNumberArgs {
    pub prime: u64,
    pub w_k: u64,
    pub q1: Option<u64>,
    pub q2: Option<u64>,
    pub cap: u32,
}

/// Builds the full report. A non-integral `h_K` is returned as a report, not an error.
pub fn classnumber_report(file: &FieldFile, spec: &FieldSpec, a: &ClassNumberArgs) -> Result<RunReport, CliError> {
    let mut params = ClassNumberParams::new(a.prime, a.w_k);
    params.q1 = a.q1;
    params.q2 = a.q2;
    params.budget = budget(a.cap)?;
    let inputs = ClassNumberInputs {
        field_file: file.clone(),
        prime: a.prime,
        w_k: a.w_k,
        q1: a.q1,
        q2: a.q2,
        precision_cap: a.cap,
    };
    match class_number_cm(spec, &params) {
        Ok(r) => RunReport::new(inputs, &r),
        Err(LFunError::NonIntegral(r)) => RunReport::new(inputs, &r),
        Err(e) => Err(e.into()),
    }
}

pub fn cmd_classnumber(path: &Path, a: &ClassNumberArgs) -> Result<Done, CliError> {
    let (file, spec) = load_valid(path, budget(a.cap)?)?;
    let rep = classnumber_report(&file, &spec, a)?;
    let doc = to_json(&rep);
    if rep.integral {
        Ok(Done::ok(doc))
    } else {
        let msg = CliError::NonIntegral(rep.h_k.clone());
        Ok(Done { doc, code: msg.exit_code(), message: Some(msg.to_string()) })
    }
}

pub fn cmd_decompose(path: &Path, prime: u64, k: u64, d: u64, cap: u32) -> Result<Done, CliError> {
    let (_, spec) = load_valid(path, budget(cap)?)?;
    let terms = decompose(&spec, prime, k, d, budget(cap)?)?;
    Ok(Done::ok(to_json(&DecompositionDoc::new(&spec.name, prime, k, d, &terms))))
}

/// Per-prime entry of a wk-map: a bare `w_K` or an object with optional `q1`/`q2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(untagged)]
pub enum WkEntry {
    Bare(u64),
    Full {
        w_k: u64,
        #[serde(default)]
        q1: Option<u64>,
        #[serde(default)]
        q2: Option<u64>,
    },
}

impl WkEntry {
    fn parts(self) -> (u64, Option<u64>, Option<u64>) {
        match self {
            WkEntry::Bare(w) => (w, None, None),
            WkEntry::Full { w_k, q1, q2 } => (w_k, q1, q2),
        }
    }
}

/// JSON object from prime (as a string key) to [`WkEntry`].
pub fn parse_wk_map(text: &str) -> Result<BTreeMap<u64, WkEntry>, CliError> {
    let raw: BTreeMap<String, WkEntry> =
        serde_json::from_str(text).map_err(|e| CliError::Parse(format!("malformed wk-map: {e}")))?;
    raw.into_iter()
        .map(|(k, v)| {
            k.trim()
                .parse::<u64>()
                .map(|p| (p, v))
                .map_err(|_| CliError::Parse(format!("wk-map key {k:?} is not a prime")))
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableArgs {
    pub pmin: u64,
    pub pmax: u64,
    pub wk_map: BTreeMap<u64, WkEntry>,
    pub format: TableFormat,
    pub jobs: usize,
    pub cap: u32,
}

fn table_row(spec: &FieldSpec, p: u64, entry: WkEntry, cap: u32) -> TableRow {
    let (w_k, q1, q2) = entry.parts();
    let mut row = TableRow {
        p,
        w_k,
        q1: None,
        q2: None,
        set_sizes: String::new(),
        h_k: String::new(),
        error: String::new(),
    };
    let mut params = ClassNumberParams::new(p, w_k);
    params.q1 = q1;
    params.q2 = q2;
    params.budget = match budget(cap) {
        Ok(b) => b,
        Err(e) => {
            row.error = e.to_string();
            return row;
        }
    };
    let (r, err) = match class_number_cm(spec, &params) {
        Ok(r) => (r, String::new()),
        Err(LFunError::NonIntegral(r)) => (*r, String::from("h_K is not a positive integer")),
        Err(e) => {
            row.error = CliError::from(e).to_string();
            return row;
        }
    };
    row.q1 = Some(r.q1);
    row.q2 = Some(r.q2);
    row.set_sizes = r.set_sizes().iter().map(ToString::to_string).collect::<Vec<_>>().join(";");
    row.h_k = rat(&r.h_k);
    row.error = err;
    row
}

/// Rows for the inert primes `p = 3 (mod 4)` in the range that the wk-map covers, plus notes
/// about everything skipped. Rows are in increasing `p` for any number of jobs.
pub fn table_doc(spec: &FieldSpec, a: &TableArgs) -> Result<TableDoc, CliError> {
    let mut notes = Vec::new();
    let mut work = Vec::new();
    for p in a.pmin..=a.pmax {
        if p % 4 != 3 || !is_prime(p) {
            continue;
        }
        match is_inert(spec, p) {
            Ok(true) => match a.wk_map.get(&p) {
                Some(&e) => work.push((p, e)),
                None => notes.push(format!("p = {p}: inert but not in the wk-map, skipped")),
            },
            Ok(false) => {}
            Err(e) => notes.push(format!("p = {p}: skipped, {e}")),
        }
    }
    if work.is_empty() {
        notes.push(format!("no rows: no covered inert primes p = 3 (mod 4) in [{}, {}]", a.pmin, a.pmax));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(a.jobs.max(1))
        .build()
        .map_err(|e| CliError::Internal(e.to_string()))?;
    let rows = pool.install(|| work.par_iter().map(|&(p, e)| table_row(spec, p, e, a.cap)).collect());
    Ok(TableDoc {
        schema: SCHEMA.into(),
        command: "table".into(),
        field: spec.name.clone(),
        pmin: a.pmin,
        pmax: a.pmax,
        rows,
        notes,
    })
}

pub fn render_csv(rows: &[TableRow]) -> Result<String, CliError> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
    w.write_record(["p", "w_k", "q1", "q2", "set_sizes", "h_k", "error"])
        .map_err(|e| CliError::Internal(e.to_string()))?;
    for r in rows {
        w.serialize(r).map_err(|e| CliError::Internal(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Internal(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Internal(e.to_string()))
}

pub fn cmd_table(path: &Path, a: &TableArgs) -> Result<Done, CliError> {
    if a.pmin > a.pmax {
        return Err(CliError::Parse(format!("--pmin {} exceeds --pmax {}", a.pmin, a.pmax)));
    }
    let (_, spec) = load_valid(path, budget(a.cap)?)?;
    let doc = table_doc(&spec, a)?;
    let text = match a.format {
        TableFormat::Csv => render_csv(&doc.rows)?,
        TableFormat::Json => to_json(&doc),
    };
    let message = (!doc.notes.is_empty()).then(|| doc.notes.join("\n"));
    Ok(Done { doc: text, code: 0, message })
}
