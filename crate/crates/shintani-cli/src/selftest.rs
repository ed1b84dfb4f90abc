//! Recomputes the two embedded cubic examples and the `n = 1` battery, comparing every
//! cell against the stored golden values.

use serde_json::Value;
use shintani_core::exact::BernoulliTable;
use shintani_core::lfun::{
    class_number_cm_with, dirichlet_oracle, girstmair_oracle, smallest_primitive_root, ClassNumberParams, LFunError,
};
use shintani_core::numfield::FieldSpec;
use shintani_core::realalg::PrecisionBudget;
use shintani_core::shintani::{build_frames, TieBreak};

use crate::fieldfile::{parse_rational, FieldFile};
use crate::report::{ClassNumberInputs, RunReport};
use crate::CliError;

pub const EXAMPLE1_FIELD: &str = include_str!("../data/example1.field.json");
pub const EXAMPLE1_GOLDEN: &str = include_str!("../data/example1.golden.json");
pub const EXAMPLE2_FIELD: &str = include_str!("../data/example2.field.json");
pub const EXAMPLE2_GOLDEN: &str = include_str!("../data/example2.golden.json");
pub const RATIONALS_FIELD: &str = include_str!("../data/rationals.field.json");

/// Primes of the `n = 1` battery.
pub const BATTERY: [u64; 7] = [7, 11, 19, 23, 31, 43, 47];

/// Hooks for mutation testing; the default runs the real implementation.
#[derive(Debug, Clone, Default)]
pub struct SelftestOptions {
    /// Replaces the Bernoulli polynomials used in every class number evaluation.
    pub bernoulli: Option<BernoulliTable>,
    /// Forces this interval-kind rule on both examples instead of the one in the field file.
    pub tie_break: Option<TieBreak>,
}

fn internal(e: impl std::fmt::Display) -> CliError {
    CliError::Internal(e.to_string())
}

/// Canonical text of a leaf: numbers and rational strings compare by value.
fn leaf(v: &Value) -> Option<String> {
    match v {
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(parse_rational(s).map(|r| r.to_string()).unwrap_or_else(|_| s.clone())),
        Value::Bool(b) => Some(b.to_string()),
        _ => None,
    }
}

fn compare(path: &str, expected: &Value, actual: &Value) -> Result<(), CliError> {
    match (expected, actual) {
        (Value::Array(e), Value::Array(a)) => {
            if e.len() != a.len() {
                return Err(CliError::Mismatch(format!("{path}: expected {} entries, got {}", e.len(), a.len())));
            }
            for (i, (x, y)) in e.iter().zip(a).enumerate() {
                compare(&format!("{path}[{i}]"), x, y)?;
            }
            Ok(())
        }
        (Value::Object(e), Value::Object(a)) => {
            for (k, x) in e {
                let y = a.get(k).ok_or_else(|| CliError::Mismatch(format!("{path}.{k}: missing")))?;
                compare(&format!("{path}.{k}"), x, y)?;
            }
            Ok(())
        }
        _ => match (leaf(expected), leaf(actual)) {
            (Some(x), Some(y)) if x == y => Ok(()),
            _ => Err(CliError::Mismatch(format!("{path}: expected {expected}, got {actual}"))),
        },
    }
}

/// Comparison order: inputs and frame data before anything derived from them, so a
/// perturbation is reported at the first cell it touches.
fn rank(key: &str) -> usize {
    const ORDER: [&str; 16] = [
        "p", "w_k", "q1", "q2", "genfun", "tau", "weight", "kinds", "set_size", "kernel", "xbar", "points",
        "coset_reps", "s", "frames", "column_totals",
    ];
    ORDER.iter().position(|k| *k == key).unwrap_or(ORDER.len())
}

fn sorted(v: &Value) -> Value {
    match v {
        Value::Array(xs) => {
            let mut xs = xs.clone();
            xs.sort_by_cached_key(|x| x.to_string());
            Value::Array(xs)
        }
        other => other.clone(),
    }
}

fn boundary_table(spec: &FieldSpec) -> Result<Value, CliError> {
    let frames = build_frames(spec, PrecisionBudget::default())?;
    Ok(Value::Array(
        frames
            .iter()
            .map(|f| {
                serde_json::json!({
                    "tau": f.tau.label(),
                    "weight": f.weight,
                    "kinds": f.kinds.iter().map(|k| k.as_str()).collect::<Vec<_>>(),
                })
            })
            .collect(),
    ))
}

pub fn check_example(label: &str, field: &str, golden: &str, opts: &SelftestOptions) -> Result<(), CliError> {
    let file = FieldFile::parse(field)?;
    let mut spec = file.to_spec()?;
    if let Some(t) = opts.tie_break {
        spec = spec.with_tie_break(t);
    }
    let golden: Value = serde_json::from_str(golden).map_err(internal)?;
    let num = |k: &str| golden[k].as_u64().ok_or_else(|| internal(format!("golden {label} lacks {k}")));
    let mut params = ClassNumberParams::new(num("p")?, num("w_k")?);
    params.q2 = Some(num("q2")?);
    let bern = opts.bernoulli.clone().unwrap_or_else(|| BernoulliTable::new(spec.degree()));
    let report = match class_number_cm_with(&spec, &params, &bern) {
        Ok(r) => r,
        Err(LFunError::NonIntegral(r)) => *r,
        Err(e) => return Err(CliError::Mismatch(format!("{label}: computation failed: {e}"))),
    };
    let inputs = ClassNumberInputs {
        field_file: file,
        prime: params.p,
        w_k: params.w_k,
        q1: None,
        q2: params.q2,
        precision_cap: params.budget.cap(),
    };
    let actual = serde_json::to_value(RunReport::new(inputs, &report)?).map_err(internal)?;
    let Value::Object(top) = &golden else { return Err(internal("golden file is not an object")) };
    let mut keys: Vec<&String> = top.keys().collect();
    keys.sort_by_key(|k| rank(k));
    for key in keys {
        let expected = &top[key.as_str()];
        let path = format!("{label}.{key}");
        match key.as_str() {
            // the printed boundary tables follow the opposite perturbation for both examples
            "boundary_table" => {
                let t = opts.tie_break.map_or(TieBreak::MinusLast, |_| spec.tie_break);
                compare(&path, expected, &boundary_table(&spec.clone().with_tie_break(t))?)?
            }
            "frames" => {
                let exp = expected.as_array().ok_or_else(|| internal("golden frames"))?;
                let act = actual["frames"].as_array().ok_or_else(|| internal("report frames"))?;
                if exp.len() != act.len() {
                    return Err(CliError::Mismatch(format!("{path}: expected {} frames, got {}", exp.len(), act.len())));
                }
                for (i, (e, a)) in exp.iter().zip(act).enumerate() {
                    let Value::Object(fields) = e else { return Err(internal("golden frame")) };
                    let mut fields: Vec<(&String, &Value)> = fields.iter().collect();
                    fields.sort_by_key(|(k, _)| rank(k));
                    for (k, ev) in fields {
                        let p = format!("{path}[{i}].{k}");
                        match k.as_str() {
                            "xbar" => compare(&p, ev, &actual["xbar"])?,
                            // a set; its order is fixed by the S-table columns instead
                            "kernel" => compare(&p, &sorted(ev), &sorted(a.get(k).unwrap_or(&Value::Null)))?,
                            "coset_reps" => {
                                let reps: Vec<Value> = a["points"]
                                    .as_array()
                                    .ok_or_else(|| internal("report points"))?
                                    .iter()
                                    .map(|row| row[0].clone())
                                    .collect();
                                compare(&p, ev, &Value::Array(reps))?
                            }
                            _ => compare(&p, ev, a.get(k).ok_or_else(|| CliError::Mismatch(format!("{p}: missing")))?)?,
                        }
                    }
                }
            }
            _ => compare(&path, expected, actual.get(key.as_str()).unwrap_or(&Value::Null))?,
        }
    }
    Ok(())
}

pub fn check_battery(opts: &SelftestOptions) -> Result<(), CliError> {
    let spec = FieldFile::parse(RATIONALS_FIELD)?.to_spec()?;
    let bern = opts.bernoulli.clone().unwrap_or_else(|| BernoulliTable::new(1));
    for p in BATTERY {
        let path = format!("battery.p{p}");
        let r = match class_number_cm_with(&spec, &ClassNumberParams::new(p, 2), &bern) {
            Ok(r) => r.h_k.to_string(),
            Err(LFunError::NonIntegral(r)) => r.h_k.to_string(),
            Err(e) => return Err(CliError::Mismatch(format!("{path}: {e}"))),
        };
        let d = dirichlet_oracle(p).map_err(internal)?;
        let g = smallest_primitive_root(p).ok_or_else(|| internal(format!("no primitive root mod {p}")))?;
        let gi = girstmair_oracle(p, g).map_err(internal)?;
        if d != gi {
            return Err(CliError::Mismatch(format!("{path}: oracles disagree ({d} vs {gi})")));
        }
        if r != d.to_string() {
            return Err(CliError::Mismatch(format!("{path}.h_k: expected {d}, got {r}")));
        }
    }
    Ok(())
}

/// Runs everything; returns one summary line per stage, or the first mismatch.
pub fn selftest(opts: &SelftestOptions) -> Result<Vec<String>, CliError> {
    let mut lines = Vec::new();
    check_example("example1", EXAMPLE1_FIELD, EXAMPLE1_GOLDEN, opts)?;
    lines.push("example1: every cell matches".to_string());
    check_example("example2", EXAMPLE2_FIELD, EXAMPLE2_GOLDEN, opts)?;
    lines.push("example2: every cell matches".to_string());
    check_battery(opts)?;
    lines.push(format!("n = 1 battery: class number formula = Dirichlet = Girstmair for p in {BATTERY:?}"));
    Ok(lines)
}
