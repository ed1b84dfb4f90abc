use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use shintani_core::exact::{MatQ, PolyQ};
use shintani_core::numfield::{FieldElement, FieldSpec};
use shintani_core::shintani::TieBreak;

use crate::CliError;

/// A coordinate given either as a JSON integer or as a rational string such as `"-3/2"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coord {
    Int(i64),
    Text(String),
}

impl Coord {
    fn to_rational(&self) -> Result<BigRational, CliError> {
        match self {
            Coord::Int(n) => Ok(BigRational::from_integer((*n).into())),
            Coord::Text(s) => parse_rational(s),
        }
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational, CliError> {
    let bad = || CliError::Parse(format!("`{s}` is not a rational number"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d == BigInt::from(0) {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.trim().parse().map_err(|_| bad())?)),
    }
}

fn default_q2() -> u64 {
    1
}

/// The JSON field description read by every subcommand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldFile {
    pub name: String,
    /// Ascending coefficients of the monic minimal polynomial.
    pub min_poly: Vec<i64>,
    pub discriminant: i64,
    /// Rows are the integral basis elements in the power basis; the power basis if absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub integral_basis: Option<Vec<Vec<Coord>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fundamental_units: Option<Vec<Vec<Coord>>>,
    pub totally_positive_units: Vec<Vec<Coord>>,
    #[serde(default = "default_q2")]
    pub q2: u64,
    /// `"plus"` (default) or `"minus"`: which sign of `c_i` gets the interval `[0,1)`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tie_break: Option<String>,
}

fn element(row: &[Coord], n: usize) -> Result<FieldElement, CliError> {
    if row.len() > n {
        return Err(CliError::Parse(format!("element with {} coordinates in a degree-{n} field", row.len())));
    }
    let mut c: Vec<BigRational> = row.iter().map(Coord::to_rational).collect::<Result<_, _>>()?;
    c.resize(n, BigRational::from_integer(0.into()));
    Ok(FieldElement::new(c))
}

impl FieldFile {
    /// Parses JSON text; errors carry the line and column reported by the parser.
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Parse(format!("malformed field file: {e}")))
    }

    pub fn read(path: &std::path::Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn to_spec(&self) -> Result<FieldSpec, CliError> {
        let g = PolyQ::from_ints(&self.min_poly);
        let n = g.degree().ok_or_else(|| CliError::Invalid("min_poly is constant".into()))?;
        let basis = self
            .integral_basis
            .as_ref()
            .map(|rows| {
                let rows: Vec<Vec<BigRational>> = rows
                    .iter()
                    .map(|r| element(r, n).map(FieldElement::into_coords))
                    .collect::<Result<_, _>>()?;
                MatQ::from_rows(rows).map_err(|e| CliError::Invalid(format!("integral_basis: {e}")))
            })
            .transpose()?;
        let fund = self
            .fundamental_units
            .as_ref()
            .map(|us| us.iter().map(|u| element(u, n)).collect::<Result<Vec<_>, _>>())
            .transpose()?;
        let tpu = self.totally_positive_units.iter().map(|u| element(u, n)).collect::<Result<Vec<_>, _>>()?;
        let tie = match self.tie_break.as_deref() {
            None => TieBreak::default(),
            Some(s) => TieBreak::parse(s)
                .ok_or_else(|| CliError::Parse(format!("tie_break must be \"plus\" or \"minus\", not {s:?}")))?,
        };
        let spec = FieldSpec::new(self.name.clone(), g, BigInt::from(self.discriminant), basis, fund, tpu)
            .map_err(|e| CliError::Invalid(e.to_string()))?;
        Ok(spec.with_q2(self.q2).with_tie_break(tie))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_and_errors() {
        assert_eq!(parse_rational("-3/6").unwrap(), BigRational::new((-1).into(), 2.into()));
        assert_eq!(parse_rational("7").unwrap(), BigRational::from_integer(7.into()));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        let err = FieldFile::parse("{\"name\": 1,").unwrap_err().to_string();
        assert!(err.contains("line 1"), "{err}");
    }
}
