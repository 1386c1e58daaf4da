use std::fs;
use std::path::Path;

use serde::Serialize;

use cellres::cwposet::CWChainData;
use cellres::monoid::{parse_ideal, parse_ideal_infer, MonomialIdeal};
use cellres::rescomplex::GradedFreeComplex;

use crate::commands::Outcome;

pub fn read(path: &Path) -> Result<String, Outcome> {
    fs::read_to_string(path).map_err(|e| Outcome::error(2, format!("{}: {e}", path.display())))
}

/// Ideal files are JSON when they start with `{`, otherwise the text grammar.
pub fn read_ideal(path: &Path, vars: Option<&[String]>) -> Result<MonomialIdeal, Outcome> {
    let text = read(path)?;
    let parsed = if text.trim_start().starts_with('{') {
        serde_json::from_str::<MonomialIdeal>(&text).map_err(|e| e.to_string())
    } else {
        match vars {
            Some(v) => parse_ideal(&text, v),
            None => parse_ideal_infer(&text),
        }
        .map_err(|e| e.to_string())
    };
    parsed.map_err(|e| Outcome::error(2, format!("{}: {e}", path.display())))
}

pub fn read_cw(path: &Path) -> Result<CWChainData, Outcome> {
    let text = read(path)?;
    serde_json::from_str(&text).map_err(|e| Outcome::error(2, format!("{}: {e}", path.display())))
}

pub enum BasisInput {
    Cw(CWChainData),
    Resolution(GradedFreeComplex),
}

/// A CW file has `cells`, a resolution file has `frames`.
pub fn read_basis_input(path: &Path) -> Result<BasisInput, Outcome> {
    let text = read(path)?;
    let bad = |e: String| Outcome::error(2, format!("{}: {e}", path.display()));
    let value: serde_json::Value = serde_json::from_str(&text).map_err(|e| bad(e.to_string()))?;
    if value.get("frames").is_some() {
        serde_json::from_value(value).map(BasisInput::Resolution).map_err(|e| bad(e.to_string()))
    } else if value.get("cells").is_some() {
        serde_json::from_value(value).map(BasisInput::Cw).map_err(|e| bad(e.to_string()))
    } else {
        Err(bad("expected a CW complex (\"cells\") or a resolution (\"frames\")".into()))
    }
}

/// Pretty JSON with object keys in sorted order.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("output types serialize");
    let mut s = serde_json::to_string_pretty(&v).expect("values serialize");
    s.push('\n');
    s
}
