//! JSON shapes shared by the public file formats.
//!
//! Matrices are written as `{"rows":R,"cols":C,"entries":[[r,c,v],...]}` with
//! entries in row-major order and no zeros. Integer entries that do not fit in
//! an `i64` are written as decimal strings.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::exactlin::{FpMatrix, IntMatrix, LinAlgError, Prime};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FpMatrixWire {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<(usize, usize, i64)>,
}

impl FpMatrixWire {
    pub fn from_matrix(m: &FpMatrix) -> Self {
        FpMatrixWire {
            rows: m.nrows(),
            cols: m.ncols(),
            entries: m.entries().map(|(r, c, v)| (r, c, v as i64)).collect(),
        }
    }

    pub fn to_matrix(&self, p: Prime) -> Result<FpMatrix, LinAlgError> {
        FpMatrix::from_triplets(p, self.rows, self.cols, self.entries.iter().copied())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IntValue {
    Small(i64),
    Big(String),
}

impl IntValue {
    pub fn from_bigint(v: &BigInt) -> Self {
        match i64::try_from(v) {
            Ok(s) => IntValue::Small(s),
            Err(_) => IntValue::Big(v.to_string()),
        }
    }

    pub fn to_bigint(&self) -> Result<BigInt, String> {
        match self {
            IntValue::Small(v) => Ok(BigInt::from(*v)),
            IntValue::Big(s) => BigInt::from_str(s).map_err(|e| format!("bad integer `{s}`: {e}")),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IntMatrixWire {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<(usize, usize, IntValue)>,
}

impl IntMatrixWire {
    pub fn from_matrix(m: &IntMatrix) -> Self {
        IntMatrixWire {
            rows: m.nrows(),
            cols: m.ncols(),
            entries: m.entries().map(|(r, c, v)| (r, c, IntValue::from_bigint(v))).collect(),
        }
    }

    pub fn to_matrix(&self) -> Result<IntMatrix, String> {
        let mut triples = Vec::with_capacity(self.entries.len());
        for (r, c, v) in &self.entries {
            triples.push((*r, *c, v.to_bigint()?));
        }
        IntMatrix::from_triplets(self.rows, self.cols, triples).map_err(|e| e.to_string())
    }
}
