//! JSON interchange format.
//!
//! ```json
//! {"bracket": [[0, 1, 2, "1"], ...], "circ": [], "dim": 3,
//!  "field": {"kind": "GF", "p": 3}, "name": "sl2", "parity": [0, 0, 0]}
//! ```
//!
//! Indices are 0-based, tables are sorted by `(i, j, k)` and scalars use the
//! canonical textual form, so saving is deterministic and a load/save cycle
//! reproduces the input byte for byte.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{Product, SuperAlgebra, TableEntry};
use crate::error::{Error, Result};
use crate::exactmath::{FieldJson, FieldSpec};
use crate::kantor::DoubleLayout;

type RawEntry = (usize, usize, usize, String);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub field: FieldJson,
    pub dim: usize,
    pub parity: Vec<u8>,
    #[serde(default)]
    pub circ: Vec<RawEntry>,
    #[serde(default)]
    pub bracket: Vec<RawEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub layout: Option<DoubleLayout>,
}

impl AlgebraFile {
    pub fn from_algebra(a: &SuperAlgebra) -> Self {
        let raw = |which| a.table(which).map(|(i, j, k, c)| (i, j, k, c.to_string())).collect();
        AlgebraFile {
            name: a.name().to_string(),
            field: a.field().into(),
            dim: a.dim(),
            parity: a.parity().to_vec(),
            circ: raw(Product::Circ),
            bracket: raw(Product::Bracket),
            layout: a.layout().cloned(),
        }
    }

    pub fn to_algebra(&self) -> Result<SuperAlgebra> {
        let field = FieldSpec::try_from(self.field.clone())?;
        if self.parity.len() != self.dim {
            return Err(Error::Input(format!(
                "parity vector has {} entries but dim is {}",
                self.parity.len(),
                self.dim
            )));
        }
        let parse = |t: &[RawEntry]| -> Result<Vec<TableEntry>> {
            t.iter().map(|(i, j, k, c)| Ok((*i, *j, *k, field.parse_scalar(c)?))).collect()
        };
        let a = SuperAlgebra::new(self.name.clone(), field, self.parity.clone(), parse(&self.circ)?, parse(&self.bracket)?)?;
        Ok(match &self.layout {
            Some(l) => a.with_layout(l.clone()),
            None => a,
        })
    }

    /// Pretty JSON with sorted object keys and a trailing newline.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("plain data serializes");
        let mut s = serde_json::to_string_pretty(&value).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

impl SuperAlgebra {
    pub fn to_json(&self) -> String {
        AlgebraFile::from_algebra(self).to_json()
    }

    pub fn from_json(text: &str) -> Result<SuperAlgebra> {
        AlgebraFile::from_json(text)?.to_algebra()
    }

    pub fn load(path: impl AsRef<Path>) -> Result<SuperAlgebra> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
        SuperAlgebra::from_json(&text)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        std::fs::write(path, self.to_json()).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
    }
}
