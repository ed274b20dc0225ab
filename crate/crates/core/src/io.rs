//! JSON algebra files.
//!
//! ```json
//! {
//!   "field": "Q",
//!   "dim": 2,
//!   "products": [
//!     { "op": "vdash", "i": 0, "j": 0, "value": ["0", "1"] }
//!   ]
//! }
//! ```
//!
//! Omitted products are zero. An optional `"name"` labels the algebra and an
//! optional `"kernel"` lists basis vectors of a distinguished subspace (the
//! kernel of a cover, say). Files written by [`emit`] list only nonzero
//! products, sorted by `(op, i, j)`, and are fixed points of parse then emit.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::{Field, Scalar, Subspace};
use crate::trialgebra::{Op, TriAlgebra};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    field: String,
    dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    products: Vec<RawEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    kernel: Option<Vec<Vec<String>>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEntry {
    op: String,
    i: usize,
    j: usize,
    value: Vec<String>,
}

/// A parsed algebra file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraFile {
    pub algebra: TriAlgebra,
    pub kernel: Option<Subspace>,
}

fn parse_vector(field: Field, dim: usize, raw: &[String], at: &str) -> Result<Vec<Scalar>> {
    if raw.len() != dim {
        return Err(Error::Parse(format!("{at}: expected {dim} coordinates, found {}", raw.len())));
    }
    raw.iter()
        .enumerate()
        .map(|(c, s)| field.parse_scalar(s).map_err(|e| Error::Parse(format!("{at}[{c}]: {e}"))))
        .collect()
}

pub fn parse(text: &str) -> Result<AlgebraFile> {
    let raw: RawFile = serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("line {} column {}: {e}", e.line(), e.column())))?;
    let field = Field::from_descriptor(&raw.field).map_err(|e| Error::Parse(format!("field: {e}")))?;
    let n = raw.dim;
    let mut algebra = TriAlgebra::abelian(field, n);
    let mut seen = HashSet::new();
    for (t, entry) in raw.products.iter().enumerate() {
        let at = format!("products[{t}]");
        let op = Op::from_name(&entry.op)
            .ok_or_else(|| Error::Parse(format!("{at}: unknown op {:?} (expected vdash, dashv or perp)", entry.op)))?;
        if entry.i >= n || entry.j >= n {
            return Err(Error::Parse(format!("{at}: index ({}, {}) out of range for dim {n}", entry.i, entry.j)));
        }
        if !seen.insert((op, entry.i, entry.j)) {
            return Err(Error::Parse(format!("{at}: duplicate entry ({}, {}, {})", entry.op, entry.i, entry.j)));
        }
        let value = parse_vector(field, n, &entry.value, &format!("{at}.value"))?;
        algebra.set_product(op, entry.i, entry.j, value)?;
    }
    if let Some(name) = raw.name {
        algebra = algebra.with_name(name);
    }
    let kernel = match raw.kernel {
        None => None,
        Some(rows) => {
            let vecs = rows
                .iter()
                .enumerate()
                .map(|(r, row)| parse_vector(field, n, row, &format!("kernel[{r}]")))
                .collect::<Result<Vec<_>>>()?;
            Some(Subspace::span(field, n, vecs)?)
        }
    };
    Ok(AlgebraFile { algebra, kernel })
}

fn strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(Scalar::to_string).collect()
}

/// Canonical pretty-printed JSON, terminated by a newline.
pub fn emit(algebra: &TriAlgebra, kernel: Option<&Subspace>) -> String {
    let n = algebra.dim();
    let mut products = Vec::new();
    for op in Op::ALL {
        for i in 0..n {
            for j in 0..n {
                let v = algebra.product(op, i, j);
                if v.iter().any(|s| !s.is_zero()) {
                    products.push(RawEntry { op: op.name().to_string(), i, j, value: strings(v) });
                }
            }
        }
    }
    let raw = RawFile {
        field: algebra.field().descriptor(),
        dim: n,
        name: algebra.name().map(str::to_string),
        products,
        kernel: kernel.map(|k| k.basis_vectors().map(strings).collect()),
    };
    let mut s = serde_json::to_string_pretty(&raw).expect("plain data serializes");
    s.push('\n');
    s
}
