//! JSON form of representations.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::ExactField;
use crate::quiver::{Quiver, RawQuiver};

use super::Representation;

/// `{"dims":{vertex:int},"field":{...},"matrices":{arrow:[[int]]},"quiver":{...}}`.
/// Field order gives sorted keys.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepJson {
    pub dims: BTreeMap<String, i64>,
    pub field: ExactField,
    pub matrices: BTreeMap<String, Vec<Vec<i64>>>,
    pub quiver: RawQuiver,
}

impl Representation {
    pub fn to_json_struct(&self) -> Result<RepJson> {
        let q = self.quiver();
        let dims = q
            .vertices()
            .iter()
            .enumerate()
            .map(|(i, v)| (v.to_string(), self.dims().get(i)))
            .collect();
        let matrices = q
            .arrows()
            .iter()
            .zip(self.maps())
            .map(|(a, m)| Ok((a.id.clone(), m.to_i64_rows()?)))
            .collect::<Result<_>>()?;
        Ok(RepJson {
            dims,
            field: self.field(),
            matrices,
            quiver: q.to_raw(),
        })
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(&self.to_json_struct()?)?)
    }

    pub fn from_json_struct(raw: RepJson) -> Result<Self> {
        let quiver = Arc::new(Quiver::validate(raw.quiver)?);
        Self::from_json_on(raw.dims, raw.field, raw.matrices, quiver)
    }

    /// Reads a representation whose quiver is supplied separately.
    pub fn from_json_on(
        dims: BTreeMap<String, i64>,
        field: ExactField,
        matrices: BTreeMap<String, Vec<Vec<i64>>>,
        quiver: Arc<Quiver>,
    ) -> Result<Self> {
        if let ExactField::Prime { p } = field {
            ExactField::prime(p)?;
        }
        let mut d = vec![0i64; quiver.vertex_count()];
        if dims.len() != d.len() {
            return Err(Error::IndexMismatch {
                expected: d.len(),
                got: dims.len(),
            });
        }
        for (k, v) in &dims {
            let idx = quiver
                .vertices()
                .iter()
                .position(|x| &x.to_string() == k)
                .ok_or_else(|| Error::UnknownVertex(k.clone()))?;
            d[idx] = *v;
        }
        let mut maps = Vec::with_capacity(quiver.arrows().len());
        for a in quiver.arrows() {
            let rows = d[a.target].max(0) as usize;
            let m = match matrices.get(&a.id) {
                Some(m) => m.clone(),
                None if rows == 0 || d[a.source] == 0 => {
                    vec![vec![0; d[a.source].max(0) as usize]; rows]
                }
                None => {
                    return Err(Error::ShapeMismatch(format!(
                        "missing matrix for arrow {}",
                        a.id
                    )))
                }
            };
            // `[]` stands for any matrix without rows
            let m = if m.is_empty() { vec![] } else { m };
            maps.push(m);
        }
        if let Some(k) = matrices.keys().find(|k| quiver.arrow_index(k).is_none()) {
            return Err(Error::ShapeMismatch(format!(
                "matrix for unknown arrow {k}"
            )));
        }
        Representation::from_i64(quiver, field, d, &maps)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Self::from_json_struct(serde_json::from_str(s)?)
    }
}
