//! Preprojective and preinjective components by iterated translation.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::classify::{classify, QuiverClass};
use crate::error::{Error, Result};
use crate::field::ExactField;
use crate::quiver::{DimVector, Quiver, VertexId};
use crate::rep::{RepJson, Representation, DEFAULT_DIMENSION_CAP};

use super::basic::{injective, projective};
use super::tau::{tau_dropping_projectives, tau_minus_dropping_injectives, tau_power};

/// Position of an indecomposable in the preprojective (`τ^{-k} P_i`) or
/// preinjective (`τ^k I_i`) component.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ArCoordinate {
    Preprojective { k: usize, vertex: VertexId },
    Preinjective { k: usize, vertex: VertexId },
}

impl fmt::Display for ArCoordinate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArCoordinate::Preprojective { k, vertex } => write!(f, "preproj:k={k},i={vertex}"),
            ArCoordinate::Preinjective { k, vertex } => write!(f, "preinj:k={k},i={vertex}"),
        }
    }
}

impl FromStr for ArCoordinate {
    type Err = Error;

    /// Parses `preproj:k=2,i=1` or `preinj:k=0,i=a`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || {
            Error::Parse(format!(
                "bad coordinate {s:?}; expected preproj:k=K,i=V or preinj:k=K,i=V"
            ))
        };
        let (kind, rest) = s.split_once(':').ok_or_else(bad)?;
        let mut k = None;
        let mut vertex = None;
        for part in rest.split(',') {
            match part.split_once('=').ok_or_else(bad)? {
                ("k", v) => k = Some(v.trim().parse::<usize>().map_err(|_| bad())?),
                ("i", v) => {
                    let v = v.trim();
                    vertex = Some(
                        v.parse::<i64>()
                            .map(VertexId::Int)
                            .unwrap_or_else(|_| VertexId::Name(v.into())),
                    );
                }
                _ => return Err(bad()),
            }
        }
        let (k, vertex) = (k.ok_or_else(bad)?, vertex.ok_or_else(bad)?);
        match kind {
            "preproj" => Ok(ArCoordinate::Preprojective { k, vertex }),
            "preinj" => Ok(ArCoordinate::Preinjective { k, vertex }),
            _ => Err(bad()),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub coordinate: ArCoordinate,
    pub module: Representation,
}

#[derive(Serialize)]
struct CatalogEntryJson {
    coordinate: String,
    dims: DimVector,
    module: RepJson,
}

impl CatalogEntry {
    pub fn to_json_value(&self) -> Result<serde_json::Value> {
        Ok(serde_json::to_value(CatalogEntryJson {
            coordinate: self.coordinate.to_string(),
            dims: self.module.dims().clone(),
            module: self.module.to_json_struct()?,
        })?)
    }
}

fn require_bound(q: &Quiver, bound: Option<usize>) -> Result<Option<usize>> {
    match (classify(q), bound) {
        (_, Some(b)) => Ok(Some(b)),
        (QuiverClass::Dynkin { .. }, None) => Ok(None),
        (QuiverClass::Affine { .. }, None) => Err(Error::PreconditionFailed(
            "the component is infinite for an affine quiver; give a knitting bound".into(),
        )),
        (QuiverClass::Wild, None) => Err(Error::WildQuiver),
    }
}

fn knit(
    q: &Arc<Quiver>,
    bound: Option<usize>,
    start: impl Fn(usize) -> Representation,
    step: impl Fn(&Representation) -> Result<Representation>,
    coord: impl Fn(usize, VertexId) -> ArCoordinate,
) -> Result<Vec<CatalogEntry>> {
    let bound = require_bound(q, bound)?;
    let mut out = Vec::new();
    for v in 0..q.vertex_count() {
        let mut m = start(v);
        let mut k = 0;
        loop {
            if m.is_zero() {
                break;
            }
            out.push(CatalogEntry {
                coordinate: coord(k, q.vertex(v).clone()),
                module: m.clone(),
            });
            if bound.is_some_and(|b| k >= b) {
                break;
            }
            m = match step(&m) {
                Err(Error::DimensionCap { total, .. }) => {
                    return Err(Error::BoundTooLarge(format!(
                        "module of total dimension {total} exceeds the cap {DEFAULT_DIMENSION_CAP}"
                    )))
                }
                r => r?,
            };
            k += 1;
        }
    }
    out.sort_by(|a, b| a.coordinate.cmp(&b.coordinate));
    Ok(out)
}

/// `τ^{-k} P_i` for all `i` and `k ≤ bound` (all of them for Dynkin quivers
/// when no bound is given).
pub fn knit_preprojective(
    q: &Arc<Quiver>,
    field: ExactField,
    bound: Option<usize>,
) -> Result<Vec<CatalogEntry>> {
    knit(
        q,
        bound,
        |v| projective(q, field, v),
        tau_minus_dropping_injectives,
        |k, vertex| ArCoordinate::Preprojective { k, vertex },
    )
}

/// `τ^k I_i` for all `i` and `k ≤ bound`.
pub fn knit_preinjective(
    q: &Arc<Quiver>,
    field: ExactField,
    bound: Option<usize>,
) -> Result<Vec<CatalogEntry>> {
    knit(
        q,
        bound,
        |v| injective(q, field, v),
        tau_dropping_projectives,
        |k, vertex| ArCoordinate::Preinjective { k, vertex },
    )
}

/// Every indecomposable for a Dynkin quiver; preprojectives followed by
/// preinjectives up to `bound` otherwise.
pub fn catalog(
    q: &Arc<Quiver>,
    field: ExactField,
    bound: Option<usize>,
) -> Result<Vec<CatalogEntry>> {
    let mut out = knit_preprojective(q, field, bound)?;
    if !classify(q).is_dynkin() {
        out.extend(knit_preinjective(q, field, bound)?);
    }
    Ok(out)
}

/// The module at a coordinate.
pub fn coordinate_module(
    q: &Arc<Quiver>,
    field: ExactField,
    coord: &ArCoordinate,
) -> Result<Representation> {
    let m = match coord {
        ArCoordinate::Preprojective { k, vertex } => {
            tau_power(&projective(q, field, q.vertex_index(vertex)?), -(*k as i64))?
        }
        ArCoordinate::Preinjective { k, vertex } => {
            tau_power(&injective(q, field, q.vertex_index(vertex)?), *k as i64)?
        }
    };
    if m.is_zero() {
        return Err(Error::PreconditionFailed(format!("{coord} is zero")));
    }
    Ok(m)
}

/// The preprojective or preinjective indecomposable with dimension vector
/// `d`. For Dynkin quivers this covers every positive root.
pub fn indecomposable_of_root(
    q: &Arc<Quiver>,
    field: ExactField,
    d: &DimVector,
) -> Result<CatalogEntry> {
    if d.len() != q.vertex_count() {
        return Err(Error::IndexMismatch {
            expected: q.vertex_count(),
            got: d.len(),
        });
    }
    let not_root = || Error::NotARoot(d.to_string());
    if !d.is_nonnegative() || d.is_zero() || q.quadratic_form(d)? != 1 {
        return Err(not_root());
    }
    let total = d.total();
    let search = |start: &dyn Fn(usize) -> Representation,
                  step: &dyn Fn(&Representation) -> Result<Representation>,
                  coord: &dyn Fn(usize, VertexId) -> ArCoordinate|
     -> Result<Option<CatalogEntry>> {
        for v in 0..q.vertex_count() {
            let mut m = start(v);
            let mut k = 0;
            // translates along a component eventually grow past `total`
            while !m.is_zero() && k <= 4 * total as usize + 4 {
                if m.dims() == d {
                    return Ok(Some(CatalogEntry {
                        coordinate: coord(k, q.vertex(v).clone()),
                        module: m,
                    }));
                }
                m = match step(&m) {
                    Ok(next) => next,
                    Err(Error::DimensionCap { .. }) => break,
                    Err(err) => return Err(err),
                };
                k += 1;
            }
        }
        Ok(None)
    };
    if let Some(e) = search(
        &|v| projective(q, field, v),
        &tau_minus_dropping_injectives,
        &|k, vertex| ArCoordinate::Preprojective { k, vertex },
    )? {
        return Ok(e);
    }
    if let Some(e) = search(
        &|v| injective(q, field, v),
        &tau_dropping_projectives,
        &|k, vertex| ArCoordinate::Preinjective { k, vertex },
    )? {
        return Ok(e);
    }
    Err(not_root())
}
