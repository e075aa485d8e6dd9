//! Parsing of module arguments, dimension vectors and prime lists.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use quivergrass::ar::ArCoordinate;
use quivergrass::{DimVector, Error, ModuleSource, ModuleSpec, Quiver, Representation, Result};

pub fn read_text(arg: &str) -> Result<String> {
    if arg.trim_start().starts_with('{') {
        return Ok(arg.to_string());
    }
    std::fs::read_to_string(Path::new(arg)).map_err(|e| Error::Io(format!("{arg}: {e}")))
}

pub fn load_quiver(arg: &str) -> Result<Arc<Quiver>> {
    Ok(Arc::new(Quiver::from_json(&read_text(arg)?)?))
}

/// A module given as a catalog coordinate (`preproj:k=1,i=2`, needs a
/// quiver), an inline representation JSON object or a path to one.
pub fn load_module(arg: &str, quiver: Option<&Arc<Quiver>>) -> Result<ModuleSource> {
    let trimmed = arg.trim();
    if trimmed.starts_with("preproj:") || trimmed.starts_with("preinj:") {
        let coordinate: ArCoordinate = trimmed.parse()?;
        let q =
            quiver.ok_or_else(|| Error::PreconditionFailed(format!("{trimmed} needs --quiver")))?;
        q.vertex_index(match &coordinate {
            ArCoordinate::Preprojective { vertex, .. }
            | ArCoordinate::Preinjective { vertex, .. } => vertex,
        })?;
        return Ok(ModuleSource::new(
            q.clone(),
            ModuleSpec::Coordinate { coordinate },
        ));
    }
    let m = Representation::from_json(&read_text(trimmed)?)?;
    if let Some(q) = quiver {
        if q.as_ref() != m.quiver().as_ref() {
            return Err(Error::QuiverMismatch);
        }
    }
    ModuleSource::from_module(&m)
}

/// `0,1,2` in vertex order, or a JSON object keyed by vertex.
pub fn parse_dims(arg: &str, q: &Quiver) -> Result<DimVector> {
    let trimmed = arg.trim();
    if trimmed.starts_with('{') {
        let raw: BTreeMap<String, i64> = serde_json::from_str(trimmed)?;
        let mut out = vec![0; q.vertex_count()];
        for (k, v) in raw {
            let i = q
                .vertices()
                .iter()
                .position(|x| x.to_string() == k)
                .ok_or_else(|| Error::UnknownVertex(k.clone()))?;
            out[i] = v;
        }
        return Ok(DimVector(out));
    }
    let entries = trimmed
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad dimension vector {arg:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    if entries.len() != q.vertex_count() {
        return Err(Error::IndexMismatch {
            expected: q.vertex_count(),
            got: entries.len(),
        });
    }
    Ok(DimVector(entries))
}

pub fn parse_primes(arg: &str) -> Result<Vec<u64>> {
    arg.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| {
            let p = s
                .trim()
                .parse::<u64>()
                .map_err(|_| Error::Parse(format!("bad prime {s:?}")))?;
            quivergrass::ExactField::prime(p)?;
            Ok(p)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dims_from_list_and_map() {
        let q = Quiver::from_edges(3, &[(1, 2), (2, 3)]).unwrap();
        assert_eq!(parse_dims("1, 0,2", &q).unwrap(), DimVector(vec![1, 0, 2]));
        assert_eq!(
            parse_dims(r#"{"3":2,"1":1}"#, &q).unwrap(),
            DimVector(vec![1, 0, 2])
        );
        assert!(matches!(
            parse_dims("1,2", &q),
            Err(Error::IndexMismatch { .. })
        ));
        assert!(matches!(
            parse_dims(r#"{"7":1}"#, &q),
            Err(Error::UnknownVertex(_))
        ));
    }

    #[test]
    fn primes_are_validated() {
        assert_eq!(parse_primes("2,3,5").unwrap(), vec![2, 3, 5]);
        assert!(matches!(parse_primes("2,4"), Err(Error::NotPrime(4))));
    }
}
