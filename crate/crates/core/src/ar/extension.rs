//! Extensions `0 → X → Y → S → 0` built from cocycles.

use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::rep::{ext_space, Morphism, Representation};

use super::tau::tau;

/// A short exact sequence `0 → sub → middle → quotient → 0`. The middle term
/// is `sub ⊕ quotient` at every vertex, so `sub` sits in the leading
/// coordinates.
#[derive(Debug, Clone)]
pub struct ExtensionData {
    pub sub: Representation,
    pub quotient: Representation,
    pub middle: Representation,
    /// `ζ_α: S_{s(α)} → X_{t(α)}` per arrow.
    pub cocycle: Vec<ExactMatrix>,
    pub inclusion: Morphism,
    pub projection: Morphism,
}

/// The middle term with `Y_α = [[X_α, ζ_α], [0, S_α]]`.
pub fn extension_module(
    x: &Representation,
    s: &Representation,
    cocycle: Vec<ExactMatrix>,
) -> Result<ExtensionData> {
    x.check_compatible(s)?;
    let q = x.quiver();
    let field = x.field();
    if cocycle.len() != q.arrows().len() {
        return Err(Error::ShapeMismatch(
            "one cocycle block per arrow expected".into(),
        ));
    }
    let mut maps = Vec::with_capacity(cocycle.len());
    for (k, a) in q.arrows().iter().enumerate() {
        if cocycle[k].shape() != (x.dim(a.target), s.dim(a.source)) {
            return Err(Error::ShapeMismatch(format!(
                "cocycle block for arrow {}",
                a.id
            )));
        }
        let top = x.map(k).hstack(&cocycle[k]);
        let bottom = ExactMatrix::zeros(field, s.dim(a.target), x.dim(a.source)).hstack(s.map(k));
        maps.push(top.vstack(&bottom));
    }
    let middle = Representation::new(q.clone(), field, x.dims() + s.dims(), maps)?;
    let n = q.vertex_count();
    let incl = (0..n)
        .map(|v| {
            ExactMatrix::identity(field, x.dim(v)).vstack(&ExactMatrix::zeros(
                field,
                s.dim(v),
                x.dim(v),
            ))
        })
        .collect();
    let proj = (0..n)
        .map(|v| {
            ExactMatrix::zeros(field, s.dim(v), x.dim(v))
                .hstack(&ExactMatrix::identity(field, s.dim(v)))
        })
        .collect();
    Ok(ExtensionData {
        inclusion: Morphism::new(x.clone(), middle.clone(), incl)?,
        projection: Morphism::new(middle.clone(), s.clone(), proj)?,
        sub: x.clone(),
        quotient: s.clone(),
        middle,
        cocycle,
    })
}

/// Whether the sequence splits, i.e. the cocycle lies in the image of `Φ_S^X`.
pub fn is_split(e: &ExtensionData) -> Result<bool> {
    Ok(ext_space(&e.quotient, &e.sub)?.is_split(&e.cocycle))
}

/// The extension of `S` by `X` spanning `Ext¹(S, X)` when it is
/// one-dimensional; the split sequence when it vanishes.
pub fn generating_extension(s: &Representation, x: &Representation) -> Result<ExtensionData> {
    let ext = ext_space(s, x)?;
    let cocycle = match ext.dim {
        0 => x
            .quiver()
            .arrows()
            .iter()
            .map(|a| ExactMatrix::zeros(x.field(), x.dim(a.target), s.dim(a.source)))
            .collect(),
        1 => ext.cocycle(0),
        d => return Err(Error::ExtTooBig(d)),
    };
    extension_module(x, s, cocycle)
}

/// `0 → τM → E → M → 0` for a non-projective brick `M`, where
/// `Ext¹(M, τM)` is one-dimensional.
pub fn almost_split_sequence(m: &Representation) -> Result<ExtensionData> {
    let t = tau(m)?;
    let ext = ext_space(m, &t)?;
    if ext.dim != 1 {
        return Err(Error::NotBrick(crate::rep::hom_dim(m, m)?));
    }
    extension_module(&t, m, ext.cocycle(0))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::ar::basic::{projective, simple};
    use crate::field::ExactField;
    use crate::quiver::{DimVector, Quiver};
    use crate::rep::{decompose, is_isomorphic, IsoOptions};

    #[test]
    fn a2_generating_extension_is_projective() {
        let qv = Arc::new(Quiver::from_edges(2, &[(1, 2)]).unwrap());
        let f = ExactField::Rationals;
        let (s1, s2) = (simple(&qv, f, 0), simple(&qv, f, 1));
        let e = generating_extension(&s1, &s2).unwrap();
        assert!(!is_split(&e).unwrap());
        assert!(is_isomorphic(&e.middle, &projective(&qv, f, 0), &IsoOptions::default()).unwrap());
        let split = generating_extension(&s2, &s1).unwrap();
        assert!(is_split(&split).unwrap());
        assert!(e.inclusion.then(&e.projection).is_zero());
    }

    #[test]
    fn kronecker_almost_split() {
        let qv = Arc::new(Quiver::from_edges(2, &[(1, 2), (1, 2)]).unwrap());
        let f = ExactField::prime(3).unwrap();
        let m = crate::ar::tau::tau_minus(&projective(&qv, f, 1)).unwrap();
        let e = almost_split_sequence(&m).unwrap();
        assert_eq!(e.middle.dims(), &DimVector(vec![2, 4]));
        let parts = decompose(&e.middle, 0).unwrap();
        assert_eq!(parts.len(), 2);
        for p in parts {
            assert!(is_isomorphic(&p.rep, &projective(&qv, f, 0), &IsoOptions::default()).unwrap());
        }
    }

    #[test]
    fn ext_too_big() {
        let qv = Arc::new(Quiver::from_edges(2, &[(1, 2), (1, 2)]).unwrap());
        let f = ExactField::Rationals;
        let r = generating_extension(&simple(&qv, f, 0), &simple(&qv, f, 1));
        assert!(matches!(r, Err(Error::ExtTooBig(2))));
    }
}
