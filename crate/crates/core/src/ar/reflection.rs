//! The subrepresentations `X_S ⊆ X` and `S^X ⊆ S` attached to a pair with
//! `dim Ext¹(S, X) = 1`.
//!
//! `X_S` is the largest subrepresentation `N ⊆ X` such that the generating
//! extension survives pushing to `X/N`, and `S^X` the smallest `N ⊆ S` such
//! that it survives pulling back to `N`. They are computed as the kernel of
//! a nonzero `X → τS` and the image of a nonzero `τ⁻X → S`. The cokernel of
//! a nonzero `X → τ(S^X)` is injective, `⊕_k I_k^{f_k}`.

use crate::error::{Error, Result};
use crate::quiver::DimVector;
use crate::rep::{
    ext1_dim, hom_basis, hom_dim, is_isomorphic, power, IsoOptions, Representation, SubrepWitness,
};

use super::basic::{injective, simple};
use super::tau::{tau_dropping_projectives, tau_minus_dropping_injectives};

#[derive(Debug, Clone)]
pub struct Reflections {
    /// `X_S` as a subrepresentation of `X`.
    pub x_s: SubrepWitness,
    /// `S^X` as a subrepresentation of `S`.
    pub s_x: SubrepWitness,
    pub x_s_module: Representation,
    pub s_x_module: Representation,
    /// `S / S^X`.
    pub s_mod_s_x: Representation,
    /// `X / X_S`.
    pub x_mod_x_s: Representation,
    /// `I = coker(X → τ(S^X))`.
    pub injective_part: Representation,
    /// Multiplicities of `I_k` in `I`.
    pub f: DimVector,
}

fn unique_nonzero(
    m: &Representation,
    n: &Representation,
    what: &str,
) -> Result<crate::rep::Morphism> {
    let mut basis = hom_basis(m, n)?;
    if basis.len() != 1 {
        return Err(Error::PreconditionFailed(format!(
            "dim Hom for {what} is {}, expected 1",
            basis.len()
        )));
    }
    Ok(basis.remove(0))
}

/// Computes `X_S`, `S^X`, the injective cokernel `I` and its multiplicity
/// vector. Requires `dim Ext¹(S, X) = 1`.
pub fn ringel_reflections(x: &Representation, s: &Representation) -> Result<Reflections> {
    x.check_compatible(s)?;
    match ext1_dim(s, x)? {
        1 => {}
        0 => return Err(Error::PreconditionFailed("Ext¹(S, X) = 0".into())),
        d => return Err(Error::ExtTooBig(d)),
    }
    let q = x.quiver();
    let field = x.field();

    // Ext¹(S, X) ≅ D Hom(X, τS) ≅ D Hom(τ⁻X, S)
    let f = unique_nonzero(x, &tau_dropping_projectives(s)?, "X → τS")?;
    let x_s = f.kernel_witness();
    let g = unique_nonzero(&tau_minus_dropping_injectives(x)?, s, "τ⁻X → S")?;
    let s_x = g.image_witness();

    let (x_s_module, _) = x.sub(&x_s)?;
    let (s_x_module, _) = s.sub(&s_x)?;
    let (s_mod_s_x, _) = s.quotient(&s_x)?;
    let (x_mod_x_s, _) = x.quotient(&x_s)?;

    let h = unique_nonzero(x, &tau_dropping_projectives(&s_x_module)?, "X → τ(S^X)")?;
    if h.kernel_witness().canonical() != x_s.canonical() {
        return Err(Error::InjectiveDecompositionFailed(
            "kernel of X → τ(S^X) differs from X_S".into(),
        ));
    }
    let (injective_part, _) = h.cokernel()?;
    let n = q.vertex_count();
    let mults = (0..n)
        .map(|k| hom_dim(&simple(q, field, k), &injective_part).map(|d| d as i64))
        .collect::<Result<Vec<_>>>()?;
    let mut expected = Representation::zero(q.clone(), field);
    for (k, &c) in mults.iter().enumerate() {
        expected = expected.direct_sum(&power(&injective(q, field, k), c as usize))?;
    }
    if !is_isomorphic(&injective_part, &expected, &IsoOptions::default())? {
        return Err(Error::InjectiveDecompositionFailed(format!(
            "cokernel of dimension {} is not ⊕ I_k^{:?}",
            injective_part.dims(),
            mults
        )));
    }
    Ok(Reflections {
        x_s,
        s_x,
        x_s_module,
        s_x_module,
        s_mod_s_x,
        x_mod_x_s,
        injective_part,
        f: DimVector(mults),
    })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::ar::basic::projective;
    use crate::field::ExactField;
    use crate::quiver::Quiver;

    #[test]
    fn a2_simples() {
        let qv = Arc::new(Quiver::from_edges(2, &[(1, 2)]).unwrap());
        let f = ExactField::Rationals;
        let (s1, s2) = (simple(&qv, f, 0), simple(&qv, f, 1));
        // 0 → S_2 → P_1 → S_1 → 0: nothing survives a proper quotient or sub
        let r = ringel_reflections(&s2, &s1).unwrap();
        assert!(r.x_s_module.is_zero());
        assert_eq!(r.s_x_module.dims(), s1.dims());
        assert!(r.injective_part.is_zero());
        assert_eq!(r.f, DimVector(vec![0, 0]));
        assert!(ringel_reflections(&s1, &s2).is_err());
    }

    #[test]
    fn kronecker_projective_pair() {
        let qv = Arc::new(Quiver::from_edges(2, &[(1, 2), (1, 2)]).unwrap());
        let f = ExactField::prime(5).unwrap();
        let x = projective(&qv, f, 0);
        let s = crate::rep::Representation::from_i64(
            qv.clone(),
            f,
            vec![1, 1],
            &[vec![vec![1]], vec![vec![2]]],
        )
        .unwrap();
        let r = ringel_reflections(&x, &s).unwrap();
        assert_eq!(r.x_s.dims(), DimVector(vec![0, 1]));
        assert_eq!(r.s_x.dims(), DimVector(vec![1, 1]));
        assert_eq!(r.f, DimVector(vec![0, 0]));
    }
}
