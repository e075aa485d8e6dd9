//! Auslander-Reiten translates.
//!
//! `τM` is computed as `D Ext¹(M, A)` with `A = ⊕_v P_v`: the space at `v`
//! is the dual of `Ext¹(M, P_v)`, and an arrow `α: i → j` acts by the
//! transpose of the map `Ext¹(M, P_j) → Ext¹(M, P_i)` induced by left
//! multiplication `P_j → P_i`. Projective summands of `M` contribute nothing.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::quiver::DimVector;
use crate::rep::{ext_space, hom_dim, Representation};

use super::basic::{injective, left_multiplication, projective};

/// `Σ_v dim Hom(M, P_v)`; nonzero exactly when `M` has a projective summand.
pub fn hom_to_projectives(m: &Representation) -> Result<usize> {
    let q = m.quiver();
    (0..q.vertex_count())
        .map(|v| hom_dim(m, &projective(q, m.field(), v)))
        .sum()
}

/// `Σ_v dim Hom(I_v, M)`; nonzero exactly when `M` has an injective summand.
pub fn hom_from_injectives(m: &Representation) -> Result<usize> {
    let q = m.quiver();
    (0..q.vertex_count())
        .map(|v| hom_dim(&injective(q, m.field(), v), m))
        .sum()
}

pub fn has_projective_summand(m: &Representation) -> Result<bool> {
    Ok(hom_to_projectives(m)? > 0)
}

pub fn has_injective_summand(m: &Representation) -> Result<bool> {
    Ok(hom_from_injectives(m)? > 0)
}

/// `D Ext¹(M, A)`: the translate of `M` with projective summands dropped.
pub fn tau_dropping_projectives(m: &Representation) -> Result<Representation> {
    let q = m.quiver();
    let field = m.field();
    let exts = (0..q.vertex_count())
        .map(|v| ext_space(m, &projective(q, field, v)))
        .collect::<Result<Vec<_>>>()?;
    let dims = DimVector(exts.iter().map(|e| e.dim as i64).collect());
    let maps: Vec<ExactMatrix> = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(k, a)| {
            let rho = left_multiplication(q, field, k);
            exts[a.target]
                .push_forward(&exts[a.source], &rho)
                .transpose()
        })
        .collect();
    Representation::new(q.clone(), field, dims, maps)
}

/// `τ⁻M = D τ_{Q^op} D M` with injective summands dropped.
pub fn tau_minus_dropping_injectives(m: &Representation) -> Result<Representation> {
    let t = tau_dropping_projectives(&m.dual())?;
    t.dual().on_quiver(m.quiver().clone())
}

/// `τM`; fails on modules with a projective summand.
pub fn tau(m: &Representation) -> Result<Representation> {
    if has_projective_summand(m)? {
        return Err(Error::ProjectiveSummand);
    }
    tau_dropping_projectives(m)
}

/// `τ⁻M`; fails on modules with an injective summand.
pub fn tau_minus(m: &Representation) -> Result<Representation> {
    if has_injective_summand(m)? {
        return Err(Error::InjectiveSummand);
    }
    tau_minus_dropping_injectives(m)
}

/// `τ^k` for `k ≥ 0` and `τ^{-k}` for `k < 0`, dropping (co)projective parts.
pub fn tau_power(m: &Representation, k: i64) -> Result<Representation> {
    let mut cur = m.clone();
    for _ in 0..k.unsigned_abs() {
        cur = if k > 0 {
            tau_dropping_projectives(&cur)?
        } else {
            tau_minus_dropping_injectives(&cur)?
        };
    }
    Ok(cur)
}

/// Dimension vector of `τM` for `M` without projective summands:
/// `dim(τM)_v = −⟨dim M, dim P_v⟩`.
pub fn coxeter_dim(q: &Arc<crate::quiver::Quiver>, d: &DimVector) -> Result<DimVector> {
    let field = crate::field::ExactField::Rationals;
    let h = q.euler_matrix();
    Ok(DimVector(
        (0..q.vertex_count())
            .map(|v| -h.pair(d, projective(q, field, v).dims()))
            .collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ar::basic::simple;
    use crate::field::ExactField;
    use crate::quiver::Quiver;
    use crate::rep::{ext1_dim, is_isomorphic, IsoOptions};

    fn q(n: usize, e: &[(i64, i64)]) -> Arc<Quiver> {
        Arc::new(Quiver::from_edges(n, e).unwrap())
    }

    #[test]
    fn a2_translates() {
        let qv = q(2, &[(1, 2)]);
        let f = ExactField::Rationals;
        let s1 = simple(&qv, f, 0);
        let s2 = simple(&qv, f, 1);
        let t = tau(&s1).unwrap();
        assert!(is_isomorphic(&t, &s2, &IsoOptions::default()).unwrap());
        assert_eq!(tau(&projective(&qv, f, 0)), Err(Error::ProjectiveSummand));
        assert!(is_isomorphic(&tau_minus(&s2).unwrap(), &s1, &IsoOptions::default()).unwrap());
        assert_eq!(tau_minus(&s1), Err(Error::InjectiveSummand));
    }

    #[test]
    fn kronecker_preprojectives() {
        let qv = q(2, &[(1, 2), (1, 2)]);
        let f = ExactField::prime(7).unwrap();
        let p1 = projective(&qv, f, 0);
        let p2 = projective(&qv, f, 1);
        assert_eq!(p1.dims(), &DimVector(vec![1, 2]));
        let t1 = tau_minus(&p1).unwrap();
        let t2 = tau_minus(&p2).unwrap();
        assert_eq!(t2.dims(), &DimVector(vec![2, 3]));
        assert_eq!(t1.dims(), &DimVector(vec![3, 4]));
        assert!(t1.is_brick() && t1.is_rigid());
        let back = tau(&t1).unwrap();
        assert!(is_isomorphic(&back, &p1, &IsoOptions::default()).unwrap());
    }

    #[test]
    fn translate_dimension_and_ar_formula() {
        let f = ExactField::prime(5).unwrap();
        let qv = q(4, &[(2, 1), (3, 1), (4, 1)]);
        let opts = IsoOptions::default();
        let mut m = projective(&qv, f, 1);
        for _ in 0..2 {
            m = tau_minus(&m).unwrap();
            let t = tau(&m).unwrap();
            assert_eq!(t.dims(), &coxeter_dim(&qv, m.dims()).unwrap());
            // Ext¹(M, N) ≅ D Hom(N, τM)
            for v in 0..4 {
                let s = simple(&qv, f, v);
                assert_eq!(ext1_dim(&m, &s).unwrap(), hom_dim(&s, &t).unwrap());
            }
            assert!(is_isomorphic(&tau_minus(&t).unwrap(), &m, &opts).unwrap());
        }
    }
}
