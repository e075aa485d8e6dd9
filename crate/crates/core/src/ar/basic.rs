//! Indecomposable projectives, injectives and simples.

use std::sync::Arc;

use crate::error::Result;
use crate::field::ExactField;
use crate::matrix::ExactMatrix;
use crate::quiver::{DimVector, Quiver};
use crate::rep::{Morphism, Representation};

/// Paths starting at `k`, grouped by end vertex and sorted by arrow sequence.
/// The trivial path is the empty sequence.
fn paths_from(q: &Quiver, k: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = vec![Vec::new(); q.vertex_count()];
    let mut stack = vec![(k, Vec::new())];
    while let Some((v, path)) = stack.pop() {
        for a in q.out_arrows(v) {
            let mut p = path.clone();
            p.push(a);
            stack.push((q.arrows()[a].target, p));
        }
        out[v].push(path);
    }
    for ps in &mut out {
        ps.sort();
    }
    out
}

/// `P_k`: basis of `(P_k)_v` = paths `k → v`; an arrow appends itself.
pub fn projective(q: &Arc<Quiver>, field: ExactField, k: usize) -> Representation {
    let paths = paths_from(q, k);
    let dims = DimVector(paths.iter().map(|p| p.len() as i64).collect());
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(idx, a)| {
            let mut m = ExactMatrix::zeros(field, paths[a.target].len(), paths[a.source].len());
            for (c, p) in paths[a.source].iter().enumerate() {
                let mut ext = p.clone();
                ext.push(idx);
                let r = paths[a.target]
                    .binary_search(&ext)
                    .expect("extended path is listed");
                m.set(r, c, field.one());
            }
            m
        })
        .collect();
    Representation::new(q.clone(), field, dims, maps).expect("projective is well formed")
}

/// Left multiplication by `α: i → j`, the morphism `P_j → P_i`, `p ↦ αp`.
pub fn left_multiplication(q: &Arc<Quiver>, field: ExactField, arrow: usize) -> Morphism {
    let a = &q.arrows()[arrow];
    let (pi, pj) = (
        projective(q, field, a.source),
        projective(q, field, a.target),
    );
    let from = paths_from(q, a.target);
    let to = paths_from(q, a.source);
    let comps = (0..q.vertex_count())
        .map(|v| {
            let mut m = ExactMatrix::zeros(field, to[v].len(), from[v].len());
            for (c, p) in from[v].iter().enumerate() {
                let mut ext = vec![arrow];
                ext.extend_from_slice(p);
                let r = to[v].binary_search(&ext).expect("prefixed path is listed");
                m.set(r, c, field.one());
            }
            m
        })
        .collect();
    Morphism::new(pj, pi, comps).expect("left multiplication commutes")
}

/// `I_k = D P_k^{op}`, rehomed onto `q`.
pub fn injective(q: &Arc<Quiver>, field: ExactField, k: usize) -> Representation {
    let op = Arc::new(q.opposite());
    projective(&op, field, k)
        .dual()
        .on_quiver(q.clone())
        .expect("double opposite is the quiver")
}

pub fn simple(q: &Arc<Quiver>, field: ExactField, k: usize) -> Representation {
    let dims = DimVector::unit(q.vertex_count(), k);
    let maps = q
        .arrows()
        .iter()
        .map(|a| {
            ExactMatrix::zeros(
                field,
                dims.get(a.target) as usize,
                dims.get(a.source) as usize,
            )
        })
        .collect();
    Representation::new(q.clone(), field, dims, maps).expect("simple is well formed")
}

/// `⊕_v P_v`.
pub fn regular_module(q: &Arc<Quiver>, field: ExactField) -> Result<Representation> {
    let parts: Vec<_> = (0..q.vertex_count())
        .map(|v| projective(q, field, v))
        .collect();
    Representation::direct_sum_all(&parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::hom_dim;

    fn d4() -> Arc<Quiver> {
        Arc::new(Quiver::from_edges(4, &[(2, 1), (3, 1), (4, 1)]).unwrap())
    }

    #[test]
    fn projective_dims_are_rows_of_inverse_euler_matrix() {
        let f = ExactField::Rationals;
        for q in [
            Arc::new(Quiver::from_edges(2, &[(1, 2), (1, 2)]).unwrap()),
            Arc::new(Quiver::from_edges(3, &[(1, 2), (2, 3), (1, 3)]).unwrap()),
            d4(),
        ] {
            let h = q.euler_matrix();
            for u in 0..q.vertex_count() {
                let p = projective(&q, f, u);
                // ⟨dim P_u, e_v⟩ = δ_uv
                for v in 0..q.vertex_count() {
                    let e = DimVector::unit(q.vertex_count(), v);
                    assert_eq!(h.pair(p.dims(), &e), (u == v) as i64);
                }
                let i = injective(&q, f, u);
                for v in 0..q.vertex_count() {
                    let e = DimVector::unit(q.vertex_count(), v);
                    assert_eq!(h.pair(&e, i.dims()), (u == v) as i64);
                }
                // Hom(P_u, M) = M_u
                let s = simple(&q, f, u);
                assert_eq!(hom_dim(&p, &s).unwrap(), 1);
                assert_eq!(hom_dim(&s, &i).unwrap(), 1);
            }
        }
    }

    #[test]
    fn left_multiplication_is_injective() {
        let q = Arc::new(Quiver::from_edges(2, &[(1, 2), (1, 2)]).unwrap());
        for a in 0..2 {
            let rho = left_multiplication(&q, ExactField::Rationals, a);
            assert!(rho.is_injective());
            assert_eq!(rho.source.dims(), &DimVector(vec![0, 1]));
        }
    }
}
