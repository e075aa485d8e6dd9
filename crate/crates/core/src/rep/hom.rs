//! Hom and Ext¹ through the map `Φ_M^N`.

use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;

use super::Representation;

/// A morphism of representations, one matrix `f_i: M_i → N_i` per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    pub source: Representation,
    pub target: Representation,
    pub components: Vec<ExactMatrix>,
}

impl Morphism {
    /// Builds a morphism after checking shapes and `N_α f_s = f_t M_α`.
    pub fn new(
        source: Representation,
        target: Representation,
        components: Vec<ExactMatrix>,
    ) -> Result<Self> {
        source.check_compatible(&target)?;
        let n = source.quiver().vertex_count();
        if components.len() != n {
            return Err(Error::IndexMismatch {
                expected: n,
                got: components.len(),
            });
        }
        for (v, c) in components.iter().enumerate() {
            if c.shape() != (target.dim(v), source.dim(v)) {
                return Err(Error::ShapeMismatch(format!("component at vertex {v}")));
            }
        }
        let f = Morphism {
            source,
            target,
            components,
        };
        if !f.commutes() {
            return Err(Error::ShapeMismatch(
                "components do not commute with arrows".into(),
            ));
        }
        Ok(f)
    }

    pub(crate) fn new_unchecked(
        source: Representation,
        target: Representation,
        components: Vec<ExactMatrix>,
    ) -> Self {
        let f = Morphism {
            source,
            target,
            components,
        };
        debug_assert!(f.commutes());
        f
    }

    pub fn identity(m: &Representation) -> Self {
        let comps = (0..m.quiver().vertex_count())
            .map(|v| ExactMatrix::identity(m.field(), m.dim(v)))
            .collect();
        Morphism {
            source: m.clone(),
            target: m.clone(),
            components: comps,
        }
    }

    pub fn zero(source: &Representation, target: &Representation) -> Self {
        let comps = (0..source.quiver().vertex_count())
            .map(|v| ExactMatrix::zeros(source.field(), target.dim(v), source.dim(v)))
            .collect();
        Morphism {
            source: source.clone(),
            target: target.clone(),
            components: comps,
        }
    }

    /// The commutation invariant, checked exactly.
    pub fn commutes(&self) -> bool {
        self.source
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .all(|(k, a)| {
                let lhs = self.target.map(k) * &self.components[a.source];
                let rhs = &self.components[a.target] * self.source.map(k);
                lhs == rhs
            })
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(ExactMatrix::is_zero)
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Morphism) -> Morphism {
        let comps = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| b * a)
            .collect();
        Morphism {
            source: self.source.clone(),
            target: other.target.clone(),
            components: comps,
        }
    }

    pub fn add(&self, other: &Morphism) -> Morphism {
        let comps = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a + b)
            .collect();
        Morphism {
            source: self.source.clone(),
            target: self.target.clone(),
            components: comps,
        }
    }

    pub fn scale(&self, s: &crate::field::Scalar) -> Morphism {
        let comps = self.components.iter().map(|a| a.scale(s)).collect();
        Morphism {
            source: self.source.clone(),
            target: self.target.clone(),
            components: comps,
        }
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.components.iter().map(ExactMatrix::rank).collect()
    }

    pub fn is_injective(&self) -> bool {
        self.components.iter().all(|c| c.rank() == c.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.components.iter().all(|c| c.rank() == c.rows())
    }

    pub fn is_isomorphism(&self) -> bool {
        self.components.iter().all(ExactMatrix::is_invertible)
    }
}

fn block_offsets(sizes: impl Iterator<Item = usize>) -> (Vec<usize>, usize) {
    let mut offs = Vec::new();
    let mut acc = 0;
    for s in sizes {
        offs.push(acc);
        acc += s;
    }
    (offs, acc)
}

/// Matrix of `Φ_M^N: ⊕_i Hom(M_i,N_i) → ⊕_α Hom(M_{s(α)},N_{t(α)})`,
/// `(f_i) ↦ (N_α f_{s(α)} − f_{t(α)} M_α)`. Blocks are ordered by vertex
/// (domain) and by arrow (codomain); each block is vectorised column-major.
pub fn ringel_phi(m: &Representation, n: &Representation) -> Result<ExactMatrix> {
    m.check_compatible(n)?;
    let quiver = m.quiver();
    let nv = quiver.vertex_count();
    let (dom_off, dom) = block_offsets((0..nv).map(|v| n.dim(v) * m.dim(v)));
    let (cod_off, cod) = block_offsets(
        quiver
            .arrows()
            .iter()
            .map(|a| n.dim(a.target) * m.dim(a.source)),
    );
    let mut phi = ExactMatrix::zeros(m.field(), cod, dom);
    for (k, a) in quiver.arrows().iter().enumerate() {
        let (s, t) = (a.source, a.target);
        let nt = n.dim(t);
        let na = n.map(k);
        let ma = m.map(k);
        // N_α E_{r,c} with E_{r,c} ∈ Hom(M_s, N_s)
        for c in 0..m.dim(s) {
            for r in 0..n.dim(s) {
                let col = dom_off[s] + c * n.dim(s) + r;
                for rp in 0..nt {
                    let v = na.get(rp, r);
                    if !v.is_zero() {
                        let row = cod_off[k] + c * nt + rp;
                        let cur = phi.get(row, col) + v;
                        phi.set(row, col, cur);
                    }
                }
            }
        }
        // −E_{r,c} M_α with E_{r,c} ∈ Hom(M_t, N_t)
        for c in 0..m.dim(t) {
            for r in 0..nt {
                let col = dom_off[t] + c * nt + r;
                for cp in 0..m.dim(s) {
                    let v = ma.get(c, cp);
                    if !v.is_zero() {
                        let row = cod_off[k] + cp * nt + r;
                        let cur = phi.get(row, col) - v;
                        phi.set(row, col, cur);
                    }
                }
            }
        }
    }
    Ok(phi)
}

/// Splits a vector of `⊕_i Hom(M_i,N_i)` into per-vertex matrices.
pub(crate) fn unvec_vertex_blocks(
    m: &Representation,
    n: &Representation,
    v: &[crate::field::Scalar],
) -> Vec<ExactMatrix> {
    let nv = m.quiver().vertex_count();
    let mut off = 0;
    (0..nv)
        .map(|i| {
            let (rows, cols) = (n.dim(i), m.dim(i));
            let mut f = ExactMatrix::zeros(m.field(), rows, cols);
            for c in 0..cols {
                for r in 0..rows {
                    f.set(r, c, v[off + c * rows + r].clone());
                }
            }
            off += rows * cols;
            f
        })
        .collect()
}

/// Flattens per-arrow blocks `ζ_α: M_{s(α)} → N_{t(α)}` into the codomain
/// coordinates of `Φ_M^N`.
pub(crate) fn vec_arrow_blocks(blocks: &[ExactMatrix]) -> Vec<crate::field::Scalar> {
    let mut out = Vec::new();
    for b in blocks {
        for c in 0..b.cols() {
            for r in 0..b.rows() {
                out.push(b.get(r, c).clone());
            }
        }
    }
    out
}

/// Inverse of [`vec_arrow_blocks`].
pub(crate) fn unvec_arrow_blocks(
    m: &Representation,
    n: &Representation,
    v: &[crate::field::Scalar],
) -> Vec<ExactMatrix> {
    let mut off = 0;
    m.quiver()
        .arrows()
        .iter()
        .map(|a| {
            let (rows, cols) = (n.dim(a.target), m.dim(a.source));
            let mut f = ExactMatrix::zeros(m.field(), rows, cols);
            for c in 0..cols {
                for r in 0..rows {
                    f.set(r, c, v[off + c * rows + r].clone());
                }
            }
            off += rows * cols;
            f
        })
        .collect()
}

/// Basis of `Hom(M, N)` = kernel of `Φ_M^N`.
pub fn hom_basis(m: &Representation, n: &Representation) -> Result<Vec<Morphism>> {
    let phi = ringel_phi(m, n)?;
    Ok(phi
        .kernel_basis()
        .iter()
        .map(|v| Morphism::new_unchecked(m.clone(), n.clone(), unvec_vertex_blocks(m, n, v)))
        .collect())
}

pub fn hom_dim(m: &Representation, n: &Representation) -> Result<usize> {
    let phi = ringel_phi(m, n)?;
    Ok(phi.cols() - phi.rank())
}

/// `dim Ext¹(M, N)` = corank of `Φ_M^N`; checked against the Euler form.
pub fn ext1_dim(m: &Representation, n: &Representation) -> Result<usize> {
    let phi = ringel_phi(m, n)?;
    let rank = phi.rank();
    let hom = phi.cols() - rank;
    let ext = phi.rows() - rank;
    debug_assert_eq!(
        hom as i64 - ext as i64,
        m.quiver().euler_form(m.dims(), n.dims())?,
        "rank-nullity disagrees with the Euler form"
    );
    Ok(ext)
}

/// Both dimensions at once, from a single elimination.
pub fn hom_ext_dims(m: &Representation, n: &Representation) -> Result<(usize, usize)> {
    let phi = ringel_phi(m, n)?;
    let rank = phi.rank();
    Ok((phi.cols() - rank, phi.rows() - rank))
}

/// `Ext¹(M, N)` as the cokernel of `Φ_M^N`, with a fixed complement of the
/// image spanned by standard vectors (the first ones not in the image).
#[derive(Debug, Clone)]
pub struct ExtSpace {
    pub source: Representation,
    pub target: Representation,
    pub dim: usize,
    /// Codomain coordinates whose standard vectors span the complement.
    complement: Vec<usize>,
    /// `dim × codomain` matrix sending a cocycle to its class.
    proj: ExactMatrix,
}

pub fn ext_space(m: &Representation, n: &Representation) -> Result<ExtSpace> {
    let phi = ringel_phi(m, n)?;
    let field = m.field();
    let cod = phi.rows();
    let image = ExactMatrix::from_columns(field, cod, &phi.image_basis());
    let pivots = image.transpose().rref().pivots;
    let complement: Vec<usize> = (0..cod).filter(|i| !pivots.contains(i)).collect();
    let full = image.hstack(&ExactMatrix::identity(field, cod).select_columns(&complement));
    let inv = full.inverse().expect("image plus complement is a basis");
    let rows: Vec<usize> = (image.cols()..cod).collect();
    Ok(ExtSpace {
        source: m.clone(),
        target: n.clone(),
        dim: complement.len(),
        complement,
        proj: inv.select_rows(&rows),
    })
}

impl ExtSpace {
    /// Cocycle blocks `ζ_α: M_{s(α)} → N_{t(α)}` of the `k`-th basis class.
    pub fn cocycle(&self, k: usize) -> Vec<ExactMatrix> {
        let field = self.source.field();
        let mut v = vec![field.zero(); self.proj.cols()];
        v[self.complement[k]] = field.one();
        unvec_arrow_blocks(&self.source, &self.target, &v)
    }

    /// Coordinates of the class of a cocycle.
    pub fn class_of(&self, blocks: &[ExactMatrix]) -> Vec<crate::field::Scalar> {
        self.proj.mul_vec(&vec_arrow_blocks(blocks))
    }

    pub fn is_split(&self, blocks: &[ExactMatrix]) -> bool {
        self.class_of(blocks).iter().all(|x| x.is_zero())
    }

    /// Matrix of `Ext¹(M, g): Ext¹(M, N) → Ext¹(M, N')` for `g: N → N'`,
    /// with `to` describing `Ext¹(M, N')`.
    pub fn push_forward(&self, to: &ExtSpace, g: &Morphism) -> ExactMatrix {
        let field = self.source.field();
        let arrows = self.source.quiver().arrows();
        let cols: Vec<Vec<crate::field::Scalar>> = (0..self.dim)
            .map(|k| {
                let pushed: Vec<ExactMatrix> = self
                    .cocycle(k)
                    .iter()
                    .zip(arrows)
                    .map(|(z, a)| &g.components[a.target] * z)
                    .collect();
                to.class_of(&pushed)
            })
            .collect();
        ExactMatrix::from_columns(field, to.dim, &cols)
    }

    /// Matrix of `Ext¹(h, N): Ext¹(M, N) → Ext¹(M', N)` for `h: M' → M`,
    /// with `to` describing `Ext¹(M', N)`.
    pub fn pull_back(&self, to: &ExtSpace, h: &Morphism) -> ExactMatrix {
        let field = self.source.field();
        let arrows = self.source.quiver().arrows();
        let cols: Vec<Vec<crate::field::Scalar>> = (0..self.dim)
            .map(|k| {
                let pulled: Vec<ExactMatrix> = self
                    .cocycle(k)
                    .iter()
                    .zip(arrows)
                    .map(|(z, a)| z * &h.components[a.source])
                    .collect();
                to.class_of(&pulled)
            })
            .collect();
        ExactMatrix::from_columns(field, to.dim, &cols)
    }
}

#[cfg(test)]
mod tests {
    use super::super::test_support::*;
    use super::*;

    #[test]
    fn phi_examples() {
        let qv = a2();
        let (s1, s2, p1) = (s1(&qv, q()), s2(&qv, q()), p1(&qv, q()));
        let phi = ringel_phi(&s1, &s1).unwrap();
        assert_eq!(phi.shape(), (0, 1));
        assert_eq!(hom_dim(&s1, &s1).unwrap(), 1);
        let phi = ringel_phi(&p1, &s2).unwrap();
        assert_eq!(phi.rank(), 1);
        assert_eq!(hom_dim(&p1, &s2).unwrap(), 0);
        assert_eq!(ext1_dim(&s1, &s2).unwrap(), 1);
        assert_eq!(ext1_dim(&s2, &s1).unwrap(), 0);
        assert_eq!(ext1_dim(&p1, &p1).unwrap(), 0);
        assert_eq!(hom_dim(&s2, &p1).unwrap(), 1);
    }

    #[test]
    fn hom_basis_elements_commute() {
        let k = kronecker();
        let m = Representation::from_i64(
            k.clone(),
            q(),
            vec![1, 2],
            &[vec![vec![1], vec![0]], vec![vec![0], vec![1]]],
        )
        .unwrap();
        let n = Representation::from_i64(
            k,
            q(),
            vec![2, 3],
            &[
                vec![vec![1, 0], vec![0, 1], vec![0, 0]],
                vec![vec![0, 0], vec![1, 0], vec![0, 1]],
            ],
        )
        .unwrap();
        let basis = hom_basis(&m, &n).unwrap();
        assert_eq!(basis.len(), 2);
        assert!(basis.iter().all(Morphism::commutes));
    }
}
