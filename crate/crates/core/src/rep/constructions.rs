//! Sums, subrepresentations, quotients, kernels, images, cokernels, duals.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::matrix::ExactMatrix;
use crate::quiver::DimVector;

use super::{Morphism, Representation};

/// A subrepresentation given by a basis of `U_i ⊆ M_i` at every vertex
/// (the columns of `subspaces[i]`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubrepWitness {
    pub subspaces: Vec<ExactMatrix>,
}

impl SubrepWitness {
    pub fn dims(&self) -> DimVector {
        DimVector(self.subspaces.iter().map(|b| b.cols() as i64).collect())
    }

    pub fn zero(m: &Representation) -> Self {
        SubrepWitness {
            subspaces: (0..m.quiver().vertex_count())
                .map(|v| ExactMatrix::zeros(m.field(), m.dim(v), 0))
                .collect(),
        }
    }

    pub fn full(m: &Representation) -> Self {
        SubrepWitness {
            subspaces: (0..m.quiver().vertex_count())
                .map(|v| ExactMatrix::identity(m.field(), m.dim(v)))
                .collect(),
        }
    }

    /// Vertex-wise containment `self ⊆ other`.
    pub fn is_contained_in(&self, other: &SubrepWitness) -> bool {
        self.subspaces
            .iter()
            .zip(&other.subspaces)
            .all(|(a, b)| a.cols() == 0 || b.solve_matrix(a).is_some())
    }

    /// Canonical form: reduced column echelon basis at every vertex, so that
    /// equal subspaces have equal witnesses.
    pub fn canonical(&self) -> SubrepWitness {
        SubrepWitness {
            subspaces: self.subspaces.iter().map(canonical_basis).collect(),
        }
    }
}

/// Reduced basis of the column space (transpose of the row echelon form).
pub(crate) fn canonical_basis(b: &ExactMatrix) -> ExactMatrix {
    let r = b.transpose().rref();
    r.matrix.block(0, 0, r.rank, b.rows()).transpose()
}

/// Column basis of the sum of two column spaces.
pub(crate) fn span_sum(a: &ExactMatrix, b: &ExactMatrix) -> ExactMatrix {
    let joined = a.hstack(b);
    let cols = joined.image_basis();
    ExactMatrix::from_columns(a.field(), a.rows(), &cols)
}

/// Column basis of the intersection of two column spaces.
pub(crate) fn span_intersection(a: &ExactMatrix, b: &ExactMatrix) -> ExactMatrix {
    let field = a.field();
    let rows = a.rows();
    if a.cols() == 0 || b.cols() == 0 {
        return ExactMatrix::zeros(field, rows, 0);
    }
    // a x = b y  ⇔  [a | -b] (x; y) = 0
    let joined = a.hstack(&-b);
    let vecs: Vec<Vec<Scalar>> = joined
        .kernel_basis()
        .iter()
        .map(|v| a.mul_vec(&v[..a.cols()]))
        .collect();
    let m = ExactMatrix::from_columns(field, rows, &vecs);
    ExactMatrix::from_columns(field, rows, &m.image_basis())
}

/// Rows spanning the annihilator of the column space of `b`: a matrix `A`
/// with `A x = 0` exactly for `x ∈ span(b)`.
pub(crate) fn annihilator(b: &ExactMatrix) -> ExactMatrix {
    let field = b.field();
    let ker = b.transpose().kernel_basis();
    ExactMatrix::from_rows(field, b.rows(), ker)
}

/// Indices completing the column space of `b` to a basis by standard
/// vectors: the non-pivot columns of the echelon form of `bᵗ`.
fn complement_indices(b: &ExactMatrix) -> Vec<usize> {
    let pivots = b.transpose().rref().pivots;
    (0..b.rows()).filter(|i| !pivots.contains(i)).collect()
}

impl Representation {
    pub fn direct_sum(&self, other: &Representation) -> Result<Representation> {
        self.check_compatible(other)?;
        let dims = self.dims() + other.dims();
        let maps = self
            .maps()
            .iter()
            .zip(other.maps())
            .map(|(a, b)| a.block_diag(b))
            .collect();
        Representation::new(self.quiver().clone(), self.field(), dims, maps)
    }

    pub fn direct_sum_all(parts: &[Representation]) -> Result<Representation> {
        let mut it = parts.iter();
        let first = it
            .next()
            .ok_or_else(|| Error::ShapeMismatch("empty direct sum".into()))?;
        it.try_fold(first.clone(), |acc, r| acc.direct_sum(r))
    }

    /// Checks that the witness has full-rank bases of the right sizes and is
    /// closed under every arrow.
    pub fn check_witness(&self, w: &SubrepWitness) -> Result<()> {
        let n = self.quiver().vertex_count();
        if w.subspaces.len() != n {
            return Err(Error::IndexMismatch {
                expected: n,
                got: w.subspaces.len(),
            });
        }
        for (v, b) in w.subspaces.iter().enumerate() {
            if b.rows() != self.dim(v) || b.rank() != b.cols() {
                return Err(Error::ShapeMismatch(format!(
                    "basis at vertex {}",
                    self.quiver().vertex(v)
                )));
            }
        }
        for (k, a) in self.quiver().arrows().iter().enumerate() {
            let img = self.map(k) * &w.subspaces[a.source];
            if img.cols() > 0 && w.subspaces[a.target].solve_matrix(&img).is_none() {
                return Err(Error::NotClosedUnderArrows(a.id.clone()));
            }
        }
        Ok(())
    }

    /// The subrepresentation in the given bases, with its inclusion.
    pub fn sub(&self, w: &SubrepWitness) -> Result<(Representation, Morphism)> {
        self.check_witness(w)?;
        let maps = self
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, a)| {
                let img = self.map(k) * &w.subspaces[a.source];
                w.subspaces[a.target].solve_matrix(&img).expect("closed")
            })
            .collect();
        let sub = Representation::new(self.quiver().clone(), self.field(), w.dims(), maps)?;
        let incl = Morphism::new_unchecked(sub.clone(), self.clone(), w.subspaces.clone());
        Ok((sub, incl))
    }

    /// The quotient `M/U` in the complement basis of standard vectors, with
    /// the projection.
    pub fn quotient(&self, w: &SubrepWitness) -> Result<(Representation, Morphism)> {
        self.check_witness(w)?;
        let field = self.field();
        let n = self.quiver().vertex_count();
        let mut comps = Vec::with_capacity(n);
        let mut comp_bases = Vec::with_capacity(n);
        for v in 0..n {
            let b = &w.subspaces[v];
            let idx = complement_indices(b);
            let c = ExactMatrix::identity(field, self.dim(v)).select_columns(&idx);
            let full = b.hstack(&c);
            let inv = full.inverse().expect("basis plus complement is invertible");
            let rows: Vec<usize> = (b.cols()..self.dim(v)).collect();
            comps.push(inv.select_rows(&rows));
            comp_bases.push(c);
        }
        let maps = self
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, a)| &(&comps[a.target] * self.map(k)) * &comp_bases[a.source])
            .collect();
        let dims = self.dims() - &w.dims();
        let q = Representation::new(self.quiver().clone(), field, dims, maps)?;
        let proj = Morphism::new_unchecked(self.clone(), q.clone(), comps);
        Ok((q, proj))
    }

    /// Standard dual on the opposite quiver: `(DM)_α = M_αᵗ`.
    pub fn dual(&self) -> Representation {
        let op = Arc::new(self.quiver().opposite());
        let maps = self.maps().iter().map(ExactMatrix::transpose).collect();
        Representation::new(op, self.field(), self.dims().clone(), maps)
            .expect("dual is well formed")
    }

    /// Smallest subrepresentation containing the given vectors (columns of
    /// `gens[v]` at vertex `v`).
    pub fn generated_subrep(&self, gens: &[ExactMatrix]) -> SubrepWitness {
        let q = self.quiver();
        let n = q.vertex_count();
        let mut spaces: Vec<ExactMatrix> = (0..n)
            .map(|v| ExactMatrix::zeros(self.field(), self.dim(v), 0))
            .collect();
        for &v in q.topological_order() {
            let mut acc = gens[v].clone();
            for k in q.in_arrows(v) {
                let a = &q.arrows()[k];
                acc = acc.hstack(&(self.map(k) * &spaces[a.source]));
            }
            spaces[v] = ExactMatrix::from_columns(self.field(), self.dim(v), &acc.image_basis());
        }
        SubrepWitness { subspaces: spaces }
    }

    /// Largest subrepresentation with `U_v ⊆ bound[v]` for all `v`.
    pub fn largest_subrep_inside(&self, bound: &[ExactMatrix]) -> SubrepWitness {
        let q = self.quiver();
        let n = q.vertex_count();
        let mut spaces: Vec<ExactMatrix> = bound.to_vec();
        for &v in q.topological_order().iter().rev() {
            let b = &bound[v];
            if b.cols() == 0 {
                spaces[v] = b.clone();
                continue;
            }
            let mut constraint = ExactMatrix::zeros(self.field(), 0, b.cols());
            for k in q.out_arrows(v) {
                let t = q.arrows()[k].target;
                let ann = annihilator(&spaces[t]);
                constraint = constraint.vstack(&(&(&ann * self.map(k)) * b));
            }
            let ker = constraint.kernel_basis();
            let vecs: Vec<Vec<Scalar>> = ker.iter().map(|c| b.mul_vec(c)).collect();
            spaces[v] = ExactMatrix::from_columns(self.field(), self.dim(v), &vecs);
        }
        debug_assert_eq!(spaces.len(), n);
        SubrepWitness { subspaces: spaces }
    }

    /// Largest subrepresentation vanishing at vertex `i`.
    pub fn largest_subrep_vanishing_at(&self, i: usize) -> SubrepWitness {
        let bound: Vec<ExactMatrix> = (0..self.quiver().vertex_count())
            .map(|v| {
                if v == i {
                    ExactMatrix::zeros(self.field(), self.dim(v), 0)
                } else {
                    ExactMatrix::identity(self.field(), self.dim(v))
                }
            })
            .collect();
        self.largest_subrep_inside(&bound)
    }

    /// Subrepresentation generated by the whole space at vertex `i`.
    pub fn subrep_generated_at(&self, i: usize) -> SubrepWitness {
        let gens: Vec<ExactMatrix> = (0..self.quiver().vertex_count())
            .map(|v| {
                if v == i {
                    ExactMatrix::identity(self.field(), self.dim(v))
                } else {
                    ExactMatrix::zeros(self.field(), self.dim(v), 0)
                }
            })
            .collect();
        self.generated_subrep(&gens)
    }

    /// Vertex-wise intersection of two subrepresentations.
    pub fn intersect(&self, a: &SubrepWitness, b: &SubrepWitness) -> SubrepWitness {
        SubrepWitness {
            subspaces: a
                .subspaces
                .iter()
                .zip(&b.subspaces)
                .map(|(x, y)| span_intersection(x, y))
                .collect(),
        }
    }

    /// Vertex-wise sum of two subrepresentations.
    pub fn sum(&self, a: &SubrepWitness, b: &SubrepWitness) -> SubrepWitness {
        SubrepWitness {
            subspaces: a
                .subspaces
                .iter()
                .zip(&b.subspaces)
                .map(|(x, y)| span_sum(x, y))
                .collect(),
        }
    }
}

impl Morphism {
    /// Kernel as a subrepresentation of the source.
    pub fn kernel_witness(&self) -> SubrepWitness {
        let field = self.source.field();
        SubrepWitness {
            subspaces: self
                .components
                .iter()
                .enumerate()
                .map(|(v, c)| {
                    ExactMatrix::from_columns(field, self.source.dim(v), &c.kernel_basis())
                })
                .collect(),
        }
    }

    /// Image as a subrepresentation of the target.
    pub fn image_witness(&self) -> SubrepWitness {
        let field = self.source.field();
        SubrepWitness {
            subspaces: self
                .components
                .iter()
                .enumerate()
                .map(|(v, c)| {
                    ExactMatrix::from_columns(field, self.target.dim(v), &c.image_basis())
                })
                .collect(),
        }
    }

    pub fn kernel(&self) -> Result<(Representation, Morphism)> {
        self.source.sub(&self.kernel_witness())
    }

    pub fn image(&self) -> Result<(Representation, Morphism)> {
        self.target.sub(&self.image_witness())
    }

    pub fn cokernel(&self) -> Result<(Representation, Morphism)> {
        self.target.quotient(&self.image_witness())
    }
}

/// Direct sum of `copies` copies of `m` (the zero representation for 0).
pub fn power(m: &Representation, copies: usize) -> Representation {
    let mut acc = Representation::zero(m.quiver().clone(), m.field());
    for _ in 0..copies {
        acc = acc.direct_sum(m).expect("compatible");
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::super::test_support::*;
    use super::super::{hom_dim, is_isomorphic, IsoOptions};
    use super::*;

    #[test]
    fn sum_sub_quotient() {
        let qv = a2();
        let (s1, s2, p1) = (s1(&qv, q()), s2(&qv, q()), p1(&qv, q()));
        let sum = s1.direct_sum(&s2).unwrap();
        assert_eq!(sum.dims(), &DimVector(vec![1, 1]));
        assert!(sum.map(0).is_zero());

        let socle = SubrepWitness {
            subspaces: vec![ExactMatrix::zeros(q(), 1, 0), ExactMatrix::identity(q(), 1)],
        };
        let (sub, incl) = p1.sub(&socle).unwrap();
        assert!(incl.commutes() && incl.is_injective());
        assert!(is_isomorphic(&sub, &s2, &IsoOptions::default()).unwrap());
        let (quot, proj) = incl.cokernel().unwrap();
        assert!(proj.is_surjective());
        assert!(is_isomorphic(&quot, &s1, &IsoOptions::default()).unwrap());

        let bad = SubrepWitness {
            subspaces: vec![ExactMatrix::identity(q(), 1), ExactMatrix::zeros(q(), 1, 0)],
        };
        assert!(matches!(p1.sub(&bad), Err(Error::NotClosedUnderArrows(_))));
    }

    #[test]
    fn generated_and_vanishing() {
        let qv = a2();
        let p1 = p1(&qv, q());
        assert_eq!(p1.subrep_generated_at(0).dims(), DimVector(vec![1, 1]));
        assert_eq!(
            p1.largest_subrep_vanishing_at(0).dims(),
            DimVector(vec![0, 1])
        );
        assert_eq!(
            p1.largest_subrep_vanishing_at(1).dims(),
            DimVector(vec![0, 0])
        );
        let d = p1.dual();
        assert_eq!(hom_dim(&d, &d).unwrap(), 1);
    }
}
