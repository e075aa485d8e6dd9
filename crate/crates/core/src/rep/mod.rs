//! Representations of quivers over exact fields.

mod constructions;
mod decompose;
mod hom;
mod iso;
mod json;

use std::sync::Arc;

pub use constructions::power;
pub use constructions::SubrepWitness;
pub use decompose::{decompose, Summand};
pub use hom::{
    ext1_dim, ext_space, hom_basis, hom_dim, hom_ext_dims, ringel_phi, ExtSpace, Morphism,
};
pub use iso::{is_isomorphic, IsoOptions};
pub use json::RepJson;

use crate::error::{Error, Result};
use crate::field::ExactField;
use crate::matrix::ExactMatrix;
use crate::quiver::{DimVector, Quiver};

/// Default cap on the total dimension of a representation.
pub const DEFAULT_DIMENSION_CAP: usize = 64;

/// A representation: one vector space `F^{d_i}` per vertex and one matrix per
/// arrow (rows = dimension at the target, columns = dimension at the source).
/// Arrow matrices are stored in the quiver's arrow order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Representation {
    quiver: Arc<Quiver>,
    field: ExactField,
    dims: DimVector,
    maps: Vec<ExactMatrix>,
}

impl Representation {
    pub fn new(
        quiver: Arc<Quiver>,
        field: ExactField,
        dims: DimVector,
        maps: Vec<ExactMatrix>,
    ) -> Result<Self> {
        if dims.len() != quiver.vertex_count() {
            return Err(Error::IndexMismatch {
                expected: quiver.vertex_count(),
                got: dims.len(),
            });
        }
        if !dims.is_nonnegative() {
            return Err(Error::ShapeMismatch(format!(
                "negative dimension in {dims}"
            )));
        }
        let total = dims.total() as usize;
        if total > DEFAULT_DIMENSION_CAP {
            return Err(Error::DimensionCap {
                total,
                cap: DEFAULT_DIMENSION_CAP,
            });
        }
        if maps.len() != quiver.arrows().len() {
            return Err(Error::ShapeMismatch(format!(
                "{} matrices for {} arrows",
                maps.len(),
                quiver.arrows().len()
            )));
        }
        for (a, m) in quiver.arrows().iter().zip(&maps) {
            let want = (dims.get(a.target) as usize, dims.get(a.source) as usize);
            if m.shape() != want {
                return Err(Error::ShapeMismatch(format!(
                    "arrow {} has a {}x{} matrix, expected {}x{}",
                    a.id,
                    m.rows(),
                    m.cols(),
                    want.0,
                    want.1
                )));
            }
            if m.field() != field {
                return Err(Error::FieldMismatch(format!(
                    "arrow {} is over {}",
                    a.id,
                    m.field()
                )));
            }
        }
        Ok(Representation {
            quiver,
            field,
            dims,
            maps,
        })
    }

    /// Representation from integer matrices, interpreted in `field`.
    pub fn from_i64(
        quiver: Arc<Quiver>,
        field: ExactField,
        dims: Vec<i64>,
        maps: &[Vec<Vec<i64>>],
    ) -> Result<Self> {
        let dims = DimVector(dims);
        if dims.len() != quiver.vertex_count() {
            return Err(Error::IndexMismatch {
                expected: quiver.vertex_count(),
                got: dims.len(),
            });
        }
        if maps.len() != quiver.arrows().len() {
            return Err(Error::ShapeMismatch("one matrix per arrow expected".into()));
        }
        let mats = quiver
            .arrows()
            .iter()
            .zip(maps)
            .map(|(a, m)| {
                ExactMatrix::from_i64(
                    field,
                    dims.get(a.target).max(0) as usize,
                    dims.get(a.source).max(0) as usize,
                    m,
                )
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(quiver, field, dims, mats)
    }

    pub fn zero(quiver: Arc<Quiver>, field: ExactField) -> Self {
        let n = quiver.vertex_count();
        let maps = quiver
            .arrows()
            .iter()
            .map(|_| ExactMatrix::zeros(field, 0, 0))
            .collect();
        Representation {
            dims: DimVector::zero(n),
            quiver,
            field,
            maps,
        }
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn field(&self) -> ExactField {
        self.field
    }

    pub fn dims(&self) -> &DimVector {
        &self.dims
    }

    pub fn dim(&self, v: usize) -> usize {
        self.dims.get(v) as usize
    }

    pub fn total_dim(&self) -> usize {
        self.dims.total() as usize
    }

    pub fn is_zero(&self) -> bool {
        self.dims.is_zero()
    }

    pub fn map(&self, arrow: usize) -> &ExactMatrix {
        &self.maps[arrow]
    }

    pub fn maps(&self) -> &[ExactMatrix] {
        &self.maps
    }

    /// Checks that `other` lives on the same quiver over the same field.
    pub fn check_compatible(&self, other: &Representation) -> Result<()> {
        if !Arc::ptr_eq(&self.quiver, &other.quiver) && *self.quiver != *other.quiver {
            return Err(Error::QuiverMismatch);
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch(format!(
                "{} vs {}",
                self.field, other.field
            )));
        }
        Ok(())
    }

    /// Same integral matrices read in another field.
    pub fn change_field(&self, field: ExactField) -> Result<Self> {
        let maps = self
            .maps
            .iter()
            .map(|m| m.change_field(field))
            .collect::<Result<Vec<_>>>()?;
        Ok(Representation {
            quiver: self.quiver.clone(),
            field,
            dims: self.dims.clone(),
            maps,
        })
    }

    /// The same data viewed on an equal quiver held by another `Arc`.
    pub fn on_quiver(&self, quiver: Arc<Quiver>) -> Result<Self> {
        if *quiver != *self.quiver {
            return Err(Error::QuiverMismatch);
        }
        Ok(Representation {
            quiver,
            field: self.field,
            dims: self.dims.clone(),
            maps: self.maps.clone(),
        })
    }

    /// Integer matrices (symmetric residues over F_p).
    pub fn integer_maps(&self) -> Result<Vec<Vec<Vec<i64>>>> {
        self.maps.iter().map(|m| m.to_i64_rows()).collect()
    }

    pub fn is_rigid(&self) -> bool {
        ext1_dim(self, self).expect("compatible with itself") == 0
    }

    pub fn is_brick(&self) -> bool {
        hom_dim(self, self).expect("compatible with itself") == 1
    }
}


#[cfg(test)]
mod tests {
    use super::test_support::*;
    use super::*;

    #[test]
    fn shape_validation() {
        let qv = a2();
        assert!(
            Representation::from_i64(qv.clone(), q(), vec![1, 1], &[vec![vec![1, 2]]]).is_err()
        );
        assert!(matches!(
            Representation::from_i64(qv.clone(), q(), vec![1, 1, 1], &[vec![vec![1]]]),
            Err(Error::IndexMismatch { .. })
        ));
        assert!(matches!(
            Representation::from_i64(qv, q(), vec![40, 40], &[vec![vec![0; 40]; 40]]),
            Err(Error::DimensionCap { .. })
        ));
    }

    #[test]
    fn rigid_and_brick() {
        let qv = a2();
        let p1 = p1(&qv, q());
        assert!(p1.is_rigid() && p1.is_brick());
        let sum = s1(&qv, q()).direct_sum(&s2(&qv, q())).unwrap();
        assert!(!sum.is_rigid());
        assert!(!sum.is_brick());
        let k = kronecker();
        let r =
            Representation::from_i64(k, q(), vec![1, 1], &[vec![vec![1]], vec![vec![1]]]).unwrap();
        assert!(r.is_brick());
        assert!(!r.is_rigid());
    }
}
