//! Uniserial modules in the tubes of an affine quiver.

use crate::classify::classify;
use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::quiver::DimVector;
use crate::rep::{is_isomorphic, IsoOptions, Representation, SubrepWitness};

use super::extension::{generating_extension, ExtensionData};
use super::tau::{tau_dropping_projectives, tau_minus_dropping_injectives};

/// Largest tube rank searched for.
pub const PERIOD_CAP: usize = 6;

/// The rank of the tube containing a regular quasi-simple `S`: the least
/// `p ≥ 1` with `τ^p S ≅ S`. Fails unless `S` is a regular brick whose
/// `τ`-orbit has dimension vectors summing to `δ`.
pub fn quasi_simple_period(s: &Representation) -> Result<usize> {
    let q = s.quiver();
    let class = classify(q);
    let delta = class.delta().ok_or(Error::NotAffine)?;
    if s.is_zero() || !s.is_brick() {
        return Err(Error::NotQuasiSimple("not a brick".into()));
    }
    if crate::classify::defect(q, s.dims())? != 0 {
        return Err(Error::NotQuasiSimple(format!(
            "{} has nonzero defect",
            s.dims()
        )));
    }
    let opts = IsoOptions::default();
    let mut sum = s.dims().clone();
    let mut cur = tau_dropping_projectives(s)?;
    for p in 1..=PERIOD_CAP {
        if cur.dims() == s.dims() && is_isomorphic(&cur, s, &opts)? {
            if &sum != delta {
                return Err(Error::NotQuasiSimple(format!(
                    "orbit sums to {sum}, not {delta}"
                )));
            }
            return Ok(p);
        }
        sum = &sum + cur.dims();
        cur = tau_dropping_projectives(&cur)?;
    }
    Err(Error::NotQuasiSimple(format!(
        "no period up to {PERIOD_CAP}"
    )))
}

/// `0 = R_0 ⊂ R_1 = S ⊂ … ⊂ R_n` with `R_k / R_{k-1} ≅ τ^{-(k-1)} S`. Every
/// `R_j` occupies the leading coordinates of `R_n`.
#[derive(Debug, Clone)]
pub struct TubeChain {
    /// `S_k = τ^{-(k-1)} S` for `k = 1..=n`.
    pub tops: Vec<Representation>,
    /// `R_0, …, R_n`.
    pub modules: Vec<Representation>,
    /// `steps[k-2]` builds `R_k` from `R_{k-1}` and `S_k`, for `k ≥ 2`.
    pub steps: Vec<ExtensionData>,
    pub period: usize,
}

impl TubeChain {
    pub fn length(&self) -> usize {
        self.modules.len() - 1
    }

    /// `R_j` as a subrepresentation of `R_n` (leading coordinates).
    pub fn witness(&self, j: usize) -> SubrepWitness {
        let top = &self.modules[self.length()];
        let field = top.field();
        SubrepWitness {
            subspaces: (0..top.quiver().vertex_count())
                .map(|v| {
                    ExactMatrix::identity(field, top.dim(v))
                        .select_columns(&(0..self.modules[j].dim(v)).collect::<Vec<_>>())
                })
                .collect(),
        }
    }

    pub fn dims(&self, j: usize) -> &DimVector {
        self.modules[j].dims()
    }
}

/// Builds the chain of length `n ≥ 1` over the quasi-simple socle `s`.
pub fn tube_chain(s: &Representation, n: usize) -> Result<TubeChain> {
    if n == 0 {
        return Err(Error::PreconditionFailed(
            "tube length must be positive".into(),
        ));
    }
    let period = quasi_simple_period(s)?;
    let mut tops = vec![s.clone()];
    let mut modules = vec![
        Representation::zero(s.quiver().clone(), s.field()),
        s.clone(),
    ];
    let mut steps = Vec::new();
    for _ in 1..n {
        let top = tau_minus_dropping_injectives(tops.last().expect("nonempty"))?;
        let prev = modules.last().expect("nonempty");
        let step = generating_extension(&top, prev)?;
        if step.cocycle.iter().all(ExactMatrix::is_zero) {
            return Err(Error::PreconditionFailed(
                "tube step extension vanishes".into(),
            ));
        }
        modules.push(step.middle.clone());
        tops.push(top);
        steps.push(step);
    }
    Ok(TubeChain {
        tops,
        modules,
        steps,
        period,
    })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::ar::basic::simple;
    use crate::field::ExactField;
    use crate::quiver::Quiver;
    use crate::rep::decompose;

    #[test]
    fn kronecker_homogeneous_tube() {
        let qv = Arc::new(Quiver::from_edges(2, &[(1, 2), (1, 2)]).unwrap());
        let f = ExactField::prime(3).unwrap();
        let s =
            Representation::from_i64(qv.clone(), f, vec![1, 1], &[vec![vec![1]], vec![vec![1]]])
                .unwrap();
        assert_eq!(quasi_simple_period(&s).unwrap(), 1);
        let chain = tube_chain(&s, 3).unwrap();
        assert_eq!(chain.dims(3), &DimVector(vec![3, 3]));
        for m in &chain.modules[1..] {
            assert_eq!(decompose(m, 0).unwrap().len(), 1);
        }
        let r3 = &chain.modules[3];
        for j in 0..=3 {
            r3.check_witness(&chain.witness(j)).unwrap();
        }
        let p1 = Representation::from_i64(
            qv.clone(),
            f,
            vec![1, 2],
            &[vec![vec![1], vec![0]], vec![vec![0], vec![1]]],
        )
        .unwrap();
        assert!(quasi_simple_period(&p1).is_err());
    }

    #[test]
    fn cyclic_a2_tilde_exceptional_tube() {
        // 1 → 2 → 3 and 1 → 3: the simple at 2 is quasi-simple of period 2
        let qv = Arc::new(Quiver::from_edges(3, &[(1, 2), (2, 3), (1, 3)]).unwrap());
        let f = ExactField::prime(2).unwrap();
        let s2 = simple(&qv, f, 1);
        assert_eq!(quasi_simple_period(&s2).unwrap(), 2);
        let chain = tube_chain(&s2, 3).unwrap();
        assert_eq!(chain.dims(2), &DimVector(vec![1, 1, 1]));
        assert_eq!(chain.dims(3), &DimVector(vec![1, 2, 1]));
    }
}
