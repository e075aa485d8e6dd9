//! Splitting a representation into indecomposable summands by Fitting's lemma.
//!
//! For an endomorphism `φ` and a scalar `λ`, `ψ = (φ − λ)^N` with `N` the total
//! dimension gives `M = ker ψ ⊕ im ψ`. An indecomposable module has a local
//! endomorphism ring, so every such `ψ` is zero or invertible; conversely for
//! a decomposable module a projection onto a summand is a witness, and random
//! endomorphisms with an eigenvalue in the field find one with high
//! probability.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::matrix::ExactMatrix;

use super::{hom_basis, Morphism, Representation};

#[derive(Debug, Clone)]
pub struct Summand {
    pub rep: Representation,
    /// Split inclusion of the summand into the decomposed module.
    pub inclusion: Morphism,
}

fn power(m: &ExactMatrix, k: usize) -> ExactMatrix {
    let mut acc = ExactMatrix::identity(m.field(), m.rows());
    for _ in 0..k {
        acc = &acc * m;
    }
    acc
}

/// Finds a nontrivial Fitting splitting `(ker ψ, im ψ)`, if one turns up.
fn find_split(m: &Representation, seed: u64) -> Result<Option<Morphism>> {
    let basis = hom_basis(m, m)?;
    if basis.len() <= 1 {
        return Ok(None);
    }
    let field = m.field();
    let total = m.total_dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut candidates: Vec<Morphism> = basis.clone();
    for _ in 0..24 {
        let mut acc = Morphism::zero(m, m);
        for b in &basis {
            let c = match field.order() {
                Some(p) => rng.gen_range(0..p as i64),
                None => rng.gen_range(-4..=4),
            };
            if c != 0 {
                acc = acc.add(&b.scale(&field.from_i64(c)));
            }
        }
        candidates.push(acc);
    }
    let lambdas: Vec<i64> = match field.order() {
        Some(p) => (0..p as i64).collect(),
        None => (-4..=4).collect(),
    };
    let n = m.quiver().vertex_count();
    for phi in &candidates {
        for &l in &lambdas {
            let lam = field.from_i64(l);
            let shifted: Vec<ExactMatrix> = (0..n)
                .map(|v| &phi.components[v] - &ExactMatrix::identity(field, m.dim(v)).scale(&lam))
                .collect();
            if shifted.iter().all(|c| c.rank() == c.rows()) {
                continue;
            }
            let psi: Vec<ExactMatrix> = shifted.iter().map(|c| power(c, total)).collect();
            let rank: usize = psi.iter().map(ExactMatrix::rank).sum();
            if rank > 0 && rank < total {
                return Ok(Some(Morphism::new_unchecked(m.clone(), m.clone(), psi)));
            }
        }
    }
    Ok(None)
}

/// Decomposes `m` into summands that admit no further Fitting splitting; over
/// a finite field with a brick-or-local endomorphism ring these are the
/// indecomposable summands. The zero module has no summands.
pub fn decompose(m: &Representation, seed: u64) -> Result<Vec<Summand>> {
    if m.is_zero() {
        return Ok(vec![]);
    }
    let Some(psi) = find_split(m, seed)? else {
        return Ok(vec![Summand {
            rep: m.clone(),
            inclusion: Morphism::identity(m),
        }]);
    };
    let mut out = Vec::new();
    for w in [psi.kernel_witness(), psi.image_witness()] {
        let (sub, incl) = m.sub(&w)?;
        for s in decompose(&sub, seed.wrapping_add(1))? {
            let inclusion = s.inclusion.then(&incl);
            out.push(Summand {
                rep: s.rep,
                inclusion,
            });
        }
    }
    Ok(out)
}
