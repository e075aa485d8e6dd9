//! Certificate-based isomorphism testing.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::ExactField;

use super::{hom_basis, hom_dim, Morphism, Representation};

#[derive(Debug, Clone)]
pub struct IsoOptions {
    /// Largest number of coordinate vectors tried exhaustively over F_p.
    pub exhaustive_budget: u128,
    /// Random combinations tried before giving up over the rationals.
    pub random_trials: usize,
    pub seed: u64,
}

impl Default for IsoOptions {
    fn default() -> Self {
        IsoOptions {
            exhaustive_budget: 200_000,
            random_trials: 20,
            seed: 0,
        }
    }
}

fn combine(basis: &[Morphism], coeffs: &[i64], field: ExactField) -> Morphism {
    let mut acc = Morphism::zero(&basis[0].source, &basis[0].target);
    for (b, &c) in basis.iter().zip(coeffs) {
        if c != 0 {
            acc = acc.add(&b.scale(&field.from_i64(c)));
        }
    }
    acc
}

/// Decides `M ≅ N` by searching `Hom(M, N)` for an invertible element.
///
/// Over F_p the search ends in a definite answer once every coordinate vector
/// has been tried; over the rationals a failed search returns
/// [`Error::Undecided`].
pub fn is_isomorphic(m: &Representation, n: &Representation, opts: &IsoOptions) -> Result<bool> {
    m.check_compatible(n)?;
    if m.dims() != n.dims() {
        return Ok(false);
    }
    if m.is_zero() {
        return Ok(true);
    }
    // isomorphism invariants
    let mn = hom_dim(m, n)?;
    if mn != hom_dim(m, m)? || mn != hom_dim(n, m)? || mn != hom_dim(n, n)? {
        return Ok(false);
    }
    let basis = hom_basis(m, n)?;
    if basis.is_empty() {
        return Ok(false);
    }
    let field = m.field();
    let h = basis.len();

    for b in &basis {
        if b.is_isomorphism() {
            return Ok(true);
        }
    }
    for i in 0..h {
        for j in i + 1..h {
            if basis[i].add(&basis[j]).is_isomorphism() {
                return Ok(true);
            }
            for k in j + 1..h {
                if basis[i].add(&basis[j]).add(&basis[k]).is_isomorphism() {
                    return Ok(true);
                }
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    match field.order() {
        Some(p) => {
            let total = (p as u128).checked_pow(h as u32);
            if let Some(total) = total.filter(|&t| t <= opts.exhaustive_budget) {
                let mut coeffs = vec![0i64; h];
                for _ in 0..total {
                    if combine(&basis, &coeffs, field).is_isomorphism() {
                        return Ok(true);
                    }
                    for c in coeffs.iter_mut() {
                        *c += 1;
                        if (*c as u64) < p {
                            break;
                        }
                        *c = 0;
                    }
                }
                return Ok(false);
            }
            for _ in 0..opts.random_trials.max(64) {
                let coeffs: Vec<i64> = (0..h).map(|_| rng.gen_range(0..p as i64)).collect();
                if combine(&basis, &coeffs, field).is_isomorphism() {
                    return Ok(true);
                }
            }
            Err(Error::Undecided)
        }
        None => {
            for _ in 0..opts.random_trials {
                let coeffs: Vec<i64> = (0..h).map(|_| rng.gen_range(-5..=5)).collect();
                if combine(&basis, &coeffs, field).is_isomorphism() {
                    return Ok(true);
                }
            }
            Err(Error::Undecided)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::test_support::*;
    use super::*;

    #[test]
    fn examples() {
        let qv = a2();
        let p1 = p1(&qv, q());
        let opts = IsoOptions::default();
        assert!(is_isomorphic(&p1, &p1, &opts).unwrap());
        assert!(!is_isomorphic(&s1(&qv, q()), &s2(&qv, q()), &opts).unwrap());

        let f = ExactField::prime(3).unwrap();
        let k = kronecker();
        let a = Representation::from_i64(k.clone(), f, vec![1, 1], &[vec![vec![1]], vec![vec![0]]])
            .unwrap();
        let b = Representation::from_i64(k.clone(), f, vec![1, 1], &[vec![vec![0]], vec![vec![1]]])
            .unwrap();
        assert!(!is_isomorphic(&a, &b, &opts).unwrap());
        let c =
            Representation::from_i64(k, f, vec![1, 1], &[vec![vec![2]], vec![vec![0]]]).unwrap();
        assert!(is_isomorphic(&a, &c, &opts).unwrap());
    }
}
