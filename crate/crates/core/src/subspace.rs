//! Enumeration of subspaces of F_p^d and Gaussian binomials.
//!
//! Each subspace is produced once, as its reduced row echelon basis (an
//! `e x d` row-major matrix of residues). The stream walks pivot patterns in
//! lexicographic order and, inside a pattern, the free entries as an odometer
//! whose last position turns fastest.

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

pub const DEFAULT_BUDGET: u128 = 10_000_000;

/// Gaussian binomial `[d choose e]_p`, or `None` on overflow.
pub fn gaussian_binomial(p: u64, d: usize, e: usize) -> Option<u128> {
    if e > d {
        return Some(0);
    }
    let p = p as u128;
    let mut acc: u128 = 1;
    for i in 0..e {
        let num = p.checked_pow((d - i) as u32)? - 1;
        let den = p.checked_pow((i + 1) as u32)? - 1;
        acc = acc.checked_mul(num)? / den;
    }
    Some(acc)
}

/// Gaussian binomial as a polynomial in q, built from the q-Pascal rule
/// `[d,e] = [d-1,e-1] + q^e [d-1,e]`.
pub fn gaussian_binomial_poly(d: usize, e: usize) -> IntPolynomial {
    if e > d {
        return IntPolynomial::zero();
    }
    let mut row = vec![IntPolynomial::one()];
    for n in 1..=d {
        let mut next = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let left = if k > 0 {
                row[k - 1].clone()
            } else {
                IntPolynomial::zero()
            };
            let right = if k < n {
                row[k].shift(k)
            } else {
                IntPolynomial::zero()
            };
            next.push(&left + &right);
        }
        row = next;
    }
    row.swap_remove(e)
}

/// All `e`-subsets of `0..d` in lexicographic order.
pub fn pivot_patterns(d: usize, e: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if e > d {
        return out;
    }
    let mut cur: Vec<usize> = (0..e).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..e).rev().find(|&i| cur[i] < d - e + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..e {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

fn free_positions(d: usize, pivots: &[usize]) -> Vec<(usize, usize)> {
    let mut pos = Vec::new();
    for (r, &pc) in pivots.iter().enumerate() {
        for c in pc + 1..d {
            if !pivots.contains(&c) {
                pos.push((r, c));
            }
        }
    }
    pos
}

/// Streams the subspaces of F_p^d having a fixed pivot pattern.
#[derive(Debug, Clone)]
pub struct PatternSubspaces {
    p: u64,
    d: usize,
    pivots: Vec<usize>,
    free: Vec<(usize, usize)>,
    odometer: Vec<u64>,
    done: bool,
}

impl PatternSubspaces {
    pub fn new(p: u64, d: usize, pivots: Vec<usize>) -> Self {
        let free = free_positions(d, &pivots);
        let odometer = vec![0; free.len()];
        PatternSubspaces {
            p,
            d,
            pivots,
            free,
            odometer,
            done: false,
        }
    }

    pub fn len(&self) -> u128 {
        (self.p as u128).pow(self.free.len() as u32)
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl Iterator for PatternSubspaces {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        if self.done {
            return None;
        }
        let e = self.pivots.len();
        let mut basis = vec![0u64; e * self.d];
        for (r, &c) in self.pivots.iter().enumerate() {
            basis[r * self.d + c] = 1;
        }
        for (k, &(r, c)) in self.free.iter().enumerate() {
            basis[r * self.d + c] = self.odometer[k];
        }
        // advance
        let mut k = self.odometer.len();
        loop {
            if k == 0 {
                self.done = true;
                break;
            }
            k -= 1;
            self.odometer[k] += 1;
            if self.odometer[k] < self.p {
                break;
            }
            self.odometer[k] = 0;
        }
        Some(basis)
    }
}

/// Enumerates every `e`-dimensional subspace of F_p^d, failing up front when
/// their number exceeds `budget`.
pub fn enumerate_subspaces_with_budget(
    p: u64,
    d: usize,
    e: usize,
    budget: u128,
) -> Result<impl Iterator<Item = Vec<u64>>> {
    if e > d {
        return Err(Error::ShapeMismatch(format!(
            "subspace dimension {e} > {d}"
        )));
    }
    let needed = gaussian_binomial(p, d, e).unwrap_or(u128::MAX);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    Ok(pivot_patterns(d, e)
        .into_iter()
        .flat_map(move |pat| PatternSubspaces::new(p, d, pat)))
}

pub fn enumerate_subspaces(p: u64, d: usize, e: usize) -> Result<impl Iterator<Item = Vec<u64>>> {
    enumerate_subspaces_with_budget(p, d, e, DEFAULT_BUDGET)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn spec_examples() {
        assert_eq!(enumerate_subspaces(2, 3, 1).unwrap().count(), 7);
        assert_eq!(enumerate_subspaces(3, 2, 1).unwrap().count(), 4);
        assert_eq!(enumerate_subspaces(2, 4, 2).unwrap().count(), 35);
    }

    #[test]
    fn budget_is_enforced() {
        let err = enumerate_subspaces_with_budget(5, 6, 3, 1000)
            .err()
            .unwrap();
        assert!(matches!(err, Error::BudgetExceeded { .. }));
    }

    #[test]
    fn polynomial_matches_numeric() {
        for d in 0..6 {
            for e in 0..=d {
                let poly = gaussian_binomial_poly(d, e);
                for p in [2u64, 3, 5] {
                    assert_eq!(
                        poly.eval(p as i128),
                        gaussian_binomial(p, d, e).unwrap() as i128
                    );
                }
            }
        }
    }

    #[test]
    fn counts_and_distinctness() {
        for p in [2u64, 3] {
            for d in 0..5 {
                for e in 0..=d {
                    let all: Vec<_> = enumerate_subspaces(p, d, e).unwrap().collect();
                    let distinct: HashSet<_> = all.iter().cloned().collect();
                    assert_eq!(all.len() as u128, gaussian_binomial(p, d, e).unwrap());
                    assert_eq!(distinct.len(), all.len());
                }
            }
        }
    }
}
