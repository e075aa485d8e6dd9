//! Direct enumeration of `Gr_e(M)(F_p)`.
//!
//! Vertices are visited in topological order. At a vertex `v` every arrow
//! into `v` comes from a vertex already fixed, so the subspace `U_v` must
//! contain `W_v = Σ_α M_α U_{s(α)}`; the candidates are `W_v` plus an
//! `(e_v − dim W_v)`-dimensional subspace of the coordinates left free by the
//! echelon form of `W_v`. Branches with `dim W_v > e_v` are cut. This uses
//! its own word-sized arithmetic, independent of the exact matrix code.

use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::ExactField;
use crate::matrix::ExactMatrix;
use crate::quiver::DimVector;
use crate::rep::{Representation, SubrepWitness};
use crate::subspace::{gaussian_binomial, pivot_patterns, PatternSubspaces, DEFAULT_BUDGET};

/// Budget from `QUIVERGRASS_BUDGET`, or the default.
pub fn budget_from_env() -> u128 {
    std::env::var("QUIVERGRASS_BUDGET")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Reduced row echelon form of a list of row vectors; zero rows dropped.
/// Returns the rows and their pivot columns.
pub(crate) fn rref_rows(mut rows: Vec<Vec<u64>>, p: u64) -> (Vec<Vec<u64>>, Vec<usize>) {
    let width = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..width {
        let Some(i) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, i);
        let inv = inv_mod(rows[r][c], p);
        for x in rows[r].iter_mut() {
            *x = *x * inv % p;
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let f = row[c];
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x = (*x + (p - f) * y) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

/// A representation over F_p in word-sized residues.
#[derive(Debug, Clone)]
pub struct FpModule {
    pub p: u64,
    pub dims: Vec<usize>,
    /// Row-major `d_t × d_s` matrices.
    maps: Vec<Vec<u64>>,
    sources: Vec<usize>,
    topo: Vec<usize>,
    in_arrows: Vec<Vec<usize>>,
}

impl FpModule {
    pub fn new(m: &Representation) -> Result<Self> {
        let ExactField::Prime { p } = m.field() else {
            return Err(Error::FieldMismatch(
                "brute force needs a prime field".into(),
            ));
        };
        if p > u32::MAX as u64 {
            return Err(Error::FieldMismatch(format!(
                "prime {p} too large for word arithmetic"
            )));
        }
        let q = m.quiver();
        let maps = m
            .maps()
            .iter()
            .map(|mat| {
                let mut out = Vec::with_capacity(mat.rows() * mat.cols());
                for i in 0..mat.rows() {
                    for j in 0..mat.cols() {
                        let v = mat.get(i, j).to_bigint().expect("prime field entry");
                        out.push(u64::try_from(v).expect("residue fits"));
                    }
                }
                out
            })
            .collect();
        Ok(FpModule {
            p,
            dims: (0..q.vertex_count()).map(|v| m.dim(v)).collect(),
            maps,
            sources: q.arrows().iter().map(|a| a.source).collect(),
            topo: q.topological_order().to_vec(),
            in_arrows: (0..q.vertex_count())
                .map(|v| q.in_arrows(v).collect())
                .collect(),
        })
    }

    fn apply(&self, arrow: usize, target_dim: usize, x: &[u64]) -> Vec<u64> {
        let s = x.len();
        let m = &self.maps[arrow];
        (0..target_dim)
            .map(|i| (0..s).fold(0u64, |acc, j| (acc + m[i * s + j] * x[j]) % self.p))
            .collect()
    }
}

/// Per-vertex row bases of a subrepresentation, in reduced echelon form
/// whenever produced by the enumerator.
pub type SubrepRows = Vec<Vec<Vec<u64>>>;

struct Walk<'a> {
    m: &'a FpModule,
    e: &'a [usize],
    budget: u128,
    estimate: u128,
    visited: &'a AtomicU64,
}

impl Walk<'_> {
    fn tick(&self) -> Result<()> {
        let n = self.visited.fetch_add(1, Ordering::Relaxed) as u128 + 1;
        if n > self.budget {
            return Err(Error::BudgetExceeded {
                needed: self.estimate.max(n),
                budget: self.budget,
            });
        }
        Ok(())
    }

    /// Candidates for `U_v` given the spaces already fixed.
    fn choices(&self, v: usize, fixed: &SubrepRows) -> Result<Vec<Vec<Vec<u64>>>> {
        let p = self.m.p;
        let d = self.m.dims[v];
        let mut gens = Vec::new();
        for &k in &self.m.in_arrows[v] {
            for u in &fixed[self.m.sources[k]] {
                gens.push(self.m.apply(k, d, u));
            }
        }
        let (w, pivots) = if gens.is_empty() {
            (Vec::new(), Vec::new())
        } else {
            rref_rows(gens, p)
        };
        let want = self.e[v];
        if w.len() > want {
            return Ok(Vec::new());
        }
        let free: Vec<usize> = (0..d).filter(|c| !pivots.contains(c)).collect();
        let extra = want - w.len();
        let n = gaussian_binomial(p, free.len(), extra).unwrap_or(u128::MAX);
        if n > self.budget {
            return Err(Error::BudgetExceeded {
                needed: self.estimate.max(n),
                budget: self.budget,
            });
        }
        let mut out = Vec::new();
        for pattern in pivot_patterns(free.len(), extra) {
            for sub in PatternSubspaces::new(p, free.len(), pattern) {
                let mut rows = w.clone();
                for r in 0..extra {
                    let mut x = vec![0u64; d];
                    for (j, &c) in free.iter().enumerate() {
                        x[c] = sub[r * free.len() + j];
                    }
                    rows.push(x);
                }
                out.push(rref_rows(rows, p).0);
            }
        }
        Ok(out)
    }

    fn walk(
        &self,
        t: usize,
        fixed: &mut SubrepRows,
        visit: &mut dyn FnMut(&SubrepRows),
    ) -> Result<()> {
        if t == self.m.topo.len() {
            visit(fixed);
            return Ok(());
        }
        let v = self.m.topo[t];
        for choice in self.choices(v, fixed)? {
            self.tick()?;
            fixed[v] = choice;
            self.walk(t + 1, fixed, visit)?;
        }
        fixed[v] = Vec::new();
        Ok(())
    }
}

/// Product of Gaussian binomials `Π_v [d_v, e_v]_p`, an upper bound on the
/// number of points.
pub fn grassmannian_estimate(p: u64, d: &DimVector, e: &DimVector) -> u128 {
    d.0.iter()
        .zip(&e.0)
        .map(|(&dv, &ev)| gaussian_binomial(p, dv as usize, ev as usize).unwrap_or(u128::MAX))
        .fold(1u128, |a, b| a.saturating_mul(b))
}

fn check_e(m: &Representation, e: &DimVector) -> Result<Option<Vec<usize>>> {
    if e.len() != m.quiver().vertex_count() {
        return Err(Error::IndexMismatch {
            expected: m.quiver().vertex_count(),
            got: e.len(),
        });
    }
    if !e.is_nonnegative() || !e.le(m.dims()) {
        return Ok(None);
    }
    Ok(Some(e.0.iter().map(|&x| x as usize).collect()))
}

/// Calls `visit` once per subrepresentation of dimension `e`. The number of
/// enumerated partial choices is limited by `budget`.
pub fn for_each_subrep(
    m: &Representation,
    e: &DimVector,
    budget: u128,
    mut visit: impl FnMut(&SubrepRows),
) -> Result<()> {
    let fm = FpModule::new(m)?;
    let Some(ev) = check_e(m, e)? else {
        return Ok(());
    };
    let visited = AtomicU64::new(0);
    let walk = Walk {
        m: &fm,
        e: &ev,
        budget,
        estimate: grassmannian_estimate(fm.p, m.dims(), e),
        visited: &visited,
    };
    let mut fixed = vec![Vec::new(); fm.dims.len()];
    walk.walk(0, &mut fixed, &mut visit)
}

/// `|Gr_e(M)(F_p)|`, split across threads on the choices at the first vertex.
pub fn count_subreps(m: &Representation, e: &DimVector, budget: u128) -> Result<u128> {
    let fm = FpModule::new(m)?;
    let Some(ev) = check_e(m, e)? else {
        return Ok(0);
    };
    let visited = AtomicU64::new(0);
    let walk = Walk {
        m: &fm,
        e: &ev,
        budget,
        estimate: grassmannian_estimate(fm.p, m.dims(), e),
        visited: &visited,
    };
    let first = fm.topo[0];
    let empty = vec![Vec::new(); fm.dims.len()];
    let roots = walk.choices(first, &empty)?;
    roots
        .into_par_iter()
        .map(|choice| {
            walk.tick()?;
            let mut fixed = empty.clone();
            fixed[first] = choice;
            let mut count = 0u128;
            walk.walk(1, &mut fixed, &mut |_| count += 1)?;
            Ok(count)
        })
        .try_reduce(|| 0, |a, b| Ok(a + b))
}

/// Counts at several primes from an integral form: `m` is read over each F_p.
pub fn count_at_primes(
    m: &Representation,
    e: &DimVector,
    primes: &[u64],
    budget: u128,
) -> Result<Vec<(u64, u128)>> {
    primes
        .iter()
        .map(|&p| {
            let mp = m.change_field(ExactField::prime(p)?)?;
            Ok((p, count_subreps(&mp, e, budget)?))
        })
        .collect()
}

/// `|Gr_e(M)| = |Gr_{d−e}(DM)|` over F_p, `DM` living on the opposite quiver.
pub fn grassmannian_duality_check(
    m: &Representation,
    e: &DimVector,
    budget: u128,
) -> Result<(u128, u128)> {
    let rest = m.dims() - e;
    Ok((
        count_subreps(m, e, budget)?,
        count_subreps(&m.dual(), &rest, budget)?,
    ))
}

/// Converts enumerator rows into a witness (bases as columns).
pub fn rows_to_witness(m: &Representation, rows: &SubrepRows) -> SubrepWitness {
    let field = m.field();
    SubrepWitness {
        subspaces: rows
            .iter()
            .enumerate()
            .map(|(v, rs)| {
                let cols: Vec<Vec<crate::field::Scalar>> = rs
                    .iter()
                    .map(|r| r.iter().map(|&x| field.from_i64(x as i64)).collect())
                    .collect();
                ExactMatrix::from_columns(field, m.dim(v), &cols)
            })
            .collect(),
    }
}
