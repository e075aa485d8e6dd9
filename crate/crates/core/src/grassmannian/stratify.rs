//! Brute-force views of an extension `0 → X → Y → S → 0` over F_p, used to
//! check the structural counting routes.

use std::collections::{BTreeMap, BTreeSet};

use crate::ar::ExtensionData;
use crate::error::{Error, Result};
use crate::quiver::DimVector;
use crate::rep::{ext1_dim, Representation, SubrepWitness};

use super::brute::{for_each_subrep, rref_rows, SubrepRows};

/// Points of `Gr_e(Y)` per stratum `(f, g) = (dim N ∩ X, dim π(N))`.
pub type StratumCounts = BTreeMap<(DimVector, DimVector), u128>;

fn prime_of(m: &Representation) -> Result<u64> {
    m.field()
        .order()
        .ok_or_else(|| Error::FieldMismatch("brute force needs a prime field".into()))
}

/// Splits a subspace of `X_v ⊕ S_v` (rows) into canonical bases of `N ∩ X`
/// (in `X` coordinates) and `π(N)` (in `S` coordinates).
fn split_rows(rows: &[Vec<u64>], xd: usize, p: u64) -> (Vec<Vec<u64>>, Vec<Vec<u64>>) {
    if rows.is_empty() {
        return (vec![], vec![]);
    }
    // S coordinates first: rows pivoting inside them span π(N), the others
    // vanish on S and span N ∩ X
    let reordered: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r[xd..].iter().chain(&r[..xd]).copied().collect())
        .collect();
    let (red, pivots) = rref_rows(reordered, p);
    let sd = rows[0].len() - xd;
    let mut inter = Vec::new();
    let mut image = Vec::new();
    for (r, &c) in red.iter().zip(&pivots) {
        if c < sd {
            image.push(r[..sd].to_vec());
        } else {
            inter.push(r[sd..].to_vec());
        }
    }
    (inter, image)
}

/// Stratum sizes of `Gr_e(Y)` for the middle term of `ext`.
pub fn stratify(ext: &ExtensionData, e: &DimVector, budget: u128) -> Result<StratumCounts> {
    let p = prime_of(&ext.middle)?;
    let n = ext.middle.quiver().vertex_count();
    let mut out = StratumCounts::new();
    for_each_subrep(&ext.middle, e, budget, |rows| {
        let mut f = vec![0i64; n];
        let mut g = vec![0i64; n];
        for v in 0..n {
            let (inter, image) = split_rows(&rows[v], ext.sub.dim(v), p);
            f[v] = inter.len() as i64;
            g[v] = image.len() as i64;
        }
        *out.entry((DimVector(f), DimVector(g))).or_insert(0) += 1;
    })?;
    Ok(out)
}

type Canon = Vec<Vec<Vec<u64>>>;

fn all_subreps(m: &Representation, budget: u128) -> Result<Vec<Canon>> {
    let mut out = Vec::new();
    for e in m.dims().sub_vectors() {
        for_each_subrep(m, &e, budget, |rows: &SubrepRows| out.push(rows.clone()))?;
    }
    Ok(out)
}

fn witness_rows(w: &SubrepWitness, p: u64) -> Canon {
    w.subspaces
        .iter()
        .map(|b| {
            let rows: Vec<Vec<u64>> = (0..b.cols())
                .map(|j| {
                    (0..b.rows())
                        .map(|i| {
                            u64::try_from(b.get(i, j).to_bigint().expect("prime field"))
                                .expect("residue")
                        })
                        .collect()
                })
                .collect();
            if rows.is_empty() {
                rows
            } else {
                rref_rows(rows, p).0
            }
        })
        .collect()
}

fn contained(a: &Canon, b: &Canon, p: u64) -> bool {
    a.iter().zip(b).all(|(ra, rb)| {
        if ra.is_empty() {
            return true;
        }
        let joined: Vec<Vec<u64>> = rb.iter().chain(ra).cloned().collect();
        rref_rows(joined, p).0.len() == rb.len()
    })
}

/// Checks that the pairs `(N ∩ X, π(N))` over all subrepresentations `N`
/// of the middle term are exactly the pairs `(N', N'')` with `N' ⊄ X_S` or
/// `N'' ⊉ S^X`.
pub fn image_criterion_holds(
    ext: &ExtensionData,
    x_s: &SubrepWitness,
    s_x: &SubrepWitness,
    budget: u128,
) -> Result<bool> {
    let p = prime_of(&ext.middle)?;
    let n = ext.middle.quiver().vertex_count();
    let mut realized: BTreeSet<(Canon, Canon)> = BTreeSet::new();
    for rows in all_subreps(&ext.middle, budget)? {
        let mut inter = Vec::with_capacity(n);
        let mut image = Vec::with_capacity(n);
        for (v, r) in rows.iter().enumerate() {
            let (i, m) = split_rows(r, ext.sub.dim(v), p);
            inter.push(i);
            image.push(m);
        }
        realized.insert((inter, image));
    }
    let xs = witness_rows(x_s, p);
    let sx = witness_rows(s_x, p);
    let subs_x = all_subreps(&ext.sub, budget)?;
    let subs_s = all_subreps(&ext.quotient, budget)?;
    let mut predicted = BTreeSet::new();
    for a in &subs_x {
        for b in &subs_s {
            if !(contained(a, &xs, p) && contained(&sx, b, p)) {
                predicted.insert((a.clone(), b.clone()));
            }
        }
    }
    Ok(realized == predicted)
}

/// `X_S` and `S^X` found by search: the largest `N ⊆ X` with
/// `dim Ext¹(S, X/N) = 1` and the smallest `N ⊆ S` with `dim Ext¹(N, X) = 1`.
/// Fails if either is not unique.
pub fn reflections_by_search(
    x: &Representation,
    s: &Representation,
    budget: u128,
) -> Result<(SubrepWitness, SubrepWitness)> {
    let p = prime_of(x)?;
    let to_witness = |m: &Representation, rows: &Canon| super::brute::rows_to_witness(m, rows);
    let mut keep_x = Vec::new();
    for rows in all_subreps(x, budget)? {
        let (quot, _) = x.quotient(&to_witness(x, &rows))?;
        if ext1_dim(s, &quot)? == 1 {
            keep_x.push(rows);
        }
    }
    let mut keep_s = Vec::new();
    for rows in all_subreps(s, budget)? {
        let (sub, _) = s.sub(&to_witness(s, &rows))?;
        if ext1_dim(&sub, x)? == 1 {
            keep_s.push(rows);
        }
    }
    let total = |c: &Canon| c.iter().map(Vec::len).sum::<usize>();
    let largest = keep_x
        .iter()
        .max_by_key(|c| total(c))
        .ok_or_else(|| Error::PreconditionFailed("Ext¹(S, X) = 0".into()))?;
    let smallest = keep_s
        .iter()
        .min_by_key(|c| total(c))
        .ok_or_else(|| Error::PreconditionFailed("Ext¹(S, X) = 0".into()))?;
    if !keep_x.iter().all(|c| contained(c, largest, p))
        || !keep_s.iter().all(|c| contained(smallest, c, p))
    {
        return Err(Error::PreconditionFailed(
            "extremal subrepresentation is not unique".into(),
        ));
    }
    Ok((to_witness(x, largest), to_witness(s, smallest)))
}
