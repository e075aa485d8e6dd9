//! Classification of quivers by the shape of their underlying graph.
//!
//! A connected quiver is Dynkin, affine or wild according to the graph
//! underlying it; the affine types carry their minimal positive imaginary
//! root `δ`. Definiteness of the Euler form is checked as a consistency
//! assertion after the shape has been recognised.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quiver::{DimVector, Quiver};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DynkinType {
    A(usize),
    D(usize),
    E6,
    E7,
    E8,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AffineType {
    /// `Ã_n` on `n + 1` vertices (`n = 1` is the Kronecker quiver).
    A(usize),
    /// `D̃_n` on `n + 1` vertices.
    D(usize),
    E6,
    E7,
    E8,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum QuiverClass {
    Dynkin {
        r#type: DynkinType,
    },
    Affine {
        r#type: AffineType,
        delta: DimVector,
    },
    Wild,
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynkinType::A(n) => write!(f, "A{n}"),
            DynkinType::D(n) => write!(f, "D{n}"),
            DynkinType::E6 => write!(f, "E6"),
            DynkinType::E7 => write!(f, "E7"),
            DynkinType::E8 => write!(f, "E8"),
        }
    }
}

impl fmt::Display for AffineType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AffineType::A(n) => write!(f, "Ã{n}"),
            AffineType::D(n) => write!(f, "D̃{n}"),
            AffineType::E6 => write!(f, "Ẽ6"),
            AffineType::E7 => write!(f, "Ẽ7"),
            AffineType::E8 => write!(f, "Ẽ8"),
        }
    }
}

impl fmt::Display for QuiverClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuiverClass::Dynkin { r#type } => write!(f, "Dynkin {type}"),
            QuiverClass::Affine { r#type, delta } => write!(f, "Affine {type}, delta={delta}"),
            QuiverClass::Wild => write!(f, "Wild"),
        }
    }
}

impl QuiverClass {
    pub fn is_dynkin(&self) -> bool {
        matches!(self, QuiverClass::Dynkin { .. })
    }

    pub fn is_affine(&self) -> bool {
        matches!(self, QuiverClass::Affine { .. })
    }

    pub fn delta(&self) -> Option<&DimVector> {
        match self {
            QuiverClass::Affine { delta, .. } => Some(delta),
            _ => None,
        }
    }
}

/// Simple undirected graph view: adjacency lists with edge multiplicities.
struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    max_multiplicity: usize,
    edges: usize,
}

impl Graph {
    fn of(q: &Quiver) -> Graph {
        let n = q.vertex_count();
        let mut adj = vec![vec![]; n];
        let mut max_multiplicity = 0;
        let mut edges = 0;
        for i in 0..n {
            for j in i + 1..n {
                let m = q.arrow_count(i, j) + q.arrow_count(j, i);
                if m > 0 {
                    adj[i].push(j);
                    adj[j].push(i);
                    edges += 1;
                    max_multiplicity = max_multiplicity.max(m);
                }
            }
        }
        Graph {
            n,
            adj,
            max_multiplicity,
            edges,
        }
    }

    fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Walks from `center` through `first`, following the unique continuation
    /// while vertices have degree 2; returns the visited vertices.
    fn arm(&self, center: usize, first: usize) -> Vec<usize> {
        let mut arm = vec![first];
        let (mut prev, mut cur) = (center, first);
        while self.degree(cur) == 2 {
            let next = *self.adj[cur].iter().find(|&&w| w != prev).unwrap();
            arm.push(next);
            prev = cur;
            cur = next;
        }
        arm
    }
}

fn affine(ty: AffineType, delta: Vec<i64>) -> QuiverClass {
    QuiverClass::Affine {
        r#type: ty,
        delta: DimVector(delta),
    }
}

fn classify_shape(q: &Quiver) -> QuiverClass {
    let g = Graph::of(q);
    let n = g.n;
    if n == 1 {
        return QuiverClass::Dynkin {
            r#type: DynkinType::A(1),
        };
    }
    if g.max_multiplicity >= 3 {
        return QuiverClass::Wild;
    }
    if g.max_multiplicity == 2 {
        return if n == 2 {
            affine(AffineType::A(1), vec![1, 1])
        } else {
            QuiverClass::Wild
        };
    }
    if g.edges == n {
        return if (0..n).all(|v| g.degree(v) == 2) {
            affine(AffineType::A(n - 1), vec![1; n])
        } else {
            QuiverClass::Wild
        };
    }
    if g.edges > n {
        return QuiverClass::Wild;
    }

    // tree
    let branch: Vec<usize> = (0..n).filter(|&v| g.degree(v) >= 3).collect();
    if branch.iter().any(|&v| g.degree(v) >= 5) {
        return QuiverClass::Wild;
    }
    if let Some(&c) = branch.iter().find(|&&v| g.degree(v) == 4) {
        if n == 5 {
            let mut delta = vec![1; 5];
            delta[c] = 2;
            return affine(AffineType::D(4), delta);
        }
        return QuiverClass::Wild;
    }
    match branch.len() {
        0 => QuiverClass::Dynkin {
            r#type: DynkinType::A(n),
        },
        1 => {
            let c = branch[0];
            let mut arms: Vec<Vec<usize>> = g.adj[c].iter().map(|&w| g.arm(c, w)).collect();
            arms.sort_by_key(|a| a.len());
            let lens: Vec<usize> = arms.iter().map(|a| a.len()).collect();
            let star = |center: i64, values: [&[i64]; 3], ty: AffineType| {
                let mut delta = vec![0; n];
                delta[c] = center;
                for (arm, vals) in arms.iter().zip(values) {
                    for (&v, &x) in arm.iter().zip(vals) {
                        delta[v] = x;
                    }
                }
                affine(ty, delta)
            };
            match lens.as_slice() {
                [1, 1, k] => QuiverClass::Dynkin {
                    r#type: DynkinType::D(k + 3),
                },
                [1, 2, 2] => QuiverClass::Dynkin {
                    r#type: DynkinType::E6,
                },
                [1, 2, 3] => QuiverClass::Dynkin {
                    r#type: DynkinType::E7,
                },
                [1, 2, 4] => QuiverClass::Dynkin {
                    r#type: DynkinType::E8,
                },
                [2, 2, 2] => star(3, [&[2, 1], &[2, 1], &[2, 1]], AffineType::E6),
                [1, 3, 3] => star(4, [&[2], &[3, 2, 1], &[3, 2, 1]], AffineType::E7),
                [1, 2, 5] => star(6, [&[3], &[4, 2], &[5, 4, 3, 2, 1]], AffineType::E8),
                _ => QuiverClass::Wild,
            }
        }
        2 => {
            // D̃: both branch vertices carry two leaves.
            let leaves_ok = branch
                .iter()
                .all(|&b| g.adj[b].iter().filter(|&&w| g.degree(w) == 1).count() == 2);
            if !leaves_ok {
                return QuiverClass::Wild;
            }
            let delta = (0..n)
                .map(|v| if g.degree(v) == 1 { 1 } else { 2 })
                .collect();
            affine(AffineType::D(n - 1), delta)
        }
        _ => QuiverClass::Wild,
    }
}

/// Classifies `q` and asserts the corresponding definiteness property of the
/// Euler form on the returned data.
pub fn classify(q: &Quiver) -> QuiverClass {
    let class = classify_shape(q);
    if let QuiverClass::Affine { delta, .. } = &class {
        let h = q.euler_matrix();
        let ht = h.transpose();
        let sym: Vec<i64> = h
            .apply(delta)
            .0
            .iter()
            .zip(&ht.apply(delta).0)
            .map(|(a, b)| a + b)
            .collect();
        assert!(sym.iter().all(|&v| v == 0), "delta not in the radical");
        assert!(delta.0.contains(&1), "delta not minimal");
    }
    class
}

/// Defect `⟨δ, x⟩` on an affine quiver.
pub fn defect(q: &Quiver, x: &DimVector) -> Result<i64> {
    match classify(q) {
        QuiverClass::Affine { delta, .. } => q.euler_form(&delta, x),
        _ => Err(Error::NotAffine),
    }
}

/// Positive roots `x ≥ 0`, `x ≠ 0`, `q_Q(x) = 1` with entries at most
/// `max_entry`, in lexicographic order.
pub fn positive_roots(q: &Quiver, max_entry: i64) -> Vec<DimVector> {
    let bound = DimVector(vec![max_entry; q.vertex_count()]);
    bound
        .sub_vectors()
        .into_iter()
        .filter(|x| !x.is_zero() && q.quadratic_form(x).unwrap() == 1)
        .collect()
}

/// Renders a vector along the diagram of a recognised type: star shapes as
/// `longest arm (leaf first) - center - middle arm ; short arm at branch`,
/// anything else flat.
pub fn diagram(q: &Quiver, x: &DimVector) -> String {
    let g = Graph::of(q);
    let branch: Vec<usize> = (0..g.n).filter(|&v| g.degree(v) == 3).collect();
    if branch.len() == 1 && g.edges + 1 == g.n && g.max_multiplicity == 1 {
        let c = branch[0];
        let mut arms: Vec<Vec<usize>> = g.adj[c].iter().map(|&w| g.arm(c, w)).collect();
        arms.sort_by_key(|a| std::cmp::Reverse(a.len()));
        let mut line: Vec<String> = arms[0].iter().rev().map(|&v| x.0[v].to_string()).collect();
        line.push(x.0[c].to_string());
        line.extend(arms[1].iter().map(|&v| x.0[v].to_string()));
        let short: Vec<String> = arms[2].iter().map(|&v| x.0[v].to_string()).collect();
        return format!("({}; {} at branch)", line.join(","), short.join(","));
    }
    x.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        let a2 = Quiver::from_edges(2, &[(1, 2)]).unwrap();
        assert_eq!(classify(&a2).to_string(), "Dynkin A2");
        let k = Quiver::from_edges(2, &[(1, 2), (1, 2)]).unwrap();
        assert_eq!(classify(&k).to_string(), "Affine Ã1, delta=(1,1)");
        let k3 = Quiver::from_edges(2, &[(1, 2), (1, 2), (1, 2)]).unwrap();
        assert_eq!(classify(&k3), QuiverClass::Wild);
        assert!(matches!(
            defect(&a2, &DimVector(vec![1, 0])),
            Err(Error::NotAffine)
        ));
        assert_eq!(defect(&k, &DimVector(vec![1, 2])).unwrap(), -1);
        assert_eq!(defect(&k, &DimVector(vec![2, 1])).unwrap(), 1);
    }

    #[test]
    fn dynkin_root_counts() {
        let d4 = Quiver::from_edges(4, &[(2, 1), (3, 1), (4, 1)]).unwrap();
        assert_eq!(
            classify(&d4),
            QuiverClass::Dynkin {
                r#type: DynkinType::D(4)
            }
        );
        assert_eq!(positive_roots(&d4, 2).len(), 12);
        let a3 = Quiver::from_edges(3, &[(1, 2), (2, 3)]).unwrap();
        assert_eq!(positive_roots(&a3, 1).len(), 6);
    }
}
