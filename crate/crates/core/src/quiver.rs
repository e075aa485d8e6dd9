//! Finite connected acyclic quivers, dimension vectors and the Euler form.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Sub};

use num_rational::Ratio;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Vertex identifier; integers sort before names, integers numerically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum VertexId {
    Int(i64),
    Name(String),
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexId::Int(i) => write!(f, "{i}"),
            VertexId::Name(s) => write!(f, "{s}"),
        }
    }
}

impl From<i64> for VertexId {
    fn from(v: i64) -> Self {
        VertexId::Int(v)
    }
}

impl From<&str> for VertexId {
    fn from(v: &str) -> Self {
        match v.parse::<i64>() {
            Ok(i) => VertexId::Int(i),
            Err(_) => VertexId::Name(v.to_string()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub id: String,
    /// Index of the source vertex in the canonical vertex order.
    pub source: usize,
    /// Index of the target vertex in the canonical vertex order.
    pub target: usize,
}

/// JSON shape of a quiver; field order gives sorted keys.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawQuiver {
    pub arrows: Vec<RawArrow>,
    pub vertices: Vec<VertexId>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawArrow {
    pub from: VertexId,
    pub id: String,
    pub to: VertexId,
}

/// A validated quiver. Vertices are kept in sorted order, arrows sorted by id;
/// every vector or matrix indexed by vertices uses that order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: Vec<VertexId>,
    arrows: Vec<Arrow>,
    topo: Vec<usize>,
}

impl Quiver {
    pub fn validate(raw: RawQuiver) -> Result<Self> {
        let mut vertices = raw.vertices;
        vertices.sort();
        if let Some(w) = vertices.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateId(w[0].to_string()));
        }
        let index = |v: &VertexId| {
            vertices
                .binary_search(v)
                .map_err(|_| Error::UnknownVertex(v.to_string()))
        };
        let mut arrows = Vec::with_capacity(raw.arrows.len());
        let mut ids = BTreeSet::new();
        for a in &raw.arrows {
            if !ids.insert(a.id.clone()) {
                return Err(Error::DuplicateId(a.id.clone()));
            }
            arrows.push(Arrow {
                id: a.id.clone(),
                source: index(&a.from)?,
                target: index(&a.to)?,
            });
        }
        arrows.sort_by(|a, b| a.id.cmp(&b.id));
        let n = vertices.len();
        if n == 0 {
            return Err(Error::Disconnected("<empty quiver>".into()));
        }

        // Kahn's algorithm, smallest available vertex first.
        let mut indeg = vec![0usize; n];
        for a in &arrows {
            indeg[a.target] += 1;
        }
        let mut ready: BTreeSet<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
        let mut topo = Vec::with_capacity(n);
        while let Some(&v) = ready.iter().next() {
            ready.remove(&v);
            topo.push(v);
            for a in arrows.iter().filter(|a| a.source == v) {
                indeg[a.target] -= 1;
                if indeg[a.target] == 0 {
                    ready.insert(a.target);
                }
            }
        }
        if topo.len() < n {
            let v = (0..n).find(|&i| indeg[i] > 0).unwrap();
            return Err(Error::CyclicQuiver(vertices[v].to_string()));
        }

        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut x = x;
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for a in &arrows {
            let (r1, r2) = (find(&mut parent, a.source), find(&mut parent, a.target));
            parent[r1] = r2;
        }
        let root = find(&mut parent, 0);
        if let Some(v) = (0..n).find(|&i| find(&mut parent, i) != root) {
            return Err(Error::Disconnected(vertices[v].to_string()));
        }
        Ok(Quiver {
            vertices,
            arrows,
            topo,
        })
    }

    /// Quiver on integer vertices `1..=n` with arrows `(from, to)` named
    /// `a1, a2, ...` in the given order (ids are zero-padded when there are
    /// ten or more arrows so that sorting keeps the order).
    pub fn from_edges(n: usize, edges: &[(i64, i64)]) -> Result<Self> {
        let width = edges.len().to_string().len();
        let raw = RawQuiver {
            vertices: (1..=n as i64).map(VertexId::Int).collect(),
            arrows: edges
                .iter()
                .enumerate()
                .map(|(k, &(s, t))| RawArrow {
                    id: format!("a{:0width$}", k + 1),
                    from: VertexId::Int(s),
                    to: VertexId::Int(t),
                })
                .collect(),
        };
        Self::validate(raw)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let raw: RawQuiver = serde_json::from_str(s)?;
        Self::validate(raw)
    }

    pub fn to_raw(&self) -> RawQuiver {
        RawQuiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| RawArrow {
                    id: a.id.clone(),
                    from: self.vertices[a.source].clone(),
                    to: self.vertices[a.target].clone(),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_raw()).expect("quiver serializes")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &VertexId {
        &self.vertices[i]
    }

    pub fn vertex_index(&self, v: &VertexId) -> Result<usize> {
        self.vertices
            .binary_search(v)
            .map_err(|_| Error::UnknownVertex(v.to_string()))
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow_index(&self, id: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.id == id)
    }

    /// Vertices in a topological order (every arrow goes forward).
    pub fn topological_order(&self) -> &[usize] {
        &self.topo
    }

    pub fn out_arrows(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].source == v)
    }

    pub fn in_arrows(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].target == v)
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.out_arrows(v).next().is_none()
    }

    pub fn is_source(&self, v: usize) -> bool {
        self.in_arrows(v).next().is_none()
    }

    /// Number of arrows `i -> j`.
    pub fn arrow_count(&self, i: usize, j: usize) -> usize {
        self.arrows
            .iter()
            .filter(|a| a.source == i && a.target == j)
            .count()
    }

    /// Same vertices, every arrow reversed (ids kept).
    pub fn opposite(&self) -> Quiver {
        let raw = RawQuiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| RawArrow {
                    id: a.id.clone(),
                    from: self.vertices[a.target].clone(),
                    to: self.vertices[a.source].clone(),
                })
                .collect(),
        };
        Quiver::validate(raw).expect("opposite of a valid quiver is valid")
    }

    /// `H[i][j] = δ_ij − #{arrows i→j}`.
    pub fn euler_matrix(&self) -> EulerMatrix {
        let n = self.vertex_count();
        let mut h = vec![vec![0i64; n]; n];
        for (i, row) in h.iter_mut().enumerate() {
            row[i] = 1;
        }
        for a in &self.arrows {
            h[a.source][a.target] -= 1;
        }
        EulerMatrix(h)
    }

    fn check(&self, x: &DimVector) -> Result<()> {
        if x.len() != self.vertex_count() {
            return Err(Error::IndexMismatch {
                expected: self.vertex_count(),
                got: x.len(),
            });
        }
        Ok(())
    }

    /// `⟨x,y⟩ = Σ x_i y_i − Σ_α x_{s(α)} y_{t(α)}`.
    pub fn euler_form(&self, x: &DimVector, y: &DimVector) -> Result<i64> {
        self.check(x)?;
        self.check(y)?;
        let diag: i64 = x.0.iter().zip(&y.0).map(|(a, b)| a * b).sum();
        let off: i64 = self
            .arrows
            .iter()
            .map(|a| x.0[a.source] * y.0[a.target])
            .sum();
        Ok(diag - off)
    }

    pub fn quadratic_form(&self, x: &DimVector) -> Result<i64> {
        self.euler_form(x, x)
    }

    pub fn symmetrized_form(&self, x: &DimVector, y: &DimVector) -> Result<Ratio<i64>> {
        Ok(Ratio::new(
            self.euler_form(x, y)? + self.euler_form(y, x)?,
            2,
        ))
    }

    /// Dimension vector given as a map from vertex ids.
    pub fn dim_from_map(&self, m: &BTreeMap<VertexId, i64>) -> Result<DimVector> {
        if m.len() != self.vertex_count() {
            return Err(Error::IndexMismatch {
                expected: self.vertex_count(),
                got: m.len(),
            });
        }
        let mut d = vec![0; self.vertex_count()];
        for (k, v) in m {
            d[self.vertex_index(k)?] = *v;
        }
        Ok(DimVector(d))
    }

    pub fn dim_to_map(&self, d: &DimVector) -> BTreeMap<VertexId, i64> {
        self.vertices
            .iter()
            .cloned()
            .zip(d.0.iter().copied())
            .collect()
    }
}

impl Serialize for Quiver {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_raw().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Quiver {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawQuiver::deserialize(d)?;
        Quiver::validate(raw).map_err(serde::de::Error::custom)
    }
}

/// Integer vector indexed by the canonical vertex order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DimVector(pub Vec<i64>);

impl DimVector {
    pub fn zero(n: usize) -> Self {
        DimVector(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        DimVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&v| v == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&v| v >= 0)
    }

    /// Componentwise `self ≤ other`.
    pub fn le(&self, other: &DimVector) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn scale(&self, k: i64) -> DimVector {
        DimVector(self.0.iter().map(|v| v * k).collect())
    }

    /// All vectors `0 ≤ e ≤ self`, last coordinate fastest.
    pub fn sub_vectors(&self) -> Vec<DimVector> {
        let mut out = vec![vec![]];
        for &d in &self.0 {
            let mut next = Vec::new();
            for prefix in &out {
                for v in 0..=d.max(0) {
                    let mut p = prefix.clone();
                    p.push(v);
                    next.push(p);
                }
            }
            out = next;
        }
        out.into_iter().map(DimVector).collect()
    }

    pub fn get(&self, i: usize) -> i64 {
        self.0[i]
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Add for &DimVector {
    type Output = DimVector;
    fn add(self, rhs: &DimVector) -> DimVector {
        assert_eq!(self.len(), rhs.len(), "dimension vector lengths");
        DimVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &DimVector {
    type Output = DimVector;
    fn sub(self, rhs: &DimVector) -> DimVector {
        assert_eq!(self.len(), rhs.len(), "dimension vector lengths");
        DimVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl From<Vec<i64>> for DimVector {
    fn from(v: Vec<i64>) -> Self {
        DimVector(v)
    }
}

/// Matrix of the Euler form in the vertex basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EulerMatrix(pub Vec<Vec<i64>>);

impl EulerMatrix {
    pub fn apply(&self, x: &DimVector) -> DimVector {
        DimVector(
            self.0
                .iter()
                .map(|row| row.iter().zip(&x.0).map(|(a, b)| a * b).sum())
                .collect(),
        )
    }

    pub fn transpose(&self) -> EulerMatrix {
        let n = self.0.len();
        EulerMatrix(
            (0..n)
                .map(|i| (0..n).map(|j| self.0[j][i]).collect())
                .collect(),
        )
    }

    /// `xᵗ H y`.
    pub fn pair(&self, x: &DimVector, y: &DimVector) -> i64 {
        x.0.iter().zip(&self.apply(y).0).map(|(a, b)| a * b).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn a2() -> Quiver {
        Quiver::from_edges(2, &[(1, 2)]).unwrap()
    }

    fn kronecker() -> Quiver {
        Quiver::from_edges(2, &[(1, 2), (1, 2)]).unwrap()
    }

    #[test]
    fn validation_errors() {
        assert!(matches!(
            Quiver::from_edges(1, &[(1, 1)]),
            Err(Error::CyclicQuiver(_))
        ));
        assert!(matches!(
            Quiver::from_edges(3, &[(1, 2)]),
            Err(Error::Disconnected(_))
        ));
        let raw = RawQuiver {
            vertices: vec![1.into(), 1.into()],
            arrows: vec![],
        };
        assert!(matches!(Quiver::validate(raw), Err(Error::DuplicateId(_))));
        assert!(matches!(
            Quiver::from_edges(2, &[(1, 3)]),
            Err(Error::UnknownVertex(_))
        ));
    }

    #[test]
    fn euler_form_examples() {
        let q = a2();
        assert_eq!(
            q.euler_form(&vec![1, 0].into(), &vec![0, 1].into())
                .unwrap(),
            -1
        );
        assert_eq!(
            q.euler_form(&vec![1, 1].into(), &vec![1, 1].into())
                .unwrap(),
            1
        );
        let k = kronecker();
        assert_eq!(
            k.euler_form(&vec![1, 1].into(), &vec![1, 2].into())
                .unwrap(),
            -1
        );
        assert_eq!(k.quadratic_form(&vec![1, 1].into()).unwrap(), 0);
        assert!(matches!(
            q.euler_form(&vec![1].into(), &vec![0, 1].into()),
            Err(Error::IndexMismatch { .. })
        ));
    }

    #[test]
    fn opposite_is_involution() {
        let q = a2();
        let op = q.opposite();
        assert_eq!(op.arrows()[0].source, 1);
        assert_eq!(op.opposite(), q);
    }

    #[test]
    fn json_round_trip_sorted_keys() {
        let q = kronecker();
        let s = q.to_json();
        assert!(s.starts_with("{\"arrows\":[{\"from\":1,\"id\":\"a1\",\"to\":2}"));
        assert_eq!(Quiver::from_json(&s).unwrap(), q);
    }

    proptest! {
        #[test]
        fn bilinear_and_opposite(x in prop::collection::vec(-5i64..6, 4),
                                 x2 in prop::collection::vec(-5i64..6, 4),
                                 y in prop::collection::vec(-5i64..6, 4)) {
            let q = Quiver::from_edges(4, &[(1, 2), (3, 2), (2, 4), (1, 4)]).unwrap();
            let (x, x2, y) = (DimVector(x), DimVector(x2), DimVector(y));
            let lhs = q.euler_form(&(&x + &x2), &y).unwrap();
            prop_assert_eq!(lhs, q.euler_form(&x, &y).unwrap() + q.euler_form(&x2, &y).unwrap());
            prop_assert_eq!(q.euler_form(&x, &y).unwrap(), q.opposite().euler_form(&y, &x).unwrap());
            prop_assert_eq!(q.euler_matrix().pair(&x, &y), q.euler_form(&x, &y).unwrap());
        }
    }
}
