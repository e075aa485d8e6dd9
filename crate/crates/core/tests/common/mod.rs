#![allow(dead_code)]

use std::sync::Arc;

use quivergrass::ar::{catalog, generating_extension, knit_preprojective, ArCoordinate};
use quivergrass::rep::ext1_dim;
use quivergrass::{
    DimVector, ExactField, ExactMatrix, ModuleSource, ModuleSpec, Quiver, Representation, VertexId,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const WORK: u64 = 101;

pub fn field(p: u64) -> ExactField {
    ExactField::prime(p).unwrap()
}

pub fn quiver(n: usize, edges: &[(i64, i64)]) -> Arc<Quiver> {
    Arc::new(Quiver::from_edges(n, edges).unwrap())
}

pub fn a2() -> Arc<Quiver> {
    quiver(2, &[(1, 2)])
}

pub fn a3_linear() -> Arc<Quiver> {
    quiver(3, &[(1, 2), (2, 3)])
}

pub fn a3_sink() -> Arc<Quiver> {
    quiver(3, &[(1, 2), (3, 2)])
}

/// `D4` with the central vertex `1` as its unique sink.
pub fn d4() -> Arc<Quiver> {
    quiver(4, &[(2, 1), (3, 1), (4, 1)])
}

pub fn kronecker() -> Arc<Quiver> {
    quiver(2, &[(1, 2), (1, 2)])
}

/// `Ã2` with arrows `1 → 2 → 3` and `1 → 3`.
pub fn a2_tilde() -> Arc<Quiver> {
    quiver(3, &[(1, 2), (2, 3), (1, 3)])
}

pub fn coordinate(q: &Arc<Quiver>, c: ArCoordinate) -> ModuleSource {
    ModuleSource::new(q.clone(), ModuleSpec::Coordinate { coordinate: c })
}

pub fn preproj(k: usize, v: i64) -> ArCoordinate {
    ArCoordinate::Preprojective {
        k,
        vertex: VertexId::Int(v),
    }
}

/// Catalog modules as field-independent sources, with a label.
pub fn catalog_sources(q: &Arc<Quiver>, bound: Option<usize>) -> Vec<(String, ModuleSource)> {
    catalog(q, field(WORK), bound)
        .unwrap()
        .into_iter()
        .map(|c| (c.coordinate.to_string(), coordinate(q, c.coordinate)))
        .collect()
}

/// Every indecomposable of A2, A3 (two orientations) and D4, plus the
/// Kronecker preprojectives up to dimension vector (3,4).
pub fn counting_catalog() -> Vec<(String, ModuleSource)> {
    let mut out = Vec::new();
    for (name, q) in [
        ("A2", a2()),
        ("A3", a3_linear()),
        ("A3'", a3_sink()),
        ("D4", d4()),
    ] {
        out.extend(
            catalog_sources(&q, None)
                .into_iter()
                .map(|(c, s)| (format!("{name} {c}"), s)),
        );
    }
    let k = kronecker();
    for c in knit_preprojective(&k, field(WORK), Some(1)).unwrap() {
        out.push((
            format!("Kronecker {}", c.coordinate),
            coordinate(&k, c.coordinate),
        ));
    }
    out
}

pub fn homogeneous_quasi_simple() -> ModuleSpec {
    ModuleSpec::Integral {
        dims: vec![1, 1],
        maps: vec![vec![vec![1]], vec![vec![1]]],
    }
}

/// A pair `(X, S)` with `dim Ext¹(S, X) = 1`. `middle` names the middle term
/// of the generating extension when a more structured description exists.
#[derive(Clone)]
pub struct GeneratingPair {
    pub name: String,
    pub x: ModuleSource,
    pub s: ModuleSource,
    pub middle: ModuleSource,
}

impl GeneratingPair {
    pub fn rest(&self) -> ModuleSource {
        ModuleSource::new(
            self.x.quiver.clone(),
            ModuleSpec::ReflectionSum {
                sub: Box::new(self.x.spec.clone()),
                quotient: Box::new(self.s.spec.clone()),
            },
        )
    }
}

fn middle_of(x: &ModuleSource, s: &ModuleSource) -> ModuleSource {
    ModuleSource::new(
        x.quiver.clone(),
        ModuleSpec::GeneratingMiddle {
            sub: Box::new(x.spec.clone()),
            quotient: Box::new(s.spec.clone()),
        },
    )
}

/// Catalog pairs with a one-dimensional `Ext¹(S, X)`.
pub fn catalog_pairs(name: &str, q: &Arc<Quiver>, bound: Option<usize>) -> Vec<GeneratingPair> {
    let f = field(WORK);
    let entries = catalog(q, f, bound).unwrap();
    let mut out = Vec::new();
    for x in &entries {
        for s in &entries {
            if ext1_dim(&s.module, &x.module).unwrap() == 1 {
                let xs = coordinate(q, x.coordinate.clone());
                let ss = coordinate(q, s.coordinate.clone());
                out.push(GeneratingPair {
                    name: format!("{name} X={} S={}", x.coordinate, s.coordinate),
                    middle: middle_of(&xs, &ss),
                    x: xs,
                    s: ss,
                });
            }
        }
    }
    out
}

/// `(R_{n-1}, τ^{-(n-1)} S)` with middle `R_n` in the tube of `qs`.
pub fn tube_pair(name: &str, q: &Arc<Quiver>, qs: ModuleSpec, n: usize) -> GeneratingPair {
    let src = |spec| ModuleSource::new(q.clone(), spec);
    let tube = |len| ModuleSpec::Tube {
        quasi_simple: Box::new(qs.clone()),
        length: len,
    };
    let top = if n == 1 {
        qs.clone()
    } else {
        ModuleSpec::Translate {
            module: Box::new(qs.clone()),
            power: -(n as i64 - 1),
        }
    };
    GeneratingPair {
        name: format!("{name} tube R_{}", n),
        x: src(tube(n - 1)),
        s: src(top),
        middle: src(tube(n)),
    }
}

/// The generating pairs used by the stratification and reflection checks.
pub fn generating_pairs() -> Vec<GeneratingPair> {
    let mut out = Vec::new();
    out.extend(catalog_pairs("A2", &a2(), None));
    out.extend(catalog_pairs("A3", &a3_linear(), None));
    out.extend(catalog_pairs("A3'", &a3_sink(), None));
    out.extend(catalog_pairs("D4", &d4(), None));
    let k = kronecker();
    out.extend(
        catalog_pairs("Kronecker", &k, Some(1))
            .into_iter()
            .filter(|p| p.middle.module(field(WORK)).is_ok()),
    );
    for n in [2, 3] {
        out.push(tube_pair("Kronecker", &k, homogeneous_quasi_simple(), n));
    }
    let s2 = ModuleSpec::Integral {
        dims: vec![0, 1, 0],
        maps: vec![vec![vec![]], vec![], vec![]],
    };
    for n in [2, 3] {
        out.push(tube_pair("Ã2", &a2_tilde(), s2.clone(), n));
    }
    out
}

/// Sanity check that the middle of a pair really is an extension of `S` by `X`.
pub fn middle_dims_add_up(pair: &GeneratingPair, f: ExactField) -> bool {
    let x = pair.x.module(f).unwrap();
    let s = pair.s.module(f).unwrap();
    let y = pair.middle.module(f).unwrap();
    let e = generating_extension(&s, &x).unwrap();
    y.dims() == e.middle.dims() && y.dims() == &(x.dims() + s.dims())
}

/// Random representation with dimensions up to `max_dim` at each vertex.
pub fn random_rep(
    q: &Arc<Quiver>,
    f: ExactField,
    max_dim: i64,
    rng: &mut ChaCha8Rng,
) -> Representation {
    let p = f.order().unwrap() as i64;
    let dims: Vec<i64> = (0..q.vertex_count())
        .map(|_| rng.gen_range(0..=max_dim))
        .collect();
    let maps: Vec<Vec<Vec<i64>>> = q
        .arrows()
        .iter()
        .map(|a| {
            let (r, c) = (dims[a.target], dims[a.source]);
            (0..r)
                .map(|_| (0..c).map(|_| rng.gen_range(0..p)).collect())
                .collect()
        })
        .collect();
    Representation::from_i64(q.clone(), f, dims, &maps).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn residues(m: &ExactMatrix, p: u64) -> Vec<Vec<u64>> {
    m.to_i64_rows()
        .unwrap()
        .into_iter()
        .map(|r| {
            r.into_iter()
                .map(|v| v.rem_euclid(p as i64) as u64)
                .collect()
        })
        .collect()
}

fn mat_mul(a: &[Vec<u64>], b: &[Vec<u64>], inner: usize, cols: usize, p: u64) -> Vec<Vec<u64>> {
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).map(|k| row[k] * b[k][j]).sum::<u64>() % p)
                .collect()
        })
        .collect()
}

/// `|Hom(M, N)|` over F_p by enumerating every family of linear maps.
pub fn brute_hom_count(m: &Representation, n: &Representation) -> u128 {
    let p = m.field().order().unwrap();
    let q = m.quiver();
    let nv = q.vertex_count();
    let shapes: Vec<(usize, usize)> = (0..nv).map(|v| (n.dim(v), m.dim(v))).collect();
    let len: usize = shapes.iter().map(|(r, c)| r * c).sum();
    let ms: Vec<Vec<Vec<u64>>> = m.maps().iter().map(|a| residues(a, p)).collect();
    let ns: Vec<Vec<Vec<u64>>> = n.maps().iter().map(|a| residues(a, p)).collect();
    let total = (p as u128).pow(len as u32);
    let mut count = 0;
    let mut digits = vec![0u64; len];
    for _ in 0..total {
        let mut at = 0;
        let comps: Vec<Vec<Vec<u64>>> = shapes
            .iter()
            .map(|&(r, c)| {
                let block = (0..r)
                    .map(|i| digits[at + i * c..at + i * c + c].to_vec())
                    .collect();
                at += r * c;
                block
            })
            .collect();
        let commutes = q.arrows().iter().enumerate().all(|(k, a)| {
            let (i, j) = (a.source, a.target);
            // f_j M_a = N_a f_i
            let lhs = mat_mul(&comps[j], &ms[k], m.dim(j), m.dim(i), p);
            let rhs = mat_mul(&ns[k], &comps[i], n.dim(i), m.dim(i), p);
            lhs == rhs
        });
        if commutes {
            count += 1;
        }
        for d in digits.iter_mut() {
            *d += 1;
            if *d < p {
                break;
            }
            *d = 0;
        }
    }
    count
}

pub fn log_p(mut n: u128, p: u64) -> Option<usize> {
    let mut k = 0;
    while n > 1 {
        if !n.is_multiple_of(p as u128) {
            return None;
        }
        n /= p as u128;
        k += 1;
    }
    (n == 1).then_some(k)
}

pub fn dim(v: &[i64]) -> DimVector {
    DimVector(v.to_vec())
}
