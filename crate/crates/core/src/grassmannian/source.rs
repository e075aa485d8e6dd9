//! Field-independent descriptions of modules.
//!
//! A polynomial count only makes sense for a family of modules, one over
//! every finite field. A [`ModuleSpec`] names such a family: an integral
//! form, an Auslander-Reiten coordinate, a tube module, a direct sum, a
//! translate, or one of the modules derived from a pair `(X, S)` with
//! `dim Ext¹(S, X) = 1`.
//! [`ModuleSource::realize`] rebuilds the member over any field with the
//! same deterministic construction.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::ar::{
    coordinate_module, generating_extension, ringel_reflections, tau_power, tube_chain,
    ArCoordinate, TubeChain,
};
use crate::error::{Error, Result};
use crate::field::ExactField;
use crate::quiver::Quiver;
use crate::rep::Representation;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ModuleSpec {
    /// Integer matrices in arrow order, read in each field.
    Integral {
        dims: Vec<i64>,
        maps: Vec<Vec<Vec<i64>>>,
    },
    Coordinate {
        coordinate: ArCoordinate,
    },
    /// The uniserial module of the given quasi-length over a quasi-simple
    /// (zero for length 0).
    Tube {
        quasi_simple: Box<ModuleSpec>,
        length: usize,
    },
    Sum {
        parts: Vec<ModuleSpec>,
    },
    /// The middle term of the generating extension of `quotient` by `sub`.
    GeneratingMiddle {
        sub: Box<ModuleSpec>,
        quotient: Box<ModuleSpec>,
    },
    /// `X_S ⊕ S/S^X` for `X = sub`, `S = quotient`.
    ReflectionSum {
        sub: Box<ModuleSpec>,
        quotient: Box<ModuleSpec>,
    },
    /// `τ^k` of a module for `k > 0`, `τ^{-k}` for `k < 0`.
    Translate {
        module: Box<ModuleSpec>,
        power: i64,
    },
}

/// Extra structure known about a realized module.
#[derive(Debug, Clone)]
pub enum Hint {
    None,
    /// The module is `modules[length]` of the chain.
    Tube {
        chain: Arc<TubeChain>,
        length: usize,
    },
}

#[derive(Debug, Clone)]
pub struct Realized {
    pub module: Representation,
    pub hint: Hint,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleSource {
    pub quiver: Arc<Quiver>,
    pub spec: ModuleSpec,
}

impl ModuleSpec {
    /// Integral form of a representation (symmetric residues over F_p).
    pub fn integral(m: &Representation) -> Result<Self> {
        Ok(ModuleSpec::Integral {
            dims: m.dims().0.clone(),
            maps: m.integer_maps()?,
        })
    }
}

impl ModuleSource {
    pub fn new(quiver: Arc<Quiver>, spec: ModuleSpec) -> Self {
        ModuleSource { quiver, spec }
    }

    pub fn from_module(m: &Representation) -> Result<Self> {
        Ok(ModuleSource {
            quiver: m.quiver().clone(),
            spec: ModuleSpec::integral(m)?,
        })
    }

    pub fn realize(&self, field: ExactField) -> Result<Realized> {
        realize(&self.quiver, &self.spec, field)
    }

    pub fn module(&self, field: ExactField) -> Result<Representation> {
        Ok(self.realize(field)?.module)
    }
}

fn plain(module: Representation) -> Realized {
    Realized {
        module,
        hint: Hint::None,
    }
}

fn realize(q: &Arc<Quiver>, spec: &ModuleSpec, field: ExactField) -> Result<Realized> {
    match spec {
        ModuleSpec::Integral { dims, maps } => Ok(plain(Representation::from_i64(
            q.clone(),
            field,
            dims.clone(),
            maps,
        )?)),
        ModuleSpec::Coordinate { coordinate } => {
            Ok(plain(coordinate_module(q, field, coordinate)?))
        }
        ModuleSpec::Tube {
            quasi_simple,
            length,
        } => {
            let s = realize(q, quasi_simple, field)?.module;
            if *length == 0 {
                return Ok(plain(Representation::zero(q.clone(), field)));
            }
            let chain = tube_chain(&s, *length)?;
            Ok(Realized {
                module: chain.modules[*length].clone(),
                hint: Hint::Tube {
                    chain: Arc::new(chain),
                    length: *length,
                },
            })
        }
        ModuleSpec::Sum { parts } => {
            if parts.is_empty() {
                return Ok(plain(Representation::zero(q.clone(), field)));
            }
            let mods = parts
                .iter()
                .map(|p| Ok(realize(q, p, field)?.module))
                .collect::<Result<Vec<_>>>()?;
            Ok(plain(Representation::direct_sum_all(&mods)?))
        }
        ModuleSpec::GeneratingMiddle { sub, quotient } => {
            let x = realize(q, sub, field)?.module;
            let s = realize(q, quotient, field)?.module;
            let e = generating_extension(&s, &x)?;
            if e.cocycle.iter().all(|z| z.is_zero()) {
                return Err(Error::PreconditionFailed("Ext¹(S, X) = 0".into()));
            }
            Ok(plain(e.middle))
        }
        ModuleSpec::Translate { module, power } => {
            let m = realize(q, module, field)?.module;
            Ok(plain(tau_power(&m, *power)?))
        }
        ModuleSpec::ReflectionSum { sub, quotient } => {
            let x = realize(q, sub, field)?.module;
            let s = realize(q, quotient, field)?.module;
            let r = ringel_reflections(&x, &s)?;
            Ok(plain(r.x_s_module.direct_sum(&r.s_mod_s_x)?))
        }
    }
}
