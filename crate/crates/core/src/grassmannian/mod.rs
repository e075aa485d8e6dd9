//! Quiver Grassmannians: brute-force point counts and counting polynomials.

pub mod brute;
pub mod planner;
pub mod source;
pub mod stratify;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{first_primes, ExactField};
use crate::poly::{fit_polynomial, IntPolynomial};
use crate::quiver::DimVector;
use crate::rep::{ext1_dim, RepJson};

pub use brute::{
    budget_from_env, count_at_primes, count_subreps, for_each_subrep, grassmannian_duality_check,
    grassmannian_estimate, rows_to_witness, SubrepRows,
};
pub use planner::{
    is_split_epi, PlanNode, Planner, ReductionPlan, Step, Stratum, DEFAULT_WORKING_PRIME,
};
pub use source::{Hint, ModuleSource, ModuleSpec, Realized};
pub use stratify::{image_criterion_holds, reflections_by_search, stratify, StratumCounts};

#[derive(Debug, Clone)]
pub struct CountOptions {
    pub working_prime: u64,
    pub seed: u64,
    pub budget: u128,
    /// Primes at which the polynomial is compared with brute force.
    pub check_primes: Vec<u64>,
    /// Fall back to interpolation when no structural route applies.
    pub allow_interpolation: bool,
}

impl Default for CountOptions {
    fn default() -> Self {
        CountOptions {
            working_prime: DEFAULT_WORKING_PRIME,
            seed: 0,
            budget: budget_from_env(),
            check_primes: vec![],
            allow_interpolation: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BruteCheck {
    pub count: u128,
    pub predicted: i128,
    pub ok: bool,
}

#[derive(Debug, Clone)]
pub struct CountResult {
    pub polynomial: IntPolynomial,
    pub plan: ReductionPlan,
    /// Keyed by prime.
    pub checks: BTreeMap<u64, BruteCheck>,
}

impl CountResult {
    pub fn all_checks_pass(&self) -> bool {
        self.checks.values().all(|c| c.ok)
    }
}

#[derive(Serialize)]
struct Checks<'a> {
    bruteforce: BTreeMap<String, &'a BruteCheck>,
}

#[derive(Serialize)]
struct CountJson<'a> {
    checks: Checks<'a>,
    e: &'a DimVector,
    module: RepJson,
    plan: &'a ReductionPlan,
    polynomial: &'a IntPolynomial,
}

/// `{"checks":{"bruteforce":{p:{...}}},"e":[..],"module":{..},"plan":{..},"polynomial":[..]}`.
pub fn count_result_json(
    source: &ModuleSource,
    e: &DimVector,
    result: &CountResult,
    field: ExactField,
) -> Result<serde_json::Value> {
    let module = source.module(field)?.to_json_struct()?;
    Ok(serde_json::to_value(CountJson {
        checks: Checks {
            bruteforce: result
                .checks
                .iter()
                .map(|(p, c)| (p.to_string(), c))
                .collect(),
        },
        e,
        module,
        plan: &result.plan,
        polynomial: &result.polynomial,
    })?)
}

/// Degree bound for interpolation: `⟨e, d − e⟩` for rigid modules (the
/// dimension of the Grassmannian), `Σ e_i (d_i − e_i)` otherwise.
pub fn interpolation_degree_bound(
    source: &ModuleSource,
    e: &DimVector,
    field: ExactField,
) -> Result<usize> {
    let m = source.module(field)?;
    let d = m.dims();
    let rest = d - e;
    if ext1_dim(&m, &m)? == 0 {
        Ok(source.quiver.euler_form(e, &rest)?.max(0) as usize)
    } else {
        Ok(e.0
            .iter()
            .zip(&rest.0)
            .map(|(a, b)| (a * b).max(0) as usize)
            .sum())
    }
}

/// Counts by brute force at the first `bound + 2` primes and fits the
/// polynomial of degree at most `bound`; the extra sample is a check.
pub fn interpolation_oracle(
    source: &ModuleSource,
    e: &DimVector,
    bound: usize,
    budget: u128,
) -> Result<(IntPolynomial, Vec<(u64, u128)>)> {
    let primes = first_primes(bound + 2);
    let mut samples = Vec::with_capacity(primes.len());
    for &p in &primes {
        let m = source.module(ExactField::prime(p)?)?;
        samples.push((p, count_subreps(&m, e, budget)?));
    }
    let as_i128: Vec<(u64, i128)> = samples.iter().map(|&(p, c)| (p, c as i128)).collect();
    Ok((fit_polynomial(&as_i128, bound)?, samples))
}

impl Planner {
    /// Counting polynomial of a module family, falling back to interpolation
    /// when no structural route applies.
    pub fn count_source(
        &self,
        source: &ModuleSource,
        e: &DimVector,
        opts: &CountOptions,
    ) -> Result<(IntPolynomial, ReductionPlan)> {
        let realized = source.realize(self.field())?;
        match self.count(&realized.module, e, &realized.hint) {
            Ok((poly, id)) => Ok((poly, self.extract_plan(id))),
            Err(Error::PlanFailure(_)) if opts.allow_interpolation => {
                let bound = interpolation_degree_bound(source, e, self.field())?;
                let (poly, samples) = interpolation_oracle(source, e, bound, opts.budget)?;
                let node = PlanNode {
                    dims: realized.module.dims().clone(),
                    e: e.clone(),
                    polynomial: poly.clone(),
                    step: Step::Interpolation {
                        degree_bound: bound,
                        samples,
                    },
                };
                Ok((poly, ReductionPlan::single(node)))
            }
            Err(err) => Err(err),
        }
    }
}

/// `P_M(e)` with its plan and brute-force comparisons at `opts.check_primes`.
pub fn count_poly(
    source: &ModuleSource,
    e: &DimVector,
    opts: &CountOptions,
) -> Result<CountResult> {
    let planner = Planner::new(opts.working_prime, opts.seed)?;
    let (polynomial, plan) = planner.count_source(source, e, opts)?;
    let mut checks = BTreeMap::new();
    for &p in &opts.check_primes {
        let m = source.module(ExactField::prime(p)?)?;
        let count = count_subreps(&m, e, opts.budget)?;
        let predicted = polynomial.eval(p as i128);
        checks.insert(
            p,
            BruteCheck {
                count,
                predicted,
                ok: predicted == count as i128,
            },
        );
    }
    Ok(CountResult {
        polynomial,
        plan,
        checks,
    })
}

/// `χ(Gr_e(M)) = P_M(e)(1)`.
pub fn euler_characteristic(poly: &IntPolynomial) -> i128 {
    poly.eval(1)
}
