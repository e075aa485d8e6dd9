//! Subcommand implementations. Every command returns both a JSON value and
//! a text rendering.

use std::sync::Arc;

use serde_json::{json, Value};

use quivergrass::ar::{catalog, tau, tau_minus};
use quivergrass::classify::diagram;
use quivergrass::cluster::{cluster_character, verify_multiplication};
use quivergrass::grassmannian::{count_poly, count_result_json, count_subreps};
use quivergrass::rep::{ext1_dim, hom_dim};
use quivergrass::{
    classify, defect, CountOptions, Error, ModuleSource, Planner, Quiver, QuiverClass, Result,
};

use crate::input::{load_module, load_quiver, parse_dims, parse_primes};
use crate::{Cli, Command, Mode, Output};

pub fn run(cli: &Cli) -> Result<Output> {
    let quiver = cli.quiver.as_deref().map(load_quiver).transpose()?;
    let module = |arg: &str| load_module(arg, quiver.as_ref());
    match &cli.command {
        Command::Classify { file } => {
            let q = match (file, &quiver) {
                (Some(f), _) => load_quiver(f)?,
                (None, Some(q)) => q.clone(),
                (None, None) => {
                    return Err(Error::PreconditionFailed("classify needs a quiver".into()))
                }
            };
            Ok(run_classify(&q))
        }
        Command::Catalog => {
            let q = quiver
                .as_ref()
                .ok_or_else(|| Error::PreconditionFailed("catalog needs --quiver".into()))?;
            run_catalog(cli, q)
        }
        Command::Hom { m, n } => run_pairing(cli, "hom", &module(m)?, &module(n)?),
        Command::Ext { m, n } => run_pairing(cli, "ext", &module(m)?, &module(n)?),
        Command::Tau { m, inverse } => run_tau(cli, &module(m)?, *inverse),
        Command::Count { m, e, mode } => run_count(cli, &module(m)?, e, *mode),
        Command::Cluster { x, s } => run_cluster(cli, &module(x)?, &module(s)?),
        Command::Cc { m } => run_cc(cli, &module(m)?),
    }
}

fn options(cli: &Cli, check_primes: Vec<u64>) -> CountOptions {
    CountOptions {
        working_prime: cli.prime,
        seed: cli.seed,
        budget: cli.budget(),
        check_primes,
        allow_interpolation: true,
    }
}

fn same_quiver(a: &ModuleSource, b: &ModuleSource) -> Result<()> {
    if a.quiver != b.quiver {
        return Err(Error::QuiverMismatch);
    }
    Ok(())
}

fn run_classify(q: &Quiver) -> Output {
    let class = classify(q);
    let (text, json) = match &class {
        QuiverClass::Dynkin { r#type } => (
            class.to_string(),
            json!({"class": "dynkin", "type": r#type.to_string()}),
        ),
        QuiverClass::Affine { r#type, delta } => (
            format!("Affine {type}, delta={}", diagram(q, delta)),
            json!({"class": "affine", "type": r#type.to_string(), "delta": delta.0}),
        ),
        QuiverClass::Wild => (class.to_string(), json!({"class": "wild"})),
    };
    Output {
        json,
        text,
        verified: true,
    }
}

fn run_catalog(cli: &Cli, q: &Arc<Quiver>) -> Result<Output> {
    let affine = classify(q).is_affine();
    let mut entries = Vec::new();
    let mut lines = Vec::new();
    for c in catalog(q, cli.field()?, cli.bound)? {
        let dims = c.module.dims();
        let rigid = c.module.is_rigid();
        let defect = if affine { Some(defect(q, dims)?) } else { None };
        lines.push(format!(
            "{}  {}{}{}",
            c.coordinate,
            diagram(q, dims),
            if rigid { "  rigid" } else { "" },
            defect.map(|d| format!("  defect={d}")).unwrap_or_default()
        ));
        entries.push(json!({"coordinate": c.coordinate.to_string(), "dims": dims.0, "rigid": rigid, "defect": defect}));
    }
    Ok(Output {
        json: Value::Array(entries),
        text: lines.join("\n"),
        verified: true,
    })
}

fn run_pairing(cli: &Cli, what: &str, m: &ModuleSource, n: &ModuleSource) -> Result<Output> {
    same_quiver(m, n)?;
    let field = cli.field()?;
    let (a, b) = (m.module(field)?, n.module(field)?);
    let dim = if what == "hom" {
        hom_dim(&a, &b)?
    } else {
        ext1_dim(&a, &b)?
    };
    Ok(Output {
        json: json!({what: dim, "field": field}),
        text: dim.to_string(),
        verified: true,
    })
}

fn run_tau(cli: &Cli, m: &ModuleSource, inverse: bool) -> Result<Output> {
    let a = m.module(cli.field()?)?;
    let t = if inverse { tau_minus(&a)? } else { tau(&a)? };
    let module = serde_json::to_value(t.to_json_struct()?)?;
    let text = format!(
        "dims={}\n{}",
        diagram(t.quiver(), t.dims()),
        serde_json::to_string(&module)?
    );
    Ok(Output {
        json: module,
        text,
        verified: true,
    })
}

fn run_count(cli: &Cli, m: &ModuleSource, e: &str, mode: Mode) -> Result<Output> {
    let e = parse_dims(e, &m.quiver)?;
    let primes = parse_primes(&cli.primes)?;
    if mode == Mode::Brute {
        let mut counts = serde_json::Map::new();
        let mut parts = Vec::new();
        for &p in &primes {
            let c = count_subreps(
                &m.module(quivergrass::ExactField::prime(p)?)?,
                &e,
                cli.budget(),
            )?;
            counts.insert(p.to_string(), json!(c));
            parts.push(format!("q={p}: {c}"));
        }
        return Ok(Output {
            json: json!({"counts": counts, "e": e.0}),
            text: parts.join(", "),
            verified: true,
        });
    }
    let checks = if mode == Mode::Both { primes } else { vec![] };
    let r = count_poly(m, &e, &options(cli, checks))?;
    let json = count_result_json(m, &e, &r, quivergrass::ExactField::prime(cli.prime)?)?;
    let verified = r.all_checks_pass();
    let text = if mode == Mode::Poly {
        r.polynomial.to_string()
    } else if verified {
        let ps: Vec<String> = r.checks.keys().map(|p| p.to_string()).collect();
        format!("{}; verified at {}", r.polynomial, ps.join(","))
    } else {
        let bad: Vec<String> = r
            .checks
            .iter()
            .filter(|(_, c)| !c.ok)
            .map(|(p, c)| format!("q={p}: counted {}, predicted {}", c.count, c.predicted))
            .collect();
        format!("{}; MISMATCH {}", r.polynomial, bad.join("; "))
    };
    Ok(Output {
        json,
        text,
        verified,
    })
}

fn run_cluster(cli: &Cli, x: &ModuleSource, s: &ModuleSource) -> Result<Output> {
    same_quiver(x, s)?;
    let planner = Planner::new(cli.prime, cli.seed)?;
    let check = verify_multiplication(x, s, &planner, &options(cli, vec![]))?;
    let holds = check.holds();
    let json = json!({
        "f": check.f.0,
        "holds": holds,
        "lhs": check.lhs.to_json_value(),
        "rhs": check.rhs.to_json_value(),
        "s_x_dims": check.s_x_dims.0,
    });
    let text = if holds {
        "multiplication formula VERIFIED".to_string()
    } else {
        format!(
            "multiplication formula FAILED\nlhs = {}\nrhs = {}",
            check.lhs, check.rhs
        )
    };
    Ok(Output {
        json,
        text,
        verified: holds,
    })
}

fn run_cc(cli: &Cli, m: &ModuleSource) -> Result<Output> {
    let planner = Planner::new(cli.prime, cli.seed)?;
    let cc = cluster_character(m, &planner, &options(cli, vec![]))?;
    Ok(Output {
        json: cc.to_json_value(),
        text: cc.to_string(),
        verified: true,
    })
}
