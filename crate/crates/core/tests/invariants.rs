mod common;

use common::*;
use quivergrass::ar::{catalog, knit_preinjective, tau, ArCoordinate};
use quivergrass::cluster::{cluster_character, coindex, g_vector};
use quivergrass::grassmannian::{
    budget_from_env, count_poly, count_subreps, euler_characteristic, grassmannian_duality_check,
    interpolation_oracle, stratify, CountOptions, Hint, Planner,
};
use quivergrass::{
    DimVector, IntPolynomial, ModuleSource, ModuleSpec, ReductionPlan, Representation,
};

#[test]
fn counts_are_invariant_under_duality() {
    for (name, src) in counting_catalog() {
        let m = src.module(field(2)).unwrap();
        for e in m.dims().sub_vectors() {
            let (a, b) = grassmannian_duality_check(&m, &e, budget_from_env()).unwrap();
            assert_eq!(a, b, "{name} e={e}");
        }
    }
}

#[test]
fn coindex_is_minus_index_of_translate() {
    for (q, bound) in [(a3_linear(), None), (d4(), None), (kronecker(), Some(2))] {
        for c in catalog(&q, field(WORK), bound).unwrap() {
            let Ok(t) = tau(&c.module) else { continue };
            assert_eq!(
                coindex(&q, c.module.dims()),
                g_vector(&q, t.dims()).scale(-1),
                "{}",
                c.coordinate
            );
        }
    }
}

#[test]
fn index_is_additive_on_generating_extensions() {
    for pair in generating_pairs() {
        let f = field(WORK);
        let q = &pair.x.quiver;
        let (x, s, y) = (
            pair.x.module(f).unwrap(),
            pair.s.module(f).unwrap(),
            pair.middle.module(f).unwrap(),
        );
        assert_eq!(
            g_vector(q, y.dims()),
            &g_vector(q, x.dims()) + &g_vector(q, s.dims()),
            "{}",
            pair.name
        );
    }
}

#[test]
fn rigid_characters_have_nonnegative_coefficients() {
    let planner = Planner::new(WORK, 0).unwrap();
    let opts = CountOptions::default();
    for (name, src) in counting_catalog() {
        let cc = cluster_character(&src, &planner, &opts).unwrap();
        assert!(cc.terms().all(|(_, _, c)| c > 0), "{name}: {cc}");
    }
}

#[test]
fn kronecker_preinjective_polynomials_match_brute_force() {
    let q = kronecker();
    let opts = CountOptions {
        check_primes: vec![2, 3],
        allow_interpolation: false,
        ..Default::default()
    };
    for c in knit_preinjective(&q, field(WORK), Some(1)).unwrap() {
        let src = coordinate(&q, c.coordinate.clone());
        for e in c.module.dims().sub_vectors() {
            let r = count_poly(&src, &e, &opts).unwrap();
            assert!(
                r.all_checks_pass(),
                "{} e={e}: {} vs {:?}",
                c.coordinate,
                r.polynomial,
                r.checks
            );
        }
    }
}

#[test]
fn homogeneous_tube_module_counts_per_field() {
    let q = kronecker();
    let src = ModuleSource::new(
        q,
        ModuleSpec::Tube {
            quasi_simple: Box::new(homogeneous_quasi_simple()),
            length: 2,
        },
    );
    let e = dim(&[1, 1]);
    for p in [2u64, 3, 5] {
        let chain_module = src.realize(field(p)).unwrap();
        let Hint::Tube { chain, .. } = &chain_module.hint else {
            panic!("tube hint missing")
        };
        let ext = &chain.steps[0];
        let strata: u128 = stratify(ext, &e, budget_from_env()).unwrap().values().sum();
        assert_eq!(
            strata,
            count_subreps(&chain_module.module, &e, budget_from_env()).unwrap()
        );
    }
    let r = count_poly(
        &src,
        &e,
        &CountOptions {
            check_primes: vec![2, 3, 5],
            ..Default::default()
        },
    )
    .unwrap();
    assert!(r.all_checks_pass());
}

#[test]
fn interpolation_examples() {
    let budget = budget_from_env();
    let k = kronecker();
    let p1 = coordinate(&k, preproj(0, 1));
    let (poly, samples) = interpolation_oracle(&p1, &dim(&[0, 1]), 1, budget).unwrap();
    assert_eq!(poly, IntPolynomial::new(vec![1, 1]));
    assert_eq!(samples, vec![(2, 3), (3, 4), (5, 6)]);
    let point = quiver(1, &[]);
    let k3 = ModuleSource::new(
        point,
        ModuleSpec::Integral {
            dims: vec![3],
            maps: vec![],
        },
    );
    let (poly, _) = interpolation_oracle(&k3, &dim(&[1]), 2, budget).unwrap();
    assert_eq!(poly, IntPolynomial::new(vec![1, 1, 1]));
    let sincere = ModuleSource::new(
        a3_linear(),
        ModuleSpec::Integral {
            dims: vec![1, 1, 1],
            maps: vec![vec![vec![1]], vec![vec![1]]],
        },
    );
    let (poly, _) = interpolation_oracle(&sincere, &dim(&[0, 1, 1]), 0, budget).unwrap();
    assert_eq!(poly, IntPolynomial::one());
}

#[test]
fn euler_characteristic_examples() {
    let opts = CountOptions::default();
    let k = kronecker();
    let p1 = coordinate(&k, preproj(0, 1));
    assert_eq!(
        euler_characteristic(&count_poly(&p1, &dim(&[0, 1]), &opts).unwrap().polynomial),
        2
    );
    let a2_p1 = coordinate(&a2(), preproj(0, 1));
    let total: i128 = dim(&[1, 1])
        .sub_vectors()
        .iter()
        .map(|e| euler_characteristic(&count_poly(&a2_p1, e, &opts).unwrap().polynomial))
        .sum();
    assert_eq!(total, 3);
}

#[test]
fn plans_round_trip_through_json() {
    let k = kronecker();
    let src = coordinate(
        &k,
        ArCoordinate::Preinjective {
            k: 1,
            vertex: quivergrass::VertexId::Int(2),
        },
    );
    let r = count_poly(
        &src,
        &dim(&[2, 2]),
        &CountOptions {
            allow_interpolation: false,
            ..Default::default()
        },
    )
    .unwrap();
    assert!(r.plan.routes().contains(&"duality"));
    let json = serde_json::to_string(&r.plan).unwrap();
    let back: ReductionPlan = serde_json::from_str(&json).unwrap();
    assert_eq!(back, r.plan);
    assert_eq!(back.root_node().polynomial, r.polynomial);
}

#[test]
fn module_specs_round_trip_through_json() {
    let spec = ModuleSpec::ReflectionSum {
        sub: Box::new(ModuleSpec::Translate {
            module: Box::new(ModuleSpec::Coordinate {
                coordinate: preproj(1, 2),
            }),
            power: -1,
        }),
        quotient: Box::new(ModuleSpec::Tube {
            quasi_simple: Box::new(homogeneous_quasi_simple()),
            length: 3,
        }),
    };
    let json = serde_json::to_string(&spec).unwrap();
    assert_eq!(serde_json::from_str::<ModuleSpec>(&json).unwrap(), spec);
}

#[test]
fn counts_exceeding_dimension_are_zero() {
    let m: Representation = coordinate(&a2(), preproj(0, 1)).module(field(2)).unwrap();
    assert_eq!(
        count_subreps(&m, &DimVector(vec![2, 0]), budget_from_env()).unwrap(),
        0
    );
}
